#pragma once

#include <stdexcept>
#include <string>

namespace lpa {

enum class error_kind {
  invalid_input,         // malformed graph, ideal or literal
  unknown_vertex,
  zero_polynomial,
  field_mismatch,
  graph_mismatch,
  not_hereditary_saturated,
  not_admissible,
  not_graded,
  improper_ideal,
  empty_set,
  degree_too_large,
  too_large,
  unsupported_operands,
  unsatisfiable,
  not_a_lattice,
  internal
};

inline const char* to_string(error_kind k) {
  switch (k) {
    case error_kind::invalid_input: return "InvalidInput";
    case error_kind::unknown_vertex: return "UnknownVertex";
    case error_kind::zero_polynomial: return "ZeroPolynomial";
    case error_kind::field_mismatch: return "FieldMismatch";
    case error_kind::graph_mismatch: return "GraphMismatch";
    case error_kind::not_hereditary_saturated: return "NotHereditarySaturated";
    case error_kind::not_admissible: return "NotAdmissible";
    case error_kind::not_graded: return "NotGraded";
    case error_kind::improper_ideal: return "ImproperIdeal";
    case error_kind::empty_set: return "EmptySet";
    case error_kind::degree_too_large: return "DegreeTooLarge";
    case error_kind::too_large: return "TooLarge";
    case error_kind::unsupported_operands: return "UnsupportedOperands";
    case error_kind::unsatisfiable: return "Unsatisfiable";
    case error_kind::not_a_lattice: return "NotALattice";
    case error_kind::internal: return "InternalError";
  }
  return "Unknown";
}

/// All library failures are reported through this type; kind() drives the
/// CLI exit code.
class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

[[noreturn]] inline void fail(error_kind kind, const std::string& what) { throw error(kind, what); }

inline void ensure(bool cond, error_kind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace lpa
