#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpa/classifier.hpp"
#include "lpa/io.hpp"

namespace lpa::cli {

using io::json;

/// Exit codes of the lpa tool.
enum exit_code : int { ok = 0, internal_error = 1, invalid = 2, unsupported = 3, too_large = 4 };

inline int exit_code_for(error_kind k) {
  switch (k) {
    case error_kind::unsupported_operands: return unsupported;
    case error_kind::too_large:
    case error_kind::degree_too_large: return too_large;
    case error_kind::internal:
    case error_kind::not_a_lattice: return internal_error;
    default: return invalid;
  }
}

struct options {
  std::string command;
  std::string graph_path;
  std::vector<std::string> ideal_paths;
  std::string field_text;
  std::string mode = "prime-power";
  std::string combine = "product";
  bool dot = false;
  bool pretty = false;
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  ensure(static_cast<bool>(in), error_kind::invalid_input, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(error_kind::invalid_input, "'" + path + "' is not valid JSON: " + e.what());
  }
}

class session {
 public:
  explicit session(const options& o) {
    ensure(!o.graph_path.empty(), error_kind::invalid_input, "--graph is required");
    graph_ = std::make_shared<const graph>(io::graph_from_json(read_json_file(o.graph_path)));
    if (!o.field_text.empty()) field_ = field::parse(o.field_text);
    for (const auto& p : o.ideal_paths) ideals_.push_back(io::ideal_from_json(read_json_file(p), graph_, field_));
  }

  const graph& g() const { return *graph_; }
  const ideal::graph_ptr& gp() const { return graph_; }
  field base() const { return field_ ? *field_ : ideals_.empty() ? field::rationals() : ideals_.front().base_field(); }
  const std::vector<ideal>& ideals() const { return ideals_; }

  const ideal& single_ideal() const {
    ensure(ideals_.size() == 1, error_kind::invalid_input, "exactly one --ideal is required");
    return ideals_.front();
  }

  const std::vector<ideal>& some_ideals() const {
    ensure(!ideals_.empty(), error_kind::invalid_input, "at least one --ideal is required");
    return ideals_;
  }

 private:
  ideal::graph_ptr graph_;
  std::optional<field> field_;
  std::vector<ideal> ideals_;
};

inline json sets_to_json(const graph& g, const std::vector<vertex_set>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(io::set_to_json(g, s));
  return out;
}

inline json cycles_to_json(const graph& g, const std::vector<cycle>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(io::cycle_to_json(g, c));
  return out;
}

inline json analyze(const graph& g) {
  json vertices = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    vertices.push_back({{"id", g.vertex_name(v)}, {"class", to_string(g.classify(v))}});
  const auto csp = strong_csp(g);
  const auto dd = check_downward_directed(g, g.all_vertices());
  return {{"graph", io::graph_to_json(g)},
          {"vertices", vertices},
          {"cycles", cycles_to_json(g, cycles(g))},
          {"cycles_without_exits", cycles_to_json(g, cycles_without_exits(g))},
          {"cycles_without_K", cycles_to_json(g, cycles_without_k(g))},
          {"condition_L", condition_l(g)},
          {"condition_K", condition_k(g)},
          {"downward_directed", dd.holds},
          {"strong_csp", {{"holds", csp.holds}, {"core", io::set_to_json(g, csp.core)}}},
          {"maximal_tails", sets_to_json(g, maximal_tails(g))}};
}

inline json classify_ideal(const ideal& i) {
  json out = {{"ideal", io::ideal_to_json(i)}, {"graded", i.is_graded()}, {"proper", i.is_proper()}};
  if (!i.is_proper()) {
    out["prime"] = nullptr;
    out["prime_power"] = nullptr;
    out["completely_irreducible"] = nullptr;
    return out;
  }
  const auto p = is_prime(i);
  out["prime"] = {{"holds", p.prime}, {"case", p.prime ? json(static_cast<int>(p.which)) : json(nullptr)}};
  if (const auto pp = prime_power_decompose(i))
    out["prime_power"] = {{"prime", io::ideal_to_json(pp->prime)}, {"exponent", pp->exponent}};
  else
    out["prime_power"] = nullptr;
  const auto ci = is_completely_irreducible(i);
  out["completely_irreducible"] = {{"holds", ci.holds},
                                   {"case", ci.holds ? json(static_cast<int>(ci.which)) : json(nullptr)}};
  return out;
}

inline combine_mode parse_combine(const std::string& s) {
  if (s == "product") return combine_mode::product;
  if (s == "intersection") return combine_mode::intersection;
  fail(error_kind::invalid_input, "--combine must be product or intersection");
}

/// Runs one command; JSON or DOT goes to out, diagnostics to err.
inline int execute(const options& o, std::ostream& out) {
  session s(o);
  const graph& g = s.g();
  auto emit = [&](const json& j) { out << (o.pretty ? j.dump(2) : j.dump()) << "\n"; };

  if (o.command == "export-dot" || (o.dot && (o.command == "analyze" || o.command == "ideal-classify"))) {
    if (s.ideals().empty()) {
      out << io::to_dot(g);
    } else {
      const auto q = quotient_graph(g, s.single_ideal().pair());
      out << io::to_dot(q.result, "quotient", q.vertex_primed);
    }
    return ok;
  }
  ensure(!o.dot, error_kind::invalid_input, "--dot applies to analyze, ideal-classify and export-dot");

  if (o.command == "analyze") {
    emit(analyze(g));
  } else if (o.command == "hsets") {
    json pairs = json::array();
    for (const auto& p : admissible_pairs(g)) pairs.push_back(io::pair_to_json(g, p));
    emit({{"hereditary_saturated", sets_to_json(g, enumerate_hereditary_saturated(g))}, {"admissible_pairs", pairs}});
  } else if (o.command == "tails") {
    emit({{"maximal_tails", sets_to_json(g, maximal_tails(g))}});
  } else if (o.command == "primes") {
    json primes = json::array();
    for (const auto& p : enumerate_graded_primes(s.gp(), s.base())) {
      auto j = io::ideal_to_json(p);
      j["case"] = static_cast<int>(is_prime(p).which);
      primes.push_back(j);
    }
    emit({{"graded_primes", primes}});
  } else if (o.command == "ideal-classify") {
    emit(classify_ideal(s.single_ideal()));
  } else if (o.command == "ideal-multiply") {
    emit({{"result", io::ideal_to_json(multiply(s.some_ideals()))}});
  } else if (o.command == "ideal-intersect") {
    emit({{"result", io::ideal_to_json(intersect(s.some_ideals()))}});
  } else if (o.command == "ideal-factor") {
    const auto& i = s.single_ideal();
    const auto combine = parse_combine(o.combine);
    std::optional<factorization_report> r;
    if (o.mode == "prime-power")
      r = factor_prime_powers(i);
    else if (o.mode == "comp-irred")
      r = factor_completely_irreducible(i);
    else
      fail(error_kind::invalid_input, "--mode must be prime-power or comp-irred");
    json j = {{"ideal", io::ideal_to_json(i)}, {"factorization", nullptr}};
    if (r) j["factorization"] = io::report_to_json(*r, combine);
    emit(j);
  } else if (o.command == "algebra-check") {
    json preds = json::array();
    bool all = true;
    for (const auto& v : classify_algebra(g)) {
      preds.push_back(io::verdict_to_json(g, v));
      all = all && v.verdict;
    }
    emit({{"predicates", preds}, {"all_hold", all}});
  } else {
    fail(error_kind::invalid_input, "unknown command '" + o.command + "'");
  }
  return ok;
}

inline const std::vector<std::pair<std::string, std::string>>& commands() {
  static const std::vector<std::pair<std::string, std::string>> list = {
      {"analyze", "vertex classes, cycles, conditions (K) and (L), tails"},
      {"hsets", "hereditary saturated sets and admissible pairs"},
      {"tails", "maximal tails"},
      {"primes", "graded prime ideals"},
      {"ideal-classify", "canonical form, primality, prime powers, complete irreducibility"},
      {"ideal-multiply", "product of graded and prime-power ideals"},
      {"ideal-intersect", "intersection of ideals"},
      {"ideal-factor", "factorization into powers of distinct primes"},
      {"algebra-check", "whole-algebra predicates with witnesses"},
      {"export-dot", "DOT rendering of the graph or of a quotient"}};
  return list;
}

/// Entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ideal calculus for Leavitt path algebras of finite graphs", "lpa"};
  app.require_subcommand(1, 1);
  options o;
  for (const auto& [name, help] : commands()) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--graph", o.graph_path, "graph JSON file")->required();
    sub->add_option("--ideal", o.ideal_paths, "ideal JSON file (repeatable)");
    sub->add_option("--field", o.field_text, "Q or GF(p); overrides the ideal files");
    sub->add_flag("--dot", o.dot, "emit DOT instead of JSON");
    sub->add_flag("--pretty", o.pretty, "indent JSON output");
    if (name == "ideal-factor") {
      sub->add_option("--mode", o.mode, "prime-power or comp-irred");
      sub->add_option("--combine", o.combine, "recomposition shown in the report: product or intersection");
    }
    sub->callback([&o, name = name] { o.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "lpa: " << e.what() << "\n";
    return invalid;
  }

  try {
    return execute(o, out);
  } catch (const error& e) {
    err << "lpa: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "lpa: internal error: " << e.what() << "\n";
    return internal_error;
  }
}

}  // namespace lpa::cli
