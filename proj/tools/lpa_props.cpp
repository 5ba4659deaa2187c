// Seeded property runner. Every case derives its seed from --seed and the
// case index; failures are shrunk by vertex deletion and dumped as JSON.
// Checks that hit TooLarge or DegreeTooLarge are counted as skipped.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lpa/properties.hpp"

namespace {

using lpa::io::json;

struct property {
  const char* name;
  std::function<lpa::props::failure(const lpa::graph&, const lpa::oracle::generator_config&)> check;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded property checks for the lpa library", "lpa_props"};
  std::uint64_t seed = 1;
  std::size_t cases = 200;
  std::size_t max_vertices = 6;
  double density = 0.3;
  double omega = 0.1;
  std::string field_text = "GF(2)";
  int degree = 3;
  app.add_option("--seed", seed, "base seed");
  app.add_option("--cases", cases, "number of generated graphs");
  app.add_option("--max-vertices", max_vertices, "vertex bound for generated graphs")->check(CLI::Range(1, 16));
  app.add_option("--density", density, "edge probability per ordered vertex pair");
  app.add_option("--omega", omega, "probability that an edge has infinite multiplicity");
  app.add_option("--field", field_text, "field of the generated polynomials");
  app.add_option("--max-degree", degree, "degree bound for generated polynomials");
  CLI11_PARSE(app, argc, argv);

  const std::vector<property> properties = {
      {"oracle_agreement", [](const lpa::graph& g, const auto&) { return lpa::props::oracle_agreement(g); }},
      {"family_laws",
       [](const lpa::graph& g, const auto& cfg) {
         return lpa::props::family_laws(std::make_shared<const lpa::graph>(g), cfg);
       }},
      {"classifier_chain", [](const lpa::graph& g, const auto&) { return lpa::props::classifier_chain(g); }},
  };

  const auto start = std::chrono::steady_clock::now();
  std::size_t failures = 0;
  std::size_t skipped = 0;
  try {
    const auto base_field = lpa::field::parse(field_text);
    for (std::size_t i = 0; i < cases; ++i) {
      lpa::oracle::generator_config cfg;
      cfg.seed = lpa::oracle::splitmix64(seed + i).next();
      cfg.max_vertices = max_vertices;
      cfg.edge_density = density;
      cfg.omega_probability = omega;
      cfg.base = base_field;
      cfg.max_poly_degree = degree;
      const auto g = lpa::oracle::random_graph(cfg);
      for (const auto& p : properties) {
        auto run = [&](const lpa::graph& h) -> lpa::props::failure {
          try {
            return p.check(h, cfg);
          } catch (const lpa::error& e) {
            return std::string(e.what());
          }
        };
        lpa::props::failure f;
        try {
          f = p.check(g, cfg);
        } catch (const lpa::error& e) {
          if (e.kind() == lpa::error_kind::too_large || e.kind() == lpa::error_kind::degree_too_large) {
            ++skipped;
            continue;
          }
          f = std::string(e.what());
        }
        if (!f) continue;
        ++failures;
        const auto small = lpa::props::shrink(g, run);
        json dump = {{"property", p.name},
                     {"case", i},
                     {"seed", cfg.seed},
                     {"failure", *f},
                     {"graph", lpa::io::graph_to_json(g)},
                     {"shrunk_graph", lpa::io::graph_to_json(small)},
                     {"shrunk_failure", run(small).value_or("")}};
        std::cout << dump.dump() << "\n";
      }
    }
  } catch (const lpa::error& e) {
    std::cerr << "lpa_props: " << e.what() << "\n";
    return 2;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << cases << " cases, " << failures << " failures, " << skipped << " skipped over size limits, " << secs
            << " s\n";
  return failures == 0 ? 0 : 1;
}
