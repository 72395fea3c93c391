#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fkdiv/dispatch.hpp"
#include "fkdiv/error.hpp"
#include "fkdiv/generators.hpp"
#include "fkdiv/io.hpp"

namespace {

using fkdiv::ErrorCode;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ProfileSpaceOverflow:
      return 4;
    case ErrorCode::NoApplicableAlgorithm:
    case ErrorCode::NotCocomparability:
    case ErrorCode::NotComparability:
    case ErrorCode::NotChordal:
    case ErrorCode::NotConnected:
    case ErrorCode::OrderingNotBiconvex:
    case ErrorCode::StructureMismatch:
      return 3;
    default:
      return 2;
  }
}

fkdiv::Graph random_source(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<fkdiv::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (fkdiv::uniform_int(rng, 0, 1)) edges.emplace_back(u, v);
    }
  }
  return fkdiv::Graph(n, edges);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair k-division under conflicts: solver, generator and report checker"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Solve an instance file and print a JSON report");
  std::string input, algo = "auto", emit_profiles;
  std::optional<std::string> epsilon;
  bool no_prune = false;
  std::uint64_t budget = 100'000'000;
  int threads = 1;
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_option("--algo", algo, "auto|bruteforce|cocomp|biconvex|chordal|treewidth");
  solve->add_option("--epsilon", epsilon, "Approximation parameter as a decimal");
  solve->add_option("--emit-profiles", emit_profiles, "Write the full profile set to this file");
  solve->add_flag("--no-prune", no_prune, "Keep dominated profiles");
  solve->add_option("--budget", budget, "Brute-force node budget");
  solve->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  std::string family, out;
  int n = 0, k = 1, ell = 0;
  fkdiv::Profit max_profit = 10;
  std::uint64_t seed = 0;
  gen->add_option("--family", family, "edgeless|interval|chordal|biconvex|random|clique-reduction")->required();
  gen->add_option("--n", n, "Vertex count (source vertices for clique-reduction)")->required();
  gen->add_option("--k", k, "Agents")->required();
  gen->add_option("--max-profit", max_profit, "Largest profit");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out, "Output file")->required();
  gen->add_option("--ell", ell, "Clique size for clique-reduction");

  auto* verify = app.add_subcommand("verify", "Check a report against an instance");
  std::string report_path;
  verify->add_option("--input", input, "Instance file")->required();
  verify->add_option("--report", report_path, "JSON report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*solve) {
      const fkdiv::InstanceFile file = fkdiv::read_instance_file(input);
      fkdiv::SolveRequest request;
      request.algorithm = fkdiv::parse_algorithm(algo);
      request.epsilon = epsilon;
      request.keep_profiles = !emit_profiles.empty();
      request.prune = !no_prune && !request.keep_profiles;
      request.budget = budget;
      request.threads = threads;
      const fkdiv::SolveReport report = fkdiv::solve_dispatch(file, request);
      if (report.profiles) fkdiv::write_text_file(emit_profiles, fkdiv::profiles_to_json(*report.profiles));
      std::cout << fkdiv::report_to_json(report);
    } else if (*gen) {
      if (family == "clique-reduction") {
        auto reduction = fkdiv::gen_clique_reduction(random_source(n, seed), ell, k);
        fkdiv::write_text_file(out, "# threshold q = " + std::to_string(reduction.params.q) + "\n" +
                                        fkdiv::serialize_instance(reduction.file));
        std::cout << reduction.params.q << "\n";
      } else {
        fkdiv::write_text_file(out, fkdiv::serialize_instance(fkdiv::gen_family(family, n, k, max_profit, seed)));
      }
    } else if (*verify) {
      const fkdiv::InstanceFile file = fkdiv::read_instance_file(input);
      fkdiv::validate_report(file.instance, fkdiv::report_from_json(fkdiv::read_text_file(report_path)));
      std::cout << "ok\n";
    }
  } catch (const fkdiv::Error& e) {
    std::cerr << "fkdiv: " << e.what() << "\n";
    return exit_code(e.code());
  }
  return 0;
}
