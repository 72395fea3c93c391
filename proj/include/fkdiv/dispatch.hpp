#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fkdiv/io.hpp"
#include "fkdiv/profile.hpp"
#include "fkdiv/solvers.hpp"

namespace fkdiv {

struct SolveRequest {
  Algorithm algorithm = Algorithm::Auto;
  /// Decimal string; enables the rounded run of the chosen solver.
  std::optional<std::string> epsilon;
  bool prune = false;
  /// Keep the full profile set in the report (exact solvers only).
  bool keep_profiles = false;
  std::uint64_t budget = 100'000'000;
  int threads = 1;
};

struct SolveReport {
  Profit value = 0;
  /// Class label per vertex, 0 = uncolored.
  std::vector<int> coloring;
  ProfitProfile profile;
  std::string algorithm;
  std::optional<std::string> epsilon;
  std::int64_t elapsed_millis = 0;
  std::optional<std::int64_t> profile_count;
  /// Lexicographically sorted, present when keep_profiles was set.
  std::optional<std::vector<ProfitProfile>> profiles;
};

/// Algorithm `auto` picks the first applicable of: chordal, cocomparability,
/// biconvex (orderings in the file), declared decomposition, min-fill
/// decomposition of modest width, brute force within budget. Throws
/// NoApplicableAlgorithm when none fits. The report is validated before it is
/// returned.
SolveReport solve_dispatch(const InstanceFile& file, const SolveRequest& request);

/// The solver `auto` would choose.
Algorithm choose_algorithm(const InstanceFile& file, std::uint64_t budget);

/// Feasibility, profile recomputation and value. Throws InvalidArgument.
void validate_report(const Instance& instance, const SolveReport& report);

/// JSON object with keys value, coloring, profile, algorithm, epsilon,
/// elapsedMillis, profileCount (in that order; absent optionals omitted).
std::string report_to_json(const SolveReport& report, bool include_elapsed = true);
/// Throws SyntaxError on malformed input.
SolveReport report_from_json(std::string_view text);

/// JSON array of profiles.
std::string profiles_to_json(const std::vector<ProfitProfile>& profiles);

}  // namespace fkdiv
