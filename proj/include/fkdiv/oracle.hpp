#pragma once

#include <cstdint>

#include "fkdiv/graph.hpp"
#include "fkdiv/profile.hpp"

namespace fkdiv {

struct OracleOptions {
  /// Maximum number of search nodes before BudgetExceeded.
  std::uint64_t budget = 100'000'000;
  /// When false only the optimum is computed and subtrees that cannot beat
  /// the incumbent are skipped; `profiles` is left empty.
  bool enumerate_profiles = true;
};

struct OracleResult {
  Profit optimum = 0;
  /// Lexicographically smallest label vector among optimal colorings.
  PartialColoring witness;
  ProfileSet profiles;
  std::uint64_t nodes = 0;
};

/// Depth-first enumeration of every feasible assignment of the vertices to
/// 0..k, pruned as soon as a class stops being independent.
OracleResult brute_force(const Instance& instance, const OracleOptions& options = {});

/// Maximum-weight independent set for a single agent. Throws InvalidArgument
/// unless k = 1.
Profit max_weight_independent_set(const Instance& instance, std::uint64_t budget = 100'000'000);

}  // namespace fkdiv
