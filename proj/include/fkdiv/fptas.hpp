#pragma once

#include <cstdint>

#include "fkdiv/profile.hpp"
#include "fkdiv/rounding.hpp"
#include "fkdiv/solvers.hpp"

namespace fkdiv {

struct FptasResult {
  /// True satisfaction of the returned witness.
  Profit value = 0;
  ProfitProfile profile;
  PartialColoring witness;
  RoundingGrid grid;
  /// Rounded profile set of the base run.
  ProfileSet rounded;
  /// Profile magnitudes read by the base run; zero for a profit-blind solver.
  std::uint64_t magnitude_reads = 0;
};

/// Builds the grid with UB_j = p_j(V), runs the base dynamic program with
/// every profit addition rounded down onto the grid, and returns the witness
/// with the best true satisfaction (ties: lexicographically largest true
/// profile). Pruning is never applied.
FptasResult solve_fptas(const InstanceFile& file, const Rational& epsilon, Algorithm base,
                        const ProfileRunOptions& options = {});

RoundingGrid grid_for(const Instance& instance, const Rational& epsilon);

}  // namespace fkdiv
