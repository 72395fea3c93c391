#pragma once

#include <span>
#include <vector>

#include "fkdiv/biconvex.hpp"
#include "fkdiv/graph.hpp"
#include "fkdiv/profile.hpp"

namespace fkdiv {

/// Boundary guess for each class, as 1-based positions in side A.
/// upper[j] is the last left-set vertex of class j, or 0 for none;
/// lower[j] is the first right-set vertex of class j, or s+1 for none.
struct Guess {
  std::vector<int> upper;
  std::vector<int> lower;

  friend bool operator==(const Guess&, const Guess&) = default;
};

/// All guesses in lexicographic order of (upper, lower), skipping those that
/// put one real vertex into two classes.
std::vector<Guess> enumerate_guesses(const BiconvexStructure& structure, int k);

struct BiconvexOptions {
  bool track_witnesses = true;
  bool prune = false;
  int threads = 1;
  /// Defaults to exact arithmetic for the instance.
  ArithmeticPtr arithmetic;
};

/// All profiles of a connected biconvex instance. For each guess the middle
/// graph is solved with the profits of class j zeroed on the neighbourhoods of
/// the guessed vertices, the guessed vertices are added, and the remaining
/// outer vertices are offered to the classes whose guessed vertex dominates
/// them. Throws NotConnected or StructureMismatch.
ProfileSet solve_biconvex_connected(const Instance& instance, const BiconvexStructure& structure,
                                    const BiconvexOptions& options = {});

/// Component-wise solve followed by a Minkowski merge.
ProfileSet solve_biconvex(const Instance& instance, std::span<const Vertex> order_a, std::span<const Vertex> order_b,
                          const BiconvexOptions& options = {});

/// Rewrites witnesses of a sub-instance onto the full vertex set.
ProfileSet lift_witnesses(const ProfileSet& set, std::span<const Vertex> sub_to_full, int full_n);

}  // namespace fkdiv
