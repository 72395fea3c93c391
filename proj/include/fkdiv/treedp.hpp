#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "fkdiv/graph.hpp"
#include "fkdiv/profile.hpp"
#include "fkdiv/tree_decomposition.hpp"

namespace fkdiv {

/// labels[i] in 0..k is the class of bag[i]; bag is sorted.
struct BagColoring {
  std::vector<Vertex> bag;
  std::vector<int> labels;
};

/// Every labelling of the bag whose classes are independent, in lexicographic
/// order of the label vector.
std::vector<BagColoring> enumerate_bag_colorings(const Graph& graph, std::span<const Vertex> bag, int k);

/// Labels packed in base k+1, first bag vertex most significant.
std::uint64_t bag_coloring_key(std::span<const int> labels, int k);

/// (p_1(X_1 ∩ B), ..., p_k(X_k ∩ B)) for a bag coloring.
ProfitProfile bag_profile(const Instance& instance, const BagColoring& coloring);

/// Table of one node. A stored set holds profiles of colorings of G[V_t]
/// agreeing with the key coloring on the bag, *minus* the profit of the bag
/// vertices themselves; adding bag_profile() gives the full profiles. Keeping
/// bag profits out makes join a plain sum. Witnesses are full colorings of
/// G[V_t] including the bag.
struct NodeTable {
  int node = 0;
  std::vector<Vertex> bag;
  std::vector<BagColoring> colorings;
  /// bag_coloring_key of each coloring, ascending.
  std::vector<std::uint64_t> keys;
  std::vector<std::shared_ptr<const ProfileSet>> sets;

  /// Position of the coloring, or -1 when it has no entry.
  std::ptrdiff_t index_of(std::span<const int> labels, int k) const;
  /// nullptr when the coloring has no entry.
  const ProfileSet* find(std::span<const int> labels, int k) const;
};

struct TreeDpOptions {
  bool track_witnesses = true;
  /// Drops dominated profiles inside each table entry. Changes the profile set.
  bool prune = false;
  int threads = 1;
  /// Defaults to exact arithmetic for the instance.
  ArithmeticPtr arithmetic;
  /// Called once per nice node, children before parents.
  std::function<void(const NodeTable&)> observer;
};

enum class ForgetRule {
  /// Forgotten vertex may join only classes with no member in the bag.
  CliqueBags,
  /// Forgotten vertex may join any class it is independent of within the bag.
  General,
};

/// Runs the node recurrences over a nice decomposition of the instance graph.
ProfileSet solve_nice(const Instance& instance, const NiceTreeDecomposition& nice, ForgetRule rule,
                      const TreeDpOptions& options = {});

/// Clique tree, made nice, with the clique-bag forget rule. Throws NotChordal.
ProfileSet solve_chordal(const Instance& instance, const TreeDpOptions& options = {});

/// Any valid decomposition, general forget rule. Throws InvalidDecomposition.
ProfileSet solve_treewidth(const Instance& instance, const TreeDecomposition& td, const TreeDpOptions& options = {});

}  // namespace fkdiv
