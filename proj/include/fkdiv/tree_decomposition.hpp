#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fkdiv/graph.hpp"

namespace fkdiv {

/// Bags are kept sorted. Node ids are 0..node_count()-1.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> edges;
  std::optional<int> root;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;
};

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  /// Introduced or forgotten vertex; -1 for leaves and joins.
  Vertex vertex = -1;
  std::vector<Vertex> bag;
  std::vector<int> children;
};

/// Children always have smaller indices than their parent; the root is last.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = 0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  int width() const;
  TreeDecomposition as_tree_decomposition() const;
};

/// Perfect elimination ordering via maximum cardinality search (lowest id
/// first among ties), reversed. Throws NotChordal.
std::vector<Vertex> chordal_peo(const Graph& graph);

/// True iff every vertex's later neighbours form a clique.
bool is_perfect_elimination_order(const Graph& graph, const std::vector<Vertex>& order);

/// Bags are exactly the maximal cliques, sorted lexicographically, joined by a
/// maximum-weight spanning tree of the clique intersection graph.
TreeDecomposition clique_tree(const Graph& graph);

/// Rooted at td.root (node 0 if unset). Each tree edge becomes a chain of
/// forgets followed by introduces, several children are folded into binary
/// joins, leaves start from the empty bag and the root forgets everything.
/// Throws InvalidDecomposition when td is not a tree.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

/// Greedy minimum-fill elimination, lowest id among ties. One bag per vertex.
TreeDecomposition minfill_decomposition(const Graph& graph);

/// Checks the tree shape and the three decomposition axioms; returns the
/// width. Throws NotATree, MissingVertex, MissingEdge, DisconnectedOccurrence,
/// or InvalidDecomposition for out-of-range bag entries.
int verify_decomposition(const Graph& graph, const TreeDecomposition& td);

/// verify_decomposition plus the typed local rules of every nice node.
/// Throws InvalidDecomposition on a violated rule.
int verify_nice(const Graph& graph, const NiceTreeDecomposition& nice);

/// Union of the bags in the subtree of node t.
std::vector<Vertex> subtree_vertices(const NiceTreeDecomposition& nice, int t);

}  // namespace fkdiv
