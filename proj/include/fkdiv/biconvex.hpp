#pragma once

#include <span>
#include <vector>

#include "fkdiv/graph.hpp"

namespace fkdiv {

/// True iff (order_a, order_b) partition the vertices, every edge crosses the
/// bipartition, and every neighborhood is consecutive in the opposite order.
bool verify_biconvex_ordering(const Graph& graph, std::span<const Vertex> order_a,
                              std::span<const Vertex> order_b);

/// Boundary structure of a connected biconvex graph under a fixed ordering.
///
/// Positions are 0-based indices into side_a. Vertices before left_boundary
/// (the left set) have neighborhoods nested increasingly towards a_L; vertices
/// after right_boundary (the right set) are nested decreasingly away from a_R.
/// The middle graph is induced by side_a[left_boundary..right_boundary] plus
/// all of side_b and is cocomparability.
struct BiconvexStructure {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  int left_boundary = 0;
  int right_boundary = 0;
  bool mirrored = false;
  /// Vertex i of middle_graph is middle_vertices[i]; sorted by id.
  std::vector<Vertex> middle_vertices;
  Graph middle_graph;

  std::vector<Vertex> left_set() const;
  std::vector<Vertex> right_set() const;
};

/// Requires a connected graph and a biconvex ordering covering it. Mirrors
/// side A when a_L would come after a_R. Throws NotConnected, or
/// OrderingNotBiconvex when the ordering fails verification, the nesting
/// conditions, or the middle graph is not cocomparability.
BiconvexStructure biconvex_structure(const Graph& graph, std::span<const Vertex> order_a,
                                     std::span<const Vertex> order_b);

/// Checks the nesting conditions pairwise.
bool nesting_holds(const Graph& graph, const BiconvexStructure& s);

/// One structure per connected component, orderings restricted to each.
struct ComponentStructure {
  /// Component vertex i is vertices[i] of the full graph.
  std::vector<Vertex> vertices;
  BiconvexStructure structure;
};

std::vector<ComponentStructure> component_structures(const Graph& graph, std::span<const Vertex> order_a,
                                                     std::span<const Vertex> order_b);

}  // namespace fkdiv
