#pragma once

#include <span>
#include <vector>

#include "fkdiv/graph.hpp"

namespace fkdiv {

using Arc = std::pair<Vertex, Vertex>;

/// A transitive acyclic orientation of `base` plus a topological order of it.
class Orientation {
 public:
  /// Validates that `arcs` orient every base edge exactly once and that the
  /// relation is transitive. Throws NotComparability otherwise.
  static Orientation from_arcs(Graph base, std::vector<Arc> arcs);

  const Graph& base() const { return base_; }
  /// Sorted lexicographically.
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Topological order v_1..v_n (lowest id first among available vertices).
  const std::vector<Vertex>& order() const { return order_; }
  /// position()[v] is the index of v in order().
  const std::vector<int>& position() const { return position_; }

  bool has_arc(Vertex u, Vertex v) const { return matrix_[static_cast<std::size_t>(u) * base_.vertex_count() + v] != 0; }
  std::vector<Vertex> in_neighbors(Vertex v) const;

 private:
  Orientation() = default;

  Graph base_;
  std::vector<Arc> arcs_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<std::uint8_t> matrix_;
};

/// Transitive orientation by implication-class forcing. Each unforced class is
/// seeded from its lowest-id remaining edge, oriented low -> high id.
/// Throws NotComparability when no transitive orientation exists.
Orientation transitive_orientation(const Graph& graph);

/// Kahn elimination with lowest-id tie-break. Throws CycleDetected.
std::vector<Vertex> topological_sort(int n, std::span<const Arc> arcs);

/// Exhaustive transitivity check over all arc pairs.
bool is_transitive(int n, std::span<const Arc> arcs);

}  // namespace fkdiv
