#include "fkdiv/biconvex.hpp"

#include <algorithm>

#include "fkdiv/error.hpp"
#include "fkdiv/orientation.hpp"

namespace fkdiv {

namespace {

bool subset_of(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool consecutive(const Graph& graph, Vertex v, const std::vector<int>& pos_in_other) {
  const auto& nb = graph.neighbors(v);
  if (nb.empty()) return true;
  int lo = pos_in_other[nb.front()], hi = lo;
  for (Vertex w : nb) {
    lo = std::min(lo, pos_in_other[w]);
    hi = std::max(hi, pos_in_other[w]);
  }
  return hi - lo + 1 == static_cast<int>(nb.size());
}

// Boundary positions for the current side_a order, or {-1,-1} if undefined.
std::pair<int, int> boundaries(const Graph& graph, const std::vector<Vertex>& side_a,
                               const std::vector<Vertex>& side_b) {
  auto maximal = [&](Vertex a) {
    const auto& na = graph.neighbors(a);
    for (Vertex other : side_a) {
      if (other == a) continue;
      const auto& no = graph.neighbors(other);
      if (no.size() > na.size() && subset_of(na, no)) return false;
    }
    return true;
  };
  auto best = [&](Vertex b, bool smallest) {
    int chosen = -1;
    for (int i = 0; i < static_cast<int>(side_a.size()); ++i) {
      if (!graph.adjacent(side_a[i], b) || !maximal(side_a[i])) continue;
      if (chosen < 0 || !smallest) chosen = i;
      if (smallest) break;
    }
    return chosen;
  };
  return {best(side_b.front(), true), best(side_b.back(), false)};
}

}  // namespace

std::vector<Vertex> BiconvexStructure::left_set() const {
  return {side_a.begin(), side_a.begin() + left_boundary};
}

std::vector<Vertex> BiconvexStructure::right_set() const {
  if (right_boundary + 1 >= static_cast<int>(side_a.size())) return {};
  return {side_a.begin() + right_boundary + 1, side_a.end()};
}

bool verify_biconvex_ordering(const Graph& graph, std::span<const Vertex> order_a,
                              std::span<const Vertex> order_b) {
  const int n = graph.vertex_count();
  if (static_cast<int>(order_a.size() + order_b.size()) != n) return false;
  std::vector<int> side(n, -1), pos(n, -1);
  for (std::size_t i = 0; i < order_a.size(); ++i) {
    Vertex v = order_a[i];
    if (v < 0 || v >= n || side[v] != -1) return false;
    side[v] = 0;
    pos[v] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < order_b.size(); ++i) {
    Vertex v = order_b[i];
    if (v < 0 || v >= n || side[v] != -1) return false;
    side[v] = 1;
    pos[v] = static_cast<int>(i);
  }
  for (auto [u, v] : graph.edges()) {
    if (side[u] == side[v]) return false;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!consecutive(graph, v, pos)) return false;
  }
  return true;
}

bool nesting_holds(const Graph& graph, const BiconvexStructure& s) {
  const auto& a = s.side_a;
  for (int i = 0; i <= s.left_boundary && i < static_cast<int>(a.size()); ++i) {
    for (int j = i + 1; j <= s.left_boundary; ++j) {
      if (!subset_of(graph.neighbors(a[i]), graph.neighbors(a[j]))) return false;
    }
  }
  for (int i = std::max(s.right_boundary, 0); i < static_cast<int>(a.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(a.size()); ++j) {
      if (!subset_of(graph.neighbors(a[j]), graph.neighbors(a[i]))) return false;
    }
  }
  return true;
}

BiconvexStructure biconvex_structure(const Graph& graph, std::span<const Vertex> order_a,
                                     std::span<const Vertex> order_b) {
  if (!verify_biconvex_ordering(graph, order_a, order_b)) {
    throw Error(ErrorCode::OrderingNotBiconvex, "ordering fails biconvex verification");
  }
  if (connected_components(graph).size() > 1) {
    throw Error(ErrorCode::NotConnected, "biconvex structure needs a connected graph");
  }
  BiconvexStructure s;
  s.side_a.assign(order_a.begin(), order_a.end());
  s.side_b.assign(order_b.begin(), order_b.end());

  if (s.side_a.empty() || s.side_b.empty()) {
    // Connected with an empty side: at most a single vertex.
    s.left_boundary = 0;
    s.right_boundary = static_cast<int>(s.side_a.size()) - 1;
  } else {
    bool found = false;
    for (int attempt = 0; attempt < 2 && !found; ++attempt) {
      if (attempt == 1) {
        std::reverse(s.side_a.begin(), s.side_a.end());
        s.mirrored = true;
      }
      auto [left, right] = boundaries(graph, s.side_a, s.side_b);
      if (left < 0 || right < 0 || left > right) continue;
      s.left_boundary = left;
      s.right_boundary = right;
      found = nesting_holds(graph, s);
    }
    if (!found) {
      throw Error(ErrorCode::OrderingNotBiconvex, "no boundary pair with nested outer neighborhoods");
    }
  }

  for (int i = s.left_boundary; i <= s.right_boundary; ++i) s.middle_vertices.push_back(s.side_a[i]);
  for (Vertex b : s.side_b) s.middle_vertices.push_back(b);
  std::sort(s.middle_vertices.begin(), s.middle_vertices.end());
  s.middle_graph = induced_subgraph(graph, s.middle_vertices);
  try {
    (void)transitive_orientation(complement(s.middle_graph));
  } catch (const Error&) {
    throw Error(ErrorCode::OrderingNotBiconvex, "middle graph is not cocomparability");
  }
  return s;
}

std::vector<ComponentStructure> component_structures(const Graph& graph, std::span<const Vertex> order_a,
                                                     std::span<const Vertex> order_b) {
  if (!verify_biconvex_ordering(graph, order_a, order_b)) {
    throw Error(ErrorCode::OrderingNotBiconvex, "ordering fails biconvex verification");
  }
  std::vector<ComponentStructure> out;
  for (auto& comp : connected_components(graph)) {
    std::vector<int> local(graph.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) local[comp[i]] = i;
    std::vector<Vertex> sub_a, sub_b;
    for (Vertex v : order_a) {
      if (local[v] >= 0) sub_a.push_back(local[v]);
    }
    for (Vertex v : order_b) {
      if (local[v] >= 0) sub_b.push_back(local[v]);
    }
    Graph sub = induced_subgraph(graph, comp);
    out.push_back({comp, biconvex_structure(sub, sub_a, sub_b)});
  }
  return out;
}

}  // namespace fkdiv
