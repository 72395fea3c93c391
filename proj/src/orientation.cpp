#include "fkdiv/orientation.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "fkdiv/error.hpp"

namespace fkdiv {

namespace {

std::vector<std::uint8_t> arc_matrix(int n, std::span<const Arc> arcs) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : arcs) m[static_cast<std::size_t>(u) * n + v] = 1;
  return m;
}

}  // namespace

bool is_transitive(int n, std::span<const Arc> arcs) {
  auto m = arc_matrix(n, arcs);
  std::vector<std::vector<Vertex>> out(n);
  for (auto [u, v] : arcs) out[u].push_back(v);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : out[x]) {
      for (Vertex z : out[y]) {
        if (!m[static_cast<std::size_t>(x) * n + z]) return false;
      }
    }
  }
  return true;
}

std::vector<Vertex> topological_sort(int n, std::span<const Arc> arcs) {
  std::vector<std::vector<Vertex>> out(n);
  std::vector<int> indegree(n, 0);
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw Error(ErrorCode::VertexOutOfRange, "arc endpoint");
    out[u].push_back(v);
    ++indegree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) throw Error(ErrorCode::CycleDetected, "arc set has a cycle");
  return order;
}

Orientation Orientation::from_arcs(Graph base, std::vector<Arc> arcs) {
  const int n = base.vertex_count();
  std::sort(arcs.begin(), arcs.end());
  if (static_cast<int>(arcs.size()) != base.edge_count()) {
    throw Error(ErrorCode::NotComparability, "arc count differs from edge count");
  }
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n || !base.adjacent(u, v)) {
      throw Error(ErrorCode::NotComparability, "arc does not orient a base edge");
    }
  }
  Orientation o;
  o.matrix_ = arc_matrix(n, arcs);
  for (auto [u, v] : arcs) {
    if (o.matrix_[static_cast<std::size_t>(v) * n + u]) {
      throw Error(ErrorCode::NotComparability, "edge oriented both ways");
    }
  }
  if (!is_transitive(n, arcs)) throw Error(ErrorCode::NotComparability, "orientation is not transitive");
  o.order_ = topological_sort(n, arcs);
  o.position_.assign(n, 0);
  for (int i = 0; i < n; ++i) o.position_[o.order_[i]] = i;
  o.base_ = std::move(base);
  o.arcs_ = std::move(arcs);
  return o;
}

std::vector<Vertex> Orientation::in_neighbors(Vertex v) const {
  std::vector<Vertex> in;
  for (Vertex u : base_.neighbors(v)) {
    if (has_arc(u, v)) in.push_back(u);
  }
  return in;
}

Orientation transitive_orientation(const Graph& graph) {
  const int n = graph.vertex_count();
  auto idx = [n](Vertex u, Vertex v) { return static_cast<std::size_t>(u) * n + v; };

  // alive: edges of the current graph in the decomposition sequence.
  std::vector<std::uint8_t> alive(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : graph.edges()) alive[idx(u, v)] = alive[idx(v, u)] = 1;
  // mark: 0 unseen, 1 arc in the current class.
  std::vector<std::uint8_t> in_class(static_cast<std::size_t>(n) * n, 0);
  std::vector<Arc> arcs;
  arcs.reserve(graph.edge_count());

  const auto edges = graph.edges();
  for (auto [su, sv] : edges) {
    if (!alive[idx(su, sv)]) continue;
    // Explore the implication class of (su, sv) in the current graph.
    std::vector<Arc> cls{{su, sv}};
    in_class[idx(su, sv)] = 1;
    std::deque<Arc> queue{{su, sv}};
    auto force = [&](Vertex a, Vertex b) {
      if (in_class[idx(a, b)]) return;
      if (in_class[idx(b, a)]) {
        throw Error(ErrorCode::NotComparability, "implication class contains an edge in both directions");
      }
      in_class[idx(a, b)] = 1;
      cls.emplace_back(a, b);
      queue.emplace_back(a, b);
    };
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for (Vertex w = 0; w < n; ++w) {
        if (w == a || w == b) continue;
        // (a,b) with a-w alive and b-w not alive forces (a,w).
        if (alive[idx(a, w)] && !alive[idx(b, w)]) force(a, w);
        // (a,b) with w-b alive and a-w not alive forces (w,b).
        if (alive[idx(w, b)] && !alive[idx(a, w)]) force(w, b);
      }
    }
    for (auto [a, b] : cls) {
      alive[idx(a, b)] = alive[idx(b, a)] = 0;
      in_class[idx(a, b)] = 0;
      arcs.emplace_back(a, b);
    }
  }
  return Orientation::from_arcs(graph, std::move(arcs));
}

}  // namespace fkdiv
