#include "fkdiv/graph.hpp"

#include <algorithm>
#include <string>

#include "fkdiv/error.hpp"

namespace fkdiv {

Graph::Graph(int n) : n_(n), adj_(n), matrix_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 0.." +
                      std::to_string(n - 1));
    }
    if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    auto& cell = matrix_[static_cast<std::size_t>(u) * n + v];
    if (cell) {
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    cell = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Instance::Instance(Graph graph, std::vector<std::vector<Profit>> profits)
    : graph_(std::move(graph)), profits_(std::move(profits)) {
  if (profits_.empty()) throw Error(ErrorCode::DimensionMismatch, "at least one agent required");
  for (std::size_t j = 0; j < profits_.size(); ++j) {
    const auto& row = profits_[j];
    if (static_cast<int>(row.size()) != graph_.vertex_count()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "profit row " + std::to_string(j + 1) + " has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(graph_.vertex_count()));
    }
    Profit sum = 0;
    for (Profit p : row) {
      if (p < 0) throw Error(ErrorCode::InvalidArgument, "negative profit");
      sum += p;
    }
    q_bound_ = std::max(q_bound_, sum);
  }
}

Profit Instance::total_profit(int agent) const {
  Profit sum = 0;
  for (Profit p : profits_[agent]) sum += p;
  return sum;
}

bool is_independent(const Graph& graph, std::span<const Vertex> subset) {
  for (Vertex v : subset) {
    if (v < 0 || v >= graph.vertex_count()) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    }
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (graph.adjacent(subset[i], subset[j])) return false;
    }
  }
  return true;
}

Graph complement(const Graph& graph) {
  std::vector<Edge> edges;
  const int n = graph.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!graph.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph induced_subgraph(const Graph& graph, std::span<const Vertex> vertices) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (graph.adjacent(vertices[i], vertices[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Instance induced_instance(const Instance& instance, std::span<const Vertex> vertices) {
  std::vector<std::vector<Profit>> rows(instance.agents());
  for (int j = 0; j < instance.agents(); ++j) {
    rows[j].reserve(vertices.size());
    for (Vertex v : vertices) rows[j].push_back(instance.profit(j, v));
  }
  return Instance(induced_subgraph(instance.graph(), vertices), std::move(rows));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& graph) {
  const int n = graph.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : graph.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace fkdiv
