#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fkdiv {

using Vertex = int;
using Profit = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws VertexOutOfRange for bad endpoints and InvalidArgument for
  /// self-loops or duplicate edges.
  Graph(int n, std::span<const Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool adjacent(Vertex u, Vertex v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Conflict graph together with k additive profit functions.
class Instance {
 public:
  Instance() = default;
  /// profits[j][v] is the profit of vertex v for agent j. Throws
  /// DimensionMismatch on shape errors and InvalidArgument on negative entries.
  Instance(Graph graph, std::vector<std::vector<Profit>> profits);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int agents() const { return static_cast<int>(profits_.size()); }
  Profit profit(int agent, Vertex v) const { return profits_[agent][v]; }
  const std::vector<Profit>& profits(int agent) const { return profits_[agent]; }
  const std::vector<std::vector<Profit>>& profit_matrix() const { return profits_; }
  /// Largest per-agent total profit; bounds every profile coordinate.
  Profit q_bound() const { return q_bound_; }
  Profit total_profit(int agent) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph_ == b.graph_ && a.profits_ == b.profits_;
  }

 private:
  Graph graph_;
  std::vector<std::vector<Profit>> profits_;
  Profit q_bound_ = 0;
};

/// Throws VertexOutOfRange when a member is not a vertex of the graph.
bool is_independent(const Graph& graph, std::span<const Vertex> subset);

Graph complement(const Graph& graph);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& graph, std::span<const Vertex> vertices);

/// Instance restricted to `vertices`, profits carried along.
Instance induced_instance(const Instance& instance, std::span<const Vertex> vertices);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& graph);

}  // namespace fkdiv
