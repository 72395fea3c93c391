#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fkdiv/error.hpp"
#include "fkdiv/generators.hpp"
#include "fkdiv/tree_decomposition.hpp"
#include "support.hpp"

using namespace fkdiv;
using testsupport::make_graph;

namespace {

Graph triangle_pendant() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected throw");
  return ErrorCode::InvalidArgument;
}

bool is_clique(const Graph& g, const std::vector<Vertex>& bag) {
  for (std::size_t i = 0; i < bag.size(); ++i) {
    for (std::size_t j = i + 1; j < bag.size(); ++j) {
      if (!g.adjacent(bag[i], bag[j])) return false;
    }
  }
  return true;
}

// Nodes on the `from` side after deleting tree edge {from, to}.
std::vector<int> side_of(const TreeDecomposition& td, int from, int to) {
  std::vector<std::vector<int>> adj(td.node_count());
  for (auto [a, b] : td.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> seen(td.node_count(), 0), out{from}, stack{from};
  seen[from] = seen[to] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
        stack.push_back(y);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("perfect elimination orders") {
  const Graph tp = triangle_pendant();
  CHECK(is_perfect_elimination_order(tp, chordal_peo(tp)));
  CHECK(is_perfect_elimination_order(tp, {3, 0, 1, 2}));
  CHECK(!is_perfect_elimination_order(tp, {2, 0, 1, 3}));
  const Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(code_of([&] { chordal_peo(c4); }) == ErrorCode::NotChordal);
  CHECK(code_of([&] { clique_tree(c4); }) == ErrorCode::NotChordal);
  const Graph empty3(3);
  CHECK(is_perfect_elimination_order(empty3, chordal_peo(empty3)));
  CHECK(is_perfect_elimination_order(empty3, {2, 0, 1}));
}

TEST_CASE("clique trees") {
  const auto td = clique_tree(triangle_pendant());
  CHECK(td.bags == std::vector<std::vector<Vertex>>{{0, 1, 2}, {2, 3}});
  CHECK(td.edges.size() == 1);
  CHECK(verify_decomposition(triangle_pendant(), td) == 2);

  const auto single = clique_tree(make_graph(2, {{0, 1}}));
  CHECK(single.bags == std::vector<std::vector<Vertex>>{{0, 1}});
  CHECK(single.edges.empty());

  const auto apart = clique_tree(Graph(2));
  CHECK(apart.bags == std::vector<std::vector<Vertex>>{{0}, {1}});
  CHECK(verify_decomposition(Graph(2), apart) == 0);
}

TEST_CASE("make_nice") {
  TreeDecomposition one;
  one.bags = {{0, 1}};
  const auto chain = make_nice(one);
  REQUIRE(chain.node_count() == 5);
  const std::vector<NiceKind> kinds{NiceKind::Leaf, NiceKind::Introduce, NiceKind::Introduce, NiceKind::Forget,
                                    NiceKind::Forget};
  for (int i = 0; i < 5; ++i) CHECK(chain.nodes[i].kind == kinds[i]);
  CHECK(chain.nodes[2].bag == std::vector<Vertex>{0, 1});
  CHECK(chain.nodes[chain.root].bag.empty());
  CHECK(verify_nice(make_graph(2, {{0, 1}}), chain) == 1);

  const auto none = make_nice(TreeDecomposition{});
  CHECK(none.node_count() == 1);
  CHECK(none.nodes[0].kind == NiceKind::Leaf);

  const Graph tp = triangle_pendant();
  const auto nice = make_nice(clique_tree(tp));
  CHECK(nice.node_count() <= 6 * tp.vertex_count());
  CHECK(verify_nice(tp, nice) == 2);

  TreeDecomposition cyclic;
  cyclic.bags = {{0}, {0}, {0}};
  cyclic.edges = {{0, 1}, {1, 2}, {2, 0}};
  CHECK(code_of([&] { make_nice(cyclic); }) == ErrorCode::InvalidDecomposition);
}

TEST_CASE("min-fill widths") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 30; ++n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
    const Graph tree(n, edges);
    CHECK(verify_decomposition(tree, minfill_decomposition(tree)) == (n > 1 ? 1 : 0));
  }
  const Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(verify_decomposition(c4, minfill_decomposition(c4)) == 2);
  const Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(verify_decomposition(k4, minfill_decomposition(k4)) == 3);
}

TEST_CASE("verification errors") {
  const Graph k2 = make_graph(2, {{0, 1}});
  TreeDecomposition td;
  td.bags = {{0}, {1}};
  td.edges = {{0, 1}};
  CHECK(code_of([&] { verify_decomposition(k2, td); }) == ErrorCode::MissingEdge);

  TreeDecomposition missing;
  missing.bags = {{0}};
  CHECK(code_of([&] { verify_decomposition(Graph(2), missing); }) == ErrorCode::MissingVertex);

  TreeDecomposition split;
  split.bags = {{0}, {1}, {0}};
  split.edges = {{0, 1}, {1, 2}};
  CHECK(code_of([&] { verify_decomposition(Graph(2), split); }) == ErrorCode::DisconnectedOccurrence);

  TreeDecomposition forest;
  forest.bags = {{0}, {1}};
  CHECK(code_of([&] { verify_decomposition(Graph(2), forest); }) == ErrorCode::NotATree);
}

TEST_CASE("generated chordal graphs") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 1 + static_cast<int>(seed % 50);
    const Graph g = gen_family("chordal", n, 1, 1, seed).instance.graph();
    CHECK(is_perfect_elimination_order(g, chordal_peo(g)));
    const auto td = clique_tree(g);
    CHECK(td.node_count() <= n);
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
      CHECK(is_clique(g, td.bags[i]));
      for (std::size_t j = 0; j < td.bags.size(); ++j) {
        if (i != j) {
          CHECK(!std::includes(td.bags[j].begin(), td.bags[j].end(), td.bags[i].begin(), td.bags[i].end()));
        }
      }
    }
    const int w = verify_decomposition(g, td);
    const auto nice = make_nice(td);
    CHECK(verify_nice(g, nice) <= w);
    CHECK(nice.node_count() <= 4 * (n + 1) * (n + 1));
    for (const auto& node : nice.nodes) {
      bool inside = false;
      for (const auto& bag : td.bags) inside |= std::includes(bag.begin(), bag.end(), node.bag.begin(), node.bag.end());
      CHECK(inside);
    }
  }
}

TEST_CASE("tree edges separate the graph") {
  std::mt19937_64 rng(11);
  int samples = 0;
  while (samples < 300) {
    const int n = 2 + static_cast<int>(rng() % 12);
    const Graph g = testsupport::random_graph(rng, n, 0.3);
    const auto td = minfill_decomposition(g);
    verify_decomposition(g, td);
    const auto nice = make_nice(td);
    verify_nice(g, nice);
    for (const TreeDecomposition& d : {td, nice.as_tree_decomposition()}) {
      if (d.edges.empty()) continue;
      const auto [s, t] = d.edges[rng() % d.edges.size()];
      std::vector<int> in_a(n, 0), in_b(n, 0), shared(n, 0);
      for (int x : side_of(d, s, t)) for (Vertex v : d.bags[x]) in_a[v] = 1;
      for (int x : side_of(d, t, s)) for (Vertex v : d.bags[x]) in_b[v] = 1;
      for (Vertex v : d.bags[s]) shared[v] |= std::binary_search(d.bags[t].begin(), d.bags[t].end(), v);
      for (auto [u, v] : g.edges()) {
        const bool ua = in_a[u] && !shared[u], ub = in_b[u] && !shared[u];
        const bool va = in_a[v] && !shared[v], vb = in_b[v] && !shared[v];
        CHECK(!(ua && vb));
        CHECK(!(ub && va));
      }
      ++samples;
    }
  }
}
