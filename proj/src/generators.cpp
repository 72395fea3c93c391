#include "fkdiv/generators.hpp"

#include <algorithm>
#include <numeric>

#include "fkdiv/biconvex.hpp"
#include "fkdiv/error.hpp"
#include "fkdiv/tree_decomposition.hpp"

namespace fkdiv {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

const std::vector<std::string_view>& family_names() {
  static const std::vector<std::string_view> names{"edgeless", "interval", "chordal", "biconvex", "random"};
  return names;
}

namespace {

std::vector<std::vector<Profit>> random_profits(std::mt19937_64& rng, int n, int k, Profit max_profit) {
  std::vector<std::vector<Profit>> rows(k, std::vector<Profit>(n));
  for (auto& row : rows) {
    for (auto& p : row) p = uniform_int(rng, 0, max_profit);
  }
  return rows;
}

std::vector<Edge> interval_edges(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> iv(n);
  for (auto& [l, r] : iv) {
    l = static_cast<int>(uniform_int(rng, 0, 2 * n));
    r = l + static_cast<int>(uniform_int(rng, 0, std::max(1, n / 2)));
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::vector<Edge> chordal_edges(std::mt19937_64& rng, int n) {
  constexpr int kMaxAttach = 3;
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> attach;
    if (!cliques.empty() && uniform_int(rng, 0, 5) != 0) {
      const auto& base = cliques[uniform_int(rng, 0, static_cast<std::int64_t>(cliques.size()) - 1)];
      for (Vertex u : base) {
        if (static_cast<int>(attach.size()) < kMaxAttach && uniform_int(rng, 0, 2) != 0) attach.push_back(u);
      }
    }
    for (Vertex u : attach) edges.emplace_back(u, v);
    attach.push_back(v);
    cliques.push_back(std::move(attach));
  }
  return edges;
}

struct BiconvexDraw {
  std::vector<Edge> edges;
  std::vector<Vertex> order_a;
  std::vector<Vertex> order_b;
};

// Side A takes ids 0..s-1 and side B the rest, both in order. Each A vertex
// gets a random window of B; windows sorted by left end give A's order.
BiconvexDraw biconvex_draw(std::mt19937_64& rng, int n, bool proper) {
  BiconvexDraw d;
  const int s = n <= 1 ? n : static_cast<int>(uniform_int(rng, 1, n - 1));
  const int t = n - s;
  std::vector<std::pair<int, int>> windows(s);
  for (auto& [l, r] : windows) {
    if (t == 0) {
      l = 0;
      r = -1;
      continue;
    }
    l = static_cast<int>(uniform_int(rng, 0, t - 1));
    r = std::min(t - 1, l + static_cast<int>(uniform_int(rng, 0, std::max(1, t / 2))));
  }
  std::sort(windows.begin(), windows.end(), [&](const auto& x, const auto& y) {
    if (proper) return x.first != y.first ? x.first < y.first : x.second < y.second;
    return x.first < y.first;
  });
  if (proper) {
    // Nondecreasing right ends: a bipartite permutation graph.
    for (int i = 1; i < s; ++i) {
      if (windows[i].second >= windows[i].first) {
        int prev = -1;
        for (int h = 0; h < i; ++h) prev = std::max(prev, windows[h].second);
        windows[i].second = std::max(windows[i].second, std::min(prev, t - 1));
      }
    }
  }
  for (int a = 0; a < s; ++a) {
    d.order_a.push_back(a);
    for (int b = windows[a].first; b <= windows[a].second; ++b) d.edges.emplace_back(a, s + b);
  }
  for (int b = 0; b < t; ++b) d.order_b.push_back(s + b);
  return d;
}

bool usable_biconvex(const BiconvexDraw& d, int n) {
  const Graph g(n, d.edges);
  if (!verify_biconvex_ordering(g, d.order_a, d.order_b)) return false;
  try {
    (void)component_structures(g, d.order_a, d.order_b);
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace

InstanceFile gen_family(std::string_view family, int n, int k, Profit max_profit, std::uint64_t seed) {
  if (n < 0 || k < 1 || k > 255 || max_profit < 0) {
    throw Error(ErrorCode::ParameterOutOfRange, "need n >= 0, 1 <= k <= 255, max_profit >= 0");
  }
  std::mt19937_64 rng(seed);
  InstanceFile file;
  file.declared_class = std::string(family);
  std::vector<Edge> edges;
  if (family == "edgeless") {
    std::vector<Profit> row(n);
    for (auto& p : row) p = uniform_int(rng, 0, max_profit);
    file.instance = Instance(Graph(n), std::vector<std::vector<Profit>>(k, row));
    return file;
  } else if (family == "interval") {
    edges = interval_edges(rng, n);
  } else if (family == "chordal") {
    edges = chordal_edges(rng, n);
    (void)chordal_peo(Graph(n, edges));
  } else if (family == "random") {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (uniform_int(rng, 0, 1)) edges.emplace_back(u, v);
      }
    }
  } else if (family == "biconvex") {
    constexpr int kAttempts = 200;
    BiconvexDraw draw;
    bool ok = false;
    for (int attempt = 0; attempt < kAttempts && !ok; ++attempt) {
      draw = biconvex_draw(rng, n, false);
      ok = usable_biconvex(draw, n);
    }
    while (!ok) {
      draw = biconvex_draw(rng, n, true);
      ok = usable_biconvex(draw, n);
    }
    edges = draw.edges;
    file.order_a = draw.order_a;
    file.order_b = draw.order_b;
  } else {
    throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(family) + "'");
  }
  file.instance = Instance(Graph(n, edges), random_profits(rng, n, k, max_profit));
  return file;
}

CliqueReductionParams clique_reduction_params(const Graph& source, int ell, int k) {
  const int n = source.vertex_count();
  if (ell < 2 || ell >= n) throw Error(ErrorCode::ParameterOutOfRange, "need 2 <= ell < n");
  if (k < 2) throw Error(ErrorCode::ParameterOutOfRange, "need k >= 2");
  CliqueReductionParams p;
  p.n = n;
  p.m = source.edge_count();
  p.ell = ell;
  p.k = k;
  const Profit nn = n;
  const Profit pairs = static_cast<Profit>(ell) * (ell - 1) / 2;
  p.n1 = nn * nn * nn * nn;
  p.q = p.n1 + pairs * nn + (nn - ell);
  p.n2 = p.q - (static_cast<Profit>(p.m) - pairs) * nn;
  return p;
}

CliqueReduction gen_clique_reduction(const Graph& source, int ell, int k) {
  const CliqueReductionParams p = clique_reduction_params(source, ell, k);
  const auto source_edges = source.edges();
  const int x1 = p.n;
  const int first_edge = p.n + 1;
  const int first_extra = first_edge + p.m;
  const int total = first_extra + (k - 1);

  std::vector<Edge> edges;
  for (int e = 0; e < p.m; ++e) {
    edges.emplace_back(source_edges[e].first, first_edge + e);
    edges.emplace_back(source_edges[e].second, first_edge + e);
  }
  for (int i = 0; i < k - 1; ++i) {
    for (Vertex v = 0; v < p.n; ++v) edges.emplace_back(v, first_extra + i);
  }
  std::vector<Profit> row(total, 0);
  for (Vertex v = 0; v < p.n; ++v) row[v] = 1;
  for (int e = 0; e < p.m; ++e) row[first_edge + e] = p.n;
  row[x1] = p.n1;
  row[first_extra] = p.n2;
  for (int i = 1; i < k - 1; ++i) row[first_extra + i] = p.q;

  CliqueReduction out;
  out.params = p;
  out.file.instance = Instance(Graph(total, edges), std::vector<std::vector<Profit>>(k, row));
  out.file.declared_class = "bipartite";
  return out;
}

}  // namespace fkdiv
