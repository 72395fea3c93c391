#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "fkdiv/graph.hpp"
#include "fkdiv/profile.hpp"

namespace testsupport {

using fkdiv::Edge;
using fkdiv::Graph;
using fkdiv::Instance;
using fkdiv::Profit;
using fkdiv::ProfitProfile;

inline Graph make_graph(int n, std::initializer_list<Edge> edges) { return Graph(n, std::vector<Edge>(edges)); }

inline Instance uniform_instance(const Graph& g, int k, Profit value = 1) {
  return Instance(g, std::vector<std::vector<Profit>>(k, std::vector<Profit>(g.vertex_count(), value)));
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline Instance random_instance(std::mt19937_64& rng, const Graph& g, int k, Profit max_profit) {
  std::uniform_int_distribution<Profit> pick(0, max_profit);
  std::vector<std::vector<Profit>> rows(k, std::vector<Profit>(g.vertex_count()));
  for (auto& row : rows) {
    for (auto& p : row) p = pick(rng);
  }
  return Instance(g, rows);
}

// Plain enumeration of all (k+1)^n label vectors. Deliberately shares no code
// with the library's search.
inline std::set<ProfitProfile> all_profiles(const Instance& inst) {
  const int n = inst.vertex_count(), k = inst.agents();
  std::set<ProfitProfile> out;
  std::vector<int> labels(n, 0);
  for (;;) {
    bool ok = true;
    for (auto [u, v] : inst.graph().edges()) {
      if (labels[u] && labels[u] == labels[v]) ok = false;
    }
    if (ok) {
      ProfitProfile p(k, 0);
      for (int v = 0; v < n; ++v) {
        if (labels[v]) p[labels[v] - 1] += inst.profit(labels[v] - 1, v);
      }
      out.insert(p);
    }
    int i = 0;
    while (i < n && labels[i] == k) labels[i++] = 0;
    if (i == n) break;
    ++labels[i];
  }
  return out;
}

inline Profit optimum_of(const std::set<ProfitProfile>& profiles) {
  Profit best = 0;
  for (const auto& p : profiles) best = std::max(best, *std::min_element(p.begin(), p.end()));
  return best;
}

inline std::set<ProfitProfile> as_set(const fkdiv::ProfileSet& s) {
  auto v = s.profiles();
  return {v.begin(), v.end()};
}

// Every stored witness is a feasible coloring whose profile is its key.
inline bool witnesses_valid(const Instance& inst, const fkdiv::ProfileSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s.witness(i).feasible(inst.graph())) return false;
    if (s.witness(i).profile(inst) != s.profile(i)) return false;
  }
  return true;
}

inline fkdiv::ProfileSet make_set(int k, Profit q, std::initializer_list<ProfitProfile> profiles) {
  auto arith = fkdiv::ProfitArithmetic::exact(k, q);
  fkdiv::ProfileSetBuilder b(arith, false);
  for (const auto& p : profiles) b.insert(arith->encode(p));
  return b.build();
}

}  // namespace testsupport
