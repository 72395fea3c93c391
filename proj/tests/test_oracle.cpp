#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fkdiv/error.hpp"
#include "fkdiv/oracle.hpp"
#include "support.hpp"

using namespace fkdiv;
using testsupport::make_graph;

namespace {

// Smallest label vector (vertex 0 most significant) reaching the optimum.
std::vector<int> smallest_optimal_labels(const Instance& inst, Profit optimum) {
  const int n = inst.vertex_count(), k = inst.agents();
  std::vector<int> labels(n, 0);
  for (;;) {
    const auto c = PartialColoring::from_labels(labels, k);
    if (c.feasible(inst.graph()) && satisfaction(c.profile(inst)) == optimum) return labels;
    int i = n - 1;
    while (i >= 0 && labels[i] == k) labels[i--] = 0;
    if (i < 0) return {};
    ++labels[i];
  }
}

}  // namespace

TEST_CASE("small instances") {
  CHECK(brute_force(testsupport::uniform_instance(Graph(4), 2)).optimum == 2);
  const Instance k2(make_graph(2, {{0, 1}}), {{4, 7}, {4, 7}});
  CHECK(brute_force(k2).optimum == 4);
  const Graph tri = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  const Instance t(tri, {{5, 2, 9}});
  CHECK(brute_force(t).optimum == 9);
  CHECK(max_weight_independent_set(t) == 9);
  CHECK(max_weight_independent_set(testsupport::uniform_instance(make_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 1)) == 2);
  CHECK(max_weight_independent_set(Instance(Graph(3), {{1, 2, 3}})) == 6);
}

TEST_CASE("errors") {
  OracleOptions tiny;
  tiny.budget = 10;
  try {
    brute_force(testsupport::uniform_instance(Graph(8), 2), tiny);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  try {
    max_weight_independent_set(testsupport::uniform_instance(Graph(2), 2));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("result invariants and witness choice") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + round % 7, k = 1 + round % 3;
    const Instance inst = testsupport::random_instance(rng, testsupport::random_graph(rng, n, 0.4), k, 6);
    const OracleResult r = brute_force(inst);
    const auto truth = testsupport::all_profiles(inst);
    CHECK(testsupport::as_set(r.profiles) == truth);
    CHECK(r.optimum == testsupport::optimum_of(truth));
    CHECK(r.witness.feasible(inst.graph()));
    CHECK(satisfaction(r.witness.profile(inst)) == r.optimum);
    CHECK(r.profiles.contains(r.witness.profile(inst)));
    CHECK(r.witness.labels() == smallest_optimal_labels(inst, r.optimum));

    OracleOptions fast;
    fast.enumerate_profiles = false;
    const OracleResult f = brute_force(inst, fast);
    CHECK(f.optimum == r.optimum);
    CHECK(f.witness == r.witness);
    CHECK(f.nodes <= r.nodes);
    if (k == 1) CHECK(max_weight_independent_set(inst) == r.optimum);
  }
}

TEST_CASE("profile sets are closed under removing a vertex") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + round % 6, k = 1 + round % 2;
    const Instance inst = testsupport::random_instance(rng, testsupport::random_graph(rng, n, 0.4), k, 6);
    const OracleResult r = brute_force(inst);
    for (std::size_t i = 0; i < r.profiles.size(); ++i) {
      const PartialColoring& w = r.profiles.witness(i);
      for (Vertex v = 0; v < n; ++v) {
        if (!w.color(v)) continue;
        PartialColoring smaller = w;
        smaller.assign(v, 0);
        CHECK(r.profiles.contains(smaller.profile(inst)));
      }
    }
  }
}

TEST_CASE("optimum is monotone under deleting edges and adding isolated vertices") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 100; ++round) {
    const int n = 2 + round % 6, k = 1 + round % 3;
    const Graph g = testsupport::random_graph(rng, n, 0.5);
    const Instance inst = testsupport::random_instance(rng, g, k, 6);
    const Profit z = brute_force(inst).optimum;
    auto edges = g.edges();
    if (!edges.empty()) {
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng() % edges.size()));
      std::vector<std::vector<Profit>> rows;
      for (int j = 0; j < k; ++j) rows.push_back(inst.profits(j));
      CHECK(brute_force(Instance(Graph(n, edges), rows)).optimum >= z);
    }
    std::vector<std::vector<Profit>> rows;
    for (int j = 0; j < k; ++j) {
      rows.push_back(inst.profits(j));
      rows.back().push_back(static_cast<Profit>(rng() % 5));
    }
    CHECK(brute_force(Instance(Graph(n + 1, g.edges()), rows)).optimum >= z);
  }
}
