#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fkdiv/cocomp.hpp"
#include "fkdiv/error.hpp"
#include "fkdiv/generators.hpp"
#include "fkdiv/oracle.hpp"
#include "support.hpp"

using namespace fkdiv;
using testsupport::as_set;
using testsupport::make_graph;
using PS = std::set<ProfitProfile>;

TEST_CASE("base layer holds only the zero profile") {
  const LayerTable t = initial_layer(3, 2, ProfitArithmetic::exact(2, 5), false);
  CHECK(t.cell_count() == 1);
  REQUIRE(t.cell(std::vector<int>{0, 0}) != nullptr);
  CHECK(as_set(*t.cell(std::vector<int>{0, 0})) == PS{{0, 0}});
}

TEST_CASE("small instances") {
  const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const Instance unit = testsupport::uniform_instance(p4, 2);
  CHECK(testsupport::optimum_of(testsupport::all_profiles(unit)) == 2);
  CHECK(best(solve_cocomparability(unit)).value == 2);

  const Instance single(Graph(1), {{7}});
  CHECK(as_set(solve_cocomparability(single)) == PS{{0}, {7}});
}

TEST_CASE("layer_step cases") {
  // Edgeless pair: complement K2 oriented 0 -> 1, so v_1 = 0 and v_2 = 1.
  const Instance inst(Graph(2), {{2, 3}});
  const Orientation o = cocomparability_orientation(inst.graph());
  REQUIRE(o.order() == std::vector<Vertex>{0, 1});
  CocompOptions opts;
  auto arith = ProfitArithmetic::for_instance(inst);
  const LayerTable l0 = initial_layer(2, 1, arith, true);
  const LayerTable l1 = layer_step(l0, 1, inst, o, opts);
  const LayerTable l2 = layer_step(l1, 2, inst, o, opts);
  CHECK(as_set(*l2.cell(std::vector<int>{2})) == PS{{3}, {5}});
  CHECK(as_set(*l2.cell(std::vector<int>{1})) == PS{{2}});
  // Cells without the new index are inherited unchanged.
  CHECK(l2.cell(std::vector<int>{1}) == l1.cell(std::vector<int>{1}));

  // Index j twice is impossible.
  const Instance two(Graph(2), {{1, 1}, {1, 1}});
  const Orientation o2 = cocomparability_orientation(two.graph());
  LayerTable t = initial_layer(2, 2, ProfitArithmetic::for_instance(two), false);
  for (int j = 1; j <= 2; ++j) {
    t = layer_step(t, j, two, o2, opts);
    CHECK(t.cell(std::vector<int>{j, j}) == nullptr);
  }
}

TEST_CASE("not cocomparability") {
  // The complement of C5 is C5, which has no transitive orientation.
  const Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  try {
    solve_cocomparability(testsupport::uniform_instance(c5, 1));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCocomparability);
  }
}

TEST_CASE("oracle equivalence on generated interval instances") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const int k = 1 + static_cast<int>((seed / 8) % 3);
    const InstanceFile f = gen_family("interval", n, k, 3, seed);
    REQUIRE(f.instance.q_bound() <= 30);
    const ProfileSet s = solve_cocomparability(f.instance);
    CHECK(as_set(s) == as_set(brute_force(f.instance).profiles));
    if (n <= 6) CHECK(as_set(s) == testsupport::all_profiles(f.instance));
    CHECK(testsupport::witnesses_valid(f.instance, s));
  }
}

TEST_CASE("witness classes are directed paths of the orientation") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const InstanceFile f = gen_family("interval", 8, 2, 5, seed);
    const Orientation o = cocomparability_orientation(f.instance.graph());
    const ProfileSet s = solve_cocomparability(f.instance, o);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (auto cls : s.witness(i).classes()) {
        std::sort(cls.begin(), cls.end(), [&](Vertex a, Vertex b) { return o.position()[a] < o.position()[b]; });
        for (std::size_t h = 1; h < cls.size(); ++h) CHECK(o.has_arc(cls[h - 1], cls[h]));
      }
    }
  }
}

TEST_CASE("profile set does not depend on the orientation") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const InstanceFile f = gen_family("interval", 7, 2, 6, seed);
    const Orientation o = cocomparability_orientation(f.instance.graph());
    std::vector<Arc> reversed;
    for (auto [u, v] : o.arcs()) reversed.emplace_back(v, u);
    const Orientation r = Orientation::from_arcs(o.base(), reversed);
    if (r.arcs() == o.arcs()) continue;
    ++checked;
    CHECK(same_profiles(solve_cocomparability(f.instance, o), solve_cocomparability(f.instance, r)));
  }
  CHECK(checked > 30);
}

TEST_CASE("layer tables: monotone, index semantics, parallel equals sequential") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const InstanceFile f = gen_family("interval", 7, 2, 6, seed);
    const Orientation o = cocomparability_orientation(f.instance.graph());
    std::set<ProfitProfile> previous;
    CocompOptions opts;
    opts.observer = [&](const LayerTable& t) {
      const ProfileSet all = t.all_profiles();
      const auto current = as_set(all);
      CHECK(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
      previous = current;
      for (const auto& [idx, cell] : t.cells()) {
        for (int l = 0; l < 2; ++l) {
          CHECK(idx[l] <= t.layer());
          if (idx[l] > 0) CHECK(idx[1 - l] != idx[l]);
        }
        for (std::size_t i = 0; i < cell->size(); ++i) {
          const auto classes = cell->witness(i).classes();
          for (int l = 0; l < 2; ++l) {
            int last = 0;
            for (Vertex v : classes[l]) last = std::max(last, o.position()[v] + 1);
            CHECK(last == idx[l]);
          }
        }
      }
    };
    const ProfileSet seq = solve_cocomparability(f.instance, o, opts);
    CocompOptions par;
    par.threads = 4;
    const ProfileSet p = solve_cocomparability(f.instance, o, par);
    CHECK(same_profiles(seq, p));
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq.witness(i) == p.witness(i));
  }
}

TEST_CASE("pruned run keeps the optimum") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const InstanceFile f = gen_family("interval", 8, 3, 9, seed);
    CocompOptions opts;
    opts.prune = true;
    CHECK(best(solve_cocomparability(f.instance, opts)).value == brute_force(f.instance).optimum);
  }
}
