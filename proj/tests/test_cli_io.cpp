#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fkdiv/biconvex.hpp"
#include "fkdiv/cocomp.hpp"
#include "fkdiv/dispatch.hpp"
#include "fkdiv/error.hpp"
#include "fkdiv/generators.hpp"
#include "fkdiv/io.hpp"
#include "fkdiv/oracle.hpp"
#include "fkdiv/tree_decomposition.hpp"
#include "support.hpp"

using namespace fkdiv;
using testsupport::make_graph;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected throw");
  return ErrorCode::InvalidArgument;
}

std::filesystem::path data(const std::string& name) { return std::filesystem::path(FKDIV_TEST_DATA) / name; }

}  // namespace

TEST_CASE("parsing") {
  const InstanceFile k2 = parse_instance("p fkdiv 2 1 1\ne 1 2\nw 1 4 7\n");
  CHECK(k2.instance.graph() == make_graph(2, {{0, 1}}));
  CHECK(k2.instance.profits(0) == std::vector<Profit>{4, 7});
  CHECK(!k2.declared_class);

  const InstanceFile c4 = parse_instance(
      "# c4\np fkdiv 4 4 1\ne 1 2\ne 2 3\ne 3 4\ne 4 1\nw 1 1 1 1 1\nc class biconvex\no A 1 3\no B 2 4\n");
  REQUIRE(c4.has_biconvex_ordering());
  CHECK(*c4.order_a == std::vector<Vertex>{0, 2});
  CHECK(*c4.declared_class == "biconvex");
  CHECK(component_structures(c4.instance.graph(), *c4.order_a, *c4.order_b).size() == 1);

  const InstanceFile td = read_instance_file(data("declared_td.txt"));
  REQUIRE(td.decomposition);
  CHECK(td.decomposition->node_count() == 3);
  CHECK(verify_decomposition(td.instance.graph(), *td.decomposition) == 2);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_instance("p fkdiv 2 0 1\nw 1 4\n"); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { parse_instance("p fkdiv 2 1 1\nw 1 4 7\n"); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { parse_instance("p fkdiv 2 0 2\nw 1 4 7\n"); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { parse_instance("p fkdiv 2 0 1\nw 1 4 x\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_instance("q fkdiv 2 0 1\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_instance("p fkdiv 2 1 1\ne 1 3\nw 1 4 7\n"); }) == ErrorCode::SyntaxError);
  // Same side adjacency.
  CHECK(code_of([] { parse_instance("p fkdiv 2 1 1\ne 1 2\nw 1 4 7\no A 1 2\no B\n"); }) ==
        ErrorCode::InvalidOrdering);
  CHECK(code_of([] { parse_instance("p fkdiv 2 1 1\ne 1 2\nw 1 4 7\no A 1\n"); }) == ErrorCode::InvalidOrdering);
  CHECK(code_of([] { parse_instance("p fkdiv 2 1 1\ne 1 2\nw 1 4 7\nt 2 1\nb 1 1\nb 2 2\na 1 2\n"); }) ==
        ErrorCode::InvalidDecomposition);
  try {
    parse_instance("p fkdiv 2 0 1\n\nw 1 4 x\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("round trip") {
  for (const char* name : {"p4.txt", "c4_biconvex.txt", "declared_td.txt", "k2.txt"}) {
    const InstanceFile f = read_instance_file(data(name));
    const std::string text = serialize_instance(f);
    const InstanceFile g = parse_instance(text);
    CHECK(g.instance == f.instance);
    CHECK(g.order_a == f.order_a);
    CHECK(g.order_b == f.order_b);
    CHECK(serialize_instance(g) == text);
  }
  for (auto family : family_names()) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const InstanceFile f = gen_family(family, 1 + static_cast<int>(seed % 12), 3, 1000, seed);
      const std::string text = serialize_instance(f);
      const InstanceFile g = parse_instance(text);
      CHECK(g.instance == f.instance);
      CHECK(g.declared_class == f.declared_class);
      CHECK(serialize_instance(g) == text);
    }
  }
}

TEST_CASE("generated families") {
  CHECK(code_of([] { gen_family("planar", 4, 2, 1, 0); }) == ErrorCode::UnknownFamily);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 1 + static_cast<int>(seed % 16);
    for (auto family : family_names()) {
      const InstanceFile a = gen_family(family, n, 2, 9, seed);
      CHECK(serialize_instance(a) == serialize_instance(gen_family(family, n, 2, 9, seed)));
      CHECK(a.instance.vertex_count() == n);
      for (int j = 0; j < 2; ++j) {
        for (Profit p : a.instance.profits(j)) CHECK((p >= 0 && p <= 9));
      }
    }
    const Graph e = gen_family("edgeless", n, 3, 9, seed).instance.graph();
    CHECK(e.edge_count() == 0);
    const Instance ei = gen_family("edgeless", n, 3, 9, seed).instance;
    CHECK(ei.profits(0) == ei.profits(1));
    CHECK(ei.profits(0) == ei.profits(2));

    const Graph iv = gen_family("interval", n, 2, 9, seed).instance.graph();
    CHECK(is_perfect_elimination_order(iv, chordal_peo(iv)));
    CHECK_NOTHROW(cocomparability_orientation(iv));
    const Graph ch = gen_family("chordal", n, 2, 9, seed).instance.graph();
    CHECK(is_perfect_elimination_order(ch, chordal_peo(ch)));
    const InstanceFile bi = gen_family("biconvex", n, 2, 9, seed);
    REQUIRE(bi.has_biconvex_ordering());
    CHECK(verify_biconvex_ordering(bi.instance.graph(), *bi.order_a, *bi.order_b));
    CHECK_NOTHROW(component_structures(bi.instance.graph(), *bi.order_a, *bi.order_b));
  }
  const Instance partition = gen_family("edgeless", 4, 2, 1, 7).instance;
  CHECK(partition.graph().edge_count() == 0);
  CHECK(partition.profits(0) == partition.profits(1));
}

TEST_CASE("clique reduction parameters") {
  const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(code_of([&] { clique_reduction_params(k3, 3, 2); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { clique_reduction_params(k3, 1, 2); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { clique_reduction_params(k3, 2, 1); }) == ErrorCode::ParameterOutOfRange);

  const auto p = clique_reduction_params(k3, 2, 2);
  CHECK(p.n1 == 81);
  CHECK(p.q == 85);
  CHECK(p.n2 == 85 - (3 - 1) * 3);

  // K4 with ell = 3: q = 256 + 3*4 + 1, N2 = q - (6 - 3)*4.
  const Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const CliqueReduction r = gen_clique_reduction(k4, 3, 2);
  CHECK(r.params.n1 == 256);
  CHECK(r.params.q == 269);
  CHECK(r.params.n2 == 257);
  CHECK(r.params.n2 >= 64);
  CHECK(r.file.instance.vertex_count() == 4 + 6 + 2);
  CHECK(r.file.declared_class == "bipartite");
  // x1 = 4 carries N1 for agent 1, x2 = 11 carries N2 for agent 2.
  CHECK(r.file.instance.profit(0, 4) == 256);
  CHECK(r.file.instance.profit(1, 11) == 257);
  CHECK(r.file.instance.graph().adjacent(0, 11));
  CHECK(!r.file.instance.graph().adjacent(0, 4));

  OracleOptions fast;
  fast.enumerate_profiles = false;
  CHECK(brute_force(r.file.instance, fast).optimum >= r.params.q);
  const Graph k4_minus = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(brute_force(gen_clique_reduction(k4_minus, 4 - 1, 2).file.instance, fast).optimum >= 269);
  const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  const CliqueReduction s = gen_clique_reduction(star, 3, 2);
  CHECK(brute_force(s.file.instance, fast).optimum < s.params.q);
}

TEST_CASE("dispatch") {
  const InstanceFile p4 = read_instance_file(data("p4.txt"));
  CHECK(solve_dispatch(p4, {}).value == 2);
  SolveRequest cocomp;
  cocomp.algorithm = Algorithm::Cocomparability;
  CHECK(solve_dispatch(p4, cocomp).value == 2);

  // Subdivided claw: a tree, so chordal, but with an asteroidal triple.
  InstanceFile spider;
  spider.instance = testsupport::uniform_instance(make_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}), 2);
  CHECK(choose_algorithm(spider, 1000) == Algorithm::Chordal);
  CHECK(code_of([&] { solve_dispatch(spider, cocomp); }) == ErrorCode::NotCocomparability);
  SolveRequest bic;
  bic.algorithm = Algorithm::Biconvex;
  CHECK(code_of([&] { solve_dispatch(spider, bic); }) == ErrorCode::NoApplicableAlgorithm);

  const Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  InstanceFile c4f;
  c4f.instance = testsupport::uniform_instance(c4, 2);
  CHECK(choose_algorithm(c4f, 1000) == Algorithm::Cocomparability);
  const Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  InstanceFile c5f;
  c5f.instance = testsupport::uniform_instance(c5, 2);
  CHECK(choose_algorithm(c5f, 1000) == Algorithm::Treewidth);
  const InstanceFile dense = gen_family("random", 40, 3, 5, 1);
  CHECK(code_of([&] { choose_algorithm(dense, 1000); }) == ErrorCode::NoApplicableAlgorithm);
  SolveRequest tiny;
  tiny.algorithm = Algorithm::BruteForce;
  tiny.budget = 100;
  CHECK(code_of([&] { solve_dispatch(dense, tiny); }) == ErrorCode::BudgetExceeded);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const InstanceFile f = gen_family("chordal", 8, 2, 20, seed);
    SolveRequest approx;
    approx.epsilon = "0.25";
    const SolveReport r = solve_dispatch(f, approx);
    REQUIRE(r.epsilon);
    CHECK(*r.epsilon == "0.25");
    const Profit z = brute_force(f.instance).optimum;
    CHECK(r.value <= z);
    CHECK(r.value * 1.25 >= static_cast<double>(z));
  }
  SolveRequest both;
  both.epsilon = "0.5";
  both.keep_profiles = true;
  CHECK(code_of([&] { solve_dispatch(p4, both); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("reports") {
  const InstanceFile f = read_instance_file(data("c4_biconvex.txt"));
  SolveRequest req;
  req.keep_profiles = true;
  const SolveReport r = solve_dispatch(f, req);
  CHECK(r.profiles->size() == static_cast<std::size_t>(*r.profile_count));
  CHECK(std::is_sorted(r.profiles->begin(), r.profiles->end()));
  CHECK(std::set<ProfitProfile>(r.profiles->begin(), r.profiles->end()) == testsupport::all_profiles(f.instance));

  const SolveReport back = report_from_json(report_to_json(r));
  CHECK(back.value == r.value);
  CHECK(back.coloring == r.coloring);
  CHECK(back.profile == r.profile);
  CHECK(back.algorithm == r.algorithm);
  CHECK(back.profile_count == r.profile_count);
  CHECK_NOTHROW(validate_report(f.instance, back));

  SolveReport bad = r;
  bad.coloring = {1, 1, 0, 0};
  CHECK(code_of([&] { validate_report(f.instance, bad); }) == ErrorCode::InvalidArgument);
  bad = r;
  bad.value += 1;
  CHECK(code_of([&] { validate_report(f.instance, bad); }) == ErrorCode::InvalidArgument);
  bad = r;
  bad.profile[0] += 1;
  CHECK(code_of([&] { validate_report(f.instance, bad); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { report_from_json("{\"value\": "); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { report_from_json("[1,2]"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("golden reports") {
  const std::vector<std::pair<std::string, Algorithm>> cases{{"p4", Algorithm::Auto},
                                                             {"p4", Algorithm::Cocomparability},
                                                             {"c4_biconvex", Algorithm::Auto},
                                                             {"c4_biconvex", Algorithm::Biconvex},
                                                             {"declared_td", Algorithm::Auto},
                                                             {"k2", Algorithm::Auto}};
  for (const auto& [name, algo] : cases) {
    const InstanceFile f = read_instance_file(data(name + ".txt"));
    SolveRequest req;
    req.algorithm = algo;
    req.prune = true;
    const std::string json = report_to_json(solve_dispatch(f, req), false);
    CHECK(json == read_text_file(data(name + "." + std::string(algorithm_name(algo)) + ".json")));
    CHECK(solve_dispatch(f, req).value == brute_force(f.instance).optimum);
  }
}
