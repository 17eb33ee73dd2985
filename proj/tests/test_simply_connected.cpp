#include <doctest.h>

#include <random>

#include "digitop/generators.hpp"
#include "digitop/simply_connected.hpp"
#include "oracles.hpp"

using namespace digitop;

TEST_CASE("closed curve enumeration matches brute force") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_space(rng(), 4 + rng() % 5, 0.5);
    for (CurveMode mode : {CurveMode::induced_only, CurveMode::all_subgraph}) {
      auto curves = closed_curves(g, mode, g.size());
      CHECK(curves.size() == oracle::count_curves(g, mode == CurveMode::induced_only));
      for (const auto& c : curves) {
        CHECK(c.cycle.size() >= 4);
        CHECK(c.cycle.front() == *std::min_element(c.cycle.begin(), c.cycle.end()));
        CHECK(c.cycle[1] < c.cycle.back());
        for (const Edge& e : c.edges()) CHECK(g.contains_edge(e.first, e.second));
      }
    }
  }
  CHECK(closed_curves(complete_graph(4), CurveMode::all_subgraph, 4).size() == 3);
  CHECK(closed_curves(complete_graph(4), CurveMode::induced_only, 4).empty());
  CHECK(closed_curves(cycle_graph(8), CurveMode::induced_only, 7).empty());
  CHECK(closed_curves(cycle_graph(8), CurveMode::induced_only, 8).size() == 1);
  CHECK_THROWS_AS(closed_curves(cycle_graph(8), CurveMode::all_subgraph, 3), Error);
}

TEST_CASE("verdicts on standard spaces") {
  for (CurveMode mode : {CurveMode::induced_only, CurveMode::all_subgraph}) {
    CAPTURE(to_string(mode));
    CHECK(is_simply_connected(minimal_sphere(2), mode).verdict == Verdict::simply_connected);
    CHECK(is_simply_connected(minimal_sphere(3), mode).verdict == Verdict::simply_connected);
    CHECK(is_simply_connected(cone(cycle_graph(7)), mode).verdict == Verdict::simply_connected);
    CHECK(is_simply_connected(complete_graph(6), mode).verdict == Verdict::simply_connected);
    CHECK(is_simply_connected(cycle_graph(4), mode).verdict == Verdict::not_simply_connected);
    CHECK(is_simply_connected(cycle_graph(9), mode).verdict == Verdict::not_simply_connected);
  }
  CHECK(is_simply_connected(icosahedron()).verdict == Verdict::simply_connected);
  auto torus = is_simply_connected(torus_grid(4, 4));
  CHECK(torus.verdict == Verdict::not_simply_connected);
  REQUIRE(torus.failures.size() == 1);
  CHECK(torus.failures[0].proof.starts_with("homology"));
  CHECK_THROWS_AS(is_simply_connected(minimal_sphere(0)), Error);
  CHECK_THROWS_AS(is_simply_connected(DigitalSpace{}), Error);
}

TEST_CASE("a short length cap can only give unknown or a refutation") {
  SearchCaps caps;
  caps.max_length = 5;
  auto report = is_simply_connected(cone(cycle_graph(7)), CurveMode::all_subgraph, caps);
  CHECK(report.verdict == Verdict::unknown);
  CHECK_FALSE(report.enumeration_exhaustive);
  auto cycle = is_simply_connected(cycle_graph(5), CurveMode::all_subgraph, caps);
  CHECK(cycle.verdict == Verdict::not_simply_connected);
}

TEST_CASE("witness search outcomes") {
  SUBCASE("small enumeration refutes") {
    // A square with a bridge x-y across it: every subgraph containing the
    // square has Euler characteristic 0 or -1.
    auto g = DigitalSpace::from_labels(
        {"a", "b", "c", "d", "x", "y"},
        {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "x"}, {"b", "x"}, {"c", "y"}, {"d", "y"}, {"x", "y"}});
    auto r = find_contractible_witness(g, ClosedCurve{{0, 1, 2, 3}}, 1U << 16);
    CHECK(r.outcome == WitnessOutcome::refuted);
    CHECK(r.method == "exhaustive_enumeration");
  }
  SUBCASE("zero budget leaves a bounding curve unresolved") {
    // Zigzag between the two rings of the icosahedron: no cone point, and
    // too many subgraphs for the small enumeration.
    auto ico = icosahedron();
    ClosedCurve zigzag{{1, 7, 2, 8, 3, 9, 4, 10, 5, 6}};
    for (const Edge& e : zigzag.edges()) REQUIRE(ico.contains_edge(e.first, e.second));
    auto starved = find_contractible_witness(ico, zigzag, 0);
    CHECK(starved.outcome == WitnessOutcome::exhausted);
    CHECK(starved.method == "budget");
    auto generous = find_contractible_witness(ico, zigzag, 1U << 16);
    REQUIRE(generous.outcome == WitnessOutcome::found);
    CHECK(check_witness(ico, zigzag, *generous.witness));
  }
}

TEST_CASE("witnesses are independently checkable") {
  auto s = minimal_sphere(2);
  auto report = is_simply_connected(s, CurveMode::all_subgraph);
  REQUIRE(report.verdict == Verdict::simply_connected);
  CHECK(report.witnesses.size() == report.curves_total);
  for (const auto& [curve, witness] : report.witnesses) CHECK(check_witness(s, curve, witness));

  ClosedCurve equator{{0, 2, 1, 3}};
  Subgraph just_curve{equator.vertices(), equator.edges()};
  CHECK_FALSE(check_witness(s, equator, just_curve));
  Subgraph missing_edge{VertexSet{0, 1, 2, 3, 4}, {Edge(0, 2), Edge(1, 2), Edge(1, 3)}};
  CHECK_FALSE(check_witness(s, equator, missing_edge));
}

TEST_CASE("witness search agrees with exhaustive subgraph search on small spaces") {
  // Exhaustive search over every subgraph containing the curve decides the
  // question; the staged search must reach the same answer.
  auto exhaustive = [](const DigitalSpace& g, const ClosedCurve& c) {
    const auto ce = c.edges();
    const Mask cm = c.vertices().bits();
    for (Mask vs = cm; vs < (Mask{1} << g.size()); vs = ((vs + 1) | cm)) {
      if ((vs & cm) != cm) continue;
      std::vector<Edge> free;
      for (const Edge& e : g.edges_within(VertexSet(vs))) {
        if (std::find(ce.begin(), ce.end(), e) == ce.end()) free.push_back(e);
      }
      for (Mask keep = 0; keep < (Mask{1} << free.size()); ++keep) {
        std::vector<Edge> edges = ce;
        for (std::size_t i = 0; i < free.size(); ++i) {
          if ((keep >> i) & 1U) edges.push_back(free[i]);
        }
        if (oracle::contractible(Subgraph{VertexSet(vs), edges}.materialize(g))) return true;
      }
    }
    return false;
  };
  std::mt19937_64 rng(4);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 120; ++trial) {
    auto g = random_space(rng(), 5 + rng() % 3, 0.45);
    for (const auto& c : closed_curves(g, CurveMode::all_subgraph, g.size())) {
      auto r = find_contractible_witness(g, c, 1U << 16);
      REQUIRE(r.outcome != WitnessOutcome::exhausted);
      CHECK((r.outcome == WitnessOutcome::found) == exhaustive(g, c));
      if (r.witness) CHECK(check_witness(g, c, *r.witness));
      ++checked;
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("report JSON") {
  auto report = is_simply_connected(cycle_graph(4));
  Json j = to_json(cycle_graph(4), report);
  CHECK(j["verdict"] == "not_simply_connected");
  CHECK(j["failures"][0]["curve"] == Json::array({"c0", "c1", "c2", "c3"}));
  CHECK(j["failures"][0]["proof"] == "exhaustive_enumeration");
  CHECK(curve_mode_from_string("induced") == CurveMode::induced_only);
  CHECK_THROWS_AS(curve_mode_from_string("some"), Error);
}

TEST_CASE("sphere separation theorem on the minimal 3-sphere") {
  auto s = minimal_sphere(3);
  // Dropping one antipodal pair leaves an induced octahedron.
  auto equator = s.all().without(0).without(1);
  auto report = verify_sphere_separation_theorem(s, equator);
  REQUIRE(report.separation.has_value());
  CHECK(report.separation->left == VertexSet{0});
  CHECK(report.separation->right == VertexSet{1});
  auto holds = report.holds();
  REQUIRE(holds.has_value());
  CHECK(*holds);
  CHECK(report.checks.size() == 5);
  CHECK_THROWS_AS(verify_sphere_separation_theorem(s, VertexSet{0, 1, 2, 3}), Error);
  CHECK_THROWS_AS(verify_sphere_separation_theorem(torus_grid(4, 4), VertexSet{0}), Error);
}

TEST_CASE("Poincare reports") {
  auto sphere = verify_poincare_3d(minimal_sphere(3));
  CHECK(sphere.manifold);
  CHECK(sphere.status == ImplicationStatus::holds);
  auto torus = verify_poincare_2d(torus_grid(4, 4));
  CHECK(torus.manifold);
  CHECK(torus.simply_connected == Verdict::not_simply_connected);
  CHECK(torus.status == ImplicationStatus::vacuous);
  auto disk = verify_poincare_2d(minimal_disk(2));
  CHECK_FALSE(disk.manifold);
  CHECK(disk.status == ImplicationStatus::vacuous);
  Json j = to_json(sphere);
  CHECK(j["status"] == "holds");
  CHECK(j["sphere"] == true);
}

TEST_CASE("larger caps never flip a positive verdict") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_space(rng(), 5 + rng() % 4, 0.5);
    if (!is_connected(g)) continue;
    SearchCaps small;
    small.max_length = 5;
    small.budget = 8;
    SearchCaps large;
    const auto a = is_simply_connected(g, CurveMode::all_subgraph, small).verdict;
    const auto b = is_simply_connected(g, CurveMode::all_subgraph, large).verdict;
    CHECK(b != Verdict::unknown);
    if (a != Verdict::unknown) CHECK(a == b);
  }
}

TEST_CASE("contractible transformations keep the verdict") {
  std::vector<DigitalSpace> spaces{minimal_sphere(2), suspension(cycle_graph(6)), cone(cycle_graph(6)),
                                   attach_point(cycle_graph(6), "x", VertexSet{0, 1, 2}),
                                   attach_point(minimal_sphere(2), "x", VertexSet{0})};
  for (const auto& m : spaces) {
    const auto base = is_simply_connected(m, CurveMode::all_subgraph).verdict;
    REQUIRE(base != Verdict::unknown);
    for (Vertex v = 0; v < m.size(); ++v) {
      if (!is_simple_point(m, v)) continue;
      CHECK(is_simply_connected(delete_point(m, v), CurveMode::all_subgraph).verdict == base);
    }
    for (const Edge& e : m.edges()) {
      if (!is_simple_edge(m, e.first, e.second)) continue;
      CHECK(is_simply_connected(delete_edges(m, {e}), CurveMode::all_subgraph).verdict == base);
    }
  }
}
