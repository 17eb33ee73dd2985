#include <doctest.h>

#include <random>

#include "digitop/classifier.hpp"
#include "digitop/generators.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/invariants.hpp"
#include "oracles.hpp"

using namespace digitop;

TEST_CASE("minimal spheres are recognized at exactly their dimension") {
  for (int n = 0; n <= 4; ++n) {
    auto s = minimal_sphere(n);
    CHECK(s.size() == static_cast<std::size_t>(2 * n + 2));
    CHECK(is_n_sphere(s, n));
    CHECK_FALSE(is_n_sphere(s, n + 1));
    if (n > 0) CHECK_FALSE(is_n_sphere(s, n - 1));
  }
}

TEST_CASE("other spheres") {
  CHECK(is_n_sphere(icosahedron(), 2));
  CHECK(is_n_sphere(suspension(cycle_graph(7)), 2));
  CHECK(is_n_sphere(suspension(icosahedron()), 3));
  CHECK(is_n_sphere(cycle_graph(9), 1));
  CHECK_FALSE(is_n_sphere(cycle_graph(3), 1));
  CHECK_FALSE(is_n_sphere(torus_grid(4, 4), 2));
  CHECK_FALSE(is_n_sphere(complete_graph(2), 0));
}

TEST_CASE("disks") {
  for (int n = 0; n <= 3; ++n) {
    auto d = minimal_disk(n);
    auto c = is_n_disk(d, n);
    REQUIRE(c);
    CHECK(c.interior == std::vector<std::string>{"a" + std::to_string(n)});
    CHECK(c.boundary.size() == d.size() - 1);
  }
  auto wheel = cone(cycle_graph(5));
  auto c = is_n_disk(wheel, 2);
  REQUIRE(c);
  CHECK(c.interior == std::vector<std::string>{"apex"});
  CHECK(c.boundary.size() == 5);
  CHECK(is_n_disk(path_graph(5), 1));
  CHECK_FALSE(is_n_disk(cycle_graph(5), 1));
  CHECK_FALSE(is_n_disk(cone(cycle_graph(5)), 1));
  CHECK_FALSE(is_n_disk(minimal_sphere(2), 2));
}

TEST_CASE("sphere minus a point is a disk bounded by the rim") {
  for (const auto& s : {minimal_sphere(1), minimal_sphere(2), minimal_sphere(3), icosahedron()}) {
    const int n = s.size() == 12 ? 2 : static_cast<int>(s.size() / 2) - 1;
    for (Vertex v = 0; v < s.size(); ++v) {
      auto d = delete_point(s, v);
      CHECK(oracle::contractible(d));
      auto c = is_n_disk(d, n);
      REQUIRE(c);
      auto rim_labels = s.labels_of(s.neighbors(v));
      std::sort(rim_labels.begin(), rim_labels.end());
      auto b = c.boundary;
      std::sort(b.begin(), b.end());
      CHECK(b == rim_labels);
    }
  }
}

TEST_CASE("manifolds") {
  CHECK(is_n_manifold(torus_grid(4, 4), 2));
  CHECK(is_n_manifold(minimal_sphere(3), 3));
  CHECK_FALSE(is_n_manifold(minimal_disk(2), 2));
  CHECK_THROWS_AS(is_n_manifold(cycle_graph(5), 1), Error);
  auto annulus = delete_point(delete_point(torus_grid(4, 4), 0), 0);
  CHECK_FALSE(is_n_manifold(annulus, 2));
  auto mwb = is_manifold_with_boundary(minimal_disk(2), 2);
  REQUIRE(mwb);
  CHECK(mwb.kind == Kind::manifold_with_boundary);
}

TEST_CASE("closed curves") {
  CHECK(is_closed_curve(cycle_graph(4)));
  CHECK_FALSE(is_closed_curve(cycle_graph(3)));
  CHECK_FALSE(is_closed_curve(path_graph(5)));
}

TEST_CASE("classify picks the strongest description") {
  auto sphere = classify(minimal_sphere(2));
  CHECK(sphere.kind == Kind::sphere);
  CHECK(sphere.n == 2);
  CHECK(classify(minimal_sphere(0)).kind == Kind::sphere);
  CHECK(classify(minimal_disk(2)).kind == Kind::disk);
  CHECK(classify(cone(cycle_graph(6))).kind == Kind::disk);
  CHECK(classify(torus_grid(4, 4)).kind == Kind::manifold);
  CHECK(classify(complete_graph(2)).kind == Kind::none);
  CHECK(classify(complete_graph(3)).kind == Kind::none);
  auto json = to_json(sphere);
  CHECK(json["kind"] == "sphere");
  CHECK(json["n"] == 2);
  CHECK(to_json(classify(complete_graph(2))).contains("n") == false);
}

TEST_CASE("gluing minimal disks along their boundary gives the minimal sphere") {
  for (int n = 1; n <= 3; ++n) {
    auto d = minimal_disk(n);
    std::map<std::string, std::string> identity;
    for (const auto& l : d.labels()) {
      if (l != "a" + std::to_string(n)) identity[l] = l;
    }
    auto glued = glue_disks(d, d, identity);
    CHECK(are_isomorphic(glued, minimal_sphere(n)));
  }
  auto d = minimal_disk(2);
  CHECK_THROWS_AS(glue_disks(d, d, {{"a0", "a0"}}), Error);
}

TEST_CASE("classification is invariant under relabeling (property)") {
  std::mt19937_64 rng(5);
  for (const auto& g : {minimal_sphere(2), icosahedron(), minimal_disk(3), torus_grid(3, 4)}) {
    const auto base = classify(g);
    for (int i = 0; i < 4; ++i) {
      auto c = classify(oracle::shuffled(g, rng));
      CHECK(c.kind == base.kind);
      CHECK(c.n == base.n);
    }
  }
}

namespace {

std::vector<std::pair<DigitalSpace, int>> sphere_fixtures() {
  auto s2 = minimal_sphere(2);
  return {{minimal_sphere(1), 1},           {cycle_graph(6), 1},
          {minimal_sphere(2), 2},           {suspension(cycle_graph(5)), 2},
          {icosahedron(), 2},               {r_transform(s2, 0, 2, "z"), 2},
          {minimal_sphere(3), 3},           {suspension(suspension(cycle_graph(6))), 3}};
}

}  // namespace

TEST_CASE("spheres have no simple points and the expected Euler characteristic") {
  for (const auto& [s, n] : sphere_fixtures()) {
    REQUIRE(is_n_sphere(s, n));
    CHECK(euler_characteristic(s) == (n % 2 == 0 ? 2 : 0));
    for (Vertex v = 0; v < s.size(); ++v) CHECK_FALSE(is_simple_point(s, v));
    for (Vertex v = 0; v < s.size(); ++v) {
      auto d = delete_point(s, v);
      REQUIRE(is_n_disk(d, n));
      CHECK(euler_characteristic(d) == 1);
    }
  }
}

TEST_CASE("a manifold contains no other manifold of its dimension") {
  // Every proper induced subspace of a verified n-manifold fails to be one.
  std::vector<std::pair<DigitalSpace, int>> manifolds{
      {minimal_sphere(2), 2}, {suspension(cycle_graph(5)), 2}, {icosahedron(), 2}, {minimal_sphere(3), 3}};
  for (const auto& [m, n] : manifolds) {
    Recognizer r(m);
    REQUIRE(r.manifold(m.all(), n));
    for (Mask s = 1; s < m.all().bits(); ++s) CHECK_FALSE(r.manifold(VertexSet(s), n));
  }
}

TEST_CASE("collapsing a contractible piece of the boundary keeps the invariants") {
  std::vector<std::pair<DigitalSpace, int>> mwbs{{minimal_disk(2), 2}, {cone(cycle_graph(6)), 2}, {minimal_disk(3), 3}};
  for (const auto& [m, n] : mwbs) {
    auto c = is_manifold_with_boundary(m, n);
    REQUIRE(c);
    const VertexSet boundary = m.set_of(c.boundary);
    const long long chi = euler_characteristic(m);
    const auto betti = betti_numbers(m).betti;
    // Every contractible induced subspace of the boundary.
    for (Mask x = 1; x <= boundary.bits(); ++x) {
      if (!VertexSet(x).subset_of(boundary) || VertexSet(x) == boundary) continue;
      if (!contractible(induced(m, VertexSet(x)))) continue;
      auto rest = induced(m, m.all() - VertexSet(x));
      CHECK(euler_characteristic(rest) == chi);
      CHECK(betti_numbers(rest).betti[0] == betti[0]);
    }
    // The interior alone.
    CHECK(euler_characteristic(induced(m, m.set_of(c.interior))) == chi);
  }
}

TEST_CASE("contractible partition law on small graphs") {
  // For a separation A, C, B with C contractible: the whole is contractible
  // iff A+C and C+B are.
  std::size_t instances = 0;
  enumerate_connected_graphs(6, [&](const DigitalSpace& g) {
    for (Mask c = 1; c < g.all().bits(); ++c) {
      const VertexSet cs(c);
      auto sep = find_separation(g, cs);
      if (!sep || !contractible(induced(g, cs))) continue;
      ++instances;
      const bool whole = contractible(g);
      const bool parts = contractible(induced(g, sep->left | cs)) && contractible(induced(g, sep->right | cs));
      CHECK(whole == parts);
    }
  });
  CHECK(instances > 100);
}

TEST_CASE("a manifold is a sphere iff removing a contractible piece leaves a contractible space") {
  std::vector<std::pair<DigitalSpace, int>> manifolds{
      {minimal_sphere(2), 2}, {icosahedron(), 2}, {torus_grid(4, 4), 2}, {minimal_sphere(3), 3}};
  for (const auto& [m, n] : manifolds) {
    const bool sphere = static_cast<bool>(is_n_sphere(m, n));
    // Balls of vertices and single edges are contractible.
    for (Vertex v = 0; v < m.size(); ++v) {
      const VertexSet b = m.neighbors(v).with(v);
      CHECK(contractible(delete_point(m, v)) == sphere);
      REQUIRE(contractible(induced(m, b)));
      CHECK(contractible(induced(m, m.all() - b)) == sphere);
    }
  }
}

TEST_CASE("R-transformation keeps manifolds and non-manifolds apart") {
  std::vector<std::pair<DigitalSpace, int>> spaces{
      {minimal_sphere(2), 2}, {icosahedron(), 2}, {torus_grid(3, 4), 2}, {minimal_disk(2), 2}, {minimal_sphere(3), 3}};
  for (const auto& [m, n] : spaces) {
    const bool manifold = static_cast<bool>(is_n_manifold(m, n));
    for (const Edge& e : m.edges()) {
      auto r = r_transform(m, e.first, e.second, "z");
      CHECK(static_cast<bool>(is_n_manifold(r, n)) == manifold);
      CHECK(r_inverse(r, r.index_of("z"), e.first, e.second) == m);
    }
  }
}
