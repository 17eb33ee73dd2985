#include <doctest.h>

#include <random>
#include <set>

#include "digitop/generators.hpp"
#include "oracles.hpp"

using namespace digitop;

TEST_CASE("minimal spheres and disks") {
  for (int n = 0; n <= 5; ++n) {
    auto s = minimal_sphere(n);
    const std::size_t v = 2 * static_cast<std::size_t>(n) + 2;
    CHECK(s.size() == v);
    CHECK(s.edge_count() == v * (v - 1) / 2 - (v / 2));
    CHECK(minimal_disk(n).size() == v - 1);
  }
  CHECK_THROWS_AS(minimal_sphere(-1), Error);
}

TEST_CASE("fixed shapes") {
  auto ico = icosahedron();
  CHECK(ico.size() == 12);
  CHECK(ico.edge_count() == 30);
  for (Vertex v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
  auto t = torus_grid(4, 4);
  CHECK(t.size() == 16);
  CHECK(t.edge_count() == 48);
  for (Vertex v = 0; v < 16; ++v) CHECK(t.degree(v) == 6);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(suspension(cycle_graph(4)).size() == 6);
  CHECK(are_isomorphic(suspension(cycle_graph(4)), minimal_sphere(2)));
  CHECK(named_space("cycle7") == cycle_graph(7));
  CHECK_THROWS_AS(named_space("klein"), Error);
}

TEST_CASE("random spaces are reproducible") {
  CHECK(random_space(42, 10, 0.5) == random_space(42, 10, 0.5));
  CHECK_FALSE(random_space(42, 10, 0.5) == random_space(43, 10, 0.5));
  CHECK(random_space(1, 8, 0.0).edge_count() == 0);
  CHECK(random_space(1, 8, 1.0).edge_count() == 28);
  CHECK_THROWS_AS(random_space(1, 8, 1.5), Error);
}

TEST_CASE("canonical form is a complete isomorphism invariant on small graphs") {
  std::mt19937_64 rng(9);
  std::set<CanonicalForm> forms;
  std::size_t count = 0;
  enumerate_connected_graphs(6, [&](const DigitalSpace& g) {
    auto form = canonical_form(g);
    forms.insert(form);
    ++count;
    for (int i = 0; i < 3; ++i) CHECK(canonical_form(oracle::shuffled(g, rng)) == form);
  });
  CHECK(forms.size() == count);
  auto s = minimal_sphere(3);
  CHECK(are_isomorphic(s, oracle::shuffled(s, rng)));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), join(complete_graph(3), DigitalSpace::from_labels({"x", "y", "z"}, {}))));
}

TEST_CASE("connected graph counts") {
  // Counted by brute force: every labeled graph on n vertices, connected,
  // bucketed by canonical form.
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<CanonicalForm> forms;
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    for (Mask m = 0; m < (Mask{1} << slots.size()); ++m) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((m >> i) & 1U) edges.push_back(slots[i]);
      }
      auto g = DigitalSpace::from_indices(labels, edges);
      if (is_connected(g)) forms.insert(canonical_form(g));
    }
    std::size_t enumerated = 0;
    enumerate_connected_graphs(n, [&](const DigitalSpace& g) { enumerated += g.size() == n ? 1 : 0; });
    CHECK(enumerated == forms.size());
  }
  std::vector<std::size_t> per_size(8, 0);
  enumerate_connected_graphs(7, [&](const DigitalSpace& g) { ++per_size[g.size()]; });
  CHECK(per_size == std::vector<std::size_t>{0, 1, 1, 2, 6, 21, 112, 853});
}

TEST_CASE("fixture recipes") {
  FixtureSpec s{"s2", recipe::MinimalSphere{2}};
  CHECK(s.build() == minimal_sphere(2));
  auto base = std::make_shared<FixtureSpec>(s);
  FixtureSpec r{"r", recipe::RTransformed{base, "a0", "a1"}};
  CHECK(r.build().size() == 7);
  FixtureSpec j{"j", recipe::Join{{FixtureSpec{"p", recipe::MinimalSphere{0}}, FixtureSpec{"c", recipe::Named{"cycle5"}}}}};
  auto built = j.build();
  CHECK(built.size() == 7);
  CHECK(are_isomorphic(built, suspension(cycle_graph(5))));
  FixtureSpec c{"c", recipe::Cone{base}};
  CHECK(c.build().size() == 7);
}

TEST_CASE("suspending a minimal sphere gives the next one") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(are_isomorphic(join(prefixed(minimal_sphere(0), "p"), minimal_sphere(n)), minimal_sphere(n + 1)));
  }
}

TEST_CASE("fixture specs rebuild isomorphic spaces") {
  auto s2 = std::make_shared<FixtureSpec>(FixtureSpec{"s2", recipe::MinimalSphere{2}});
  auto d2 = std::make_shared<FixtureSpec>(FixtureSpec{"d2", recipe::MinimalDisk{2}});
  std::map<std::string, std::string> identity{{"a0", "a0"}, {"b0", "b0"}, {"a1", "a1"}, {"b1", "b1"}};
  std::vector<FixtureSpec> specs{
      *s2,
      FixtureSpec{"cone", recipe::Cone{s2}},
      FixtureSpec{"glued", recipe::Glued{d2, d2, identity}},
      FixtureSpec{"r", recipe::RTransformed{s2, "a0", "a1"}},
      FixtureSpec{"ico", recipe::Named{"icosahedron"}},
  };
  for (const auto& spec : specs) CHECK(are_isomorphic(spec.build(), spec.build()));
  CHECK(are_isomorphic(specs[2].build(), minimal_sphere(2)));
}
