#include <doctest.h>

#include <sstream>

#include "digitop/generators.hpp"
#include "digitop/io.hpp"
#include "digitop/space.hpp"

using namespace digitop;

namespace {

DigitalSpace square() {
  return DigitalSpace::from_labels({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

}  // namespace

TEST_CASE("vertex sets behave like small bitsets") {
  VertexSet s{1, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.front() == 1);
  CHECK(s.with(2).size() == 4);
  CHECK(s.without(1) == VertexSet{3, 5});
  CHECK((s & VertexSet{3, 4}) == VertexSet::single(3));
  CHECK((s - VertexSet{1}) == VertexSet{3, 5});
  CHECK(VertexSet{3}.subset_of(s));
  CHECK(VertexSet::first(4) == VertexSet{0, 1, 2, 3});
  CHECK(VertexSet::first(64).size() == 64);
  std::vector<Vertex> listed(s.begin(), s.end());
  CHECK(listed == std::vector<Vertex>{1, 3, 5});
}

TEST_CASE("construction validates its input") {
  CHECK_THROWS_AS(DigitalSpace::from_labels({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(DigitalSpace::from_labels({"a"}, {{"a", "a"}}), Error);
  CHECK_THROWS_AS(DigitalSpace::from_labels({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(DigitalSpace::from_labels({"a", "b"}, {{"a", "x"}}), Error);
  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS_AS(DigitalSpace::from_labels(many, {}), Error);

  auto g = square();
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.index_of("c") == 2);
  CHECK_FALSE(g.find("z").has_value());
  CHECK_THROWS_WITH_AS(g.index_of("z"), doctest::Contains("unknown vertex 'z'"), Error);
  CHECK(g.adjacent(0, 3));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("subspaces: induced, rim, ball, joint rim") {
  auto g = square();
  CHECK(rim(g, 0).labels() == std::vector<std::string>{"b", "d"});
  CHECK(rim(g, 0).edge_count() == 0);
  CHECK(ball(g, 0).size() == 3);
  CHECK(ball(g, 0).edge_count() == 2);
  CHECK(joint_rim(g, 0, 2).labels() == std::vector<std::string>{"b", "d"});
  CHECK(joint_rim(g, 0, 1).empty());
  CHECK_THROWS_AS(joint_rim(g, 1, 1), Error);
  auto sub = induced(g, VertexSet{0, 1, 2});
  CHECK(sub.edge_count() == 2);
}

TEST_CASE("join adds every cross edge") {
  auto a = complete_graph(2);
  auto b = prefixed(path_graph(3), "x");
  auto j = join(a, b);
  CHECK(j.size() == 5);
  CHECK(j.edge_count() == 1 + 2 + 2 * 3);
  CHECK_THROWS_AS(join(a, a), Error);
  CHECK(join(DigitalSpace{}, a) == a);
}

TEST_CASE("surgery") {
  auto g = square();
  auto h = delete_edges(g, {Edge(0, 1)});
  CHECK(h.edge_count() == 3);
  CHECK(add_edges(h, {Edge(0, 1)}) == g);
  auto coned = attach_point(g, "z", g.all());
  CHECK(coned.size() == 5);
  CHECK(coned.degree(4) == 4);
  CHECK(delete_point(coned, 4) == g);
  CHECK_THROWS_AS(attach_point(g, "a", {}), Error);
}

TEST_CASE("components and separations") {
  auto g = square();
  auto comps = connected_components(g, VertexSet{0, 2});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0});
  CHECK(is_connected(g));
  CHECK_FALSE(is_connected(g, VertexSet{0, 2}));

  auto sep = find_separation(g, VertexSet{1, 3});
  REQUIRE(sep.has_value());
  CHECK(sep->left == VertexSet{0});
  CHECK(sep->right == VertexSet{2});
  CHECK(is_separation(g, sep->left, sep->partition, sep->right));
  CHECK_FALSE(find_separation(g, VertexSet{1}).has_value());
  CHECK_THROWS_AS(is_separation(g, VertexSet{0}, VertexSet{1}, VertexSet{2}), Error);

  // The three-component case puts everything past the first component right.
  auto star = DigitalSpace::from_labels({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
  auto s3 = find_separation(star, VertexSet{0});
  REQUIRE(s3.has_value());
  CHECK(s3->left == VertexSet{1});
  CHECK(s3->right == VertexSet{2, 3});
}

TEST_CASE("graph formats") {
  const auto g = square();
  SUBCASE("json round trip") {
    CHECK(parse_graph(to_json(g).dump()) == g);
  }
  SUBCASE("edge list round trip") {
    CHECK(parse_graph(to_edge_list(g)) == g);
  }
  SUBCASE("edge list with comments and isolated points") {
    auto h = parse_edge_list("# two components\na b\n\nc\n  # indented comment\nb d\n");
    CHECK(h.labels() == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(h.edge_count() == 2);
    CHECK(h.degree(2) == 0);
  }
  SUBCASE("errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_edge_list("a b\nb c d\n"), doctest::Contains("line 2"), InputError);
    CHECK_THROWS_AS(parse_edge_list("a b\nb a\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("a a\n"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a"], "edges": [["a", "b"]]})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a", "a"], "edges": []})"), InputError);
    CHECK_THROWS_AS(parse_graph(R"({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})"),
                    InputError);
    CHECK_THROWS_AS(parse_graph("{not json"), InputError);
  }
  SUBCASE("stdin") {
    std::istringstream in("x y\n");
    CHECK(read_graph("-", in).size() == 2);
  }
  SUBCASE("missing file") {
    std::istringstream in;
    CHECK_THROWS_AS(read_graph("/nonexistent/graph.json", in), InputError);
  }
}

TEST_CASE("subspace and surgery laws (property)") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_space(seed, 1 + seed % 9, 0.5);
    CHECK(induced(g, g.all()) == g);
    CHECK(delete_point(attach_point(g, "new", VertexSet(seed % 7) & g.all()), g.size()) == g);
    for (Vertex v = 0; v < g.size(); ++v) {
      auto r = rim(g, v);
      CHECK_FALSE(r.find(g.label(v)).has_value());
      CHECK(ball(g, v) == induced(g, g.neighbors(v).with(v)));
    }
    auto comps = connected_components(g);
    if (comps.size() >= 2) {
      auto sep = find_separation(g, VertexSet{});
      REQUIRE(sep.has_value());
      CHECK(is_separation(g, sep->left, sep->partition, sep->right));
    }
    for (Vertex v = 0; v < g.size(); ++v) {
      if (auto sep = find_separation(g, VertexSet::single(v))) {
        CHECK(is_separation(g, sep->left, sep->partition, sep->right));
      }
    }
  }
}

TEST_CASE("join edge count and associativity") {
  auto a = prefixed(cycle_graph(4), "a");
  auto b = prefixed(path_graph(3), "b");
  auto c = prefixed(random_space(3, 5, 0.5), "c");
  auto ab = join(a, b);
  CHECK(ab.edge_count() == a.edge_count() + b.edge_count() + a.size() * b.size());
  CHECK(are_isomorphic(join(ab, c), join(a, join(b, c))));
}
