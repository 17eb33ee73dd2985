#include "digitop/generators.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "digitop/classifier.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/io.hpp"

namespace digitop {

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

DigitalSpace from_rows(const std::vector<Mask>& rows) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < rows.size(); ++u) {
    for (Vertex v : VertexSet(rows[u])) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return DigitalSpace::from_indices(numbered("v", rows.size()), edges);
}

}  // namespace

DigitalSpace minimal_sphere(int n) {
  if (n < 0) throw Error("sphere dimension must be non-negative");
  if (2 * (static_cast<std::size_t>(n) + 1) > kMaxVertices) throw Error("sphere dimension too large");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (int i = 0; i <= n; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i));
  }
  // Vertices 2i and 2i+1 form pair i; every cross-pair edge is present.
  for (Vertex u = 0; u < labels.size(); ++u) {
    for (Vertex v = u + 1; v < labels.size(); ++v) {
      if (u / 2 != v / 2) edges.emplace_back(u, v);
    }
  }
  return DigitalSpace::from_indices(std::move(labels), edges);
}

DigitalSpace minimal_disk(int n) {
  DigitalSpace s = minimal_sphere(n);
  return delete_point(s, s.size() - 1);
}

DigitalSpace cycle_graph(std::size_t length) {
  if (length < 3) throw Error("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < length; ++i) edges.emplace_back(i, (i + 1) % length);
  return DigitalSpace::from_indices(numbered("c", length), edges);
}

DigitalSpace path_graph(std::size_t length) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < length; ++i) edges.emplace_back(i, i + 1);
  return DigitalSpace::from_indices(numbered("p", length), edges);
}

DigitalSpace complete_graph(std::size_t order) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  }
  return DigitalSpace::from_indices(numbered("k", order), edges);
}

DigitalSpace cone(const DigitalSpace& base, const std::string& apex) {
  return attach_point(base, apex, base.all());
}

DigitalSpace suspension(const DigitalSpace& base) {
  // Repeated suspensions get numbered poles.
  std::string suffix;
  for (int i = 1; base.find("north" + suffix) || base.find("south" + suffix); ++i) suffix = std::to_string(i);
  auto poles = DigitalSpace::from_indices({"north" + suffix, "south" + suffix}, {});
  return join(poles, base);
}

DigitalSpace icosahedron() {
  // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= 5; ++i) {
    const Vertex next = i % 5 + 1;
    edges.emplace_back(0, i);
    edges.emplace_back(i, next);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i, next + 5);
    edges.emplace_back(11, i + 5);
    edges.emplace_back(i + 5, next + 5);
  }
  return DigitalSpace::from_indices(numbered("i", 12), edges);
}

DigitalSpace torus_grid(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) throw Error("torus grid needs both sides >= 3");
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) labels.push_back("t" + std::to_string(r) + "_" + std::to_string(c));
  }
  auto at = [&](std::size_t r, std::size_t c) { return (r % rows) * cols + (c % cols); };
  std::set<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      edges.emplace(at(r, c), at(r + 1, c));
      edges.emplace(at(r, c), at(r, c + 1));
      edges.emplace(at(r, c), at(r + 1, c + 1));
    }
  }
  return DigitalSpace::from_indices(std::move(labels), {edges.begin(), edges.end()});
}

DigitalSpace random_space(std::uint64_t seed, std::size_t vertices, double edge_probability) {
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw Error("edge probability must lie in [0, 1]");
  }
  // mt19937_64 output is fixed by the standard; distributions are not, so
  // the uniform draw is done by hand.
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < vertices; ++u) {
    for (Vertex v = u + 1; v < vertices; ++v) {
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < edge_probability) edges.emplace_back(u, v);
    }
  }
  return DigitalSpace::from_indices(numbered("v", vertices), edges);
}

void enumerate_connected_graphs(std::size_t max_vertices,
                                const std::function<void(const DigitalSpace&)>& visit) {
  if (max_vertices > 9) throw Error("exhaustive enumeration is limited to 9 vertices");
  if (max_vertices == 0) return;
  // Every connected graph arises from a connected graph on one vertex fewer
  // by adding a vertex with a nonempty neighborhood (delete a non-cut vertex).
  std::set<CanonicalForm> level{CanonicalForm{1, {0}}};
  for (std::size_t n = 1;; ++n) {
    for (const auto& form : level) visit(from_rows(form.rows));
    if (n == max_vertices) return;
    std::set<CanonicalForm> next;
    for (const auto& form : level) {
      for (Mask nbh = 1; nbh < (Mask{1} << n); ++nbh) {
        std::vector<Mask> rows = form.rows;
        rows.push_back(nbh);
        for (Vertex v : VertexSet(nbh)) rows[v] |= Mask{1} << n;
        next.insert(canonical_form(from_rows(rows)));
      }
    }
    level = std::move(next);
  }
}

std::vector<DigitalSpace> connected_graphs(std::size_t max_vertices) {
  std::vector<DigitalSpace> out;
  enumerate_connected_graphs(max_vertices, [&](const DigitalSpace& g) { out.push_back(g); });
  return out;
}

DigitalSpace named_space(const std::string& name) {
  auto suffix_number = [&](const std::string& stem) -> std::optional<std::size_t> {
    if (!name.starts_with(stem) || name.size() == stem.size()) return std::nullopt;
    std::size_t value = 0;
    for (char ch : name.substr(stem.size())) {
      if (ch < '0' || ch > '9') return std::nullopt;
      value = value * 10 + static_cast<std::size_t>(ch - '0');
    }
    return value;
  };
  if (name == "icosahedron") return icosahedron();
  if (name == "torus4x4") return torus_grid(4, 4);
  if (auto k = suffix_number("cycle")) return cycle_graph(*k);
  if (auto k = suffix_number("path")) return path_graph(*k);
  if (auto k = suffix_number("complete")) return complete_graph(*k);
  throw Error("unknown named space '" + name + "'");
}

DigitalSpace FixtureSpec::build() const {
  return std::visit(
      [](const auto& r) -> DigitalSpace {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, recipe::MinimalSphere>) {
          return minimal_sphere(r.n);
        } else if constexpr (std::is_same_v<T, recipe::MinimalDisk>) {
          return minimal_disk(r.n);
        } else if constexpr (std::is_same_v<T, recipe::Join>) {
          DigitalSpace out;
          for (std::size_t i = 0; i < r.parts.size(); ++i) {
            out = join(out, prefixed(r.parts[i].build(), std::to_string(i) + "."));
          }
          return out;
        } else if constexpr (std::is_same_v<T, recipe::Cone>) {
          return cone(r.base->build());
        } else if constexpr (std::is_same_v<T, recipe::RTransformed>) {
          DigitalSpace base = r.base->build();
          std::string label = "z";
          for (int i = 0; base.find(label); ++i) label = "z" + std::to_string(i);
          return r_transform(base, base.index_of(r.u), base.index_of(r.v), label);
        } else if constexpr (std::is_same_v<T, recipe::Glued>) {
          return glue_disks(r.d->build(), r.e->build(), r.boundary_map);
        } else if constexpr (std::is_same_v<T, recipe::Explicit>) {
          std::ifstream file(r.path);
          if (!file) throw InputError("cannot open '" + r.path + "'");
          std::ostringstream buf;
          buf << file.rdbuf();
          return parse_graph(buf.str());
        } else {
          return named_space(r.name);
        }
      },
      construction);
}

}  // namespace digitop
