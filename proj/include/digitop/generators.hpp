// Fixture construction: minimal spheres and disks, named spaces, joins,
// seeded random spaces, exhaustive small-graph streams, and canonical forms.

#ifndef DIGITOP_GENERATORS_HPP
#define DIGITOP_GENERATORS_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "digitop/space.hpp"

namespace digitop {

/// Join of n+1 copies of S^0; pair i is {a<i>, b<i>}. 2(n+1) vertices.
DigitalSpace minimal_sphere(int n);
/// minimal_sphere(n) without its last vertex b<n>.
DigitalSpace minimal_disk(int n);

DigitalSpace cycle_graph(std::size_t length);
DigitalSpace path_graph(std::size_t length);
DigitalSpace complete_graph(std::size_t order);
/// Apex joined to every vertex of `base`.
DigitalSpace cone(const DigitalSpace& base, const std::string& apex = "apex");
/// S^0 joined with `base` (poles "north" and "south").
DigitalSpace suspension(const DigitalSpace& base);
/// The icosahedron graph: 12 vertices, every rim an induced 5-cycle.
DigitalSpace icosahedron();
/// Triangulated rows x cols grid with wrap-around (diagonal (1,1)); a torus
/// whenever both sides are at least 4.
DigitalSpace torus_grid(std::size_t rows, std::size_t cols);

/// Edges are present independently with probability p; reproducible for a
/// given seed on every platform.
DigitalSpace random_space(std::uint64_t seed, std::size_t vertices, double edge_probability);

/// Connected graphs on 1..max_vertices vertices, one per isomorphism class,
/// ordered by size then canonical form. max_vertices <= 9.
void enumerate_connected_graphs(std::size_t max_vertices,
                                const std::function<void(const DigitalSpace&)>& visit);
std::vector<DigitalSpace> connected_graphs(std::size_t max_vertices);

// Canonical forms ------------------------------------------------------------

struct CanonicalForm {
  std::size_t order = 0;
  /// Adjacency rows under the canonical labeling.
  std::vector<Mask> rows;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical position of each vertex (individualization-refinement with
/// automorphism pruning; exact, not a hash).
std::vector<Vertex> canonical_labeling(const DigitalSpace& space);
CanonicalForm canonical_form(const DigitalSpace& space);
bool are_isomorphic(const DigitalSpace& a, const DigitalSpace& b);

// Fixture recipes --------------------------------------------------------------

struct FixtureSpec;

namespace recipe {
struct MinimalSphere {
  int n;
};
struct MinimalDisk {
  int n;
};
/// Part i is relabeled with prefix "<i>." before joining.
struct Join {
  std::vector<FixtureSpec> parts;
};
struct Cone {
  std::shared_ptr<const FixtureSpec> base;
};
struct RTransformed {
  std::shared_ptr<const FixtureSpec> base;
  std::string u, v;
};
struct Glued {
  std::shared_ptr<const FixtureSpec> d, e;
  std::map<std::string, std::string> boundary_map;
};
struct Explicit {
  std::string path;
};
struct Named {
  std::string name;
};
}  // namespace recipe

using Recipe = std::variant<recipe::MinimalSphere, recipe::MinimalDisk, recipe::Join,
                            recipe::Cone, recipe::RTransformed, recipe::Glued,
                            recipe::Explicit, recipe::Named>;

struct FixtureSpec {
  std::string name;
  Recipe construction;

  DigitalSpace build() const;
};

/// Named spaces accepted by recipe::Named: "icosahedron", "torus4x4",
/// "cycle<k>", "path<k>", "complete<k>".
DigitalSpace named_space(const std::string& name);

}  // namespace digitop

#endif  // DIGITOP_GENERATORS_HPP
