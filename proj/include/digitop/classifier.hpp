// Recognition of digital spheres, disks, closed curves, manifolds and
// manifolds with boundary, plus disk gluing.
//
// Dimensions are always explicit. An n-sphere (n >= 1) is a connected space
// where every rim is an (n-1)-sphere and every single-point complement is
// contractible; S^0 is two non-adjacent points. An n-disk is an n-sphere
// minus a point. Disks are recognized without searching for the ambient
// sphere: points with disk rims form the boundary, points with sphere rims
// the interior, and coning off the boundary must give an n-sphere.

#ifndef DIGITOP_CLASSIFIER_HPP
#define DIGITOP_CLASSIFIER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digitop/homotopy.hpp"
#include "digitop/io.hpp"
#include "digitop/space.hpp"

namespace digitop {

enum class Kind { sphere, disk, manifold, manifold_with_boundary, closed_curve, none };

std::string to_string(Kind kind);

struct RimEvidence {
  std::string vertex;
  /// "sphere(k)", "disk(k)" or "other", at the dimension below the verdict.
  std::string rim;
  /// For sphere checks: whether the space minus this vertex is contractible.
  std::optional<bool> complement_contractible;
};

struct Classification {
  Kind kind = Kind::none;
  /// Dimension of the verdict; -1 for closed curves and none.
  int n = -1;
  /// Disks and manifolds with boundary only.
  std::vector<std::string> boundary;
  std::vector<std::string> interior;
  std::vector<RimEvidence> evidence;
  /// Every kind the space satisfies, e.g. {"closed_curve", "sphere(1)"}.
  std::vector<std::string> satisfied;

  explicit operator bool() const { return kind != Kind::none; }
};

Json to_json(const Classification& c);

/// Memoized recognizers over induced subspaces of one root.
class Recognizer {
 public:
  explicit Recognizer(DigitalSpace root);

  const DigitalSpace& root() const { return engine_.root(); }
  ContractibilityEngine& engine() { return engine_; }

  bool sphere(VertexSet s, int n);
  /// On success fills boundary and interior when requested.
  bool disk(VertexSet s, int n, VertexSet* boundary = nullptr, VertexSet* interior = nullptr);
  bool closed_curve(VertexSet s);
  /// n >= 2.
  bool manifold(VertexSet s, int n);
  /// n >= 2; the boundary must be a closed curve when n = 2.
  bool manifold_with_boundary(VertexSet s, int n, VertexSet* boundary = nullptr,
                              VertexSet* interior = nullptr);
  /// "sphere(k)", "disk(k)" or "other".
  std::string describe(VertexSet s, int k);

 private:
  bool split_by_rims(VertexSet s, int k, VertexSet& disk_rims, VertexSet& sphere_rims);

  ContractibilityEngine engine_;
  std::map<std::pair<Mask, int>, bool> sphere_memo_;
  std::map<std::pair<Mask, int>, bool> disk_memo_;
};

Classification is_n_sphere(const DigitalSpace& space, int n);
bool is_closed_curve(const DigitalSpace& space);
Classification is_n_disk(const DigitalSpace& space, int n);
Classification is_n_manifold(const DigitalSpace& space, int n);
Classification is_manifold_with_boundary(const DigitalSpace& space, int n);

/// Identifies the boundary of disk `d` with the boundary of disk `e` along
/// `boundary_map` (labels of d to labels of e). Boundary points keep d's
/// labels; interiors become "d:<label>" and "e:<label>".
DigitalSpace glue_disks(const DigitalSpace& d, const DigitalSpace& e,
                        const std::map<std::string, std::string>& boundary_map);

/// Tries closed curve, spheres, disks, manifolds and manifolds with
/// boundary in that order and reports the first hit; `satisfied` lists all.
Classification classify(const DigitalSpace& space);

/// Largest n for which an n-sphere on `vertices` points can exist.
int sphere_dimension_bound(std::size_t vertices);
/// Largest n for which an n-disk on `vertices` points can exist.
int disk_dimension_bound(std::size_t vertices);

}  // namespace digitop

#endif  // DIGITOP_CLASSIFIER_HPP
