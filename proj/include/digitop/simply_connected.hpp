// Simple connectedness: every closed curve lying in a space (as a subgraph)
// must lie in some contractible subgraph of that space.
//
// Curves are enumerated exhaustively up to a length cap. For each curve the
// witness search tries a cone vertex, tiny exhaustive enumeration, vertex
// supersets (smallest first) with cheap edge-deletion refinements, and
// finally full enumeration when it fits in the budget. A curve is refuted
// either by exhausting every subgraph or by a homology obstruction: a
// contractible subgraph has acyclic clique complex, so a curve that does not
// bound a 2-chain of the ambient clique complex cannot lie in one.

#ifndef DIGITOP_SIMPLY_CONNECTED_HPP
#define DIGITOP_SIMPLY_CONNECTED_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digitop/classifier.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/invariants.hpp"
#include "digitop/io.hpp"
#include "digitop/space.hpp"

namespace digitop {

enum class CurveMode { induced_only, all_subgraph };

std::string to_string(CurveMode mode);
CurveMode curve_mode_from_string(const std::string& name);

/// A cycle of length >= 4 in the ambient space. Ambient chords are not part
/// of the curve. Stored starting at its least vertex, oriented so that the
/// second vertex is less than the last.
struct ClosedCurve {
  std::vector<Vertex> cycle;

  VertexSet vertices() const;
  std::vector<Edge> edges() const;
  auto operator<=>(const ClosedCurve&) const = default;
};

/// A general subgraph of an ambient space.
struct Subgraph {
  VertexSet vertices;
  std::vector<Edge> edges;

  DigitalSpace materialize(const DigitalSpace& ambient) const;
};

/// Visits every closed curve with 4..max_length vertices once; the visitor
/// returns false to stop early.
void enumerate_closed_curves(const DigitalSpace& space, CurveMode mode, std::size_t max_length,
                             const std::function<bool(const ClosedCurve&)>& visit);
std::vector<ClosedCurve> closed_curves(const DigitalSpace& space, CurveMode mode,
                                       std::size_t max_length);

struct SearchCaps {
  /// 0 means the number of vertices.
  std::size_t max_length = 0;
  /// Candidate subgraphs examined per curve.
  std::size_t budget = 1U << 16;
  /// Stop after this many refuted curves; 0 means never stop early.
  std::size_t max_failures = 1;
};

enum class WitnessOutcome { found, refuted, exhausted };

struct WitnessResult {
  WitnessOutcome outcome = WitnessOutcome::exhausted;
  std::optional<Subgraph> witness;
  /// How the outcome was reached: "cone", "induced_superset",
  /// "chord_deletion", "reattachment", "exhaustive_enumeration",
  /// "homology_gf2", "homology_rational" or "budget".
  std::string method;
  std::size_t candidates = 0;
};

/// Per-ambient witness search; reuses one contractibility memo and one
/// homology oracle across curves. Not thread-safe.
class WitnessSearch {
 public:
  explicit WitnessSearch(DigitalSpace ambient);
  ~WitnessSearch();
  WitnessSearch(WitnessSearch&&) noexcept;
  WitnessSearch& operator=(WitnessSearch&&) noexcept;

  WitnessResult find(const ClosedCurve& curve, std::size_t budget);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

WitnessResult find_contractible_witness(const DigitalSpace& space, const ClosedCurve& curve,
                                        std::size_t budget);

/// Independent check: the witness is a subgraph of `space`, contains the
/// curve, and its contractibility certificate replays.
bool check_witness(const DigitalSpace& space, const ClosedCurve& curve, const Subgraph& witness);

enum class Verdict { simply_connected, not_simply_connected, unknown };

std::string to_string(Verdict verdict);

struct CurveFailure {
  ClosedCurve curve;
  std::string proof;
};

struct SimplyConnectedReport {
  Verdict verdict = Verdict::unknown;
  CurveMode mode = CurveMode::induced_only;
  SearchCaps caps;
  /// Every cycle within the length cap was enumerated and the cap covers
  /// all possible cycles.
  bool enumeration_exhaustive = false;
  std::size_t curves_total = 0;
  std::size_t curves_checked = 0;
  std::vector<CurveFailure> failures;
  std::vector<ClosedCurve> unresolved;
  std::vector<std::pair<ClosedCurve, Subgraph>> witnesses;
};

/// all_subgraph for spaces with at most 12 vertices, induced_only beyond.
CurveMode default_curve_mode(const DigitalSpace& space);

/// Throws on empty or disconnected input.
SimplyConnectedReport is_simply_connected(const DigitalSpace& space, CurveMode mode,
                                          SearchCaps caps = {});
SimplyConnectedReport is_simply_connected(const DigitalSpace& space);

Json to_json(const DigitalSpace& space, const ClosedCurve& curve);
Json to_json(const DigitalSpace& space, const SimplyConnectedReport& report,
             bool include_witnesses = true);

// Theorem checks ------------------------------------------------------------------

struct CheckItem {
  std::string name;
  /// nullopt when the check could not be decided within the caps.
  std::optional<bool> passed;
  std::string detail;
};

struct SeparationTheoremReport {
  std::optional<SeparationResult> separation;
  std::vector<CheckItem> checks;

  /// True when every check passed; nullopt when some check is undecided.
  std::optional<bool> holds() const;
};

/// Preconditions (checked, Error otherwise): `manifold` is a simply
/// connected 3-manifold and `sphere` induces a 2-sphere in it.
SeparationTheoremReport verify_sphere_separation_theorem(const DigitalSpace& manifold,
                                                         VertexSet sphere, SearchCaps caps = {});

enum class ImplicationStatus { holds, vacuous, violated, unknown };

std::string to_string(ImplicationStatus status);

/// "simply connected n-manifold => n-sphere" on one space.
struct PoincareReport {
  int dimension = 0;
  bool manifold = false;
  std::optional<Verdict> simply_connected;
  std::optional<bool> sphere;
  ImplicationStatus status = ImplicationStatus::vacuous;
};

Json to_json(const PoincareReport& report);

/// Uses induced closed curves with exhaustive length.
PoincareReport verify_poincare(const DigitalSpace& space, int dimension, SearchCaps caps = {});
PoincareReport verify_poincare_2d(const DigitalSpace& space);
PoincareReport verify_poincare_3d(const DigitalSpace& space, SearchCaps caps = {});

}  // namespace digitop

#endif  // DIGITOP_SIMPLY_CONNECTED_HPP
