// Contractibility, simple points and edges, contractible transformations,
// R-transformations, and reduction certificates.

#ifndef DIGITOP_HOMOTOPY_HPP
#define DIGITOP_HOMOTOPY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "digitop/io.hpp"
#include "digitop/space.hpp"

namespace digitop {

/// Decides contractibility of induced subspaces of one fixed root space.
///
/// A subspace is contractible when some sequence of simple-point deletions
/// reduces it to a single vertex. The search is a depth-first walk over
/// deletion orders memoized on the subspace bitmask; it tries the first
/// simple point first, so it behaves like greedy deletion until a dead end
/// forces backtracking. Rims of points in an induced subspace are again
/// induced subspaces of the root, so simplicity checks share the same memo.
class ContractibilityEngine {
 public:
  struct Options {
    /// Reject early when the Euler characteristic differs from 1. Sound
    /// because simple-point deletion preserves it.
    bool euler_prune = true;
  };

  explicit ContractibilityEngine(DigitalSpace root);
  ContractibilityEngine(DigitalSpace root, Options options);

  const DigitalSpace& root() const { return root_; }

  /// False for the empty set.
  bool contractible(VertexSet s);
  /// `v` is simple in the subspace `s` (v must belong to s).
  bool simple_in(VertexSet s, Vertex v);
  VertexSet simple_points(VertexSet s);

  /// Deletion order reducing `s` to one vertex, if any.
  std::optional<std::vector<Vertex>> deletion_order(VertexSet s);
  /// Simple-point deletions from `from` down to exactly `target`.
  std::optional<std::vector<Vertex>> reduce_onto(VertexSet from, VertexSet target);
  /// Deletes the lowest simple point until none is left; returns the result.
  VertexSet greedy_collapse(VertexSet s);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  DigitalSpace root_;
  Options options_;
  std::unordered_map<Mask, bool> memo_;
};

// Reduction certificates ----------------------------------------------------

struct DeletePoint {
  std::string point;
};
struct DeleteEdge {
  std::string u, v;
};
struct AttachPoint {
  std::string point;
  std::vector<std::string> neighborhood;
};
struct AttachEdge {
  std::string u, v;
};

using Move = std::variant<DeletePoint, DeleteEdge, AttachPoint, AttachEdge>;

struct ReductionTrace {
  DigitalSpace start;
  DigitalSpace end;
  std::vector<Move> steps;
};

/// Raised by replay; `step` is the zero-based index of the rejected move.
class ReplayError : public Error {
 public:
  ReplayError(std::size_t step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Applies one move after checking it is a contractible transformation.
DigitalSpace apply_move(const DigitalSpace& space, const Move& move);
/// Replays every move from `start`, re-checking simplicity at each step.
DigitalSpace replay(const DigitalSpace& start, const std::vector<Move>& steps);

Json move_to_json(const Move& move);
Move move_from_json(const Json& record);
Json trace_to_json(const std::vector<Move>& steps);
std::vector<Move> trace_from_json(const Json& list);

// Contractibility ------------------------------------------------------------

struct ContractibilityVerdict {
  bool contractible = false;
  /// Present iff contractible.
  std::optional<ReductionTrace> trace;
  /// Present iff not contractible: a reachable subspace with more than one
  /// vertex and no simple points.
  std::optional<VertexSet> stuck_core;
};

bool is_simple_point(const DigitalSpace& space, Vertex v);
/// Throws when (u, v) is not an edge.
bool is_simple_edge(const DigitalSpace& space, Vertex u, Vertex v);
/// Throws on the empty space.
ContractibilityVerdict is_contractible(const DigitalSpace& space);
bool contractible(const DigitalSpace& space);

/// Simple-point deletions taking `space` onto the induced subspace `target`.
/// Both must be contractible (throws otherwise). nullopt means exhaustive
/// search failed, which would contradict the known reduction theorem.
std::optional<ReductionTrace> reduce_onto(const DigitalSpace& space, VertexSet target);

/// Deletes simple points outside `keep` and simple edges outside `keep`'s
/// edges until none remain. Order: lowest vertex index first, then the
/// lexicographically least edge; points before edges. `keep` is a subgraph
/// given by labels.
DigitalSpace collapse_keeping(const DigitalSpace& space, const DigitalSpace& keep);

// R-transformations ----------------------------------------------------------

/// Replaces edge (u, v) by a new point adjacent to u, v and their common
/// neighbors.
DigitalSpace r_transform(const DigitalSpace& space, Vertex u, Vertex v, std::string new_label);
/// The two contractible transformations realizing r_transform.
std::vector<Move> r_transform_moves(const DigitalSpace& space, Vertex u, Vertex v,
                                    const std::string& new_label);
/// Deletes z and restores edge (u, v). The rim of z must be S^0(u, v) joined
/// with the rest of the rim.
DigitalSpace r_inverse(const DigitalSpace& space, Vertex z, Vertex u, Vertex v);

/// Equal Euler characteristic and GF(2) Betti numbers: a necessary
/// condition for homotopy equivalence, not a decision of it.
bool homotopy_invariants_equal(const DigitalSpace& a, const DigitalSpace& b);

}  // namespace digitop

#endif  // DIGITOP_HOMOTOPY_HPP
