// Digital spaces: finite simple undirected graphs with stable vertex identity.
//
// Vertices carry opaque string labels externally and dense indices internally.
// Every vertex subset is a VertexSet, a bitmask over the parent's vertex order,
// so induced subspaces of a fixed root can be named by a single machine word.

#ifndef DIGITOP_SPACE_HPP
#define DIGITOP_SPACE_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace digitop {

/// Raised when an operation's precondition is violated.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed graph files and certificates.
class InputError : public Error {
 public:
  using Error::Error;
};

using Vertex = std::size_t;
using Mask = std::uint64_t;

/// Hard size bound: VertexSet is one 64-bit word.
inline constexpr std::size_t kMaxVertices = 64;

class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) bits_ |= bit(v);
  }

  static constexpr VertexSet single(Vertex v) { return VertexSet(bit(v)); }
  /// The first `n` vertices {0, ..., n-1}.
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Vertex v) const { return (bits_ & bit(v)) != 0; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Lowest-index member; undefined on the empty set.
  constexpr Vertex front() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | bit(v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~bit(v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr auto operator<=>(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  static constexpr Mask bit(Vertex v) { return Mask{1} << v; }
  Mask bits_ = 0;
};

/// An unordered vertex pair stored with first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}
  constexpr auto operator<=>(const Edge&) const = default;
};

using LabelPair = std::pair<std::string, std::string>;

/// An immutable finite simple graph. Copies are cheap at desk scale.
class DigitalSpace {
 public:
  DigitalSpace() = default;

  /// Builds a space from labels and label pairs. Rejects duplicate labels,
  /// self-loops, unknown endpoints, duplicate edges, and more than
  /// kMaxVertices vertices.
  static DigitalSpace from_labels(std::vector<std::string> vertices,
                                  const std::vector<LabelPair>& edges);
  /// Same as from_labels with index pairs.
  static DigitalSpace from_indices(std::vector<std::string> vertices,
                                   const std::vector<Edge>& edges);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  VertexSet all() const { return VertexSet::first(size()); }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Index of `label`; throws Error naming the label when absent.
  Vertex index_of(std::string_view label) const;
  /// Indices of `labels`; throws on the first unknown one.
  VertexSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(VertexSet s) const;

  VertexSet neighbors(Vertex v) const { return VertexSet(adjacency_.at(v)); }
  bool adjacent(Vertex u, Vertex v) const { return (adjacency_.at(u) >> v) & 1U; }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::size_t edge_count() const;
  /// All edges, lexicographically ordered by (first, second).
  std::vector<Edge> edges() const;
  /// Edges with both endpoints in `s`.
  std::vector<Edge> edges_within(VertexSet s) const;
  bool contains_edge(Vertex u, Vertex v) const { return u != v && adjacent(u, v); }

  /// Vertex identity is positional: equal spaces have the same labels in
  /// the same order and the same edges.
  bool operator==(const DigitalSpace& other) const {
    return labels_ == other.labels_ && adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Mask> adjacency_;
  std::unordered_map<std::string, Vertex> index_;
};

/// A separation left ∪ partition ∪ right of a space.
struct SeparationResult {
  VertexSet left;
  VertexSet partition;
  VertexSet right;
  auto operator<=>(const SeparationResult&) const = default;
};

// Subspace construction.
DigitalSpace induced(const DigitalSpace& space, VertexSet subset);
DigitalSpace rim(const DigitalSpace& space, Vertex v);
DigitalSpace ball(const DigitalSpace& space, Vertex v);
/// Common neighbors of two distinct vertices; u and v need not be adjacent.
DigitalSpace joint_rim(const DigitalSpace& space, Vertex u, Vertex v);
/// Disjoint union plus every cross edge. Labels must not collide.
DigitalSpace join(const DigitalSpace& g, const DigitalSpace& h);
/// Copy of `space` with every label prefixed.
DigitalSpace prefixed(const DigitalSpace& space, std::string_view prefix);

// Surgery.
DigitalSpace delete_edges(const DigitalSpace& space, const std::vector<Edge>& edges);
DigitalSpace add_edges(const DigitalSpace& space, const std::vector<Edge>& edges);
DigitalSpace attach_point(const DigitalSpace& space, std::string label, VertexSet neighborhood);
DigitalSpace delete_point(const DigitalSpace& space, Vertex v);

// Connectivity and separation.
/// Components of the induced subspace on `within`, ordered by lowest member.
std::vector<VertexSet> connected_components(const DigitalSpace& space, VertexSet within);
std::vector<VertexSet> connected_components(const DigitalSpace& space);
bool is_connected(const DigitalSpace& space, VertexSet within);
bool is_connected(const DigitalSpace& space);

/// True iff left and right are nonempty and no edge joins them. Throws when
/// the three sets are not a partition of the vertex set.
bool is_separation(const DigitalSpace& space, VertexSet left, VertexSet partition,
                   VertexSet right);
/// Splits the complement of `partition` into the component holding its
/// lowest vertex (left) and the rest (right); nullopt when the complement
/// has fewer than two components.
std::optional<SeparationResult> find_separation(const DigitalSpace& space,
                                                VertexSet partition);

}  // namespace digitop

#endif  // DIGITOP_SPACE_HPP
