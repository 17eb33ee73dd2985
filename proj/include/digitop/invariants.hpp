// Clique-complex invariants: Euler characteristic and Betti numbers.
//
// The clique complex of a space has one k-simplex per (k+1)-vertex complete
// subgraph. Contractible transformations leave its Euler characteristic and
// homology unchanged, which makes these numbers the oracle for every
// homotopy-preservation check in the project.

#ifndef DIGITOP_INVARIANTS_HPP
#define DIGITOP_INVARIANTS_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "digitop/space.hpp"

namespace digitop {

/// Sorted vertex tuple.
using Simplex = std::vector<Vertex>;

struct CliqueComplex {
  /// simplices_by_dim[k] holds the (k+1)-cliques in lexicographic order.
  std::vector<std::vector<Simplex>> simplices_by_dim;

  /// Largest k with a nonempty level; -1 for the empty space.
  int max_dim() const { return static_cast<int>(simplices_by_dim.size()) - 1; }
  std::size_t count(int k) const {
    return k >= 0 && k <= max_dim() ? simplices_by_dim[static_cast<std::size_t>(k)].size() : 0;
  }
};

CliqueComplex clique_complex(const DigitalSpace& space, int max_dim);
CliqueComplex clique_complex(const DigitalSpace& space);

/// Number of (k+1)-cliques of the subspace induced on `within`, for each k.
std::vector<std::size_t> clique_counts(const DigitalSpace& space, VertexSet within);

long long euler_characteristic(const DigitalSpace& space);
long long euler_characteristic(const DigitalSpace& space, VertexSet within);

enum class Field { gf2, rational };

std::string to_string(Field field);
Field field_from_string(const std::string& name);

struct BettiVector {
  std::vector<std::size_t> betti;
  Field field = Field::gf2;

  bool operator==(const BettiVector&) const = default;
};

/// b_k = dim C_k - rank d_k - rank d_{k+1}, with exact arithmetic in `field`.
BettiVector betti_numbers(const DigitalSpace& space, Field field = Field::gf2);

/// Decides whether a closed edge walk bounds a 2-chain of the clique
/// complex. The image of the 2-boundary map is reduced once per field and
/// reused across queries.
class CycleBoundaryOracle {
 public:
  explicit CycleBoundaryOracle(const DigitalSpace& space);
  ~CycleBoundaryOracle();
  CycleBoundaryOracle(CycleBoundaryOracle&&) noexcept;
  CycleBoundaryOracle& operator=(CycleBoundaryOracle&&) noexcept;

  /// `cycle` lists the vertices of a closed walk; consecutive entries and
  /// the last/first pair must be edges of the space.
  bool bounds(std::span<const Vertex> cycle, Field field);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace digitop

#endif  // DIGITOP_INVARIANTS_HPP
