// Incremental row-echelon bases for exact rank and span-membership queries.

#ifndef DIGITOP_SRC_LINALG_HPP
#define DIGITOP_SRC_LINALG_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace digitop::linalg {

/// Dense GF(2) vector packed into 64-bit words.
class Gf2Vector {
 public:
  explicit Gf2Vector(std::size_t dim) : words_((dim + 63) / 64, 0) {}

  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Gf2Vector& operator^=(const Gf2Vector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Index of the lowest set bit, or npos when zero.
  std::size_t leading() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::uint64_t> words_;
};

class Gf2Basis {
 public:
  /// Adds `v` to the basis if independent; returns whether it was.
  bool insert(Gf2Vector v) {
    reduce(v);
    std::size_t p = v.leading();
    if (p == Gf2Vector::npos) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  bool spans(Gf2Vector v) const {
    reduce(v);
    return v.leading() == Gf2Vector::npos;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(Gf2Vector& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (v.get(pivots_[i])) v ^= rows_[i];
    }
  }

  std::vector<Gf2Vector> rows_;
  std::vector<std::size_t> pivots_;
};

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

/// Basis over Q kept as primitive integer vectors; elimination is
/// fraction-free (v <- b[p] v - v[p] b, then divide out the content).
class RationalBasis {
 public:
  bool insert(IntVector v) {
    reduce(v);
    std::size_t p = leading(v);
    if (p == npos) return false;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  bool spans(IntVector v) const {
    reduce(v);
    return leading(v) == npos;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static std::size_t leading(const IntVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) return i;
    }
    return npos;
  }

  static void normalize(IntVector& v) {
    BigInt g = 0;
    for (const auto& x : v) {
      if (x != 0) g = boost::multiprecision::gcd(g, abs(x));
    }
    if (g > 1) {
      for (auto& x : v) x /= g;
    }
  }

  void reduce(IntVector& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (v[p] == 0) continue;
      const BigInt scale = rows_[i][p];
      const BigInt factor = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = scale * v[j] - factor * rows_[i][j];
      normalize(v);
    }
  }

  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace digitop::linalg

#endif  // DIGITOP_SRC_LINALG_HPP
