#include "digitop/invariants.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "linalg.hpp"

namespace digitop {

namespace {

// Extends `current` by members of `candidates` (all larger than its last
// vertex), reporting each clique of size <= limit.
template <typename Visit>
void extend_cliques(const DigitalSpace& space, Simplex& current, VertexSet candidates,
                    std::size_t limit, Visit& visit) {
  visit(current);
  if (current.size() == limit) return;
  for (Vertex v : candidates) {
    current.push_back(v);
    // Only higher-indexed common neighbors, so each clique appears once.
    VertexSet next = candidates & space.neighbors(v);
    next = VertexSet(next.bits() & ~((Mask{2} << v) - 1));
    extend_cliques(space, current, next, limit, visit);
    current.pop_back();
  }
}

void count_cliques(const DigitalSpace& space, std::size_t depth, VertexSet candidates,
                   std::vector<std::size_t>& counts) {
  for (Vertex v : candidates) {
    if (counts.size() <= depth) counts.push_back(0);
    ++counts[depth];
    VertexSet next = candidates & space.neighbors(v);
    next = VertexSet(next.bits() & ~((Mask{2} << v) - 1));
    if (!next.empty()) count_cliques(space, depth + 1, next, counts);
  }
}

std::size_t simplex_index(const std::map<Simplex, std::size_t>& index, const Simplex& s) {
  return index.at(s);
}

// Boundary columns of the k-simplices, as sparse (row, sign) lists over the
// (k-1)-simplices.
std::vector<std::vector<std::pair<std::size_t, int>>> boundary_columns(
    const CliqueComplex& cx, int k) {
  std::map<Simplex, std::size_t> lower;
  const auto& faces = cx.simplices_by_dim[static_cast<std::size_t>(k - 1)];
  for (std::size_t i = 0; i < faces.size(); ++i) lower.emplace(faces[i], i);
  std::vector<std::vector<std::pair<std::size_t, int>>> cols;
  for (const Simplex& s : cx.simplices_by_dim[static_cast<std::size_t>(k)]) {
    std::vector<std::pair<std::size_t, int>> col;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face;
      face.reserve(s.size() - 1);
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (j != drop) face.push_back(s[j]);
      }
      col.emplace_back(simplex_index(lower, face), drop % 2 == 0 ? 1 : -1);
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

std::size_t boundary_rank(const CliqueComplex& cx, int k, Field field) {
  if (k <= 0 || k > cx.max_dim()) return 0;
  const std::size_t rows = cx.count(k - 1);
  auto cols = boundary_columns(cx, k);
  if (field == Field::gf2) {
    linalg::Gf2Basis basis;
    for (const auto& col : cols) {
      linalg::Gf2Vector v(rows);
      for (auto [r, sign] : col) v.flip(r);
      basis.insert(std::move(v));
    }
    return basis.rank();
  }
  linalg::RationalBasis basis;
  for (const auto& col : cols) {
    linalg::IntVector v(rows, 0);
    for (auto [r, sign] : col) v[r] = sign;
    basis.insert(std::move(v));
  }
  return basis.rank();
}

}  // namespace

CliqueComplex clique_complex(const DigitalSpace& space, int max_dim) {
  CliqueComplex cx;
  if (max_dim < 0) return cx;
  const std::size_t limit = static_cast<std::size_t>(max_dim) + 1;
  auto visit = [&](const Simplex& s) {
    if (s.empty()) return;
    if (cx.simplices_by_dim.size() < s.size()) cx.simplices_by_dim.resize(s.size());
    cx.simplices_by_dim[s.size() - 1].push_back(s);
  };
  Simplex current;
  extend_cliques(space, current, space.all(), limit, visit);
  for (auto& level : cx.simplices_by_dim) std::sort(level.begin(), level.end());
  return cx;
}

CliqueComplex clique_complex(const DigitalSpace& space) {
  return clique_complex(space, static_cast<int>(space.size()));
}

std::vector<std::size_t> clique_counts(const DigitalSpace& space, VertexSet within) {
  std::vector<std::size_t> counts;
  count_cliques(space, 0, within, counts);
  return counts;
}

long long euler_characteristic(const DigitalSpace& space, VertexSet within) {
  long long chi = 0;
  auto counts = clique_counts(space, within);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(counts[k]);
  }
  return chi;
}

long long euler_characteristic(const DigitalSpace& space) {
  return euler_characteristic(space, space.all());
}

std::string to_string(Field field) { return field == Field::gf2 ? "gf2" : "rational"; }

Field field_from_string(const std::string& name) {
  if (name == "gf2" || name == "GF2" || name == "z2") return Field::gf2;
  if (name == "q" || name == "Q" || name == "rational") return Field::rational;
  throw Error("unknown field '" + name + "' (expected gf2 or q)");
}

BettiVector betti_numbers(const DigitalSpace& space, Field field) {
  const CliqueComplex cx = clique_complex(space);
  BettiVector out;
  out.field = field;
  std::vector<std::size_t> rank(static_cast<std::size_t>(cx.max_dim() + 2), 0);
  for (int k = 1; k <= cx.max_dim(); ++k) {
    rank[static_cast<std::size_t>(k)] = boundary_rank(cx, k, field);
  }
  for (int k = 0; k <= cx.max_dim(); ++k) {
    const auto uk = static_cast<std::size_t>(k);
    out.betti.push_back(cx.count(k) - rank[uk] - rank[uk + 1]);
  }
  return out;
}

struct CycleBoundaryOracle::Impl {
  CliqueComplex cx;
  std::map<Edge, std::size_t> edge_row;
  std::optional<linalg::Gf2Basis> gf2;
  std::optional<linalg::RationalBasis> rational;

  explicit Impl(const DigitalSpace& space) : cx(clique_complex(space, 2)) {
    if (cx.max_dim() >= 1) {
      const auto& edges = cx.simplices_by_dim[1];
      for (std::size_t i = 0; i < edges.size(); ++i) {
        edge_row.emplace(Edge(edges[i][0], edges[i][1]), i);
      }
    }
  }

  std::size_t edge_count() const { return edge_row.size(); }

  void build(Field field) {
    const bool has_triangles = cx.max_dim() >= 2;
    std::vector<std::vector<std::pair<std::size_t, int>>> cols;
    if (has_triangles) cols = boundary_columns(cx, 2);
    if (field == Field::gf2 && !gf2) {
      gf2.emplace();
      for (const auto& col : cols) {
        linalg::Gf2Vector v(edge_count());
        for (auto [r, sign] : col) v.flip(r);
        gf2->insert(std::move(v));
      }
    }
    if (field == Field::rational && !rational) {
      rational.emplace();
      for (const auto& col : cols) {
        linalg::IntVector v(edge_count(), 0);
        for (auto [r, sign] : col) v[r] = sign;
        rational->insert(std::move(v));
      }
    }
  }
};

CycleBoundaryOracle::CycleBoundaryOracle(const DigitalSpace& space)
    : impl_(std::make_unique<Impl>(space)) {}
CycleBoundaryOracle::~CycleBoundaryOracle() = default;
CycleBoundaryOracle::CycleBoundaryOracle(CycleBoundaryOracle&&) noexcept = default;
CycleBoundaryOracle& CycleBoundaryOracle::operator=(CycleBoundaryOracle&&) noexcept = default;

bool CycleBoundaryOracle::bounds(std::span<const Vertex> cycle, Field field) {
  impl_->build(field);
  const std::size_t m = impl_->edge_count();
  linalg::Gf2Vector z2(m);
  linalg::IntVector zq(field == Field::rational ? m : 0, 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    auto it = impl_->edge_row.find(Edge(a, b));
    if (it == impl_->edge_row.end()) throw Error("cycle step is not an edge of the space");
    if (field == Field::gf2) {
      z2.flip(it->second);
    } else {
      zq[it->second] += a < b ? 1 : -1;
    }
  }
  return field == Field::gf2 ? impl_->gf2->spans(std::move(z2))
                             : impl_->rational->spans(std::move(zq));
}

}  // namespace digitop
