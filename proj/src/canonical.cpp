// Canonical labeling by individualization-refinement.
//
// The search tree individualizes vertices of the first non-singleton cell of
// an equitable partition. Each discrete leaf yields a relabeled adjacency
// matrix; the lexicographically least one is canonical. Two leaves with equal
// matrices reveal an automorphism, and children of a node that lie in one
// orbit of the automorphisms fixing that node's prefix are explored once.

#include <algorithm>
#include <numeric>
#include <optional>

#include "digitop/generators.hpp"

namespace digitop {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const DigitalSpace& g) : g_(g) {}

  std::vector<Vertex> run() {
    if (g_.size() == 0) return {};
    Cells start{std::vector<Vertex>(g_.size())};
    std::iota(start.front().begin(), start.front().end(), Vertex{0});
    std::vector<Vertex> prefix;
    search(std::move(start), prefix);
    return best_labeling_;
  }

 private:
  // Splits cells by neighbor counts into every cell until nothing changes.
  void refine(Cells& cells) const {
    for (;;) {
      std::vector<std::size_t> cell_of(g_.size());
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (Vertex v : cells[c]) cell_of[v] = c;
      }
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::size_t>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<std::size_t> sig(cells.size(), 0);
          for (Vertex w : g_.neighbors(v)) ++sig[cell_of[w]];
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<Vertex> group{keyed.front().second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(group));
            group.clear();
          }
          group.push_back(keyed[i].second);
        }
        next.push_back(std::move(group));
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  std::vector<Mask> relabeled(const std::vector<Vertex>& position) const {
    std::vector<Mask> rows(g_.size(), 0);
    for (Vertex u = 0; u < g_.size(); ++u) {
      Mask row = 0;
      for (Vertex w : g_.neighbors(u)) row |= Mask{1} << position[w];
      rows[position[u]] = row;
    }
    return rows;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> position(g_.size());
    for (std::size_t c = 0; c < cells.size(); ++c) position[cells[c].front()] = c;
    auto rows = relabeled(position);
    auto note_automorphism = [&](const std::vector<Vertex>& other) {
      // other^{-1} o position maps the graph onto itself.
      std::vector<Vertex> inverse(g_.size());
      for (Vertex v = 0; v < g_.size(); ++v) inverse[other[v]] = v;
      std::vector<Vertex> gamma(g_.size());
      for (Vertex v = 0; v < g_.size(); ++v) gamma[v] = inverse[position[v]];
      automorphisms_.push_back(std::move(gamma));
    };
    if (!first_rows_) {
      first_rows_ = rows;
      first_labeling_ = position;
      best_rows_ = rows;
      best_labeling_ = position;
      return;
    }
    if (rows == *first_rows_) {
      note_automorphism(first_labeling_);
    } else if (rows == best_rows_) {
      note_automorphism(best_labeling_);
    } else if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_labeling_ = position;
    }
  }

  // Representative of v under automorphisms fixing every prefix vertex.
  std::vector<Vertex> orbits(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(g_.size());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < g_.size(); ++v) {
        Vertex a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < g_.size(); ++v) parent[v] = find(v);
    return parent;
  }

  void search(Cells cells, std::vector<Vertex>& prefix) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> candidates = cells[t];
    std::vector<Vertex> explored;
    for (Vertex w : candidates) {
      if (!explored.empty()) {
        auto orbit = orbits(prefix);
        bool seen = std::any_of(explored.begin(), explored.end(),
                                [&](Vertex x) { return orbit[x] == orbit[w]; });
        if (seen) continue;
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != t) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({w});
        std::vector<Vertex> rest;
        for (Vertex x : cells[c]) {
          if (x != w) rest.push_back(x);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(w);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  const DigitalSpace& g_;
  std::optional<std::vector<Mask>> first_rows_;
  std::vector<Vertex> first_labeling_;
  std::vector<Mask> best_rows_;
  std::vector<Vertex> best_labeling_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const DigitalSpace& space) {
  return CanonicalSearch(space).run();
}

CanonicalForm canonical_form(const DigitalSpace& space) {
  auto position = canonical_labeling(space);
  CanonicalForm form{space.size(), std::vector<Mask>(space.size(), 0)};
  for (Vertex u = 0; u < space.size(); ++u) {
    Mask row = 0;
    for (Vertex w : space.neighbors(u)) row |= Mask{1} << position[w];
    form.rows[position[u]] = row;
  }
  return form;
}

bool are_isomorphic(const DigitalSpace& a, const DigitalSpace& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace digitop
