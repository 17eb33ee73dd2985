#include "digitop/simply_connected.hpp"

#include <algorithm>
#include <set>

#include "digitop/parallel.hpp"

namespace digitop {

std::string to_string(CurveMode mode) {
  return mode == CurveMode::induced_only ? "induced" : "all";
}

CurveMode curve_mode_from_string(const std::string& name) {
  if (name == "induced" || name == "induced_only") return CurveMode::induced_only;
  if (name == "all" || name == "all_subgraph") return CurveMode::all_subgraph;
  throw Error("unknown curve mode '" + name + "' (expected induced or all)");
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::simply_connected: return "simply_connected";
    case Verdict::not_simply_connected: return "not_simply_connected";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(ImplicationStatus status) {
  switch (status) {
    case ImplicationStatus::holds: return "holds";
    case ImplicationStatus::vacuous: return "vacuous";
    case ImplicationStatus::violated: return "violated";
    case ImplicationStatus::unknown: return "unknown";
  }
  return "unknown";
}

VertexSet ClosedCurve::vertices() const {
  VertexSet s;
  for (Vertex v : cycle) s = s.with(v);
  return s;
}

std::vector<Edge> ClosedCurve::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) out.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  std::sort(out.begin(), out.end());
  return out;
}

DigitalSpace Subgraph::materialize(const DigitalSpace& ambient) const {
  std::vector<Vertex> local(ambient.size(), 0);
  std::vector<std::string> labels;
  for (Vertex v : vertices) {
    local[v] = labels.size();
    labels.push_back(ambient.label(v));
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!vertices.contains(e.first) || !vertices.contains(e.second)) {
      throw Error("subgraph edge leaves its vertex set");
    }
    mapped.emplace_back(local[e.first], local[e.second]);
  }
  return DigitalSpace::from_indices(std::move(labels), mapped);
}

// Curve enumeration ------------------------------------------------------------

namespace {

class CurveWalker {
 public:
  CurveWalker(const DigitalSpace& g, CurveMode mode, std::size_t max_length,
              const std::function<bool(const ClosedCurve&)>& visit)
      : g_(g), induced_(mode == CurveMode::induced_only), max_length_(max_length), visit_(visit) {}

  void run() {
    for (Vertex s = 0; s < g_.size() && !stopped_; ++s) {
      path_ = {s};
      on_path_ = VertexSet::single(s);
      extend();
    }
  }

 private:
  void emit(Vertex last) {
    if (path_[1] > last) return;  // the reversed walk is reported instead
    ClosedCurve c{path_};
    c.cycle.push_back(last);
    if (!visit_(c)) stopped_ = true;
  }

  void extend() {
    const Vertex start = path_.front();
    const Vertex tail = path_.back();
    for (Vertex w : g_.neighbors(tail) - on_path_) {
      if (stopped_) return;
      if (w < start) continue;
      const bool touches_start = path_.size() >= 2 && g_.adjacent(w, start);
      const bool long_enough = path_.size() >= 3;
      if (induced_) {
        const VertexSet allowed = VertexSet{tail, start};
        if (!(g_.neighbors(w) & on_path_).subset_of(allowed)) continue;
        if (touches_start) {
          if (long_enough) emit(w);
          continue;
        }
      } else if (touches_start && long_enough) {
        emit(w);
      }
      if (path_.size() + 1 < max_length_) {
        path_.push_back(w);
        on_path_ = on_path_.with(w);
        extend();
        on_path_ = on_path_.without(w);
        path_.pop_back();
      }
    }
  }

  const DigitalSpace& g_;
  bool induced_;
  std::size_t max_length_;
  const std::function<bool(const ClosedCurve&)>& visit_;
  std::vector<Vertex> path_;
  VertexSet on_path_;
  bool stopped_ = false;
};

}  // namespace

void enumerate_closed_curves(const DigitalSpace& space, CurveMode mode, std::size_t max_length,
                             const std::function<bool(const ClosedCurve&)>& visit) {
  if (max_length < 4) throw Error("closed curves have at least 4 points; max length must be >= 4");
  CurveWalker(space, mode, max_length, visit).run();
}

std::vector<ClosedCurve> closed_curves(const DigitalSpace& space, CurveMode mode,
                                       std::size_t max_length) {
  std::vector<ClosedCurve> out;
  enumerate_closed_curves(space, mode, max_length, [&](const ClosedCurve& c) {
    out.push_back(c);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Witness search -------------------------------------------------------------------

namespace {

constexpr std::size_t kTinyEnumeration = 64;
constexpr std::size_t kMaxEnumeratedSupersetBits = 20;

// Calls visit(extras) for each subset of `pool` of size k, in lexicographic
// order of positions; visit returns false to stop. Returns false if stopped.
template <typename Visit>
bool for_each_combination(const std::vector<Vertex>& pool, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > pool.size()) return true;
  for (;;) {
    VertexSet extras;
    for (std::size_t i : idx) extras = extras.with(pool[i]);
    if (!visit(extras)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Vertex> members(VertexSet s) { return {s.begin(), s.end()}; }

bool connected_subgraph(VertexSet vertices, const std::vector<Edge>& edges) {
  if (vertices.empty()) return false;
  VertexSet reached = VertexSet::single(vertices.front());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : edges) {
      if (reached.contains(e.first) != reached.contains(e.second)) {
        reached = reached.with(e.first).with(e.second);
        grew = true;
      }
    }
  }
  return reached == vertices;
}

}  // namespace

struct WitnessSearch::Impl {
  DigitalSpace g;
  ContractibilityEngine engine;
  std::optional<CycleBoundaryOracle> oracle;

  explicit Impl(DigitalSpace ambient) : g(ambient), engine(std::move(ambient)) {}

  CycleBoundaryOracle& homology() {
    if (!oracle) oracle.emplace(g);
    return *oracle;
  }

  bool contractible(const Subgraph& a) const {
    if (!connected_subgraph(a.vertices, a.edges)) return false;
    DigitalSpace m = a.materialize(g);
    return ContractibilityEngine(m).contractible(m.all());
  }

  // Deletable edges of the induced subspace on s: everything but the curve.
  std::vector<Edge> optional_edges(VertexSet s, const std::set<Edge>& curve_edges) const {
    std::vector<Edge> out;
    for (const Edge& e : g.edges_within(s)) {
      if (!curve_edges.contains(e)) out.push_back(e);
    }
    return out;
  }

  // Number of subgraphs containing the curve, or nullopt if above `limit`.
  std::optional<std::size_t> candidate_count(VertexSet curve, const std::set<Edge>& curve_edges,
                                             std::size_t limit) const {
    const std::vector<Vertex> pool = members(g.all() - curve);
    if (pool.size() > kMaxEnumeratedSupersetBits) return std::nullopt;
    std::size_t total = 0;
    for (Mask bits = 0; bits < (Mask{1} << pool.size()); ++bits) {
      VertexSet s = curve;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if ((bits >> i) & 1U) s = s.with(pool[i]);
      }
      const std::size_t free_edges = optional_edges(s, curve_edges).size();
      if (free_edges >= 63) return std::nullopt;
      total += std::size_t{1} << free_edges;
      if (total > limit) return std::nullopt;
    }
    return total;
  }

  // Examines every subgraph containing the curve.
  WitnessResult enumerate_all(VertexSet curve, const std::set<Edge>& curve_edges,
                              WitnessResult result) const {
    const std::vector<Vertex> pool = members(g.all() - curve);
    for (std::size_t k = 0; k <= pool.size(); ++k) {
      bool found = false;
      for_each_combination(pool, k, [&](VertexSet extras) {
        const VertexSet s = curve | extras;
        if (!is_connected(g, s)) return true;
        const auto free = optional_edges(s, curve_edges);
        for (Mask keep = 0; keep < (Mask{1} << free.size()); ++keep) {
          ++result.candidates;
          Subgraph a{s, {curve_edges.begin(), curve_edges.end()}};
          for (std::size_t i = 0; i < free.size(); ++i) {
            if ((keep >> i) & 1U) a.edges.push_back(free[i]);
          }
          if (contractible(a)) {
            result.outcome = WitnessOutcome::found;
            result.witness = std::move(a);
            found = true;
            return false;
          }
        }
        return true;
      });
      if (found) {
        result.method = "exhaustive_enumeration";
        return result;
      }
    }
    result.outcome = WitnessOutcome::refuted;
    result.method = "exhaustive_enumeration";
    return result;
  }

  // Shortest path from a to b inside the subspace `within`.
  std::optional<VertexSet> shortest_path(Vertex a, Vertex b, VertexSet within) const {
    if (!within.contains(a) || !within.contains(b)) return std::nullopt;
    std::vector<Vertex> parent(g.size(), a);
    VertexSet seen = VertexSet::single(a);
    std::vector<Vertex> frontier{a};
    while (!frontier.empty() && !seen.contains(b)) {
      std::vector<Vertex> next;
      for (Vertex u : frontier) {
        for (Vertex w : (g.neighbors(u) & within) - seen) {
          seen = seen.with(w);
          parent[w] = u;
          next.push_back(w);
        }
      }
      frontier = std::move(next);
    }
    if (!seen.contains(b)) return std::nullopt;
    VertexSet path = VertexSet::single(b);
    for (Vertex v = b; v != a; v = parent[v]) path = path.with(parent[v]);
    return path;
  }

  // Cheap refinements of the induced subspace on s; see find().
  std::optional<std::pair<Subgraph, std::string>> refine(const ClosedCurve& curve, VertexSet s,
                                                         const std::set<Edge>& curve_edges,
                                                         std::size_t& spent) {
    const VertexSet cv = curve.vertices();
    std::vector<Edge> chords;
    for (const Edge& e : g.edges_within(cv)) {
      if (!curve_edges.contains(e)) chords.push_back(e);
    }
    if (!chords.empty()) {
      Subgraph a{s, {}};
      for (const Edge& e : g.edges_within(s)) {
        if (!std::binary_search(chords.begin(), chords.end(), e)) a.edges.push_back(e);
      }
      ++spent;
      if (contractible(a)) return std::pair{std::move(a), std::string("chord_deletion")};
    }
    const std::size_t len = curve.cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex x = curve.cycle[i];
      if (!engine.contractible(s.without(x))) continue;
      const Vertex before = curve.cycle[(i + len - 1) % len];
      const Vertex after = curve.cycle[(i + 1) % len];
      auto path = shortest_path(before, after, g.neighbors(x) & s);
      if (!path) continue;
      Subgraph a{s, g.edges_within(s.without(x))};
      for (Vertex r : *path) a.edges.emplace_back(x, r);
      std::sort(a.edges.begin(), a.edges.end());
      ++spent;
      if (contractible(a)) return std::pair{std::move(a), std::string("reattachment")};
    }
    return std::nullopt;
  }

  WitnessResult find(const ClosedCurve& curve, std::size_t budget) {
    WitnessResult result;
    const VertexSet cv = curve.vertices();
    const auto edge_list = curve.edges();
    const std::set<Edge> curve_edges(edge_list.begin(), edge_list.end());
    for (const Edge& e : edge_list) {
      if (!g.contains_edge(e.first, e.second)) throw Error("curve does not lie in the space");
    }

    // A point adjacent to the whole curve cones it off.
    VertexSet apexes = g.all() - cv;
    for (Vertex c : cv) apexes &= g.neighbors(c);
    if (!apexes.empty()) {
      const Vertex w = apexes.front();
      Subgraph a{cv.with(w), edge_list};
      for (Vertex c : cv) a.edges.emplace_back(c, w);
      std::sort(a.edges.begin(), a.edges.end());
      ++result.candidates;
      if (contractible(a)) {
        result.outcome = WitnessOutcome::found;
        result.witness = std::move(a);
        result.method = "cone";
        return result;
      }
    }

    if (candidate_count(cv, curve_edges, std::min(kTinyEnumeration, budget))) {
      return enumerate_all(cv, curve_edges, result);
    }

    if (!homology().bounds(curve.cycle, Field::gf2)) {
      result.outcome = WitnessOutcome::refuted;
      result.method = "homology_gf2";
      return result;
    }

    const std::vector<Vertex> pool = members(g.all() - cv);
    bool out_of_budget = false;
    for (std::size_t k = 0; k <= pool.size() && !result.witness && !out_of_budget; ++k) {
      for_each_combination(pool, k, [&](VertexSet extras) {
        if (result.candidates >= budget) {
          out_of_budget = true;
          return false;
        }
        ++result.candidates;
        const VertexSet s = cv | extras;
        if (!is_connected(g, s)) return true;
        if (engine.contractible(s)) {
          result.witness = Subgraph{s, g.edges_within(s)};
          result.method = "induced_superset";
          return false;
        }
        if (auto refined = refine(curve, s, curve_edges, result.candidates)) {
          result.witness = std::move(refined->first);
          result.method = std::move(refined->second);
          return false;
        }
        return true;
      });
    }
    if (result.witness) {
      result.outcome = WitnessOutcome::found;
      return result;
    }

    if (!homology().bounds(curve.cycle, Field::rational)) {
      result.outcome = WitnessOutcome::refuted;
      result.method = "homology_rational";
      return result;
    }

    const std::size_t remaining = budget > result.candidates ? budget - result.candidates : 0;
    if (candidate_count(cv, curve_edges, remaining)) {
      return enumerate_all(cv, curve_edges, result);
    }
    result.outcome = WitnessOutcome::exhausted;
    result.method = "budget";
    return result;
  }
};

WitnessSearch::WitnessSearch(DigitalSpace ambient) : impl_(std::make_unique<Impl>(std::move(ambient))) {}
WitnessSearch::~WitnessSearch() = default;
WitnessSearch::WitnessSearch(WitnessSearch&&) noexcept = default;
WitnessSearch& WitnessSearch::operator=(WitnessSearch&&) noexcept = default;

WitnessResult WitnessSearch::find(const ClosedCurve& curve, std::size_t budget) {
  return impl_->find(curve, budget);
}

WitnessResult find_contractible_witness(const DigitalSpace& space, const ClosedCurve& curve,
                                        std::size_t budget) {
  return WitnessSearch(space).find(curve, budget);
}

bool check_witness(const DigitalSpace& space, const ClosedCurve& curve, const Subgraph& witness) {
  if (!witness.vertices.subset_of(space.all())) return false;
  for (const Edge& e : witness.edges) {
    if (e.second >= space.size() || !space.contains_edge(e.first, e.second)) return false;
  }
  if (!curve.vertices().subset_of(witness.vertices)) return false;
  const std::set<Edge> have(witness.edges.begin(), witness.edges.end());
  for (const Edge& e : curve.edges()) {
    if (!have.contains(e)) return false;
  }
  DigitalSpace a = witness.materialize(space);
  auto verdict = is_contractible(a);
  if (!verdict.contractible) return false;
  DigitalSpace end = replay(a, verdict.trace->steps);
  return end.size() == 1;
}

// Simple connectedness -------------------------------------------------------------

CurveMode default_curve_mode(const DigitalSpace& space) {
  return space.size() <= 12 ? CurveMode::all_subgraph : CurveMode::induced_only;
}

SimplyConnectedReport is_simply_connected(const DigitalSpace& space) {
  return is_simply_connected(space, default_curve_mode(space));
}

SimplyConnectedReport is_simply_connected(const DigitalSpace& space, CurveMode mode,
                                          SearchCaps caps) {
  if (space.empty()) throw Error("simple connectedness needs a nonempty space");
  if (!is_connected(space)) throw Error("simple connectedness needs a connected space");
  SimplyConnectedReport report;
  report.mode = mode;
  const std::size_t length = caps.max_length == 0 ? std::max<std::size_t>(space.size(), 4) : caps.max_length;
  caps.max_length = length;
  report.caps = caps;
  report.enumeration_exhaustive = length >= space.size();

  const auto curves = closed_curves(space, mode, length);
  report.curves_total = curves.size();

  const std::size_t workers = worker_count();
  std::vector<std::optional<WitnessSearch>> searches(workers);
  const std::size_t chunk = std::max<std::size_t>(64, workers * 16);
  bool stop = false;
  for (std::size_t begin_at = 0; begin_at < curves.size() && !stop; begin_at += chunk) {
    const std::size_t end_at = std::min(curves.size(), begin_at + chunk);
    std::vector<WitnessResult> results(end_at - begin_at);
    parallel_for(results.size(), workers, [&](std::size_t w, std::size_t i) {
      if (!searches[w]) searches[w].emplace(space);
      results[i] = searches[w]->find(curves[begin_at + i], caps.budget);
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const ClosedCurve& curve = curves[begin_at + i];
      ++report.curves_checked;
      switch (results[i].outcome) {
        case WitnessOutcome::found:
          report.witnesses.emplace_back(curve, std::move(*results[i].witness));
          break;
        case WitnessOutcome::refuted:
          report.failures.push_back({curve, results[i].method});
          break;
        case WitnessOutcome::exhausted:
          report.unresolved.push_back(curve);
          break;
      }
      if (caps.max_failures != 0 && report.failures.size() >= caps.max_failures) {
        stop = true;
        break;
      }
    }
  }

  if (!report.failures.empty()) {
    report.verdict = Verdict::not_simply_connected;
  } else if (report.unresolved.empty() && report.enumeration_exhaustive) {
    report.verdict = Verdict::simply_connected;
  } else {
    report.verdict = Verdict::unknown;
  }
  return report;
}

Json to_json(const DigitalSpace& space, const ClosedCurve& curve) {
  Json out = Json::array();
  for (Vertex v : curve.cycle) out.push_back(space.label(v));
  return out;
}

Json to_json(const DigitalSpace& space, const SimplyConnectedReport& report,
             bool include_witnesses) {
  Json out{{"verdict", to_string(report.verdict)},
           {"mode", to_string(report.mode)},
           {"max_curve_length", report.caps.max_length},
           {"budget", report.caps.budget},
           {"enumeration_exhaustive", report.enumeration_exhaustive},
           {"curves_total", report.curves_total},
           {"curves_checked", report.curves_checked}};
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"curve", to_json(space, f.curve)}, {"proof", f.proof}});
  }
  out["failures"] = std::move(failures);
  Json unresolved = Json::array();
  for (const auto& c : report.unresolved) unresolved.push_back(to_json(space, c));
  out["unresolved"] = std::move(unresolved);
  if (include_witnesses) {
    Json witnesses = Json::array();
    for (const auto& [curve, w] : report.witnesses) {
      Json edges = Json::array();
      for (const Edge& e : w.edges) edges.push_back({space.label(e.first), space.label(e.second)});
      witnesses.push_back({{"curve", to_json(space, curve)},
                           {"vertices", space.labels_of(w.vertices)},
                           {"edges", std::move(edges)}});
    }
    out["witnesses"] = std::move(witnesses);
  }
  return out;
}

// Theorem checks -----------------------------------------------------------------------

std::optional<bool> SeparationTheoremReport::holds() const {
  bool all = true;
  for (const auto& c : checks) {
    if (!c.passed) return std::nullopt;
    all = all && *c.passed;
  }
  return all;
}

SeparationTheoremReport verify_sphere_separation_theorem(const DigitalSpace& manifold,
                                                         VertexSet sphere, SearchCaps caps) {
  if (!sphere.subset_of(manifold.all())) throw Error("sphere is not a subset of the manifold");
  Recognizer r(manifold);
  if (!r.manifold(manifold.all(), 3)) throw Error("precondition: the space is not a 3-manifold");
  if (!r.sphere(sphere, 2)) throw Error("precondition: the given points do not induce a 2-sphere");
  auto sc = is_simply_connected(manifold, CurveMode::induced_only, caps);
  if (sc.verdict != Verdict::simply_connected) {
    throw Error("precondition: the manifold is not verified simply connected (" +
                to_string(sc.verdict) + ")");
  }

  SeparationTheoremReport report;
  report.separation = find_separation(manifold, sphere);
  report.checks.push_back({"separation", report.separation.has_value(),
                           report.separation ? "complement splits" : "complement is connected"});
  if (!report.separation) return report;

  auto side_checks = [&](const std::string& name, VertexSet side) {
    const VertexSet closed = side | sphere;
    VertexSet boundary;
    const bool mwb = r.manifold_with_boundary(closed, 3, &boundary);
    report.checks.push_back({name + " is a 3-manifold with boundary S", mwb && boundary == sphere,
                             mwb ? "" : "rim structure fails"});
    auto side_sc = is_simply_connected(induced(manifold, closed), CurveMode::induced_only, caps);
    std::optional<bool> passed;
    if (side_sc.verdict != Verdict::unknown) passed = side_sc.verdict == Verdict::simply_connected;
    report.checks.push_back({name + " is simply connected", passed, to_string(side_sc.verdict)});
  };
  side_checks("E+S", report.separation->left);
  side_checks("S+F", report.separation->right);
  return report;
}

PoincareReport verify_poincare(const DigitalSpace& space, int dimension, SearchCaps caps) {
  PoincareReport report;
  report.dimension = dimension;
  if (space.empty()) return report;
  report.manifold = Recognizer(space).manifold(space.all(), dimension);
  if (!report.manifold) return report;
  caps.max_length = 0;
  const auto sc = is_simply_connected(space, CurveMode::induced_only, caps);
  report.simply_connected = sc.verdict;
  report.sphere = static_cast<bool>(is_n_sphere(space, dimension));
  switch (sc.verdict) {
    case Verdict::simply_connected:
      report.status = *report.sphere ? ImplicationStatus::holds : ImplicationStatus::violated;
      break;
    case Verdict::not_simply_connected: report.status = ImplicationStatus::vacuous; break;
    case Verdict::unknown: report.status = ImplicationStatus::unknown; break;
  }
  return report;
}

PoincareReport verify_poincare_2d(const DigitalSpace& space) { return verify_poincare(space, 2); }

PoincareReport verify_poincare_3d(const DigitalSpace& space, SearchCaps caps) {
  return verify_poincare(space, 3, caps);
}

Json to_json(const PoincareReport& report) {
  Json out{{"dimension", report.dimension}, {"manifold", report.manifold}};
  out["simply_connected"] = report.simply_connected ? Json(to_string(*report.simply_connected)) : Json();
  out["sphere"] = report.sphere ? Json(*report.sphere) : Json();
  out["status"] = to_string(report.status);
  return out;
}

}  // namespace digitop
