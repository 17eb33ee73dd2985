#include "digitop/classifier.hpp"

#include <set>

namespace digitop {

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::sphere: return "sphere";
    case Kind::disk: return "disk";
    case Kind::manifold: return "manifold";
    case Kind::manifold_with_boundary: return "manifold_with_boundary";
    case Kind::closed_curve: return "closed_curve";
    case Kind::none: return "none";
  }
  return "none";
}

Json to_json(const Classification& c) {
  Json out{{"kind", to_string(c.kind)}};
  if (c.n >= 0) out["n"] = c.n;
  out["boundary"] = c.boundary;
  out["interior"] = c.interior;
  out["satisfied"] = c.satisfied;
  Json evidence = Json::array();
  for (const auto& e : c.evidence) {
    Json item{{"vertex", e.vertex}, {"rim", e.rim}};
    if (e.complement_contractible) item["complement_contractible"] = *e.complement_contractible;
    evidence.push_back(std::move(item));
  }
  out["evidence"] = std::move(evidence);
  return out;
}

int sphere_dimension_bound(std::size_t vertices) {
  return static_cast<int>(vertices / 2) - 1;
}

int disk_dimension_bound(std::size_t vertices) {
  return vertices == 0 ? -1 : static_cast<int>((vertices - 1) / 2);
}

namespace {

std::string fresh_label(const DigitalSpace& space, const std::string& stem) {
  std::string label = stem;
  for (int i = 0; space.find(label); ++i) label = stem + std::to_string(i);
  return label;
}

}  // namespace

Recognizer::Recognizer(DigitalSpace root) : engine_(std::move(root)) {}

bool Recognizer::sphere(VertexSet s, int n) {
  if (n < 0) return false;
  const DigitalSpace& g = root();
  if (n == 0) {
    if (s.size() != 2) return false;
    Vertex a = s.front();
    return !g.adjacent(a, s.without(a).front());
  }
  if (s.size() < static_cast<std::size_t>(2 * n + 2)) return false;
  auto key = std::pair{s.bits(), n};
  if (auto it = sphere_memo_.find(key); it != sphere_memo_.end()) return it->second;

  bool ok = is_connected(g, s);
  for (Vertex v : s) {
    if (!ok) break;
    ok = (g.neighbors(v) & s).size() >= static_cast<std::size_t>(2 * n);
  }
  for (Vertex v : s) {
    if (!ok) break;
    ok = sphere(g.neighbors(v) & s, n - 1);
  }
  for (Vertex v : s) {
    if (!ok) break;
    ok = engine_.contractible(s.without(v));
  }
  sphere_memo_[key] = ok;
  return ok;
}

bool Recognizer::split_by_rims(VertexSet s, int k, VertexSet& disk_rims, VertexSet& sphere_rims) {
  disk_rims = {};
  sphere_rims = {};
  for (Vertex x : s) {
    const VertexSet r = root().neighbors(x) & s;
    if (sphere(r, k)) {
      sphere_rims = sphere_rims.with(x);
    } else if (disk(r, k)) {
      disk_rims = disk_rims.with(x);
    } else {
      return false;
    }
  }
  return true;
}

bool Recognizer::disk(VertexSet s, int n, VertexSet* boundary, VertexSet* interior) {
  if (n < 0) return false;
  if (n == 0) {
    if (s.size() != 1) return false;
    if (boundary) *boundary = {};
    if (interior) *interior = s;
    return true;
  }
  if (s.size() < static_cast<std::size_t>(2 * n + 1)) return false;
  auto key = std::pair{s.bits(), n};
  auto cached = disk_memo_.find(key);
  if (cached != disk_memo_.end() && !cached->second) return false;

  VertexSet bnd, inner;
  if (!split_by_rims(s, n - 1, bnd, inner)) {
    disk_memo_[key] = false;
    return false;
  }
  if (cached == disk_memo_.end()) {
    bool ok = !bnd.empty() && !inner.empty() && is_connected(root(), s) && sphere(bnd, n - 1);
    if (ok) {
      // Cone off the boundary and test the result as an n-sphere.
      DigitalSpace part = induced(root(), s);
      VertexSet part_boundary;
      Vertex i = 0;
      for (Vertex x : s) {
        if (bnd.contains(x)) part_boundary = part_boundary.with(i);
        ++i;
      }
      DigitalSpace cone = attach_point(part, fresh_label(part, "apex"), part_boundary);
      Recognizer completion(cone);
      ok = completion.sphere(cone.all(), n);
    }
    disk_memo_[key] = ok;
    if (!ok) return false;
  }
  if (boundary) *boundary = bnd;
  if (interior) *interior = inner;
  return true;
}

bool Recognizer::closed_curve(VertexSet s) {
  if (s.empty() || !is_connected(root(), s)) return false;
  for (Vertex x : s) {
    const VertexSet r = root().neighbors(x) & s;
    if (r.size() != 2) return false;
    const Vertex a = r.front();
    if (root().adjacent(a, r.without(a).front())) return false;
  }
  return true;
}

bool Recognizer::manifold(VertexSet s, int n) {
  if (n < 2) throw Error("digital manifolds are defined for n >= 2");
  if (s.empty() || !is_connected(root(), s)) return false;
  for (Vertex x : s) {
    if (!sphere(root().neighbors(x) & s, n - 1)) return false;
  }
  return true;
}

bool Recognizer::manifold_with_boundary(VertexSet s, int n, VertexSet* boundary,
                                        VertexSet* interior) {
  if (n < 2) throw Error("manifolds with boundary are defined for n >= 2");
  if (s.empty() || !is_connected(root(), s)) return false;
  VertexSet bnd, inner;
  if (!split_by_rims(s, n - 1, bnd, inner)) return false;
  if (bnd.empty() || inner.empty()) return false;
  const bool boundary_ok = n == 2 ? closed_curve(bnd) : manifold(bnd, n - 1);
  if (!boundary_ok) return false;
  if (boundary) *boundary = bnd;
  if (interior) *interior = inner;
  return true;
}

std::string Recognizer::describe(VertexSet s, int k) {
  if (sphere(s, k)) return "sphere(" + std::to_string(k) + ")";
  if (disk(s, k)) return "disk(" + std::to_string(k) + ")";
  return "other";
}

// Public recognizers ----------------------------------------------------------

namespace {

std::vector<RimEvidence> rim_evidence(Recognizer& r, int k, bool with_complements) {
  const DigitalSpace& g = r.root();
  std::vector<RimEvidence> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    RimEvidence e{g.label(v), k >= 0 ? r.describe(g.neighbors(v), k) : "other", std::nullopt};
    if (with_complements) e.complement_contractible = r.engine().contractible(g.all().without(v));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Classification is_n_sphere(const DigitalSpace& space, int n) {
  if (n < 0) throw Error("sphere dimension must be non-negative");
  Recognizer r(space);
  Classification c;
  if (r.sphere(space.all(), n)) {
    c.kind = Kind::sphere;
    c.n = n;
    c.satisfied.push_back("sphere(" + std::to_string(n) + ")");
  }
  if (n >= 1) c.evidence = rim_evidence(r, n - 1, true);
  return c;
}

bool is_closed_curve(const DigitalSpace& space) {
  return Recognizer(space).closed_curve(space.all());
}

Classification is_n_disk(const DigitalSpace& space, int n) {
  if (n < 0) throw Error("disk dimension must be non-negative");
  Recognizer r(space);
  Classification c;
  VertexSet bnd, inner;
  if (r.disk(space.all(), n, &bnd, &inner)) {
    c.kind = Kind::disk;
    c.n = n;
    c.boundary = space.labels_of(bnd);
    c.interior = space.labels_of(inner);
    c.satisfied.push_back("disk(" + std::to_string(n) + ")");
  }
  if (n >= 1) c.evidence = rim_evidence(r, n - 1, false);
  return c;
}

Classification is_n_manifold(const DigitalSpace& space, int n) {
  if (n < 2) throw Error("digital manifolds are defined for n >= 2");
  Recognizer r(space);
  Classification c;
  if (r.manifold(space.all(), n)) {
    c.kind = Kind::manifold;
    c.n = n;
    c.satisfied.push_back("manifold(" + std::to_string(n) + ")");
  }
  c.evidence = rim_evidence(r, n - 1, false);
  return c;
}

Classification is_manifold_with_boundary(const DigitalSpace& space, int n) {
  if (n < 2) throw Error("manifolds with boundary are defined for n >= 2");
  Recognizer r(space);
  Classification c;
  VertexSet bnd, inner;
  if (r.manifold_with_boundary(space.all(), n, &bnd, &inner)) {
    c.kind = Kind::manifold_with_boundary;
    c.n = n;
    c.boundary = space.labels_of(bnd);
    c.interior = space.labels_of(inner);
    c.satisfied.push_back("manifold_with_boundary(" + std::to_string(n) + ")");
  }
  c.evidence = rim_evidence(r, n - 1, false);
  return c;
}

DigitalSpace glue_disks(const DigitalSpace& d, const DigitalSpace& e,
                        const std::map<std::string, std::string>& boundary_map) {
  Recognizer rd(d);
  Recognizer re(e);
  int n = -1;
  VertexSet bd, id, be, ie;
  for (int k = 1; k <= disk_dimension_bound(d.size()); ++k) {
    if (rd.disk(d.all(), k, &bd, &id)) {
      n = k;
      break;
    }
  }
  if (n < 0) throw Error("first operand is not a digital disk");
  if (!re.disk(e.all(), n, &be, &ie)) {
    throw Error("second operand is not a digital " + std::to_string(n) + "-disk");
  }

  // The map must be a bijection between boundaries preserving adjacency.
  std::map<Vertex, Vertex> e_to_d;
  std::set<Vertex> mapped_d;
  for (const auto& [from, to] : boundary_map) {
    auto dv = d.find(from);
    auto ev = e.find(to);
    if (!dv || !bd.contains(*dv)) throw Error("'" + from + "' is not a boundary point of the first disk");
    if (!ev || !be.contains(*ev)) throw Error("'" + to + "' is not a boundary point of the second disk");
    if (!e_to_d.emplace(*ev, *dv).second) throw Error("boundary map is not injective at '" + to + "'");
    mapped_d.insert(*dv);
  }
  if (mapped_d.size() != bd.size() || e_to_d.size() != be.size()) {
    throw Error("boundary map must cover both boundaries");
  }
  for (Vertex a : be) {
    for (Vertex b : be) {
      if (a < b && e.adjacent(a, b) != d.adjacent(e_to_d.at(a), e_to_d.at(b))) {
        throw Error("boundary map is not an isomorphism at ('" + e.label(a) + "', '" +
                    e.label(b) + "')");
      }
    }
  }

  std::vector<std::string> labels;
  std::vector<Vertex> d_index(d.size()), e_index(e.size());
  for (Vertex v = 0; v < d.size(); ++v) {
    d_index[v] = labels.size();
    labels.push_back(bd.contains(v) ? d.label(v) : "d:" + d.label(v));
  }
  for (Vertex v : ie) {
    e_index[v] = labels.size();
    labels.push_back("e:" + e.label(v));
  }
  for (Vertex v : be) e_index[v] = d_index[e_to_d.at(v)];

  std::vector<Edge> edges;
  for (const Edge& x : d.edges()) edges.emplace_back(d_index[x.first], d_index[x.second]);
  for (const Edge& x : e.edges()) {
    if (be.contains(x.first) && be.contains(x.second)) continue;
    edges.emplace_back(e_index[x.first], e_index[x.second]);
  }
  return DigitalSpace::from_indices(std::move(labels), edges);
}

Classification classify(const DigitalSpace& space) {
  Recognizer r(space);
  const VertexSet all = space.all();
  Classification first;
  std::vector<std::string> satisfied;
  auto record = [&](Kind kind, int n, VertexSet bnd, VertexSet inner) {
    std::string tag = to_string(kind);
    if (n >= 0) tag += "(" + std::to_string(n) + ")";
    satisfied.push_back(tag);
    if (first.kind == Kind::none) {
      first.kind = kind;
      first.n = n;
      first.boundary = space.labels_of(bnd);
      first.interior = space.labels_of(inner);
      if (n >= 1 && kind != Kind::closed_curve) first.evidence = rim_evidence(r, n - 1, kind == Kind::sphere);
    }
  };

  if (space.empty()) return first;
  if (r.closed_curve(all)) record(Kind::closed_curve, -1, {}, {});
  for (int n = 0; n <= sphere_dimension_bound(space.size()); ++n) {
    if (r.sphere(all, n)) record(Kind::sphere, n, {}, {});
  }
  for (int n = 0; n <= disk_dimension_bound(space.size()); ++n) {
    VertexSet bnd, inner;
    if (r.disk(all, n, &bnd, &inner)) record(Kind::disk, n, bnd, inner);
  }
  for (int n = 2; n <= sphere_dimension_bound(space.size()); ++n) {
    if (r.manifold(all, n)) record(Kind::manifold, n, {}, {});
  }
  for (int n = 2; n <= disk_dimension_bound(space.size()); ++n) {
    VertexSet bnd, inner;
    if (r.manifold_with_boundary(all, n, &bnd, &inner)) {
      record(Kind::manifold_with_boundary, n, bnd, inner);
    }
  }
  first.satisfied = std::move(satisfied);
  return first;
}

}  // namespace digitop
