#include "digitop/homotopy.hpp"

#include <functional>
#include <set>
#include <unordered_set>

#include "digitop/invariants.hpp"

namespace digitop {

ContractibilityEngine::ContractibilityEngine(DigitalSpace root)
    : ContractibilityEngine(std::move(root), Options{}) {}

ContractibilityEngine::ContractibilityEngine(DigitalSpace root, Options options)
    : root_(std::move(root)), options_(options) {}

bool ContractibilityEngine::contractible(VertexSet s) {
  if (s.empty()) return false;
  if (s.size() == 1) return true;
  if (auto it = memo_.find(s.bits()); it != memo_.end()) return it->second;

  bool result = false;
  if (!is_connected(root_, s)) {
    result = false;
  } else if (options_.euler_prune && euler_characteristic(root_, s) != 1) {
    result = false;
  } else {
    for (Vertex v : s) {
      if (simple_in(s, v) && contractible(s.without(v))) {
        result = true;
        break;
      }
    }
  }
  memo_[s.bits()] = result;
  return result;
}

bool ContractibilityEngine::simple_in(VertexSet s, Vertex v) {
  return contractible(root_.neighbors(v) & s);
}

VertexSet ContractibilityEngine::simple_points(VertexSet s) {
  VertexSet out;
  for (Vertex v : s) {
    if (simple_in(s, v)) out = out.with(v);
  }
  return out;
}

std::optional<std::vector<Vertex>> ContractibilityEngine::deletion_order(VertexSet s) {
  if (!contractible(s)) return std::nullopt;
  std::vector<Vertex> order;
  while (s.size() > 1) {
    bool moved = false;
    for (Vertex v : s) {
      if (simple_in(s, v) && contractible(s.without(v))) {
        order.push_back(v);
        s = s.without(v);
        moved = true;
        break;
      }
    }
    if (!moved) throw Error("internal: contractible subspace without a contractible successor");
  }
  return order;
}

std::optional<std::vector<Vertex>> ContractibilityEngine::reduce_onto(VertexSet from,
                                                                      VertexSet target) {
  if (!target.subset_of(from)) throw Error("reduction target is not a subspace");
  std::unordered_set<Mask> dead;
  std::vector<Vertex> path;
  std::function<bool(VertexSet)> search = [&](VertexSet s) {
    if (s == target) return true;
    if (dead.contains(s.bits())) return false;
    for (Vertex v : s - target) {
      if (!simple_in(s, v)) continue;
      path.push_back(v);
      if (search(s.without(v))) return true;
      path.pop_back();
    }
    dead.insert(s.bits());
    return false;
  };
  if (!search(from)) return std::nullopt;
  return path;
}

VertexSet ContractibilityEngine::greedy_collapse(VertexSet s) {
  bool moved = true;
  while (moved && s.size() > 1) {
    moved = false;
    for (Vertex v : s) {
      if (simple_in(s, v)) {
        s = s.without(v);
        moved = true;
        break;
      }
    }
  }
  return s;
}

// Moves ----------------------------------------------------------------------

namespace {

std::pair<Vertex, Vertex> edge_endpoints(const DigitalSpace& space, const std::string& u,
                                         const std::string& v) {
  return {space.index_of(u), space.index_of(v)};
}

}  // namespace

DigitalSpace apply_move(const DigitalSpace& space, const Move& move) {
  return std::visit(
      [&](const auto& m) -> DigitalSpace {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DeletePoint>) {
          const Vertex v = space.index_of(m.point);
          if (!is_simple_point(space, v)) {
            throw Error("point '" + m.point + "' is not simple");
          }
          return delete_point(space, v);
        } else if constexpr (std::is_same_v<T, DeleteEdge>) {
          auto [a, b] = edge_endpoints(space, m.u, m.v);
          if (!space.contains_edge(a, b)) {
            throw Error("(" + m.u + ", " + m.v + ") is not an edge");
          }
          if (!is_simple_edge(space, a, b)) {
            throw Error("edge (" + m.u + ", " + m.v + ") is not simple");
          }
          return delete_edges(space, {Edge(a, b)});
        } else if constexpr (std::is_same_v<T, AttachPoint>) {
          VertexSet nbh = space.set_of(m.neighborhood);
          DigitalSpace next = attach_point(space, m.point, nbh);
          if (!is_simple_point(next, next.size() - 1)) {
            throw Error("attached point '" + m.point + "' would not be simple");
          }
          return next;
        } else {
          auto [a, b] = edge_endpoints(space, m.u, m.v);
          if (a == b || space.contains_edge(a, b)) {
            throw Error("(" + m.u + ", " + m.v + ") cannot be attached");
          }
          DigitalSpace next = add_edges(space, {Edge(a, b)});
          if (!is_simple_edge(next, a, b)) {
            throw Error("attached edge (" + m.u + ", " + m.v + ") would not be simple");
          }
          return next;
        }
      },
      move);
}

DigitalSpace replay(const DigitalSpace& start, const std::vector<Move>& steps) {
  DigitalSpace cur = start;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      cur = apply_move(cur, steps[i]);
    } catch (const ReplayError&) {
      throw;
    } catch (const Error& e) {
      throw ReplayError(i, e.what());
    }
  }
  return cur;
}

Json move_to_json(const Move& move) {
  return std::visit(
      [](const auto& m) -> Json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DeletePoint>) {
          return Json{{"op", "delete_point"}, {"point", m.point}};
        } else if constexpr (std::is_same_v<T, DeleteEdge>) {
          return Json{{"op", "delete_edge"}, {"edge", {m.u, m.v}}};
        } else if constexpr (std::is_same_v<T, AttachPoint>) {
          return Json{{"op", "attach_point"}, {"point", m.point}, {"neighborhood", m.neighborhood}};
        } else {
          return Json{{"op", "attach_edge"}, {"edge", {m.u, m.v}}};
        }
      },
      move);
}

Move move_from_json(const Json& record) {
  auto fail = [&](const std::string& why) -> InputError {
    return InputError("bad trace step " + record.dump() + ": " + why);
  };
  if (!record.is_object() || !record.contains("op") || !record["op"].is_string()) {
    throw fail("missing \"op\"");
  }
  const auto op = record["op"].get<std::string>();
  auto edge = [&]() {
    if (!record.contains("edge") || !record["edge"].is_array() || record["edge"].size() != 2 ||
        !record["edge"][0].is_string() || !record["edge"][1].is_string()) {
      throw fail("\"edge\" must be a pair of labels");
    }
    return std::pair{record["edge"][0].get<std::string>(), record["edge"][1].get<std::string>()};
  };
  auto point = [&]() {
    if (!record.contains("point") || !record["point"].is_string()) throw fail("missing \"point\"");
    return record["point"].get<std::string>();
  };
  if (op == "delete_point") return DeletePoint{point()};
  if (op == "delete_edge") {
    auto [u, v] = edge();
    return DeleteEdge{u, v};
  }
  if (op == "attach_edge") {
    auto [u, v] = edge();
    return AttachEdge{u, v};
  }
  if (op == "attach_point") {
    AttachPoint m{point(), {}};
    if (!record.contains("neighborhood") || !record["neighborhood"].is_array()) {
      throw fail("missing \"neighborhood\"");
    }
    for (const auto& l : record["neighborhood"]) {
      if (!l.is_string()) throw fail("neighborhood labels must be strings");
      m.neighborhood.push_back(l.get<std::string>());
    }
    return m;
  }
  throw fail("unknown op '" + op + "'");
}

Json trace_to_json(const std::vector<Move>& steps) {
  Json out = Json::array();
  for (const auto& m : steps) out.push_back(move_to_json(m));
  return out;
}

std::vector<Move> trace_from_json(const Json& list) {
  if (!list.is_array()) throw InputError("trace must be a JSON array of steps");
  std::vector<Move> out;
  for (const auto& r : list) out.push_back(move_from_json(r));
  return out;
}

// Contractibility -------------------------------------------------------------

bool is_simple_point(const DigitalSpace& space, Vertex v) {
  if (v >= space.size()) throw Error("unknown vertex index " + std::to_string(v));
  return ContractibilityEngine(space).simple_in(space.all(), v);
}

bool is_simple_edge(const DigitalSpace& space, Vertex u, Vertex v) {
  if (u >= space.size() || v >= space.size() || !space.contains_edge(u, v)) {
    throw Error("not an edge");
  }
  return ContractibilityEngine(space).contractible(space.neighbors(u) & space.neighbors(v));
}

ContractibilityVerdict is_contractible(const DigitalSpace& space) {
  if (space.empty()) throw Error("the empty space has no contractibility verdict");
  ContractibilityEngine engine(space);
  ContractibilityVerdict verdict;
  if (auto order = engine.deletion_order(space.all())) {
    verdict.contractible = true;
    ReductionTrace trace{space, {}, {}};
    VertexSet left = space.all();
    for (Vertex v : *order) {
      trace.steps.push_back(DeletePoint{space.label(v)});
      left = left.without(v);
    }
    trace.end = induced(space, left);
    verdict.trace = std::move(trace);
  } else {
    verdict.stuck_core = engine.greedy_collapse(space.all());
  }
  return verdict;
}

bool contractible(const DigitalSpace& space) {
  return ContractibilityEngine(space).contractible(space.all());
}

std::optional<ReductionTrace> reduce_onto(const DigitalSpace& space, VertexSet target) {
  ContractibilityEngine engine(space);
  if (!target.subset_of(space.all())) throw Error("reduction target is not a subspace");
  if (!engine.contractible(space.all())) throw Error("reduce_onto needs a contractible space");
  if (!engine.contractible(target)) throw Error("reduce_onto needs a contractible target");
  auto order = engine.reduce_onto(space.all(), target);
  if (!order) return std::nullopt;
  ReductionTrace trace{space, induced(space, target), {}};
  for (Vertex v : *order) trace.steps.push_back(DeletePoint{space.label(v)});
  return trace;
}

DigitalSpace collapse_keeping(const DigitalSpace& space, const DigitalSpace& keep) {
  std::set<std::string> keep_points(keep.labels().begin(), keep.labels().end());
  std::set<std::pair<std::string, std::string>> keep_edges;
  for (const auto& l : keep.labels()) {
    if (!space.find(l)) throw Error("kept vertex '" + l + "' is not in the space");
  }
  for (const Edge& e : keep.edges()) {
    const auto& a = keep.label(e.first);
    const auto& b = keep.label(e.second);
    if (!space.contains_edge(space.index_of(a), space.index_of(b))) {
      throw Error("kept edge (" + a + ", " + b + ") is not in the space");
    }
    keep_edges.emplace(std::min(a, b), std::max(a, b));
  }

  DigitalSpace cur = space;
  for (;;) {
    ContractibilityEngine engine(cur);
    std::optional<DigitalSpace> next;
    for (Vertex v = 0; v < cur.size() && !next; ++v) {
      if (!keep_points.contains(cur.label(v)) && engine.simple_in(cur.all(), v)) {
        next = delete_point(cur, v);
      }
    }
    for (const Edge& e : cur.edges()) {
      if (next) break;
      const auto& a = cur.label(e.first);
      const auto& b = cur.label(e.second);
      if (keep_edges.contains({std::min(a, b), std::max(a, b)})) continue;
      if (engine.contractible(cur.neighbors(e.first) & cur.neighbors(e.second))) {
        next = delete_edges(cur, {e});
      }
    }
    if (!next) return cur;
    cur = std::move(*next);
  }
}

// R-transformations ----------------------------------------------------------

DigitalSpace r_transform(const DigitalSpace& space, Vertex u, Vertex v, std::string new_label) {
  if (u >= space.size() || v >= space.size() || !space.contains_edge(u, v)) {
    throw Error("R-transformation needs an edge");
  }
  const VertexSet rim = (space.neighbors(u) & space.neighbors(v)).with(u).with(v);
  DigitalSpace grown = attach_point(space, std::move(new_label), rim);
  return delete_edges(grown, {Edge(u, v)});
}

std::vector<Move> r_transform_moves(const DigitalSpace& space, Vertex u, Vertex v,
                                    const std::string& new_label) {
  if (u >= space.size() || v >= space.size() || !space.contains_edge(u, v)) {
    throw Error("R-transformation needs an edge");
  }
  const VertexSet rim = (space.neighbors(u) & space.neighbors(v)).with(u).with(v);
  return {AttachPoint{new_label, space.labels_of(rim)},
          DeleteEdge{space.label(u), space.label(v)}};
}

DigitalSpace r_inverse(const DigitalSpace& space, Vertex z, Vertex u, Vertex v) {
  if (z >= space.size() || u >= space.size() || v >= space.size()) {
    throw Error("unknown vertex index");
  }
  if (z == u || z == v || u == v) throw Error("inverse R-transformation needs three distinct points");
  const VertexSet rim = space.neighbors(z);
  if (!rim.contains(u) || !rim.contains(v)) {
    throw Error("'" + space.label(u) + "' and '" + space.label(v) + "' must both lie in the rim of '" +
                space.label(z) + "'");
  }
  if (space.adjacent(u, v)) {
    throw Error("rim of '" + space.label(z) + "' has no S^0 factor: '" + space.label(u) + "' and '" +
                space.label(v) + "' are adjacent");
  }
  for (Vertex w : rim.without(u).without(v)) {
    if (!space.adjacent(w, u) || !space.adjacent(w, v)) {
      throw Error("rim member '" + space.label(w) + "' is not adjacent to both '" +
                  space.label(u) + "' and '" + space.label(v) + "'");
    }
  }
  const std::string lu = space.label(u);
  const std::string lv = space.label(v);
  DigitalSpace shrunk = delete_point(space, z);
  return add_edges(shrunk, {Edge(shrunk.index_of(lu), shrunk.index_of(lv))});
}

bool homotopy_invariants_equal(const DigitalSpace& a, const DigitalSpace& b) {
  // Betti vectors run to the top clique dimension; trailing zeros differ.
  auto trimmed = [](const DigitalSpace& s) {
    auto betti = betti_numbers(s, Field::gf2).betti;
    while (!betti.empty() && betti.back() == 0) betti.pop_back();
    return betti;
  };
  return euler_characteristic(a) == euler_characteristic(b) && trimmed(a) == trimmed(b);
}

}  // namespace digitop
