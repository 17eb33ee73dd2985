#include "digitop/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace digitop {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out << ", ";
    out << labels[i];
  }
  return out.str();
}

}  // namespace

DigitalSpace DigitalSpace::from_indices(std::vector<std::string> vertices,
                                        const std::vector<Edge>& edges) {
  if (vertices.size() > kMaxVertices) {
    throw Error("space has " + std::to_string(vertices.size()) + " vertices; at most " +
                std::to_string(kMaxVertices) + " are supported");
  }
  DigitalSpace space;
  space.labels_ = std::move(vertices);
  space.adjacency_.assign(space.labels_.size(), 0);
  for (Vertex i = 0; i < space.labels_.size(); ++i) {
    if (!space.index_.emplace(space.labels_[i], i).second) {
      throw Error("duplicate vertex label '" + space.labels_[i] + "'");
    }
  }
  for (const Edge& e : edges) {
    if (e.second >= space.labels_.size()) {
      throw Error("edge endpoint index " + std::to_string(e.second) + " out of range");
    }
    if (e.first == e.second) {
      throw Error("self-loop at '" + space.labels_[e.first] + "'");
    }
    if (space.adjacent(e.first, e.second)) {
      throw Error("duplicate edge ('" + space.labels_[e.first] + "', '" +
                  space.labels_[e.second] + "')");
    }
    space.adjacency_[e.first] |= Mask{1} << e.second;
    space.adjacency_[e.second] |= Mask{1} << e.first;
  }
  return space;
}

DigitalSpace DigitalSpace::from_labels(std::vector<std::string> vertices,
                                       const std::vector<LabelPair>& edges) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error("edge endpoint '" + a + "' is not a vertex");
    if (ib == index.end()) throw Error("edge endpoint '" + b + "' is not a vertex");
    if (ia->second == ib->second) throw Error("self-loop at '" + a + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  return from_indices(std::move(vertices), indexed);
}

std::optional<Vertex> DigitalSpace::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex DigitalSpace::index_of(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error("unknown vertex '" + std::string(label) + "'");
}

VertexSet DigitalSpace::set_of(const std::vector<std::string>& labels) const {
  VertexSet s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> DigitalSpace::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(label(v));
  return out;
}

std::size_t DigitalSpace::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : adjacency_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::vector<Edge> DigitalSpace::edges() const { return edges_within(all()); }

std::vector<Edge> DigitalSpace::edges_within(VertexSet s) const {
  std::vector<Edge> out;
  for (Vertex u : s) {
    for (Vertex v : neighbors(u) & s) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DigitalSpace induced(const DigitalSpace& space, VertexSet subset) {
  if (!subset.subset_of(space.all())) {
    throw Error("vertex set is not contained in the space");
  }
  std::vector<Vertex> old_of_new(subset.begin(), subset.end());
  std::vector<Vertex> new_of_old(space.size(), 0);
  std::vector<std::string> labels;
  labels.reserve(old_of_new.size());
  for (Vertex i = 0; i < old_of_new.size(); ++i) {
    new_of_old[old_of_new[i]] = i;
    labels.push_back(space.label(old_of_new[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : space.edges_within(subset)) {
    edges.emplace_back(new_of_old[e.first], new_of_old[e.second]);
  }
  return DigitalSpace::from_indices(std::move(labels), edges);
}

DigitalSpace rim(const DigitalSpace& space, Vertex v) {
  if (v >= space.size()) throw Error("unknown vertex index " + std::to_string(v));
  return induced(space, space.neighbors(v));
}

DigitalSpace ball(const DigitalSpace& space, Vertex v) {
  if (v >= space.size()) throw Error("unknown vertex index " + std::to_string(v));
  return induced(space, space.neighbors(v).with(v));
}

DigitalSpace joint_rim(const DigitalSpace& space, Vertex u, Vertex v) {
  if (u >= space.size() || v >= space.size()) throw Error("unknown vertex index");
  if (u == v) throw Error("joint rim needs two distinct vertices, got '" + space.label(u) + "' twice");
  return induced(space, space.neighbors(u) & space.neighbors(v));
}

DigitalSpace join(const DigitalSpace& g, const DigitalSpace& h) {
  std::vector<std::string> collisions;
  for (const auto& l : h.labels()) {
    if (g.find(l)) collisions.push_back(l);
  }
  if (!collisions.empty()) {
    throw Error("join needs disjoint labels; colliding: " + join_labels(collisions));
  }
  std::vector<std::string> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  std::vector<Edge> edges = g.edges();
  const std::size_t offset = g.size();
  for (const Edge& e : h.edges()) edges.emplace_back(e.first + offset, e.second + offset);
  for (Vertex a = 0; a < g.size(); ++a) {
    for (Vertex b = 0; b < h.size(); ++b) edges.emplace_back(a, b + offset);
  }
  return DigitalSpace::from_indices(std::move(labels), edges);
}

DigitalSpace prefixed(const DigitalSpace& space, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(space.size());
  for (const auto& l : space.labels()) labels.push_back(std::string(prefix) + l);
  return DigitalSpace::from_indices(std::move(labels), space.edges());
}

DigitalSpace delete_edges(const DigitalSpace& space, const std::vector<Edge>& edges) {
  std::set<Edge> doomed;
  for (const Edge& e : edges) {
    if (e.second >= space.size() || !space.contains_edge(e.first, e.second)) {
      throw Error("cannot delete a nonexistent edge");
    }
    doomed.insert(e);
  }
  std::vector<Edge> kept;
  for (const Edge& e : space.edges()) {
    if (!doomed.contains(e)) kept.push_back(e);
  }
  return DigitalSpace::from_indices(space.labels(), kept);
}

DigitalSpace add_edges(const DigitalSpace& space, const std::vector<Edge>& edges) {
  std::vector<Edge> all = space.edges();
  all.insert(all.end(), edges.begin(), edges.end());
  return DigitalSpace::from_indices(space.labels(), all);
}

DigitalSpace attach_point(const DigitalSpace& space, std::string label, VertexSet neighborhood) {
  if (space.find(label)) throw Error("vertex '" + label + "' already exists");
  if (!neighborhood.subset_of(space.all())) {
    throw Error("neighborhood of '" + label + "' contains a foreign vertex");
  }
  std::vector<std::string> labels = space.labels();
  labels.push_back(std::move(label));
  std::vector<Edge> edges = space.edges();
  const Vertex z = space.size();
  for (Vertex v : neighborhood) edges.emplace_back(v, z);
  return DigitalSpace::from_indices(std::move(labels), edges);
}

DigitalSpace delete_point(const DigitalSpace& space, Vertex v) {
  if (v >= space.size()) throw Error("unknown vertex index " + std::to_string(v));
  return induced(space, space.all().without(v));
}

std::vector<VertexSet> connected_components(const DigitalSpace& space, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= space.neighbors(v);
      next = (next & rest) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const DigitalSpace& space) {
  return connected_components(space, space.all());
}

bool is_connected(const DigitalSpace& space, VertexSet within) {
  if (within.empty()) return true;
  VertexSet comp = VertexSet::single(within.front());
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= space.neighbors(v);
    next = (next & within) - comp;
    comp |= next;
    frontier = next;
  }
  return comp == within;
}

bool is_connected(const DigitalSpace& space) { return is_connected(space, space.all()); }

bool is_separation(const DigitalSpace& space, VertexSet left, VertexSet partition,
                   VertexSet right) {
  if (left.intersects(partition) || left.intersects(right) || partition.intersects(right) ||
      (left | partition | right) != space.all()) {
    throw Error("left, partition and right do not partition the vertex set");
  }
  if (left.empty() || right.empty()) return false;
  for (Vertex v : left) {
    if (space.neighbors(v).intersects(right)) return false;
  }
  return true;
}

std::optional<SeparationResult> find_separation(const DigitalSpace& space,
                                                VertexSet partition) {
  if (!partition.subset_of(space.all())) {
    throw Error("partition is not contained in the space");
  }
  auto comps = connected_components(space, space.all() - partition);
  if (comps.size() < 2) return std::nullopt;
  SeparationResult out{comps.front(), partition, {}};
  for (std::size_t i = 1; i < comps.size(); ++i) out.right |= comps[i];
  return out;
}

}  // namespace digitop
