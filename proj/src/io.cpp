#include "digitop/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

namespace digitop {

namespace {

std::string edge_key(const std::string& a, const std::string& b) {
  return a < b ? a + '\0' + b : b + '\0' + a;
}

}  // namespace

DigitalSpace parse_json_graph(const Json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InputError("graph JSON needs a \"vertices\" array");
  }
  std::vector<std::string> vertices;
  std::unordered_set<std::string> seen;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InputError("vertex labels must be strings");
    auto label = v.get<std::string>();
    if (!seen.insert(label).second) throw InputError("duplicate vertex '" + label + "'");
    vertices.push_back(std::move(label));
  }
  std::vector<LabelPair> edges;
  std::unordered_set<std::string> seen_edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        throw InputError("each edge must be a pair of vertex labels");
      }
      auto a = e[0].get<std::string>();
      auto b = e[1].get<std::string>();
      if (!seen.contains(a) || !seen.contains(b)) {
        throw InputError("edge (" + a + ", " + b + ") references an undeclared vertex");
      }
      if (a == b) throw InputError("self-loop at '" + a + "'");
      if (!seen_edges.insert(edge_key(a, b)).second) {
        throw InputError("duplicate edge (" + a + ", " + b + ")");
      }
      edges.emplace_back(std::move(a), std::move(b));
    }
  }
  try {
    return DigitalSpace::from_labels(std::move(vertices), edges);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

DigitalSpace parse_edge_list(std::string_view text) {
  std::vector<std::string> vertices;
  std::unordered_set<std::string> seen;
  std::unordered_set<std::string> seen_edges;
  std::vector<LabelPair> edges;
  auto declare = [&](const std::string& v) {
    if (seen.insert(v).second) vertices.push_back(v);
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty() || parts.front().starts_with('#')) continue;
    if (parts.size() == 1) {
      declare(parts[0]);
    } else if (parts.size() == 2) {
      if (parts[0] == parts[1]) {
        throw InputError("line " + std::to_string(lineno) + ": self-loop at '" + parts[0] + "'");
      }
      if (!seen_edges.insert(edge_key(parts[0], parts[1])).second) {
        throw InputError("line " + std::to_string(lineno) + ": duplicate edge");
      }
      declare(parts[0]);
      declare(parts[1]);
      edges.emplace_back(parts[0], parts[1]);
    } else {
      throw InputError("line " + std::to_string(lineno) + ": expected one or two tokens");
    }
  }
  try {
    return DigitalSpace::from_labels(std::move(vertices), edges);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

DigitalSpace parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_json_graph(doc);
  }
  return parse_edge_list(text);
}

std::string read_text(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buf;
  if (path == "-") {
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

DigitalSpace read_graph(const std::string& path, std::istream& stdin_stream) {
  return parse_graph(read_text(path, stdin_stream));
}

Json to_json(const DigitalSpace& space) {
  Json edges = Json::array();
  for (const Edge& e : space.edges()) {
    edges.push_back({space.label(e.first), space.label(e.second)});
  }
  return Json{{"vertices", space.labels()}, {"edges", std::move(edges)}};
}

std::string to_edge_list(const DigitalSpace& space) {
  // Vertices are declared up front unless first appearance already yields
  // the stored order, so parsing gives back an equal space.
  std::vector<Vertex> appearance;
  VertexSet seen;
  auto note = [&](Vertex v) {
    if (!seen.contains(v)) {
      seen = seen.with(v);
      appearance.push_back(v);
    }
  };
  for (Vertex v = 0; v < space.size(); ++v) {
    if (space.degree(v) == 0) note(v);
  }
  for (const Edge& e : space.edges()) {
    note(e.first);
    note(e.second);
  }
  bool in_order = true;
  for (Vertex i = 0; i < appearance.size(); ++i) in_order = in_order && appearance[i] == i;

  std::ostringstream out;
  for (Vertex v = 0; v < space.size(); ++v) {
    if (!in_order || space.degree(v) == 0) out << space.label(v) << '\n';
  }
  for (const Edge& e : space.edges()) {
    out << space.label(e.first) << ' ' << space.label(e.second) << '\n';
  }
  return out.str();
}

Json labels_json(const DigitalSpace& space, VertexSet s) { return space.labels_of(s); }

}  // namespace digitop
