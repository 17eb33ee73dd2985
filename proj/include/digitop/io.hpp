// Graph file formats.
//
//   JSON:      {"vertices": ["a", "b", ...], "edges": [["a", "b"], ...]}
//   Edge list: one "u v" per line, a lone "v" declares an isolated vertex,
//              lines starting with '#' are comments.

#ifndef DIGITOP_IO_HPP
#define DIGITOP_IO_HPP

#include <istream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "digitop/space.hpp"

namespace digitop {

using Json = nlohmann::ordered_json;

DigitalSpace parse_json_graph(const Json& doc);
DigitalSpace parse_edge_list(std::string_view text);
/// Picks the format from the first significant character ('{' means JSON).
DigitalSpace parse_graph(std::string_view text);
/// Reads a graph from `path`; "-" reads `stdin_stream`.
DigitalSpace read_graph(const std::string& path, std::istream& stdin_stream);
std::string read_text(const std::string& path, std::istream& stdin_stream);

Json to_json(const DigitalSpace& space);
std::string to_edge_list(const DigitalSpace& space);
Json labels_json(const DigitalSpace& space, VertexSet s);

}  // namespace digitop

#endif  // DIGITOP_IO_HPP
