#pragma once

// Graphviz export. Vertices are drawn as "name [label]", edge labels go to
// the edge's `label` attribute.

#include <optional>
#include <span>
#include <sstream>
#include <string>

#include "magiccover/graph.hpp"

namespace magiccover {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

inline std::string to_dot(const Graph& g, std::optional<std::span<const Label>> labels = std::nullopt,
                          const std::string& name = "G") {
  std::ostringstream os;
  os << "graph " << dot_quote(name) << " {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const auto& id = g.vertex_id(v);
    os << "  " << dot_quote(id);
    if (labels) os << " [label=" << dot_quote(id + " [" + std::to_string((*labels)[v]) + "]") << "]";
    os << ";\n";
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edges()[e];
    os << "  " << dot_quote(g.vertex_id(edge.u)) << " -- " << dot_quote(g.vertex_id(edge.v));
    if (labels) os << " [label=" << dot_quote(std::to_string((*labels)[g.edge_element(e)])) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace magiccover
