#pragma once

// JSON forms shared by the CLI:
//   graph     {"vertices":["x0",...], "edges":[["x0","x1"],...]}
//   labeling  {"labels":{"x0":8, "x0|x1":43, ...}}   (edge keys "u|v", u < v)
// Output objects keep insertion order so files are byte-stable.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "magiccover/error.hpp"
#include "magiccover/graph.hpp"
#include "magiccover/isocover.hpp"
#include "magiccover/search.hpp"
#include "magiccover/verifier.hpp"

namespace magiccover {

using Json = nlohmann::ordered_json;

inline Json graph_to_json(const Graph& g) {
  Json out;
  out["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& [a, b] : g.edge_list()) edges.push_back({a, b});
  out["edges"] = std::move(edges);
  return out;
}

inline Graph graph_from_json(const Json& j) {
  try {
    require(j.is_object() && j.contains("vertices") && j.contains("edges"), ErrorCode::ParseError,
            "graph JSON needs \"vertices\" and \"edges\"");
    auto vertices = j.at("vertices").get<std::vector<VertexId>>();
    EdgeList edges;
    for (const auto& e : j.at("edges")) {
      require(e.is_array() && e.size() == 2, ErrorCode::ParseError, "edge must be a pair of ids");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    return Graph(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, ex.what());
  }
}

/// {"x0": 8, "x0|x1": 43, ...} in element order.
inline Json labels_to_json(const Graph& g, std::span<const Label> labels) {
  Json out = Json::object();
  for (std::size_t el = 0; el < g.num_elements(); ++el) out[g.element_id(el).key()] = labels[el];
  return out;
}

/// Reads the "labels" object (or a bare key->label object). Keys must name
/// exactly the elements of `g`; edge keys may use either endpoint order.
inline LabelVector labels_from_json(const Graph& g, const Json& j) {
  const Json& obj = j.contains("labels") ? j.at("labels") : j;
  require(obj.is_object(), ErrorCode::ParseError, "labeling JSON must be an object");
  LabelVector labels(g.num_elements(), 0);
  std::vector<char> seen(g.num_elements(), 0);
  for (const auto& [key, value] : obj.items()) {
    const auto el = g.find_element(ElementId::parse(key));
    require(el.has_value(), ErrorCode::WrongDomain, "'" + key + "' is not an element of the graph");
    require(value.is_number_integer(), ErrorCode::ParseError, "label of '" + key + "' is not an integer");
    require(!seen[*el], ErrorCode::WrongDomain, "'" + key + "' labeled twice");
    labels[*el] = value.get<Label>();
    seen[*el] = 1;
  }
  for (std::size_t el = 0; el < seen.size(); ++el) {
    require(seen[el], ErrorCode::WrongDomain, "no label for '" + g.element_id(el).key() + "'");
  }
  return labels;
}

inline Json copy_to_json(const Graph& g, const CopySet& c) {
  Json out;
  Json vs = Json::array();
  for (auto v : c.vertices) vs.push_back(g.vertex_id(v));
  Json es = Json::array();
  for (auto e : c.edges) {
    const auto& edge = g.edges()[e];
    es.push_back({g.vertex_id(edge.u), g.vertex_id(edge.v)});
  }
  out["vertices"] = std::move(vs);
  out["edges"] = std::move(es);
  return out;
}

inline Json report_to_json(const Graph& g, const VerificationReport& r) {
  Json out;
  out["certified"] = r.certified();
  out["is_bijection"] = r.is_bijection;
  out["is_super"] = r.is_super;
  out["admits_covering"] = r.admits_covering;
  out["copy_count"] = r.copies.size();
  out["magic_sum"] = r.magic_sum ? Json(*r.magic_sum) : Json(nullptr);
  out["copy_sums"] = r.copy_sums;
  Json copies = Json::array();
  for (std::size_t i = 0; i < r.copies.size(); ++i) {
    Json c = copy_to_json(g, r.copies[i]);
    c["sum"] = r.copy_sums[i];
    copies.push_back(std::move(c));
  }
  out["copies"] = std::move(copies);
  if (r.failure) {
    const auto& f = *r.failure;
    Json fj;
    fj["kind"] = std::string(to_string(f.kind));
    fj["detail"] = f.detail;
    if (f.element) fj["element"] = g.element_id(*f.element).key();
    if (f.kind == FailureKind::SumMismatch) {
      fj["copy_a"] = f.copy_a;
      fj["sum_a"] = f.sum_a;
      fj["copy_b"] = f.copy_b;
      fj["sum_b"] = f.sum_b;
    }
    out["failure"] = std::move(fj);
  } else {
    out["failure"] = nullptr;
  }
  return out;
}

inline std::string report_to_text(const Graph& g, const VerificationReport& r) {
  std::ostringstream os;
  os << "bijection: " << (r.is_bijection ? "yes" : "no") << '\n'
     << "super: " << (r.is_super ? "yes" : "no") << '\n'
     << "covering: " << (r.admits_covering ? "yes" : "no") << '\n'
     << "copies: " << r.copies.size() << '\n';
  if (r.magic_sum) {
    os << "magic sum: " << *r.magic_sum << '\n';
  } else if (r.failure) {
    os << "FAILED (" << to_string(r.failure->kind) << "): " << r.failure->detail << '\n';
    if (r.failure->kind == FailureKind::SumMismatch) {
      const auto show = [&](std::size_t i) {
        os << "  copy " << i << " {";
        const auto els = r.copies[i].elements(g);
        for (std::size_t e = 0; e < els.size(); ++e) os << (e ? " " : "") << g.element_id(els[e]).key();
        os << "} sum " << r.copy_sums[i] << '\n';
      };
      show(r.failure->copy_a);
      show(r.failure->copy_b);
    }
  }
  return os.str();
}

inline Json outcome_to_json(const Graph& g, const SearchOutcome& o) {
  Json out;
  out["outcome"] = std::string(to_string(o.kind));
  out["nodes"] = o.nodes;
  if (o.kind == OutcomeKind::Count || o.kind == OutcomeKind::Exhausted) out["count"] = o.count;
  out["magic_sum"] = o.magic_sum ? Json(*o.magic_sum) : Json(nullptr);
  if (o.solution) out["labels"] = labels_to_json(g, o.solution->labels());
  return out;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::IoError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    fail(ErrorCode::ParseError, path + ": " + ex.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
}

}  // namespace magiccover
