#pragma once

// Immutable simple undirected graphs and total labelings of their elements.
//
// Elements (vertices and edges) share one index space: vertex i has element
// index i, edge e has element index num_vertices() + e. Labelings, copy sets
// and the search all speak in element indices.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "magiccover/error.hpp"

namespace magiccover {

using VertexId = std::string;
using Label = std::int64_t;

inline constexpr char kEdgeKeySeparator = '|';

/// A vertex or an unordered edge, named by vertex ids. Edges keep the
/// lexicographically smaller endpoint first.
class ElementId {
 public:
  static ElementId vertex(VertexId v) { return ElementId(std::move(v), {}); }

  static ElementId edge(VertexId a, VertexId b) {
    if (b < a) std::swap(a, b);
    return ElementId(std::move(a), std::move(b));
  }

  /// Parses "v" or "u|w" (either endpoint order).
  static ElementId parse(std::string_view key) {
    const auto bar = key.find(kEdgeKeySeparator);
    if (bar == std::string_view::npos) return vertex(VertexId(key));
    return edge(VertexId(key.substr(0, bar)), VertexId(key.substr(bar + 1)));
  }

  bool is_vertex() const { return second_.empty(); }
  bool is_edge() const { return !second_.empty(); }
  const VertexId& first() const { return first_; }
  const VertexId& second() const { return second_; }

  std::string key() const {
    return is_vertex() ? first_ : first_ + kEdgeKeySeparator + second_;
  }

  auto operator<=>(const ElementId&) const = default;
  bool operator==(const ElementId&) const = default;

 private:
  ElementId(VertexId a, VertexId b) : first_(std::move(a)), second_(std::move(b)) {}

  VertexId first_;
  VertexId second_;
};

struct Edge {
  std::size_t u;  // endpoint with the lexicographically smaller id
  std::size_t v;
  bool operator==(const Edge&) const = default;
};

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

class Graph {
 public:
  Graph() = default;

  /// Vertex and edge order are kept exactly as given; edge endpoints are
  /// canonicalized.
  Graph(std::vector<VertexId> vertices, const EdgeList& edges) : vertices_(std::move(vertices)) {
    index_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      const auto& id = vertices_[i];
      require(!id.empty() && id.find(kEdgeKeySeparator) == std::string::npos,
              ErrorCode::InvalidVertexId, "vertex id '" + id + "' is empty or contains '|'");
      require(index_.emplace(id, i).second, ErrorCode::DuplicateVertex, "vertex '" + id + "'");
    }
    adjacency_.resize(vertices_.size());
    edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      const auto ia = find_vertex(a);
      const auto ib = find_vertex(b);
      require(ia.has_value(), ErrorCode::UnknownEndpoint, "edge endpoint '" + a + "'");
      require(ib.has_value(), ErrorCode::UnknownEndpoint, "edge endpoint '" + b + "'");
      require(*ia != *ib, ErrorCode::LoopEdge, "loop at '" + a + "'");
      Edge e = vertices_[*ia] < vertices_[*ib] ? Edge{*ia, *ib} : Edge{*ib, *ia};
      require(edge_index_.emplace(pair_key(std::min(*ia, *ib), std::max(*ia, *ib)), edges_.size()).second,
              ErrorCode::DuplicateEdge, ElementId::edge(a, b).key());
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
      edges_.push_back(e);
    }
  }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_elements() const { return vertices_.size() + edges_.size(); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexId& vertex_id(std::size_t v) const { return vertices_.at(v); }

  std::optional<std::size_t> find_vertex(std::string_view id) const {
    const auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t vertex_index(std::string_view id) const {
    const auto v = find_vertex(id);
    if (!v) fail(ErrorCode::UnknownVertex, "vertex '" + std::string(id) + "'");
    return *v;
  }

  std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const {
    const auto it = edge_index_.find(pair_key(std::min(a, b), std::max(a, b)));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  bool adjacent(std::size_t a, std::size_t b) const { return find_edge(a, b).has_value(); }

  /// Neighbors in edge-insertion order.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  bool is_vertex_element(std::size_t element) const { return element < vertices_.size(); }
  std::size_t edge_element(std::size_t e) const { return vertices_.size() + e; }

  ElementId element_id(std::size_t element) const {
    if (element < vertices_.size()) return ElementId::vertex(vertices_[element]);
    const auto& e = edges_.at(element - vertices_.size());
    return ElementId::edge(vertices_[e.u], vertices_[e.v]);
  }

  std::optional<std::size_t> find_element(const ElementId& id) const {
    const auto a = find_vertex(id.first());
    if (!a) return std::nullopt;
    if (id.is_vertex()) return a;
    const auto b = find_vertex(id.second());
    if (!b) return std::nullopt;
    const auto e = find_edge(*a, *b);
    if (!e) return std::nullopt;
    return edge_element(*e);
  }

  std::size_t element_index(const ElementId& id) const {
    const auto found = find_element(id);
    if (!found) fail(ErrorCode::UnknownElement, "element '" + id.key() + "'");
    return *found;
  }

  EdgeList edge_list() const {
    EdgeList out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(vertices_[e.u], vertices_[e.v]);
    return out;
  }

  bool is_connected() const {
    if (vertices_.empty()) return true;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == vertices_.size();
  }

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  static std::uint64_t pair_key(std::size_t a, std::size_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  }

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

inline Graph build_graph(std::vector<VertexId> vertices, const EdgeList& edges) {
  return Graph(std::move(vertices), edges);
}

/// Subgraph spanned by the given vertices and edges (element indices of
/// `g`), keeping `g`'s relative order.
inline Graph element_subgraph(const Graph& g, std::span<const std::size_t> vertices,
                              std::span<const std::size_t> edges) {
  std::vector<std::size_t> vs(vertices.begin(), vertices.end());
  std::vector<std::size_t> es(edges.begin(), edges.end());
  std::sort(vs.begin(), vs.end());
  std::sort(es.begin(), es.end());
  std::vector<VertexId> ids;
  for (auto v : vs) ids.push_back(g.vertex_id(v));
  EdgeList el;
  for (auto e : es) {
    const auto& edge = g.edges().at(e);
    el.emplace_back(g.vertex_id(edge.u), g.vertex_id(edge.v));
  }
  return Graph(std::move(ids), el);
}

/// Label of every element, indexed by element index. Not necessarily valid.
using LabelVector = std::vector<Label>;

struct BijectionCheck {
  bool bijective = true;
  bool super = true;
  std::optional<std::size_t> bad_element;  // first element breaking the property
  std::string reason;
};

/// Checks that `labels` maps the elements of `g` onto [1, |V|+|E|] and
/// whether vertices receive exactly [1, |V|].
inline BijectionCheck check_bijection(const Graph& g, std::span<const Label> labels) {
  BijectionCheck out;
  const auto n = static_cast<Label>(g.num_elements());
  if (labels.size() != g.num_elements()) {
    out.bijective = out.super = false;
    out.reason = "labeling has " + std::to_string(labels.size()) + " entries for " +
                 std::to_string(n) + " elements";
    return out;
  }
  std::vector<std::optional<std::size_t>> owner(labels.size() + 1);
  for (std::size_t el = 0; el < labels.size(); ++el) {
    const auto lbl = labels[el];
    if (lbl < 1 || lbl > n) {
      out.bijective = out.super = false;
      out.bad_element = el;
      out.reason = "label " + std::to_string(lbl) + " outside [1," + std::to_string(n) + "]";
      return out;
    }
    auto& slot = owner[static_cast<std::size_t>(lbl)];
    if (slot) {
      out.bijective = out.super = false;
      out.bad_element = el;
      out.reason = "label " + std::to_string(lbl) + " used twice";
      return out;
    }
    slot = el;
  }
  const auto nv = static_cast<Label>(g.num_vertices());
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (labels[v] > nv) {
      out.super = false;
      out.bad_element = v;
      out.reason = "vertex label " + std::to_string(labels[v]) + " outside [1," +
                   std::to_string(nv) + "]";
      break;
    }
  }
  return out;
}

/// A validated bijection from V ∪ E onto [|V|+|E|].
class TotalLabeling {
 public:
  static TotalLabeling from_vector(const Graph& g, LabelVector labels) {
    if (labels.size() != g.num_elements()) {
      fail(ErrorCode::WrongDomain, "expected " + std::to_string(g.num_elements()) +
                                       " labels, got " + std::to_string(labels.size()));
    }
    const auto check = check_bijection(g, labels);
    if (!check.bijective) {
      fail(ErrorCode::NotBijective, check.reason + " at '" +
                                        g.element_id(*check.bad_element).key() + "'");
    }
    return TotalLabeling(std::move(labels), g.num_vertices(), check.super);
  }

  const LabelVector& labels() const { return labels_; }
  Label operator[](std::size_t element) const { return labels_.at(element); }
  Label at(const Graph& g, const ElementId& id) const { return labels_.at(g.element_index(id)); }
  std::size_t size() const { return labels_.size(); }
  std::size_t num_vertices() const { return num_vertices_; }
  bool is_super() const { return super_; }

  bool operator==(const TotalLabeling&) const = default;

 private:
  TotalLabeling(LabelVector labels, std::size_t nv, bool super)
      : labels_(std::move(labels)), num_vertices_(nv), super_(super) {}

  LabelVector labels_;
  std::size_t num_vertices_ = 0;
  bool super_ = false;
};

/// Validates an assignment keyed by element ids. Keys must be exactly the
/// elements of `g`.
inline TotalLabeling total_label(const Graph& g, const std::map<ElementId, Label>& assignment) {
  LabelVector labels(g.num_elements(), 0);
  std::vector<char> seen(g.num_elements(), 0);
  for (const auto& [id, lbl] : assignment) {
    const auto el = g.find_element(id);
    if (!el) fail(ErrorCode::WrongDomain, "'" + id.key() + "' is not an element of the graph");
    labels[*el] = lbl;
    seen[*el] = 1;
  }
  for (std::size_t el = 0; el < seen.size(); ++el) {
    if (!seen[el]) fail(ErrorCode::WrongDomain, "no label for '" + g.element_id(el).key() + "'");
  }
  return TotalLabeling::from_vector(g, std::move(labels));
}

}  // namespace magiccover
