#pragma once

// Graph families used by the supermagic constructions. Composite families
// (amalgamations, path attachments) also return a CopyStructure recording
// which elements form each canonical copy and in which slot order the
// labeling formulas visit them.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "magiccover/error.hpp"
#include "magiccover/graph.hpp"

namespace magiccover {

enum class ElementRole { Hub, SharedVertex, SharedEdge, BranchVertex, BranchEdge, PathVertex, PathEdge };

/// Position of an element in the family's coordinate system. `index` is the
/// 1-based slot inside the unit (vertex or edge number), `copy` the 1-based
/// copy. Path vertices and edges use `index` for their path position and
/// `copy` equal to it.
struct ElementCoord {
  ElementRole role = ElementRole::Hub;
  int index = 0;
  int copy = 0;
  bool operator==(const ElementCoord&) const = default;
};

struct CopyStructure {
  int k = 0;
  int unit_vertices = 0;  // n: vertices of the unit, attachment vertex included
  int unit_edges = 0;     // m
  /// Elements of each copy H^j / G^i, shared elements included, sorted.
  std::vector<std::vector<std::size_t>> copies;
  /// Per-copy elements in formula order: v_1 .. v_{n-1}, then e_1 .. e_m.
  /// Shared and path elements are excluded.
  std::vector<std::vector<std::size_t>> slots;
  std::vector<std::size_t> shared;         // hub or identified block
  std::vector<std::size_t> path_vertices;  // w_1 .. w_k
  std::vector<std::size_t> path_edges;     // w_1w_2 .. w_{k-1}w_k
  std::vector<ElementCoord> coords;        // indexed by element
};

/// A composite family: the graph, its copy metadata and the unit it is built
/// from (reordered so the attachment block comes last).
struct FamilyGraph {
  Graph graph;
  CopyStructure structure;
  Graph unit;
};

namespace detail {

inline std::string branch_name(std::size_t slot, int copy) {
  return "v" + std::to_string(slot) + "_" + std::to_string(copy);
}

inline void require_param(bool ok, const std::string& what) {
  require(ok, ErrorCode::ParamOutOfRange, what);
}

/// Moves the vertices in `last` (kept in H order) behind all other vertices.
inline Graph reorder_unit(const Graph& h, const std::vector<std::size_t>& last) {
  std::vector<char> is_last(h.num_vertices(), 0);
  for (auto v : last) is_last[v] = 1;
  std::vector<VertexId> order;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (!is_last[v]) order.push_back(h.vertex_id(v));
  }
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (is_last[v]) order.push_back(h.vertex_id(v));
  }
  return Graph(std::move(order), h.edge_list());
}

inline void sort_copies(CopyStructure& cs) {
  for (auto& c : cs.copies) std::sort(c.begin(), c.end());
  std::sort(cs.shared.begin(), cs.shared.end());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Simple families

/// K_{1,n-1}: center "c", leaves "l1" .. "l{n-1}".
inline Graph star(int n) {
  detail::require_param(n >= 2, "star needs n >= 2, got " + std::to_string(n));
  std::vector<VertexId> vs{"c"};
  EdgeList es;
  for (int i = 1; i < n; ++i) {
    vs.push_back("l" + std::to_string(i));
    es.emplace_back("c", vs.back());
  }
  return Graph(std::move(vs), es);
}

/// P_k on "p1" .. "pk".
inline Graph path(int k) {
  detail::require_param(k >= 1, "path needs k >= 1, got " + std::to_string(k));
  std::vector<VertexId> vs;
  EdgeList es;
  for (int i = 1; i <= k; ++i) {
    vs.push_back("p" + std::to_string(i));
    if (i > 1) es.emplace_back(vs[i - 2], vs[i - 1]);
  }
  return Graph(std::move(vs), es);
}

/// C_n on "c1" .. "cn".
inline Graph cycle(int n) {
  detail::require_param(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<VertexId> vs;
  EdgeList es;
  for (int i = 1; i <= n; ++i) vs.push_back("c" + std::to_string(i));
  for (int i = 0; i < n; ++i) es.emplace_back(vs[i], vs[(i + 1) % n]);
  return Graph(std::move(vs), es);
}

/// W_n: hub "x0", rim "x1" .. "xn"; spokes first, then the rim cycle.
inline Graph wheel(int n) {
  detail::require_param(n >= 3, "wheel needs n >= 3, got " + std::to_string(n));
  std::vector<VertexId> vs{"x0"};
  for (int i = 1; i <= n; ++i) vs.push_back("x" + std::to_string(i));
  EdgeList es;
  for (int i = 1; i <= n; ++i) es.emplace_back("x0", vs[i]);
  for (int i = 1; i <= n; ++i) es.emplace_back(vs[i], vs[i % n + 1]);
  return Graph(std::move(vs), es);
}

/// K_4 minus the edge v1v3. v4 (degree 3) is last and is the attachment
/// vertex; the edge order e_1..e_5 = v3v4, v1v4, v1v2, v2v4, v2v3.
inline Graph k4_minus() {
  return Graph({"v1", "v2", "v3", "v4"},
               {{"v3", "v4"}, {"v1", "v4"}, {"v1", "v2"}, {"v2", "v4"}, {"v2", "v3"}});
}

/// Flower: wheel W_n plus y_i adjacent to x_i and x0. Edge order: x0x_i,
/// x0y_i, x_iy_i, x_ix_{i+1} (indices mod n).
inline Graph flower(int n) {
  detail::require_param(n >= 3, "flower needs n >= 3, got " + std::to_string(n));
  std::vector<VertexId> vs{"x0"};
  for (int i = 1; i <= n; ++i) vs.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) vs.push_back("y" + std::to_string(i));
  const auto x = [](int i) { return "x" + std::to_string(i); };
  const auto y = [](int i) { return "y" + std::to_string(i); };
  EdgeList es;
  for (int i = 1; i <= n; ++i) es.emplace_back("x0", x(i));
  for (int i = 1; i <= n; ++i) es.emplace_back("x0", y(i));
  for (int i = 1; i <= n; ++i) es.emplace_back(x(i), y(i));
  for (int i = 1; i <= n; ++i) es.emplace_back(x(i), x(i % n + 1));
  return Graph(std::move(vs), es);
}

// ---------------------------------------------------------------------------
// Composite families

/// A_k(H, v): k copies of H with v identified into the hub "hub". Copy j's
/// other vertices are named "v{i}_{j}" following H's order with v removed.
inline FamilyGraph amalgamate(const Graph& h, const VertexId& v, int k) {
  const auto attach = h.find_vertex(v);
  require(attach.has_value(), ErrorCode::UnknownVertex, "attachment vertex '" + v + "'");
  detail::require_param(k >= 1, "amalgamation needs k >= 1, got " + std::to_string(k));
  detail::require_param(h.is_connected(), "amalgamation unit must be connected");

  FamilyGraph out;
  out.unit = detail::reorder_unit(h, {*attach});
  const Graph& unit = out.unit;
  const auto n = unit.num_vertices();
  const auto m = unit.num_edges();

  const auto name = [&](std::size_t unit_vertex, int copy) -> VertexId {
    return unit_vertex == n - 1 ? VertexId("hub") : detail::branch_name(unit_vertex + 1, copy);
  };
  std::vector<VertexId> vs{"hub"};
  for (int j = 1; j <= k; ++j) {
    for (std::size_t i = 0; i + 1 < n; ++i) vs.push_back(name(i, j));
  }
  EdgeList es;
  for (int j = 1; j <= k; ++j) {
    for (const auto& e : unit.edges()) es.emplace_back(name(e.u, j), name(e.v, j));
  }
  out.graph = Graph(std::move(vs), es);
  const Graph& g = out.graph;

  auto& cs = out.structure;
  cs.k = k;
  cs.unit_vertices = static_cast<int>(n);
  cs.unit_edges = static_cast<int>(m);
  cs.coords.resize(g.num_elements());
  const auto hub = g.vertex_index("hub");
  cs.shared = {hub};
  cs.coords[hub] = {ElementRole::Hub, static_cast<int>(n), 0};
  for (int j = 1; j <= k; ++j) {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const auto el = g.vertex_index(name(i, j));
      slots.push_back(el);
      cs.coords[el] = {ElementRole::BranchVertex, static_cast<int>(i + 1), j};
    }
    for (std::size_t e = 0; e < m; ++e) {
      const auto& ue = unit.edges()[e];
      const auto el = g.edge_element(*g.find_edge(g.vertex_index(name(ue.u, j)),
                                                  g.vertex_index(name(ue.v, j))));
      slots.push_back(el);
      cs.coords[el] = {ElementRole::BranchEdge, static_cast<int>(e + 1), j};
    }
    std::vector<std::size_t> copy = slots;
    copy.push_back(hub);
    cs.copies.push_back(std::move(copy));
    cs.slots.push_back(std::move(slots));
  }
  detail::sort_copies(cs);
  return out;
}

/// A_k(H, H'): copies of H glued along the induced block H' given as vertex
/// and edge elements of H. Shared vertices are "hub" (one vertex) or
/// "hub1" .. "hub{l}"; free vertices are "v{i}_{j}".
inline FamilyGraph amalgamate_on_subgraph(const Graph& h, const std::vector<ElementId>& block,
                                          int k) {
  detail::require_param(k >= 1, "amalgamation needs k >= 1, got " + std::to_string(k));
  std::vector<char> in_block(h.num_vertices(), 0);
  std::vector<std::size_t> block_vertices;
  std::vector<std::pair<VertexId, VertexId>> block_edges;
  for (const auto& id : block) {
    if (id.is_vertex()) {
      const auto v = h.vertex_index(id.first());
      if (!in_block[v]) block_vertices.push_back(v);
      in_block[v] = 1;
    } else {
      block_edges.emplace_back(id.first(), id.second());
    }
  }
  detail::require_param(!block_vertices.empty(), "shared block has no vertices");
  std::vector<char> edge_in_block(h.num_edges(), 0);
  for (const auto& [a, b] : block_edges) {
    const auto ia = h.vertex_index(a);
    const auto ib = h.vertex_index(b);
    require(in_block[ia] && in_block[ib], ErrorCode::NotInduced,
            "block edge " + ElementId::edge(a, b).key() + " leaves the block vertices");
    const auto e = h.find_edge(ia, ib);
    require(e.has_value(), ErrorCode::NotInduced,
            "block edge " + ElementId::edge(a, b).key() + " is not an edge of H");
    edge_in_block[*e] = 1;
  }
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto& edge = h.edges()[e];
    require(!(in_block[edge.u] && in_block[edge.v]) || edge_in_block[e], ErrorCode::NotInduced,
            "edge " + h.element_id(h.edge_element(e)).key() + " joins block vertices but is missing");
  }

  FamilyGraph out;
  std::sort(block_vertices.begin(), block_vertices.end());
  out.unit = detail::reorder_unit(h, block_vertices);
  const Graph& unit = out.unit;
  const auto n = unit.num_vertices();
  const auto ell = block_vertices.size();
  const auto free_n = n - ell;

  const auto name = [&](std::size_t uv, int copy) -> VertexId {
    if (uv >= free_n) return ell == 1 ? VertexId("hub") : "hub" + std::to_string(uv - free_n + 1);
    return detail::branch_name(uv + 1, copy);
  };
  const auto shared_edge = [&](const Edge& e) { return e.u >= free_n && e.v >= free_n; };

  std::vector<VertexId> vs;
  for (std::size_t r = free_n; r < n; ++r) vs.push_back(name(r, 0));
  for (int j = 1; j <= k; ++j) {
    for (std::size_t i = 0; i < free_n; ++i) vs.push_back(name(i, j));
  }
  EdgeList es;
  for (const auto& e : unit.edges()) {
    if (shared_edge(e)) es.emplace_back(name(e.u, 0), name(e.v, 0));
  }
  for (int j = 1; j <= k; ++j) {
    for (const auto& e : unit.edges()) {
      if (!shared_edge(e)) es.emplace_back(name(e.u, j), name(e.v, j));
    }
  }
  out.graph = Graph(std::move(vs), es);
  const Graph& g = out.graph;

  auto& cs = out.structure;
  cs.k = k;
  cs.unit_vertices = static_cast<int>(n);
  cs.unit_edges = static_cast<int>(unit.num_edges());
  cs.coords.resize(g.num_elements());
  for (std::size_t r = free_n; r < n; ++r) {
    const auto el = g.vertex_index(name(r, 0));
    cs.shared.push_back(el);
    cs.coords[el] = {ell == 1 ? ElementRole::Hub : ElementRole::SharedVertex,
                     static_cast<int>(r + 1), 0};
  }
  int shared_edge_no = 0;
  for (const auto& e : unit.edges()) {
    if (!shared_edge(e)) continue;
    const auto el = g.edge_element(*g.find_edge(g.vertex_index(name(e.u, 0)),
                                                g.vertex_index(name(e.v, 0))));
    cs.shared.push_back(el);
    cs.coords[el] = {ElementRole::SharedEdge, ++shared_edge_no, 0};
  }
  for (int j = 1; j <= k; ++j) {
    std::vector<std::size_t> slots;
    for (std::size_t i = 0; i < free_n; ++i) {
      const auto el = g.vertex_index(name(i, j));
      slots.push_back(el);
      cs.coords[el] = {ElementRole::BranchVertex, static_cast<int>(i + 1), j};
    }
    int edge_no = 0;
    for (const auto& e : unit.edges()) {
      if (shared_edge(e)) continue;
      const auto el = g.edge_element(*g.find_edge(g.vertex_index(name(e.u, j)),
                                                  g.vertex_index(name(e.v, j))));
      slots.push_back(el);
      cs.coords[el] = {ElementRole::BranchEdge, ++edge_no, j};
    }
    std::vector<std::size_t> copy = slots;
    copy.insert(copy.end(), cs.shared.begin(), cs.shared.end());
    cs.copies.push_back(std::move(copy));
    cs.slots.push_back(std::move(slots));
  }
  detail::sort_copies(cs);
  return out;
}

/// P_k(G, v): copy i of G hangs off path vertex "w{i}" (the image of v);
/// its other vertices are "v{j}_{i}" following G's order with v removed.
inline FamilyGraph path_attach(const Graph& g0, const VertexId& v, int k) {
  const auto attach = g0.find_vertex(v);
  require(attach.has_value(), ErrorCode::UnknownVertex, "attachment vertex '" + v + "'");
  detail::require_param(k >= 2, "path attachment needs k >= 2, got " + std::to_string(k));

  FamilyGraph out;
  out.unit = detail::reorder_unit(g0, {*attach});
  const Graph& unit = out.unit;
  const auto n = unit.num_vertices();
  const auto m = unit.num_edges();

  const auto w = [](int i) { return "w" + std::to_string(i); };
  const auto name = [&](std::size_t uv, int copy) -> VertexId {
    return uv == n - 1 ? w(copy) : detail::branch_name(uv + 1, copy);
  };
  std::vector<VertexId> vs;
  for (int i = 1; i <= k; ++i) vs.push_back(w(i));
  for (int i = 1; i <= k; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) vs.push_back(name(j, i));
  }
  EdgeList es;
  for (int i = 1; i <= k; ++i) {
    for (const auto& e : unit.edges()) es.emplace_back(name(e.u, i), name(e.v, i));
  }
  for (int i = 1; i < k; ++i) es.emplace_back(w(i), w(i + 1));
  out.graph = Graph(std::move(vs), es);
  const Graph& g = out.graph;

  auto& cs = out.structure;
  cs.k = k;
  cs.unit_vertices = static_cast<int>(n);
  cs.unit_edges = static_cast<int>(m);
  cs.coords.resize(g.num_elements());
  for (int i = 1; i <= k; ++i) {
    const auto wi = g.vertex_index(w(i));
    cs.path_vertices.push_back(wi);
    cs.coords[wi] = {ElementRole::PathVertex, i, i};
    std::vector<std::size_t> slots;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const auto el = g.vertex_index(name(j, i));
      slots.push_back(el);
      cs.coords[el] = {ElementRole::BranchVertex, static_cast<int>(j + 1), i};
    }
    for (std::size_t e = 0; e < m; ++e) {
      const auto& ue = unit.edges()[e];
      const auto el = g.edge_element(*g.find_edge(g.vertex_index(name(ue.u, i)),
                                                  g.vertex_index(name(ue.v, i))));
      slots.push_back(el);
      cs.coords[el] = {ElementRole::BranchEdge, static_cast<int>(e + 1), i};
    }
    std::vector<std::size_t> copy = slots;
    copy.push_back(wi);
    cs.copies.push_back(std::move(copy));
    cs.slots.push_back(std::move(slots));
  }
  for (int i = 1; i < k; ++i) {
    const auto el = g.edge_element(*g.find_edge(g.vertex_index(w(i)), g.vertex_index(w(i + 1))));
    cs.path_edges.push_back(el);
    cs.coords[el] = {ElementRole::PathEdge, i, i};
  }
  detail::sort_copies(cs);
  return out;
}

/// Banana tree unit: star(n) with an extra stem vertex "s" on leaf "l1".
inline Graph banana_unit(int n) {
  detail::require_param(n >= 3, "banana tree needs n >= 3, got " + std::to_string(n));
  const Graph s = star(n);
  auto vs = s.vertices();
  vs.push_back("s");
  auto es = s.edge_list();
  es.emplace_back("l1", "s");
  return Graph(std::move(vs), es);
}

/// B_{k,n} = A_k(banana_unit(n), s).
inline FamilyGraph banana(int k, int n) {
  detail::require_param(k >= 1, "banana tree needs k >= 1, got " + std::to_string(k));
  return amalgamate(banana_unit(n), "s", k);
}

/// F_{k,n} = P_k(star(n), last leaf).
inline FamilyGraph firecracker(int k, int n) {
  detail::require_param(k >= 2, "firecracker needs k >= 2, got " + std::to_string(k));
  detail::require_param(n >= 4, "firecracker needs n >= 4, got " + std::to_string(n));
  return path_attach(star(n), "l" + std::to_string(n - 1), k);
}

}  // namespace magiccover
