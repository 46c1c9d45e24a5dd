#pragma once

// Explicit supermagic labelings: amalgamations A_k(H,v) and A_k(H,H'),
// path attachments P_k(G,v) and flowers, with their closed-form magic sums.

#include <optional>
#include <string>
#include <vector>

#include "magiccover/error.hpp"
#include "magiccover/families.hpp"
#include "magiccover/graph.hpp"

namespace magiccover {

struct LabeledFamily {
  FamilyGraph family;
  TotalLabeling labeling;
};

// ---------------------------------------------------------------------------
// Amalgamation A_k(H, v)

enum class AmalgamationCase {
  OddTotal,        // n+m odd
  EvenTotalOddK,   // n+m even, k odd
  EvenTotalEvenK,  // n+m even, k even
};

inline AmalgamationCase amalgamation_case(int n, int m, int k) {
  if ((n + m) % 2 == 1) return AmalgamationCase::OddTotal;
  return k % 2 == 1 ? AmalgamationCase::EvenTotalOddK : AmalgamationCase::EvenTotalEvenK;
}

/// Common copy sum of the amalgamation labeling: the two parity branches of
/// (n+m-1)(k-1), each evaluated over a single denominator.
inline Label amalgamation_magic_sum(int n, int m, int k) {
  require(n >= 1 && m >= 0 && k >= 1, ErrorCode::ParamOutOfRange,
          "amalgamation sum needs n >= 1, m >= 0, k >= 1");
  const Label s = n + m;
  const Label kk = k;
  const Label numerator = ((s - 1) * (kk - 1)) % 2 == 0
                              ? 3 * s - 1 + kk * (s - 1) * (s - 1)
                              : 3 * s - 2 + kk * ((s - 1) * (s - 1) + 1);
  require(numerator % 2 == 0, ErrorCode::ParamOutOfRange, "magic sum is not an integer");
  return numerator / 2;
}

namespace detail {

/// Alternating block pattern: slot t (1-based) takes the k labels
/// offset + [(t-1)k+1, tk], ascending in the copy index for odd t and
/// descending for even t.
inline Label alternating_label(int slot, int copy, int k, Label offset) {
  return slot % 2 == 1 ? offset + Label(slot - 1) * k + copy : offset + Label(slot) * k + 1 - copy;
}

}  // namespace detail

/// Labels a family produced by amalgamate(). Hub and the first three
/// per-copy slots follow the parity case; all other slots use the
/// alternating pattern.
inline TotalLabeling label_amalgamation(const FamilyGraph& fam) {
  const auto& cs = fam.structure;
  require(cs.shared.size() == 1, ErrorCode::ParamOutOfRange,
          "label_amalgamation expects a single hub vertex");
  const int n = cs.unit_vertices;
  const int m = cs.unit_edges;
  const int k = cs.k;
  const int slots = n + m - 1;
  const auto which = amalgamation_case(n, m, k);
  require(which == AmalgamationCase::OddTotal || slots >= 3, ErrorCode::ParamOutOfRange,
          "n+m even needs at least three non-hub elements per copy");

  LabelVector labels(fam.graph.num_elements(), 0);
  labels[cs.shared.front()] = which == AmalgamationCase::EvenTotalEvenK ? k / 2 + 1 : 1;
  for (int j = 1; j <= k; ++j) {
    const auto& seq = cs.slots[j - 1];
    for (int t = 1; t <= slots; ++t) {
      Label lbl = detail::alternating_label(t, j, k, 1);
      if (which == AmalgamationCase::EvenTotalOddK && t <= 3) {
        const bool low = j <= (k - 1) / 2;
        switch (t) {
          case 1: lbl = 1 + j; break;
          case 2: lbl = low ? 3 * (k + 1) / 2 + j : (k + 3) / 2 + j; break;
          default: lbl = low ? 3 * k + 2 - 2 * j : 4 * k + 2 - 2 * j; break;
        }
      } else if (which == AmalgamationCase::EvenTotalEvenK && t <= 3) {
        const bool low = j <= k / 2;
        switch (t) {
          case 1: lbl = low ? j : j + 1; break;
          case 2: lbl = low ? 3 * k / 2 + 1 + j : k / 2 + 1 + j; break;
          default: lbl = low ? 3 * (k + 1) - 2 * j : 4 * k + 2 - 2 * j; break;
        }
      }
      labels[seq[t - 1]] = lbl;
    }
  }
  return TotalLabeling::from_vector(fam.graph, std::move(labels));
}

inline LabeledFamily label_amalgamation(const Graph& h, const VertexId& v, int k) {
  auto fam = amalgamate(h, v, k);
  auto labeling = label_amalgamation(fam);
  return {std::move(fam), std::move(labeling)};
}

// ---------------------------------------------------------------------------
// Generalized amalgamation A_k(H, H')

/// Labels a family produced by amalgamate_on_subgraph(). Order of label
/// blocks: shared vertices, free vertex slots, shared edges, free edge
/// slots, so vertices always receive [1, |V|].
inline TotalLabeling label_generalized_amalgamation(const FamilyGraph& fam) {
  const auto& cs = fam.structure;
  const auto& g = fam.graph;
  std::vector<std::size_t> shared_vertices;
  std::vector<std::size_t> shared_edges;
  for (auto el : cs.shared) (g.is_vertex_element(el) ? shared_vertices : shared_edges).push_back(el);
  const int k = cs.k;
  const int free_vertices = cs.unit_vertices - static_cast<int>(shared_vertices.size());
  const int free_total = static_cast<int>(cs.slots.front().size());
  require(free_total % 2 == 0, ErrorCode::ParityViolation,
          "free elements per copy = " + std::to_string(free_total) + " must be even");

  LabelVector labels(g.num_elements(), 0);
  Label next = 1;
  for (auto el : shared_vertices) labels[el] = next++;
  const Label vertex_offset = next - 1;
  next += Label(k) * free_vertices;
  for (auto el : shared_edges) labels[el] = next++;
  const Label edge_offset = vertex_offset + static_cast<Label>(shared_edges.size());
  for (int j = 1; j <= k; ++j) {
    const auto& seq = cs.slots[j - 1];
    for (int t = 1; t <= free_total; ++t) {
      const Label offset = t <= free_vertices ? vertex_offset : edge_offset;
      labels[seq[t - 1]] = detail::alternating_label(t, j, k, offset);
    }
  }
  return TotalLabeling::from_vector(g, std::move(labels));
}

inline LabeledFamily label_generalized_amalgamation(const Graph& h, const std::vector<ElementId>& block,
                                                    int k) {
  auto fam = amalgamate_on_subgraph(h, block, k);
  auto labeling = label_generalized_amalgamation(fam);
  return {std::move(fam), std::move(labeling)};
}

// ---------------------------------------------------------------------------
// Path attachment P_k(G, v)

inline Label path_attach_magic_sum(int n, int m, int k) {
  require(n >= 1 && m >= 0 && k >= 2, ErrorCode::ParamOutOfRange,
          "path attachment sum needs n >= 1, m >= 0, k >= 2");
  const Label s = n + m;
  return s * ((s + 1) * k + 1) + (k + 1) / 2;
}

/// f(w_i): odd positions get 1, 2, ...; even positions continue after ceil(k/2).
inline Label path_vertex_label(int i, int k) {
  return i % 2 == 1 ? (i + 1) / 2 : (k + 1) / 2 + i / 2;
}

/// A_i - f(w_i): the label sum of branch i without its path vertex.
inline Label path_attach_branch_offset(int n, int m, int k) {
  const Label s = n + m;
  return ((s - 1) * (s + 1) * k + (s - 1)) / 2;
}

/// Labels a family produced by path_attach(). Requires (n+m-1)(k-1) even.
inline TotalLabeling label_path_attach(const FamilyGraph& fam) {
  const auto& cs = fam.structure;
  const int n = cs.unit_vertices;
  const int m = cs.unit_edges;
  const int k = cs.k;
  const int slots = n + m - 1;
  require(k >= 2 && static_cast<int>(cs.path_vertices.size()) == k, ErrorCode::ParamOutOfRange,
          "label_path_attach expects a path attachment with k >= 2");
  require(slots % 2 == 0 || k % 2 == 1, ErrorCode::ParityViolation,
          "(n+m-1)(k-1) is odd for n+m=" + std::to_string(n + m) + ", k=" + std::to_string(k));
  const bool special = slots % 2 == 1;
  require(!special || slots >= 3, ErrorCode::ParamOutOfRange,
          "n+m-1 odd needs at least three non-attachment elements per copy");

  LabelVector labels(fam.graph.num_elements(), 0);
  for (int i = 1; i <= k; ++i) labels[cs.path_vertices[i - 1]] = path_vertex_label(i, k);
  for (int i = 1; i < k; ++i) labels[cs.path_edges[i - 1]] = Label(n + m + 1) * k - i;
  for (int i = 1; i <= k; ++i) {
    const auto& seq = cs.slots[i - 1];
    for (int s = 1; s <= slots; ++s) {
      Label lbl = s % 2 == 1 ? Label(s) * k + i : Label(s + 1) * k + 1 - i;
      if (special && s <= 3) {
        const bool low = i <= (k - 1) / 2;
        switch (s) {
          case 1: lbl = k + i; break;
          case 2: lbl = low ? (5 * k + 1) / 2 + i : (3 * k + 1) / 2 + i; break;
          default: lbl = low ? 4 * k + 1 - 2 * i : 5 * k + 1 - 2 * i; break;
        }
      }
      labels[seq[s - 1]] = lbl;
    }
  }
  return TotalLabeling::from_vector(fam.graph, std::move(labels));
}

inline LabeledFamily label_path_attach(const Graph& g, const VertexId& v, int k) {
  auto fam = path_attach(g, v, k);
  auto labeling = label_path_attach(fam);
  return {std::move(fam), std::move(labeling)};
}

// ---------------------------------------------------------------------------
// Flower

/// Four permutations of [n], stored 0-based by position: pi[r][i-1] = pi_{r+1}(i).
struct PermutationQuadruple {
  std::vector<int> pi1;
  std::vector<int> pi2;
  std::vector<int> pi3;
  std::vector<int> pi4;
};

struct PhiCheck {
  std::vector<Label> phi1;
  std::vector<Label> phi2;
  std::optional<Label> constant;
};

namespace detail {

inline void require_odd_flower(int n) {
  require(n >= 3 && n % 2 == 1, ErrorCode::ParamOutOfRange,
          "flower labeling needs odd n >= 3, got " + std::to_string(n));
}

inline void require_permutation(const std::vector<int>& p, int n, const char* name) {
  require(static_cast<int>(p.size()) == n, ErrorCode::ParamOutOfRange,
          std::string(name) + " has wrong length");
  std::vector<char> seen(n + 1, 0);
  for (int v : p) {
    require(v >= 1 && v <= n && !seen[v], ErrorCode::ParamOutOfRange,
            std::string(name) + " is not a permutation of [n]");
    seen[v] = 1;
  }
}

}  // namespace detail

inline PermutationQuadruple default_flower_permutations(int n) {
  detail::require_odd_flower(n);
  PermutationQuadruple q;
  const int half = (n + 1) / 2;
  for (int i = 1; i <= n; ++i) {
    const int interleave = i % 2 == 1 ? (i + 1) / 2 : i / 2 + half;
    q.pi1.push_back(i);
    q.pi2.push_back(n + 1 - interleave);
    q.pi3.push_back(interleave);
    q.pi4.push_back(n + 1 - i);
  }
  return q;
}

/// Evaluates the rim-triangle terms phi1^i and the pendant-triangle terms
/// phi2^i; position n+1 wraps to 1.
inline PhiCheck phi_check(int n, const PermutationQuadruple& q) {
  detail::require_odd_flower(n);
  detail::require_permutation(q.pi1, n, "pi1");
  detail::require_permutation(q.pi2, n, "pi2");
  detail::require_permutation(q.pi3, n, "pi3");
  detail::require_permutation(q.pi4, n, "pi4");
  PhiCheck out;
  const Label half = (n + 1) / 2;
  for (int i = 0; i < n; ++i) {
    const int next = (i + 1) % n;
    out.phi1.push_back(Label(q.pi1[i]) + q.pi1[next] + q.pi2[i] + q.pi2[next] + q.pi4[i] + half - 1);
    out.phi2.push_back(Label(q.pi1[i]) + 3 * Label(q.pi2[i]) + q.pi3[i] + ((i + 1) % 2 == 0 ? n : 0));
  }
  const Label first = out.phi1.front();
  bool same = true;
  for (auto v : out.phi1) same = same && v == first;
  for (auto v : out.phi2) same = same && v == first;
  if (same) out.constant = first;
  return out;
}

inline Label flower_magic_sum(int n) {
  detail::require_odd_flower(n);
  return 16 * Label(n) + 7;
}

/// Labels flower(n) from the permutation quadruple; every triangle through
/// x0 then sums to 13n + 5 + phi.
inline TotalLabeling label_flower(int n, const PermutationQuadruple& q) {
  const auto phi = phi_check(n, q);
  require(phi.constant.has_value(), ErrorCode::PhiNotConstant,
          "phi values of the permutation quadruple are not all equal");
  const Graph g = flower(n);
  const auto x = [](int i) { return "x" + std::to_string(i); };
  const auto y = [](int i) { return "y" + std::to_string(i); };
  const Label nn = n;
  const Label half = (n + 1) / 2;
  LabelVector labels(g.num_elements(), 0);
  const auto set = [&](const ElementId& id, Label lbl) { labels[g.element_index(id)] = lbl; };
  set(ElementId::vertex("x0"), nn + 1);
  for (int i = 1; i <= n; ++i) {
    const Label p1 = q.pi1[i - 1], p2 = q.pi2[i - 1], p3 = q.pi3[i - 1], p4 = q.pi4[i - 1];
    set(ElementId::vertex(x(i)), p1);
    set(ElementId::vertex(y(i)), p2 + nn + 1);
    set(ElementId::edge("x0", x(i)), p2 + 5 * nn + 1);
    set(ElementId::edge("x0", y(i)), p2 + 4 * nn + 1);
    set(ElementId::edge(x(i), y(i)), p3 + (i % 2 == 1 ? 2 * nn + 1 : 3 * nn + 1));
    set(ElementId::edge(x(i), x(i % n + 1)), p4 + 2 * nn + 1 + half);
  }
  return TotalLabeling::from_vector(g, std::move(labels));
}

}  // namespace magiccover
