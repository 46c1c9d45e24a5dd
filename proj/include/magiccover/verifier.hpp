#pragma once

// Certifies that a labeling is H-supermagic from first principles: it
// re-checks the bijection and super property, enumerates every copy of H
// and compares their label sums. Nothing is taken from the construction.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "magiccover/error.hpp"
#include "magiccover/graph.hpp"
#include "magiccover/isocover.hpp"

namespace magiccover {

enum class FailureKind { BadLabel, NotSuper, NoCopies, UncoveredEdge, SumMismatch };

inline std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::BadLabel: return "BadLabel";
    case FailureKind::NotSuper: return "NotSuper";
    case FailureKind::NoCopies: return "NoCopies";
    case FailureKind::UncoveredEdge: return "UncoveredEdge";
    case FailureKind::SumMismatch: return "SumMismatch";
  }
  return "Unknown";
}

struct FailureWitness {
  FailureKind kind = FailureKind::BadLabel;
  std::optional<std::size_t> element;  // offending element (BadLabel, NotSuper, UncoveredEdge)
  // SumMismatch: the first copy and the first copy whose sum differs from it.
  std::size_t copy_a = 0;
  std::size_t copy_b = 0;
  Label sum_a = 0;
  Label sum_b = 0;
  std::string detail;
};

struct VerificationReport {
  bool is_bijection = false;
  bool is_super = false;
  bool admits_covering = false;
  std::vector<CopySet> copies;
  std::vector<Label> copy_sums;
  std::optional<Label> magic_sum;
  std::optional<FailureWitness> failure;

  bool certified() const { return magic_sum.has_value(); }
};

/// Sum of the vertex and edge labels of one copy.
inline Label copy_sum(const Graph& g, std::span<const Label> labels, const CopySet& c) {
  Label total = 0;
  for (auto v : c.vertices) {
    require(v < g.num_vertices() && v < labels.size(), ErrorCode::UnknownElement,
            "vertex index " + std::to_string(v));
    total += labels[v];
  }
  for (auto e : c.edges) {
    require(e < g.num_edges() && g.edge_element(e) < labels.size(), ErrorCode::UnknownElement,
            "edge index " + std::to_string(e));
    total += labels[g.edge_element(e)];
  }
  return total;
}

inline Label copy_sum(const Graph& g, const TotalLabeling& f, const CopySet& c) {
  return copy_sum(g, f.labels(), c);
}

/// Checks are independent; `failure` reports the first one that fails in the
/// order bijection, super, covering, sum constancy.
inline VerificationReport verify_supermagic(const Graph& g, const Graph& h,
                                            std::span<const Label> labels,
                                            const IsoOptions& opts = {}) {
  require(labels.size() == g.num_elements(), ErrorCode::WrongDomain,
          "expected " + std::to_string(g.num_elements()) + " labels, got " +
              std::to_string(labels.size()));
  VerificationReport r;
  const auto bij = check_bijection(g, labels);
  r.is_bijection = bij.bijective;
  r.is_super = bij.bijective && bij.super;
  if (!bij.bijective) {
    r.failure = FailureWitness{FailureKind::BadLabel, bij.bad_element, 0, 0, 0, 0, bij.reason};
  } else if (!bij.super) {
    r.failure = FailureWitness{FailureKind::NotSuper, bij.bad_element, 0, 0, 0, 0, bij.reason};
  }

  r.copies = enumerate_copies(g, h, opts);
  std::vector<char> covered(g.num_edges(), 0);
  for (const auto& c : r.copies) {
    for (auto e : c.edges) covered[e] = 1;
    r.copy_sums.push_back(copy_sum(g, labels, c));
  }
  std::optional<std::size_t> uncovered;
  for (std::size_t e = 0; e < covered.size() && !uncovered; ++e) {
    if (!covered[e]) uncovered = e;
  }
  r.admits_covering = !r.copies.empty() && !uncovered;

  if (!r.failure && r.copies.empty()) {
    r.failure = FailureWitness{FailureKind::NoCopies, std::nullopt, 0, 0, 0, 0,
                               "graph contains no copy of the pattern"};
  } else if (!r.failure && uncovered) {
    const auto el = g.edge_element(*uncovered);
    r.failure = FailureWitness{FailureKind::UncoveredEdge, el, 0, 0, 0, 0,
                               "edge " + g.element_id(el).key() + " lies in no copy"};
  }

  std::optional<std::size_t> differing;
  for (std::size_t i = 1; i < r.copy_sums.size() && !differing; ++i) {
    if (r.copy_sums[i] != r.copy_sums[0]) differing = i;
  }
  if (!r.failure && differing) {
    r.failure = FailureWitness{FailureKind::SumMismatch, std::nullopt, 0, *differing,
                               r.copy_sums[0], r.copy_sums[*differing],
                               "copy sums " + std::to_string(r.copy_sums[0]) + " and " +
                                   std::to_string(r.copy_sums[*differing]) + " differ"};
  }
  if (!r.failure) r.magic_sum = r.copy_sums.front();
  return r;
}

inline VerificationReport verify_supermagic(const Graph& g, const Graph& h, const TotalLabeling& f,
                                            const IsoOptions& opts = {}) {
  return verify_supermagic(g, h, f.labels(), opts);
}

}  // namespace magiccover
