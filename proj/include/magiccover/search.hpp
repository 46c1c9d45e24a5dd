#pragma once

// Backtracking search for H-supermagic labelings of small graphs. Uses no
// construction formula: vertices draw labels from [1, |V|], edges from
// [|V|+1, |V|+|E|], and branches die as soon as a copy sum is inconsistent
// with the target (given, or fixed by the first completed copy).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "magiccover/error.hpp"
#include "magiccover/graph.hpp"
#include "magiccover/isocover.hpp"

namespace magiccover {

enum class SearchMode { FirstSolution, CountAll, TargetSum };

struct SearchOptions {
  SearchMode mode = SearchMode::FirstSolution;
  Label target = 0;  // used by TargetSum
  std::uint64_t node_limit = 200'000'000;
  /// The search is sequential, so results never depend on scheduling; the
  /// flag is kept for callers that state the requirement explicitly.
  bool deterministic = true;
  /// Sum checks on partial assignments. When off, only complete labelings
  /// are tested.
  bool pruning = true;
  /// FirstSolution only: order the labels of twin vertices of G.
  bool symmetry_breaking = false;
  IsoOptions iso;
};

enum class OutcomeKind { Solution, NoSolution, Exhausted, Count };

inline std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::Solution: return "Solution";
    case OutcomeKind::NoSolution: return "NoSolution";
    case OutcomeKind::Exhausted: return "Exhausted";
    case OutcomeKind::Count: return "Count";
  }
  return "Unknown";
}

struct SearchOutcome {
  OutcomeKind kind = OutcomeKind::NoSolution;
  std::optional<TotalLabeling> solution;
  std::optional<Label> magic_sum;  // of the returned solution
  std::uint64_t count = 0;         // CountAll; partial when Exhausted
  std::uint64_t nodes = 0;
};

/// Order in which elements receive labels: start from the element in most
/// copies, then repeatedly finish the copy with the fewest unordered
/// elements, taking its elements by descending copy membership.
inline std::vector<std::size_t> search_order(std::size_t num_elements,
                                             const std::vector<std::vector<std::size_t>>& copies) {
  std::vector<std::size_t> freq(num_elements, 0);
  for (const auto& c : copies) {
    for (auto el : c) ++freq[el];
  }
  const auto by_freq = [&](std::size_t a, std::size_t b) {
    return freq[a] != freq[b] ? freq[a] > freq[b] : a < b;
  };
  std::vector<char> placed(num_elements, 0);
  std::vector<std::size_t> order;
  const auto place = [&](std::size_t el) {
    if (!placed[el]) {
      placed[el] = 1;
      order.push_back(el);
    }
  };
  if (!copies.empty()) {
    std::vector<std::size_t> all(num_elements);
    for (std::size_t i = 0; i < num_elements; ++i) all[i] = i;
    place(*std::min_element(all.begin(), all.end(), by_freq));
  }
  while (true) {
    std::optional<std::size_t> best;
    std::size_t best_open = 0;
    for (std::size_t c = 0; c < copies.size(); ++c) {
      const auto open = static_cast<std::size_t>(
          std::count_if(copies[c].begin(), copies[c].end(), [&](auto el) { return !placed[el]; }));
      if (open > 0 && (!best || open < best_open)) {
        best = c;
        best_open = open;
      }
    }
    if (!best) break;
    std::vector<std::size_t> rest;
    for (auto el : copies[*best]) {
      if (!placed[el]) rest.push_back(el);
    }
    std::sort(rest.begin(), rest.end(), by_freq);
    for (auto el : rest) place(el);
  }
  for (std::size_t el = 0; el < num_elements; ++el) place(el);
  return order;
}

/// Copies grouped into orbits under automorphisms of `g`. At most `cap`
/// automorphisms are used, so the groups may be finer than the true orbits.
inline std::vector<std::vector<std::size_t>> copy_orbits(const Graph& g, const std::vector<CopySet>& copies,
                                                         std::size_t cap = 20'000) {
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < copies.size(); ++i) index[{copies[i].vertices, copies[i].edges}] = i;
  std::vector<std::size_t> parent(copies.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  if (g.num_vertices() > 0) {
    const detail::Matcher matcher(g, g, false);
    std::size_t seen = 0;
    for (std::size_t root = 0; root < g.num_vertices() && seen < cap; ++root) {
      matcher.run_root(root, [&](const std::vector<std::size_t>& p) {
        for (std::size_t i = 0; i < copies.size(); ++i) {
          std::vector<std::size_t> vs, es;
          for (auto v : copies[i].vertices) vs.push_back(p[v]);
          for (auto e : copies[i].edges) es.push_back(*g.find_edge(p[g.edges()[e].u], p[g.edges()[e].v]));
          std::sort(vs.begin(), vs.end());
          std::sort(es.begin(), es.end());
          const auto it = index.find({vs, es});
          if (it != index.end()) parent[find(i)] = find(it->second);
        }
        return ++seen < cap;
      });
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < copies.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

namespace detail {

class LabelSearch {
 public:
  LabelSearch(const Graph& g, const std::vector<CopySet>& copies, const SearchOptions& opts)
      : g_(g), opts_(opts), n_(g.num_elements()), nv_(g.num_vertices()) {
    for (const auto& c : copies) copies_.push_back(c.elements(g));
    order_ = search_order(n_, copies_);
    element_copies_.resize(n_);
    for (std::size_t c = 0; c < copies_.size(); ++c) {
      for (auto el : copies_[c]) element_copies_[el].push_back(c);
    }
    remaining_.resize(copies_.size());
    rem_vertices_.assign(copies_.size(), 0);
    rem_edges_.assign(copies_.size(), 0);
    for (std::size_t c = 0; c < copies_.size(); ++c) {
      remaining_[c] = copies_[c].size();
      for (auto el : copies_[c]) ++(g.is_vertex_element(el) ? rem_vertices_[c] : rem_edges_[c]);
    }
    partial_.assign(copies_.size(), 0);
    std::vector<std::size_t> everything(copies_.size());
    std::iota(everything.begin(), everything.end(), 0);
    add_class(std::move(everything));
    if (opts.pruning) {
      for (auto& orbit : copy_orbits(g, copies)) {
        if (orbit.size() > 1 && orbit.size() < copies_.size()) add_class(std::move(orbit));
      }
    }
    labels_.assign(n_, 0);
    used_.assign(n_ + 1, 0);
    if (opts.mode == SearchMode::TargetSum) target_ = opts.target;
    if (opts.symmetry_breaking && opts.mode == SearchMode::FirstSolution) build_twin_constraints();
  }

  SearchOutcome run() {
    SearchOutcome out;
    descend(0);
    out.nodes = nodes_;
    out.count = count_;
    if (exhausted_) {
      out.kind = OutcomeKind::Exhausted;
    } else if (opts_.mode == SearchMode::CountAll) {
      out.kind = OutcomeKind::Count;
    } else if (solution_) {
      out.kind = OutcomeKind::Solution;
      out.magic_sum = solution_sum_;
      out.solution = TotalLabeling::from_vector(g_, *solution_);
    }
    return out;
  }

 private:
  void build_twin_constraints() {
    twin_partners_.resize(nv_);
    std::vector<std::vector<std::size_t>> open(nv_), closed(nv_);
    for (std::size_t v = 0; v < nv_; ++v) {
      open[v] = g_.neighbors(v);
      std::sort(open[v].begin(), open[v].end());
      closed[v] = open[v];
      closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
    }
    for (std::size_t v = 0; v < nv_; ++v) {
      for (std::size_t w = v; w-- > 0;) {
        if (open[v] == open[w] || closed[v] == closed[w]) {
          twin_partners_[v].push_back(w);  // label(w) < label(v)
          twin_partners_[w].push_back(v);
          break;
        }
      }
    }
  }

  bool twins_ok(std::size_t el, Label lbl) const {
    if (twin_partners_.empty() || el >= nv_) return true;
    for (auto other : twin_partners_[el]) {
      if (labels_[other] == 0) continue;
      if (other < el ? labels_[other] > lbl : labels_[other] < lbl) return false;
    }
    return true;
  }

  /// Sum of the `count` smallest (or largest) unused labels in [lo, hi].
  std::optional<Label> extreme_sum(Label lo, Label hi, std::size_t count, bool smallest) const {
    Label total = 0;
    for (Label l = smallest ? lo : hi; count > 0 && l >= lo && l <= hi; l += smallest ? 1 : -1) {
      if (!used_[static_cast<std::size_t>(l)]) {
        total += l;
        --count;
      }
    }
    if (count > 0) return std::nullopt;
    return total;
  }

  bool bounds_ok(std::size_t c) const {
    const Label nv = static_cast<Label>(nv_);
    const Label n = static_cast<Label>(n_);
    const auto lo_v = extreme_sum(1, nv, rem_vertices_[c], true);
    const auto lo_e = extreme_sum(nv + 1, n, rem_edges_[c], true);
    if (!lo_v || !lo_e) return false;
    if (partial_[c] + *lo_v + *lo_e > *target_) return false;
    const auto hi_v = extreme_sum(1, nv, rem_vertices_[c], false);
    const auto hi_e = extreme_sum(nv + 1, n, rem_edges_[c], false);
    return partial_[c] + *hi_v + *hi_e >= *target_;
  }

  /// A set S of copies: summed over S, labels weighted by their number of
  /// copies in S must give |S| * target.
  struct CopyClass {
    std::vector<std::size_t> members;
    std::vector<Label> mult;
    Label weighted = 0;
  };

  void add_class(std::vector<std::size_t> members) {
    CopyClass c;
    c.mult.assign(n_, 0);
    for (auto i : members) {
      for (auto el : copies_[i]) ++c.mult[el];
    }
    c.members = std::move(members);
    classes_.push_back(std::move(c));
  }

  /// The unassigned part of every class is bounded by pairing multiplicities
  /// with available labels (rearrangement). For the class of all copies the
  /// remaining labels have a fixed plain sum, so the rest must also be
  /// divisible by gcd(mult - 1).
  bool global_ok() const {
    std::vector<Label> fv, fe;
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      const auto& cls = classes_[k];
      const Label need = static_cast<Label>(cls.members.size()) * *target_ - cls.weighted;
      fv.clear();
      fe.clear();
      Label d = 0;
      for (std::size_t el = 0; el < n_; ++el) {
        if (labels_[el] != 0) continue;
        d = std::gcd(d, cls.mult[el] - 1);
        if (cls.mult[el] > 0) (el < nv_ ? fv : fe).push_back(cls.mult[el]);
      }
      if (k == 0) {
        const Label extra = need - (static_cast<Label>(n_ * (n_ + 1) / 2) - plain_);
        if (d == 0 ? extra != 0 : extra % d != 0) return false;
      }
      Label lo = 0, hi = 0;
      const auto bound = [&](std::vector<Label>& f, Label first, Label last) {
        std::sort(f.begin(), f.end(), std::greater<>());
        std::size_t i = 0;
        for (Label l = first; l <= last && i < f.size(); ++l) {
          if (!used_[static_cast<std::size_t>(l)]) lo += f[i++] * l;
        }
        i = 0;
        for (Label l = last; l >= first && i < f.size(); --l) {
          if (!used_[static_cast<std::size_t>(l)]) hi += f[i++] * l;
        }
      };
      bound(fv, 1, static_cast<Label>(nv_));
      bound(fe, static_cast<Label>(nv_) + 1, static_cast<Label>(n_));
      if (need < lo || need > hi) return false;
    }
    return true;
  }

  void assign(std::size_t el, Label lbl) {
    labels_[el] = lbl;
    for (auto& cls : classes_) cls.weighted += cls.mult[el] * lbl;
    plain_ += lbl;
    used_[static_cast<std::size_t>(lbl)] = 1;
    const bool vertex = g_.is_vertex_element(el);
    for (auto c : element_copies_[el]) {
      partial_[c] += lbl;
      --remaining_[c];
      --(vertex ? rem_vertices_[c] : rem_edges_[c]);
    }
  }

  void unassign(std::size_t el) {
    const Label lbl = labels_[el];
    const bool vertex = g_.is_vertex_element(el);
    for (auto c : element_copies_[el]) {
      partial_[c] -= lbl;
      ++remaining_[c];
      ++(vertex ? rem_vertices_[c] : rem_edges_[c]);
    }
    used_[static_cast<std::size_t>(lbl)] = 0;
    labels_[el] = 0;
    for (auto& cls : classes_) cls.weighted -= cls.mult[el] * lbl;
    plain_ -= lbl;
  }

  /// Completed copies must hit the target; an unset target is fixed by the
  /// first completed copy at this depth.
  bool consistent(std::size_t el, std::size_t depth) {
    for (auto c : element_copies_[el]) {
      if (remaining_[c] != 0) continue;
      if (!target_) {
        target_ = partial_[c];
        target_depth_ = depth;
      } else if (partial_[c] != *target_) {
        return false;
      }
    }
    if (!target_) return true;
    for (auto c : element_copies_[el]) {
      if (remaining_[c] != 0 && !bounds_ok(c)) return false;
    }
    return global_ok();
  }

  void record_leaf() {
    Label sum = 0;
    if (!copies_.empty()) {
      std::vector<Label> sums;
      for (const auto& c : copies_) {
        Label s = 0;
        for (auto el : c) s += labels_[el];
        sums.push_back(s);
      }
      sum = sums.front();
      if (std::any_of(sums.begin(), sums.end(), [&](Label s) { return s != sum; })) return;
      if (opts_.mode == SearchMode::TargetSum && sum != opts_.target) return;
    }
    ++count_;
    if (opts_.mode != SearchMode::CountAll) {
      solution_ = labels_;
      solution_sum_ = sum;
      done_ = true;
    }
  }

  void descend(std::size_t depth) {
    if (done_ || exhausted_) return;
    if (depth == n_) {
      record_leaf();
      return;
    }
    const auto el = order_[depth];
    const bool vertex = g_.is_vertex_element(el);
    const Label lo = vertex ? 1 : static_cast<Label>(nv_) + 1;
    const Label hi = vertex ? static_cast<Label>(nv_) : static_cast<Label>(n_);

    std::optional<Label> forced;
    if (opts_.pruning && target_) {
      for (auto c : element_copies_[el]) {
        if (remaining_[c] != 1) continue;
        const Label need = *target_ - partial_[c];
        if (forced && *forced != need) return;
        forced = need;
      }
    }
    const Label first = forced ? *forced : lo;
    const Label last = forced ? *forced : hi;
    for (Label lbl = std::max(first, lo); lbl <= std::min(last, hi); ++lbl) {
      if (used_[static_cast<std::size_t>(lbl)] || !twins_ok(el, lbl)) continue;
      if (++nodes_ > opts_.node_limit) {
        exhausted_ = true;
        return;
      }
      assign(el, lbl);
      if (!opts_.pruning || consistent(el, depth)) descend(depth + 1);
      if (target_depth_ == depth && opts_.mode != SearchMode::TargetSum) {
        target_.reset();
        target_depth_.reset();
      }
      unassign(el);
      if (done_ || exhausted_) return;
    }
  }

  const Graph& g_;
  const SearchOptions& opts_;
  std::size_t n_;
  std::size_t nv_;
  std::vector<std::vector<std::size_t>> copies_;
  std::vector<std::vector<std::size_t>> element_copies_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> remaining_;
  std::vector<std::size_t> rem_vertices_;
  std::vector<std::size_t> rem_edges_;
  std::vector<Label> partial_;
  std::vector<CopyClass> classes_;
  Label plain_ = 0;
  LabelVector labels_;
  std::vector<char> used_;
  std::vector<std::vector<std::size_t>> twin_partners_;
  std::optional<Label> target_;
  std::optional<std::size_t> target_depth_;
  std::optional<LabelVector> solution_;
  Label solution_sum_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t count_ = 0;
  bool done_ = false;
  bool exhausted_ = false;
};

}  // namespace detail

/// Finds, counts or exhausts H-supermagic labelings of `g`. Graphs without an
/// H-covering have none.
inline SearchOutcome search_supermagic(const Graph& g, const Graph& h, const SearchOptions& opts = {}) {
  require(opts.node_limit > 0, ErrorCode::ParamOutOfRange, "node_limit must be positive");
  const auto copies = enumerate_copies(g, h, opts.iso);
  std::vector<char> covered(g.num_edges(), 0);
  for (const auto& c : copies) {
    for (auto e : c.edges) covered[e] = 1;
  }
  const bool covering =
      !copies.empty() && std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
  if (!covering) {
    SearchOutcome out;
    out.kind = opts.mode == SearchMode::CountAll ? OutcomeKind::Count : OutcomeKind::NoSolution;
    return out;
  }
  detail::LabelSearch search(g, copies, opts);
  return search.run();
}

}  // namespace magiccover
