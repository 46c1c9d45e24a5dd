#pragma once

// Enumeration of the subgraphs of G isomorphic to a pattern H.
//
// A copy is a (vertex set, edge set) pair, so two embeddings that differ by
// an automorphism of H yield the same copy. The matcher is a backtracking
// monomorphism search: pattern vertices are placed in BFS order from a
// highest-degree root, candidates come from the neighborhood of an already
// placed neighbor, and every pattern edge back into the placed prefix must
// exist in G. Pattern vertices with identical neighborhoods (twins) are
// forced onto increasing G vertices, which removes the symmetric-group
// factor of each twin class before the final deduplication.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "magiccover/error.hpp"
#include "magiccover/graph.hpp"

namespace magiccover {

struct CopySet {
  std::vector<std::size_t> vertices;  // vertex indices of G, ascending
  std::vector<std::size_t> edges;     // edge indices of G, ascending
  std::vector<std::size_t> witness;   // pattern vertex -> G vertex

  /// Element indices of G (vertices first, then edges).
  std::vector<std::size_t> elements(const Graph& g) const {
    std::vector<std::size_t> out(vertices);
    for (auto e : edges) out.push_back(g.edge_element(e));
    return out;
  }

  bool operator<(const CopySet& o) const {
    return std::tie(vertices, edges) < std::tie(o.vertices, o.edges);
  }
  bool operator==(const CopySet& o) const { return vertices == o.vertices && edges == o.edges; }
};

struct IsoOptions {
  std::size_t max_pattern_vertices = 24;
  std::size_t max_copies = 1'000'000;
  unsigned threads = 0;  // 0: hardware concurrency, capped by MAGICCOVER_THREADS
};

/// Worker count: hardware concurrency, capped by MAGICCOVER_THREADS when set.
inline unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MAGICCOVER_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

namespace detail {

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, bool break_twins) : g_(g), h_(h) {
    build_order();
    if (break_twins) build_twins();
  }

  std::size_t root_candidate_count() const { return g_.num_vertices(); }
  bool empty_pattern() const { return order_.empty(); }

  /// Runs the search with the root pinned to G vertex `root`. `emit`
  /// receives the pattern->G mapping and returns false to stop.
  template <typename Emit>
  void run_root(std::size_t root, Emit&& emit) const {
    std::vector<std::size_t> image(h_.num_vertices(), kUnset);
    std::vector<char> used(g_.num_vertices(), 0);
    if (!feasible(0, root, image, used)) return;
    image[order_[0]] = root;
    used[root] = 1;
    extend(1, image, used, emit);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  void build_order() {
    const auto nh = h_.num_vertices();
    std::vector<char> placed(nh, 0);
    position_.assign(nh, 0);
    while (order_.size() < nh) {
      std::size_t root = kUnset;
      for (std::size_t v = 0; v < nh; ++v) {
        if (!placed[v] && (root == kUnset || h_.degree(v) > h_.degree(root))) root = v;
      }
      std::vector<std::size_t> queue{root};
      placed[root] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto v = queue[head];
        position_[v] = order_.size();
        order_.push_back(v);
        auto nbrs = h_.neighbors(v);
        std::stable_sort(nbrs.begin(), nbrs.end(),
                         [&](auto a, auto b) { return h_.degree(a) > h_.degree(b); });
        for (auto w : nbrs) {
          if (!placed[w]) {
            placed[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    parent_.assign(nh, kUnset);
    back_.assign(nh, {});
    for (std::size_t p = 0; p < nh; ++p) {
      const auto v = order_[p];
      for (auto w : h_.neighbors(v)) {
        if (position_[w] < p) {
          back_[p].push_back(w);
          if (parent_[p] == kUnset || position_[w] < position_[parent_[p]]) parent_[p] = w;
        }
      }
    }
    twin_prev_.assign(nh, kUnset);
  }

  void build_twins() {
    const auto nh = h_.num_vertices();
    std::vector<std::vector<std::size_t>> open(nh), closed(nh);
    for (std::size_t v = 0; v < nh; ++v) {
      open[v] = h_.neighbors(v);
      std::sort(open[v].begin(), open[v].end());
      closed[v] = open[v];
      closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);
    }
    // Walk in placement order; each vertex points at the latest earlier twin.
    for (std::size_t p = 0; p < nh; ++p) {
      const auto v = order_[p];
      for (std::size_t q = p; q-- > 0;) {
        const auto w = order_[q];
        if (open[v] == open[w] || closed[v] == closed[w]) {
          twin_prev_[p] = w;
          break;
        }
      }
    }
  }

  bool feasible(std::size_t p, std::size_t cand, const std::vector<std::size_t>& image,
                const std::vector<char>& used) const {
    const auto v = order_[p];
    if (used[cand] || g_.degree(cand) < h_.degree(v)) return false;
    if (twin_prev_[p] != kUnset && cand < image[twin_prev_[p]]) return false;
    for (auto w : back_[p]) {
      if (!g_.adjacent(cand, image[w])) return false;
    }
    return true;
  }

  template <typename Emit>
  bool extend(std::size_t p, std::vector<std::size_t>& image, std::vector<char>& used,
              Emit& emit) const {
    if (p == order_.size()) return emit(image);
    const auto v = order_[p];
    const auto try_candidate = [&](std::size_t cand) {
      if (!feasible(p, cand, image, used)) return true;
      image[v] = cand;
      used[cand] = 1;
      const bool go_on = extend(p + 1, image, used, emit);
      used[cand] = 0;
      image[v] = kUnset;
      return go_on;
    };
    if (parent_[p] != kUnset) {
      for (auto cand : g_.neighbors(image[parent_[p]])) {
        if (!try_candidate(cand)) return false;
      }
    } else {
      for (std::size_t cand = 0; cand < g_.num_vertices(); ++cand) {
        if (!try_candidate(cand)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> parent_;  // earliest placed neighbor, or kUnset
  std::vector<std::vector<std::size_t>> back_;
  std::vector<std::size_t> twin_prev_;
};

inline CopySet make_copy(const Graph& g, const Graph& h, const std::vector<std::size_t>& image) {
  CopySet c;
  c.witness = image;
  c.vertices = image;
  std::sort(c.vertices.begin(), c.vertices.end());
  for (const auto& e : h.edges()) c.edges.push_back(*g.find_edge(image[e.u], image[e.v]));
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

inline void check_pattern_size(const Graph& h, const IsoOptions& opts) {
  require(h.num_vertices() <= opts.max_pattern_vertices, ErrorCode::PatternTooLarge,
          "pattern has " + std::to_string(h.num_vertices()) + " vertices, limit is " +
              std::to_string(opts.max_pattern_vertices));
}

}  // namespace detail

/// All distinct subgraphs of `g` isomorphic to `h`, sorted by
/// (vertex indices, edge indices). Each carries one witness embedding.
inline std::vector<CopySet> enumerate_copies(const Graph& g, const Graph& h,
                                             const IsoOptions& opts = {}) {
  detail::check_pattern_size(h, opts);
  if (h.num_vertices() == 0 || h.num_vertices() > g.num_vertices() ||
      h.num_edges() > g.num_edges()) {
    return {};
  }
  const detail::Matcher matcher(g, h, true);
  const unsigned threads =
      std::min<unsigned>(opts.threads ? opts.threads : default_thread_count(),
                         static_cast<unsigned>(g.num_vertices()));
  std::atomic<std::size_t> found{0};

  const auto work = [&](unsigned worker) {
    std::set<CopySet> local;
    for (std::size_t root = worker; root < g.num_vertices(); root += threads) {
      matcher.run_root(root, [&](const std::vector<std::size_t>& image) {
        if (local.insert(detail::make_copy(g, h, image)).second) {
          require(++found <= opts.max_copies, ErrorCode::CopyLimitExceeded,
                  "more than " + std::to_string(opts.max_copies) + " copies");
        }
        return true;
      });
    }
    return local;
  };

  std::set<CopySet> all;
  if (threads <= 1) {
    all = work(0);
  } else {
    std::vector<std::future<std::set<CopySet>>> parts;
    for (unsigned t = 0; t < threads; ++t) parts.push_back(std::async(std::launch::async, work, t));
    for (auto& part : parts) all.merge(part.get());
  }
  require(all.size() <= opts.max_copies, ErrorCode::CopyLimitExceeded,
          "more than " + std::to_string(opts.max_copies) + " copies");
  return {all.begin(), all.end()};
}

inline std::size_t count_copies(const Graph& g, const Graph& h, const IsoOptions& opts = {}) {
  return enumerate_copies(g, h, opts).size();
}

/// True iff every edge of `g` lies in the edge set of some copy of `h`.
inline bool has_h_covering(const Graph& g, const Graph& h, const IsoOptions& opts = {}) {
  std::vector<char> covered(g.num_edges(), 0);
  for (const auto& c : enumerate_copies(g, h, opts)) {
    for (auto e : c.edges) covered[e] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

/// Number of injective edge-preserving maps V(h) -> V(g), without any
/// symmetry reduction. count_embeddings(h, h) = |Aut(h)|.
inline std::uint64_t count_embeddings(const Graph& g, const Graph& h, const IsoOptions& opts = {}) {
  detail::check_pattern_size(h, opts);
  if (h.num_vertices() == 0 || h.num_vertices() > g.num_vertices()) return 0;
  const detail::Matcher matcher(g, h, false);
  std::uint64_t total = 0;
  for (std::size_t root = 0; root < g.num_vertices(); ++root) {
    matcher.run_root(root, [&](const std::vector<std::size_t>&) {
      ++total;
      return true;
    });
  }
  return total;
}

/// Some isomorphism a -> b as a vertex map, or empty when none exists.
inline std::vector<std::size_t> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return {};
  if (a.num_vertices() == 0) return {};
  // A monomorphism between graphs with equal vertex and edge counts is an
  // isomorphism.
  const detail::Matcher matcher(b, a, false);
  std::vector<std::size_t> found;
  for (std::size_t root = 0; root < b.num_vertices() && found.empty(); ++root) {
    matcher.run_root(root, [&](const std::vector<std::size_t>& image) {
      found = image;
      return false;
    });
  }
  return found;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() == 0 && b.num_vertices() == 0) return true;
  return !find_isomorphism(a, b).empty();
}

/// The subgraph of `g` formed by a copy.
inline Graph copy_subgraph(const Graph& g, const CopySet& c) {
  return element_subgraph(g, c.vertices, c.edges);
}

}  // namespace magiccover
