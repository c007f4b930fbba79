#pragma once

// Exact minimum labelings on toy instances, for use as ground truth.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "hublab/constructions.hpp"
#include "hublab/graph.hpp"
#include "hublab/labeling.hpp"
#include "hublab/verify.hpp"

namespace hublab {

struct OracleStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

struct OracleResult {
  std::size_t optimum = 0;
  Labeling witness;
  OracleStats stats;
};

inline constexpr std::size_t kMaxOracleVertices = 6;

// Bumped whenever search semantics change; golden test values carry it.
inline constexpr int kOracleVersion = 1;

namespace detail {

// Labeling as an n x n bit matrix: bit (v * n + u) set iff u in L(v).
class HubSearch {
 public:
  HubSearch(const Graph& g, SelfPairs self_pairs)
      : fingerprint_(g.fingerprint()), n_(g.vertex_count()) {
    dist_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) dist_[v] = bfs_distances(g, static_cast<Vertex>(v));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = self_pairs == SelfPairs::on ? i : i + 1; j < n_; ++j) {
        if (dist_[i][j] == kUnreachable) throw GraphError("oracle: graph is disconnected");
        std::uint32_t on_path = 0;
        for (std::size_t u = 0; u < n_; ++u) {
          if (dist_[i][u] + dist_[u][j] == dist_[i][j]) on_path |= 1u << u;
        }
        pairs_.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), on_path});
      }
    }
    // Fewest covering options first.
    std::stable_sort(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
      return std::popcount(a.on_path) < std::popcount(b.on_path);
    });
  }

  OracleResult run() {
    const auto start = std::chrono::steady_clock::now();
    // Every vertex as a hub of every label is always valid.
    best_ = (std::uint64_t{1} << (n_ * n_)) - 1;
    best_size_ = n_ * n_;
    search(0, 0);
    OracleResult r;
    r.optimum = best_size_;
    r.witness = to_labeling(best_);
    r.stats.nodes = nodes_;
    r.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  const std::vector<std::vector<Distance>>& distances() const { return dist_; }

 private:
  struct Pair {
    Vertex i, j;
    std::uint32_t on_path;
  };

  std::uint32_t row(std::uint64_t state, Vertex v) const {
    return static_cast<std::uint32_t>((state >> (v * n_)) & ((std::uint64_t{1} << n_) - 1));
  }

  bool covered(std::uint64_t state, const Pair& p) const {
    return (row(state, p.i) & row(state, p.j) & p.on_path) != 0;
  }

  // Uncovered pairs sharing no endpoint each need a distinct new entry.
  std::size_t matching_bound(std::uint64_t state) const {
    std::uint32_t used = 0;
    std::size_t bound = 0;
    for (const auto& p : pairs_) {
      const std::uint32_t ends = (1u << p.i) | (1u << p.j);
      if ((used & ends) || covered(state, p)) continue;
      used |= ends;
      ++bound;
    }
    return bound;
  }

  void search(std::uint64_t state, std::size_t size) {
    ++nodes_;
    if (!visited_.insert(state).second) return;
    const Pair* open = nullptr;
    for (const auto& p : pairs_) {
      if (!covered(state, p)) {
        open = &p;
        break;
      }
    }
    if (!open) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = state;
      }
      return;
    }
    if (size + matching_bound(state) >= best_size_) return;

    // Branch on the hub that covers `open`, cheapest additions first.
    std::vector<std::pair<std::size_t, Vertex>> options;
    for (std::uint32_t m = open->on_path; m != 0; m &= m - 1) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(m));
      std::size_t cost = 0;
      if (!((row(state, open->i) >> u) & 1u)) ++cost;
      if (open->i != open->j && !((row(state, open->j) >> u) & 1u)) ++cost;
      options.emplace_back(cost, u);
    }
    std::stable_sort(options.begin(), options.end());
    for (auto [cost, u] : options) {
      if (size + cost >= best_size_) continue;
      std::uint64_t next = state | (std::uint64_t{1} << (open->i * n_ + u)) |
                           (std::uint64_t{1} << (open->j * n_ + u));
      search(next, size + cost);
    }
  }

  Labeling to_labeling(std::uint64_t state) const {
    std::vector<LabelList> labels(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      for (std::size_t u = 0; u < n_; ++u) {
        if ((row(state, static_cast<Vertex>(v)) >> u) & 1u) {
          labels[v].push_back({static_cast<Vertex>(u), dist_[v][u]});
        }
      }
    }
    return Labeling(std::move(labels), fingerprint_);
  }

  Fingerprint fingerprint_;
  std::size_t n_;
  std::vector<std::vector<Distance>> dist_;
  std::vector<Pair> pairs_;
  std::uint64_t best_ = 0;
  std::size_t best_size_ = 0;
  std::uint64_t nodes_ = 0;
  std::unordered_set<std::uint64_t> visited_;
};

}  // namespace detail

// Minimum total label size over all labelings covering every pair (including
// {v, v} when self_pairs is on). Branch and bound over which hub covers the
// most constrained open pair, with a vertex-disjoint-pairs lower bound.
inline OracleResult brute_optimal_hl(const Graph& g, SelfPairs self_pairs = SelfPairs::on) {
  if (g.vertex_count() > kMaxOracleVertices) {
    throw std::length_error("oracle: " + std::to_string(g.vertex_count()) +
                            " vertices exceeds the limit of " + std::to_string(kMaxOracleVertices));
  }
  return detail::HubSearch(g, self_pairs).run();
}

struct HhlOrderResult {
  OracleResult best;
  std::size_t largest = 0;  // largest canonical size seen over all orders
  std::uint64_t orders = 0;
};

// Minimum canonical labeling size over every vertex order. A canonical
// labeling is the smallest hierarchical labeling for its order, so this is
// the optimal hierarchical labeling size.
inline HhlOrderResult brute_optimal_hhl_hypercube(int d) {
  if (d < 0 || d > 3) throw std::length_error("hhl oracle: d must be in [0, 3]");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = std::size_t{1} << d;
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  HhlOrderResult r;
  bool first = true;
  do {
    Labeling lab = canonical_labeling(d, VertexOrder::from_sequence(seq));
    ++r.orders;
    const std::size_t size = lab.total_size();
    r.largest = std::max(r.largest, size);
    if (first || size < r.best.optimum) {
      r.best.optimum = size;
      r.best.witness = std::move(lab);
      first = false;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  r.best.stats.nodes = r.orders;
  r.best.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace hublab
