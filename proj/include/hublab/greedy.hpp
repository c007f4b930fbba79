#pragma once

// Greedy set-cover construction of a hub labeling for general graphs.
//
// Each iteration picks a center v and a vertex set S maximizing
//   (uncovered pairs {i,j} within S that have v on a shortest i-j path) / |S|
// and adds v to L(u) for every u in S. For a fixed center this is a densest
// subgraph problem on the "pairs through v" graph (self-pairs {u,u} appear as
// loops); it is solved approximately by min-degree peeling, which keeps the
// densest intermediate vertex set.
//
// Ties: higher density, then lower center id, then lexicographically smaller
// sorted S.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hublab/graph.hpp"
#include "hublab/labeling.hpp"
#include "hublab/verify.hpp"

namespace hublab {

struct GreedyOptions {
  std::size_t max_n = 1024;
  SelfPairs self_pairs = SelfPairs::on;
};

struct ProgressEntry {
  std::size_t iteration = 0;
  std::size_t uncovered = 0;
  std::size_t size = 0;

  friend bool operator==(const ProgressEntry&, const ProgressEntry&) = default;
};

struct GreedyRun {
  Labeling labeling;
  std::vector<ProgressEntry> progress;
  std::size_t initial_pairs = 0;
};

inline const std::vector<ProgressEntry>& coverage_progress(const GreedyRun& run) {
  return run.progress;
}

namespace detail {

struct Candidate {
  Vertex center = 0;
  std::size_t pairs = 0;  // covered by choosing (center, set)
  std::vector<Vertex> set;  // sorted

  bool valid() const { return !set.empty(); }
};

// true when a is the better pick
inline bool better_candidate(const Candidate& a, const Candidate& b) {
  if (!b.valid()) return a.valid();
  if (!a.valid()) return false;
  const auto lhs = static_cast<unsigned __int128>(a.pairs) * b.set.size();
  const auto rhs = static_cast<unsigned __int128>(b.pairs) * a.set.size();
  if (lhs != rhs) return lhs > rhs;
  if (a.center != b.center) return a.center < b.center;
  return a.set < b.set;
}

// Peels min-degree vertices (highest id first among ties) and keeps the best
// intermediate set under better_candidate's rules.
inline Candidate peel(Vertex center, std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                      std::vector<std::vector<std::size_t>>& incident) {
  Candidate best;
  best.center = center;
  if (edges.empty()) return best;

  std::vector<Vertex> vertices;
  for (auto [a, b] : edges) {
    vertices.push_back(a);
    vertices.push_back(b);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  for (Vertex v : vertices) incident[v].clear();
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [a, b] = edges[e];
    incident[a].push_back(e);
    ++degree[a];
    if (b != a) {
      incident[b].push_back(e);
      ++degree[b];
    }
  }
  std::vector<bool> alive_edge(edges.size(), true);
  std::vector<bool> alive(n, false);
  for (Vertex v : vertices) alive[v] = true;

  std::size_t live_edges = edges.size();
  std::size_t live_vertices = vertices.size();
  std::vector<Vertex> removal_order;
  removal_order.reserve(vertices.size());

  // removed_at[v]: peeling step that removed v; the set after `r` steps is
  // {v : removed_at[v] >= r}.
  constexpr std::size_t kNever = SIZE_MAX;
  std::vector<std::size_t> removed_at(n, kNever);
  auto set_after = [&](std::size_t steps) {
    std::vector<Vertex> out;
    for (Vertex v : vertices) {
      if (removed_at[v] == kNever || removed_at[v] >= steps) out.push_back(v);
    }
    return out;
  };

  std::size_t best_edges = 0, best_size = 0, best_removed = 0;
  auto consider = [&](std::size_t removed) {
    const auto lhs = static_cast<unsigned __int128>(live_edges) * best_size;
    const auto rhs = static_cast<unsigned __int128>(best_edges) * live_vertices;
    if (best_size == 0 || lhs > rhs || (lhs == rhs && set_after(removed) < set_after(best_removed))) {
      best_edges = live_edges;
      best_size = live_vertices;
      best_removed = removed;
    }
  };

  consider(0);
  while (live_vertices > 1) {
    Vertex pick = vertices.front();
    bool found = false;
    for (Vertex v : vertices) {
      if (!alive[v]) continue;
      if (!found || degree[v] <= degree[pick]) {
        pick = v;
        found = true;
      }
    }
    alive[pick] = false;
    --live_vertices;
    removed_at[pick] = removal_order.size();
    removal_order.push_back(pick);
    for (std::size_t e : incident[pick]) {
      if (!alive_edge[e]) continue;
      alive_edge[e] = false;
      --live_edges;
      auto [a, b] = edges[e];
      const Vertex other = a == pick ? b : a;
      if (other != pick) --degree[other];
    }
    consider(removal_order.size());
  }

  best.set = set_after(best_removed);
  best.pairs = best_edges;
  return best;
}

}  // namespace detail

// `on_iteration` (optional) sees each progress entry as it is produced.
inline GreedyRun greedy_hl(const Graph& g, GreedyOptions opts = {},
                           const std::function<void(const ProgressEntry&)>& on_iteration = {}) {
  const std::size_t n = g.vertex_count();
  if (n > opts.max_n) {
    throw std::length_error("greedy: graph has " + std::to_string(n) +
                            " vertices, limit is " + std::to_string(opts.max_n));
  }
  if (!is_connected(g)) throw GraphError("greedy: graph is disconnected");

  std::vector<std::vector<Distance>> dist(n);
  for (std::size_t v = 0; v < n; ++v) dist[v] = bfs_distances(g, static_cast<Vertex>(v));

  // Pair index for i <= j.
  auto pair_index = [n](Vertex i, Vertex j) {
    return static_cast<std::size_t>(i) * n + j;
  };
  std::vector<std::uint8_t> covered(n * n, 0);
  std::size_t uncovered = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = opts.self_pairs == SelfPairs::on ? i : i + 1; j < n; ++j) ++uncovered;
  }

  // through[v] = pairs {i, j}, i <= j, with v on a shortest i-j path.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> through(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = opts.self_pairs == SelfPairs::on ? i : i + 1; j < n; ++j) {
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[i][v] + dist[v][j] == dist[i][j]) {
          through[v].emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
      }
    }
  }

  std::vector<std::vector<std::uint8_t>> has_hub(n, std::vector<std::uint8_t>(n, 0));
  std::vector<LabelList> labels(n);
  GreedyRun run;
  run.initial_pairs = uncovered;
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> incident(n);
  std::vector<std::pair<Vertex, Vertex>> edges;

  while (uncovered > 0) {
    detail::Candidate best;
    for (Vertex v = 0; v < n; ++v) {
      edges.clear();
      for (auto [i, j] : through[v]) {
        if (!covered[pair_index(i, j)]) edges.emplace_back(i, j);
      }
      auto cand = detail::peel(v, n, edges, incident);
      if (detail::better_candidate(cand, best)) best = std::move(cand);
    }
    if (!best.valid()) throw std::logic_error("greedy: no candidate covers an uncovered pair");

    const Vertex v = best.center;
    for (Vertex u : best.set) {
      if (!has_hub[u][v]) {
        has_hub[u][v] = 1;
        labels[u].push_back({v, dist[u][v]});
        ++size;
      }
    }
    // Any pair {i, j} through v with v now in both labels is covered, which
    // includes every pair counted in best.pairs.
    for (auto [i, j] : through[v]) {
      auto& c = covered[pair_index(i, j)];
      if (!c && has_hub[i][v] && has_hub[j][v]) {
        c = 1;
        --uncovered;
      }
    }
    ProgressEntry entry{run.progress.size() + 1, uncovered, size};
    run.progress.push_back(entry);
    if (on_iteration) on_iteration(entry);
  }

  for (auto& l : labels) std::sort(l.begin(), l.end());
  run.labeling = Labeling(std::move(labels), g.fingerprint());
  return run;
}

}  // namespace hublab
