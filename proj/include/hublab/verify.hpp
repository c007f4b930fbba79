#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "hublab/graph.hpp"
#include "hublab/labeling.hpp"
#include "hublab/random.hpp"

namespace hublab {

// Whether the trivial pairs {v, v} must be covered, i.e. v in L(v).
enum class SelfPairs { off, on };

struct CoverOptions {
  SelfPairs self_pairs = SelfPairs::off;
  std::size_t max_reported = 32;
  unsigned threads = 1;
};

// A pair {s, t} (s <= t) is covered when some hub u of both labels carries
// the true distances to s and t and lies on a shortest s-t path. Stored
// distances that disagree with the graph are listed separately as
// (vertex, hub) and also invalidate the labeling.
struct CoverReport {
  bool valid = true;
  std::vector<std::pair<Vertex, Vertex>> violations;  // first max_reported, sorted
  std::size_t violation_count = 0;
  std::vector<std::pair<Vertex, Vertex>> distance_mismatches;  // first max_reported, sorted
  std::size_t mismatch_count = 0;
  std::size_t pairs_checked = 0;
};

namespace detail {

struct CoverChunk {
  std::vector<std::pair<Vertex, Vertex>> violations;
  std::size_t violation_count = 0;
  std::vector<std::pair<Vertex, Vertex>> mismatches;
  std::size_t mismatch_count = 0;
  std::size_t pairs_checked = 0;
};

inline bool pair_covered(const Labeling& lab, Vertex s, Vertex t,
                         const std::vector<Distance>& dist_s,
                         const std::vector<Distance>& dist_t) {
  auto a = lab.label(s);
  auto b = lab.label(t);
  const Distance target = dist_s[t];
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].hub < b[j].hub) {
      ++i;
    } else if (b[j].hub < a[i].hub) {
      ++j;
    } else {
      const Vertex u = a[i].hub;
      if (a[i].distance == dist_s[u] && b[j].distance == dist_t[u] &&
          dist_s[u] + dist_t[u] == target) {
        return true;
      }
      ++i;
      ++j;
    }
  }
  return false;
}

inline void check_distances(const Labeling& lab, Vertex v, const std::vector<Distance>& dist,
                            std::size_t max_reported, CoverChunk& out) {
  for (const auto& e : lab.label(v)) {
    if (e.distance != dist[e.hub]) {
      if (out.mismatches.size() < max_reported) out.mismatches.emplace_back(v, e.hub);
      ++out.mismatch_count;
    }
  }
}

inline void record_violation(CoverChunk& c, Vertex s, Vertex t, std::size_t max_reported) {
  if (c.violations.size() < max_reported) c.violations.emplace_back(s, t);
  ++c.violation_count;
}

inline CoverReport merge_chunks(std::vector<CoverChunk>& chunks, std::size_t max_reported) {
  CoverReport report;
  for (auto& c : chunks) {
    report.violations.insert(report.violations.end(), c.violations.begin(), c.violations.end());
    report.distance_mismatches.insert(report.distance_mismatches.end(), c.mismatches.begin(),
                                      c.mismatches.end());
    report.violation_count += c.violation_count;
    report.mismatch_count += c.mismatch_count;
    report.pairs_checked += c.pairs_checked;
  }
  std::sort(report.violations.begin(), report.violations.end());
  std::sort(report.distance_mismatches.begin(), report.distance_mismatches.end());
  if (report.violations.size() > max_reported) report.violations.resize(max_reported);
  if (report.distance_mismatches.size() > max_reported) {
    report.distance_mismatches.resize(max_reported);
  }
  report.valid = report.violation_count == 0 && report.mismatch_count == 0;
  return report;
}

inline void require_bound(const Graph& g, const Labeling& lab) {
  if (!(g.fingerprint() == lab.fingerprint())) {
    throw LabelingError("labeling fingerprint does not match the graph");
  }
}

}  // namespace detail

// Exhaustive check of every unordered pair, with BFS as the distance oracle.
// Memory is O(n^2) distances.
inline CoverReport verify_cover(const Graph& g, const Labeling& lab, CoverOptions opts = {}) {
  detail::require_bound(g, lab);
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Distance>> dist(n);
  const unsigned threads = std::max(1u, opts.threads);

  auto run_parallel = [&](auto&& body) {
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(body, w);
    body(0u);
    for (auto& t : pool) t.join();
  };

  run_parallel([&](unsigned w) {
    for (std::size_t v = w; v < n; v += threads) dist[v] = bfs_distances(g, static_cast<Vertex>(v));
  });

  std::vector<detail::CoverChunk> chunks(threads);
  run_parallel([&](unsigned w) {
    auto& c = chunks[w];
    for (std::size_t s = w; s < n; s += threads) {
      const Vertex sv = static_cast<Vertex>(s);
      detail::check_distances(lab, sv, dist[s], opts.max_reported, c);
      const std::size_t first = opts.self_pairs == SelfPairs::on ? s : s + 1;
      for (std::size_t t = first; t < n; ++t) {
        const Vertex tv = static_cast<Vertex>(t);
        ++c.pairs_checked;
        if (dist[s][t] == kUnreachable) {
          detail::record_violation(c, sv, tv, opts.max_reported);
          continue;
        }
        if (!detail::pair_covered(lab, sv, tv, dist[s], dist[t])) {
          detail::record_violation(c, sv, tv, opts.max_reported);
        }
      }
    }
  });
  // Chunks scan their sources in ascending order, so every globally reported
  // violation is within its own chunk's first max_reported.
  return detail::merge_chunks(chunks, opts.max_reported);
}

// Checks `samples` uniformly drawn unordered pairs (with s != t unless self
// pairs are on). One BFS per distinct sampled endpoint; stored distances of
// those endpoints' labels are checked as well.
inline CoverReport verify_cover_sampled(const Graph& g, const Labeling& lab, std::size_t samples,
                                        std::uint64_t seed, CoverOptions opts = {}) {
  detail::require_bound(g, lab);
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(samples);
  Rng rng(seed);
  if (n >= 2 || (n == 1 && opts.self_pairs == SelfPairs::on)) {
    while (pairs.size() < samples) {
      Vertex s = static_cast<Vertex>(uniform_below(rng, n));
      Vertex t = static_cast<Vertex>(uniform_below(rng, n));
      if (s == t && opts.self_pairs == SelfPairs::off) continue;
      if (s > t) std::swap(s, t);
      pairs.emplace_back(s, t);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<Vertex> endpoints;
  for (auto [s, t] : pairs) {
    endpoints.push_back(s);
    endpoints.push_back(t);
  }
  std::sort(endpoints.begin(), endpoints.end());
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
  std::vector<std::vector<Distance>> dist(n);

  const unsigned threads = std::max(1u, opts.threads);
  {
    std::vector<std::thread> pool;
    auto body = [&](unsigned w) {
      for (std::size_t i = w; i < endpoints.size(); i += threads) {
        dist[endpoints[i]] = bfs_distances(g, endpoints[i]);
      }
    };
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(body, w);
    body(0);
    for (auto& t : pool) t.join();
  }

  std::vector<detail::CoverChunk> chunks(1);
  auto& c = chunks[0];
  for (Vertex v : endpoints) detail::check_distances(lab, v, dist[v], opts.max_reported, c);
  for (auto [s, t] : pairs) {
    ++c.pairs_checked;
    if (dist[s][t] == kUnreachable || !detail::pair_covered(lab, s, t, dist[s], dist[t])) {
      detail::record_violation(c, s, t, opts.max_reported);
    }
  }
  return detail::merge_chunks(chunks, opts.max_reported);
}

// witness lists a cycle v_0, v_1, ..., v_{k-1} where L(v_i) contains
// v_{i+1 mod k}; absent iff the labeling is hierarchical.
struct HierarchyReport {
  bool hierarchical = true;
  std::vector<Vertex> witness;
};

inline bool is_valid_cycle_witness(const Labeling& lab, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 2) return false;
  std::set<Vertex> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex from = cycle[i];
    const Vertex to = cycle[(i + 1) % cycle.size()];
    if (from >= lab.vertex_count() || !lab.contains(from, to)) return false;
  }
  return true;
}

// The relation v -> w for w in L(v), w != v, must be acyclic. Mutual pairs are
// looked for first so a 2-cycle is reported whenever one exists.
inline HierarchyReport is_hierarchical(const Labeling& lab) {
  const std::size_t n = lab.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& e : lab.label(static_cast<Vertex>(v))) {
      if (e.hub > v && lab.contains(e.hub, static_cast<Vertex>(v))) {
        return {false, {static_cast<Vertex>(v), e.hub}};
      }
    }
  }

  enum : std::uint8_t { kWhite, kGray, kBlack };
  std::vector<std::uint8_t> color(n, kWhite);
  std::vector<Vertex> parent(n, 0);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != kWhite) continue;
    stack.push_back({static_cast<Vertex>(root), 0});
    color[root] = kGray;
    while (!stack.empty()) {
      auto& f = stack.back();
      auto l = lab.label(f.v);
      if (f.next == l.size()) {
        color[f.v] = kBlack;
        stack.pop_back();
        continue;
      }
      const Vertex w = l[f.next++].hub;
      if (w == f.v) continue;
      if (color[w] == kGray) {
        std::vector<Vertex> cycle;
        for (Vertex x = f.v; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return {false, std::move(cycle)};
      }
      if (color[w] == kWhite) {
        color[w] = kGray;
        parent[w] = f.v;
        stack.push_back({w, 0});
      }
    }
  }
  return {true, {}};
}

}  // namespace hublab
