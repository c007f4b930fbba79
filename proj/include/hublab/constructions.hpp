#pragma once

// Explicit hub labelings of the d-dimensional hypercube.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hublab/graph.hpp"
#include "hublab/hypercube.hpp"
#include "hublab/labeling.hpp"
#include "hublab/random.hpp"

namespace hublab {

using BigInt = boost::multiprecision::cpp_int;

// Materialized labelings are refused above this many hub entries.
inline constexpr std::uint64_t kMaxLabelEntries = std::uint64_t{1} << 25;

// Importance order on the vertices. rank(v) is in [1, n]; higher is more
// important.
class VertexOrder {
 public:
  VertexOrder() = default;

  // `least_to_most` lists every vertex once, least important first.
  static VertexOrder from_sequence(const std::vector<Vertex>& least_to_most) {
    VertexOrder o;
    const std::size_t n = least_to_most.size();
    o.rank_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = least_to_most[i];
      if (v >= n) throw std::invalid_argument("order mentions vertex " + std::to_string(v) +
                                              " outside [0, " + std::to_string(n) + ")");
      if (o.rank_[v] != 0) throw std::invalid_argument("order repeats vertex " + std::to_string(v));
      o.rank_[v] = static_cast<std::uint32_t>(i + 1);
    }
    return o;
  }

  static VertexOrder identity(std::size_t n) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    return from_sequence(seq);
  }

  // Vertex 0 most important, n - 1 least.
  static VertexOrder reverse_id(std::size_t n) {
    std::vector<Vertex> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = static_cast<Vertex>(n - 1 - i);
    return from_sequence(seq);
  }

  static VertexOrder random(std::size_t n, std::uint64_t seed) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    Rng rng(seed);
    shuffle(std::span<Vertex>(seq), rng);
    return from_sequence(seq);
  }

  std::size_t size() const { return rank_.size(); }
  std::uint32_t rank(Vertex v) const { return rank_[v]; }

  std::vector<Vertex> sequence() const {
    std::vector<Vertex> seq(rank_.size());
    for (std::size_t v = 0; v < rank_.size(); ++v) seq[rank_[v] - 1] = static_cast<Vertex>(v);
    return seq;
  }

  // Swaps the vertices holding ranks r and r + 1.
  VertexOrder with_adjacent_swap(std::uint32_t r) const {
    auto seq = sequence();
    if (r < 1 || r >= seq.size()) throw std::out_of_range("rank swap out of range");
    std::swap(seq[r - 1], seq[r]);
    return from_sequence(seq);
  }

 private:
  std::vector<std::uint32_t> rank_;
};

// One vertex id per line, least important first; '#' lines ignored.
inline VertexOrder read_vertex_order(std::istream& in) {
  std::vector<Vertex> seq;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    long long v = -1;
    std::string rest;
    if (!(ls >> v) || v < 0 || (ls >> rest)) throw ParseError(line_no, "expected one vertex id");
    seq.push_back(static_cast<Vertex>(v));
  }
  try {
    return VertexOrder::from_sequence(seq);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

namespace detail {

inline void require_labeling_budget(int d, std::uint64_t entries, const char* scheme) {
  if (d < 0 || d > kMaxHypercubeDimension || entries > kMaxLabelEntries) {
    throw std::length_error(std::string(scheme) + ": dimension " + std::to_string(d) +
                            " exceeds the labeling budget");
  }
}

inline std::uint64_t pow3(int d) {
  std::uint64_t x = 1;
  for (int i = 0; i < d; ++i) x *= 3;
  return x;
}

}  // namespace detail

inline BigInt hhl_optimal_size(int d) { return boost::multiprecision::pow(BigInt(3), d); }

// Per-vertex size of halfsplit_hl after merging the two families, which
// overlap exactly in v.
inline BigInt halfsplit_label_size(int d) {
  const int low = d - d / 2, high = d / 2;
  return (BigInt(1) << low) + (BigInt(1) << high) - 1;
}

inline BigInt halfsplit_size(int d) { return (BigInt(1) << d) * halfsplit_label_size(d); }

// 2^d (2^floor(d/2) + 2^ceil(d/2)): both families counted in full.
inline BigInt halfsplit_size_with_overlap(int d) {
  return (BigInt(1) << d) * ((BigInt(1) << (d / 2)) + (BigInt(1) << (d - d / 2)));
}

// L(v) = every w that is a subset of v. Hierarchical, total size 3^d.
inline Labeling subset_hhl(int d) {
  detail::require_labeling_budget(d, d <= kMaxHypercubeDimension ? detail::pow3(d) : 0, "subset-hhl");
  const Vertex n = Vertex{1} << d;
  std::vector<LabelList> labels(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& l = labels[v];
    l.reserve(std::size_t{1} << std::popcount(v));
    // Submasks of v in ascending order.
    Vertex w = 0;
    do {
      l.push_back({w, hamming(v, w)});
      w = (w - v) & v;
    } while (w != 0);
  }
  return Labeling(std::move(labels), hypercube_fingerprint(d));
}

// w in L(v) iff w is the most important vertex of induced_subcube(v, w).
//
// Every subcube (base, free) with base & free == 0 has one most important
// vertex u, and it contributes exactly the entry u in L(u ^ free). The
// maxima are computed by dynamic programming over free masks: dropping the
// lowest free bit b splits a subcube into (base, free ^ b) and
// (base | b, free ^ b). Tables store one slot per base in the complement of
// the free mask, 3^d slots in total.
inline Labeling canonical_labeling(int d, const VertexOrder& order) {
  detail::require_labeling_budget(d, d <= kMaxHypercubeDimension ? detail::pow3(d) : 0, "canonical");
  const Vertex n = Vertex{1} << d;
  if (order.size() != n) {
    throw std::invalid_argument("order has " + std::to_string(order.size()) +
                                " vertices, hypercube has " + std::to_string(n));
  }
  const Vertex full = n - 1;

  // Position of base among the submasks of `complement`, base a submask.
  auto compress = [](Vertex base, Vertex complement) {
    Vertex out = 0;
    int pos = 0;
    for (Vertex c = complement; c != 0; c &= c - 1, ++pos) {
      if (base & (c & -c)) out |= Vertex{1} << pos;
    }
    return out;
  };

  std::vector<std::vector<Vertex>> best(n);
  best[0].resize(n);
  for (Vertex v = 0; v < n; ++v) best[0][v] = v;
  for (Vertex free = 1; free < n; ++free) {
    const Vertex b = free & -free;
    const Vertex rest = free ^ b;
    const Vertex complement = full & ~free;
    const Vertex parent_complement = full & ~rest;
    auto& table = best[free];
    table.resize(std::size_t{1} << std::popcount(complement));
    const auto& parent = best[rest];
    Vertex base = 0;
    do {
      const Vertex x = parent[compress(base, parent_complement)];
      const Vertex y = parent[compress(base | b, parent_complement)];
      table[compress(base, complement)] = order.rank(x) > order.rank(y) ? x : y;
      base = (base - complement) & complement;
    } while (base != 0);
  }

  std::vector<LabelList> labels(n);
  for (Vertex free = 0; free < n; ++free) {
    const Vertex complement = full & ~free;
    const auto& table = best[free];
    Vertex base = 0;
    do {
      const Vertex u = table[compress(base, complement)];
      labels[u ^ free].push_back({u, static_cast<Distance>(std::popcount(free))});
      base = (base - complement) & complement;
    } while (base != 0);
  }
  for (auto& l : labels) std::sort(l.begin(), l.end());
  return Labeling(std::move(labels), hypercube_fingerprint(d));
}

// L(v) = {w : top floor(d/2) bits of w equal v's} u {w : low ceil(d/2) bits
// of w equal v's}. Valid but not hierarchical for d >= 1.
inline Labeling halfsplit_hl(int d) {
  detail::require_labeling_budget(
      d, d <= kMaxHypercubeDimension ? halfsplit_size(d).convert_to<std::uint64_t>() : 0,
      "halfsplit-hl");
  const Vertex n = Vertex{1} << d;
  const int low_bits = d - d / 2;
  const Vertex low = low_mask(low_bits);
  const Vertex high = (n - 1) & ~low;
  std::vector<LabelList> labels(n);
  for (Vertex v = 0; v < n; ++v) {
    auto& l = labels[v];
    l.reserve(halfsplit_label_size(d).convert_to<std::size_t>());
    // Both families enumerated in ascending order, then merged.
    std::vector<Vertex> same_high, same_low;
    Vertex sub = 0;
    do {
      same_high.push_back((v & high) | sub);
      sub = (sub - low) & low;
    } while (sub != 0);
    sub = 0;
    do {
      same_low.push_back((v & low) | sub);
      sub = (sub - high) & high;
    } while (sub != 0);
    std::vector<Vertex> hubs;
    hubs.reserve(same_high.size() + same_low.size());
    std::set_union(same_high.begin(), same_high.end(), same_low.begin(), same_low.end(),
                   std::back_inserter(hubs));
    for (Vertex w : hubs) l.push_back({w, hamming(v, w)});
  }
  return Labeling(std::move(labels), hypercube_fingerprint(d));
}

// Common hub of s and t in halfsplit_hl(d) on a shortest s-t path: the top
// half of t with the low half of s.
inline Vertex halfsplit_meeting_hub(int d, Vertex s, Vertex t) {
  const Vertex low = low_mask(d - d / 2);
  return (t & ~low) | (s & low);
}

}  // namespace hublab
