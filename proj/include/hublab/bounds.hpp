#pragma once

// Lower and upper bounds on hub labeling size for hypercubes via LP duality.
//
// Notation used throughout:
//   N_k      number of unordered vertex pairs at distance k (self-pairs for k = 0)
//   y*_k     largest feasible uniform dual weight for distance-k pairs in the
//            distance-symmetric ("regular") dual, = 1 / densest-subgraph(G_k)
//   psi(k)   N_k * y*_k; max_k psi(k) <= ROPT <= (d + 1) max_k psi(k)
//   G_k      vertices are subsets of the d coordinates, edges join disjoint
//            sets whose union has k elements (pairs at distance k whose
//            shortest paths pass through the all-zero vertex)
//   C^i_k    the component of G_k holding the sets of size i and k - i

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hublab/graph.hpp"
#include "hublab/hypercube.hpp"
#include "hublab/lp.hpp"
#include "hublab/verify.hpp"

namespace hublab {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace detail {

inline void require_k(int d, int k, const char* what) {
  if (d < 0 || k < 0 || k > d) {
    throw std::out_of_range(std::string(what) + ": need 0 <= k <= d, got d=" +
                            std::to_string(d) + " k=" + std::to_string(k));
  }
}

}  // namespace detail

inline Rational pair_count(int d, int k) {
  detail::require_k(d, k, "pair_count");
  const BigInt cube = BigInt(1) << d;
  if (k == 0) return Rational(cube);
  return Rational(cube * binomial(d, k) / 2);
}

// Density (edges / vertices) of C^i_k. For i = k/2 the same expression
// equals the density of the non-bipartite regular component.
inline Rational component_density(int d, int k, int i) {
  detail::require_k(d, k, "component_density");
  if (i < 0 || i > k / 2) {
    throw std::out_of_range("component_density: need 0 <= i <= k/2");
  }
  return Rational(binomial(d, i) * binomial(d - i, k - i),
                  binomial(d, i) + binomial(d, k - i));
}

struct DensestComponent {
  int i = 0;
  Rational density;
};

// For k = 0, G_0 is the single self-pair of the zero vertex: one loop on one
// vertex, density 1.
inline DensestComponent densest_component(int d, int k) {
  detail::require_k(d, k, "densest_component");
  if (k == 0) return {0, Rational(1)};
  DensestComponent best{k / 2, component_density(d, k, k / 2)};
  for (int i = 0; i <= k / 2; ++i) {
    if (component_density(d, k, i) > best.density) {
      throw std::logic_error("densest component is not the middle one at d=" +
                             std::to_string(d) + " k=" + std::to_string(k));
    }
  }
  return best;
}

inline Rational y_star(int d, int k) {
  detail::require_k(d, k, "y_star");
  if (k == 0) return Rational(1);
  const int i = k / 2;
  if (k % 2 == 0) return Rational(BigInt(2), binomial(d - i, i));
  return Rational(binomial(d, i) + binomial(d, i + 1), binomial(d, i) * binomial(d - i, i + 1));
}

inline Rational psi(int d, int k) { return pair_count(d, k) * y_star(d, k); }

struct PsiMax {
  int k = 0;
  Rational value;
};

// Exact scan; smallest k wins ties. k = 0 is skipped when self-pairs are off.
inline PsiMax psi_argmax(int d, SelfPairs self_pairs = SelfPairs::on) {
  if (d < 0) throw std::out_of_range("psi_argmax: negative dimension");
  const int first = self_pairs == SelfPairs::on || d == 0 ? 0 : 1;
  PsiMax best{first, psi(d, first)};
  for (int k = first + 1; k <= d; ++k) {
    Rational v = psi(d, k);
    if (v > best.value) best = {k, std::move(v)};
  }
  return best;
}

inline double log2_binomial(double n, double k) {
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / std::log(2.0);
}

// log2 psi(k) through log-gamma; usable for d far beyond exact arithmetic.
inline double psi_log2(int d, int k) {
  detail::require_k(d, k, "psi_log2");
  const double dd = d;
  if (k == 0) return dd;
  const int i = k / 2;
  if (k % 2 == 0) {
    return dd + log2_binomial(dd, k) - log2_binomial(dd - i, i);
  }
  // C(d,i) + C(d,i+1) = C(d,i+1) (d+1)/(d-i)
  return dd - 1 + log2_binomial(dd, k) + log2_binomial(dd, i + 1) +
         std::log2((dd + 1) / (dd - i)) - log2_binomial(dd, i) - log2_binomial(dd - i, i + 1);
}

struct PsiMaxLog2 {
  int k = 0;
  double log2_value = 0;
};

// psi(2i+1) = psi(2i+3) exactly when d = 5i + 6, so values within rounding
// of the best count as ties and the smaller k is kept, as in psi_argmax.
inline PsiMaxLog2 psi_argmax_log2(int d) {
  if (d < 0) throw std::out_of_range("psi_argmax_log2: negative dimension");
  PsiMaxLog2 best{0, psi_log2(d, 0)};
  for (int k = 1; k <= d; ++k) {
    const double v = psi_log2(d, k);
    if (v > best.log2_value + 1e-9 * std::max(1.0, best.log2_value)) best = {k, v};
  }
  return best;
}

inline double binary_entropy(double alpha) {
  if (alpha <= 0 || alpha >= 1) return 0;
  return -alpha * std::log2(alpha) - (1 - alpha) * std::log2(1 - alpha);
}

// Growth exponent of psi at k/d = 2/5: log2 of the base of the (2.5+o(1))^d
// bound.
inline double hl_growth_exponent() { return 1 + binary_entropy(0.4) - 0.8 * binary_entropy(0.25); }

// (C(d,x) + C(d,k-x)) / (C(d,x) C(d-x,k-x)): the inverse density of the
// component with parts of sizes x and k - x, for any 0 <= x <= k.
inline Rational inverse_density_expression(int d, int k, int x) {
  detail::require_k(d, k, "inverse_density_expression");
  if (x < 0 || x > k) throw std::out_of_range("inverse_density_expression: need 0 <= x <= k");
  return Rational(binomial(d, x) + binomial(d, k - x), binomial(d, x) * binomial(d - x, k - x));
}

struct MiddleScan {
  std::vector<Rational> values;  // indexed by x = 0..k
  Rational minimum;
  std::vector<int> minimizers;
};

inline MiddleScan scan_inverse_density(int d, int k) {
  MiddleScan s;
  for (int x = 0; x <= k; ++x) s.values.push_back(inverse_density_expression(d, k, x));
  s.minimum = *std::min_element(s.values.begin(), s.values.end());
  for (int x = 0; x <= k; ++x) {
    if (s.values[x] == s.minimum) s.minimizers.push_back(x);
  }
  return s;
}

// Checks alpha t + s / beta >= t + s under 0 <= s <= t, alpha >= beta >= 1.
inline bool weighted_sum_check(const Rational& s, const Rational& t, const Rational& alpha,
                              const Rational& beta) {
  if (!(s >= 0 && s <= t && beta >= 1 && alpha >= beta)) {
    throw std::invalid_argument("weighted_sum_check: need 0 <= s <= t and alpha >= beta >= 1");
  }
  return alpha * t + s / beta >= t + s;
}

// ---------------------------------------------------------------------------
// The graphs G_k.

inline bool g_k_adjacent(Vertex a, Vertex b, int k) {
  return (a & b) == 0 && std::popcount(a | b) == k;
}

// Vertices of C^i_k: sets of size i or k - i.
inline std::vector<Vertex> component_vertices(int d, int k, int i) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < (Vertex{1} << d); ++v) {
    const int p = std::popcount(v);
    if (p == i || p == k - i) out.push_back(v);
  }
  return out;
}

// edges / |vertices| of the subgraph of G_k induced by `vertices`. The loop
// at the zero vertex in G_0 counts as one edge.
inline Rational induced_density(int k, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return 0;
  std::size_t edges = 0;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (k == 0 && vertices[a] == 0) ++edges;
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (g_k_adjacent(vertices[a], vertices[b], k)) ++edges;
    }
  }
  return Rational(static_cast<long long>(edges), static_cast<long long>(vertices.size()));
}

inline constexpr std::size_t kMaxBruteComponent = 24;

// Maximum density over all vertex subsets of G_k, by exhaustive enumeration
// inside each connected component (a densest subgraph can always be taken
// inside one component).
inline Rational brute_densest_subgraph(int d, int k) {
  detail::require_k(d, k, "brute_densest_subgraph");
  if (d > 8) throw std::length_error("brute_densest_subgraph: dimension too large");
  const Vertex n = Vertex{1} << d;
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g_k_adjacent(a, b, k)) parent[find(a)] = find(b);
    }
  }
  std::vector<std::vector<Vertex>> components(n);
  for (Vertex v = 0; v < n; ++v) components[find(v)].push_back(v);

  Rational best = 0;
  for (const auto& comp : components) {
    if (comp.empty()) continue;
    const bool has_loop = k == 0 && comp.front() == 0;
    if (comp.size() == 1 && !has_loop) continue;
    if (comp.size() > kMaxBruteComponent) {
      throw std::length_error("brute_densest_subgraph: component of " +
                              std::to_string(comp.size()) + " vertices");
    }
    const std::size_t c = comp.size();
    std::vector<std::uint32_t> adj(c, 0);
    for (std::size_t a = 0; a < c; ++a) {
      for (std::size_t b = 0; b < c; ++b) {
        if (a != b && g_k_adjacent(comp[a], comp[b], k)) adj[a] |= 1u << b;
      }
    }
    for (std::uint32_t subset = 1; subset < (1u << c); ++subset) {
      long long twice_edges = 0;
      for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
        const int a = std::countr_zero(rest);
        twice_edges += std::popcount(adj[a] & subset);
        if (has_loop && comp[a] == 0) twice_edges += 2;
      }
      Rational density(twice_edges, 2LL * std::popcount(subset));
      if (density > best) best = std::move(density);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// LP builders. Vertex sets S range over all subsets of V, encoded as n-bit
// masks.

inline constexpr std::size_t kMaxLpVertices = 8;

namespace detail {

struct PairInfo {
  Vertex i, j;
  Distance distance;
  std::uint32_t on_path;  // mask of vertices on shortest i-j paths
};

inline std::vector<PairInfo> all_pairs(const Graph& g, SelfPairs self_pairs) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Distance>> dist(n);
  for (std::size_t v = 0; v < n; ++v) dist[v] = bfs_distances(g, static_cast<Vertex>(v));
  std::vector<PairInfo> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = self_pairs == SelfPairs::on ? i : i + 1; j < n; ++j) {
      if (dist[i][j] == kUnreachable) throw GraphError("LP builders need a connected graph");
      std::uint32_t mask = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[i][v] + dist[v][j] == dist[i][j]) mask |= 1u << v;
      }
      pairs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), dist[i][j], mask});
    }
  }
  return pairs;
}

inline std::string pair_name(const PairInfo& p) {
  return "y[" + std::to_string(p.i) + "," + std::to_string(p.j) + "]";
}

inline void require_lp_size(const char* builder, std::size_t rows, std::size_t cols,
                            std::size_t limit) {
  if (rows * cols > limit) {
    throw LPError(std::string(builder) + ": " + std::to_string(rows) + " x " +
                  std::to_string(cols) + " program exceeds the instance-size guard");
  }
}

}  // namespace detail

inline constexpr std::size_t kMaxLpEntries = 8'000'000;

// max sum N_k y~_k  s.t.  for every S: sum over pairs {i,j} in S whose
// shortest paths pass through 0 of y~_dist(i,j) <= |S|.
inline RationalLP build_regular_lp(int d, SelfPairs self_pairs = SelfPairs::on) {
  if (d < 0 || d > 4) throw LPError("build_regular_lp: d must be in [0, 4]");
  const Vertex n = Vertex{1} << d;
  const int first = self_pairs == SelfPairs::on ? 0 : 1;
  RationalLP lp;
  lp.sense = Sense::maximize;
  for (int k = first; k <= d; ++k) lp.add_variable("yt" + std::to_string(k), pair_count(d, k));
  const std::uint64_t subsets = std::uint64_t{1} << n;
  detail::require_lp_size("build_regular_lp", subsets, lp.variable_count(), kMaxLpEntries);
  lp.constraints.reserve(subsets);
  std::vector<Vertex> members;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    members.clear();
    for (Vertex v = 0; v < n; ++v) {
      if ((s >> v) & 1u) members.push_back(v);
    }
    std::vector<long long> count(d + 1, 0);
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (self_pairs == SelfPairs::on && members[a] == 0) ++count[0];
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if ((members[a] & members[b]) == 0) ++count[std::popcount(members[a] | members[b])];
      }
    }
    std::vector<Rational> coeffs;
    for (int k = first; k <= d; ++k) coeffs.emplace_back(count[k]);
    lp.add_constraint(std::move(coeffs), Relation::less_equal,
                      Rational(static_cast<long long>(members.size())), "S=" + std::to_string(s));
  }
  return lp;
}

// max sum y_{i,j}  s.t.  for every (v, S): sum over pairs {i,j} in S with v on
// a shortest i-j path of y_{i,j} <= |S|.
inline RationalLP build_dual_lp(const Graph& g, SelfPairs self_pairs = SelfPairs::on) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxLpVertices) throw LPError("build_dual_lp: graph has more than 8 vertices");
  const auto pairs = detail::all_pairs(g, self_pairs);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  detail::require_lp_size("build_dual_lp", n * subsets, pairs.size(), kMaxLpEntries);
  RationalLP lp;
  lp.sense = Sense::maximize;
  for (const auto& p : pairs) lp.add_variable(detail::pair_name(p), Rational(1));
  lp.constraints.reserve(n * subsets);
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint64_t s = 0; s < subsets; ++s) {
      std::vector<Rational> coeffs(pairs.size());
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& pr = pairs[p];
        if (((s >> pr.i) & 1u) && ((s >> pr.j) & 1u) && ((pr.on_path >> v) & 1u)) coeffs[p] = 1;
      }
      lp.add_constraint(std::move(coeffs), Relation::less_equal,
                        Rational(std::popcount(static_cast<std::uint32_t>(s))),
                        "v=" + std::to_string(v) + ",S=" + std::to_string(s));
    }
  }
  return lp;
}

inline RationalLP build_dual_lp(int d, SelfPairs self_pairs = SelfPairs::on) {
  if (d < 0 || d > 3) throw LPError("build_dual_lp: d must be in [0, 3]");
  return build_dual_lp(hypercube(d), self_pairs);
}

// min sum |S| x_{v,S}  s.t.  for every pair {i,j}: sum over S containing i and
// j and v on a shortest i-j path of x_{v,S} >= 1.
inline RationalLP build_primal_lp(const Graph& g, SelfPairs self_pairs = SelfPairs::on,
                                  bool allow_large = false) {
  const std::size_t n = g.vertex_count();
  const std::size_t limit = allow_large ? 8 : 5;
  if (n > limit) {
    throw LPError("build_primal_lp: " + std::to_string(n) + " vertices exceeds the limit of " +
                  std::to_string(limit));
  }
  const auto pairs = detail::all_pairs(g, self_pairs);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  detail::require_lp_size("build_primal_lp", pairs.size(), n * subsets, kMaxLpEntries);
  RationalLP lp;
  lp.sense = Sense::minimize;
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint64_t s = 0; s < subsets; ++s) {
      lp.variable_names.push_back("x[" + std::to_string(v) + ",S=" + std::to_string(s) + "]");
      lp.objective.emplace_back(std::popcount(static_cast<std::uint32_t>(s)));
      lp.nonnegative.push_back(true);
    }
  }
  for (const auto& pr : pairs) {
    std::vector<Rational> coeffs(lp.variable_count());
    for (Vertex v = 0; v < n; ++v) {
      if (!((pr.on_path >> v) & 1u)) continue;
      for (std::uint64_t s = 0; s < subsets; ++s) {
        if (((s >> pr.i) & 1u) && ((s >> pr.j) & 1u)) coeffs[v * subsets + s] = 1;
      }
    }
    lp.add_constraint(std::move(coeffs), Relation::greater_equal, Rational(1),
                      "pair " + std::to_string(pr.i) + "," + std::to_string(pr.j));
  }
  return lp;
}

inline RationalLP build_primal_lp(int d, SelfPairs self_pairs = SelfPairs::on,
                                  bool allow_large = false) {
  if (d < 0 || d > 3 || (d == 3 && !allow_large)) {
    throw LPError("build_primal_lp: d must be in [0, 2] (3 with allow_large)");
  }
  return build_primal_lp(hypercube(d), self_pairs, allow_large);
}

// Pair list in the variable order of build_dual_lp.
inline std::vector<std::pair<Vertex, Vertex>> dual_lp_pairs(const Graph& g,
                                                            SelfPairs self_pairs = SelfPairs::on) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& p : detail::all_pairs(g, self_pairs)) out.emplace_back(p.i, p.j);
  return out;
}

// Averages a dual solution over each distance class: y~_k is the mean of
// y_{i,j} over pairs at distance k.
inline std::vector<Rational> average_by_distance(const Graph& g, const std::vector<Rational>& y,
                                                 SelfPairs self_pairs = SelfPairs::on) {
  const auto pairs = detail::all_pairs(g, self_pairs);
  Distance max_d = 0;
  for (const auto& p : pairs) max_d = std::max(max_d, p.distance);
  std::vector<Rational> sum(max_d + 1);
  std::vector<long long> count(max_d + 1, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    sum[pairs[p].distance] += y[p];
    ++count[pairs[p].distance];
  }
  for (std::size_t k = 0; k <= max_d; ++k) {
    if (count[k]) sum[k] /= count[k];
  }
  return sum;
}

// Expands per-distance weights back to one weight per pair.
inline std::vector<Rational> lift_by_distance(const Graph& g, const std::vector<Rational>& per_k,
                                              SelfPairs self_pairs = SelfPairs::on) {
  std::vector<Rational> y;
  for (const auto& p : detail::all_pairs(g, self_pairs)) y.push_back(per_k.at(p.distance));
  return y;
}

}  // namespace hublab
