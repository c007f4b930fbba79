#pragma once

// Undirected unit-length graphs over dense integer vertex ids.
//
// Hypercube vertices use LSB-0 bit numbering internally: bit b of an id is
// (id >> b) & 1. Textbook presentations usually number bits from the most
// significant one, so "the first h bits" of a d-bit id are the internal bits
// [d - h, d). Every algorithm here only depends on which positions two ids
// agree in, so the convention never leaks into results.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hublab {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Largest hypercube dimension we are willing to materialize.
inline constexpr int kMaxHypercubeDimension = 20;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Binds a labeling to the graph it was built for. The hash is FNV-1a over
// the normalized edge list (u < v, sorted), each endpoint fed as 4 bytes
// little-endian.
struct Fingerprint {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t edge_hash = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

namespace detail {

class EdgeHasher {
 public:
  void add(Vertex u, Vertex v) {
    feed(u);
    feed(v);
    ++count_;
  }
  std::uint64_t hash() const { return hash_; }
  std::uint64_t count() const { return count_; }

 private:
  void feed(Vertex x) {
    for (int i = 0; i < 4; ++i) {
      hash_ ^= (x >> (8 * i)) & 0xffu;
      hash_ *= 0x100000001b3ull;
    }
  }
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
  std::uint64_t count_ = 0;
};

}  // namespace detail

class Graph {
 public:
  Graph() = default;

  // Edges may come in any order and orientation; self-loops and duplicate
  // edges are rejected.
  Graph(std::size_t vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ > std::numeric_limits<Vertex>::max()) {
      throw GraphError("too many vertices");
    }
    for (auto& [u, v] : edges_) {
      if (u >= vertex_count_ || v >= vertex_count_) {
        throw GraphError("edge (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") references a missing vertex");
      }
      if (u == v) {
        throw GraphError("self-loop at vertex " + std::to_string(u));
      }
      if (u > v) std::swap(u, v);
    }
    if (!std::is_sorted(edges_.begin(), edges_.end())) {
      std::sort(edges_.begin(), edges_.end());
    }
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw GraphError("duplicate edge (" + std::to_string(dup->first) + ", " +
                       std::to_string(dup->second) + ")");
    }
    build_adjacency();
    detect_hypercube();
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  // Set iff the graph is exactly the d-dimensional hypercube on ids 0..2^d-1.
  std::optional<int> hypercube_dimension() const { return hypercube_dimension_; }

  Fingerprint fingerprint() const {
    detail::EdgeHasher h;
    for (auto [u, v] : edges_) h.add(u, v);
    return {vertex_count_, h.count(), h.hash()};
  }

  // Hamming distance when the graph is a hypercube, BFS otherwise.
  Distance distance(Vertex u, Vertex v) const;

 private:
  void build_adjacency() {
    offsets_.assign(vertex_count_ + 1, 0);
    for (auto [u, v] : edges_) {
      ++offsets_[u + 1];
      ++offsets_[v + 1];
    }
    for (std::size_t i = 0; i < vertex_count_; ++i) offsets_[i + 1] += offsets_[i];
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) adjacency_[fill[v]++] = u;
    for (auto [u, v] : edges_) adjacency_[fill[u]++] = v;
    for (std::size_t v = 0; v < vertex_count_; ++v) {
      std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    }
  }

  void detect_hypercube() {
    if (vertex_count_ == 0 || !std::has_single_bit(vertex_count_)) return;
    const int d = std::countr_zero(vertex_count_);
    const std::size_t expected = vertex_count_ / 2 * static_cast<std::size_t>(d);
    if (edges_.size() != expected) return;
    // Distinct one-bit-flip edges; there are exactly d*2^(d-1) of them.
    for (auto [u, v] : edges_) {
      if (std::popcount(u ^ v) != 1) return;
    }
    hypercube_dimension_ = d;
  }

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::optional<int> hypercube_dimension_;
};

// Exact unweighted distances from source; unreachable vertices get
// kUnreachable.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.vertex_count()) {
    throw std::out_of_range("bfs source " + std::to_string(source) +
                            " out of range");
  }
  std::vector<Distance> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline Distance Graph::distance(Vertex u, Vertex v) const {
  if (u >= vertex_count_ || v >= vertex_count_) {
    throw std::out_of_range("vertex out of range");
  }
  if (hypercube_dimension_) return static_cast<Distance>(std::popcount(u ^ v));
  return bfs_distances(*this, u)[v];
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](Distance x) { return x == kUnreachable; });
}

// Same value as hypercube(d).fingerprint() without materializing the graph.
inline Fingerprint hypercube_fingerprint(int d) {
  detail::EdgeHasher h;
  const Vertex n = Vertex{1} << d;
  for (Vertex u = 0; u < n; ++u) {
    for (int b = 0; b < d; ++b) {
      if (!((u >> b) & 1u)) h.add(u, u | (Vertex{1} << b));
    }
  }
  return {n, h.count(), h.hash()};
}

inline Graph hypercube(int d) {
  if (d < 0 || d > kMaxHypercubeDimension) {
    throw GraphError("hypercube dimension " + std::to_string(d) +
                     " outside [0, " + std::to_string(kMaxHypercubeDimension) + "]");
  }
  const Vertex n = Vertex{1} << d;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) / 2 * static_cast<std::size_t>(d));
  // Generated in sorted (u, v) order: for fixed u, u | 1<<b grows with b.
  for (Vertex u = 0; u < n; ++u) {
    for (int b = 0; b < d; ++b) {
      if (!((u >> b) & 1u)) edges.emplace_back(u, u | (Vertex{1} << b));
    }
  }
  return Graph(n, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  if (n >= 3) edges.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph(n, std::move(edges));
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) {
    edges.emplace_back(0, static_cast<Vertex>(i));
  }
  return Graph(leaves + 1, std::move(edges));
}

// Text format: optional comment lines starting with '#', then "n m", then m
// lines "u v". A "# hypercube d=<d>" comment is checked against the edges.
inline Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<int> declared_dimension;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::istringstream c(line.substr(start + 1));
      std::string word;
      c >> word;
      if (word == "hypercube") {
        std::string tag;
        c >> tag;
        if (tag.rfind("d=", 0) != 0) throw ParseError(line_no, "malformed hypercube header");
        try {
          declared_dimension = std::stoi(tag.substr(2));
        } catch (const std::exception&) {
          throw ParseError(line_no, "malformed hypercube header");
        }
      }
      continue;
    }
    std::istringstream ls(line);
    long long a = -1, b = -1;
    std::string rest;
    if (!(ls >> a >> b) || (ls >> rest) || a < 0 || b < 0) {
      throw ParseError(line_no, "expected two nonnegative integers");
    }
    if (!header) {
      header.emplace(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      edges.reserve(header->second);
      continue;
    }
    if (edges.size() == header->second) throw ParseError(line_no, "more edges than declared");
    if (static_cast<std::size_t>(a) >= header->first ||
        static_cast<std::size_t>(b) >= header->first) {
      throw ParseError(line_no, "vertex index out of range");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!header) throw ParseError(line_no, "missing \"n m\" header");
  if (edges.size() != header->second) {
    throw ParseError(line_no, "expected " + std::to_string(header->second) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  Graph g;
  try {
    g = Graph(header->first, std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(line_no, e.what());
  }
  if (declared_dimension && g.hypercube_dimension() != declared_dimension) {
    throw ParseError(1, "graph is not the declared hypercube d=" +
                            std::to_string(*declared_dimension));
  }
  return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
  if (auto d = g.hypercube_dimension()) out << "# hypercube d=" << *d << '\n';
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace hublab
