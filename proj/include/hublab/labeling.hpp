#pragma once

#include <algorithm>
#include <compare>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hublab/graph.hpp"

namespace hublab {

struct HubEntry {
  Vertex hub = 0;
  Distance distance = 0;

  friend auto operator<=>(const HubEntry&, const HubEntry&) = default;
};

using LabelList = std::vector<HubEntry>;

class LabelingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One hub label per vertex, stored contiguously. Each label is sorted by hub
// id with distinct hubs. A vertex does not have to be its own hub.
class Labeling {
 public:
  Labeling() = default;

  Labeling(std::vector<LabelList> labels, Fingerprint fingerprint)
      : fingerprint_(fingerprint) {
    if (labels.size() != fingerprint.vertex_count) {
      throw LabelingError("labeling has " + std::to_string(labels.size()) +
                          " labels for a graph with " +
                          std::to_string(fingerprint.vertex_count) + " vertices");
    }
    offsets_.reserve(labels.size() + 1);
    std::size_t total = 0;
    for (const auto& l : labels) total += l.size();
    entries_.reserve(total);
    for (std::size_t v = 0; v < labels.size(); ++v) {
      const auto& l = labels[v];
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i].hub >= labels.size()) {
          throw LabelingError("label of " + std::to_string(v) +
                              " references missing vertex " + std::to_string(l[i].hub));
        }
        if (i > 0 && l[i - 1].hub >= l[i].hub) {
          throw LabelingError("label of " + std::to_string(v) +
                              " is not strictly ascending by hub");
        }
      }
      entries_.insert(entries_.end(), l.begin(), l.end());
      offsets_.push_back(entries_.size());
    }
  }

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t total_size() const { return entries_.size(); }
  const Fingerprint& fingerprint() const { return fingerprint_; }

  std::span<const HubEntry> label(Vertex v) const {
    return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
  }

  std::optional<Distance> hub_distance(Vertex v, Vertex hub) const {
    auto l = label(v);
    auto it = std::lower_bound(l.begin(), l.end(), hub,
                               [](const HubEntry& e, Vertex h) { return e.hub < h; });
    if (it == l.end() || it->hub != hub) return std::nullopt;
    return it->distance;
  }

  bool contains(Vertex v, Vertex hub) const { return hub_distance(v, hub).has_value(); }

  std::vector<LabelList> to_lists() const {
    std::vector<LabelList> out(vertex_count());
    for (std::size_t v = 0; v < out.size(); ++v) {
      auto l = label(static_cast<Vertex>(v));
      out[v].assign(l.begin(), l.end());
    }
    return out;
  }

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.fingerprint_ == b.fingerprint_ && a.offsets_ == b.offsets_ &&
           a.entries_ == b.entries_;
  }

 private:
  Fingerprint fingerprint_;
  std::vector<std::size_t> offsets_{0};
  std::vector<HubEntry> entries_;
};

inline std::size_t total_size(const Labeling& lab) { return lab.total_size(); }

struct QueryHit {
  Distance distance;
  Vertex hub;
};

// Merge sweep over the two sorted labels. Returns the best common hub (lowest
// id among ties), or nullopt when the labels share no hub.
inline std::optional<QueryHit> query_hub(const Labeling& lab, Vertex s, Vertex t) {
  if (s >= lab.vertex_count() || t >= lab.vertex_count()) {
    throw std::out_of_range("query vertex out of range");
  }
  auto a = lab.label(s);
  auto b = lab.label(t);
  std::optional<QueryHit> best;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].hub < b[j].hub) {
      ++i;
    } else if (b[j].hub < a[i].hub) {
      ++j;
    } else {
      const Distance sum = a[i].distance + b[j].distance;
      if (!best || sum < best->distance) best = QueryHit{sum, a[i].hub};
      ++i;
      ++j;
    }
  }
  return best;
}

inline std::optional<Distance> query(const Labeling& lab, Vertex s, Vertex t) {
  if (auto hit = query_hub(lab, s, t)) return hit->distance;
  return std::nullopt;
}

// Text format:
//   HL <n>
//   # graph <n> <m> <hash>
//   <v> <k> <hub_1> <dist_1> ... <hub_k> <dist_k>     (one line per vertex)
inline void save_labeling(std::ostream& out, const Labeling& lab) {
  const auto& fp = lab.fingerprint();
  out << "HL " << lab.vertex_count() << '\n';
  out << "# graph " << fp.vertex_count << ' ' << fp.edge_count << ' ' << fp.edge_hash << '\n';
  for (std::size_t v = 0; v < lab.vertex_count(); ++v) {
    auto l = lab.label(static_cast<Vertex>(v));
    out << v << ' ' << l.size();
    for (const auto& e : l) out << ' ' << e.hub << ' ' << e.distance;
    out << '\n';
  }
}

inline Labeling load_labeling(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::optional<Fingerprint> fp;
  std::vector<LabelList> labels;
  std::vector<bool> seen;
  std::size_t seen_count = 0;

  auto read_u64 = [&](std::istringstream& ls, const char* what) {
    long long x = -1;
    if (!(ls >> x) || x < 0) throw ParseError(line_no, std::string("expected ") + what);
    return static_cast<std::uint64_t>(x);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::istringstream ls(line.substr(start));
    if (line[start] == '#') {
      std::string hash, word;
      ls >> hash >> word;
      if (word == "graph") {
        Fingerprint f;
        f.vertex_count = read_u64(ls, "vertex count");
        f.edge_count = read_u64(ls, "edge count");
        unsigned long long h;
        if (!(ls >> h)) throw ParseError(line_no, "expected edge hash");
        f.edge_hash = h;
        fp = f;
      }
      continue;
    }
    if (!n) {
      std::string tag;
      ls >> tag;
      if (tag != "HL") throw ParseError(line_no, "expected \"HL <n>\" header");
      n = read_u64(ls, "vertex count");
      labels.resize(*n);
      seen.assign(*n, false);
      continue;
    }
    const std::uint64_t v = read_u64(ls, "vertex id");
    if (v >= *n) throw ParseError(line_no, "vertex id out of range");
    if (seen[v]) throw ParseError(line_no, "duplicate line for vertex " + std::to_string(v));
    seen[v] = true;
    ++seen_count;
    const std::uint64_t k = read_u64(ls, "hub count");
    if (k > *n) throw ParseError(line_no, "hub count exceeds vertex count");
    auto& l = labels[v];
    l.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
      const std::uint64_t hub = read_u64(ls, "hub id");
      const std::uint64_t dist = read_u64(ls, "distance");
      if (hub >= *n) throw ParseError(line_no, "hub id out of range");
      if (!l.empty() && l.back().hub >= hub) {
        throw ParseError(line_no, l.back().hub == hub ? "duplicate hub " + std::to_string(hub)
                                                      : std::string("hubs not ascending"));
      }
      l.push_back({static_cast<Vertex>(hub), static_cast<Distance>(dist)});
    }
    std::string rest;
    if (ls >> rest) throw ParseError(line_no, "trailing tokens");
  }
  if (!n) throw ParseError(line_no, "missing \"HL <n>\" header");
  if (seen_count != *n) {
    throw ParseError(line_no, "expected " + std::to_string(*n) + " vertex lines, found " +
                                  std::to_string(seen_count));
  }
  Fingerprint f = fp.value_or(Fingerprint{*n, 0, 0});
  if (f.vertex_count != *n) throw ParseError(line_no, "fingerprint vertex count mismatch");
  return Labeling(std::move(labels), f);
}

inline void save_labeling(const std::string& path, const Labeling& lab) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_labeling(out, lab);
}

inline Labeling load_labeling(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_labeling(in);
}

}  // namespace hublab
