#pragma once

// Bit-set view of hypercube vertex ids: an id is also a subset of the d
// coordinates, xor is symmetric difference.

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hublab/graph.hpp"
#include "hublab/random.hpp"

namespace hublab {

inline Distance hamming(Vertex u, Vertex v) {
  return static_cast<Distance>(std::popcount(u ^ v));
}

inline bool is_subset(Vertex sub, Vertex super) { return (sub & ~super) == 0; }

inline Vertex low_mask(int bits) {
  return bits >= 32 ? ~Vertex{0} : (Vertex{1} << bits) - 1;
}

// The subcube spanned by v and w: every vertex agreeing with both on the
// coordinates where they agree. It contains exactly the vertices lying on
// shortest v-w paths.
struct SubcubeDescriptor {
  Vertex anchor = 0;     // lowest member
  Vertex free_mask = 0;  // coordinates where the spanning pair differs

  bool contains(Vertex u) const { return ((u ^ anchor) & ~free_mask) == 0; }
  std::size_t size() const { return std::size_t{1} << std::popcount(free_mask); }

  // Members in ascending id order.
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    Vertex sub = 0;
    do {
      out.push_back(anchor | sub);
      sub = (sub - free_mask) & free_mask;
    } while (sub != 0);
    return out;
  }

  friend bool operator==(const SubcubeDescriptor&, const SubcubeDescriptor&) = default;
};

inline SubcubeDescriptor induced_subcube(Vertex v, Vertex w) {
  const Vertex free = v ^ w;
  return {v & ~free, free};
}

// u -> permute(u xor offset): translation followed by a coordinate
// permutation. Bit b of the translated id moves to bit permutation[b].
class HypercubeAutomorphism {
 public:
  HypercubeAutomorphism(int d, Vertex offset, std::vector<int> permutation)
      : d_(d), offset_(offset), permutation_(std::move(permutation)) {
    if (static_cast<int>(permutation_.size()) != d_) {
      throw std::invalid_argument("permutation length must equal dimension");
    }
    std::vector<bool> seen(d_, false);
    for (int p : permutation_) {
      if (p < 0 || p >= d_ || seen[p]) {
        throw std::invalid_argument("not a coordinate permutation");
      }
      seen[p] = true;
    }
    if (offset_ & ~low_mask(d_)) throw std::invalid_argument("offset has bits above d");
  }

  static HypercubeAutomorphism identity(int d) {
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    return {d, 0, std::move(perm)};
  }

  Vertex operator()(Vertex u) const {
    const Vertex x = u ^ offset_;
    Vertex out = 0;
    for (int b = 0; b < d_; ++b) {
      out |= ((x >> b) & 1u) << permutation_[b];
    }
    return out;
  }

  int dimension() const { return d_; }
  Vertex offset() const { return offset_; }
  const std::vector<int>& permutation() const { return permutation_; }

 private:
  int d_;
  Vertex offset_;
  std::vector<int> permutation_;
};

inline HypercubeAutomorphism random_automorphism(int d, std::uint64_t seed) {
  if (d < 0 || d > 31) throw std::invalid_argument("dimension out of range");
  Rng rng(seed);
  const Vertex offset = static_cast<Vertex>(uniform_below(rng, std::uint64_t{1} << d));
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(std::span<int>(perm), rng);
  return {d, offset, std::move(perm)};
}

}  // namespace hublab
