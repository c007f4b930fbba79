#include <gtest/gtest.h>

#include <set>

#include "hublab/graph.hpp"
#include "hublab/hypercube.hpp"

using namespace hublab;

TEST(InducedSubcube, SpecExamples) {
  EXPECT_EQ(induced_subcube(0b101, 0b101).members(), (std::vector<Vertex>{0b101}));
  EXPECT_EQ(induced_subcube(0b00, 0b11).members(), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(induced_subcube(0b010, 0b011).members(), (std::vector<Vertex>{0b010, 0b011}));
}

TEST(InducedSubcube, EqualsShortestPathSet) {
  for (int d = 0; d <= 10; ++d) {
    const Vertex n = Vertex{1} << d;
    // Every pair at d <= 6; a strided subset above to keep the run short.
    const Vertex step = d <= 6 ? 1 : 37;
    for (Vertex v = 0; v < n; v += step) {
      for (Vertex w = 0; w < n; w += step) {
        auto sc = induced_subcube(v, w);
        std::vector<Vertex> brute;
        for (Vertex u = 0; u < n; ++u) {
          if (hamming(v, u) + hamming(u, w) == hamming(v, w)) brute.push_back(u);
        }
        ASSERT_EQ(sc.members(), brute) << "d=" << d << " v=" << v << " w=" << w;
        ASSERT_EQ(sc.size(), std::size_t{1} << hamming(v, w));
        ASSERT_TRUE(sc.contains(v));
        ASSERT_TRUE(sc.contains(w));
        for (Vertex u = 0; u < n; ++u) {
          ASSERT_EQ(sc.contains(u), std::binary_search(brute.begin(), brute.end(), u));
        }
      }
    }
  }
}

TEST(InducedSubcube, MatchesBfsOnGraph) {
  Graph g = hypercube(4);
  for (Vertex v = 0; v < 16; ++v) {
    auto dv = bfs_distances(g, v);
    for (Vertex w = 0; w < 16; ++w) {
      auto dw = bfs_distances(g, w);
      auto sc = induced_subcube(v, w);
      for (Vertex u = 0; u < 16; ++u) {
        EXPECT_EQ(sc.contains(u), dv[u] + dw[u] == dv[w]);
      }
    }
  }
}

TEST(Automorphism, IdentityWhenTrivial) {
  auto id = HypercubeAutomorphism::identity(5);
  for (Vertex u = 0; u < 32; ++u) EXPECT_EQ(id(u), u);
  HypercubeAutomorphism explicit_id(3, 0, {0, 1, 2});
  for (Vertex u = 0; u < 8; ++u) EXPECT_EQ(explicit_id(u), u);
}

TEST(Automorphism, PreservesDistanceAndIsBijective) {
  for (int d = 0; d <= 6; ++d) {
    const Vertex n = Vertex{1} << d;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto phi = random_automorphism(d, seed);
      std::set<Vertex> image;
      for (Vertex u = 0; u < n; ++u) {
        ASSERT_LT(phi(u), n);
        image.insert(phi(u));
        for (Vertex v = 0; v < n; ++v) ASSERT_EQ(hamming(phi(u), phi(v)), hamming(u, v));
      }
      ASSERT_EQ(image.size(), n);
    }
  }
}

TEST(Automorphism, DeterministicPerSeed) {
  auto a = random_automorphism(8, 42);
  auto b = random_automorphism(8, 42);
  EXPECT_EQ(a.offset(), b.offset());
  EXPECT_EQ(a.permutation(), b.permutation());
  bool differs = false;
  for (std::uint64_t s = 0; s < 10 && !differs; ++s) {
    auto c = random_automorphism(8, s);
    differs = c.offset() != a.offset() || c.permutation() != a.permutation();
  }
  EXPECT_TRUE(differs);
}

TEST(Automorphism, InvalidArguments) {
  EXPECT_THROW(HypercubeAutomorphism(3, 0, {0, 1}), std::invalid_argument);
  EXPECT_THROW(HypercubeAutomorphism(3, 0, {0, 1, 1}), std::invalid_argument);
  EXPECT_THROW(HypercubeAutomorphism(2, 4, {0, 1}), std::invalid_argument);
}

TEST(Automorphism, KnownMapping) {
  // xor 01, then swap the two coordinates.
  HypercubeAutomorphism phi(2, 0b01, {1, 0});
  EXPECT_EQ(phi(0b00), 0b10u);
  EXPECT_EQ(phi(0b01), 0b00u);
  EXPECT_EQ(phi(0b10), 0b11u);
  EXPECT_EQ(phi(0b11), 0b01u);
}

TEST(Bits, Helpers) {
  EXPECT_EQ(hamming(0b1011, 0b0110), 3u);
  EXPECT_TRUE(is_subset(0b0010, 0b0110));
  EXPECT_FALSE(is_subset(0b1010, 0b0110));
  EXPECT_EQ(low_mask(0), 0u);
  EXPECT_EQ(low_mask(3), 0b111u);
}
