#include <gtest/gtest.h>

#include <sstream>

#include "hublab/constructions.hpp"
#include "hublab/verify.hpp"

using namespace hublab;

namespace {

// w in L(v) iff w has the highest rank in the subcube spanned by v and w,
// scanning every member directly.
Labeling canonical_by_definition(int d, const VertexOrder& order) {
  const Vertex n = Vertex{1} << d;
  std::vector<LabelList> lists(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      Vertex top = v;
      for (Vertex u : induced_subcube(v, w).members()) {
        if (order.rank(u) > order.rank(top)) top = u;
      }
      if (top == w) lists[v].push_back({w, hamming(v, w)});
    }
  }
  return Labeling(std::move(lists), hypercube_fingerprint(d));
}

}  // namespace

TEST(SubsetHhl, SmallCases) {
  Labeling l0 = subset_hhl(0);
  EXPECT_EQ(l0.total_size(), 1u);
  EXPECT_EQ(l0.label(0)[0], (HubEntry{0, 0}));
  Labeling l2 = subset_hhl(2);
  EXPECT_EQ(l2.label(0).size(), 1u);
  EXPECT_EQ(l2.label(1).size(), 2u);
  EXPECT_EQ(l2.label(2).size(), 2u);
  EXPECT_EQ(l2.label(3).size(), 4u);
  EXPECT_EQ(l2.total_size(), 9u);
}

TEST(SubsetHhl, SizeIsThreeToTheD) {
  for (int d = 0; d <= 12; ++d) {
    EXPECT_EQ(BigInt(subset_hhl(d).total_size()), hhl_optimal_size(d));
  }
  EXPECT_EQ(subset_hhl(12).total_size(), 531441u);
}

TEST(SubsetHhl, LabelsAreSubmasksWithDistances) {
  Labeling lab = subset_hhl(6);
  for (Vertex v = 0; v < 64; ++v) {
    for (Vertex w = 0; w < 64; ++w) {
      auto dist = lab.hub_distance(v, w);
      ASSERT_EQ(dist.has_value(), is_subset(w, v));
      if (dist) {
        ASSERT_EQ(*dist, Distance(std::popcount(v) - std::popcount(w)));
      }
    }
  }
}

TEST(SubsetHhl, Budget) {
  EXPECT_THROW(subset_hhl(-1), std::length_error);
  EXPECT_THROW(subset_hhl(17), std::length_error);
}

TEST(VertexOrder, Basics) {
  auto o = VertexOrder::from_sequence({2, 0, 1});
  EXPECT_EQ(o.rank(2), 1u);
  EXPECT_EQ(o.rank(0), 2u);
  EXPECT_EQ(o.rank(1), 3u);
  EXPECT_EQ(o.sequence(), (std::vector<Vertex>{2, 0, 1}));
  auto s = o.with_adjacent_swap(1);
  EXPECT_EQ(s.sequence(), (std::vector<Vertex>{0, 2, 1}));
  EXPECT_THROW(o.with_adjacent_swap(3), std::out_of_range);
  EXPECT_THROW(VertexOrder::from_sequence({0, 0}), std::invalid_argument);
  EXPECT_THROW(VertexOrder::from_sequence({0, 2}), std::invalid_argument);
  EXPECT_EQ(VertexOrder::reverse_id(3).sequence(), (std::vector<Vertex>{2, 1, 0}));
  EXPECT_EQ(VertexOrder::random(16, 5).sequence(), VertexOrder::random(16, 5).sequence());
}

TEST(VertexOrder, ReadFromText) {
  std::istringstream in("# least important first\n3\n1\n\n0\n2\n");
  auto o = read_vertex_order(in);
  EXPECT_EQ(o.sequence(), (std::vector<Vertex>{3, 1, 0, 2}));
  std::istringstream bad("0\n0\n");
  EXPECT_THROW(read_vertex_order(bad), ParseError);
  std::istringstream junk("0 1\n");
  EXPECT_THROW(read_vertex_order(junk), ParseError);
}

TEST(Canonical, ReverseIdOrderGivesSubsetLabeling) {
  for (int d = 0; d <= 8; ++d) {
    EXPECT_EQ(canonical_labeling(d, VertexOrder::reverse_id(std::size_t{1} << d)), subset_hhl(d));
  }
}

TEST(Canonical, DimensionOne) {
  // Less important vertex gets both hubs.
  auto lab = canonical_labeling(1, VertexOrder::from_sequence({1, 0}));
  EXPECT_EQ(lab.label(1).size(), 2u);
  EXPECT_EQ(lab.label(0).size(), 1u);
  EXPECT_EQ(lab.total_size(), 3u);
  auto other = canonical_labeling(1, VertexOrder::identity(2));
  EXPECT_EQ(other.label(0).size(), 2u);
  EXPECT_EQ(other.total_size(), 3u);
}

TEST(Canonical, MatchesDefinitionOracle) {
  for (int d = 0; d <= 6; ++d) {
    const std::size_t n = std::size_t{1} << d;
    for (std::uint64_t seed = 0; seed < (d <= 4 ? 30u : 6u); ++seed) {
      auto order = VertexOrder::random(n, seed);
      ASSERT_EQ(canonical_labeling(d, order), canonical_by_definition(d, order))
          << "d=" << d << " seed=" << seed;
    }
    auto id = VertexOrder::identity(n);
    ASSERT_EQ(canonical_labeling(d, id), canonical_by_definition(d, id));
  }
}

TEST(Canonical, ValidHierarchicalAndOrderInvariantSize) {
  for (int d = 0; d <= 6; ++d) {
    Graph g = hypercube(d);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      Labeling lab = canonical_labeling(d, VertexOrder::random(g.vertex_count(), seed));
      ASSERT_EQ(BigInt(lab.total_size()), hhl_optimal_size(d));
      if (seed < 5) {
        ASSERT_TRUE(verify_cover(g, lab, {SelfPairs::on}).valid);
        ASSERT_TRUE(is_hierarchical(lab).hierarchical);
      }
    }
  }
}

TEST(Canonical, MostImportantVertexHasOnlyItself) {
  const int d = 5;
  auto order = VertexOrder::random(32, 11);
  Labeling lab = canonical_labeling(d, order);
  const Vertex top = order.sequence().back();
  ASSERT_EQ(lab.label(top).size(), 1u);
  EXPECT_EQ(lab.label(top)[0].hub, top);
  for (Vertex v = 0; v < 32; ++v) EXPECT_TRUE(lab.contains(v, top));
}

TEST(Canonical, MinimalityEveryNonSelfEntryIsNeeded) {
  for (int d = 1; d <= 4; ++d) {
    Graph g = hypercube(d);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Labeling lab = canonical_labeling(d, VertexOrder::random(g.vertex_count(), 100 + seed));
      auto lists = lab.to_lists();
      for (Vertex v = 0; v < lists.size(); ++v) {
        for (std::size_t i = 0; i < lists[v].size(); ++i) {
          if (lists[v][i].hub == v) continue;
          auto cut = lists;
          cut[v].erase(cut[v].begin() + static_cast<std::ptrdiff_t>(i));
          ASSERT_FALSE(verify_cover(g, Labeling(cut, lab.fingerprint())).valid)
              << "d=" << d << " seed=" << seed << " v=" << v << " hub=" << lists[v][i].hub;
        }
      }
    }
  }
}

TEST(Canonical, AdjacentSwapsKeepSize) {
  for (int d = 1; d <= 5; ++d) {
    const std::size_t n = std::size_t{1} << d;
    auto order = VertexOrder::random(n, 77 + d);
    const std::size_t base = canonical_labeling(d, order).total_size();
    for (std::uint32_t r = 1; r < n; ++r) {
      ASSERT_EQ(canonical_labeling(d, order.with_adjacent_swap(r)).total_size(), base);
    }
  }
}

TEST(Canonical, WrongOrderSize) {
  EXPECT_THROW(canonical_labeling(2, VertexOrder::identity(3)), std::invalid_argument);
}

TEST(Halfsplit, DimensionTwo) {
  Labeling lab = halfsplit_hl(2);
  EXPECT_EQ(lab.total_size(), 12u);
  std::vector<Vertex> hubs;
  for (const auto& e : lab.label(0)) hubs.push_back(e.hub);
  EXPECT_EQ(hubs, (std::vector<Vertex>{0b00, 0b01, 0b10}));
}

TEST(Halfsplit, SizesMatchFormula) {
  for (int d = 0; d <= 12; ++d) {
    Labeling lab = halfsplit_hl(d);
    ASSERT_EQ(BigInt(lab.total_size()), halfsplit_size(d)) << d;
    for (Vertex v = 0; v < lab.vertex_count(); v += 97) {
      ASSERT_EQ(BigInt(lab.label(v).size()), halfsplit_label_size(d));
    }
  }
  EXPECT_EQ(halfsplit_hl(12).total_size(), 520192u);
  EXPECT_EQ(halfsplit_size(12), BigInt(4096) * 127);
}

TEST(Halfsplit, FormulaWithOverlapIsUpperBound) {
  for (int d = 0; d <= 40; ++d) {
    EXPECT_EQ(halfsplit_size_with_overlap(d) - halfsplit_size(d), BigInt(1) << d);
  }
  EXPECT_EQ(halfsplit_size_with_overlap(2), 16);
  EXPECT_EQ(halfsplit_size_with_overlap(3), 8 * (2 + 4));
}

TEST(Halfsplit, BelowThreeToTheDFromTwelve) {
  EXPECT_EQ(halfsplit_size(0), hhl_optimal_size(0));
  for (int d = 1; d < 12; ++d) EXPECT_GT(halfsplit_size(d), hhl_optimal_size(d)) << d;
  for (int d = 12; d <= 20; ++d) EXPECT_LT(halfsplit_size(d), hhl_optimal_size(d)) << d;
}

TEST(Halfsplit, MembershipByHalves) {
  const int d = 7;  // top 3 bits, low 4 bits
  Labeling lab = halfsplit_hl(d);
  for (Vertex v = 0; v < 128; ++v) {
    for (Vertex w = 0; w < 128; ++w) {
      const bool same_top = (v >> 4) == (w >> 4);
      const bool same_low = (v & 0xF) == (w & 0xF);
      ASSERT_EQ(lab.contains(v, w), same_top || same_low);
    }
  }
}

TEST(Halfsplit, MeetingHubOnShortestPath) {
  for (int d = 0; d <= 8; ++d) {
    Labeling lab = halfsplit_hl(d);
    const Vertex n = Vertex{1} << d;
    for (Vertex s = 0; s < n; ++s) {
      for (Vertex t = 0; t < n; ++t) {
        const Vertex u = halfsplit_meeting_hub(d, s, t);
        ASSERT_TRUE(lab.contains(s, u) && lab.contains(t, u));
        ASSERT_EQ(hamming(s, u) + hamming(u, t), hamming(s, t));
      }
    }
  }
}
