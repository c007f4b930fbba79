#include <gtest/gtest.h>

#include <sstream>

#include "hublab/constructions.hpp"
#include "hublab/labeling.hpp"

using namespace hublab;

namespace {

Labeling from_text(const std::string& text) {
  std::istringstream in(text);
  return load_labeling(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    from_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Labeling, EmptyHasSizeZero) {
  Labeling lab(std::vector<LabelList>(3), path_graph(3).fingerprint());
  EXPECT_EQ(total_size(lab), 0u);
  EXPECT_EQ(lab.vertex_count(), 3u);
  EXPECT_FALSE(query(lab, 0, 2).has_value());
}

TEST(Labeling, RejectsUnsortedDuplicateAndMissingHubs) {
  const auto fp = path_graph(3).fingerprint();
  EXPECT_THROW(Labeling({{{1, 1}, {0, 0}}, {}, {}}, fp), LabelingError);
  EXPECT_THROW(Labeling({{{1, 1}, {1, 1}}, {}, {}}, fp), LabelingError);
  EXPECT_THROW(Labeling({{{3, 1}}, {}, {}}, fp), LabelingError);
  EXPECT_THROW(Labeling({{}, {}}, fp), LabelingError);
}

TEST(Labeling, Lookups) {
  Labeling lab = subset_hhl(2);
  EXPECT_TRUE(lab.contains(3, 0));
  EXPECT_FALSE(lab.contains(0, 3));
  EXPECT_EQ(lab.hub_distance(3, 1), Distance{1});
  EXPECT_EQ(lab.hub_distance(1, 2), std::nullopt);
  auto l = lab.label(3);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], (HubEntry{0, 2}));
  EXPECT_EQ(l[3], (HubEntry{3, 0}));
}

TEST(Query, SubsetHhlD2) {
  Labeling lab = subset_hhl(2);
  auto hit = query_hub(lab, 0b00, 0b11);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->distance, 2u);
  EXPECT_EQ(hit->hub, 0b00u);
}

TEST(Query, HalfsplitD2MeetsAtMixedHub) {
  Labeling lab = halfsplit_hl(2);
  auto hit = query_hub(lab, 0b00, 0b11);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->distance, 2u);
  EXPECT_TRUE(hit->hub == 0b01u || hit->hub == 0b10u);
}

TEST(Query, SelfQueryConvention) {
  // v in L(v) gives 0; otherwise twice the nearest hub distance.
  Labeling with_self = subset_hhl(3);
  for (Vertex v = 0; v < 8; ++v) EXPECT_EQ(query(with_self, v, v), Distance{0});
  Labeling no_self({{{1, 1}}, {{1, 0}}}, path_graph(2).fingerprint());
  EXPECT_EQ(query(no_self, 0, 0), Distance{2});
  EXPECT_EQ(query(no_self, 1, 1), Distance{0});
}

TEST(Query, LowestHubWinsTies) {
  Labeling lab({{{1, 1}, {3, 1}}, {{1, 0}}, {{1, 1}, {3, 1}}, {{3, 0}}},
               cycle_graph(4).fingerprint());
  auto hit = query_hub(lab, 0, 2);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->hub, 1u);
  EXPECT_EQ(hit->distance, 2u);
}

TEST(Query, OutOfRangeThrows) {
  EXPECT_THROW(query(subset_hhl(1), 0, 2), std::out_of_range);
}

TEST(LabelText, RoundTripSubsetD3) {
  Labeling lab = subset_hhl(3);
  std::stringstream ss;
  save_labeling(ss, lab);
  Labeling back = load_labeling(ss);
  EXPECT_EQ(back, lab);
}

TEST(LabelText, SizeEqualsSumOfLineCounts) {
  for (const Labeling& lab : {subset_hhl(4), halfsplit_hl(4)}) {
    std::stringstream ss;
    save_labeling(ss, lab);
    std::string line;
    std::size_t sum = 0;
    while (std::getline(ss, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("HL", 0) == 0) continue;
      std::istringstream ls(line);
      std::size_t v, k;
      ls >> v >> k;
      sum += k;
    }
    EXPECT_EQ(sum, lab.total_size());
  }
}

TEST(LabelText, CanonicalLayout) {
  std::stringstream ss;
  save_labeling(ss, subset_hhl(1));
  const auto fp = hypercube_fingerprint(1);
  EXPECT_EQ(ss.str(), "HL 2\n# graph 2 1 " + std::to_string(fp.edge_hash) +
                          "\n0 1 0 0\n1 2 0 1 1 0\n");
}

TEST(LabelText, EmptyLabelLine) {
  Labeling lab = from_text("HL 6\n0 0\n1 0\n2 0\n3 0\n4 0\n5 0\n");
  EXPECT_EQ(lab.label(5).size(), 0u);
  EXPECT_EQ(lab.total_size(), 0u);
}

TEST(LabelText, LinesMayComeInAnyOrder) {
  Labeling lab = from_text("HL 2\n1 1 0 1\n0 1 0 0\n");
  EXPECT_TRUE(lab.contains(1, 0));
}

TEST(LabelText, Errors) {
  EXPECT_EQ(parse_error_line("HL 2\n0 2 1 1 1 1\n1 0\n"), 2u);  // duplicate hub
  EXPECT_EQ(parse_error_line("HL 2\n0 2 1 1 0 0\n1 0\n"), 2u);  // unsorted
  EXPECT_EQ(parse_error_line("HL 2\n0 0\n0 0\n"), 3u);          // duplicate vertex line
  EXPECT_EQ(parse_error_line("HL 2\n0 0\n"), 2u);               // missing vertex
  EXPECT_EQ(parse_error_line("HL 2\n0 1 0 0 9\n1 0\n"), 2u);    // trailing token
  EXPECT_EQ(parse_error_line("HL 2\n0 1 5 0\n1 0\n"), 2u);      // hub out of range
  EXPECT_EQ(parse_error_line("0 0\n"), 1u);
  EXPECT_EQ(parse_error_line("HL 2\n0 2 1\n1 0\n"), 2u);        // truncated
  EXPECT_THROW(from_text(""), ParseError);
}
