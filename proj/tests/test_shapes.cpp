#include "hessalg/shapes.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace hessalg;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Flip the 0/1 mask across the antidiagonal and read the thresholds back.
std::vector<int> antitranspose_thresholds(const HessShape &s) {
  const std::size_t n = s.n();
  std::vector<int> t(n, 0);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= n; ++i)
      if (s.allows(n + 1 - j, n + 1 - i)) t[j - 1] = std::max(t[j - 1], static_cast<int>(i));
  return t;
}

bool inside_staircase(const YoungDiagram &d, std::size_t n) {
  for (std::size_t r = 0; r < d.parts().size(); ++r)
    if (d.parts()[r] > static_cast<int>(n - 1 - r)) return false;
  return true;
}

} // namespace

TEST(Shapes, StrictRankThreeTable) {
  struct Row {
    const char *function, *mask, *diagram;
    std::vector<std::pair<int, int>> roots;
  };
  // The five strict spaces with their masks and root sets.
  const std::map<std::string, Row> expected{
      {"h:1,2,3", {"h:1,2,3", "***\n0**\n00*", "2,1", {}}},
      {"h:2,2,3", {"h:2,2,3", "***\n***\n00*", "2", {{1, 2}}}},
      {"h:1,3,3", {"h:1,3,3", "***\n0**\n0**", "1,1", {{2, 3}}}},
      {"h:2,3,3", {"h:2,3,3", "***\n***\n0**", "1", {{1, 2}, {2, 3}}}},
      {"h:3,3,3", {"h:3,3,3", "***\n***\n***", "0", {{1, 2}, {1, 3}, {2, 3}}}},
  };
  auto shapes = enumerate_shapes(3, true);
  ASSERT_EQ(shapes.size(), 5u);
  for (auto &s : shapes) {
    auto it = expected.find(s.to_string());
    ASSERT_NE(it, expected.end()) << s.to_string();
    EXPECT_EQ(s.mask_string(), it->second.mask);
    EXPECT_EQ(shape_to_diagram(s).to_string(), it->second.diagram);
    EXPECT_EQ(negative_root_set(s), it->second.roots);
  }
}

TEST(Shapes, CountsAreCatalanAndCentralBinomial) {
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(enumerate_shapes(n, false).size(), binomial(2 * n, n)) << n;
    EXPECT_EQ(enumerate_shapes(n, true).size(), binomial(2 * n, n) / (n + 1)) << n;
  }
  EXPECT_EQ(enumerate_shapes(4, true).size(), 14u);
  EXPECT_EQ(enumerate_shapes(3, false).size(), 20u);
}

TEST(Shapes, DiagramRoundTripAndStaircase) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto &s : enumerate_shapes(n, false)) {
      auto d = shape_to_diagram(s);
      EXPECT_EQ(shape_from_diagram(d, n), s);
      EXPECT_EQ(d.boxes(), static_cast<int>(n * n) - s.cells());
      EXPECT_EQ(s.is_strict(), inside_staircase(d, n)) << s.to_string();
    }
}

TEST(Shapes, OrderMatchesReverseDiagramContainment) {
  auto shapes = enumerate_shapes(4, false);
  for (auto &a : shapes)
    for (auto &b : shapes) {
      auto da = shape_to_diagram(a).parts(), db = shape_to_diagram(b).parts();
      bool contains = da.size() <= db.size();
      for (std::size_t r = 0; r < da.size() && contains; ++r) contains = da[r] <= db[r];
      EXPECT_EQ(shape_le(b, a), contains);
    }
}

TEST(Shapes, HasseCoversAddOneBox) {
  for (bool strict : {false, true}) {
    auto shapes = enumerate_shapes(4, strict);
    auto edges = shape_hasse(4, strict);
    std::size_t expected = 0;
    for (auto &a : shapes)
      for (auto &b : shapes) expected += shape_le(a, b) && b.cells() == a.cells() + 1;
    EXPECT_EQ(edges.size(), expected);
    for (auto [lo, hi] : edges) EXPECT_EQ(shapes[hi].cells(), shapes[lo].cells() + 1);
  }
  EXPECT_EQ(shape_hasse(3, true).size(), 5u);
}

TEST(Shapes, TransposeMatchesMaskAntitranspose) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (auto &s : enumerate_shapes(n, false)) {
      auto t = transpose_shape(s);
      EXPECT_EQ(t.thresholds(), antitranspose_thresholds(s)) << s.to_string();
      EXPECT_EQ(transpose_shape(t), s);
      EXPECT_EQ(t.is_strict(), s.is_strict());
    }
  EXPECT_EQ(transpose_shape(parse_shape("h:2,3,3")).to_string(), "h:2,3,3");
  EXPECT_EQ(transpose_shape(parse_shape("h:2,2,3")).to_string(), "h:1,3,3");
  EXPECT_EQ(transpose_shape(parse_shape("yd:2", 2)).to_string(), "h:0,2");
}

TEST(Shapes, SplitAndNamedShapes) {
  auto s = parse_shape("h:3,3,3,5,5");
  EXPECT_EQ(split_indices(s), std::vector<std::size_t>{3});
  auto [a, b] = split_shape(s, 3);
  EXPECT_EQ(a.to_string(), "h:3,3,3");
  EXPECT_EQ(b.to_string(), "h:2,2");
  EXPECT_THROW(split_shape(s, 2), Error);
  EXPECT_EQ(peterson_shape(3).to_string(), "h:2,3,3");
  EXPECT_EQ(borel_shape(3).to_string(), "h:1,2,3");
  EXPECT_EQ(full_shape(2).to_string(), "h:2,2");
  EXPECT_TRUE(split_indices(peterson_shape(5)).empty());
  EXPECT_EQ(split_indices(borel_shape(4)).size(), 3u);
}

TEST(Shapes, Parsing) {
  EXPECT_EQ(parse_shape("yd:2,1", 3).to_string(), "h:1,2,3");
  EXPECT_EQ(parse_shape("yd:0", 2).to_string(), "h:2,2");
  EXPECT_EQ(parse_shape("yd:2,2", 2).to_string(), "h:0,0");
  EXPECT_EQ(parse_shape("h:0,1,4,4", 4).thresholds(), (std::vector<int>{0, 1, 4, 4}));
  EXPECT_THROW(parse_shape("h:3,2,3"), Error);
  EXPECT_THROW(parse_shape("h:1,4,4"), Error);
  EXPECT_THROW(parse_shape("h:1,a"), Error);
  EXPECT_THROW(parse_shape("yd:1"), Error);
  EXPECT_THROW(parse_shape("yd:3", 2), Error);
  EXPECT_THROW(parse_shape("yd:1,2", 3), Error);
  EXPECT_THROW(parse_shape("q:1"), Error);
  EXPECT_THROW(parse_shape("h:2,2", 3), Error);
  EXPECT_THROW(negative_root_set(parse_shape("h:0,2")), Error);
}
