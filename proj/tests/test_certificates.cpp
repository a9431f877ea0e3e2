#include "support.hpp"

#include <gtest/gtest.h>

using namespace hessalg;

namespace {

JordanSpec spec(const char *text, std::uint32_t p) { return OperatorSpec::parse(text).jordan_spec(PrimeField(p)); }

} // namespace

TEST(Witness, WorkedExampleColumns) {
  auto x = spec("jordan:a^3,b^2,c^1", 3);
  EXPECT_EQ(columns_string(witness_flag(x, 2, 4)), "[e4,e2,e5,e1,e6,e3]");
  EXPECT_EQ(columns_string(witness_flag(x, 5, 6)), "[e4,e5,e6,e1,e3,e2]");
  for (auto [i, j] : {std::pair{2, 4}, {5, 6}}) {
    auto cert = witness_certificate(x, i, j);
    EXPECT_TRUE(cert.checks.verdict());
    EXPECT_TRUE(cert.verified());
    EXPECT_EQ(cert.memberships.size(), 132u);
  }
}

TEST(Witness, DiagonalOperatorUsesSumColumn) {
  auto x = spec("jordan:0^1,0^1,1^1", 5);
  auto w = witness_flag(x, 1, 2);
  EXPECT_EQ(column_string(w, 1), "e1+e3");
  auto cert = witness_certificate(x, 1, 2);
  EXPECT_TRUE(cert.verified());
}

TEST(Witness, RejectsBadInput) {
  auto x = spec("jordan:0^3", 2);
  EXPECT_THROW(witness_flag(x, 2, 2), Error);
  EXPECT_THROW(witness_flag(x, 3, 2), Error);
  EXPECT_THROW(witness_flag(x, 1, 4), Error);
  EXPECT_THROW(witness_flag(spec("jordan:1^1,1^1", 2), 1, 2), Error);
}

// Every pair (i, j) for every non-scalar Jordan type; the witness's
// membership is also checked against the chain oracle for every shape.
TEST(Witness, ExhaustiveSmallRanks) {
  for (auto [n, p] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}}) {
    oracle::Field fld{p, n};
    auto shapes = enumerate_shapes(n, true);
    for (auto &x : jordan_types(n, p)) {
      auto xi = support::to_int(jordan_matrix(x));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto cert = witness_certificate(x, i, j);
          ASSERT_TRUE(cert.verified()) << x.to_string() << " " << i << "," << j;
          if (n > 4) continue;
          auto ch = fld.chain_of_columns(support::to_int(cert.witness));
          for (auto &s : shapes)
            ASSERT_EQ(fld.member(xi, s.thresholds(), ch), s.threshold(i) >= j) << x.to_string();
        }
    }
  }
}

TEST(Witness, CertifyDistinctSeparatesEveryPair) {
  auto shapes = enumerate_shapes(4, true);
  for (auto &x : jordan_types(4, 2))
    for (std::size_t a = 0; a < shapes.size(); ++a)
      for (std::size_t b = a + 1; b < shapes.size(); ++b) {
        auto cert = certify_distinct(x, shapes[a], shapes[b]);
        ASSERT_TRUE(cert.verified());
        EXPECT_NE(cert.in_first, cert.in_second);
      }
  auto x = spec("jordan:0^4", 2);
  EXPECT_THROW(certify_distinct(x, shapes[0], shapes[0]), Error);
  EXPECT_THROW(certify_distinct(spec("jordan:1^1,1^1,1^1,1^1", 2), shapes[0], shapes[1]), Error);
  EXPECT_THROW(certify_distinct(x, parse_shape("h:0,4,4,4"), shapes[1]), Error);
  EXPECT_EQ(separating_pair(parse_shape("h:2,3,3"), parse_shape("h:1,3,3")), (std::pair<std::size_t, std::size_t>{1, 2}));
}

TEST(Involution, IsAnInvolutionOnFlags) {
  for (auto [n, p] : {std::pair{2, 3}, {3, 3}, {4, 2}}) {
    FlagSpace space(n, p);
    for (auto &f : space.all()) EXPECT_EQ(involution_image(involution_image(f)), f);
  }
}

TEST(Involution, ProjectionRankTwoExample) {
  auto r = verify_involution(OperatorSpec::parse("jordan:1^1,0^1"), parse_shape("yd:2", 2), 2);
  EXPECT_EQ(r.partner, parse_shape("yd:1,1", 2));
  EXPECT_EQ(r.source_count, 1u);
  EXPECT_EQ(r.partner_count, 1u);
  EXPECT_FALSE(r.same_points);
  EXPECT_TRUE(r.verified());
}

TEST(Involution, AllShapesRankThree) {
  for (const char *op : {"jordan:0^3", "jordan:1^1,0^1,0^1", "jordan:1^1,1^1,0^1", "matrix:1,1,0;0,1,1;1,0,0"})
    for (std::uint32_t p : {2u, 3u})
      for (auto &s : enumerate_shapes(3, false)) {
        auto r = verify_involution(OperatorSpec::parse(op), s, p);
        EXPECT_TRUE(r.verified()) << op << " " << s.to_string() << " p=" << p;
      }
}

TEST(Decomposition, WorkedExample) {
  auto r = verify_decomposition(parse_shape("h:3,3,3,5,5"), 2);
  EXPECT_EQ(r.split, 3u);
  EXPECT_EQ(r.first.to_string(), "h:3,3,3");
  EXPECT_EQ(r.second.to_string(), "h:2,2");
  EXPECT_EQ(r.count, 63u);
  EXPECT_EQ(r.first_count, 21u);
  EXPECT_EQ(r.second_count, 3u);
  EXPECT_TRUE(r.verified());
}

TEST(Decomposition, EverySplittableShape) {
  for (std::size_t n : {2u, 3u, 4u, 5u})
    for (auto &s : enumerate_shapes(n, true))
      for (auto j : split_indices(s)) {
        auto r = verify_decomposition(s, 2, j);
        ASSERT_TRUE(r.verified()) << s.to_string() << " at " << j;
        auto direct = point_counts(OperatorSpec::parse("jordan:0^" + std::to_string(n)), s, {2});
        EXPECT_EQ(direct.front(), r.count);
      }
  EXPECT_THROW(verify_decomposition(peterson_shape(4), 2), Error);
  EXPECT_THROW(verify_decomposition(parse_shape("h:0,2"), 2), Error);
}

TEST(Decomposition, SplitFlagNeedsStandardPrefix) {
  FlagSpace space(3, 2);
  EXPECT_THROW(split_flag(permutation_flag({2, 1, 3}, 2), 1), Error);
  auto [a, b] = split_flag(permutation_flag({1, 3, 2}, 2), 1);
  EXPECT_EQ(a.to_string(), "[e1]");
  EXPECT_EQ(b.to_string(), "[e2,e1]");
  EXPECT_EQ(product_flag(a, b), permutation_flag({1, 3, 2}, 2));
}

TEST(Decomposition, IndecomposablesFormThePetersonInterval) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto r = indecomposable_interval(n);
    EXPECT_TRUE(r.matches()) << n;
    EXPECT_EQ(r.indecomposable.front(), peterson_shape(n));
    EXPECT_EQ(r.decomposable.size() + r.indecomposable.size(), enumerate_shapes(n, true).size());
  }
  EXPECT_EQ(indecomposable_factors(parse_shape("h:1,3,3,4,6,6")),
            (std::vector<HessShape>{parse_shape("h:1"), parse_shape("h:2,2"), parse_shape("h:1"), parse_shape("h:2,2")}));
}
