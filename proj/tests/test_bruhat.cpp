#include "bruhat_forge/bruhat.hpp"
#include "bruhat_forge/literal.hpp"
#include "bruhat_forge/patterns.hpp"

#include <gtest/gtest.h>

using namespace bruhat;

namespace {
const CoxeterSystem& A(int r) { return build_system(Family::A, r); }
}  // namespace

TEST(BruhatLeq, Examples) {
  EXPECT_TRUE(bruhat_leq(parse_element("s1", A(2)), parse_element("s1s2s1", A(2))));
  EXPECT_FALSE(bruhat_leq(parse_element("s1s2", A(2)), parse_element("s2s1", A(2))));
  EXPECT_FALSE(bruhat_leq(parse_element("s2s1", A(2)), parse_element("s1s2", A(2))));
}

TEST(BruhatLeq, AgreesWithSubwordOracle) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 3}, {Family::G2, 2}}) {
    const auto elems = enumerate_group(build_system(f, r));
    for (const auto& w : elems) {
      const ElementSet below = subword_lower_set(w);
      for (const auto& u : elems) EXPECT_EQ(bruhat_leq(u, w), below.count(u) > 0);
    }
  }
}

TEST(BruhatLeq, InverseIsAnAutomorphism) {
  const auto elems = enumerate_group(A(3));
  for (const auto& u : elems)
    for (const auto& w : elems) EXPECT_EQ(bruhat_leq(u, w), bruhat_leq(inverse(u), inverse(w)));
}

TEST(LowerInterval, Examples) {
  const auto& F = build_system(Family::FreeUniversal, 3);
  const Interval I = lower_interval(parse_element("s1s2s3s1", F));
  EXPECT_EQ(I.size(), 14u);
  EXPECT_EQ(I.rank_sizes(), (std::vector<long long>{1, 3, 5, 4, 1}));
  EXPECT_EQ(lower_interval(A(3).identity()).size(), 1u);
  EXPECT_EQ(lower_interval(parse_element("4321", Family::A)).size(), 24u);
}

TEST(LowerInterval, CoversAreLengthOneRelations) {
  for (const auto& w : enumerate_group(A(3))) {
    const Interval I = lower_interval(w);
    std::set<std::pair<int, int>> covers(I.covers.begin(), I.covers.end());
    for (std::size_t a = 0; a < I.size(); ++a)
      for (std::size_t b = 0; b < I.size(); ++b) {
        const bool expect = I.elements[b].length() == I.elements[a].length() + 1 && bruhat_leq(I.elements[a], I.elements[b]);
        EXPECT_EQ(covers.count({static_cast<int>(a), static_cast<int>(b)}) > 0, expect);
      }
    EXPECT_EQ(poincare(w).evaluate(1), BigInt(I.size()));
  }
}

TEST(ParabolicDecompose, Examples) {
  const auto w = parse_element("s1s2s3s2s1", A(3));
  auto pd = parabolic_decompose(w, gen_set({0, 2}));
  EXPECT_EQ(pd.v, parse_element("s1s3s2", A(3)));
  EXPECT_EQ(pd.u, parse_element("s1s3", A(3)));
  pd = parabolic_decompose(w, gen_set({0, 1}));
  EXPECT_EQ(pd.v, parse_element("s1s2s3", A(3)));
  EXPECT_EQ(pd.u, parse_element("s2s1", A(3)));
  pd = parabolic_decompose(w, 0);
  EXPECT_EQ(pd.v, w);
  EXPECT_TRUE(pd.u.is_identity());
}

TEST(ParabolicDecompose, InvariantsExhaustive) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::G2, 2}}) {
    const auto& W = build_system(f, r);
    for (const auto& w : enumerate_group(W))
      for (GenSet J = 0; J <= W.all_generators(); ++J) {
        const auto pd = parabolic_decompose(w, J);
        EXPECT_EQ(multiply(pd.v, pd.u), w);
        EXPECT_EQ(pd.v.length() + pd.u.length(), w.length());
        EXPECT_TRUE(in_parabolic(pd.u, J));
        EXPECT_TRUE(is_min_coset_rep(pd.v, J));
      }
  }
}

TEST(RelativeInterval, Examples) {
  auto words = [](const std::vector<GroupElement>& xs) {
    std::set<std::string> out;
    for (const auto& x : xs) out.insert(to_word_string(x));
    return out;
  };
  auto expected = [](std::initializer_list<const char*> ws) {
    std::set<std::string> out;
    for (const char* w : ws) out.insert(to_word_string(parse_element(w, A(3))));
    return out;
  };
  EXPECT_EQ(words(relative_lower_interval(parse_element("s1s3s2", A(3)), gen_set({0, 2}))),
            expected({"e", "s2", "s1s2", "s3s2", "s1s3s2"}));
  EXPECT_EQ(words(relative_lower_interval(parse_element("s1s2s3", A(3)), gen_set({0, 1}))), expected({"e", "s3", "s2s3", "s1s2s3"}));
  EXPECT_EQ(relative_lower_interval(A(3).identity(), gen_set({0})).size(), 1u);
  EXPECT_THROW(relative_lower_interval(parse_element("s1", A(3)), gen_set({0})), std::invalid_argument);
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare(parse_element("s1s2s1", A(2))), IntPolynomial({1, 2, 2, 1}));
  const auto w = parse_element("s2s1s3s2", A(3));
  EXPECT_EQ(poincare(w), IntPolynomial({1, 3, 5, 4, 1}));
  EXPECT_EQ(relative_poincare(w, gen_set({0, 2})), IntPolynomial({1, 1, 2, 1, 1}));
  EXPECT_EQ(poincare(A(3).identity()), IntPolynomial({1}));
}

TEST(Poincare, InverseSymmetry) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::D, 4}})
    for (const auto& w : enumerate_group(build_system(f, r))) EXPECT_EQ(poincare(w), poincare(inverse(w)));
}

TEST(LongestElement, ExamplesAndBruteForce) {
  EXPECT_EQ(longest_element(A(3), gen_set({0, 1})), parse_element("s1s2s1", A(3)));
  EXPECT_TRUE(longest_element(A(3), 0).is_identity());
  EXPECT_EQ(longest_element(A(2), A(2).all_generators()).length(), 3);
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::D, 4}}) {
    const auto& W = build_system(f, r);
    for (GenSet J = 0; J <= W.all_generators(); ++J) {
      const auto elems = enumerate_parabolic(W, J);
      const GroupElement u = longest_element(W, J);
      for (const auto& x : elems) EXPECT_LE(x.length(), u.length());
      EXPECT_EQ(descents(u, Side::Left), J);
      EXPECT_EQ(descents(u, Side::Right), J);
    }
  }
  const auto& Aff = build_system(Family::AffineA, 3);
  EXPECT_THROW(longest_element(Aff, Aff.all_generators()), std::invalid_argument);
  EXPECT_EQ(longest_element(Aff, gen_set({0, 1})).length(), 3);
}

TEST(MaxInParabolic, Examples) {
  const auto w = parse_element("s1s2s3s2s1", A(3));
  EXPECT_EQ(max_in_interval_parabolic(w, gen_set({0, 2})), parse_element("s1s3", A(3)));
  EXPECT_EQ(max_in_interval_parabolic(w, gen_set({0, 1})), parse_element("s1s2s1", A(3)));
  EXPECT_TRUE(max_in_interval_parabolic(A(3).identity(), gen_set({1})).is_identity());
}

TEST(MaxInParabolic, BruteForceMaximum) {
  const auto& W = A(3);
  for (const auto& w : enumerate_group(W))
    for (GenSet J = 0; J <= W.all_generators(); ++J) {
      const GroupElement m = max_in_interval_parabolic(w, J);
      for (const auto& z : enumerate_parabolic(W, J))
        if (bruhat_leq(z, w)) EXPECT_TRUE(bruhat_leq(z, m));
    }
}
