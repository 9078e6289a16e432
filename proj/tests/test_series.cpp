#include "bruhat_forge/bruhat.hpp"
#include "bruhat_forge/series.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bruhat;

namespace {

std::size_t palindromic_elements(const CoxeterSystem& W) {
  std::size_t k = 0;
  for (const auto& w : enumerate_group(W)) k += poincare(w).is_palindromic();
  return k;
}

}  // namespace

TEST(Series, CatalanNumbers) {
  const auto c = catalan_numbers(11);
  const std::vector<int> want{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(c[i], want[i]);
  EXPECT_TRUE(catalan_numbers(0).empty());
}

TEST(Series, SquareRootSquares) {
  const int N = 25;
  const auto s = sqrt_one_minus_4t(N);
  for (int k = 0; k < N; ++k) {
    BigInt acc = 0;
    for (int j = 0; j <= k; ++j) acc += s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(k - j)];
    EXPECT_EQ(acc, k == 0 ? BigInt(1) : k == 1 ? BigInt(-4) : BigInt(0)) << k;
  }
}

TEST(Series, TypeAAgainstSmoothPermutations) {
  const auto a = series_coefficients(series_spec("A"), 8);
  EXPECT_EQ(a[0], 1);
  for (int n = 1; n <= 6; ++n) {
    std::size_t smooth = 0;
    for (const auto& p : oracle::all_perms(n + 1)) smooth += oracle::smooth(p);
    EXPECT_EQ(a[static_cast<std::size_t>(n)], BigInt(smooth)) << n;
  }
  EXPECT_EQ(series_coefficients(series_spec("A"), 30), series_coefficients(series_spec("A-table"), 30));
}

TEST(Series, TypeBCAndDAgainstPalindromicElements) {
  const auto bc = series_coefficients(series_spec("BC"), 6);
  EXPECT_EQ(bc[2], BigInt(palindromic_elements(build_system(Family::B, 2))));
  EXPECT_EQ(bc[3], BigInt(palindromic_elements(build_system(Family::B, 3))));
  const auto d = series_coefficients(series_spec("D"), 6);
  EXPECT_EQ(d[4], BigInt(palindromic_elements(build_system(Family::D, 4))));
}

TEST(Series, FrozenValues) {
  EXPECT_EQ(series_coefficients(series_spec("A"), 7), (std::vector<BigInt>{1, 2, 6, 22, 88, 366, 1552}));
  const auto aff = series_coefficients(series_spec("AffineA"), 4);
  EXPECT_EQ(aff[3], 31);
}

TEST(Series, CoefficientsNonNegative) {
  for (const char* name : {"A", "A-table", "B", "C", "D", "BC", "AffineA"}) {
    const auto c = series_coefficients(series_spec(name), 30);
    for (std::size_t k = 0; k < c.size(); ++k) EXPECT_GE(c[k], 0) << name << " t^" << k;
  }
}

TEST(Series, Errors) {
  EXPECT_THROW(series_spec("Q"), std::invalid_argument);
  EXPECT_THROW(series_coefficients(series_spec("A"), 0), std::invalid_argument);
  SeriesSpec bad{"bad", IntPolynomial{1}, IntPolynomial{}, IntPolynomial{0, 1}, 1};
  EXPECT_THROW(series_coefficients(bad, 4), std::invalid_argument);
  SeriesSpec frac{"frac", IntPolynomial{1}, IntPolynomial{}, IntPolynomial{2}, 1};
  EXPECT_THROW(series_coefficients(frac, 4), std::domain_error);
}
