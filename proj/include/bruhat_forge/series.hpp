#pragma once

#include "polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bruhat {

// W(t) = (P(t) + sign * Q(t) * sqrt(1-4t)) / denominator(t), polynomials in t.
struct SeriesSpec {
  std::string name;
  IntPolynomial P, Q, denominator;
  int sqrt_sign = 1;
};

inline std::vector<BigInt> catalan_numbers(int N) {
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(N, 0)));
  if (N > 0) c[0] = 1;
  for (int n = 1; n < N; ++n)
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(n - 1 - i)];
  return c;
}

// sqrt(1-4t) = 1 - 2t Cat(t).
inline std::vector<BigInt> sqrt_one_minus_4t(int N) {
  const auto c = catalan_numbers(N);
  std::vector<BigInt> s(static_cast<std::size_t>(std::max(N, 0)));
  if (N > 0) s[0] = 1;
  for (int k = 1; k < N; ++k) s[static_cast<std::size_t>(k)] = -2 * c[static_cast<std::size_t>(k - 1)];
  return s;
}

inline std::vector<BigInt> series_coefficients(const SeriesSpec& spec, int N) {
  if (N < 1) throw std::invalid_argument("series_coefficients: N must be positive");
  const BigInt d0 = spec.denominator.coefficient(0);
  if (d0 == 0) throw std::invalid_argument("series_coefficients: denominator has zero constant term");
  const auto root = sqrt_one_minus_4t(N);
  std::vector<BigInt> num(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    BigInt acc = spec.P.coefficient(k);
    for (int j = 0; j <= k && j <= spec.Q.degree(); ++j) acc += spec.sqrt_sign * spec.Q.coefficient(j) * root[static_cast<std::size_t>(k - j)];
    num[static_cast<std::size_t>(k)] = acc;
  }
  std::vector<BigInt> a(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    BigInt acc = num[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k && j <= spec.denominator.degree(); ++j) acc -= spec.denominator.coefficient(j) * a[static_cast<std::size_t>(k - j)];
    if (acc % d0 != 0) throw std::domain_error("series_coefficients: non-integral coefficient");
    a[static_cast<std::size_t>(k)] = acc / d0;
  }
  return a;
}

namespace series_detail {

inline IntPolynomial pw(const IntPolynomial& p, int e) {
  IntPolynomial out{1};
  for (int i = 0; i < e; ++i) out *= p;
  return out;
}

inline const IntPolynomial& one_minus_t() {
  static const IntPolynomial p{1, -1};
  return p;
}

inline const IntPolynomial& cubic() {
  static const IntPolynomial p{1, -6, 8, -4};
  return p;
}

inline IntPolynomial table_denominator() { return pw(one_minus_t(), 2) * cubic(); }

}  // namespace series_detail

// Named presets: "A" (closed form for type A), "A-table", "B", "C", "D", "BC", "AffineA".
inline SeriesSpec series_spec(const std::string& name) {
  using namespace series_detail;
  const IntPolynomial omt = one_minus_t();
  if (name == "A") return {name, IntPolynomial{1, -5, 4}, IntPolynomial{0, 1}, cubic(), 1};
  if (name == "A-table") return {name, IntPolynomial{1, -4} * pw(omt, 3), IntPolynomial{0, 1} * pw(omt, 2), table_denominator(), 1};
  if (name == "B")
    return {name, IntPolynomial{1, -5, 5} * pw(omt, 3), IntPolynomial{0, 2, -1} * pw(omt, 3), table_denominator(), 1};
  if (name == "C")
    return {name, IntPolynomial{1, -7, 15, -11, -2, 5}, IntPolynomial{0, 1, -1, -1, 3, -1}, table_denominator(), 1};
  if (name == "D")
    return {name, IntPolynomial{0, -4, 19, 8, -30, 16} * pw(omt, 2), IntPolynomial{0, 4, -15, 11, 0, -2} * omt,
            table_denominator(), 1};
  if (name == "BC") return {name, IntPolynomial{1, -8, 23, -29, 14}, IntPolynomial{0, 2, -6, 7, -2}, table_denominator(), 1};
  if (name == "AffineA")
    return {name, IntPolynomial{1, -4} * IntPolynomial{2, -11, 18, -16, 10, -4},
            omt * IntPolynomial{2, -1} * IntPolynomial{1, -6, 6}, omt * IntPolynomial{1, -4} * cubic(), -1};
  throw std::invalid_argument("unknown series '" + name + "'");
}

}  // namespace bruhat
