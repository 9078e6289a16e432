#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bruhat {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in q with big-integer coefficients, lowest degree first.
// The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> c) {
    for (long long x : c) coeffs_.emplace_back(x);
    trim();
  }
  explicit IntPolynomial(std::vector<BigInt> c) : coeffs_(std::move(c)) { trim(); }

  template <class Int>
  static IntPolynomial from_counts(const std::vector<Int>& counts) {
    std::vector<BigInt> c;
    c.reserve(counts.size());
    for (const auto& x : counts) c.emplace_back(x);
    return IntPolynomial(std::move(c));
  }

  static IntPolynomial constant(long long c) { return IntPolynomial({c}); }

  // [r]_q = 1 + q + ... + q^(r-1)
  static IntPolynomial q_integer(int r) {
    if (r < 0) throw std::invalid_argument("q_integer: negative argument");
    return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(r), BigInt(1)));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  BigInt evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
  }

  bool is_palindromic() const {
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
      if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  // Exact division over the integers; nullopt when b does not divide a.
  static std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (a.is_zero()) return IntPolynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> rem = a.coeffs_;
    std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const BigInt& lead = b.coeffs_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      BigInt top = rem[static_cast<std::size_t>(k + b.degree())];
      if (top == 0) continue;
      if (top % lead != 0) return std::nullopt;
      BigInt f = top / lead;
      quot[static_cast<std::size_t>(k)] = f;
      for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem)
      if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      BigInt c = coeffs_[i];
      if (c == 0) continue;
      if (c < 0) {
        os << "-";
        c = -c;
      } else if (!first) {
        os << "+";
      }
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "q";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

  std::vector<long long> to_int64() const {
    std::vector<long long> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(static_cast<long long>(c));
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

}  // namespace bruhat
