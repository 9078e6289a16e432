#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bruhat {

// Generator subsets are bitmasks over internal generator indices 0..rank-1.
using GenSet = std::uint64_t;

inline constexpr GenSet gen_bit(int s) { return GenSet{1} << s; }
inline constexpr bool gen_has(GenSet J, int s) { return (J >> s) & 1U; }
inline int gen_count(GenSet J) { return std::popcount(J); }
inline GenSet gen_all(int rank) { return rank >= 64 ? ~GenSet{0} : gen_bit(rank) - 1; }
inline std::vector<int> gen_list(GenSet J) {
  std::vector<int> out;
  for (int s = 0; J; ++s, J >>= 1)
    if (J & 1U) out.push_back(s);
  return out;
}
inline GenSet gen_set(std::initializer_list<int> idx) {
  GenSet J = 0;
  for (int s : idx) J |= gen_bit(s);
  return J;
}

enum class Family { A, B, C, D, E, F4, G2, AffineA, FreeUniversal };

// Coxeter matrix entry for m_st = infinity.
inline constexpr int kInfinite = 0;

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::AffineA: return "AffineA";
    case Family::FreeUniversal: return "FreeUniversal";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& s) {
  static const std::map<std::string, Family> names = {
      {"A", Family::A},         {"B", Family::B},         {"C", Family::C},
      {"D", Family::D},         {"E", Family::E},         {"F4", Family::F4},
      {"F", Family::F4},        {"G2", Family::G2},       {"G", Family::G2},
      {"AffineA", Family::AffineA}, {"affine", Family::AffineA}, {"~A", Family::AffineA},
      {"FreeUniversal", Family::FreeUniversal}, {"free", Family::FreeUniversal}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

// Square integer matrix, row-major.
struct IntMatrix {
  int n = 0;
  std::vector<int> a;

  static IntMatrix identity(int n) {
    IntMatrix m{n, std::vector<int>(static_cast<std::size_t>(n * n), 0)};
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  int& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  int operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix z{x.n, std::vector<int>(x.a.size(), 0)};
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const int v = x(i, k);
        if (v == 0) continue;
        for (int j = 0; j < x.n; ++j) z(i, j) += v * y(k, j);
      }
    return z;
  }

  std::vector<int> apply(const std::vector<int>& v) const {
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return out;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n == y.n && x.a == y.a; }
};

// Sign of a root given in simple-root coordinates: +1, -1, or 0 if mixed.
inline int root_sign(const std::vector<int>& v) {
  bool pos = false, neg = false;
  for (int c : v) {
    if (c > 0) pos = true;
    if (c < 0) neg = true;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

// Integer root system in simple-root coordinates, generated from a Cartan matrix
// with a_ij = <alpha_i^vee, alpha_j>.
struct RootSystem {
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<std::vector<int>> positive_roots;
  std::vector<IntMatrix> reflections;
  std::map<std::vector<int>, int> index;

  static RootSystem from_cartan(std::vector<std::vector<int>> cartan) {
    RootSystem rs;
    rs.rank = static_cast<int>(cartan.size());
    rs.cartan = std::move(cartan);
    const int r = rs.rank;
    for (int i = 0; i < r; ++i) {
      IntMatrix m = IntMatrix::identity(r);
      for (int j = 0; j < r; ++j) m(i, j) -= rs.cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      rs.reflections.push_back(std::move(m));
    }
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < r; ++i) {
      std::vector<int> e(static_cast<std::size_t>(r), 0);
      e[static_cast<std::size_t>(i)] = 1;
      queue.push_back(e);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::vector<int> beta = queue[head];
      if (rs.index.count(beta)) continue;
      rs.index.emplace(beta, static_cast<int>(rs.positive_roots.size()));
      rs.positive_roots.push_back(beta);
      if (rs.positive_roots.size() > 4096) throw std::runtime_error("root system is not finite");
      for (int i = 0; i < r; ++i) {
        std::vector<int> img = rs.reflections[static_cast<std::size_t>(i)].apply(beta);
        if (root_sign(img) > 0 && !rs.index.count(img)) queue.push_back(std::move(img));
      }
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), [](const auto& x, const auto& y) {
      const int hx = std::accumulate(x.begin(), x.end(), 0), hy = std::accumulate(y.begin(), y.end(), 0);
      if (hx != hy) return hx < hy;
      return x > y;
    });
    rs.index.clear();
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) rs.index.emplace(rs.positive_roots[k], static_cast<int>(k));
    return rs;
  }

  int find(const std::vector<int>& beta) const {
    auto it = index.find(beta);
    return it == index.end() ? -1 : it->second;
  }
  int count() const { return static_cast<int>(positive_roots.size()); }
};

class CoxeterSystem;

// An element in canonical form with cached length. Equal elements have
// identical canonical data.
class GroupElement {
 public:
  GroupElement() = default;

  const CoxeterSystem& system() const { return *sys_; }
  const CoxeterSystem* system_ptr() const { return sys_; }
  const std::vector<int>& canonical() const { return data_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  friend bool operator==(const GroupElement& x, const GroupElement& y) {
    return x.sys_ == y.sys_ && x.data_ == y.data_;
  }
  friend bool operator!=(const GroupElement& x, const GroupElement& y) { return !(x == y); }
  friend bool operator<(const GroupElement& x, const GroupElement& y) {
    if (x.len_ != y.len_) return x.len_ < y.len_;
    return x.data_ < y.data_;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (int v : data_) {
      h ^= static_cast<std::size_t>(v + 0x9e37);
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  friend class CoxeterSystem;
  GroupElement(const CoxeterSystem* s, std::vector<int> d, int len) : sys_(s), data_(std::move(d)), len_(len) {}

  const CoxeterSystem* sys_ = nullptr;
  std::vector<int> data_;
  int len_ = 0;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& w) const { return w.hash(); }
};

class CoxeterSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  // Size of the one-line model: S_{rank+1} for A, rank for B/C/D and AffineA.
  int degree() const { return family_ == Family::A ? rank_ + 1 : rank_; }
  GenSet all_generators() const { return gen_all(rank_); }
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }
  int m(int s, int t) const { return coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }
  bool adjacent(int s, int t) const { return s != t && (m(s, t) >= 3 || m(s, t) == kInfinite); }
  GenSet neighbors(int s) const { return neighbors_[static_cast<std::size_t>(s)]; }
  const RootSystem* roots() const { return roots_ ? &*roots_ : nullptr; }
  bool is_finite() const { return family_ != Family::AffineA && family_ != Family::FreeUniversal; }
  bool word_backed() const {
    return family_ == Family::E || family_ == Family::F4 || family_ == Family::G2 ||
           family_ == Family::FreeUniversal;
  }
  std::string name() const {
    if (family_ == Family::F4 || family_ == Family::G2) return family_name(family_);
    return family_name(family_) + std::to_string(rank_);
  }

  // Display label of a generator: s0..s_{n-1} for AffineA, s1..s_rank otherwise.
  int label(int s) const { return family_ == Family::AffineA ? s : s + 1; }
  std::optional<int> index_of_label(int lab) const {
    const int s = family_ == Family::AffineA ? lab : lab - 1;
    if (s < 0 || s >= rank_) return std::nullopt;
    return s;
  }

  // W_J is finite.
  bool parabolic_finite(GenSet J) const {
    if (family_ == Family::AffineA) return J != all_generators();
    if (family_ == Family::FreeUniversal) return gen_count(J) <= 1;
    return true;
  }

  GroupElement identity() const {
    switch (family_) {
      case Family::A:
      case Family::B:
      case Family::C:
      case Family::D:
      case Family::AffineA: {
        std::vector<int> d(static_cast<std::size_t>(degree()));
        std::iota(d.begin(), d.end(), 1);
        return GroupElement(this, std::move(d), 0);
      }
      default:
        return GroupElement(this, {}, 0);
    }
  }

  GroupElement generator(int s) const { return right_mul(identity(), s); }

  GroupElement from_word(const std::vector<int>& word) const {
    if (word_backed() && family_ != Family::FreeUniversal) return normalize_word(word);
    GroupElement w = identity();
    for (int s : word) w = right_mul(w, s);
    return w;
  }

  // Builds an element from one-line, signed or window data; throws if invalid.
  GroupElement from_data(std::vector<int> d) const {
    const int n = degree();
    if (word_backed()) {
      for (int s : d) check_gen(s);
      return from_word(d);
    }
    if (static_cast<int>(d.size()) != n) throw std::invalid_argument("element data has wrong size for " + name());
    if (family_ == Family::AffineA) {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      long long sum = 0;
      for (int v : d) {
        const int r = ((v - 1) % n + n) % n;
        if (seen[static_cast<std::size_t>(r)]) throw std::invalid_argument("window residues are not distinct");
        seen[static_cast<std::size_t>(r)] = true;
        sum += v;
      }
      if (sum != static_cast<long long>(n) * (n + 1) / 2) throw std::invalid_argument("window sum must be n(n+1)/2");
      return GroupElement(this, d, compute_length(d));
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int negatives = 0;
    for (int v : d) {
      const int a = std::abs(v);
      if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)]) throw std::invalid_argument("not a (signed) permutation");
      seen[static_cast<std::size_t>(a - 1)] = true;
      if (v < 0) ++negatives;
    }
    if (family_ == Family::A && negatives) throw std::invalid_argument("type A elements have no signs");
    if (family_ == Family::D && negatives % 2) throw std::invalid_argument("type D elements have an even number of signs");
    return GroupElement(this, d, compute_length(d));
  }

  bool right_descent(const GroupElement& w, int s) const {
    check_gen(s);
    const auto& d = w.data_;
    const int n = degree();
    switch (family_) {
      case Family::A:
        return d[static_cast<std::size_t>(s)] > d[static_cast<std::size_t>(s + 1)];
      case Family::B:
      case Family::C:
        if (s < rank_ - 1) return signed_root_negative(d, s, 1, s + 1, -1);
        return d[static_cast<std::size_t>(s)] < 0;
      case Family::D:
        if (s < rank_ - 1) return signed_root_negative(d, s, 1, s + 1, -1);
        return signed_root_negative(d, rank_ - 2, 1, rank_ - 1, 1);
      case Family::AffineA:
        if (s == 0) return d[static_cast<std::size_t>(n - 1)] - n > d[0];
        return d[static_cast<std::size_t>(s - 1)] > d[static_cast<std::size_t>(s)];
      case Family::FreeUniversal:
        return !d.empty() && d.back() == s;
      default: {
        const IntMatrix M = action_matrix(w);
        std::vector<int> col(static_cast<std::size_t>(rank_));
        for (int i = 0; i < rank_; ++i) col[static_cast<std::size_t>(i)] = M(i, s);
        return root_sign(col) < 0;
      }
    }
  }

  bool left_descent(const GroupElement& w, int s) const {
    check_gen(s);
    switch (family_) {
      case Family::A: {
        const auto& d = w.data_;
        int pa = -1, pb = -1;
        for (int i = 0; i < static_cast<int>(d.size()); ++i) {
          if (d[static_cast<std::size_t>(i)] == s + 1) pa = i;
          if (d[static_cast<std::size_t>(i)] == s + 2) pb = i;
        }
        return pa > pb;
      }
      case Family::FreeUniversal:
        return !w.data_.empty() && w.data_.front() == s;
      case Family::E:
      case Family::F4:
      case Family::G2:
        return !w.data_.empty() && first_letter_descent(w, s);
      default:
        return right_descent(inverse(w), s);
    }
  }

  GroupElement right_mul(const GroupElement& w, int s) const {
    check_gen(s);
    if (word_backed() && family_ != Family::FreeUniversal) {
      std::vector<int> word = w.data_;
      word.push_back(s);
      return normalize_word(word);
    }
    const bool down = right_descent(w, s);
    std::vector<int> d = w.data_;
    const int n = degree();
    switch (family_) {
      case Family::A:
        std::swap(d[static_cast<std::size_t>(s)], d[static_cast<std::size_t>(s + 1)]);
        break;
      case Family::B:
      case Family::C:
        if (s < rank_ - 1) std::swap(d[static_cast<std::size_t>(s)], d[static_cast<std::size_t>(s + 1)]);
        else d[static_cast<std::size_t>(s)] = -d[static_cast<std::size_t>(s)];
        break;
      case Family::D:
        if (s < rank_ - 1) {
          std::swap(d[static_cast<std::size_t>(s)], d[static_cast<std::size_t>(s + 1)]);
        } else {
          const int a = d[static_cast<std::size_t>(rank_ - 2)], b = d[static_cast<std::size_t>(rank_ - 1)];
          d[static_cast<std::size_t>(rank_ - 2)] = -b;
          d[static_cast<std::size_t>(rank_ - 1)] = -a;
        }
        break;
      case Family::AffineA:
        if (s == 0) {
          const int first = d[0], last = d[static_cast<std::size_t>(n - 1)];
          d[0] = last - n;
          d[static_cast<std::size_t>(n - 1)] = first + n;
        } else {
          std::swap(d[static_cast<std::size_t>(s - 1)], d[static_cast<std::size_t>(s)]);
        }
        break;
      case Family::FreeUniversal:
        if (down) d.pop_back();
        else d.push_back(s);
        break;
      default:
        break;
    }
    return GroupElement(this, std::move(d), w.len_ + (down ? -1 : 1));
  }

  GroupElement left_mul(int s, const GroupElement& w) const {
    check_gen(s);
    switch (family_) {
      case Family::A: {
        std::vector<int> d = w.data_;
        for (int& v : d) {
          if (v == s + 1) v = s + 2;
          else if (v == s + 2) v = s + 1;
        }
        const bool down = left_descent(w, s);
        return GroupElement(this, std::move(d), w.len_ + (down ? -1 : 1));
      }
      case Family::FreeUniversal: {
        std::vector<int> d = w.data_;
        if (!d.empty() && d.front() == s) d.erase(d.begin());
        else d.insert(d.begin(), s);
        const int len = static_cast<int>(d.size());
        return GroupElement(this, std::move(d), len);
      }
      case Family::E:
      case Family::F4:
      case Family::G2: {
        std::vector<int> d;
        d.reserve(w.data_.size() + 1);
        d.push_back(s);
        d.insert(d.end(), w.data_.begin(), w.data_.end());
        return normalize_word(d);
      }
      default:
        return inverse(right_mul(inverse(w), s));
    }
  }

  GroupElement inverse(const GroupElement& w) const {
    const auto& d = w.data_;
    const int n = degree();
    switch (family_) {
      case Family::A: {
        std::vector<int> r(d.size());
        for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(d[static_cast<std::size_t>(i)] - 1)] = i + 1;
        return GroupElement(this, std::move(r), w.len_);
      }
      case Family::B:
      case Family::C:
      case Family::D: {
        std::vector<int> r(d.size());
        for (int i = 0; i < n; ++i) {
          const int v = d[static_cast<std::size_t>(i)];
          r[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i + 1 : -(i + 1);
        }
        return GroupElement(this, std::move(r), w.len_);
      }
      case Family::AffineA: {
        std::vector<int> r(d.size());
        for (int i = 0; i < n; ++i) {
          const int v = d[static_cast<std::size_t>(i)];
          const int res = ((v - 1) % n + n) % n;  // 0-based residue
          const int shift = (v - 1 - res) / n;
          r[static_cast<std::size_t>(res)] = (i + 1) - shift * n;
        }
        return GroupElement(this, std::move(r), w.len_);
      }
      case Family::FreeUniversal: {
        std::vector<int> r(d.rbegin(), d.rend());
        return GroupElement(this, std::move(r), w.len_);
      }
      default:
        return normalize_word(std::vector<int>(d.rbegin(), d.rend()));
    }
  }

  GroupElement multiply(const GroupElement& x, const GroupElement& y) const {
    if (x.sys_ != this || y.sys_ != this) throw std::invalid_argument("multiply: elements from different systems");
    const auto& a = x.data_;
    const auto& b = y.data_;
    const int n = degree();
    switch (family_) {
      case Family::A: {
        std::vector<int> z(b.size());
        for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)] - 1)];
        const int len = compute_length(z);
        return GroupElement(this, std::move(z), len);
      }
      case Family::B:
      case Family::C:
      case Family::D: {
        std::vector<int> z(b.size());
        for (int i = 0; i < n; ++i) {
          const int v = b[static_cast<std::size_t>(i)];
          const int img = a[static_cast<std::size_t>(std::abs(v) - 1)];
          z[static_cast<std::size_t>(i)] = v > 0 ? img : -img;
        }
        const int len = compute_length(z);
        return GroupElement(this, std::move(z), len);
      }
      case Family::AffineA: {
        std::vector<int> z(b.size());
        for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = affine_value(a, b[static_cast<std::size_t>(i)]);
        const int len = compute_length(z);
        return GroupElement(this, std::move(z), len);
      }
      case Family::FreeUniversal: {
        GroupElement w = x;
        for (int s : b) w = right_mul(w, s);
        return w;
      }
      default: {
        std::vector<int> word = a;
        word.insert(word.end(), b.begin(), b.end());
        return normalize_word(word);
      }
    }
  }

  // ShortLex-minimal reduced word (smallest left descent first).
  std::vector<int> reduced_word(const GroupElement& w) const {
    if (word_backed()) return w.data_;
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(w.len_));
    GroupElement cur = w;
    while (cur.len_ > 0) {
      int s = 0;
      while (!left_descent(cur, s)) ++s;
      word.push_back(s);
      cur = left_mul(s, cur);
    }
    return word;
  }

  // Linear action of w on simple-root coordinates.
  IntMatrix action_matrix(const GroupElement& w) const {
    if (!roots_) throw std::logic_error(name() + " has no root backend");
    IntMatrix M = IntMatrix::identity(rank_);
    for (int s : reduced_word(w)) M = M * roots_->reflections[static_cast<std::size_t>(s)];
    return M;
  }

  // Value w(i) of an affine permutation at any integer i.
  static int affine_value(const std::vector<int>& window, int i) {
    const int n = static_cast<int>(window.size());
    const int r = ((i - 1) % n + n) % n;
    const int shift = (i - 1 - r) / n;
    return window[static_cast<std::size_t>(r)] + shift * n;
  }

  int compute_length(const std::vector<int>& d) const {
    const int n = static_cast<int>(d.size());
    int len = 0;
    switch (family_) {
      case Family::A:
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            if (d[static_cast<std::size_t>(i)] > d[static_cast<std::size_t>(j)]) ++len;
        return len;
      case Family::B:
      case Family::C:
      case Family::D:
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (signed_root_negative(d, i, 1, j, -1)) ++len;
            if (signed_root_negative(d, i, 1, j, 1)) ++len;
          }
          if (family_ != Family::D && d[static_cast<std::size_t>(i)] < 0) ++len;
        }
        return len;
      case Family::AffineA:
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            const int diff = d[static_cast<std::size_t>(j)] - d[static_cast<std::size_t>(i)];
            const int q = diff >= 0 ? diff / n : -((-diff + n - 1) / n);
            len += std::abs(q);
          }
        return len;
      default:
        return n;
    }
  }

  void check_gen(int s) const {
    if (s < 0 || s >= rank_) throw std::out_of_range("generator index out of range for " + name());
  }

 private:
  friend const CoxeterSystem& build_system(Family, int);

  CoxeterSystem(Family f, int rank) : family_(f), rank_(rank) {
    validate_rank();
    if (family_ == Family::AffineA || family_ == Family::FreeUniversal) {
      coxeter_.assign(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(rank_), 2));
      for (int s = 0; s < rank_; ++s) {
        coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] = 1;
        for (int t = 0; t < rank_; ++t) {
          if (s == t) continue;
          if (family_ == Family::FreeUniversal) {
            coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = kInfinite;
          } else {
            const bool cyc = (t == (s + 1) % rank_) || (s == (t + 1) % rank_);
            if (cyc) coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = rank_ == 2 ? kInfinite : 3;
          }
        }
      }
    } else {
      roots_ = RootSystem::from_cartan(cartan_matrix());
      coxeter_.assign(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(rank_), 2));
      const auto& A = roots_->cartan;
      for (int s = 0; s < rank_; ++s)
        for (int t = 0; t < rank_; ++t) {
          if (s == t) {
            coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = 1;
            continue;
          }
          const int p = A[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] * A[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
          static const int table[] = {2, 3, 4, 6};
          coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = table[p];
        }
    }
    neighbors_.assign(static_cast<std::size_t>(rank_), 0);
    for (int s = 0; s < rank_; ++s)
      for (int t = 0; t < rank_; ++t)
        if (adjacent(s, t)) neighbors_[static_cast<std::size_t>(s)] |= gen_bit(t);
  }

  void validate_rank() const {
    auto bad = [&] { throw std::invalid_argument("invalid rank " + std::to_string(rank_) + " for family " + family_name(family_)); };
    if (rank_ < 1 || rank_ > 60) bad();
    switch (family_) {
      case Family::D: if (rank_ < 3) bad(); break;
      case Family::E: if (rank_ < 6 || rank_ > 8) bad(); break;
      case Family::F4: if (rank_ != 4) bad(); break;
      case Family::G2: if (rank_ != 2) bad(); break;
      case Family::AffineA: if (rank_ < 2) bad(); break;
      default: break;
    }
  }

  std::vector<std::vector<int>> cartan_matrix() const {
    const int r = rank_;
    std::vector<std::vector<int>> A(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    auto link = [&](int i, int j, int aij, int aji) {
      A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
      A[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
    };
    for (int i = 0; i < r; ++i) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    switch (family_) {
      case Family::A:
        for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1, -1);
        break;
      case Family::B:
        for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
        if (r >= 2) link(r - 2, r - 1, -1, -2);
        break;
      case Family::C:
        for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
        if (r >= 2) link(r - 2, r - 1, -2, -1);
        break;
      case Family::D:
        for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
        link(r - 3, r - 1, -1, -1);
        break;
      case Family::E:
        // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4.
        link(0, 2, -1, -1);
        link(1, 3, -1, -1);
        for (int i = 2; i + 1 < r; ++i) link(i, i + 1, -1, -1);
        break;
      case Family::F4:
        link(0, 1, -1, -1);
        link(1, 2, -1, -2);
        link(2, 3, -1, -1);
        break;
      case Family::G2:
        link(0, 1, -1, -3);
        break;
      default:
        break;
    }
    return A;
  }

  // Whether w(sign_i e_i + sign_j e_j) is a negative root, for a signed permutation w.
  static bool signed_root_negative(const std::vector<int>& d, int i, int sign_i, int j, int sign_j) {
    const int wi = d[static_cast<std::size_t>(i)], wj = d[static_cast<std::size_t>(j)];
    const int a = std::abs(wi), b = std::abs(wj);
    const int ea = (wi > 0 ? 1 : -1) * sign_i;
    const int eb = (wj > 0 ? 1 : -1) * sign_j;
    return (a < b ? ea : eb) < 0;
  }

  // Word-backed root families: normal form via the root action.
  GroupElement normalize_word(const std::vector<int>& word) const {
    const int r = rank_;
    IntMatrix inv = IntMatrix::identity(r);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      check_gen(*it);
      inv = inv * roots_->reflections[static_cast<std::size_t>(*it)];
    }
    // inv is the matrix of w^{-1}; its column s is w^{-1}(alpha_s).
    std::vector<int> out;
    std::vector<int> col(static_cast<std::size_t>(r));
    for (;;) {
      int found = -1;
      for (int s = 0; s < r && found < 0; ++s) {
        for (int i = 0; i < r; ++i) col[static_cast<std::size_t>(i)] = inv(i, s);
        if (root_sign(col) < 0) found = s;
      }
      if (found < 0) break;
      out.push_back(found);
      inv = inv * roots_->reflections[static_cast<std::size_t>(found)];
    }
    const int len = static_cast<int>(out.size());
    return GroupElement(this, std::move(out), len);
  }

  bool first_letter_descent(const GroupElement& w, int s) const {
    if (w.data_.front() == s) return true;
    return left_mul_len(s, w) < w.len_;
  }

  int left_mul_len(int s, const GroupElement& w) const {
    std::vector<int> d;
    d.push_back(s);
    d.insert(d.end(), w.data_.begin(), w.data_.end());
    return normalize_word(d).len_;
  }

  Family family_;
  int rank_;
  std::vector<std::vector<int>> coxeter_;
  std::vector<GenSet> neighbors_;
  std::optional<RootSystem> roots_;
};

// Systems are immutable and interned for the lifetime of the program, so
// elements can hold plain pointers to them.
inline const CoxeterSystem& build_system(Family family, int rank) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::unique_ptr<CoxeterSystem>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(family, rank);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  std::unique_ptr<CoxeterSystem> sys(new CoxeterSystem(family, rank));
  const CoxeterSystem& ref = *sys;
  registry.emplace(key, std::move(sys));
  return ref;
}

// Free-function surface.

inline GroupElement multiply(const GroupElement& x, const GroupElement& y) { return x.system().multiply(x, y); }
inline GroupElement inverse(const GroupElement& w) { return w.system().inverse(w); }
inline GroupElement right_mul(const GroupElement& w, int s) { return w.system().right_mul(w, s); }
inline GroupElement left_mul(int s, const GroupElement& w) { return w.system().left_mul(s, w); }
inline std::vector<int> reduced_word(const GroupElement& w) { return w.system().reduced_word(w); }

enum class Side { Left, Right };

inline GenSet descents(const GroupElement& w, Side side) {
  const CoxeterSystem& W = w.system();
  GenSet out = 0;
  for (int s = 0; s < W.rank(); ++s)
    if (side == Side::Left ? W.left_descent(w, s) : W.right_descent(w, s)) out |= gen_bit(s);
  return out;
}

inline GenSet support(const GroupElement& w) {
  const CoxeterSystem& W = w.system();
  if (W.family() == Family::A) {
    // s_i is in the support iff w does not fix {1..i} setwise.
    GenSet out = 0;
    int mx = 0;
    const auto& d = w.canonical();
    for (int i = 0; i + 1 < static_cast<int>(d.size()); ++i) {
      mx = std::max(mx, d[static_cast<std::size_t>(i)]);
      if (mx != i + 1) out |= gen_bit(i);
    }
    return out;
  }
  GenSet out = 0;
  for (int s : W.reduced_word(w)) out |= gen_bit(s);
  return out;
}

inline bool in_parabolic(const GroupElement& w, GenSet J) { return (support(w) & ~J) == 0; }

// v lies in W^J: no right descent in J.
inline bool is_min_coset_rep(const GroupElement& v, GenSet J) { return (descents(v, Side::Right) & J) == 0; }

}  // namespace bruhat

template <>
struct std::hash<bruhat::GroupElement> {
  std::size_t operator()(const bruhat::GroupElement& w) const { return w.hash(); }
};
