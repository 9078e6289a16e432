#pragma once

#include "bruhat.hpp"
#include "coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bruhat {

// One-line notation w(1) ... w(n) with values in 1..n.
using Permutation = std::vector<int>;

struct Pattern {
  Permutation perm;
};

struct SplitPattern {
  Permutation perm;
  int split_at = 0;  // entries [0, split_at) lie left of the split
};

inline bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

inline Permutation parse_permutation(const std::string& text) {
  Permutation p;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = text.find(',', start);
      p.push_back(std::stoi(text.substr(start, end - start)));
      if (end == std::string::npos) break;
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad permutation '" + text + "'");
      p.push_back(c - '0');
    }
  }
  if (!is_permutation(p)) throw std::invalid_argument("not a permutation: '" + text + "'");
  return p;
}

inline Pattern parse_pattern(const std::string& text) { return {parse_permutation(text)}; }

inline SplitPattern parse_split_pattern(const std::string& text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("split pattern needs '|'");
  std::string joined = text.substr(0, bar) + text.substr(bar + 1);
  SplitPattern sp{parse_permutation(joined), static_cast<int>(bar)};
  if (sp.split_at < 1 || sp.split_at >= static_cast<int>(sp.perm.size())) throw std::invalid_argument("split must be interior");
  return sp;
}

inline std::string permutation_string(const Permutation& p) {
  std::string out;
  const bool compact = p.size() <= 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!compact && i) out += ",";
    out += std::to_string(p[i]);
  }
  return out;
}

inline Permutation permutation_of(const GroupElement& w) {
  if (w.system().family() != Family::A) throw std::invalid_argument("permutation_of: type A element expected");
  return w.canonical();
}

inline GroupElement element_of(const Permutation& p) {
  if (p.size() < 2) throw std::invalid_argument("element_of: need at least two letters");
  return build_system(Family::A, static_cast<int>(p.size()) - 1).from_data(p);
}

namespace detail {

// Pattern occurrence search over positions [lo(k), hi(k)] with relative-order pruning.
template <class ValueAt>
bool pattern_search(const Permutation& p, const ValueAt& value_at, std::vector<int>& chosen, std::vector<int>& vals,
                    const std::vector<int>& lo, const std::vector<int>& hi) {
  const std::size_t k = chosen.size();
  if (k == p.size()) return true;
  const int start = std::max(lo[k], k ? chosen.back() + 1 : lo[k]);
  for (int i = start; i <= hi[k]; ++i) {
    const int v = value_at(i);
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) ok = (vals[a] < v) == (p[a] < p[k]);
    if (!ok) continue;
    chosen.push_back(i);
    vals.push_back(v);
    if (pattern_search(p, value_at, chosen, vals, lo, hi)) return true;
    chosen.pop_back();
    vals.pop_back();
  }
  return false;
}

}  // namespace detail

inline bool contains_pattern(const Permutation& w, const Pattern& p) {
  const int n = static_cast<int>(w.size()), k = static_cast<int>(p.perm.size());
  if (k > n) return false;
  if (k == 0) return true;
  std::vector<int> lo(static_cast<std::size_t>(k)), hi(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    lo[static_cast<std::size_t>(a)] = a;
    hi[static_cast<std::size_t>(a)] = n - k + a;
  }
  std::vector<int> chosen, vals;
  auto at = [&](int i) { return w[static_cast<std::size_t>(i)]; };
  return detail::pattern_search(p.perm, at, chosen, vals, lo, hi);
}

// Occurrence i_1 < ... < i_k with i_j <= r < i_{j+1}, where j is the split (1-based r).
inline bool contains_split_pattern(const Permutation& w, const SplitPattern& p, int r) {
  const int n = static_cast<int>(w.size()), k = static_cast<int>(p.perm.size());
  if (k > n) return false;
  if (r < 1 || r >= n) throw std::out_of_range("split position out of range");
  std::vector<int> lo(static_cast<std::size_t>(k)), hi(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) {
    const bool left = a < p.split_at;
    lo[static_cast<std::size_t>(a)] = left ? 0 : r;
    hi[static_cast<std::size_t>(a)] = left ? r - 1 : n - 1;
  }
  std::vector<int> chosen, vals;
  auto at = [&](int i) { return w[static_cast<std::size_t>(i)]; };
  return detail::pattern_search(p.perm, at, chosen, vals, lo, hi);
}

inline bool avoids_all(const Permutation& w, std::initializer_list<const char*> pats) {
  for (const char* s : pats)
    if (contains_pattern(w, parse_pattern(s))) return false;
  return true;
}

// w avoids 3|12 and 23|1 at position r.
inline bool grassmannian_bp_at_r(const Permutation& w, int r) {
  static const SplitPattern a = parse_split_pattern("3|12");
  static const SplitPattern b = parse_split_pattern("23|1");
  if (r < 1 || r >= static_cast<int>(w.size())) throw std::out_of_range("split position out of range");
  return !contains_split_pattern(w, a, r) && !contains_split_pattern(w, b, r);
}

struct ClassFlags {
  bool smooth = false;
  bool complete_bp = false;
  bool divisor = false;
  bool polished = false;
};

inline ClassFlags classify(const Permutation& w) {
  ClassFlags f;
  f.smooth = avoids_all(w, {"3412", "4231"});
  f.complete_bp = avoids_all(w, {"3412", "52341", "635241"});
  f.divisor = avoids_all(w, {"3412", "52341", "52431", "53241"});
  f.polished = f.smooth && avoids_all(w, {"34521", "45321", "54123", "54312"});
  return f;
}

// Removes the entry at position i (1-based) and standardizes the rest.
inline Permutation flatten(const Permutation& w, int i) {
  const int n = static_cast<int>(w.size());
  if (n < 2 || i < 1 || i > n) throw std::out_of_range("flatten: position out of range");
  const int removed = w[static_cast<std::size_t>(i - 1)];
  Permutation out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n; ++j) {
    if (j == i - 1) continue;
    const int v = w[static_cast<std::size_t>(j)];
    out.push_back(v > removed ? v - 1 : v);
  }
  return out;
}

inline Permutation permutation_inverse(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) inv[static_cast<std::size_t>(w[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

struct GasharovStep {
  int which = 1;  // 1: w(d) > ... > w(n); 2: w^{-1}(e) > ... > w^{-1}(n)
  Permutation u;
  int m = 0;
};

// With d = w^{-1}(n) and e = w(n); P_w = [m+1]_q P_u when w is smooth.
inline std::optional<GasharovStep> gasharov_step(const Permutation& w) {
  const int n = static_cast<int>(w.size());
  if (n < 2) return std::nullopt;
  const Permutation inv = permutation_inverse(w);
  const int d = inv[static_cast<std::size_t>(n - 1)];
  const int e = w[static_cast<std::size_t>(n - 1)];
  bool dec = true;
  for (int j = d; j < n && dec; ++j) dec = w[static_cast<std::size_t>(j - 1)] > w[static_cast<std::size_t>(j)];
  if (dec) return GasharovStep{1, flatten(w, d), n - d};
  dec = true;
  for (int j = e; j < n && dec; ++j) dec = inv[static_cast<std::size_t>(j - 1)] > inv[static_cast<std::size_t>(j)];
  if (dec) return GasharovStep{2, flatten(w, n), n - e};
  return std::nullopt;
}

// Affine permutation given by its window w(1..n), extended by w(i+n) = w(i)+n.
struct AffinePermutation {
  std::vector<int> window;

  int n() const { return static_cast<int>(window.size()); }
  int operator()(int i) const { return CoxeterSystem::affine_value(window, i); }
};

inline AffinePermutation affine_of(const GroupElement& w) {
  if (w.system().family() != Family::AffineA) throw std::invalid_argument("affine_of: affine element expected");
  return {w.canonical()};
}

// Occurrences with i_1 in [1,n] and i_k - i_1 <= horizon * n.
inline bool affine_contains_pattern(const AffinePermutation& w, const Pattern& p, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  const int n = w.n(), k = static_cast<int>(p.perm.size());
  if (k == 0) return true;
  for (int i1 = 1; i1 <= n; ++i1) {
    std::vector<int> lo(static_cast<std::size_t>(k), i1 + 1), hi(static_cast<std::size_t>(k), i1 + horizon * n);
    lo[0] = hi[0] = i1;
    std::vector<int> chosen, vals;
    if (detail::pattern_search(p.perm, w, chosen, vals, lo, hi)) return true;
  }
  return false;
}

// Avoidance of 3412 and 4231; horizon 0 selects the pattern length.
inline bool affine_is_smooth(const AffinePermutation& w, int horizon = 0) {
  static const Pattern a = parse_pattern("3412");
  static const Pattern b = parse_pattern("4231");
  return !affine_contains_pattern(w, a, horizon > 0 ? horizon : 4) && !affine_contains_pattern(w, b, horizon > 0 ? horizon : 4);
}

// Searches for a rank-reversing bijection sending covers to reversed covers.
inline bool interval_is_self_dual(const Interval& I) {
  const int N = static_cast<int>(I.size());
  const int top_rank = I.top.length();
  std::vector<std::vector<int>> up(static_cast<std::size_t>(N)), down(static_cast<std::size_t>(N));
  for (auto [a, b] : I.covers) {
    up[static_cast<std::size_t>(a)].push_back(b);
    down[static_cast<std::size_t>(b)].push_back(a);
  }
  auto rank = [&](int x) { return I.elements[static_cast<std::size_t>(x)].length(); };
  // Visit order: BFS from the top so each new element has a mapped neighbour.
  std::vector<int> order;
  std::vector<bool> queued(static_cast<std::size_t>(N), false);
  const int top = N - 1;
  order.push_back(top);
  queued[static_cast<std::size_t>(top)] = true;
  for (std::size_t h = 0; h < order.size(); ++h) {
    const int x = order[h];
    for (const auto* nb : {&down[static_cast<std::size_t>(x)], &up[static_cast<std::size_t>(x)]})
      for (int y : *nb)
        if (!queued[static_cast<std::size_t>(y)]) {
          queued[static_cast<std::size_t>(y)] = true;
          order.push_back(y);
        }
  }
  std::vector<int> phi(static_cast<std::size_t>(N), -1), used(static_cast<std::size_t>(N), 0);
  auto consistent = [&](int x, int img) {
    if (rank(img) != top_rank - rank(x)) return false;
    if (up[static_cast<std::size_t>(x)].size() != down[static_cast<std::size_t>(img)].size()) return false;
    if (down[static_cast<std::size_t>(x)].size() != up[static_cast<std::size_t>(img)].size()) return false;
    for (int y : up[static_cast<std::size_t>(x)]) {
      const int py = phi[static_cast<std::size_t>(y)];
      if (py >= 0 && std::find(down[static_cast<std::size_t>(img)].begin(), down[static_cast<std::size_t>(img)].end(), py) == down[static_cast<std::size_t>(img)].end()) return false;
    }
    for (int y : down[static_cast<std::size_t>(x)]) {
      const int py = phi[static_cast<std::size_t>(y)];
      if (py >= 0 && std::find(up[static_cast<std::size_t>(img)].begin(), up[static_cast<std::size_t>(img)].end(), py) == up[static_cast<std::size_t>(img)].end()) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
    if (pos == order.size()) return true;
    const int x = order[pos];
    std::vector<int> cands;
    if (pos == 0) {
      cands.push_back(0);
    } else {
      // A mapped neighbour constrains the image to its reversed covers.
      for (int y : up[static_cast<std::size_t>(x)])
        if (phi[static_cast<std::size_t>(y)] >= 0) {
          cands = up[static_cast<std::size_t>(phi[static_cast<std::size_t>(y)])];
          break;
        }
      if (cands.empty())
        for (int y : down[static_cast<std::size_t>(x)])
          if (phi[static_cast<std::size_t>(y)] >= 0) {
            cands = down[static_cast<std::size_t>(phi[static_cast<std::size_t>(y)])];
            break;
          }
    }
    for (int img : cands) {
      if (used[static_cast<std::size_t>(img)] || !consistent(x, img)) continue;
      phi[static_cast<std::size_t>(x)] = img;
      used[static_cast<std::size_t>(img)] = 1;
      if (go(pos + 1)) return true;
      phi[static_cast<std::size_t>(x)] = -1;
      used[static_cast<std::size_t>(img)] = 0;
    }
    return false;
  };
  return go(0);
}

}  // namespace bruhat
