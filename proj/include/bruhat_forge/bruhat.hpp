#pragma once

#include "coxeter.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace bruhat {

using ElementSet = std::unordered_set<GroupElement, ElementHash>;

inline bool bruhat_leq(GroupElement u, GroupElement w) {
  if (u.system_ptr() != w.system_ptr()) throw std::invalid_argument("bruhat_leq: elements from different systems");
  const CoxeterSystem& W = w.system();
  for (;;) {
    if (u.length() > w.length()) return false;
    if (u.is_identity()) return true;
    if (u.length() == w.length()) return u == w;
    int s = 0;
    while (!W.left_descent(w, s)) ++s;
    if (W.left_descent(u, s)) u = W.left_mul(s, u);
    w = W.left_mul(s, w);
  }
}

// All elements expressible as reduced subwords of one fixed reduced word of w.
inline ElementSet subword_lower_set(const GroupElement& w) {
  const CoxeterSystem& W = w.system();
  const std::vector<int> word = W.reduced_word(w);
  ElementSet out;
  struct Frame {
    std::size_t pos;
    GroupElement cur;
  };
  std::vector<Frame> stack{{0, W.identity()}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.pos == word.size()) {
      out.insert(std::move(f.cur));
      continue;
    }
    const int s = word[f.pos];
    if (!W.right_descent(f.cur, s)) stack.push_back({f.pos + 1, W.right_mul(f.cur, s)});
    stack.push_back({f.pos + 1, std::move(f.cur)});
  }
  return out;
}

inline bool bruhat_leq_subword(const GroupElement& u, const GroupElement& w) { return subword_lower_set(w).count(u) > 0; }

// Elements covered by w in Bruhat order.
inline std::vector<GroupElement> lower_covers(const GroupElement& w) {
  const CoxeterSystem& W = w.system();
  std::vector<GroupElement> out;
  if (w.is_identity()) return out;
  if (W.family() == Family::A) {
    const auto& d = w.canonical();
    const int n = static_cast<int>(d.size());
    for (int i = 0; i < n; ++i) {
      int best = 0;  // largest value below d[i] seen strictly between i and j
      for (int j = i + 1; j < n; ++j) {
        const int v = d[static_cast<std::size_t>(j)];
        if (v < d[static_cast<std::size_t>(i)] && v > best) {
          std::vector<int> z = d;
          std::swap(z[static_cast<std::size_t>(i)], z[static_cast<std::size_t>(j)]);
          out.push_back(W.from_data(std::move(z)));
          best = v;
        }
      }
    }
    return out;
  }
  const std::vector<int> word = W.reduced_word(w);
  const std::size_t k = word.size();
  std::vector<GroupElement> prefix{W.identity()};
  for (std::size_t i = 0; i < k; ++i) prefix.push_back(W.right_mul(prefix.back(), word[i]));
  std::vector<GroupElement> suffix(k + 1);
  suffix[k] = W.identity();
  for (std::size_t i = k; i-- > 0;) suffix[i] = W.left_mul(word[i], suffix[i + 1]);
  ElementSet seen;
  for (std::size_t i = 0; i < k; ++i) {
    GroupElement z = W.multiply(prefix[i], suffix[i + 1]);
    if (z.length() + 1 == w.length() && seen.insert(z).second) out.push_back(std::move(z));
  }
  return out;
}

// Lower Bruhat interval [e,w] with cover edges, elements sorted by length.
struct Interval {
  GroupElement top;
  std::vector<GroupElement> elements;
  std::unordered_map<GroupElement, int, ElementHash> index;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) element indices

  std::size_t size() const { return elements.size(); }
  bool contains(const GroupElement& z) const { return index.count(z) > 0; }
  std::vector<long long> rank_sizes() const {
    std::vector<long long> r(static_cast<std::size_t>(top.length() + 1), 0);
    for (const auto& z : elements) ++r[static_cast<std::size_t>(z.length())];
    return r;
  }
};

inline Interval lower_interval(const GroupElement& w, bool with_covers = true) {
  std::unordered_map<GroupElement, int, ElementHash> idx;
  std::vector<GroupElement> elems{w};
  std::vector<std::pair<int, int>> edges;
  idx.emplace(w, 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const GroupElement cur = elems[head];
    for (auto& z : lower_covers(cur)) {
      auto [it, fresh] = idx.emplace(z, static_cast<int>(elems.size()));
      if (fresh) elems.push_back(std::move(z));
      if (with_covers) edges.emplace_back(it->second, static_cast<int>(head));
    }
  }
  std::vector<int> order(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return elems[static_cast<std::size_t>(a)] < elems[static_cast<std::size_t>(b)]; });
  std::vector<int> pos(elems.size());
  Interval I;
  I.top = w;
  I.elements.reserve(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    I.elements.push_back(elems[static_cast<std::size_t>(order[i])]);
  }
  for (std::size_t i = 0; i < I.elements.size(); ++i) I.index.emplace(I.elements[i], static_cast<int>(i));
  for (auto [a, b] : edges) I.covers.emplace_back(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
  std::sort(I.covers.begin(), I.covers.end());
  return I;
}

// Rank sizes of [e,w] without materialising cover edges.
inline std::vector<long long> lower_interval_ranks(const GroupElement& w) {
  ElementSet seen{w};
  std::vector<GroupElement> frontier{w};
  std::vector<long long> r(static_cast<std::size_t>(w.length() + 1), 0);
  r[static_cast<std::size_t>(w.length())] = 1;
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& cur : frontier)
      for (auto& z : lower_covers(cur))
        if (seen.insert(z).second) {
          ++r[static_cast<std::size_t>(z.length())];
          next.push_back(std::move(z));
        }
    // Elements of one length only produce the next length down, so earlier
    // layers can be forgotten.
    seen.clear();
    for (const auto& z : next) seen.insert(z);
    frontier = std::move(next);
  }
  return r;
}

inline IntPolynomial poincare(const GroupElement& w) { return IntPolynomial::from_counts(lower_interval_ranks(w)); }

struct ParabolicDecomposition {
  GroupElement w, v, u;
  GenSet J = 0;
};

inline ParabolicDecomposition parabolic_decompose(const GroupElement& w, GenSet J) {
  const CoxeterSystem& W = w.system();
  GroupElement v = w, u = W.identity();
  for (;;) {
    int found = -1;
    for (int s : gen_list(J))
      if (W.right_descent(v, s)) {
        found = s;
        break;
      }
    if (found < 0) break;
    v = W.right_mul(v, found);
    u = W.left_mul(found, u);
  }
  return {w, v, u, J};
}

inline std::vector<GroupElement> relative_lower_interval(const GroupElement& v, GenSet J) {
  if (!is_min_coset_rep(v, J)) throw std::invalid_argument("relative_lower_interval: v is not a minimal coset representative");
  std::vector<GroupElement> out;
  for (const auto& z : lower_interval(v, false).elements)
    if (is_min_coset_rep(z, J)) out.push_back(z);
  return out;
}

inline IntPolynomial relative_poincare(const GroupElement& v, GenSet J) {
  std::vector<long long> r(static_cast<std::size_t>(v.length() + 1), 0);
  for (const auto& z : relative_lower_interval(v, J)) ++r[static_cast<std::size_t>(z.length())];
  return IntPolynomial::from_counts(r);
}

inline bool is_rationally_smooth(const GroupElement& w) { return poincare(w).is_palindromic(); }

inline bool is_relatively_rationally_smooth(const GroupElement& v, GenSet J) { return relative_poincare(v, J).is_palindromic(); }

// u_J, the longest element of W_J.
inline GroupElement longest_element(const CoxeterSystem& W, GenSet J) {
  if (!W.parabolic_finite(J)) throw std::invalid_argument("longest_element: W_J is infinite");
  GroupElement w = W.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s : gen_list(J))
      if (!W.right_descent(w, s)) {
        w = W.right_mul(w, s);
        grew = true;
      }
  }
  return w;
}

// Unique maximum of [e,w] ∩ W_J; uniqueness is verified, not assumed.
inline GroupElement max_in_interval_parabolic(const GroupElement& w, GenSet J) {
  std::vector<GroupElement> inside;
  for (const auto& z : lower_interval(w, false).elements)
    if (in_parabolic(z, J)) inside.push_back(z);
  const GroupElement* top = &inside.front();
  for (const auto& z : inside)
    if (z.length() > top->length()) top = &z;
  for (const auto& z : inside)
    if (!bruhat_leq(z, *top)) throw std::logic_error("max_in_interval_parabolic: no unique maximum");
  return *top;
}

// BFS over right multiplication restricted to J; non-decreasing length order.
inline std::vector<GroupElement> enumerate_parabolic(const CoxeterSystem& W, GenSet J, std::optional<int> max_length = std::nullopt) {
  if (!max_length && !W.parabolic_finite(J)) throw std::invalid_argument("enumerate: infinite group needs a length bound");
  std::vector<GroupElement> out{W.identity()};
  std::vector<GroupElement> level{W.identity()};
  const std::vector<int> gens = gen_list(J);
  for (int len = 1; !level.empty() && (!max_length || len <= *max_length); ++len) {
    ElementSet next_set;
    std::vector<GroupElement> next;
    for (const auto& x : level)
      for (int s : gens)
        if (!W.right_descent(x, s)) {
          GroupElement y = W.right_mul(x, s);
          if (next_set.insert(y).second) next.push_back(std::move(y));
        }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

inline std::vector<GroupElement> enumerate_group(const CoxeterSystem& W, std::optional<int> max_length = std::nullopt) {
  if (!max_length && !W.is_finite()) throw std::invalid_argument("enumerate_group: infinite group needs a length bound");
  return enumerate_parabolic(W, W.all_generators(), max_length);
}

}  // namespace bruhat
