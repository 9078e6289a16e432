#pragma once

#include "bp.hpp"
#include "bruhat.hpp"
#include "coxeter.hpp"
#include "literal.hpp"
#include "patterns.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bruhat {

// Blocks are generator subsets of the Coxeter graph of `system`; covers are
// (lower, upper) block indices of the Hasse diagram. Blocks are kept sorted by
// (smallest generator, size, mask) and covers sorted, so equal diagrams compare equal.
struct StaircaseDiagram {
  const CoxeterSystem* system = nullptr;
  std::vector<GenSet> blocks;
  std::vector<std::pair<int, int>> covers;

  int size() const { return static_cast<int>(blocks.size()); }
  GenSet support() const {
    GenSet s = 0;
    for (GenSet b : blocks) s |= b;
    return s;
  }
  friend bool operator==(const StaircaseDiagram& x, const StaircaseDiagram& y) {
    return x.system == y.system && x.blocks == y.blocks && x.covers == y.covers;
  }
  friend bool operator<(const StaircaseDiagram& x, const StaircaseDiagram& y) {
    if (x.blocks != y.blocks) return x.blocks < y.blocks;
    return x.covers < y.covers;
  }
};

inline bool connected(const CoxeterSystem& W, GenSet B) {
  if (B == 0) return false;
  GenSet seen = B & (~B + 1);  // lowest element
  for (GenSet frontier = seen; frontier;) {
    GenSet next = 0;
    for (int s : gen_list(frontier)) next |= W.neighbors(s) & B;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == B;
}

namespace detail {

inline int lowest(GenSet B) { return B ? std::countr_zero(B) : 64; }

// Strictly-below masks of the transitive closure; nullopt if the relation has a cycle.
inline std::optional<std::vector<std::uint64_t>> order_closure(int n, const std::vector<std::pair<int, int>>& rel) {
  std::vector<std::uint64_t> below(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : rel) below[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
  for (bool changed = true; changed;) {
    changed = false;
    for (int b = 0; b < n; ++b) {
      std::uint64_t acc = below[static_cast<std::size_t>(b)];
      for (int a = 0; a < n; ++a)
        if ((below[static_cast<std::size_t>(b)] >> a) & 1U) acc |= below[static_cast<std::size_t>(a)];
      if (acc != below[static_cast<std::size_t>(b)]) {
        below[static_cast<std::size_t>(b)] = acc;
        changed = true;
      }
    }
  }
  for (int b = 0; b < n; ++b)
    if ((below[static_cast<std::size_t>(b)] >> b) & 1U) return std::nullopt;
  return below;
}

inline std::vector<std::pair<int, int>> transitive_reduction(const std::vector<std::uint64_t>& below) {
  const int n = static_cast<int>(below.size());
  std::vector<std::pair<int, int>> out;
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      if (!((below[static_cast<std::size_t>(b)] >> a) & 1U)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (((below[static_cast<std::size_t>(b)] >> c) & 1U) && ((below[static_cast<std::size_t>(c)] >> a) & 1U)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Builds a diagram from blocks and any generating set of (lower, upper) relations.
inline StaircaseDiagram make_diagram(const CoxeterSystem& W, const std::vector<GenSet>& blocks,
                                     const std::vector<std::pair<int, int>>& relations) {
  const int n = static_cast<int>(blocks.size());
  if (n > 64) throw std::invalid_argument("make_diagram: too many blocks");
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const GenSet a = blocks[static_cast<std::size_t>(x)], b = blocks[static_cast<std::size_t>(y)];
    if (detail::lowest(a) != detail::lowest(b)) return detail::lowest(a) < detail::lowest(b);
    if (gen_count(a) != gen_count(b)) return gen_count(a) < gen_count(b);
    return a < b;
  });
  std::vector<int> pos(static_cast<std::size_t>(n));
  StaircaseDiagram D;
  D.system = &W;
  for (int i = 0; i < n; ++i) {
    pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    D.blocks.push_back(blocks[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
  }
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("make_diagram: relation index out of range");
    rel.emplace_back(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
  }
  auto below = detail::order_closure(n, rel);
  if (!below) throw std::invalid_argument("make_diagram: relations contain a cycle");
  D.covers = detail::transitive_reduction(*below);
  return D;
}

inline std::vector<std::uint64_t> strictly_below(const StaircaseDiagram& D) {
  auto below = detail::order_closure(D.size(), D.covers);
  if (!below) throw std::logic_error("diagram order has a cycle");
  return *below;
}

struct DiagramCheck {
  bool valid = true;
  int axiom = 0;  // first violated axiom (1-4); 5 for the derived no-nesting property; -1 structural
  std::string witness;
};

inline DiagramCheck validate_diagram(const StaircaseDiagram& D) {
  const CoxeterSystem& W = *D.system;
  const int n = D.size();
  auto fail = [](int axiom, std::string why) { return DiagramCheck{false, axiom, std::move(why)}; };
  auto name = [&](int b) { return gen_set_string(W, D.blocks[static_cast<std::size_t>(b)]); };
  for (int b = 0; b < n; ++b) {
    const GenSet B = D.blocks[static_cast<std::size_t>(b)];
    if (B == 0 || (B & ~W.all_generators())) return fail(-1, "block " + std::to_string(b) + " is empty or outside the graph");
    for (int c = 0; c < b; ++c)
      if (D.blocks[static_cast<std::size_t>(c)] == B) return fail(-1, "repeated block " + name(b));
  }
  auto closure = detail::order_closure(n, D.covers);
  if (!closure) return fail(-1, "order relation has a cycle");
  const auto& below = *closure;
  auto less = [&](int a, int b) { return ((below[static_cast<std::size_t>(b)] >> a) & 1U) != 0; };
  auto comparable = [&](int a, int b) { return a == b || less(a, b) || less(b, a); };

  // (1) connected blocks, connected cover unions
  for (int b = 0; b < n; ++b)
    if (!connected(W, D.blocks[static_cast<std::size_t>(b)])) return fail(1, "block " + name(b) + " is not connected");
  for (auto [a, b] : detail::transitive_reduction(below))
    if (!connected(W, D.blocks[static_cast<std::size_t>(a)] | D.blocks[static_cast<std::size_t>(b)]))
      return fail(1, "cover " + name(a) + " < " + name(b) + " has disconnected union");

  std::vector<std::vector<int>> Ds(static_cast<std::size_t>(W.rank()));
  for (int b = 0; b < n; ++b)
    for (int s : gen_list(D.blocks[static_cast<std::size_t>(b)])) Ds[static_cast<std::size_t>(s)].push_back(b);

  // (2) each D_s is a chain
  for (int s = 0; s < W.rank(); ++s) {
    const auto& c = Ds[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (!comparable(c[i], c[j]))
          return fail(2, "D_s" + std::to_string(W.label(s)) + " contains incomparable " + name(c[i]) + ", " + name(c[j]));
  }

  // (3) adjacent s,t: D_s ∪ D_t is a chain in which both are saturated
  for (int s = 0; s < W.rank(); ++s)
    for (int t : gen_list(W.neighbors(s))) {
      if (t < s) continue;
      std::vector<int> u = Ds[static_cast<std::size_t>(s)];
      for (int b : Ds[static_cast<std::size_t>(t)])
        if (std::find(u.begin(), u.end(), b) == u.end()) u.push_back(b);
      const std::string tag = "s" + std::to_string(W.label(s)) + ",s" + std::to_string(W.label(t));
      for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
          if (!comparable(u[i], u[j])) return fail(3, "D_s ∪ D_t for " + tag + " is not a chain: " + name(u[i]) + ", " + name(u[j]));
      std::sort(u.begin(), u.end(), [&](int a, int b) { return less(a, b); });
      for (int x : {s, t}) {
        const auto& dx = Ds[static_cast<std::size_t>(x)];
        int first = -1, last = -1;
        for (int i = 0; i < static_cast<int>(u.size()); ++i)
          if (std::find(dx.begin(), dx.end(), u[static_cast<std::size_t>(i)]) != dx.end()) {
            if (first < 0) first = i;
            last = i;
          }
        if (first >= 0 && last - first + 1 != static_cast<int>(dx.size()))
          return fail(3, "D_s" + std::to_string(W.label(x)) + " is not saturated in the chain for " + tag);
      }
    }

  // (4) each block is the minimum of some D_s and the maximum of some D_s'
  for (int b = 0; b < n; ++b) {
    bool is_min = false, is_max = false;
    for (int s : gen_list(D.blocks[static_cast<std::size_t>(b)])) {
      bool lo = true, hi = true;
      for (int c : Ds[static_cast<std::size_t>(s)]) {
        if (less(c, b)) lo = false;
        if (less(b, c)) hi = false;
      }
      is_min |= lo;
      is_max |= hi;
    }
    if (!is_min) return fail(4, "block " + name(b) + " is not the minimum of any D_s");
    if (!is_max) return fail(4, "block " + name(b) + " is not the maximum of any D_s");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && (D.blocks[static_cast<std::size_t>(a)] & ~D.blocks[static_cast<std::size_t>(b)]) == 0)
        return fail(5, "block " + name(a) + " lies inside " + name(b));
  return {};
}

inline StaircaseDiagram flip(const StaircaseDiagram& D) {
  std::vector<std::pair<int, int>> rel;
  for (auto [a, b] : D.covers) rel.emplace_back(b, a);
  return make_diagram(*D.system, D.blocks, rel);
}

// Part of block b covered by blocks below it.
inline GenSet jr(const StaircaseDiagram& D, int b) {
  const auto below = strictly_below(D);
  GenSet u = 0;
  for (int a = 0; a < D.size(); ++a)
    if ((below[static_cast<std::size_t>(b)] >> a) & 1U) u |= D.blocks[static_cast<std::size_t>(a)];
  return D.blocks[static_cast<std::size_t>(b)] & u;
}

// Part of block b covered by blocks above it.
inline GenSet jl(const StaircaseDiagram& D, int b) {
  const auto below = strictly_below(D);
  GenSet u = 0;
  for (int a = 0; a < D.size(); ++a)
    if ((below[static_cast<std::size_t>(a)] >> b) & 1U) u |= D.blocks[static_cast<std::size_t>(a)];
  return D.blocks[static_cast<std::size_t>(b)] & u;
}

inline int find_block(const StaircaseDiagram& D, GenSet B) {
  for (int b = 0; b < D.size(); ++b)
    if (D.blocks[static_cast<std::size_t>(b)] == B) return b;
  return -1;
}

// Kahn's algorithm picking the smallest (or largest) available block index.
inline std::vector<int> linear_extension(const StaircaseDiagram& D, bool prefer_high = false) {
  const auto below = strictly_below(D);
  std::vector<int> out;
  std::uint64_t placed = 0;
  while (static_cast<int>(out.size()) < D.size()) {
    int pick = -1;
    for (int b = 0; b < D.size(); ++b) {
      if ((placed >> b) & 1U) continue;
      if ((below[static_cast<std::size_t>(b)] & ~placed) != 0) continue;
      if (pick < 0 || prefer_high) pick = b;
      if (!prefer_high) break;
    }
    out.push_back(pick);
    placed |= std::uint64_t{1} << pick;
  }
  return out;
}

template <class Rng>
std::vector<int> random_linear_extension(const StaircaseDiagram& D, Rng& rng) {
  const auto below = strictly_below(D);
  std::vector<int> out;
  std::uint64_t placed = 0;
  while (static_cast<int>(out.size()) < D.size()) {
    std::vector<int> avail;
    for (int b = 0; b < D.size(); ++b)
      if (!((placed >> b) & 1U) && (below[static_cast<std::size_t>(b)] & ~placed) == 0) avail.push_back(b);
    std::uniform_int_distribution<std::size_t> pick(0, avail.size() - 1);
    const int b = avail[pick(rng)];
    out.push_back(b);
    placed |= std::uint64_t{1} << b;
  }
  return out;
}

// Block labels aligned with StaircaseDiagram::blocks.
using Labelling = std::vector<GroupElement>;

inline bool block_label_valid(const CoxeterSystem& W, GenSet B, GenSet JR, GenSet JL, const GroupElement& lam) {
  if ((JR & ~descents(lam, Side::Right)) != 0) return false;
  if ((JL & ~descents(lam, Side::Left)) != 0) return false;
  if (support(multiply(lam, longest_element(W, JR))) != B) return false;
  return support(multiply(longest_element(W, JL), lam)) == B;
}

inline bool labelling_valid(const StaircaseDiagram& D, const Labelling& lam) {
  if (static_cast<int>(lam.size()) != D.size()) return false;
  for (int b = 0; b < D.size(); ++b)
    if (!block_label_valid(*D.system, D.blocks[static_cast<std::size_t>(b)], jr(D, b), jl(D, b), lam[static_cast<std::size_t>(b)]))
      return false;
  return true;
}

inline Labelling maximal_labelling(const StaircaseDiagram& D) {
  Labelling out;
  for (GenSet B : D.blocks) {
    if (!D.system->parabolic_finite(B)) throw std::invalid_argument("maximal_labelling: block generates an infinite subgroup");
    out.push_back(longest_element(*D.system, B));
  }
  return out;
}

inline Labelling inverse_labelling(const Labelling& lam) {
  Labelling out;
  for (const auto& x : lam) out.push_back(inverse(x));
  return out;
}

inline GroupElement lambda_bar(const StaircaseDiagram& D, const Labelling& lam, int b) {
  return multiply(lam[static_cast<std::size_t>(b)], longest_element(*D.system, jr(D, b)));
}

// Product over a given linear extension B_1, ..., B_n (lowest first).
inline GroupElement lambda_product(const StaircaseDiagram& D, const Labelling& lam, const std::vector<int>& extension) {
  GroupElement acc = D.system->identity();
  for (int b : extension) acc = multiply(lambda_bar(D, lam, b), acc);
  return acc;
}

inline GroupElement lambda_product(const StaircaseDiagram& D, const Labelling& lam) {
  if (!labelling_valid(D, lam)) throw std::invalid_argument("lambda_product: invalid labelling");
  const GroupElement x = lambda_product(D, lam, linear_extension(D, false));
  const GroupElement y = lambda_product(D, lam, linear_extension(D, true));
  if (x != y) throw std::logic_error("lambda_product depends on the linear extension");
  if (support(x) != D.support()) throw std::logic_error("lambda_product: support mismatch");
  return x;
}

inline bool is_nearly_maximal(const StaircaseDiagram& D, const Labelling& lam) {
  (void)D;
  for (const auto& x : lam)
    if (!is_nearly_maximal_element(x)) return false;
  return true;
}

// Each prefix step lambda_bar(B_i) * Lambda(D^i) is BP with respect to S(D^i).
inline bool iterated_bp_holds(const StaircaseDiagram& D, const Labelling& lam, const std::vector<int>& extension) {
  GroupElement acc = D.system->identity();
  GenSet seen = 0;
  for (int b : extension) {
    const GroupElement step = multiply(lambda_bar(D, lam, b), acc);
    if (!is_bp(step, seen).is_bp) return false;
    acc = step;
    seen |= D.blocks[static_cast<std::size_t>(b)];
  }
  return true;
}

// Valid labels per block: all of W_B filtered by the labelling conditions.
inline std::vector<std::vector<GroupElement>> block_label_candidates(const StaircaseDiagram& D, bool nearly_maximal_only) {
  std::vector<std::vector<GroupElement>> out;
  for (int b = 0; b < D.size(); ++b) {
    const GenSet B = D.blocks[static_cast<std::size_t>(b)];
    const GenSet JR = jr(D, b), JL = jl(D, b);
    std::vector<GroupElement> cands;
    for (const auto& x : enumerate_parabolic(*D.system, B)) {
      if (!block_label_valid(*D.system, B, JR, JL, x)) continue;
      if (nearly_maximal_only && !is_nearly_maximal_element(x)) continue;
      cands.push_back(x);
    }
    out.push_back(std::move(cands));
  }
  return out;
}

template <class F>
void for_each_labelling(const std::vector<std::vector<GroupElement>>& cands, F&& f) {
  Labelling cur(cands.size());
  std::function<void(std::size_t)> go = [&](std::size_t b) {
    if (b == cands.size()) {
      f(static_cast<const Labelling&>(cur));
      return;
    }
    for (const auto& x : cands[b]) {
      cur[b] = x;
      go(b + 1);
    }
  };
  go(0);
}

enum class DiagramFilter { All, FullySupported, Increasing, Broken, Spherical };

inline std::optional<DiagramFilter> parse_diagram_filter(const std::string& s) {
  if (s == "all") return DiagramFilter::All;
  if (s == "fullySupported" || s == "full") return DiagramFilter::FullySupported;
  if (s == "increasing") return DiagramFilter::Increasing;
  if (s == "broken") return DiagramFilter::Broken;
  if (s == "spherical") return DiagramFilter::Spherical;
  return std::nullopt;
}

// Fully supported, with every cover running from a block starting further left.
inline bool is_increasing(const StaircaseDiagram& D) {
  if (D.system->family() != Family::A) return false;
  if (D.support() != D.system->all_generators()) return false;
  for (auto [a, b] : D.covers)
    if (detail::lowest(D.blocks[static_cast<std::size_t>(a)]) >= detail::lowest(D.blocks[static_cast<std::size_t>(b)])) return false;
  for (int b = 0; b + 1 < D.size(); ++b)
    if (std::find(D.covers.begin(), D.covers.end(), std::make_pair(b, b + 1)) == D.covers.end()) return false;
  return true;
}

// Closed intervals [a, b] of generator labels 1..n, listed bottom to top.
using IntervalChain = std::vector<std::pair<int, int>>;

inline GenSet interval_set(int a, int b) {
  GenSet out = 0;
  for (int s = a; s <= b; ++s) out |= gen_bit(s - 1);
  return out;
}

// Increasing diagrams over the path with n vertices, generated directly.
inline std::vector<IntervalChain> increasing_chains(int n) {
  std::vector<IntervalChain> out;
  IntervalChain cur;
  std::function<void(int, int)> go = [&](int a_prev, int b_prev) {
    if (b_prev == n) {
      out.push_back(cur);
      return;
    }
    for (int a = a_prev + 1; a <= b_prev + 1; ++a)
      for (int b = b_prev + 1; b <= n; ++b) {
        cur.emplace_back(a, b);
        go(a, b);
        cur.pop_back();
      }
  };
  if (n == 0) return {IntervalChain{}};
  for (int b = 1; b <= n; ++b) {
    cur.assign(1, {1, b});
    go(1, b);
  }
  return out;
}

// Increasing diagrams over n+1 vertices cut down to generators 2..n+1, relabelled to 1..n.
inline std::vector<IntervalChain> broken_chains(int n) {
  std::set<IntervalChain> seen;
  for (const auto& ch : increasing_chains(n + 1)) {
    IntervalChain cut;
    for (auto [a, b] : ch) {
      const int lo = std::max(a, 2);
      if (lo <= b) cut.emplace_back(lo - 1, b - 1);
    }
    seen.insert(cut);
  }
  return {seen.begin(), seen.end()};
}

// Blocks in the listed order, each covering the previous one.
inline StaircaseDiagram chain_to_diagram(const CoxeterSystem& W, const IntervalChain& chain) {
  std::vector<GenSet> blocks;
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    blocks.push_back(interval_set(chain[i].first, chain[i].second));
    if (i) rel.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
  }
  return make_diagram(W, blocks, rel);
}

namespace detail {

struct DiagramKeyLess {
  bool operator()(const StaircaseDiagram& x, const StaircaseDiagram& y) const { return x < y; }
};

}  // namespace detail

// Generic enumeration: every diagram arises from a smaller one by adding a new
// maximal block, placed above every block it meets or touches.
inline std::vector<StaircaseDiagram> enumerate_diagrams(const CoxeterSystem& W, DiagramFilter filter = DiagramFilter::All) {
  if (filter == DiagramFilter::Broken) {
    if (W.family() != Family::A) throw std::invalid_argument("broken diagrams are defined over type A paths");
    std::vector<StaircaseDiagram> out;
    for (const auto& ch : broken_chains(W.rank())) {
      // Broken diagrams need not satisfy the axioms; the chain order is kept as given.
      StaircaseDiagram D;
      D.system = &W;
      for (std::size_t i = 0; i < ch.size(); ++i) {
        D.blocks.push_back(interval_set(ch[i].first, ch[i].second));
        if (i) D.covers.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
      }
      out.push_back(std::move(D));
    }
    return out;
  }
  if (filter == DiagramFilter::Increasing && W.family() == Family::A) {
    // Every increasing diagram is a chain of intervals; generate and validate.
    std::vector<StaircaseDiagram> out;
    for (const auto& ch : increasing_chains(W.rank())) out.push_back(chain_to_diagram(W, ch));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<GenSet> candidates;
  const GenSet all = W.all_generators();
  for (GenSet B = 1; B <= all && B != 0; ++B) {
    if (!connected(W, B)) continue;
    if (filter == DiagramFilter::Spherical && !W.parabolic_finite(B)) continue;
    candidates.push_back(B);
  }
  std::vector<StaircaseDiagram> result;
  std::set<StaircaseDiagram, detail::DiagramKeyLess> level;
  level.insert(StaircaseDiagram{&W, {}, {}});
  while (!level.empty()) {
    std::set<StaircaseDiagram, detail::DiagramKeyLess> next;
    for (const auto& D : level) {
      result.push_back(D);
      for (GenSet B : candidates) {
        bool ok = true;
        for (GenSet C : D.blocks)
          if ((B & ~C) == 0 || (C & ~B) == 0) ok = false;
        if (!ok) continue;
        std::vector<GenSet> blocks = D.blocks;
        std::vector<std::pair<int, int>> rel = D.covers;
        const int nb = D.size();
        for (int i = 0; i < nb; ++i)
          if (connected(W, D.blocks[static_cast<std::size_t>(i)] | B)) rel.emplace_back(i, nb);
        blocks.push_back(B);
        StaircaseDiagram E = make_diagram(W, blocks, rel);
        if (validate_diagram(E).valid) next.insert(std::move(E));
      }
    }
    level = std::move(next);
  }
  std::vector<StaircaseDiagram> out;
  for (auto& D : result) {
    bool keep = true;
    if (filter == DiagramFilter::FullySupported || filter == DiagramFilter::Increasing) keep = D.support() == all;
    if (filter == DiagramFilter::Increasing) keep = is_increasing(D);
    if (keep) out.push_back(std::move(D));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Lattice path of an increasing diagram as (right, up) run lengths per block.
struct DyckPath {
  std::vector<std::pair<int, int>> steps;

  std::string path() const {
    std::string out;
    for (auto [r, u] : steps) out += std::string(static_cast<std::size_t>(r), 'R') + std::string(static_cast<std::size_t>(u), 'U');
    return out;
  }
};

inline DyckPath dyck_encode(const StaircaseDiagram& D) {
  if (!is_increasing(D)) throw std::invalid_argument("dyck_encode: diagram is not increasing");
  DyckPath p;
  const int m = D.size();
  for (int i = 0; i < m; ++i) {
    const GenSet B = D.blocks[static_cast<std::size_t>(i)];
    const GenSet prev = i ? D.blocks[static_cast<std::size_t>(i - 1)] : 0;
    const GenSet next = i + 1 < m ? D.blocks[static_cast<std::size_t>(i + 1)] : 0;
    p.steps.emplace_back(gen_count(B & ~prev), gen_count(B & ~next));
  }
  return p;
}

inline StaircaseDiagram dyck_decode(const CoxeterSystem& W, const DyckPath& p) {
  IntervalChain chain;
  int a = 1, b = 0;
  for (auto [r, u] : p.steps) {
    if (r < 1 || u < 1) throw std::invalid_argument("dyck_decode: empty run");
    b += r;
    chain.emplace_back(a, b);
    a += u;
  }
  if (b != W.rank() || a != b + 1) throw std::invalid_argument("dyck_decode: path does not end on the diagonal");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (chain[i + 1].first > chain[i].second + 1) throw std::invalid_argument("dyck_decode: path crosses the diagonal");
  return chain_to_diagram(W, chain);
}

// One row per block in a linear extension, bottom block first.
inline std::string render_diagram(const StaircaseDiagram& D) {
  const CoxeterSystem& W = *D.system;
  std::string out;
  for (int b : linear_extension(D)) {
    std::string row;
    for (int s = 0; s < W.rank(); ++s) row += gen_has(D.blocks[static_cast<std::size_t>(b)], s) ? "[]" : "  ";
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  std::string labels;
  for (int s = 0; s < W.rank(); ++s) {
    std::string lab = std::to_string(W.label(s));
    labels += lab.size() == 1 ? lab + " " : lab.substr(0, 2);
  }
  return out + labels + "\n";
}

struct BijectionReport {
  std::size_t diagrams = 0;
  std::size_t image = 0;
  std::size_t target = 0;
  bool injective = false;
  bool image_equals_target = false;
  bool ok() const { return injective && image_equals_target && diagrams == target; }
};

// Maximal-labelling images of diagrams against smooth elements (A: pattern
// avoidance; D: palindromic Poincare polynomial; AffineA: spherical diagrams
// against pattern-smooth elements up to a length bound).
inline BijectionReport smooth_bijection_check(int n, Family family) {
  const CoxeterSystem& W = build_system(family, n);
  const DiagramFilter filter = family == Family::AffineA ? DiagramFilter::Spherical : DiagramFilter::All;
  BijectionReport r;
  ElementSet image;
  int max_len = 0;
  for (const auto& D : enumerate_diagrams(W, filter)) {
    ++r.diagrams;
    GroupElement x = lambda_product(D, maximal_labelling(D));
    max_len = std::max(max_len, x.length());
    image.insert(std::move(x));
  }
  r.image = image.size();
  r.injective = r.image == r.diagrams;
  ElementSet target;
  if (family == Family::A) {
    for (const auto& w : enumerate_group(W))
      if (classify(w.canonical()).smooth) target.insert(w);
  } else if (family == Family::D) {
    for (const auto& w : enumerate_group(W))
      if (is_rationally_smooth(w)) target.insert(w);
  } else if (family == Family::AffineA) {
    // Two extra length layers must contain no smooth element.
    for (const auto& w : enumerate_group(W, max_len + 2))
      if (affine_is_smooth(affine_of(w))) target.insert(w);
  } else {
    throw std::invalid_argument("smooth_bijection_check: family must be A, D or AffineA");
  }
  r.target = target.size();
  r.image_equals_target = image == target;
  return r;
}

// Nearly-maximal labelled diagrams over the path with n-1 vertices against
// elements of S_n with a complete BP decomposition (pattern class).
inline BijectionReport complete_bp_bijection_check(int n) {
  const CoxeterSystem& W = build_system(Family::A, n - 1);
  BijectionReport r;
  ElementSet image;
  for (const auto& D : enumerate_diagrams(W)) {
    for_each_labelling(block_label_candidates(D, true), [&](const Labelling& lam) {
      ++r.diagrams;
      image.insert(lambda_product(D, lam, linear_extension(D)));
    });
  }
  r.image = image.size();
  r.injective = r.image == r.diagrams;
  ElementSet target;
  for (const auto& w : enumerate_group(W))
    if (classify(w.canonical()).complete_bp) target.insert(w);
  r.target = target.size();
  r.image_equals_target = image == target;
  return r;
}

}  // namespace bruhat
