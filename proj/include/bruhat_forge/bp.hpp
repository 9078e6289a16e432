#pragma once

#include "bruhat.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace bruhat {

struct BpWitnesses {
  std::optional<bool> factorization;  // P_w = P_v^J * P_u
  std::optional<bool> bijection;      // [e,v]^J x [e,u] -> [e,w] bijective
  std::optional<bool> maximality;     // u = max([e,w] ∩ W_J)
  bool descent_containment = false;   // S(v) ∩ J ⊆ D_L(u)
};

struct BpVerdict {
  bool is_bp = false;
  BpWitnesses witnesses;
  ParabolicDecomposition decomposition;

  bool consistent() const {
    const bool d = witnesses.descent_containment;
    return (!witnesses.factorization || *witnesses.factorization == d) && (!witnesses.bijection || *witnesses.bijection == d) &&
           (!witnesses.maximality || *witnesses.maximality == d);
  }
};

inline bool multiplication_map_bijective(const ParabolicDecomposition& pd) {
  const Interval top = lower_interval(pd.w, false);
  const std::vector<GroupElement> left = relative_lower_interval(pd.v, pd.J);
  const Interval right = lower_interval(pd.u, false);
  if (left.size() * right.size() != top.size()) return false;
  ElementSet image;
  for (const auto& x : left)
    for (const auto& y : right.elements) {
      GroupElement z = multiply(x, y);
      if (!top.contains(z) || !image.insert(std::move(z)).second) return false;
    }
  return true;
}

// Criterion (4) decides; with verify set, criteria (1)-(3) are computed as well.
inline BpVerdict is_bp(const GroupElement& w, GenSet J, bool verify = false) {
  BpVerdict out;
  out.decomposition = parabolic_decompose(w, J);
  const auto& pd = out.decomposition;
  out.witnesses.descent_containment = (support(pd.v) & J & ~descents(pd.u, Side::Left)) == 0;
  out.is_bp = out.witnesses.descent_containment;
  if (verify) {
    out.witnesses.factorization = poincare(w) == relative_poincare(pd.v, J) * poincare(pd.u);
    out.witnesses.bijection = multiplication_map_bijective(pd);
    out.witnesses.maximality = max_in_interval_parabolic(w, J) == pd.u;
  }
  return out;
}

// Generators s such that w is BP with respect to S(w) \ {s}.
inline std::vector<int> grassmannian_bp_candidates(const GroupElement& w) {
  const GenSet S = support(w);
  std::vector<int> out;
  for (int s : gen_list(S))
    if (is_bp(w, S & ~gen_bit(s)).is_bp) out.push_back(s);
  return out;
}

// Leaves of the Coxeter graph induced on S(w).
inline std::vector<int> support_leaves(const GroupElement& w) {
  const CoxeterSystem& W = w.system();
  const GenSet S = support(w);
  std::vector<int> out;
  for (int s : gen_list(S))
    if (gen_count(W.neighbors(s) & S) <= 1) out.push_back(s);
  return out;
}

inline bool has_leaf_bp(const GroupElement& w) {
  const GenSet S = support(w);
  for (int s : support_leaves(w))
    if (is_bp(w, S & ~gen_bit(s)).is_bp) return true;
  return false;
}

struct CompleteBpChain {
  std::vector<GroupElement> factors;  // v_n, ..., v_1
  std::vector<GenSet> supports;       // S(v_i ... v_1) for i = n, ..., 1
};

namespace detail {

inline bool complete_bp_search(const GroupElement& w, CompleteBpChain& chain) {
  const GenSet S = support(w);
  if (S == 0) return true;
  if (gen_count(S) == 1) {
    chain.factors.push_back(w);
    chain.supports.push_back(S);
    return true;
  }
  // Largest removed generator first, so the inner factors keep the low indices.
  std::vector<int> cand = grassmannian_bp_candidates(w);
  for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
    const auto pd = parabolic_decompose(w, S & ~gen_bit(*it));
    const std::size_t mark = chain.factors.size();
    chain.factors.push_back(pd.v);
    chain.supports.push_back(S);
    if (complete_bp_search(pd.u, chain)) return true;
    chain.factors.resize(mark);
    chain.supports.resize(mark);
  }
  return false;
}

}  // namespace detail

inline std::optional<CompleteBpChain> complete_bp(const GroupElement& w) {
  CompleteBpChain chain;
  if (detail::complete_bp_search(w, chain)) return chain;
  return std::nullopt;
}

inline GroupElement chain_product(const CompleteBpChain& chain, const CoxeterSystem& W) {
  GroupElement out = W.identity();
  for (const auto& f : chain.factors) out = multiply(out, f);
  return out;
}

// P_w^J = P_v^K * P_u^J for the decomposition of w with respect to K.
inline bool is_relative_bp(const GroupElement& w, GenSet J, GenSet K) {
  if ((J & ~K) != 0) throw std::invalid_argument("is_relative_bp: J must be a subset of K");
  if (!is_min_coset_rep(w, J)) throw std::invalid_argument("is_relative_bp: w must lie in W^J");
  const auto pd = parabolic_decompose(w, K);
  return relative_poincare(w, J) == relative_poincare(pd.v, K) * relative_poincare(pd.u, J);
}

namespace detail {

inline bool chain_search(const GroupElement& w, std::vector<int>& degrees) {
  const GenSet S = support(w);
  if (S == 0) return true;
  for (int s : grassmannian_bp_candidates(w)) {
    const GenSet J = S & ~gen_bit(s);
    const auto pd = parabolic_decompose(w, J);
    const IntPolynomial rel = relative_poincare(pd.v, J);
    if (rel != IntPolynomial::q_integer(rel.degree() + 1)) continue;
    degrees.push_back(rel.degree());
    if (chain_search(pd.u, degrees)) return true;
    degrees.pop_back();
  }
  return false;
}

}  // namespace detail

// Degrees m_i with P_w = prod [m_i + 1]_q along Grassmannian BP steps whose
// relative factor is a chain.
inline std::optional<std::vector<int>> chain_bp_factorization(const GroupElement& w) {
  std::vector<int> degrees;
  if (detail::chain_search(w, degrees)) return degrees;
  return std::nullopt;
}

// Maximum of v0^{-1}([e,w] ∩ v0 W_J) for v0 in [e,v]^J.
inline GroupElement coset_interval_max(const GroupElement& w, GenSet J, const GroupElement& v0) {
  const auto pd = parabolic_decompose(w, J);
  if (!is_min_coset_rep(v0, J) || !bruhat_leq(v0, pd.v))
    throw std::invalid_argument("coset_interval_max: v0 is outside [e,v]^J");
  const GroupElement v0inv = inverse(v0);
  std::vector<GroupElement> fiber;
  for (const auto& z : lower_interval(w, false).elements) {
    GroupElement y = multiply(v0inv, z);
    if (in_parabolic(y, J)) fiber.push_back(std::move(y));
  }
  const GroupElement* top = &fiber.front();
  for (const auto& y : fiber)
    if (y.length() > top->length()) top = &y;
  for (const auto& y : fiber)
    if (!bruhat_leq(y, *top)) throw std::logic_error("coset_interval_max: no unique maximum");
  return *top;
}

// Some Grassmannian BP decomposition w = vu has S(u) strictly inside S(v).
inline bool is_nearly_maximal_element(const GroupElement& w) {
  const GenSet S = support(w);
  for (int s : gen_list(S)) {
    const auto verdict = is_bp(w, S & ~gen_bit(s));
    if (!verdict.is_bp) continue;
    const GenSet sv = support(verdict.decomposition.v), su = support(verdict.decomposition.u);
    if ((su & ~sv) == 0 && su != sv) return true;
  }
  return false;
}

}  // namespace bruhat
