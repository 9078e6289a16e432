#pragma once

#include "arrangements.hpp"
#include "bp.hpp"
#include "bruhat.hpp"
#include "literal.hpp"
#include "patterns.hpp"
#include "series.hpp"
#include "staircase.hpp"
#include "sweep.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bruhat {

struct SweepConfig {
  Family family = Family::A;
  int min_rank = 1;
  int max_rank = 3;
  int chain_max_rank = 10;  // increasing/broken chain counts
  int horizon = 0;          // affine pattern horizon; 0 means pattern length
  int jobs = 0;
  int trials = 1000;
  unsigned seed = 20240611;
};

namespace verify_detail {

inline int smallest_rank(Family f) {
  switch (f) {
    case Family::B:
    case Family::C:
    case Family::G2:
    case Family::AffineA: return 2;
    case Family::D: return 3;
    case Family::F4: return 4;
    case Family::E: return 6;
    default: return 1;
  }
}

inline std::vector<int> ranks(const SweepConfig& c) {
  std::vector<int> out;
  const int lo = std::max(c.min_rank, smallest_rank(c.family));
  int hi = c.max_rank;
  if (c.family == Family::F4) hi = std::min(hi, 4);
  if (c.family == Family::G2) hi = std::min(hi, 2);
  for (int r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

inline std::string fail(const GroupElement& w, const std::string& what) {
  return w.system().name() + " " + to_literal(w) + ": " + what;
}

inline void require_type_a(const SweepConfig& c, const std::string& id) {
  if (c.family != Family::A) throw std::invalid_argument(id + " is a type A statement");
}

}  // namespace verify_detail

// Criteria (1)-(4) agree on every (w, J).
inline SweepResult verify_bp_four_way(const SweepConfig& c) {
  SweepResult out{"bp-four-way", 0, {}};
  for (int r : verify_detail::ranks(c)) {
    const CoxeterSystem& W = build_system(c.family, r);
    out.merge(parallel_sweep("", enumerate_group(W), [&](const GroupElement& w) -> std::optional<std::string> {
      for (GenSet J = 0; J <= W.all_generators(); ++J) {
        const BpVerdict v = is_bp(w, J, true);
        if (!v.consistent()) return verify_detail::fail(w, "criteria disagree for J=" + gen_set_string(W, J));
        const auto& pd = v.decomposition;
        if (multiply(pd.v, pd.u) != w || pd.v.length() + pd.u.length() != w.length())
          return verify_detail::fail(w, "bad parabolic decomposition for J=" + gen_set_string(W, J));
        if (v.is_bp && poincare(w).evaluate(1) != relative_poincare(pd.v, J).evaluate(1) * poincare(pd.u).evaluate(1))
          return verify_detail::fail(w, "interval sizes do not multiply for J=" + gen_set_string(W, J));
      }
      return std::nullopt;
    }, c.jobs));
  }
  return out;
}

// Pattern smoothness matches palindromic Poincare polynomials.
inline SweepResult verify_smoothness(const SweepConfig& c) {
  verify_detail::require_type_a(c, "smoothness");
  SweepResult out{"smoothness", 0, {}};
  for (int r : verify_detail::ranks(c)) {
    const CoxeterSystem& W = build_system(Family::A, r);
    out.merge(parallel_sweep("", enumerate_group(W), [&](const GroupElement& w) -> std::optional<std::string> {
      const bool pattern = classify(permutation_of(w)).smooth;
      const bool palin = is_rationally_smooth(w);
      if (pattern != palin) return verify_detail::fail(w, pattern ? "avoids patterns but P_w is not palindromic" : "palindromic but contains a pattern");
      return std::nullopt;
    }, c.jobs));
  }
  return out;
}

// P_w = R_w exactly when w is rationally smooth; R_w is palindromic;
// for permutations the chamber count agrees with acyclic orientations.
inline SweepResult verify_pw_eq_rw(const SweepConfig& c) {
  SweepResult out{"pw-eq-rw", 0, {}};
  for (int r : verify_detail::ranks(c)) {
    const CoxeterSystem& W = build_system(c.family, r);
    const ChamberTable T = chamber_table(W);
    out.merge(parallel_sweep("", enumerate_group(W), [&](const GroupElement& w) -> std::optional<std::string> {
      const PwRwReport rep = check_pw_equals_rw(w, T);
      if (!rep.theorem_holds()) return verify_detail::fail(w, "P=" + rep.P.to_string() + " R=" + rep.R.to_string());
      if (!rep.R.is_palindromic()) return verify_detail::fail(w, "R_w not palindromic");
      if (W.family() == Family::A && r_poly_graph(inversion_graph(permutation_of(w))) != rep.R)
        return verify_detail::fail(w, "graph and chamber distance polynomials differ");
      return std::nullopt;
    }, c.jobs));
  }
  return out;
}

// Split-pattern avoidance at r matches BP with respect to S \ {s_r}.
inline SweepResult verify_split_pattern(const SweepConfig& c) {
  verify_detail::require_type_a(c, "split-pattern");
  SweepResult out{"split-pattern", 0, {}};
  for (int rk : verify_detail::ranks(c)) {
    const CoxeterSystem& W = build_system(Family::A, rk);
    out.merge(parallel_sweep("", enumerate_group(W), [&](const GroupElement& w) -> std::optional<std::string> {
      const Permutation p = permutation_of(w);
      for (int r = 1; r <= rk; ++r) {
        const bool pat = grassmannian_bp_at_r(p, r);
        const bool bp = is_bp(w, W.all_generators() & ~gen_bit(r - 1)).is_bp;
        if (pat != bp) return verify_detail::fail(w, "r=" + std::to_string(r) + " patterns say " + (pat ? "BP" : "not BP"));
      }
      return std::nullopt;
    }, c.jobs));
  }
  return out;
}

// Pattern class {3412, 52341, 635241} matches existence of a complete BP chain.
inline SweepResult verify_complete_bp(const SweepConfig& c) {
  verify_detail::require_type_a(c, "complete-bp");
  SweepResult out{"complete-bp", 0, {}};
  for (int r : verify_detail::ranks(c)) {
    const CoxeterSystem& W = build_system(Family::A, r);
    out.merge(parallel_sweep("", enumerate_group(W), [&](const GroupElement& w) -> std::optional<std::string> {
      const bool pat = classify(permutation_of(w)).complete_bp;
      const auto chain = complete_bp(w);
      if (pat != chain.has_value()) return verify_detail::fail(w, pat ? "pattern class but no chain" : "chain found outside the pattern class");
      if (chain) {
        if (chain_product(*chain, W) != w) return verify_detail::fail(w, "chain product differs");
        int len = 0;
        for (const auto& f : chain->factors) len += f.length();
        if (len != w.length()) return verify_detail::fail(w, "chain lengths not additive");
        const int n = static_cast<int>(chain->supports.size());
        for (int i = 0; i < n; ++i)
          if (gen_count(chain->supports[static_cast<std::size_t>(i)]) != n - i) return verify_detail::fail(w, "chain supports do not shrink by one");
      }
      return std::nullopt;
    }, c.jobs));
  }
  return out;
}

// Diagram counts over paths against the A series, smooth counts and the
// Catalan/broken chain formulas; generic and specialised enumerators agree.
inline SweepResult verify_staircase_counts(const SweepConfig& c) {
  SweepResult out{"staircase-counts", 0, {}};
  const int N = std::max(c.max_rank, c.chain_max_rank) + 2;
  const auto series = series_coefficients(series_spec("A"), N);
  const auto cat = catalan_numbers(N + 1);
  for (int n = 1; n <= c.max_rank; ++n) {
    const CoxeterSystem& W = build_system(Family::A, n);
    const auto all = enumerate_diagrams(W);
    ++out.checked;
    std::size_t smooth = 0;
    for (const auto& w : enumerate_group(build_system(Family::A, n)))
      if (classify(permutation_of(w)).smooth) ++smooth;
    if (BigInt(all.size()) != series[static_cast<std::size_t>(n)] || all.size() != smooth)
      out.failures.push_back("path " + std::to_string(n) + ": diagrams " + std::to_string(all.size()) + ", series " +
                             series[static_cast<std::size_t>(n)].str() + ", smooth " + std::to_string(smooth));
    std::size_t generic_increasing = 0;
    for (const auto& D : all) {
      const DiagramCheck chk = validate_diagram(D);
      if (!chk.valid) out.failures.push_back("path " + std::to_string(n) + ": emitted invalid diagram: " + chk.witness);
      if (is_increasing(D)) {
        ++generic_increasing;
        if (dyck_decode(W, dyck_encode(D)) != D) out.failures.push_back("path " + std::to_string(n) + ": Dyck round trip failed");
      }
    }
    if (generic_increasing != increasing_chains(n).size())
      out.failures.push_back("path " + std::to_string(n) + ": generic increasing count differs from chain recursion");
  }
  for (int n = 1; n <= c.chain_max_rank; ++n) {
    ++out.checked;
    const auto inc = increasing_chains(n).size();
    const auto brk = broken_chains(n).size();
    if (BigInt(inc) != cat[static_cast<std::size_t>(n)])
      out.failures.push_back("path " + std::to_string(n) + ": increasing " + std::to_string(inc) + " != Catalan");
    if (BigInt(brk) != cat[static_cast<std::size_t>(n + 1)] - cat[static_cast<std::size_t>(n)])
      out.failures.push_back("path " + std::to_string(n) + ": broken " + std::to_string(brk) + " != c_{n+1} - c_n");
  }
  return out;
}

// Nearly-maximal labelled diagrams over the path with n-1 vertices against
// complete-BP elements of S_n, for n = 2 .. max_rank + 1.
inline SweepResult verify_complete_bp_bijection(const SweepConfig& c) {
  SweepResult out{"complete-bp-bijection", 0, {}};
  for (int n = 2; n <= c.max_rank + 1; ++n) {
    ++out.checked;
    const BijectionReport r = complete_bp_bijection_check(n);
    if (!r.ok())
      out.failures.push_back("S_" + std::to_string(n) + ": labelled diagrams " + std::to_string(r.diagrams) + ", distinct images " +
                             std::to_string(r.image) + ", complete-BP elements " + std::to_string(r.target));
  }
  return out;
}

inline std::size_t palindromic_count(const CoxeterSystem& W, int jobs) {
  const auto res = parallel_sweep("", enumerate_group(W), [](const GroupElement& w) -> std::optional<std::string> {
    if (is_rationally_smooth(w)) return std::string();
    return std::nullopt;
  }, jobs);
  return res.failures.size();
}

// BC coefficients against B_n (n <= max_rank, at most 4), D at n = 4,
// affine coefficients against spherical cycle diagrams and affine smooth
// elements (n <= 5 and n <= 4 respectively).
inline SweepResult verify_series_table(const SweepConfig& c) {
  SweepResult out{"series-table", 0, {}};
  const int bmax = std::min(c.max_rank, 4);
  const auto bc = series_coefficients(series_spec("BC"), 8);
  for (int n = 2; n <= bmax; ++n) {
    ++out.checked;
    const std::size_t k = palindromic_count(build_system(Family::B, n), c.jobs);
    if (BigInt(k) != bc[static_cast<std::size_t>(n)])
      out.failures.push_back("B_" + std::to_string(n) + ": palindromic " + std::to_string(k) + ", series " + bc[static_cast<std::size_t>(n)].str());
  }
  {
    ++out.checked;
    const auto d = series_coefficients(series_spec("D"), 8);
    const CoxeterSystem& D4 = build_system(Family::D, 4);
    const std::size_t k = palindromic_count(D4, c.jobs);
    const std::size_t diagrams = enumerate_diagrams(D4).size();
    if (BigInt(k) != d[4] || diagrams != k)
      out.failures.push_back("D_4: palindromic " + std::to_string(k) + ", diagrams " + std::to_string(diagrams) + ", series " + d[4].str());
    const BijectionReport r = smooth_bijection_check(4, Family::D);
    if (!r.ok()) out.failures.push_back("D_4: maximal-labelling images differ from palindromic elements");
  }
  const auto aff = series_coefficients(series_spec("AffineA"), 8);
  for (int n = 2; n <= std::min(std::max(c.max_rank, 2), 5); ++n) {
    ++out.checked;
    const std::size_t k = enumerate_diagrams(build_system(Family::AffineA, n), DiagramFilter::Spherical).size();
    if (BigInt(k) != aff[static_cast<std::size_t>(n)])
      out.failures.push_back("cycle " + std::to_string(n) + ": spherical diagrams " + std::to_string(k) + ", series " + aff[static_cast<std::size_t>(n)].str());
  }
  for (int n = 2; n <= std::min(std::max(c.max_rank, 2), 4); ++n) {
    ++out.checked;
    const BijectionReport r = smooth_bijection_check(n, Family::AffineA);
    if (!r.ok())
      out.failures.push_back("affine " + std::to_string(n) + ": diagrams " + std::to_string(r.diagrams) + ", images " + std::to_string(r.image) +
                             ", pattern-smooth elements " + std::to_string(r.target));
  }
  {
    ++out.checked;
    const auto a = series_coefficients(series_spec("A"), 12);
    const auto t = series_coefficients(series_spec("A-table"), 12);
    if (a != t) out.failures.push_back("type A closed form and table form disagree");
  }
  return out;
}

// Every smooth w: P_w = [m+1]_q P_u with u smooth.
inline SweepResult verify_gasharov(const SweepConfig& c) {
  verify_detail::require_type_a(c, "gasharov");
  SweepResult out{"gasharov", 0, {}};
  for (int r : verify_detail::ranks(c)) {
    const CoxeterSystem& W = build_system(Family::A, r);
    std::vector<GroupElement> smooth;
    for (const auto& w : enumerate_group(W))
      if (classify(permutation_of(w)).smooth) smooth.push_back(w);
    out.merge(parallel_sweep("", smooth, [&](const GroupElement& w) -> std::optional<std::string> {
      const auto step = gasharov_step(permutation_of(w));
      if (!step) return verify_detail::fail(w, "no recursion step");
      if (!classify(step->u).smooth) return verify_detail::fail(w, "flattened element is not smooth");
      const IntPolynomial pu = step->u.size() >= 2 ? poincare(element_of(step->u)) : IntPolynomial{1};
      if (poincare(w) != IntPolynomial::q_integer(step->m + 1) * pu) return verify_detail::fail(w, "P_w != [m+1]_q P_u");
      return std::nullopt;
    }, c.jobs));
  }
  return out;
}

// Rationally smooth elements have a Grassmannian BP, and w or w^{-1} has one at a leaf.
inline SweepResult verify_grassmannian_bp(const SweepConfig& c) {
  SweepResult out{"grassmannian-bp", 0, {}};
  for (int r : verify_detail::ranks(c)) {
    const CoxeterSystem& W = build_system(c.family, r);
    auto elems = enumerate_group(W);
    if (elems.size() > 400) {
      std::mt19937 rng(c.seed);
      std::shuffle(elems.begin(), elems.end(), rng);
      elems.resize(400);
    }
    out.merge(parallel_sweep("", elems, [&](const GroupElement& w) -> std::optional<std::string> {
      if (w.is_identity() || !is_rationally_smooth(w)) return std::nullopt;
      if (grassmannian_bp_candidates(w).empty()) return verify_detail::fail(w, "no Grassmannian BP decomposition");
      if (!has_leaf_bp(w) && !has_leaf_bp(inverse(w))) return verify_detail::fail(w, "no leaf BP for w or its inverse");
      return std::nullopt;
    }, c.jobs));
  }
  return out;
}

namespace verify_detail {

inline const std::vector<StaircaseDiagram>& pool() {
  static const std::vector<StaircaseDiagram> all = [] {
    std::vector<StaircaseDiagram> v;
    for (auto& D : enumerate_diagrams(build_system(Family::A, 5))) v.push_back(D);
    for (auto& D : enumerate_diagrams(build_system(Family::D, 4))) v.push_back(D);
    for (auto& D : enumerate_diagrams(build_system(Family::AffineA, 4), DiagramFilter::Spherical)) v.push_back(D);
    for (auto& D : enumerate_diagrams(build_system(Family::B, 3))) v.push_back(D);
    return v;
  }();
  return all;
}

}  // namespace verify_detail

// Randomised and exhaustive structural properties.
inline SweepResult verify_properties(const SweepConfig& c) {
  SweepResult out{"properties", 0, {}};
  std::mt19937 rng(c.seed);
  const auto& diagrams = verify_detail::pool();
  std::uniform_int_distribution<std::size_t> pick(0, diagrams.size() - 1);
  for (int t = 0; t < c.trials; ++t) {
    const StaircaseDiagram& D = diagrams[pick(rng)];
    const std::string tag = "trial " + std::to_string(t) + " on " + D.system->name();
    Labelling lam;
    for (const auto& cands : block_label_candidates(D, false)) {
      if (cands.empty()) {
        out.failures.push_back(tag + ": block without a valid label");
        break;
      }
      std::uniform_int_distribution<std::size_t> choose(0, cands.size() - 1);
      lam.push_back(cands[choose(rng)]);
    }
    if (lam.size() != D.blocks.size()) continue;
    out.checked += 4;
    const auto e1 = random_linear_extension(D, rng);
    const auto e2 = random_linear_extension(D, rng);
    const GroupElement x = lambda_product(D, lam, e1);
    if (x != lambda_product(D, lam, e2)) out.failures.push_back(tag + ": product depends on the linear extension");
    if (support(x) != D.support()) out.failures.push_back(tag + ": support of the product differs from the diagram");
    const StaircaseDiagram F = flip(D);
    if (!validate_diagram(F).valid) out.failures.push_back(tag + ": flip is not a staircase diagram");
    if (flip(F) != D) out.failures.push_back(tag + ": flip is not an involution");
    const Labelling inv = inverse_labelling(lam);
    if (!labelling_valid(F, inv)) out.failures.push_back(tag + ": inverse labelling invalid on the flip");
    else if (inverse(x) != lambda_product(F, inv, linear_extension(F))) out.failures.push_back(tag + ": inverse law fails");
    if (!iterated_bp_holds(D, lam, e1)) out.failures.push_back(tag + ": iterated BP fails");
  }
  // Exhaustive: P_w = P_{w^-1} and R_w palindromic.
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::G2, 2}}) {
    const CoxeterSystem& W = build_system(f, r);
    const ChamberTable T = chamber_table(W);
    out.merge(parallel_sweep("", enumerate_group(W), [&](const GroupElement& w) -> std::optional<std::string> {
      if (poincare(w) != poincare(inverse(w))) return verify_detail::fail(w, "P_w != P_{w^-1}");
      if (!r_poly_generic(w, T).is_palindromic()) return verify_detail::fail(w, "R_w not palindromic");
      return std::nullopt;
    }, c.jobs));
  }
  // Clique reduction divides the distance polynomial exactly.
  out.merge(parallel_sweep("", enumerate_group(build_system(Family::A, 5)), [](const GroupElement& w) -> std::optional<std::string> {
    const InversionGraph G = inversion_graph(permutation_of(w));
    const auto red = clique_reduction(G);
    if (!red) return std::nullopt;
    const auto q = IntPolynomial::divide_exact(r_poly_graph(G), IntPolynomial::q_integer(red->second + 1));
    if (!q || *q != r_poly_graph(remove_vertex(G, red->first))) return verify_detail::fail(w, "clique reduction does not factor R");
    return std::nullopt;
  }, c.jobs));
  return out;
}

// Polished elements have self-dual intervals; smooth elements have a chain BP factorization.
inline SweepResult verify_pattern_classes(const SweepConfig& c) {
  verify_detail::require_type_a(c, "pattern-classes");
  SweepResult out{"pattern-classes", 0, {}};
  for (int r : verify_detail::ranks(c)) {
    const CoxeterSystem& W = build_system(Family::A, r);
    out.merge(parallel_sweep("", enumerate_group(W), [&](const GroupElement& w) -> std::optional<std::string> {
      const ClassFlags f = classify(permutation_of(w));
      if (f.polished && !interval_is_self_dual(lower_interval(w))) return verify_detail::fail(w, "polished but interval not self-dual");
      if (f.smooth) {
        const auto deg = chain_bp_factorization(w);
        if (!deg) return verify_detail::fail(w, "smooth without a chain BP factorization");
        IntPolynomial prod{1};
        for (int m : *deg) prod *= IntPolynomial::q_integer(m + 1);
        if (prod != poincare(w)) return verify_detail::fail(w, "chain BP degrees do not give P_w");
      }
      return std::nullopt;
    }, c.jobs));
  }
  return out;
}

inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"bp-four-way",    "smoothness",            "pw-eq-rw",     "split-pattern",
                                            "complete-bp",    "staircase-counts",      "complete-bp-bijection",
                                            "series-table",   "gasharov",              "properties",   "grassmannian-bp",
                                            "pattern-classes"};
  return ids;
}

inline SweepResult verify_theorem(const std::string& id, const SweepConfig& c) {
  if (id == "bp-four-way") return verify_bp_four_way(c);
  if (id == "smoothness") return verify_smoothness(c);
  if (id == "pw-eq-rw") return verify_pw_eq_rw(c);
  if (id == "split-pattern") return verify_split_pattern(c);
  if (id == "complete-bp") return verify_complete_bp(c);
  if (id == "staircase-counts") return verify_staircase_counts(c);
  if (id == "complete-bp-bijection") return verify_complete_bp_bijection(c);
  if (id == "series-table") return verify_series_table(c);
  if (id == "gasharov") return verify_gasharov(c);
  if (id == "properties") return verify_properties(c);
  if (id == "grassmannian-bp") return verify_grassmannian_bp(c);
  if (id == "pattern-classes") return verify_pattern_classes(c);
  throw std::invalid_argument("unknown theorem id '" + id + "'");
}

}  // namespace bruhat
