#pragma once

#include "bruhat.hpp"
#include "coxeter.hpp"
#include "patterns.hpp"
#include "polynomial.hpp"

#include <bitset>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace bruhat {

// Subset of positive roots, indexed as in RootSystem::positive_roots.
using RootMask = std::bitset<128>;

struct RootMaskHash {
  std::size_t operator()(const RootMask& m) const { return std::hash<RootMask>{}(m); }
};

struct InversionArrangement {
  GroupElement w;
  std::vector<int> roots;  // indices of positive roots sent negative by w
  RootMask mask;
};

inline const RootSystem& require_roots(const CoxeterSystem& W) {
  if (!W.roots()) throw std::invalid_argument(W.name() + " has no root backend");
  return *W.roots();
}

inline RootMask inversion_mask(const GroupElement& w) {
  const RootSystem& rs = require_roots(w.system());
  const IntMatrix M = w.system().action_matrix(w);
  RootMask out;
  for (int k = 0; k < rs.count(); ++k)
    if (root_sign(M.apply(rs.positive_roots[static_cast<std::size_t>(k)])) < 0) out.set(static_cast<std::size_t>(k));
  return out;
}

inline InversionArrangement inversion_set(const GroupElement& w) {
  InversionArrangement A{w, {}, inversion_mask(w)};
  for (std::size_t k = 0; k < 128; ++k)
    if (A.mask.test(k)) A.roots.push_back(static_cast<int>(k));
  return A;
}

// Type A root alpha_i + ... + alpha_{j-1} as the pair (i, j), 1-based.
inline std::pair<int, int> type_a_pair(const std::vector<int>& root) {
  int i = -1, j = -1;
  for (int k = 0; k < static_cast<int>(root.size()); ++k)
    if (root[static_cast<std::size_t>(k)]) {
      if (i < 0) i = k;
      j = k;
    }
  return {i + 1, j + 2};
}

struct InversionGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (i, j), 1-based, i < j

  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (auto [i, j] : edges)
      if (i == a && j == b) return true;
    return false;
  }
};

inline InversionGraph inversion_graph(const Permutation& w) {
  InversionGraph G{static_cast<int>(w.size()), {}};
  for (int i = 0; i < G.n; ++i)
    for (int j = i + 1; j < G.n; ++j)
      if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) G.edges.emplace_back(i + 1, j + 1);
  return G;
}

// Sum over acyclic orientations of q^des, des counting edges directed from the larger vertex.
inline IntPolynomial r_poly_graph(const InversionGraph& G) {
  if (G.n > 64) throw std::invalid_argument("r_poly_graph: too many vertices");
  std::vector<std::uint64_t> out_adj(static_cast<std::size_t>(G.n + 1), 0);
  std::vector<long long> counts(G.edges.size() + 1, 0);
  auto reaches = [&](int from, int to) {
    std::uint64_t seen = std::uint64_t{1} << from, frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v = 0; frontier; ++v, frontier >>= 1)
        if (frontier & 1U) next |= out_adj[static_cast<std::size_t>(v)];
      next &= ~seen;
      if ((next >> to) & 1U) return true;
      seen |= next;
      frontier = next;
    }
    return from == to;
  };
  std::function<void(std::size_t, int)> go = [&](std::size_t e, int des) {
    if (e == G.edges.size()) {
      ++counts[static_cast<std::size_t>(des)];
      return;
    }
    const auto [i, j] = G.edges[e];
    if (!reaches(j, i)) {
      out_adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      go(e + 1, des);
      out_adj[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
    }
    if (!reaches(i, j)) {
      out_adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      go(e + 1, des + 1);
      out_adj[static_cast<std::size_t>(j)] &= ~(std::uint64_t{1} << i);
    }
  };
  go(0, 0);
  return IntPolynomial::from_counts(counts);
}

// Inversion masks of x^{-1} for every x in W; shared by repeated r_poly_generic calls.
struct ChamberTable {
  const CoxeterSystem* system = nullptr;
  std::vector<RootMask> inverse_masks;
};

inline ChamberTable chamber_table(const CoxeterSystem& W) {
  if (!W.is_finite()) throw std::invalid_argument("chamber enumeration needs a finite group");
  require_roots(W);
  ChamberTable T{&W, {}};
  for (const auto& x : enumerate_group(W)) T.inverse_masks.push_back(inversion_mask(inverse(x)));
  return T;
}

// Chambers of the inversion arrangement are the distinct restricted sign vectors
// of x^{-1}; the distance is the number of minus signs.
inline IntPolynomial r_poly_generic(const GroupElement& w, const ChamberTable& T) {
  if (T.system != w.system_ptr()) throw std::invalid_argument("chamber table from another system");
  const RootMask phi = inversion_mask(w);
  std::unordered_set<RootMask, RootMaskHash> chambers;
  std::vector<long long> counts(static_cast<std::size_t>(w.length() + 1), 0);
  for (const auto& m : T.inverse_masks) {
    const RootMask sign = m & phi;
    if (chambers.insert(sign).second) ++counts[sign.count()];
  }
  return IntPolynomial::from_counts(counts);
}

inline IntPolynomial r_poly_generic(const GroupElement& w) { return r_poly_generic(w, chamber_table(w.system())); }

// Vertex whose neighbours form a clique lying entirely on one side of it.
// Returns (vertex, degree) maximising the degree, smallest vertex on ties;
// isolated vertices give only the trivial factor and are not reported.
inline std::optional<std::pair<int, int>> clique_reduction(const InversionGraph& G) {
  std::optional<std::pair<int, int>> best;
  for (int k = 1; k <= G.n; ++k) {
    std::vector<int> nb;
    for (auto [i, j] : G.edges) {
      if (i == k) nb.push_back(j);
      if (j == k) nb.push_back(i);
    }
    if (nb.empty()) continue;
    bool below = true, above = true;
    for (int x : nb) {
      below &= x < k;
      above &= x > k;
    }
    if (!below && !above) continue;
    bool clique = true;
    for (std::size_t a = 0; a < nb.size() && clique; ++a)
      for (std::size_t b = a + 1; b < nb.size() && clique; ++b) clique = G.has_edge(nb[a], nb[b]);
    if (!clique) continue;
    const int m = static_cast<int>(nb.size());
    if (!best || m > best->second) best = std::make_pair(k, m);
  }
  return best;
}

inline InversionGraph remove_vertex(const InversionGraph& G, int k) {
  InversionGraph H{G.n - 1, {}};
  auto relabel = [k](int v) { return v > k ? v - 1 : v; };
  for (auto [i, j] : G.edges)
    if (i != k && j != k) H.edges.emplace_back(relabel(i), relabel(j));
  return H;
}

struct PwRwReport {
  GroupElement w;
  IntPolynomial P, R;
  bool palindromic = false;
  bool equal = false;
  bool theorem_holds() const { return equal == palindromic; }
};

inline PwRwReport check_pw_equals_rw(const GroupElement& w, const ChamberTable& T) {
  PwRwReport r{w, poincare(w), r_poly_generic(w, T), false, false};
  r.palindromic = r.P.is_palindromic();
  r.equal = r.P == r.R;
  return r;
}

inline PwRwReport check_pw_equals_rw(const GroupElement& w) { return check_pw_equals_rw(w, chamber_table(w.system())); }

inline std::string inversion_graph_dot(const InversionGraph& G, const std::string& name = "G") {
  std::string out = "graph " + name + " {\n";
  for (int v = 1; v <= G.n; ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [i, j] : G.edges) out += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
  return out + "}\n";
}

}  // namespace bruhat
