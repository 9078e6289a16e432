#include "bruhat_forge/arrangements.hpp"
#include "bruhat_forge/literal.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace bruhat;

TEST(InversionSet, Examples) {
  const auto w = parse_element("2431", Family::A);
  const auto inv = inversion_set(w);
  EXPECT_EQ(static_cast<int>(inv.roots.size()), w.length());
  std::set<std::pair<int, int>> pairs;
  for (int k : inv.roots) pairs.insert(type_a_pair(w.system().roots()->positive_roots[static_cast<std::size_t>(k)]));
  // Root e_i - e_j is inverted when positions i < j carry decreasing values.
  EXPECT_EQ(pairs, (std::set<std::pair<int, int>>{{1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_TRUE(inversion_set(w.system().identity()).roots.empty());
  EXPECT_THROW(inversion_set(parse_element("s1s2", build_system(Family::FreeUniversal, 2))), std::invalid_argument);
  EXPECT_THROW(inversion_set(parse_element("s0", build_system(Family::AffineA, 3))), std::invalid_argument);
}

TEST(InversionSet, SizeIsLengthAcrossFamilies) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::D, 4}, {Family::G2, 2}})
    for (const auto& w : enumerate_group(build_system(f, r))) EXPECT_EQ(static_cast<int>(inversion_set(w).roots.size()), w.length());
}

TEST(RPoly, Examples) {
  EXPECT_EQ(r_poly_generic(parse_element("4321", Family::A)), IntPolynomial({1, 3, 5, 6, 5, 3, 1}));
  EXPECT_EQ(r_poly_generic(parse_element("2431", Family::A)), IntPolynomial({1, 3, 4, 3, 1}));
  const auto R4231 = r_poly_generic(parse_element("4231", Family::A));
  EXPECT_EQ(R4231, IntPolynomial({1, 4, 4, 4, 4, 1}));
  EXPECT_EQ(R4231.evaluate(1), 18);
  const auto& B2 = build_system(Family::B, 2);
  EXPECT_EQ(r_poly_generic(longest_element(B2, B2.all_generators())), IntPolynomial({1, 2, 2, 2, 1}));
  EXPECT_EQ(r_poly_generic(B2.identity()), IntPolynomial({1}));
}

TEST(RPoly, ReportForNonPalindromicCase) {
  const auto rep = check_pw_equals_rw(parse_element("4231", Family::A));
  EXPECT_EQ(rep.P, IntPolynomial({1, 3, 5, 6, 4, 1}));
  EXPECT_FALSE(rep.palindromic);
  EXPECT_FALSE(rep.equal);
  EXPECT_TRUE(rep.theorem_holds());
}

TEST(RPoly, GraphAgreesWithAcyclicOrientationOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : oracle::all_perms(n)) {
      const auto G = inversion_graph(p);
      EXPECT_EQ(r_poly_graph(G), IntPolynomial::from_counts(oracle::acyclic_orientation_counts(n, G.edges))) << permutation_string(p);
    }
}

TEST(RPoly, GenericAgreesWithGraph) {
  for (int n = 2; n <= 5; ++n) {
    const auto& W = build_system(Family::A, n - 1);
    const auto T = chamber_table(W);
    for (const auto& p : oracle::all_perms(n)) EXPECT_EQ(r_poly_generic(element_of(p), T), r_poly_graph(inversion_graph(p)));
  }
}

TEST(RPoly, LongestElementsHaveEqualPolynomials) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G2, 2}}) {
    const auto& W = build_system(f, r);
    const auto rep = check_pw_equals_rw(longest_element(W, W.all_generators()));
    EXPECT_TRUE(rep.equal) << W.name();
    EXPECT_TRUE(rep.palindromic);
  }
}

TEST(CliqueReduction, Examples) {
  const auto G = inversion_graph(parse_permutation("2431"));
  EXPECT_EQ(clique_reduction(G), std::make_optional(std::make_pair(2, 2)));
  EXPECT_FALSE(clique_reduction(InversionGraph{1, {}}).has_value());
  EXPECT_FALSE(clique_reduction(inversion_graph(parse_permutation("4231"))).has_value());
  const auto H = remove_vertex(G, 2);
  EXPECT_EQ(H.n, 3);
  EXPECT_EQ(H.edges, (std::vector<std::pair<int, int>>{{1, 3}, {2, 3}}));
  EXPECT_EQ(r_poly_graph(G), IntPolynomial::q_integer(3) * r_poly_graph(H));
}

TEST(InversionGraph, DotExport) {
  const std::string dot = inversion_graph_dot(inversion_graph(parse_permutation("2431")), "g");
  EXPECT_EQ(dot.rfind("graph g {", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) ++edges;
  EXPECT_EQ(edges, 4u);
}
