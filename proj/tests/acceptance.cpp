// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "bruhat_forge/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace bruhat;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<SweepResult()> run;
};

SweepResult sweep(const std::string& id, Family f, int min_rank, int max_rank) {
  SweepConfig c;
  c.family = f;
  c.min_rank = min_rank;
  c.max_rank = max_rank;
  return verify_theorem(id, c);
}

SweepResult all_of(const std::string& name, std::vector<SweepResult> parts) {
  SweepResult out{name, 0, {}};
  for (auto& p : parts) out.merge(std::move(p));
  return out;
}

SweepResult worked_examples() {
  SweepResult out{"worked-examples", 0, {}};
  auto expect = [&](const std::string& what, const IntPolynomial& got, const IntPolynomial& want) {
    ++out.checked;
    if (got != want) out.failures.push_back(what + ": got " + got.to_string() + ", expected " + want.to_string());
  };
  const auto& A2 = build_system(Family::A, 2);
  const auto& A3 = build_system(Family::A, 3);
  expect("P(s1s2s1)", poincare(parse_element("s1s2s1", A2)), IntPolynomial{1, 2, 2, 1});

  const GroupElement w = parse_element("s1s2s3s2s1", A3);
  const GenSet J = gen_set({0, 2});
  const auto pd = parabolic_decompose(w, J);
  expect("relative factor", relative_poincare(pd.v, J), IntPolynomial{1, 1, 2, 1});
  expect("parabolic factor", poincare(pd.u), IntPolynomial{1, 2, 1});
  expect("P(s1s2s3s2s1)", poincare(w), IntPolynomial{1, 1, 2, 1} * IntPolynomial{1, 2, 1});

  auto R = [](const char* perm) { return r_poly_generic(element_of(parse_permutation(perm))); };
  auto Rg = [](const char* perm) { return r_poly_graph(inversion_graph(parse_permutation(perm))); };
  expect("R(321)", R("321"), IntPolynomial{1, 2, 2, 1});
  expect("R(312)", R("312"), IntPolynomial{1, 2, 1});
  expect("R(4321)", R("4321"), IntPolynomial{1, 3, 5, 6, 5, 3, 1});
  expect("R(2431)", R("2431"), IntPolynomial{1, 3, 4, 3, 1});
  // R values are also cross-checked against the graph form below.
  expect("R(4231)", R("4231"), IntPolynomial{1, 4, 4, 4, 4, 1});
  expect("P(4231)", poincare(element_of(parse_permutation("4231"))), IntPolynomial{1, 3, 5, 6, 4, 1});
  for (const char* p : {"321", "312", "4321", "2431", "4231"}) expect(std::string("graph R(") + p + ")", Rg(p), R(p));
  ++out.checked;
  if (R("4231").evaluate(1) != 18) out.failures.push_back("R(4231)(1) != 18");
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "four-way BP equivalence, S_n (n<=5) and B_3", 120,
       [] { return all_of("bp-four-way", {sweep("bp-four-way", Family::A, 1, 4), sweep("bp-four-way", Family::B, 3, 3)}); }},
      {2, "pattern smoothness <=> palindromic P_w, S_n (n<=7)", 300, [] { return sweep("smoothness", Family::A, 1, 6); }},
      {3, "P_w = R_w <=> rationally smooth, S_n (n<=6), B_3, G_2, D_4", 600,
       [] {
         return all_of("pw-eq-rw", {sweep("pw-eq-rw", Family::A, 1, 5), sweep("pw-eq-rw", Family::B, 3, 3),
                                    sweep("pw-eq-rw", Family::G2, 2, 2), sweep("pw-eq-rw", Family::D, 4, 4)});
       }},
      {4, "worked-example polynomials", 60, worked_examples},
      {5, "split-pattern theorem, S_n (n<=6), all r", 300, [] { return sweep("split-pattern", Family::A, 1, 5); }},
      {6, "complete-BP pattern theorem, S_n (n<=7)", 600, [] { return sweep("complete-bp", Family::A, 1, 6); }},
      {7, "staircase counts (paths n<=7; chains n<=10)", 120,
       [] {
         SweepConfig c;
         c.max_rank = 7;
         c.chain_max_rank = 10;
         return verify_theorem("staircase-counts", c);
       }},
      {8, "complete-BP bijection, n<=6", 300,
       [] {
         SweepConfig c;
         c.max_rank = 5;
         return verify_theorem("complete-bp-bijection", c);
       }},
      {9, "series table: BC (n<=4), D_4, affine (n<=5)", 600,
       [] {
         SweepConfig c;
         c.max_rank = 5;
         return verify_theorem("series-table", c);
       }},
      {10, "flattening recursion on smooth S_6", 120, [] { return sweep("gasharov", Family::A, 5, 5); }},
      {11, "property suites (1000 random labelled diagrams)", 300,
       [] {
         SweepConfig c;
         c.trials = 1000;
         return verify_theorem("properties", c);
       }},
  };
  bool all_pass = true;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepResult r;
    std::string error;
    try {
      r = cr.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = error.empty() && r.passed() && secs <= cr.limit_seconds;
    all_pass &= pass;
    std::printf("[%s] criterion %d: %s (checked %zu, failures %zu, %.1fs / limit %.0fs)\n", pass ? "PASS" : "FAIL", cr.id, cr.title.c_str(),
                r.checked, r.failures.size(), secs, cr.limit_seconds);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) std::printf("    %s\n", r.failures[i].c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
