#include "bruhat_forge/bruhat.hpp"
#include "bruhat_forge/literal.hpp"
#include "bruhat_forge/patterns.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <random>
#include <thread>

using namespace bruhat;

TEST(BuildSystem, SmallExamples) {
  const auto& A2 = build_system(Family::A, 2);
  EXPECT_EQ(A2.roots()->count(), 3);
  EXPECT_EQ(A2.m(0, 1), 3);
  const auto& G2 = build_system(Family::G2, 2);
  EXPECT_EQ(G2.roots()->count(), 6);
  EXPECT_EQ(G2.m(0, 1), 6);
  EXPECT_EQ(build_system(Family::B, 3).roots()->count(), oracle::type_b_root_count(3));
}

TEST(BuildSystem, RootCounts) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(build_system(Family::A, n).roots()->count(), n * (n + 1) / 2);
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(build_system(Family::B, n).roots()->count(), n * n);
    EXPECT_EQ(build_system(Family::C, n).roots()->count(), n * n);
    EXPECT_EQ(build_system(Family::B, n).roots()->count(), oracle::type_b_root_count(n));
  }
  for (int n = 3; n <= 6; ++n) EXPECT_EQ(build_system(Family::D, n).roots()->count(), n * (n - 1));
  EXPECT_EQ(build_system(Family::F4, 4).roots()->count(), 24);
  EXPECT_EQ(build_system(Family::E, 6).roots()->count(), 36);
  EXPECT_EQ(build_system(Family::E, 7).roots()->count(), 63);
  EXPECT_EQ(build_system(Family::E, 8).roots()->count(), 120);
}

TEST(BuildSystem, MatrixInvariants) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::D, 5}, {Family::F4, 4},
                                                        {Family::G2, 2}, {Family::AffineA, 4}, {Family::AffineA, 2}, {Family::FreeUniversal, 3}}) {
    const auto& W = build_system(f, r);
    for (int s = 0; s < r; ++s) {
      EXPECT_EQ(W.m(s, s), 1);
      for (int t = 0; t < r; ++t) {
        EXPECT_EQ(W.m(s, t), W.m(t, s));
        if (s != t) {
          EXPECT_TRUE(W.m(s, t) >= 2 || W.m(s, t) == kInfinite);
          EXPECT_EQ(W.adjacent(s, t), W.m(s, t) >= 3 || W.m(s, t) == kInfinite);
        }
      }
    }
  }
  const auto& F = build_system(Family::FreeUniversal, 3);
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t)
      if (s != t) EXPECT_EQ(F.m(s, t), kInfinite);
  EXPECT_EQ(build_system(Family::AffineA, 2).m(0, 1), kInfinite);
}

TEST(BuildSystem, SimpleReflectionsPermuteOtherPositiveRoots) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::F4, 4}, {Family::G2, 2}}) {
    const auto& W = build_system(f, r);
    const RootSystem& rs = *W.roots();
    for (int s = 0; s < r; ++s) {
      const IntMatrix M = W.action_matrix(W.generator(s));
      std::set<int> image;
      for (int k = 0; k < rs.count(); ++k) {
        const auto beta = M.apply(rs.positive_roots[static_cast<std::size_t>(k)]);
        const int idx = rs.find(beta);
        std::vector<int> simple(static_cast<std::size_t>(r), 0);
        simple[static_cast<std::size_t>(s)] = 1;
        if (rs.positive_roots[static_cast<std::size_t>(k)] == simple) {
          EXPECT_LT(root_sign(beta), 0);
        } else {
          ASSERT_GE(idx, 0) << W.name() << " s" << s;
          image.insert(idx);
        }
      }
      EXPECT_EQ(static_cast<int>(image.size()), rs.count() - 1);
    }
  }
}

TEST(BuildSystem, InvalidRanks) {
  EXPECT_THROW(build_system(Family::D, 2), std::invalid_argument);
  EXPECT_THROW(build_system(Family::F4, 3), std::invalid_argument);
  EXPECT_THROW(build_system(Family::G2, 3), std::invalid_argument);
  EXPECT_THROW(build_system(Family::AffineA, 1), std::invalid_argument);
  EXPECT_THROW(build_system(Family::E, 5), std::invalid_argument);
  EXPECT_THROW(build_system(Family::A, 0), std::invalid_argument);
}

TEST(Multiply, Examples) {
  const auto& A2 = build_system(Family::A, 2);
  EXPECT_TRUE(multiply(A2.generator(0), A2.generator(0)).is_identity());
  const GroupElement x = multiply(parse_element("s1s2", A2), parse_element("s1", A2));
  EXPECT_EQ(x, parse_element("s1s2s1", A2));
  EXPECT_EQ(x.length(), 3);
  const GroupElement p = parse_element("2134", Family::A), q = parse_element("1324", Family::A);
  EXPECT_EQ(to_literal(multiply(p, q)), "2314");
}

TEST(Multiply, AgreesWithWordConcatenation) {
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::D, 4}, {Family::G2, 2}, {Family::F4, 4}}) {
    const auto& W = build_system(f, r);
    const auto elems = enumerate_group(W);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 200; ++t) {
      const auto& x = elems[pick(rng)];
      const auto& y = elems[pick(rng)];
      auto word = reduced_word(x);
      const auto wy = reduced_word(y);
      word.insert(word.end(), wy.begin(), wy.end());
      EXPECT_EQ(multiply(x, y), W.from_word(word)) << W.name();
      EXPECT_TRUE(multiply(x, inverse(x)).is_identity());
    }
  }
}

TEST(Length, MatchesInversionCountAndBfsDepth) {
  for (const auto& p : oracle::all_perms(5)) EXPECT_EQ(element_of(p).length(), oracle::inversions(p));
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G2, 2}, {Family::F4, 4}}) {
    const auto& W = build_system(f, r);
    // BFS depth from the identity is the word length.
    std::map<GroupElement, int> depth{{W.identity(), 0}};
    std::vector<GroupElement> frontier{W.identity()};
    for (int d = 1; !frontier.empty(); ++d) {
      std::vector<GroupElement> next;
      for (const auto& x : frontier)
        for (int s = 0; s < r; ++s) {
          GroupElement y = W.right_mul(x, s);
          if (depth.emplace(y, d).second) next.push_back(y);
        }
      frontier = next;
    }
    for (const auto& [x, d] : depth) EXPECT_EQ(x.length(), d) << W.name() << " " << to_literal(x);
  }
  const auto& Aff = build_system(Family::AffineA, 3);
  for (const auto& w : enumerate_group(Aff, 6)) EXPECT_EQ(static_cast<int>(reduced_word(w).size()), w.length());
}

TEST(Length, AffineWindowNormalization) {
  const auto& Aff = build_system(Family::AffineA, 4);
  for (const auto& w : enumerate_group(Aff, 5)) {
    int sum = 0;
    for (int v : w.canonical()) sum += v;
    EXPECT_EQ(sum, 10);
  }
  EXPECT_THROW(Aff.from_data({1, 2, 3, 5}), std::invalid_argument);
  EXPECT_EQ(parse_element("[8,1,-2,3]", Family::AffineA).length(), parse_element("[8,1,-2,3]", Aff).length());
}

TEST(CanonicalForm, EqualElementsCompareEqual) {
  const auto& A3 = build_system(Family::A, 3);
  EXPECT_EQ(parse_element("s1s2s1", A3), parse_element("s2s1s2", A3));
  EXPECT_EQ(parse_element("s1s2s1", A3).hash(), parse_element("s2s1s2", A3).hash());
  EXPECT_EQ(parse_element("s1 s3", A3), parse_element("s3s1", A3));
  const auto& G2 = build_system(Family::G2, 2);
  EXPECT_EQ(parse_element("s1s2s1s2s1s2", G2), parse_element("s2s1s2s1s2s1", G2));
  const auto& F = build_system(Family::FreeUniversal, 3);
  EXPECT_NE(parse_element("s1s2", F), parse_element("s2s1", F));
  EXPECT_TRUE(parse_element("s1s2s2s1", F).is_identity());
}

TEST(Descents, Examples) {
  const auto& A3 = build_system(Family::A, 3);
  const auto w = parse_element("s1s2s1s3", A3);
  EXPECT_EQ(descents(w, Side::Left), gen_set({0, 1}));
  EXPECT_EQ(descents(w, Side::Right), gen_set({0, 2}));
  EXPECT_EQ(descents(A3.identity(), Side::Left), 0u);
  for (const auto& x : enumerate_group(build_system(Family::B, 3))) EXPECT_EQ(descents(x, Side::Left), descents(inverse(x), Side::Right));
}

TEST(Support, ExamplesAndBruhatCharacterization) {
  const auto& A3 = build_system(Family::A, 3);
  EXPECT_EQ(support(parse_element("s1s2s1s3", A3)), gen_set({0, 1, 2}));
  EXPECT_EQ(support(A3.identity()), 0u);
  EXPECT_EQ(support(parse_element("s2s1s3s2", A3)), gen_set({0, 1, 2}));
  for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::B, 3}, {Family::G2, 2}}) {
    const auto& W = build_system(f, r);
    for (const auto& w : enumerate_group(W)) {
      GenSet below = 0;
      for (int s = 0; s < r; ++s)
        if (bruhat_leq(W.generator(s), w)) below |= gen_bit(s);
      GenSet letters = 0;
      for (int s : reduced_word(w)) letters |= gen_bit(s);
      EXPECT_EQ(support(w), below);
      EXPECT_EQ(support(w), letters);
    }
  }
}

TEST(Enumerate, GroupOrders) {
  const auto S3 = enumerate_group(build_system(Family::A, 2));
  EXPECT_EQ(S3.size(), 6u);
  std::vector<int> profile(4, 0);
  for (const auto& w : S3) ++profile[static_cast<std::size_t>(w.length())];
  EXPECT_EQ(profile, (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(enumerate_group(build_system(Family::B, 2)).size(), 8u);
  EXPECT_EQ(enumerate_group(build_system(Family::F4, 4)).size(), 1152u);
  EXPECT_EQ(enumerate_group(build_system(Family::D, 4)).size(), 192u);
  EXPECT_THROW(enumerate_group(build_system(Family::AffineA, 3)), std::invalid_argument);
}

TEST(Enumerate, LengthOrderAndRankProduct) {
  for (int n = 1; n <= 5; ++n) {
    const auto elems = enumerate_group(build_system(Family::A, n));
    std::vector<long long> counts;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (i) EXPECT_LE(elems[i - 1].length(), elems[i].length());
      const auto L = static_cast<std::size_t>(elems[i].length());
      if (counts.size() <= L) counts.resize(L + 1, 0);
      ++counts[L];
    }
    IntPolynomial prod{1};
    for (int k = 1; k <= n + 1; ++k) prod *= IntPolynomial::q_integer(k);
    EXPECT_EQ(IntPolynomial::from_counts(counts), prod);
  }
}

TEST(Literals, RoundTrip) {
  EXPECT_EQ(parse_element("2431", Family::A).system().rank(), 3);
  const auto b = parse_element("-2,1,-3", Family::B);
  EXPECT_EQ(b.system().rank(), 3);
  EXPECT_EQ(parse_element(to_literal(b), Family::B), b);
  const auto a = parse_element("[8,1,-2,3]", Family::AffineA);
  EXPECT_EQ(to_literal(a), "[8,1,-2,3]");
  const auto f = parse_element("s1 s2 s1 s4", Family::F4);
  EXPECT_EQ(parse_element(to_literal(f), Family::F4), f);
  EXPECT_EQ(to_word_string(parse_element("e", Family::A, 3)), "e");
  EXPECT_THROW(parse_element("2234", Family::A), std::invalid_argument);
  EXPECT_THROW(parse_element("s9", Family::A, 3), std::invalid_argument);
  EXPECT_THROW(parse_element("x1", Family::A), std::invalid_argument);
}

TEST(Concurrency, SharedSystemsAcrossThreads) {
  std::atomic<int> mismatches{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&] {
      const auto& W = build_system(Family::B, 3);
      for (const auto& w : enumerate_group(W))
        if (multiply(w, inverse(w)) != W.identity()) ++mismatches;
    });
  for (auto& th : pool) th.join();
  EXPECT_EQ(mismatches.load(), 0);
  EXPECT_EQ(&build_system(Family::B, 3), &build_system(Family::B, 3));
}
