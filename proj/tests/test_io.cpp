#include "bruhat_forge/io.hpp"
#include "bruhat_forge/sweep.hpp"

#include <gtest/gtest.h>

using namespace bruhat;

TEST(Json, PolynomialRoundTrip) {
  const IntPolynomial p{1, 3, 5, 6, 4, 1};
  EXPECT_EQ(to_json(p).dump(), "[1,3,5,6,4,1]");
  EXPECT_EQ(polynomial_from_json(to_json(p)), p);
  IntPolynomial big{1};
  for (int i = 0; i < 90; ++i) big *= IntPolynomial{1, 1};
  const Json j = to_json(big);
  EXPECT_TRUE(j[45].is_string());
  EXPECT_TRUE(j[0].is_number());
  EXPECT_EQ(polynomial_from_json(j), big);
  EXPECT_EQ(polynomial_from_json(Json::parse(j.dump())), big);
}

TEST(Json, ElementAndInterval) {
  const auto& A2 = build_system(Family::A, 2);
  const auto w = parse_element("s1s2s1", A2);
  const Json e = to_json(w);
  EXPECT_EQ(e.at("literal"), "321");
  EXPECT_EQ(e.at("length"), 3);
  const Json I = to_json(lower_interval(w));
  EXPECT_EQ(I.at("nodes").size(), 6u);
  EXPECT_EQ(I.at("covers").size(), 8u);
  EXPECT_EQ(parse_element(I.at("top").at("literal").get<std::string>(), A2), w);
}

TEST(Json, VerdictKeys) {
  const auto& A3 = build_system(Family::A, 3);
  const Json v = to_json(is_bp(parse_element("s1s2s3s2s1", A3), gen_set({0, 2}), true));
  EXPECT_TRUE(v.at("isBp").get<bool>());
  for (const char* k : {"descentContainment", "factorization", "bijection", "maximality"}) EXPECT_TRUE(v.at("witnesses").contains(k)) << k;
  EXPECT_EQ(v.at("decomposition").at("J"), Json::array({1, 3}));
  const Json quick = to_json(is_bp(parse_element("s1s2s3s2s1", A3), gen_set({0, 2})));
  EXPECT_FALSE(quick.at("witnesses").contains("bijection"));
  const Json r = to_json(check_pw_equals_rw(parse_element("4231", Family::A)));
  EXPECT_EQ(r.at("R"), Json::parse("[1,4,4,4,4,1]"));
  EXPECT_FALSE(r.at("equal").get<bool>());
}

TEST(Json, DiagramRoundTrip) {
  for (int n = 1; n <= 4; ++n) {
    const auto& W = build_system(Family::A, n);
    for (const auto& D : enumerate_diagrams(W)) EXPECT_EQ(diagram_from_json(Json::parse(to_json(D).dump()), W), D);
  }
  const auto& Aff = build_system(Family::AffineA, 3);
  for (const auto& D : enumerate_diagrams(Aff)) EXPECT_EQ(diagram_from_json(to_json(D), Aff), D);
  EXPECT_THROW(diagram_from_json(Json::parse(R"({"blocks":[[9]],"covers":[]})"), build_system(Family::A, 3)), std::invalid_argument);
}

TEST(Dot, IntervalAndDiagram) {
  const auto w = parse_element("s1s2s1", build_system(Family::A, 2));
  const std::string dot = interval_dot(lower_interval(w));
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t k = 0;
    for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++k;
    return k;
  };
  EXPECT_EQ(count(dot, "label="), 6u);
  EXPECT_EQ(count(dot, "->"), 8u);
  const auto& A3 = build_system(Family::A, 3);
  const auto D = make_diagram(A3, {interval_set(1, 2), interval_set(2, 3)}, {{0, 1}});
  const std::string dd = diagram_dot(D);
  EXPECT_EQ(count(dd, "label="), 2u);
  EXPECT_EQ(count(dd, "->"), 1u);
}

TEST(Sweep, DeterministicAcrossJobCounts) {
  std::vector<int> items(1000);
  for (int i = 0; i < 1000; ++i) items[static_cast<std::size_t>(i)] = i;
  auto check = [](int x) -> std::optional<std::string> {
    if (x % 7 == 3) return std::to_string(x);
    return std::nullopt;
  };
  const auto one = parallel_sweep("s", items, check, 1);
  for (int jobs : {2, 3, 8}) {
    const auto many = parallel_sweep("s", items, check, jobs);
    EXPECT_EQ(many.failures, one.failures);
    EXPECT_EQ(many.checked, one.checked);
  }
  EXPECT_EQ(one.failures.front(), "3");
  EXPECT_EQ(parallel_sweep("e", std::vector<int>{}, check, 4).checked, 0u);
  EXPECT_THROW(parallel_sweep("t", items, [](int x) -> std::optional<std::string> {
                 if (x == 500) throw std::runtime_error("boom");
                 return std::nullopt;
               }, 4),
               std::runtime_error);
}
