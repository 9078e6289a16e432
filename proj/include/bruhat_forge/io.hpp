#pragma once

#include "arrangements.hpp"
#include "bp.hpp"
#include "bruhat.hpp"
#include "literal.hpp"
#include "polynomial.hpp"
#include "staircase.hpp"

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace bruhat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// Coefficients that fit in 64 bits are numbers, larger ones decimal strings.
inline Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      out.push_back(static_cast<long long>(c));
    else
      out.push_back(c.str());
  }
  return out;
}

inline IntPolynomial polynomial_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(x.is_string() ? BigInt(x.get<std::string>()) : BigInt(x.get<long long>()));
  return IntPolynomial(c);
}

inline Json to_json(const GroupElement& w) {
  return Json{{"system", w.system().name()}, {"literal", to_literal(w)}, {"word", to_word_string(w)}, {"length", w.length()}};
}

inline Json gen_set_json(const CoxeterSystem& W, GenSet J) {
  Json out = Json::array();
  for (int s : gen_list(J)) out.push_back(W.label(s));
  return out;
}

inline Json to_json(const Interval& I) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& z : I.elements) nodes.push_back(Json{{"word", to_word_string(z)}, {"literal", to_literal(z)}, {"rank", z.length()}});
  for (auto [a, b] : I.covers) edges.push_back(Json::array({a, b}));
  return Json{{"top", to_json(I.top)}, {"nodes", nodes}, {"covers", edges}};
}

// Hasse diagram, one node per element labelled by its reduced word.
inline std::string interval_dot(const Interval& I, const std::string& name = "interval") {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < I.elements.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + to_word_string(I.elements[i]) + "\"];\n";
  for (auto [a, b] : I.covers) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

inline Json to_json(const ParabolicDecomposition& pd) {
  return Json{{"w", to_json(pd.w)}, {"v", to_json(pd.v)}, {"u", to_json(pd.u)}, {"J", gen_set_json(pd.w.system(), pd.J)}};
}

inline Json to_json(const BpVerdict& v) {
  Json w{{"descentContainment", v.witnesses.descent_containment}};
  if (v.witnesses.factorization) w["factorization"] = *v.witnesses.factorization;
  if (v.witnesses.bijection) w["bijection"] = *v.witnesses.bijection;
  if (v.witnesses.maximality) w["maximality"] = *v.witnesses.maximality;
  return Json{{"isBp", v.is_bp}, {"witnesses", w}, {"decomposition", to_json(v.decomposition)}};
}

inline Json to_json(const PwRwReport& r) {
  return Json{{"element", to_json(r.w)}, {"P", to_json(r.P)}, {"R", to_json(r.R)}, {"palindromic", r.palindromic}, {"equal", r.equal}};
}

inline Json to_json(const StaircaseDiagram& D) {
  Json blocks = Json::array(), covers = Json::array();
  for (GenSet B : D.blocks) blocks.push_back(gen_set_json(*D.system, B));
  for (auto [a, b] : D.covers) covers.push_back(Json::array({a, b}));
  return Json{{"system", D.system->name()}, {"blocks", blocks}, {"covers", covers}};
}

inline StaircaseDiagram diagram_from_json(const Json& j, const CoxeterSystem& W) {
  std::vector<GenSet> blocks;
  for (const auto& b : j.at("blocks")) {
    GenSet B = 0;
    for (const auto& lab : b) {
      const auto s = W.index_of_label(lab.get<int>());
      if (!s) throw std::invalid_argument("diagram_from_json: unknown generator label");
      B |= gen_bit(*s);
    }
    blocks.push_back(B);
  }
  std::vector<std::pair<int, int>> rel;
  for (const auto& c : j.at("covers")) rel.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  return make_diagram(W, blocks, rel);
}

inline std::string diagram_dot(const StaircaseDiagram& D, const std::string& name = "diagram") {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (int b = 0; b < D.size(); ++b)
    out += "  b" + std::to_string(b) + " [label=\"" + gen_set_string(*D.system, D.blocks[static_cast<std::size_t>(b)]) + "\"];\n";
  for (auto [a, b] : D.covers) out += "  b" + std::to_string(a) + " -> b" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace bruhat
