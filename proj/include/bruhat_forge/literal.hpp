#pragma once

#include "coxeter.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bruhat {

// Word rendering such as "s1s3s2"; the identity renders as "e".
inline std::string word_string(const CoxeterSystem& W, const std::vector<int>& word, const std::string& sep = "") {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += sep;
    out += "s" + std::to_string(W.label(word[i]));
  }
  return out;
}

inline std::string to_word_string(const GroupElement& w, const std::string& sep = "") {
  return word_string(w.system(), reduced_word(w), sep);
}

inline std::string gen_set_string(const CoxeterSystem& W, GenSet J) {
  std::string out = "{";
  bool first = true;
  for (int s : gen_list(J)) {
    if (!first) out += ",";
    out += "s" + std::to_string(W.label(s));
    first = false;
  }
  return out + "}";
}

// Literal that parses back to the same element under the same family.
inline std::string to_literal(const GroupElement& w) {
  const CoxeterSystem& W = w.system();
  const auto& d = w.canonical();
  switch (W.family()) {
    case Family::A: {
      std::string out;
      const bool compact = d.size() <= 9;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (!compact && i) out += ",";
        out += std::to_string(d[i]);
      }
      return out;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      std::string out;
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
      }
      return out;
    }
    case Family::AffineA: {
      std::string out = "[";
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
      }
      return out + "]";
    }
    default:
      return word_string(W, d, " ");
  }
}

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<int> parse_int_list(const std::string& body) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(body);
  while (std::getline(is, tok, ',')) {
    tok = strip(tok);
    if (tok.empty()) throw std::invalid_argument("empty entry in element literal");
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

// Parsed literal before it is bound to a system.
struct ElementLiteral {
  enum class Kind { Word, OneLine, Signed, Window } kind;
  std::vector<int> values;  // word labels, or one-line/signed/window entries
};

inline ElementLiteral parse_literal(const std::string& text) {
  const std::string s = detail::strip(text);
  if (s.empty()) throw std::invalid_argument("empty element literal");
  if (s == "e") return {ElementLiteral::Kind::Word, {}};
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated affine window");
    return {ElementLiteral::Kind::Window, detail::parse_int_list(s.substr(1, s.size() - 2))};
  }
  if (s.front() == 's') {
    std::vector<int> labels;
    std::size_t i = 0;
    while (i < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*' || s[i] == '.') {
        ++i;
        continue;
      }
      if (s[i] != 's') throw std::invalid_argument("bad word literal '" + s + "'");
      ++i;
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw std::invalid_argument("generator without index in '" + s + "'");
      labels.push_back(std::stoi(s.substr(i, j - i)));
      i = j;
    }
    return {ElementLiteral::Kind::Word, labels};
  }
  if (s.find(',') != std::string::npos) {
    auto vals = detail::parse_int_list(s);
    bool neg = false;
    for (int v : vals) neg |= v < 0;
    return {neg ? ElementLiteral::Kind::Signed : ElementLiteral::Kind::OneLine, vals};
  }
  std::vector<int> vals;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad one-line literal '" + s + "'");
    vals.push_back(c - '0');
  }
  return {ElementLiteral::Kind::OneLine, vals};
}

// Rank implied by a literal for a given family, when not given explicitly.
inline int infer_rank(const ElementLiteral& lit, Family family) {
  switch (lit.kind) {
    case ElementLiteral::Kind::Word: {
      int mx = 0;
      for (int v : lit.values) mx = std::max(mx, v);
      if (family == Family::AffineA) return std::max(2, mx + 1);
      if (family == Family::F4) return 4;
      if (family == Family::G2) return 2;
      if (family == Family::D) return std::max(3, mx);
      return std::max(1, mx);
    }
    case ElementLiteral::Kind::OneLine:
      return family == Family::A ? static_cast<int>(lit.values.size()) - 1 : static_cast<int>(lit.values.size());
    default:
      return static_cast<int>(lit.values.size());
  }
}

inline GroupElement bind_literal(const ElementLiteral& lit, const CoxeterSystem& W) {
  if (lit.kind == ElementLiteral::Kind::Word) {
    std::vector<int> word;
    for (int lab : lit.values) {
      auto s = W.index_of_label(lab);
      if (!s) throw std::invalid_argument("generator s" + std::to_string(lab) + " not in " + W.name());
      word.push_back(*s);
    }
    return W.from_word(word);
  }
  if (W.word_backed()) throw std::invalid_argument(W.name() + " elements are given as words");
  if (lit.kind == ElementLiteral::Kind::Window && W.family() != Family::AffineA)
    throw std::invalid_argument("affine window given for " + W.name());
  return W.from_data(lit.values);
}

inline GroupElement parse_element(const std::string& text, const CoxeterSystem& W) { return bind_literal(parse_literal(text), W); }

// Parses a literal, inferring the rank from it when rank <= 0.
inline GroupElement parse_element(const std::string& text, Family family, int rank = 0) {
  const ElementLiteral lit = parse_literal(text);
  if (rank <= 0) rank = infer_rank(lit, family);
  return bind_literal(lit, build_system(family, rank));
}

}  // namespace bruhat
