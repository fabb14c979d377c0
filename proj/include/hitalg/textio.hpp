#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cache.hpp"
#include "cohit.hpp"
#include "dual.hpp"
#include "lambda.hpp"
#include "poly.hpp"

namespace hitalg {

using nlohmann::json;

// Monomial text form: parenthesized exponent tuple "(3,5,1,9)"; a dual
// monomial carries a "d" prefix; polynomials and dual elements join
// monomials with "+".

inline std::string exps_to_string(const Exps& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m[i]);
  }
  return out + ")";
}

inline std::string poly_to_string(const Poly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& m : f) {
    if (!out.empty()) out += " + ";
    out += exps_to_string(m);
  }
  return out;
}

inline std::string dual_to_string(const DualElement& xi) {
  if (xi.empty()) return "0";
  std::string out;
  for (const auto& m : xi) {
    if (!out.empty()) out += " + ";
    out += "d" + exps_to_string(m);
  }
  return out;
}

inline Exps parse_exps(const std::string& s) {
  std::size_t b = s.find('(');
  std::size_t e = s.rfind(')');
  if (b == std::string::npos || e == std::string::npos || e < b)
    throw std::invalid_argument("expected a parenthesized exponent tuple: " + s);
  Exps out;
  std::string body = s.substr(b + 1, e - b - 1);
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

// Accepts "+"-separated monomials, "0" for zero; the "d" prefix is
// tolerated everywhere so one parser serves both sides.
inline std::set<Exps> parse_terms(const std::string& s) {
  std::set<Exps> out;
  std::string cur;
  auto flush = [&] {
    std::size_t a = cur.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return;
    std::size_t b = cur.find_last_not_of(" \t\r\n");
    std::string t = cur.substr(a, b - a + 1);
    if (t.empty() || t == "0") return;
    toggle(out, parse_exps(t));
  };
  for (char c : s) {
    if (c == '+') {
      flush();
      cur.clear();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

inline Poly parse_poly(const std::string& s) { return parse_terms(s); }
inline DualElement parse_dual(const std::string& s) { return parse_terms(s); }

// Lambda word text form: "l4 l6 l5 l3"; element = "+"-separated words.

inline std::string lambda_word_to_string(const LambdaWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += "l" + std::to_string(w[i]);
  }
  return out;
}

inline std::string lambda_to_string(const LambdaElement& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& w : e) {
    if (!out.empty()) out += " + ";
    out += lambda_word_to_string(w);
  }
  return out;
}

inline LambdaWord parse_lambda_word(const std::string& s) {
  LambdaWord w;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    if (tok[0] != 'l') throw std::invalid_argument("expected lambda factor like 'l4', got: " + tok);
    w.push_back(std::stoi(tok.substr(1)));
  }
  return w;
}

inline LambdaElement parse_lambda_element(const std::string& s) {
  LambdaElement e;
  std::string cur;
  auto flush = [&] {
    std::istringstream probe(cur);
    std::string any;
    if (!(probe >> any) || any == "0") return;
    toggle(e, parse_lambda_word(cur));
  };
  for (char c : s) {
    if (c == '+') {
      flush();
      cur.clear();
    } else {
      cur += c;
    }
  }
  flush();
  return e;
}

// One lambda word per line.
inline LambdaElement read_lambda_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  LambdaElement e;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream probe(line);
    std::string any;
    if (!(probe >> any)) continue;
    toggle(e, parse_lambda_word(line));
  }
  return e;
}

// JSON forms.

inline json exps_json(const Exps& m) { return json(m); }

inline json terms_json(const std::set<Exps>& f) {
  json a = json::array();
  for (const auto& m : f) a.push_back(m);
  return a;
}

inline std::set<Exps> terms_from_json(const json& a) {
  std::set<Exps> out;
  for (const auto& t : a) toggle(out, t.get<Exps>());
  return out;
}

// Dual element file: { "h", "n", "terms": [tuples] }.
inline json dual_json(int h, int n, const DualElement& xi) {
  return json{{"h", h}, {"n", n}, {"terms", terms_json(xi)}};
}

inline DualElement dual_from_json(const json& j, int* h = nullptr, int* n = nullptr) {
  if (h) *h = j.at("h").get<int>();
  if (n) *n = j.at("n").get<int>();
  return terms_from_json(j.at("terms"));
}

inline DualElement read_dual_file(const std::string& path, int* h = nullptr, int* n = nullptr) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j = json::parse(in);
  return dual_from_json(j, h, n);
}

inline std::string weight_key(const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

inline std::vector<int> parse_weight(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

// { "h", "n", "dim", "admissibles": [tuples], "by_weight": { "w1,w2,...": [indices] } }
inline json cohit_json(const CohitBasis& cb) {
  json adm = json::array();
  for (const auto& m : cb.admissibles()) adm.push_back(m);
  json bw = json::object();
  for (const auto& [w, members] : cb.by_weight()) bw[weight_key(w)] = members;
  return json{{"h", cb.h()}, {"n", cb.n()}, {"dim", cb.dim()}, {"admissibles", adm}, {"by_weight", bw}};
}

inline json cohit_json(const CohitSummary& s) {
  json adm = json::array();
  for (const auto& m : s.admissibles) adm.push_back(m);
  json bw = json::object();
  for (const auto& [w, members] : s.by_weight) bw[weight_key(w)] = members;
  return json{{"h", s.h}, {"n", s.n}, {"dim", s.dim()}, {"admissibles", adm}, {"by_weight", bw}};
}

// { "s", "t", "dim", "cycles": [elements] }
inline json ext_json(const ExtGroup& eg) {
  json cyc = json::array();
  for (const auto& r : eg.representatives()) cyc.push_back(lambda_to_string(r));
  return json{{"s", eg.s()}, {"t", eg.t()}, {"dim", eg.dim()}, {"cycles", cyc}};
}

inline std::vector<int> vec_bits(const gf2::Vec& v) {
  std::vector<int> out;
  v.for_each_bit([&](int i) { out.push_back(i); });
  return out;
}

}  // namespace hitalg
