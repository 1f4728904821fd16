#pragma once

// Coefficient-file documents:
//   {"kind":"general","a":[[n,re,im],...],"b":[[n,re,im],...]}
//   {"kind":"negative_form","a_abs":[[n,mag],...],"b_abs":[[n,mag],...]}
// Indices are strictly increasing within each array; a missing array is
// empty.

#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <variant>

#include "hmclass/errors.hpp"
#include "hmclass/series.hpp"
#include "json.hpp"

namespace hmclass {

using Json = nlohmann::json;

using CoefficientFunction = std::variant<HarmonicFunction, NegativeCoefficientForm>;

namespace detail {

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

inline int parse_index(const Json& entry, int min_index, int& previous, const std::string& key) {
  expect(entry.is_array(), "'" + key + "' entries must be arrays");
  expect(!entry.empty() && entry[0].is_number_integer(),
         "'" + key + "' entry must start with an integer index");
  const auto n = entry[0].get<long long>();
  expect(n >= min_index && n <= 1'000'000,
         "'" + key + "' index " + std::to_string(n) + " out of range (minimum " +
             std::to_string(min_index) + ")");
  expect(n > previous, "'" + key + "' indices must be strictly increasing (saw " +
                           std::to_string(n) + " after " + std::to_string(previous) + ")");
  previous = static_cast<int>(n);
  return previous;
}

inline double parse_number(const Json& v, const std::string& key) {
  expect(v.is_number(), "'" + key + "' entries must hold numbers");
  return v.get<double>();
}

inline const Json* optional_array(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) return nullptr;
  expect(doc[key].is_array(), "'" + key + "' must be an array");
  return &doc[key];
}

inline void parse_complex_terms(const Json& doc, const std::string& key, int min_index,
                                HarmonicFunction& f, bool analytic) {
  const Json* terms = optional_array(doc, key);
  if (terms == nullptr) return;
  int previous = min_index - 1;
  for (const Json& entry : *terms) {
    const int n = parse_index(entry, min_index, previous, key);
    expect(entry.size() == 3, "'" + key + "' entries must be [n, re, im]");
    const Complex c{parse_number(entry[1], key), parse_number(entry[2], key)};
    try {
      analytic ? f.set_a(n, c) : f.set_b(n, c);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
}

inline void parse_magnitude_terms(const Json& doc, const std::string& key, int min_index,
                                  NegativeCoefficientForm& f, bool analytic) {
  const Json* terms = optional_array(doc, key);
  if (terms == nullptr) return;
  int previous = min_index - 1;
  for (const Json& entry : *terms) {
    const int n = parse_index(entry, min_index, previous, key);
    expect(entry.size() == 2, "'" + key + "' entries must be [n, magnitude]");
    const double m = parse_number(entry[1], key);
    expect(m >= 0.0, "'" + key + "' magnitudes must be nonnegative");
    try {
      analytic ? f.set_a_abs(n, m) : f.set_b_abs(n, m);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
}

}  // namespace detail

inline CoefficientFunction coefficient_function_from_json(const Json& doc) {
  detail::expect(doc.is_object(), "coefficient document must be a JSON object");
  detail::expect(doc.contains("kind") && doc["kind"].is_string(),
                 "coefficient document needs a string 'kind'");
  const auto kind = doc["kind"].get<std::string>();
  if (kind == "general") {
    HarmonicFunction f;
    detail::parse_complex_terms(doc, "a", 2, f, true);
    detail::parse_complex_terms(doc, "b", 1, f, false);
    return f;
  }
  if (kind == "negative_form") {
    NegativeCoefficientForm f;
    detail::parse_magnitude_terms(doc, "a_abs", 2, f, true);
    detail::parse_magnitude_terms(doc, "b_abs", 1, f, false);
    return f;
  }
  throw ParseError("unknown coefficient document kind '" + kind + "'");
}

inline CoefficientFunction parse_coefficient_file(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return coefficient_function_from_json(doc);
}

inline Json to_json(const HarmonicFunction& f) {
  Json a = Json::array();
  Json b = Json::array();
  for (const auto& [n, c] : f.analytic()) a.push_back({n, c.real(), c.imag()});
  for (const auto& [n, c] : f.coanalytic()) b.push_back({n, c.real(), c.imag()});
  return {{"kind", "general"}, {"a", a}, {"b", b}};
}

inline Json to_json(const NegativeCoefficientForm& f) {
  Json a = Json::array();
  Json b = Json::array();
  for (const auto& [n, m] : f.analytic()) a.push_back({n, m});
  for (const auto& [n, m] : f.coanalytic()) b.push_back({n, m});
  return {{"kind", "negative_form"}, {"a_abs", a}, {"b_abs", b}};
}

inline Json to_json(const CoefficientFunction& f) {
  return std::visit([](const auto& g) { return to_json(g); }, f);
}

inline HarmonicFunction as_harmonic(const CoefficientFunction& f) {
  if (const auto* neg = std::get_if<NegativeCoefficientForm>(&f)) return neg->to_harmonic();
  return std::get<HarmonicFunction>(f);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

inline CoefficientFunction load_coefficient_file(const std::string& path) {
  try {
    return parse_coefficient_file(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace hmclass
