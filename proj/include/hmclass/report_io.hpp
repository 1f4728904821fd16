#pragma once

// JSON documents for reports and decompositions, and the per-point CSV
// dump of a grid sweep.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "hmclass/classes.hpp"
#include "hmclass/coefficient_file.hpp"
#include "hmclass/functional.hpp"
#include "hmclass/structure.hpp"
#include "hmclass/verify.hpp"

namespace hmclass {

inline Json to_json(const ClassParams& p) {
  return {{"beta", p.beta()}, {"lambda", p.lambda()}, {"k", p.k()}, {"nu", p.nu()}};
}

inline ClassParams params_from_json(const Json& j) {
  detail::expect(j.is_object(), "'params' must be an object");
  for (const char* key : {"beta", "lambda", "k", "nu"}) {
    detail::expect(j.contains(key) && j[key].is_number(),
                   std::string("'params' needs numeric '") + key + "'");
  }
  try {
    return {j["beta"].get<double>(), j["lambda"].get<double>(), j["k"].get<double>(),
            j["nu"].get<double>()};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline Json to_json(const MembershipReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.per_term) {
    terms.push_back({{"n", t.n},
                     {"part", std::string(to_string(t.part))},
                     {"contribution", t.contribution},
                     {"unconstrained", t.unconstrained}});
  }
  return {{"kind", "membership"},
          {"verdict", std::string(to_string(r.verdict))},
          {"certified", r.certified()},
          {"deficiency", r.deficiency},
          {"tolerance", r.tolerance},
          {"params", to_json(r.params)},
          {"per_term", terms}};
}

inline Json to_json(const VerificationReport& r) {
  Json witness = nullptr;
  if (r.witness) {
    witness = {{"case", r.witness->case_id},
               {"z", {r.witness->z.real(), r.witness->z.imag()}},
               {"value", r.witness->value}};
  }
  return {{"kind", "verification"},
          {"suite", r.suite},
          {"grid", r.grid_tag},
          {"params", to_json(r.params)},
          {"seed", r.seed},
          {"cases_run", r.cases_run},
          {"cases_passed", r.cases_passed},
          {"worst_margin", r.worst_margin},
          {"witness", witness}};
}

inline Json to_json(const ConvolutionReport& r) {
  Json j = {{"kind", "convolution_closure"},
            {"hypothesis_ok", r.hypothesis_ok},
            {"alpha", r.alpha},
            {"beta", r.beta},
            {"factor1_deficiency", r.factor1_deficiency},
            {"factor2_deficiency", r.factor2_deficiency},
            {"closure_holds", r.closure_holds()}};
  if (!r.hypothesis_ok) {
    j["violation"] = r.violation;
  } else {
    j["product"] = to_json(*r.product);
    j["product_deficiency_alpha"] = r.product_deficiency_alpha;
    j["product_deficiency_beta"] = r.product_deficiency_beta;
  }
  return j;
}

/// Decomposition document. `parts` lists each extreme point with its weight
/// so a convex combination of the parts rebuilds the function.
inline Json to_json(const WeightDecomposition& w, const ClassParams& p) {
  Json t = Json::array();
  Json s = Json::array();
  for (const auto& [n, v] : w.t) t.push_back({n, v});
  for (const auto& [n, v] : w.s) s.push_back({n, v});

  Json parts = Json::array();
  parts.push_back({{"weight", w.t1}, {"function", to_json(NegativeCoefficientForm{})}});
  for (const auto& [n, v] : w.t) {
    parts.push_back({{"weight", v}, {"function", to_json(extreme_point_f(n, p))}});
  }
  for (const auto& [n, v] : w.s) {
    parts.push_back({{"weight", v}, {"function", to_json(extreme_point_g(n, p))}});
  }
  return {{"kind", "decomposition"},
          {"params", to_json(p)},
          {"t1", w.t1},
          {"t", t},
          {"s", s},
          {"parts", parts}};
}

struct DecompositionDocument {
  ClassParams params;
  WeightDecomposition weights;
  std::vector<NegativeCoefficientForm> parts;
  std::vector<double> part_weights;
};

inline DecompositionDocument decomposition_from_json(const Json& doc) {
  detail::expect(doc.is_object() && doc.value("kind", "") == "decomposition",
                 "expected a document of kind 'decomposition'");
  detail::expect(doc.contains("params"), "decomposition needs 'params'");
  DecompositionDocument out;
  out.params = params_from_json(doc["params"]);
  detail::expect(doc.contains("t1") && doc["t1"].is_number(), "decomposition needs numeric 't1'");
  out.weights.t1 = doc["t1"].get<double>();
  auto read_weights = [&](const char* key, int min_index, std::map<int, double>& target) {
    const Json* arr = detail::optional_array(doc, key);
    if (arr == nullptr) return;
    int previous = min_index - 1;
    for (const Json& e : *arr) {
      const int n = detail::parse_index(e, min_index, previous, key);
      detail::expect(e.size() == 2, std::string("'") + key + "' entries must be [n, weight]");
      target[n] = detail::parse_number(e[1], key);
    }
  };
  read_weights("t", 2, out.weights.t);
  read_weights("s", 1, out.weights.s);
  if (const Json* parts = detail::optional_array(doc, "parts")) {
    for (const Json& part : *parts) {
      detail::expect(part.is_object() && part.contains("weight") && part.contains("function"),
                     "decomposition parts need 'weight' and 'function'");
      const auto f = coefficient_function_from_json(part["function"]);
      const auto* neg = std::get_if<NegativeCoefficientForm>(&f);
      detail::expect(neg != nullptr, "decomposition parts must be negative_form functions");
      out.parts.push_back(*neg);
      out.part_weights.push_back(detail::parse_number(part["weight"], "weight"));
    }
  }
  return out;
}

inline std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

/// CSV of (r, theta, Re E, Im E, J_f) in grid order, 17 significant digits.
inline void emit_grid(const HarmonicFunction& f, const ClassParams& p, const DiskGrid& grid,
                      std::ostream& out) {
  out << "r,theta,re_E,im_E,jacobian\n";
  const ExpandedFunctional E(f, p);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const EvalPoint z = grid.point(i);
    const Complex e = E(z);
    out << format_double(z.r()) << ',' << format_double(z.theta()) << ',' << format_double(e.real())
        << ',' << format_double(e.imag()) << ',' << format_double(jacobian(f, z)) << '\n';
  }
}

inline void emit_grid(const HarmonicFunction& f, const ClassParams& p, const DiskGrid& grid,
                      const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_grid(f, p, grid, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace hmclass
