#pragma once

// Batch front end. run() is the whole program; tools/hmclass.cpp only
// forwards argv so the tests can drive every subcommand in-process.

#include <exception>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hmclass/classes.hpp"
#include "hmclass/coefficient_file.hpp"
#include "hmclass/functional.hpp"
#include "hmclass/report_io.hpp"
#include "hmclass/series.hpp"
#include "hmclass/structure.hpp"
#include "hmclass/verify.hpp"

namespace hmclass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotCertified = 1;
inline constexpr int kExitUsage = 2;

struct ParamFlags {
  double beta = 0.0;
  double lambda = 0.0;
  double k = 0.0;
  double nu = 0.0;

  void attach(CLI::App* app) {
    app->add_option("--beta", beta, "class level beta in [0,1)");
    app->add_option("--lambda", lambda, "mixing weight lambda >= 0");
    app->add_option("--k", k, "second-derivative mix k in [0,1]");
    app->add_option("--nu", nu, "fractional order nu in [0,1)");
  }
  ClassParams params() const { return {beta, lambda, k, nu}; }
};

struct GridFlags {
  std::vector<double> radii;
  int angles = 0;

  void attach(CLI::App* app) {
    app->add_option("--grid-radii", radii, "comma-separated radii in (0,1)")->delimiter(',');
    app->add_option("--grid-angles", angles, "number of equally spaced angles (>= 8)");
  }
  DiskGrid grid() const {
    const DiskGrid standard = standard_grid();
    if (radii.empty() && angles == 0) return standard;
    return DiskGrid(radii.empty() ? standard.radii() : radii,
                    angles == 0 ? standard.angles() : angles, "custom");
  }
};

namespace detail {

inline void write_json(const std::string& path, const Json& doc) {
  if (!path.empty()) write_text_file(path, doc.dump(2) + "\n");
}

inline NegativeCoefficientForm require_negative(const CoefficientFunction& f,
                                                const std::string& path) {
  const auto* neg = std::get_if<NegativeCoefficientForm>(&f);
  if (neg == nullptr) {
    throw ParseError(path + ": this command needs a negative_form coefficient file");
  }
  return *neg;
}

inline std::string describe(const NegativeCoefficientForm& f) {
  std::ostringstream os;
  os << std::setprecision(12) << "z";
  for (const auto& [n, m] : f.analytic()) os << " - " << m << " z^" << n;
  for (const auto& [n, m] : f.coanalytic()) {
    os << " + " << m << (n == 1 ? " conj(z)" : " conj(z)^" + std::to_string(n));
  }
  return os.str();
}

inline Complex parse_point(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("--z expects 're,im', got '" + text + "'");
    }
  }
  if (parts.size() != 2) throw DomainError("--z expects 're,im', got '" + text + "'");
  return {parts[0], parts[1]};
}

}  // namespace detail

/// Parses and executes one command. Exit codes: 0 success, 1 when `check`
/// cannot certify membership or `verify` finds a counterexample, 2 on
/// usage, parse, domain and I/O errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hmclass: coefficient certification for harmonic classes HM(beta,lambda,k,nu)",
               "hmclass"};
  app.require_subcommand(1);

  ParamFlags params;
  GridFlags grid;
  std::string input;
  std::string input2;
  std::string output;

  auto* check = app.add_subcommand("check", "certify class membership of a coefficient file");
  check->add_option("--input", input, "coefficient file")->required();
  check->add_option("--output", output, "membership report (JSON)");
  params.attach(check);

  int index = 0;
  auto* weights_cmd = app.add_subcommand("weights", "print phi(n) and psi(n)");
  weights_cmd->add_option("--n", index, "coefficient index >= 1")->required();
  weights_cmd->add_option("--output", output, "weights (JSON)");
  params.attach(weights_cmd);

  std::optional<int> fn;
  std::optional<int> gn;
  auto* extremal = app.add_subcommand("extremal", "write an extreme point f_n or g_n");
  auto* fn_opt = extremal->add_option("--fn", fn, "analytic extreme point index >= 2");
  auto* gn_opt = extremal->add_option("--gn", gn, "co-analytic extreme point index >= 1");
  fn_opt->excludes(gn_opt);
  extremal->add_option("--output", output, "coefficient file to write");
  params.attach(extremal);

  auto* decompose_cmd = app.add_subcommand("decompose", "weights over the extreme points");
  decompose_cmd->add_option("--input", input, "negative_form coefficient file")->required();
  decompose_cmd->add_option("--output", output, "decomposition (JSON)");
  params.attach(decompose_cmd);

  std::optional<double> alpha;
  bool strict = false;
  auto* convolve_cmd = app.add_subcommand("convolve", "Hadamard product of two negative forms");
  convolve_cmd->add_option("--input", input, "first factor")->required();
  convolve_cmd->add_option("--input2", input2, "second factor")->required();
  convolve_cmd->add_option("--alpha", alpha, "check closure at level alpha (> beta)");
  convolve_cmd->add_flag("--strict", strict, "require magnitudes < 1 in both factors");
  convolve_cmd->add_option("--output", output, "product or closure report (JSON)");
  params.attach(convolve_cmd);

  std::vector<std::string> inputs;
  std::vector<double> weights_list;
  auto* combine = app.add_subcommand("combine", "convex combination of negative forms");
  auto* combine_input =
      combine->add_option("--input", input, "decomposition document whose parts are combined");
  auto* combine_inputs =
      combine->add_option("--inputs", inputs, "comma-separated coefficient files")->delimiter(',');
  combine->add_option("--weights", weights_list, "comma-separated weights")->delimiter(',');
  combine_input->excludes(combine_inputs);
  combine->add_option("--output", output, "combined coefficient file");

  std::string point;
  std::string csv;
  auto* eval = app.add_subcommand("eval", "evaluate f, its diagnostics and E(z)");
  eval->add_option("--input", input, "coefficient file")->required();
  eval->add_option("--z", point, "evaluation point 're,im' with |z| < 1");
  eval->add_option("--csv", csv, "write r,theta,re_E,im_E,jacobian over the grid");
  eval->add_option("--output", output, "evaluation summary (JSON)");
  params.attach(eval);
  grid.attach(eval);

  int cases = 100;
  std::uint64_t seed = 0;
  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "seeded numerical checks of the coefficient conditions");
  verify_cmd->add_option("--cases", cases, "number of random cases");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--suite", suite, "sufficiency, necessity or all")
      ->check(CLI::IsMember({"sufficiency", "necessity", "all"}));
  verify_cmd->add_option("--output", output, "verification report(s) (JSON)");
  params.attach(verify_cmd);
  grid.attach(verify_cmd);

  std::vector<std::string> argv_storage{"hmclass"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) {
      const ClassParams p = params.params();
      const CoefficientFunction f = load_coefficient_file(input);
      MembershipReport report;
      std::string input_kind;
      if (const auto* neg = std::get_if<NegativeCoefficientForm>(&f)) {
        report = is_member_negative_class(*neg, p);
        input_kind = "negative_form";
      } else {
        report = is_member_sufficient(std::get<HarmonicFunction>(f), p);
        input_kind = "general";
      }
      out << std::setprecision(17);
      out << "params: " << p.to_string() << "\n";
      out << "input kind: " << input_kind << "\n";
      out << "deficiency: " << report.deficiency << "\n";
      for (const auto& t : report.per_term) {
        if (t.unconstrained) {
          out << "note: " << to_string(t.part) << "_" << t.n
              << " is unconstrained (psi vanishes)\n";
        }
      }
      out << "verdict: " << to_string(report.verdict) << "\n";
      Json doc = to_json(report);
      doc["input_kind"] = input_kind;
      detail::write_json(output, doc);
      return report.certified() ? kExitOk : kExitNotCertified;
    }

    if (weights_cmd->parsed()) {
      const ClassParams p = params.params();
      const WeightPair w = weights(index, p);
      const double ratio = specfn::gamma_ratio(index, p.nu());
      out << std::setprecision(17);
      out << "params: " << p.to_string() << "\n";
      out << "n: " << index << "\n";
      out << "gamma_ratio: " << ratio << "\n";
      if (index >= 2) out << "phi: " << w.phi << "\n";
      out << "psi: " << w.psi_signed << "\n";
      out << "|psi|: " << std::abs(w.psi_signed) << "\n";
      Json doc = {{"kind", "weights"},
                  {"n", index},
                  {"params", to_json(p)},
                  {"gamma_ratio", ratio},
                  {"psi", w.psi_signed}};
      doc["phi"] = index >= 2 ? Json(w.phi) : Json(nullptr);
      detail::write_json(output, doc);
      return kExitOk;
    }

    if (extremal->parsed()) {
      if (!fn && !gn) throw DomainError("extremal needs --fn N or --gn N");
      const ClassParams p = params.params();
      const NegativeCoefficientForm e = fn ? extreme_point_f(*fn, p) : extreme_point_g(*gn, p);
      out << (fn ? "f_" + std::to_string(*fn) : "g_" + std::to_string(*gn)) << "(z) = "
          << detail::describe(e) << "\n";
      if (!e.univalence_candidate()) {
        out << "warning: univalence_violated (|b_1| >= 1)\n";
      }
      detail::write_json(output, to_json(e));
      return kExitOk;
    }

    if (decompose_cmd->parsed()) {
      const ClassParams p = params.params();
      const auto f = detail::require_negative(load_coefficient_file(input), input);
      const WeightDecomposition w = decompose(f, p);
      out << std::setprecision(17) << "t1: " << w.t1 << "\n";
      for (const auto& [n, v] : w.t) out << "t_" << n << ": " << v << "\n";
      for (const auto& [n, v] : w.s) out << "s_" << n << ": " << v << "\n";
      detail::write_json(output, to_json(w, p));
      return kExitOk;
    }

    if (convolve_cmd->parsed()) {
      const auto f1 = detail::require_negative(load_coefficient_file(input), input);
      const auto f2 = detail::require_negative(load_coefficient_file(input2), input2);
      if (alpha) {
        const ClassParams shape = params.params();
        const ConvolutionReport report =
            check_convolution_closure(f1, f2, *alpha, shape.beta(), shape, strict);
        out << std::setprecision(17);
        if (!report.hypothesis_ok) {
          out << "hypothesis violated: " << report.violation << "\n";
        } else {
          out << "product: " << detail::describe(*report.product) << "\n";
          out << "deficiency at alpha: " << report.product_deficiency_alpha << "\n";
          out << "deficiency at beta: " << report.product_deficiency_beta << "\n";
          out << "closure: " << (report.closure_holds() ? "holds" : "fails") << "\n";
        }
        detail::write_json(output, to_json(report));
        return kExitOk;
      }
      const NegativeCoefficientForm product = convolve(f1, f2);
      out << "product: " << detail::describe(product) << "\n";
      detail::write_json(output, to_json(product));
      return kExitOk;
    }

    if (combine->parsed()) {
      std::vector<NegativeCoefficientForm> fs;
      std::vector<double> ts;
      if (!input.empty()) {
        const auto doc = decomposition_from_json(Json::parse(read_text_file(input)));
        fs = doc.parts;
        ts = doc.part_weights;
      } else {
        if (inputs.empty()) throw DomainError("combine needs --input or --inputs");
        for (const auto& path : inputs) {
          fs.push_back(detail::require_negative(load_coefficient_file(path), path));
        }
        ts = weights_list;
      }
      const NegativeCoefficientForm combined = convex_combine(fs, ts);
      out << "combination: " << detail::describe(combined) << "\n";
      detail::write_json(output, to_json(combined));
      return kExitOk;
    }

    if (eval->parsed()) {
      const ClassParams p = params.params();
      const HarmonicFunction f = as_harmonic(load_coefficient_file(input));
      const DiskGrid g = grid.grid();
      Json doc = {{"kind", "evaluation"}, {"params", to_json(p)}};
      out << std::setprecision(17);
      if (!point.empty()) {
        const EvalPoint z(detail::parse_point(point));
        const Complex value = evaluate(f, z);
        const auto [dh, dg] = derivatives(f, z);
        const Complex e = functional_E(f, p, z);
        out << "f(z): " << value << "\n";
        out << "h'(z): " << dh << "\ng'(z): " << dg << "\n";
        out << "jacobian: " << jacobian(f, z) << "\n";
        if (std::abs(dh) >= 1e-14) out << "dilatation: " << dilatation(f, z) << "\n";
        out << "E(z): " << e << "\n";
        doc["z"] = {z.z().real(), z.z().imag()};
        doc["f"] = {value.real(), value.imag()};
        doc["E"] = {e.real(), e.imag()};
        doc["jacobian"] = jacobian(f, z);
      }
      const GridMinimum m = min_real_E(f, p, g);
      out << "grid: " << g.tag() << " (" << g.size() << " points)\n";
      if (g.size() > 0) {
        out << "min Re E: " << m.value << " at r=" << m.where.r() << " theta=" << m.where.theta()
            << "\n";
        doc["min_re_E"] = {{"value", m.value}, {"r", m.where.r()}, {"theta", m.where.theta()}};
      }
      if (!csv.empty()) emit_grid(f, p, g, csv);
      detail::write_json(output, doc);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const ClassParams p = params.params();
      std::vector<VerificationReport> reports;
      if (suite == "sufficiency" || suite == "all") {
        reports.push_back(verify_sufficiency(p, cases, seed, grid.grid()));
      }
      if (suite == "necessity" || suite == "all") {
        reports.push_back(verify_necessity(p, cases, seed));
      }
      bool all_passed = true;
      Json docs = Json::array();
      out << std::setprecision(17);
      for (const auto& r : reports) {
        out << r.suite << ": " << r.cases_passed << "/" << r.cases_run
            << (r.suite == "necessity" ? " violators with a witness on " : " cases without counterexample on ")
            << r.grid_tag
            << ", worst margin " << r.worst_margin << "\n";
        all_passed = all_passed && r.all_passed();
        docs.push_back(to_json(r));
      }
      detail::write_json(output, docs.size() == 1 ? docs[0] : docs);
      return all_passed ? kExitOk : kExitNotCertified;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hmclass::cli
