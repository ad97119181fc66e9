// Copyright (c) 2026 the normkit authors
// SPDX-License-Identifier: Apache-2.0
//
// normkit: JSON-in/JSON-out command line front end. Exit codes: 0 the run's
// pass flag is true, 1 mathematical failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "normkit/fixtures.hpp"
#include "normkit/normkit.hpp"

namespace {

using normkit::json;
using normkit::Report;

struct CommonArgs {
  std::string input;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::size_t samples = 10000;
  std::string output = "json";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_input = true) {
  if (needs_input)
    cmd->add_option("input", args.input,
                    "fixture path or inline JSON (starts with '{')")
        ->required();
  cmd->add_option("--seed", args.seed, "RNG seed (default 0)");
  cmd->add_option("--tol", args.tol, "tolerance (default 1e-8)");
  cmd->add_option("--samples", args.samples, "sample count (default 10000)");
  cmd->add_option("--output", args.output, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag_callback(
      "--json", [&args]() { args.output = "json"; }, "emit JSON (default)");
}

json load_input(const CommonArgs& args) {
  if (!args.input.empty() && args.input.front() == '{')
    return json::parse(args.input);
  return normkit::load_json_file(args.input);
}

void emit(const Report& report, const CommonArgs& args,
          const json& extra = json::object()) {
  json j = normkit::to_json(report);
  for (const auto& [k, v] : extra.items()) j[k] = v;
  if (args.output == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.kind << ": " << (report.pass ? "pass" : "FAIL") << "\n";
    for (const auto& [k, v] : report.values)
      std::cout << "  " << k << " = " << v << "\n";
    for (const auto& n : report.notes) std::cout << "  note: " << n << "\n";
  }
}

// ---- subcommand bodies; each returns the report it printed ----

Report run_norm(const CommonArgs& args) {
  json in = load_input(args);
  normkit::NormSpec norm = normkit::norm_from_json(in.at("norm"));
  normkit::Vec x = normkit::vec_from_json(in.at("x"));
  Report r;
  r.kind = "norm";
  r.values["value"] = norm(x);
  emit(r, args);
  return r;
}

Report run_axioms(const CommonArgs& args) {
  json in = load_input(args);
  normkit::NormSpec norm = normkit::norm_from_json(in.at("norm"));
  auto a = normkit::check_norm_axioms(norm, args.samples, args.seed);
  Report r;
  r.kind = "axioms";
  r.pass = a.all_pass();
  r.values["nonnegativity"] = a.nonnegativity;
  r.values["definiteness"] = a.definiteness;
  r.values["homogeneity"] = a.homogeneity;
  r.values["triangle"] = a.triangle;
  r.values["samples"] = static_cast<double>(a.samples);
  for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
    r.witnesses["counterexample_" + std::to_string(i)] = a.counterexamples[i].x;
    r.notes.push_back("violated: " + a.counterexamples[i].axiom);
  }
  if (!r.pass && r.notes.empty()) r.notes.push_back("axiom check failed");
  emit(r, args);
  return r;
}

Report run_opnorm(const CommonArgs& args) {
  json in = load_input(args);
  normkit::LinearOperator op = normkit::operator_from_json(in);
  auto nr = normkit::operator_norm(op, args.tol, args.seed);
  auto cert = normkit::continuity_certificate(op, args.samples, args.seed);
  Report r;
  r.kind = "opnorm";
  r.pass = cert.certified();
  r.values["value"] = nr.value;
  r.values["certified_lower"] = nr.certified_lower;
  r.values["sup_ball"] = nr.sup_ball;
  r.values["sup_sphere"] = nr.sup_sphere;
  r.values["sup_open"] = nr.sup_open;
  if (nr.upper_bound) r.values["upper_bound"] = *nr.upper_bound;
  r.values["bound_violations"] = static_cast<double>(cert.violations.size());
  r.witnesses["witness"] = nr.witness;
  r.notes.push_back(std::string("method: ") + normkit::to_string(nr.method));
  if (!nr.power_iteration_converged)
    r.notes.push_back("power iteration did not converge; fell back");
  if (!r.pass) r.notes.push_back("continuity bound violated on samples");
  emit(r, args);
  return r;
}

Report run_isometry(const CommonArgs& args) {
  json in = load_input(args);
  normkit::LinearOperator op = normkit::operator_from_json(in);
  auto rep = normkit::isometry_test(op, args.samples, args.seed);
  Report r;
  r.kind = "isometry";
  r.pass = rep.isometric();
  r.values["norm_preserving"] = rep.norm_preserving;
  r.values["distance_preserving"] = rep.distance_preserving;
  r.values["injective"] = rep.injective;
  r.values["max_norm_deviation"] = rep.max_norm_deviation;
  if (rep.operator_norm_value)
    r.values["operator_norm"] = *rep.operator_norm_value;
  if (rep.counterexample) {
    r.witnesses["counterexample"] = *rep.counterexample;
    r.notes.push_back("norm or distance not preserved at the witness");
  }
  if (!r.pass && r.notes.empty()) r.notes.push_back("not an isometry");
  emit(r, args);
  return r;
}

Report run_equiv(const CommonArgs& args) {
  json in = load_input(args);
  std::vector<normkit::Vec> basis;
  for (const auto& b : in.at("basis")) basis.push_back(normkit::vec_from_json(b));
  normkit::NormSpec norm = normkit::norm_from_json(in.at("norm"));
  bool complex_mode = in.value("complex", false);
  auto eq = normkit::equivalence_constants(basis, norm, args.tol, complex_mode,
                                           args.seed);
  auto chk = normkit::check_equivalence_sandwich(eq, norm, args.samples,
                                                 args.seed);
  Report r;
  r.kind = "equiv";
  r.pass = chk.pass;
  r.values["a"] = eq.a;
  r.values["b"] = eq.b;
  r.values["lower_violations"] = static_cast<double>(chk.lower_violations);
  r.values["upper_violations"] = static_cast<double>(chk.upper_violations);
  r.witnesses["a_witness"] = eq.a_witness;
  r.notes.push_back("method_a: " + eq.method_a);
  if (!r.pass) r.notes.push_back("sandwich violated on samples");
  json extra;
  extra["a"] = eq.a;
  extra["b"] = eq.b;
  extra["a_witness"] = normkit::to_json(eq.a_witness);
  json bn = json::array();
  for (const auto& bv : basis) bn.push_back(norm(bv));
  extra["basis_norms"] = bn;
  emit(r, args, extra);
  return r;
}

Report run_lp(const CommonArgs& args) {
  json in = load_input(args);
  auto x = normkit::sequence_from_json(in);
  auto iv = normkit::lp_norm(x);
  Report r;
  r.kind = "lp";
  r.values["lower"] = iv.lower;
  r.values["upper"] = iv.upper;
  r.values["tail_bound"] = x.tail_bound();
  r.values["prefix_length"] = static_cast<double>(x.length());
  emit(r, args);
  return r;
}

Report run_holder(const CommonArgs& args) {
  json in = load_input(args);
  auto x = normkit::sequence_from_json(in.at("x"));
  auto y = normkit::sequence_from_json(in.at("y"));
  auto pair = normkit::ConjugatePair::from_p(x.exponent());
  auto hp = normkit::holder_pairing(x, y, pair);
  Report r;
  r.kind = "holder";
  r.pass = hp.pass;
  r.values["pairing"] = hp.prefix_sum;
  r.values["pairing_tail_bound"] = hp.tail_bound;
  r.values["bound"] = hp.bound;
  r.values["slack"] = hp.slack;
  r.values["power_sum_x"] = hp.power_sum_x;
  r.values["power_sum_y"] = hp.power_sum_y;
  if (hp.extension) r.notes.push_back("p=1/q=inf pairing: extension beyond (1,inf)");
  if (!r.pass) r.notes.push_back("pairing exceeded the Hoelder bound");
  emit(r, args);
  return r;
}

Report run_minkowski(const CommonArgs& args) {
  json in = load_input(args);
  auto x = normkit::sequence_from_json(in.at("x"));
  auto y = normkit::sequence_from_json(in.at("y"));
  auto mk = normkit::minkowski_verify(x, y);
  Report r;
  r.kind = "minkowski";
  r.pass = mk.pass;
  r.values["lhs_lower"] = mk.lhs.lower;
  r.values["lhs_upper"] = mk.lhs.upper;
  r.values["rhs"] = mk.rhs;
  r.values["slack"] = mk.slack;
  if (!r.pass) r.notes.push_back("triangle inequality violated");
  emit(r, args);
  return r;
}

Report run_dual(const CommonArgs& args) {
  json in = load_input(args);
  normkit::DualFunctional f{normkit::sequence_from_json(in.at("f"))};
  Report r;
  r.kind = "dual";
  if (in.contains("x")) {
    auto x = normkit::sequence_from_json(in.at("x"));
    auto ap = normkit::dual_apply(f, x);
    r.values["center_re"] = ap.center.real();
    r.values["center_im"] = ap.center.imag();
    r.values["radius"] = ap.radius;
    r.values["lower"] = ap.real_interval().lower;
    r.values["upper"] = ap.real_interval().upper;
  } else {
    std::size_t m = in.value("m", f.coeffs.length());
    auto dn = normkit::dual_norm(f, m, args.samples, args.seed);
    auto w = normkit::norming_witness(f, std::min(m, f.coeffs.length()));
    r.values["upper"] = dn.upper;
    r.values["lower"] = dn.lower;
    r.values["gap"] = dn.gap;
    r.values["witness_ratio"] = dn.witness_ratio;
    r.values["sampled_lower"] = dn.sampled_lower;
    r.witnesses["norming_witness"] = w.entries;
    if (w.extension) r.notes.push_back("q=inf witness: argmax coordinate");
  }
  emit(r, args);
  return r;
}

Report run_cauchy(const CommonArgs& args) {
  json in = load_input(args);
  std::vector<normkit::TruncatedSequence> seqs;
  for (const auto& s : in.at("sequences"))
    seqs.push_back(normkit::sequence_from_json(s));
  std::vector<double> eps = in.at("eps").get<std::vector<double>>();
  auto rep = normkit::cauchy_limit(seqs, eps);
  Report r;
  r.kind = "cauchy";
  r.pass = rep.cauchy_ok && rep.converged;
  r.values["cauchy_ok"] = rep.cauchy_ok;
  r.values["converged"] = rep.converged;
  r.values["max_distance_excess"] = rep.max_distance_excess;
  if (!rep.cauchy_ok) {
    r.values["violating_m"] = static_cast<double>(rep.violating_pair.first);
    r.values["violating_n"] = static_cast<double>(rep.violating_pair.second);
    r.values["violating_distance"] = rep.violating_distance;
    r.notes.push_back("Cauchy precondition violated at the named pair");
  } else {
    r.witnesses["limit"] = rep.limit;
  }
  emit(r, args);
  return r;
}

Report run_hb_extend(const CommonArgs& args) {
  json in = load_input(args);
  auto f = normkit::functional_from_json(in, args.tol, args.seed);
  Report r;
  r.kind = "hb-extend";
  if (in.contains("x0")) {
    normkit::Vec x0 = normkit::vec_from_json(in.at("x0"));
    auto [g, st] = normkit::one_step_extension(f, x0, args.tol,
                                               normkit::ExtensionChoice::Midpoint,
                                               args.seed);
    r.values["a"] = st.a;
    r.values["b"] = st.b;
    r.values["c"] = st.c;
    r.values["norm_f"] = f.subspace_norm_of_f;
    r.values["measured_norm_ratio"] = st.measured_norm_ratio;
    r.pass = st.measured_norm_ratio <= 1.0 + 10 * args.tol;
    if (g.full_space())
      r.witnesses["coefficients"] = normkit::coefficients(g);
  } else {
    std::vector<normkit::ExtensionStep> steps;
    auto F = normkit::extend_functional(f, args.tol,
                                        normkit::ExtensionChoice::Midpoint,
                                        &steps, args.seed);
    double fn = f.subspace_norm_of_f;
    double Fn = normkit::functional_subspace_norm(F, args.tol, nullptr, args.seed);
    r.values["norm_f"] = fn;
    r.values["norm_F"] = Fn;
    r.values["ratio"] = fn > 0.0 ? Fn / fn : 1.0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      std::string k = "step" + std::to_string(i);
      r.values[k + ".a"] = steps[i].a;
      r.values[k + ".b"] = steps[i].b;
      r.values[k + ".c"] = steps[i].c;
    }
    r.witnesses["coefficients"] = normkit::coefficients(F);
    double n = static_cast<double>(f.ambient_dim());
    r.pass = fn == 0.0 || (Fn / fn >= 1.0 - 1e-9 &&
                           Fn / fn <= 1.0 + n * std::max(args.tol, 1e-9));
    if (!r.pass) r.notes.push_back("extension norm ratio out of range");
  }
  emit(r, args);
  return r;
}

Report run_norming(const CommonArgs& args) {
  json in = load_input(args);
  normkit::Vec x = normkit::vec_from_json(in.at("x"));
  normkit::NormSpec norm = normkit::norm_from_json(in.at("norm"));
  auto xp = normkit::norming_functional(x, norm, args.tol, args.seed);
  double pair_value = normkit::evaluate(xp, x);
  double dual = normkit::functional_subspace_norm(xp, args.tol, nullptr, args.seed);
  Report r;
  r.kind = "norming";
  r.values["pairing"] = pair_value;
  r.values["norm_x"] = norm(x);
  r.values["dual_norm"] = dual;
  r.witnesses["coefficients"] = normkit::coefficients(xp);
  r.pass = pair_value == norm(x) && std::abs(dual - 1.0) <= 10 * args.tol;
  if (!r.pass) r.notes.push_back("norming functional certificates failed");
  emit(r, args);
  return r;
}

Report run_annihilate(const CommonArgs& args) {
  json in = load_input(args);
  normkit::Vec x = normkit::vec_from_json(in.at("x"));
  std::vector<normkit::Vec> basis;
  for (const auto& b : in.at("basis")) basis.push_back(normkit::vec_from_json(b));
  normkit::NormSpec norm = normkit::norm_from_json(in.at("norm"));
  auto xp = normkit::annihilating_functional(x, basis, norm, args.tol, args.seed);
  Report r;
  r.kind = "annihilate";
  r.values["value_at_x"] = normkit::evaluate(xp, x);
  double worst = 0.0;
  for (const auto& b : basis)
    worst = std::max(worst, std::abs(normkit::evaluate(xp, b)));
  r.values["max_on_subspace"] = worst;
  r.values["dual_norm"] =
      normkit::functional_subspace_norm(xp, args.tol, nullptr, args.seed);
  r.witnesses["coefficients"] = normkit::coefficients(xp);
  r.pass = r.values["value_at_x"] == 1.0 && worst <= args.tol;
  if (!r.pass) r.notes.push_back("annihilator certificates failed");
  emit(r, args);
  return r;
}

Report run_bilinear(const CommonArgs& args) {
  json in = load_input(args);
  normkit::Matrix c = normkit::matrix_from_json(in.at("coeffs"));
  normkit::NormSpec left = in.contains("left")
                               ? normkit::norm_from_json(in.at("left"))
                               : normkit::NormSpec::p_norm(2.0, c.rows);
  normkit::NormSpec right = in.contains("right")
                                ? normkit::norm_from_json(in.at("right"))
                                : normkit::NormSpec::p_norm(2.0, c.cols);
  normkit::BilinearForm phi(std::move(c), std::move(left), std::move(right));
  auto bn = normkit::bilinear_norm(phi, args.tol, args.seed);
  auto op = normkit::curry(phi, args.seed);
  auto on = normkit::operator_norm(op, args.tol, args.seed);
  Report r;
  r.kind = "bilinear";
  r.values["value"] = bn.value;
  r.values["certified_lower"] = bn.certified_lower;
  r.values["curry_operator_norm"] = on.value;
  r.values["cert_violations"] = static_cast<double>(bn.cert_violations);
  r.witnesses["witness_x"] = bn.witness_x;
  r.witnesses["witness_y"] = bn.witness_y;
  r.pass = bn.cert_violations == 0 &&
           std::abs(on.value - bn.value) <=
               2.0 * args.tol * std::max(1.0, bn.value) + 1e-6;
  if (!r.pass) r.notes.push_back("bilinear certificates failed");
  emit(r, args);
  return r;
}

Report run_tensor(const CommonArgs& args) {
  json in = load_input(args);
  Report r;
  r.kind = "tensor";
  if (in.contains("psi")) {
    std::vector<std::string> a_idx = in.at("A").get<std::vector<std::string>>();
    std::vector<std::string> b_idx = in.at("B").get<std::vector<std::string>>();
    std::map<std::string, normkit::Complex> psi;
    for (const auto& [k, v] : in.at("psi").items())
      psi[k] = normkit::complex_from_json(v);
    auto t = normkit::tensor_linearize(psi, a_idx, b_idx);
    double worst = 0.0;
    for (const auto& a : a_idx)
      for (const auto& b : b_idx) {
        auto ea = normkit::FiniteSupportFunction::unit(a);
        auto eb = normkit::FiniteSupportFunction::unit(b);
        worst = std::max(worst,
                         std::abs(t.apply(normkit::tensor_embed(ea, eb)) -
                                  t.on_pair(a, b)));
      }
    r.values["basis_pairs"] = static_cast<double>(a_idx.size() * b_idx.size());
    r.values["max_factorization_error"] = worst;
    r.pass = worst == 0.0;
    if (in.contains("f") && in.contains("g")) {
      auto f = normkit::sparse_from_json(in.at("f"));
      auto g = normkit::sparse_from_json(in.at("g"));
      normkit::Complex lhs = t.apply(normkit::tensor_embed(f, g));
      normkit::Complex rhs = t.bilinear_extension(f, g);
      r.values["psi_f_g_re"] = rhs.real();
      r.values["psi_f_g_im"] = rhs.imag();
      if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs))) {
        r.pass = false;
        r.notes.push_back("T(Psi_0(f,g)) differs from psi(f,g)");
      }
    }
  } else {
    auto f = normkit::sparse_from_json(in.at("f"));
    auto g = normkit::sparse_from_json(in.at("g"));
    auto fg = normkit::tensor_embed(f, g);
    r.values["support_size"] = static_cast<double>(fg.support_size());
    emit(r, args, normkit::to_json(fg));
    return r;
  }
  emit(r, args);
  return r;
}

Report run_suite(const CommonArgs& args, const std::string& inject) {
  normkit::SuiteOptions opt;
  opt.seed = args.seed;
  opt.tol = args.tol;
  opt.trials = std::min<std::size_t>(args.samples, 4000);
  if (!inject.empty()) {
    json nj = inject.front() == '{' ? json::parse(inject)
                                    : normkit::load_json_file(inject);
    if (nj.contains("norm"))
      opt.injected_norm = normkit::norm_from_json(nj.at("norm"));
    else
      opt.injected_norm = normkit::norm_from_json(nj);
  }
  Report r = normkit::run_property_suite(opt);
  emit(r, args);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normkit: norms, operator norms, lp machinery, Hahn-Banach "
               "extensions, bilinear forms and tensors, with JSON reports"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string inject;
  Report result;
  bool ran = false;

  struct Cmd {
    const char* name;
    const char* help;
    std::function<Report(const CommonArgs&)> fn;
    bool needs_input = true;
  };
  std::vector<Cmd> cmds = {
      {"norm", "evaluate a norm on a vector", run_norm},
      {"axioms", "property-check the norm axioms", run_axioms},
      {"opnorm", "operator norm with certificates", run_opnorm},
      {"isometry", "isometry detection", run_isometry},
      {"equiv", "norm-equivalence constants a, b", run_equiv},
      {"lp", "truncated sequence norm interval", run_lp},
      {"holder", "Hoelder pairing certificate", run_holder},
      {"minkowski", "Minkowski inequality certificate", run_minkowski},
      {"dual", "dual pairing / dual norm with norming witness", run_dual},
      {"cauchy", "l2 Cauchy family limit extraction", run_cauchy},
      {"hb-extend", "Hahn-Banach extension (one step with x0, else full)",
       run_hb_extend},
      {"norming", "norming functional for a vector", run_norming},
      {"annihilate", "functional vanishing on a subspace, 1 at x",
       run_annihilate},
      {"bilinear", "bilinear form norm and curry isometry", run_bilinear},
      {"tensor", "tensor embed / linearization checks", run_tensor},
  };

  for (auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, args, c.needs_input);
    sub->callback([&result, &ran, &args, fn = c.fn]() {
      result = fn(args);
      ran = true;
    });
  }
  CLI::App* suite = app.add_subcommand("suite", "run every property suite");
  add_common(suite, args, false);
  suite->add_option("--inject", inject,
                    "norm fixture folded into the axiom battery");
  suite->callback([&]() {
    result = run_suite(args, inject);
    ran = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2, --help exits 0
  } catch (const normkit::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // mathematical failure (separation impossible, bad direction, ...)
    Report r;
    r.kind = "error";
    r.fail(e.what());
    emit(r, args);
    std::cerr << e.what() << "\n";
    return 1;
  }

  if (!ran) return 2;
  return result.pass ? 0 : 1;
}
