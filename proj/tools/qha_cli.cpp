// Copyright 2026 The qha Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Exit codes: 0 = success / all checks passed,
// 1 = a mathematical check failed (law violation, failed certificate),
// 2 = usage, parse, or input-structure error.
//
// Input validation follows one convention throughout: structurally bad
// input (unreadable files, malformed JSON, wrong shapes or sizes, bad
// flag values) surfaces as std::invalid_argument / std::runtime_error /
// JSON exceptions and exits 2; well-formed content that violates a
// mathematical law (non-density operators, uneven modification phases,
// cocycle failures) surfaces as std::domain_error or a failed report and
// exits 1.

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qha/bochner_wiener.hpp"
#include "qha/coorbit.hpp"
#include "qha/correspondence.hpp"
#include "qha/fourier.hpp"
#include "qha/verify.hpp"

namespace {

using namespace qha;

struct Config {
  std::string group;
  std::string multiplier = "canonical";
  std::string multiplier_file;
  std::uint64_t seed = 0;
  int trials = 50;
  double tol = 1e-9;
  std::string out;
};

void add_common_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--group", cfg.group,
                  "Group spec, e.g. Z3 or Z2xZ2 (case-insensitive)");
  cmd->add_option("--multiplier", cfg.multiplier,
                  "Multiplier kind: canonical, weyl, or modified")
      ->check(CLI::IsMember({"canonical", "weyl", "modified"}));
  cmd->add_option("--multiplier-file", cfg.multiplier_file,
                  "JSON multiplier (modified phases or a raw table)");
  cmd->add_option("--seed", cfg.seed, "Seed for randomized audits");
  cmd->add_option("--trials", cfg.trials, "Randomized trials per audit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", cfg.tol, "Numerical tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", cfg.out, "Output path (stdout when omitted)");
}

/// Builds the multiplier a command operates on.  A multiplier file wins
/// over --group/--multiplier; "modified" without a file draws seeded
/// random even phases.
Multiplier resolve_multiplier(const Config& cfg) {
  if (!cfg.multiplier_file.empty()) {
    Multiplier m = multiplier_from_json(load_json_file(cfg.multiplier_file));
    if (!cfg.group.empty() &&
        parse_group_orders(cfg.group) != m.group().orders()) {
      throw std::invalid_argument(
          "--group disagrees with the multiplier file");
    }
    return m;
  }
  if (cfg.group.empty()) {
    throw std::invalid_argument("--group is required");
  }
  FiniteAbelianGroup g = make_group(parse_group_orders(cfg.group));
  if (cfg.multiplier == "canonical") {
    return Multiplier::canonical(std::move(g));
  }
  if (cfg.multiplier == "weyl") {
    if (!g.two_regular()) {
      throw std::invalid_argument(
          "the symmetric multiplier needs every cyclic order odd; got " +
          group_spec_string(g.orders()));
    }
    return Multiplier::weyl(std::move(g));
  }
  // "modified": random even unit-modulus phases on top of the canonical
  // multiplier, reproducible from the seed.
  Multiplier base = Multiplier::canonical(std::move(g));
  Rng rng(cfg.seed);
  auto phases = rng.even_phases(base.point_count(),
                                [&](std::int64_t z) { return base.neg(z); });
  return Multiplier::modified(base, std::move(phases));
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

void emit_json(const Json& j, const std::string& out) {
  emit_text(j.dump(2) + "\n", out);
}

PhaseFunction load_phase_function(const PhaseSpace& space,
                                  const std::string& path) {
  CVec v = values_from_json(load_json_file(path));
  if (v.size() != space.point_count()) {
    throw std::invalid_argument(path + ": expected " +
                                std::to_string(space.point_count()) +
                                " phase-space values, got " +
                                std::to_string(v.size()));
  }
  return make_function(space, std::move(v));
}

DualFunction load_dual_function(const PhaseSpace& space,
                                const std::string& path) {
  CVec v = values_from_json(load_json_file(path));
  if (v.size() != space.point_count()) {
    throw std::invalid_argument(path + ": expected " +
                                std::to_string(space.point_count()) +
                                " transform values, got " +
                                std::to_string(v.size()));
  }
  return make_dual_function(space, std::move(v));
}

Operator load_operator(const Representation& rep, const std::string& path) {
  Operator a = operator_from_json(load_json_file(path));
  if (a.rows() != rep.dim()) {
    throw std::invalid_argument(path + ": expected a " +
                                std::to_string(rep.dim()) + "x" +
                                std::to_string(rep.dim()) + " operator");
  }
  return a;
}

CVec load_vector(const Representation& rep, const std::string& path) {
  CVec v = values_from_json(load_json_file(path));
  if (v.size() != rep.dim()) {
    throw std::invalid_argument(path + ": expected " +
                                std::to_string(rep.dim()) +
                                " vector entries, got " +
                                std::to_string(v.size()));
  }
  return v;
}

int cmd_verify(const Config& cfg) {
  const Multiplier m = resolve_multiplier(cfg);
  VerifySettings settings;
  settings.seed = cfg.seed;
  settings.trials = cfg.trials;
  settings.tol = cfg.tol;
  const VerifyOutcome outcome = run_verify(m, settings);
  emit_json(outcome.report, cfg.out);
  if (!outcome.pass) {
    std::cerr << "verification failed: " << outcome.failure_summary << "\n";
    return 1;
  }
  return 0;
}

int cmd_rep_build(const Config& cfg) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  Json j;
  j["group"] = group_to_json(m.group());
  j["multiplier"] = multiplier_to_json(m);
  j["dim"] = rep.dim();
  j["parity"] = operator_to_json(rep.parity());
  Json unitaries = Json::array();
  for (std::int64_t z = 0; z < rep.point_count(); ++z) {
    unitaries.push_back(operator_to_json(rep.unitary(z)));
  }
  j["unitaries"] = std::move(unitaries);
  emit_json(j, cfg.out);
  return 0;
}

int cmd_wigner(const Config& cfg, const std::string& op_file) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  const Operator a = load_operator(rep, op_file);

  std::string warning;
  const double herm = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (herm > cfg.tol) {
    warning = "input is not Hermitian; the grid is complex-valued";
  } else {
    Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (a + a.adjoint()));
    if (es.eigenvalues().minCoeff() < -cfg.tol) {
      warning = "input is not positive semidefinite; negative cells are real";
    }
  }

  const PhaseFunction grid = wigner(rep, a);
  emit_text(phase_function_csv(grid, warning), cfg.out);
  return 0;
}

int cmd_fourier_sigma(const Config& cfg, const std::string& fn_file,
                      bool inverse) {
  const Multiplier m = resolve_multiplier(cfg);
  const PhaseSpace space(m);
  if (inverse) {
    const DualFunction f = load_dual_function(space, fn_file);
    emit_json(values_to_json(fourier_sigma_inv(f).values), cfg.out);
  } else {
    const PhaseFunction f = load_phase_function(space, fn_file);
    emit_json(values_to_json(fourier_sigma(f).values), cfg.out);
  }
  return 0;
}

int cmd_fourier_weyl(const Config& cfg, const std::string& op_file) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  const Operator a = load_operator(rep, op_file);
  emit_json(values_to_json(fourier_weyl(rep, a).values), cfg.out);
  return 0;
}

int cmd_fourier_weyl_inv(const Config& cfg, const std::string& fn_file) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  const DualFunction f = load_dual_function(rep.space(), fn_file);
  emit_json(operator_to_json(fourier_weyl_inv(rep, f)), cfg.out);
  return 0;
}

int cmd_conv_ff(const Config& cfg, const std::string& left,
                const std::string& right) {
  const Multiplier m = resolve_multiplier(cfg);
  const PhaseSpace space(m);
  const PhaseFunction f = load_phase_function(space, left);
  const PhaseFunction g = load_phase_function(space, right);
  emit_json(values_to_json(conv_ff(f, g).values), cfg.out);
  return 0;
}

int cmd_conv_fa(const Config& cfg, const std::string& fn_file,
                const std::string& op_file) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  const PhaseFunction f = load_phase_function(rep.space(), fn_file);
  const Operator a = load_operator(rep, op_file);
  emit_json(operator_to_json(conv_fA(rep, f, a)), cfg.out);
  return 0;
}

int cmd_conv_ab(const Config& cfg, const std::string& left,
                const std::string& right) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  const Operator a = load_operator(rep, left);
  const Operator b = load_operator(rep, right);
  emit_json(values_to_json(conv_AB(rep, a, b).values), cfg.out);
  return 0;
}

int cmd_channel_apply(const Config& cfg, const std::string& rule_file,
                      const std::string& fn_file, const std::string& op_file) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  if (fn_file.empty() && op_file.empty()) {
    throw std::invalid_argument("channel apply needs --fn and/or --op");
  }
  const CorrespondenceRule raw = rule_from_json(load_json_file(rule_file));
  const CorrespondenceRule rule = make_rule(rep, raw.b1, raw.b2, cfg.tol);

  MixedElement u{fn_file.empty()
                     ? constant_function(rep.space(), 0.0)
                     : load_phase_function(rep.space(), fn_file),
                 op_file.empty()
                     ? Operator(Operator::Zero(rep.dim(), rep.dim()))
                     : load_operator(rep, op_file)};
  const MixedElement image = apply_rule(rep, rule, u);
  Json j;
  j["function"] = values_to_json(image.fun.values);
  j["operator"] = operator_to_json(image.op);
  emit_json(j, cfg.out);
  return 0;
}

int cmd_channel_verify(const Config& cfg, const std::string& rule_file) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  const CorrespondenceRule raw = rule_from_json(load_json_file(rule_file));
  const CorrespondenceRule rule = make_rule(rep, raw.b1, raw.b2, cfg.tol);

  Rng rng(cfg.seed);
  const RuleReport rr = verify_rule(rep, rule, cfg.trials, rng);
  const auto recovered = recover_rule(rep, rule);
  const double recovery_dev =
      std::max((recovered.first - rule.b1).cwiseAbs().maxCoeff(),
               (recovered.second - rule.b2).cwiseAbs().maxCoeff());

  Json j;
  j["trials"] = rr.trials;
  j["covariance_max_dev"] = rr.covariance_max_dev;
  j["unit_exchange_dev"] = rr.unit_exchange_dev;
  j["positivity_min_fn"] = rr.positivity_min_fn;
  j["positivity_min_op_eig"] = rr.positivity_min_op_eig;
  j["positivity_structure_dev"] = rr.positivity_structure_dev;
  j["ks_max_violation"] = rr.ks_max_violation;
  j["recovery_dev"] = recovery_dev;
  const bool pass = rr.pass(cfg.tol) && recovery_dev <= cfg.tol;
  j["pass"] = pass;
  emit_json(j, cfg.out);
  if (!pass) {
    std::cerr << "channel verification failed\n";
    return 1;
  }
  return 0;
}

int cmd_wiener(const Config& cfg, const std::string& family_file,
               const std::string& report_file) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  std::vector<Operator> family =
      family_from_json(load_json_file(family_file));
  for (const Operator& a : family) {
    if (a.rows() != rep.dim()) {
      throw std::invalid_argument(family_file +
                                  ": family member has the wrong dimension");
    }
  }
  const WienerReport wr = wiener_report(rep, family);
  Json j;
  j["family_size"] = family.size();
  j["zero_set"] = wr.zero_set;
  j["span_rank"] = wr.span_rank;
  j["function_span_rank"] = wr.function_span_rank;
  j["operator_annihilator_dim"] = wr.operator_annihilator_dim;
  j["function_annihilator_dim"] = wr.function_annihilator_dim;
  Json eq;
  for (const auto& [name, verdict] : wr.equivalences) {
    eq[name] = verdict;
  }
  j["equivalences"] = std::move(eq);
  j["regular"] = wr.regular;
  j["consistent"] = wr.consistent;
  emit_json(j, report_file.empty() ? cfg.out : report_file);
  if (!wr.consistent) {
    std::cerr << "regularity criteria disagree\n";
    return 1;
  }
  return 0;
}

int cmd_bochner(const Config& cfg, const std::string& fn_file) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  const DualFunction f = load_dual_function(rep.space(), fn_file);
  const TwistedPDReport pd = twisted_pd_check(f, cfg.tol);
  const BochnerResult rec = bochner_reconstruct(rep, f, cfg.tol);
  Json j;
  j["gram_min_eigenvalue"] = pd.min_eigenvalue;
  j["gram_hermiticity_dev"] = pd.hermiticity_dev;
  j["positive_definite"] = pd.is_pd;
  j["operator_min_eigenvalue"] = rec.min_eigenvalue;
  j["operator_hermiticity_dev"] = rec.hermiticity_dev;
  j["roundtrip_sup_err"] = rec.roundtrip_sup_err;
  j["certificate_ok"] = rec.certificate_ok;
  if (rec.certificate_ok) {
    j["reconstructed"] = operator_to_json(rec.reconstructed);
  }
  emit_json(j, cfg.out);
  if (!rec.certificate_ok) {
    std::cerr << "positivity certificate failed\n";
    return 1;
  }
  return 0;
}

int cmd_coorbit_wnorm(const Config& cfg, const std::string& vec_file,
                      const std::string& window_file, double p) {
  const Multiplier m = resolve_multiplier(cfg);
  const Representation rep = Representation::build(PhaseSpace(m));
  const CVec f = load_vector(rep, vec_file);
  const Window w = window_file.empty()
                       ? delta_window(rep)
                       : make_window(rep, load_vector(rep, window_file),
                                     cfg.tol);
  Json j;
  j["p"] = p;
  j["co_norm"] = co_norm(rep, w, f, p);
  emit_json(j, cfg.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qha: exact harmonic analysis on finite abelian phase spaces"};
  app.require_subcommand(1);

  Config cfg;

  auto* verify = app.add_subcommand("verify", "Run the full audit suite");
  add_common_options(verify, cfg);

  auto* rep = app.add_subcommand("rep", "Representation tools");
  rep->require_subcommand(1);
  auto* rep_build =
      rep->add_subcommand("build", "Serialize the shift system and parity");
  add_common_options(rep_build, cfg);

  std::string op_file;
  auto* wigner_cmd =
      app.add_subcommand("wigner", "Phase-space grid of an operator (CSV)");
  add_common_options(wigner_cmd, cfg);
  wigner_cmd->add_option("--op", op_file, "Operator JSON")->required();

  auto* fourier = app.add_subcommand("fourier", "Fourier transforms");
  fourier->require_subcommand(1);
  std::string fourier_fn;
  auto* f_sigma = fourier->add_subcommand(
      "sigma", "Self-inverse symplectic transform of a phase-space function");
  add_common_options(f_sigma, cfg);
  f_sigma->add_option("--fn", fourier_fn, "Function JSON")->required();
  bool sigma_inverse = false;
  f_sigma->add_flag("--inverse", sigma_inverse,
                    "Apply the inverse transform (identical map)");
  auto* f_weyl =
      fourier->add_subcommand("weyl", "Operator transform to a function");
  add_common_options(f_weyl, cfg);
  f_weyl->add_option("--op", op_file, "Operator JSON")->required();
  auto* f_weylinv = fourier->add_subcommand(
      "weylinv", "Inverse operator transform of a function");
  add_common_options(f_weylinv, cfg);
  f_weylinv->add_option("--fn", fourier_fn, "Transform values JSON")
      ->required();

  auto* conv = app.add_subcommand("conv", "Convolutions");
  conv->require_subcommand(1);
  std::string conv_left, conv_right, conv_fn, conv_op;
  auto* c_ff =
      conv->add_subcommand("ff", "Convolve two phase-space functions");
  add_common_options(c_ff, cfg);
  c_ff->add_option("--left", conv_left, "Function JSON")->required();
  c_ff->add_option("--right", conv_right, "Function JSON")->required();
  auto* c_fa =
      conv->add_subcommand("fa", "Convolve a function with an operator");
  add_common_options(c_fa, cfg);
  c_fa->add_option("--fn", conv_fn, "Function JSON")->required();
  c_fa->add_option("--op", conv_op, "Operator JSON")->required();
  auto* c_ab = conv->add_subcommand(
      "ab", "Convolve two operators into a phase-space function");
  add_common_options(c_ab, cfg);
  c_ab->add_option("--left", conv_left, "Operator JSON")->required();
  c_ab->add_option("--right", conv_right, "Operator JSON")->required();

  auto* channel = app.add_subcommand("channel", "Correspondence rules");
  channel->require_subcommand(1);
  std::string rule_file, channel_fn, channel_op;
  auto* ch_apply = channel->add_subcommand(
      "apply", "Apply a correspondence rule to a mixed pair");
  add_common_options(ch_apply, cfg);
  ch_apply->add_option("--rule", rule_file, "Rule JSON {b1, b2}")->required();
  ch_apply->add_option("--fn", channel_fn, "Function JSON (optional)");
  ch_apply->add_option("--op", channel_op, "Operator JSON (optional)");
  auto* ch_verify = channel->add_subcommand(
      "verify", "Audit covariance, positivity, and recovery of a rule");
  add_common_options(ch_verify, cfg);
  ch_verify->add_option("--rule", rule_file, "Rule JSON {b1, b2}")
      ->required();

  auto* wiener_cmd =
      app.add_subcommand("wiener", "Regularity audit of an operator family");
  add_common_options(wiener_cmd, cfg);
  std::string family_file, report_file;
  wiener_cmd->add_option("--family", family_file, "Family JSON {operators}")
      ->required();
  wiener_cmd->add_option("--report", report_file,
                         "Report path (alias for --out)");

  auto* bochner_cmd = app.add_subcommand(
      "bochner", "Positivity certificate and reconstruction of a transform");
  add_common_options(bochner_cmd, cfg);
  std::string bochner_fn;
  bochner_cmd->add_option("--fn", bochner_fn, "Transform values JSON")
      ->required();

  auto* coorbit = app.add_subcommand("coorbit", "Coefficient-space tools");
  coorbit->require_subcommand(1);
  auto* co_wnorm = coorbit->add_subcommand(
      "wnorm", "Coefficient p-norm of a vector against a window");
  add_common_options(co_wnorm, cfg);
  std::string vec_file, window_file;
  double p = 2.0;
  co_wnorm->add_option("--vec", vec_file, "Vector JSON")->required();
  co_wnorm->add_option("--p", p, "Exponent in [1, inf)")
      ->check(CLI::Range(1.0, 1e9));
  co_wnorm->add_option("--window", window_file,
                       "Window vector JSON (default: point mass at 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    if (rep->got_subcommand(rep_build)) return cmd_rep_build(cfg);
    if (app.got_subcommand(wigner_cmd)) return cmd_wigner(cfg, op_file);
    if (fourier->got_subcommand(f_sigma))
      return cmd_fourier_sigma(cfg, fourier_fn, sigma_inverse);
    if (fourier->got_subcommand(f_weyl)) return cmd_fourier_weyl(cfg, op_file);
    if (fourier->got_subcommand(f_weylinv))
      return cmd_fourier_weyl_inv(cfg, fourier_fn);
    if (conv->got_subcommand(c_ff))
      return cmd_conv_ff(cfg, conv_left, conv_right);
    if (conv->got_subcommand(c_fa)) return cmd_conv_fa(cfg, conv_fn, conv_op);
    if (conv->got_subcommand(c_ab))
      return cmd_conv_ab(cfg, conv_left, conv_right);
    if (channel->got_subcommand(ch_apply))
      return cmd_channel_apply(cfg, rule_file, channel_fn, channel_op);
    if (channel->got_subcommand(ch_verify))
      return cmd_channel_verify(cfg, rule_file);
    if (app.got_subcommand(wiener_cmd))
      return cmd_wiener(cfg, family_file, report_file);
    if (app.got_subcommand(bochner_cmd)) return cmd_bochner(cfg, bochner_fn);
    if (coorbit->got_subcommand(co_wnorm))
      return cmd_coorbit_wnorm(cfg, vec_file, window_file, p);
    std::cerr << "no command selected\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid content: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
