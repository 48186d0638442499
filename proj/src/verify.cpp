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

#include "qha/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "qha/bochner_wiener.hpp"
#include "qha/coorbit.hpp"
#include "qha/correspondence.hpp"
#include "qha/fourier.hpp"

namespace qha {

namespace {

std::string format_dev(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// Collects per-section results and the overall failure text.
struct SuiteState {
  Json checks = Json::object();
  bool pass = true;
  std::string failures;

  void add(const std::string& name, Json section, bool section_pass,
           const std::string& detail) {
    section["pass"] = section_pass;
    checks[name] = std::move(section);
    if (!section_pass) {
      pass = false;
      if (!failures.empty()) {
        failures += "; ";
      }
      failures += name;
      if (!detail.empty()) {
        failures += ": " + detail;
      }
    }
  }
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.derived().cwiseAbs().maxCoeff();
}

}  // namespace

VerifyOutcome run_verify(const Multiplier& multiplier,
                         const VerifySettings& settings) {
  const double tol = settings.tol;
  const int trials = std::max(1, settings.trials);
  Rng rng(settings.seed);

  Json report;
  report["config"] = {
      {"group", group_spec_string(multiplier.group().orders())},
      {"multiplier", to_string(multiplier.kind())},
      {"seed", settings.seed},
      {"trials", trials},
      {"tolerance", tol},
      {"generator", Rng::generator_name()},
  };

  SuiteState suite;

  // --- Multiplier laws -----------------------------------------------------
  const MultiplierReport mrep = verify_multiplier(multiplier);
  {
    Json j;
    j["normalization_max_dev"] = mrep.normalization_max_dev;
    j["cocycle_max_dev"] = mrep.cocycle_max_dev;
    j["symmetry_max_dev"] = mrep.symmetry_max_dev;
    j["modulus_max_dev"] = mrep.modulus_max_dev;
    std::string detail;
    const std::pair<const char*, double> laws[] = {
        {"cocycle", mrep.cocycle_max_dev},
        {"normalization", mrep.normalization_max_dev},
        {"symmetry", mrep.symmetry_max_dev},
        {"modulus", mrep.modulus_max_dev},
    };
    for (const auto& [law, dev] : laws) {
      if (dev > tol) {
        if (!detail.empty()) {
          detail += ", ";
        }
        detail += std::string(law) + " deviation " + format_dev(dev);
      }
    }
    suite.add("multiplier", std::move(j), mrep.pass(tol), detail);
  }

  const PhaseSpace space(multiplier);

  // --- Nondegeneracy of the antisymmetrized form ---------------------------
  {
    const bool ok = verify_heisenberg(space, tol);
    Json j;
    j["nondegenerate"] = ok;
    suite.add("nondegeneracy", std::move(j), ok,
              ok ? "" : "antisymmetrized form has a degenerate direction");
  }

  const bool rep_available = multiplier.kind() != MultiplierKind::table;
  report["representation_available"] = rep_available;

  if (!rep_available) {
    report["checks"] = std::move(suite.checks);
    report["overall_pass"] = suite.pass;
    VerifyOutcome out;
    out.report = std::move(report);
    out.pass = suite.pass;
    out.failure_summary = suite.failures;
    return out;
  }

  const Representation rep = Representation::build(space);
  const std::int64_t d = space.group().size();
  const std::int64_t n = space.point_count();
  const double w = space.weight();

  // --- Representation: commutation, adjoints, overlaps, irreducibility -----
  {
    Json j;
    const double ccr = ccr_max_deviation(rep);
    const double adj = adjoint_law_max_deviation(rep);
    const double moyal = moyal_max_deviation(rep, trials, rng);
    const std::int64_t span = unitary_span_rank(rep);
    const bool full = span == n;
    j["ccr_max_dev"] = ccr;
    j["adjoint_max_dev"] = adj;
    j["moyal_max_dev"] = moyal;
    j["span_rank"] = span;
    j["span_full"] = full;
    const bool ok = ccr <= tol && adj <= tol && moyal <= tol && full;
    std::string detail;
    if (ccr > tol) detail = "commutation deviation " + format_dev(ccr);
    if (adj > tol) detail += (detail.empty() ? "" : ", ") +
                             ("adjoint deviation " + format_dev(adj));
    if (moyal > tol) detail += (detail.empty() ? "" : ", ") +
                               ("overlap deviation " + format_dev(moyal));
    if (!full) detail += (detail.empty() ? "" : ", ") +
                         std::string("shift system does not span");
    suite.add("representation", std::move(j), ok, detail);
  }

  // --- Convolution algebra --------------------------------------------------
  {
    double unit_dev = 0.0;
    double comm_dev = 0.0;
    double assoc_dev = 0.0;
    double integral_dev = 0.0;
    double one_conv_dev = 0.0;
    const MixedElement unit = mixed_unit(space);
    for (int t = 0; t < trials; ++t) {
      MixedElement u{make_function(space, rng.vector(n)), rng.matrix(d)};
      MixedElement v{make_function(space, rng.vector(n)), rng.matrix(d)};
      MixedElement x{make_function(space, rng.vector(n)), rng.matrix(d)};

      const MixedElement iu = banach_product(rep, unit, u);
      unit_dev = std::max(unit_dev, max_abs(iu.fun.values - u.fun.values));
      unit_dev = std::max(unit_dev, max_abs(iu.op - u.op));

      const MixedElement uv = banach_product(rep, u, v);
      const MixedElement vu = banach_product(rep, v, u);
      comm_dev = std::max(comm_dev, max_abs(uv.fun.values - vu.fun.values));
      comm_dev = std::max(comm_dev, max_abs(uv.op - vu.op));

      const MixedElement uv_x = banach_product(rep, uv, x);
      const MixedElement u_vx = banach_product(rep, u, banach_product(rep, v, x));
      assoc_dev = std::max(assoc_dev, max_abs(uv_x.fun.values - u_vx.fun.values));
      assoc_dev = std::max(assoc_dev, max_abs(uv_x.op - u_vx.op));

      const PhaseFunction ab = conv_AB(rep, u.op, v.op);
      const Cplx integral = w * ab.values.sum();
      integral_dev = std::max(
          integral_dev, std::abs(integral - u.op.trace() * v.op.trace()));

      const Operator smeared = conv_fA(rep, constant_function(space, 1.0), u.op);
      one_conv_dev = std::max(
          one_conv_dev,
          max_abs(smeared - u.op.trace() * Operator::Identity(d, d)));
    }
    Json j;
    j["unit_dev"] = unit_dev;
    j["commutativity_dev"] = comm_dev;
    j["associativity_dev"] = assoc_dev;
    j["integral_identity_dev"] = integral_dev;
    j["constant_smearing_dev"] = one_conv_dev;
    const double worst = std::max(
        {unit_dev, comm_dev, assoc_dev, integral_dev, one_conv_dev});
    suite.add("convolution", std::move(j), worst <= tol,
              worst <= tol ? "" : "worst deviation " + format_dev(worst));
  }

  // --- Norm inequalities over the exponent grid ------------------------------
  {
    const YoungReport young = verify_young(rep, trials, rng);
    Json j;
    j["trials"] = young.trials;
    j["combinations"] = young.combinations;
    j["violations"] = young.violations;
    j["max_excess"] = young.max_excess;
    suite.add("young", std::move(j), young.pass(),
              young.pass() ? ""
                           : std::to_string(young.violations) +
                                 " violations, worst excess " +
                                 format_dev(young.max_excess));
  }

  // --- Positivity transport ---------------------------------------------------
  {
    const PositivityReport pos = verify_positivity(rep, trials, rng);
    Json j;
    j["trials"] = pos.trials;
    j["min_smeared_eigenvalue"] = pos.min_fA_eigenvalue;
    j["min_correlation_value"] = pos.min_AB_value;
    j["max_correlation_imag"] = pos.max_AB_imag;
    j["converse_probes"] = pos.converse_total;
    j["converse_detected"] = pos.converse_detected;
    suite.add("positivity", std::move(j), pos.pass(tol),
              pos.pass(tol) ? "" : "positivity transport failed");
  }

  // --- Symplectic transform ----------------------------------------------------
  {
    double self_inv_dev = 0.0;
    double plancherel_dev = 0.0;
    double shift_dev = 0.0;
    double mod_dev = 0.0;
    double conv_dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const PhaseFunction f = make_function(space, rng.vector(n));
      const PhaseFunction g = make_function(space, rng.vector(n));
      const DualFunction tf = fourier_sigma(f);
      const PhaseFunction back = fourier_sigma_inv(tf);
      self_inv_dev = std::max(self_inv_dev, max_abs(back.values - f.values));

      const double norm_f = lp_norm(f, 2.0);
      const double norm_tf = lp_norm(tf, 2.0);
      plancherel_dev = std::max(plancherel_dev, std::abs(norm_f - norm_tf));

      const std::int64_t x = rng.index(n);
      // Transform of a shift is modulation by sigma(x, .).
      const DualFunction t_shift = fourier_sigma(translate(f, x));
      // Transform of the modulation is the shifted transform.
      CVec modulated(n);
      for (std::int64_t z = 0; z < n; ++z) {
        modulated(z) = space.sigma(x, z) * f.values(z);
      }
      const DualFunction t_mod = fourier_sigma(make_function(space, modulated));
      const DualFunction tf_shifted = translate(tf, x);
      for (std::int64_t z = 0; z < n; ++z) {
        shift_dev = std::max(shift_dev,
                             std::abs(t_shift.values(z) -
                                      space.sigma(x, z) * tf.values(z)));
        mod_dev = std::max(mod_dev,
                           std::abs(t_mod.values(z) - tf_shifted.values(z)));
      }

      const DualFunction t_conv = fourier_sigma(conv_ff(f, g));
      const DualFunction tg = fourier_sigma(g);
      conv_dev = std::max(
          conv_dev,
          max_abs(t_conv.values - tf.values.cwiseProduct(tg.values)));
    }
    Json j;
    j["self_inverse_dev"] = self_inv_dev;
    j["plancherel_dev"] = plancherel_dev;
    j["shift_dev"] = shift_dev;
    j["modulation_dev"] = mod_dev;
    j["convolution_theorem_dev"] = conv_dev;
    const double worst =
        std::max({self_inv_dev, plancherel_dev, shift_dev, mod_dev, conv_dev});
    suite.add("fourier_sigma", std::move(j), worst <= tol,
              worst <= tol ? "" : "worst deviation " + format_dev(worst));
  }

  // --- Operator transform ---------------------------------------------------
  {
    double unitary_line_dev = 0.0;
    for (std::int64_t z = 0; z < n; ++z) {
      const DualFunction tu = fourier_weyl(rep, rep.unitary(z));
      for (std::int64_t xi = 0; xi < n; ++xi) {
        const Cplx expected = xi == z ? Cplx(static_cast<double>(d), 0.0)
                                      : Cplx(0.0, 0.0);
        unitary_line_dev =
            std::max(unitary_line_dev, std::abs(tu.values(xi) - expected));
      }
    }
    double roundtrip_dev = 0.0;
    double plancherel_dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Operator a = rng.matrix(d);
      const DualFunction ta = fourier_weyl(rep, a);
      roundtrip_dev =
          std::max(roundtrip_dev, max_abs(fourier_weyl_inv(rep, ta) - a));
      plancherel_dev = std::max(
          plancherel_dev, std::abs(lp_norm(ta, 2.0) - schatten_norm(a, 2.0)));
    }
    const std::int64_t span = unitary_span_rank(rep);
    Json j;
    j["point_mass_dev"] = unitary_line_dev;
    j["roundtrip_dev"] = roundtrip_dev;
    j["plancherel_dev"] = plancherel_dev;
    j["injectivity_rank"] = span;
    j["injective"] = span == n;
    const bool ok = unitary_line_dev <= tol && roundtrip_dev <= tol &&
                    plancherel_dev <= tol && span == n;
    suite.add("fourier_weyl", std::move(j), ok,
              ok ? ""
                 : "worst deviation " +
                       format_dev(std::max({unitary_line_dev, roundtrip_dev,
                                            plancherel_dev})));
  }

  // --- Interaction laws between the transforms -------------------------------
  {
    double smear_dev = 0.0;      // transform of f * A
    double correlation_dev = 0.0;  // symplectic transform of A * B
    double shift_dev = 0.0;      // transform of alpha_eta(A)
    double exchange_dev = 0.0;   // shifted transform as a one-sided product
    double adjoint_dev = 0.0;    // inverse transform of the twisted adjoint
    double product_dev = 0.0;    // transform of AB as twisted convolution
    for (int t = 0; t < trials; ++t) {
      const Operator a = rng.matrix(d);
      const Operator b = rng.matrix(d);
      const PhaseFunction f = make_function(space, rng.vector(n));
      const DualFunction ta = fourier_weyl(rep, a);
      const DualFunction tb = fourier_weyl(rep, b);

      const DualFunction t_fa = fourier_weyl(rep, conv_fA(rep, f, a));
      const DualFunction tf = fourier_sigma(f);
      smear_dev = std::max(
          smear_dev, max_abs(t_fa.values - tf.values.cwiseProduct(ta.values)));

      const DualFunction t_ab = fourier_sigma(conv_AB(rep, a, b));
      CVec expected(n);
      for (std::int64_t xi = 0; xi < n; ++xi) {
        expected(xi) = space.m(xi, space.neg(xi)) * ta.values(xi) * tb.values(xi);
      }
      correlation_dev = std::max(correlation_dev,
                                 max_abs(t_ab.values - expected));

      const std::int64_t eta = rng.index(n);
      const DualFunction t_shift = fourier_weyl(rep, rep.shift(eta, a));
      for (std::int64_t xi = 0; xi < n; ++xi) {
        shift_dev = std::max(shift_dev,
                             std::abs(t_shift.values(xi) -
                                      space.sigma(eta, xi) * ta.values(xi)));
      }

      const DualFunction ta_translated = translate(ta, eta);
      const Operator one_sided =
          a * rep.unitary(space.neg(eta)).adjoint();
      const DualFunction t_one_sided = fourier_weyl(rep, one_sided);
      for (std::int64_t xi = 0; xi < n; ++xi) {
        exchange_dev =
            std::max(exchange_dev,
                     std::abs(ta_translated.values(xi) -
                              space.m(xi, space.neg(eta)) *
                                  t_one_sided.values(xi)));
      }

      const DualFunction tf_dual = make_dual_function(space, rng.vector(n));
      adjoint_dev = std::max(
          adjoint_dev,
          max_abs(fourier_weyl_inv(rep, tf_dual).adjoint() -
                  fourier_weyl_inv(rep, adjoint_twist(tf_dual))));

      const DualFunction t_prod = fourier_weyl(rep, a * b);
      const DualFunction twisted = twisted_conv(ta, tb);
      product_dev = std::max(product_dev,
                             max_abs(t_prod.values - twisted.values));
    }
    Json j;
    j["smearing_transform_dev"] = smear_dev;
    j["correlation_transform_dev"] = correlation_dev;
    j["shift_transform_dev"] = shift_dev;
    j["translation_exchange_dev"] = exchange_dev;
    j["adjoint_twist_dev"] = adjoint_dev;
    j["twisted_product_dev"] = product_dev;
    const double worst = std::max({smear_dev, correlation_dev, shift_dev,
                                   exchange_dev, adjoint_dev, product_dev});
    suite.add("fourier_identities", std::move(j), worst <= tol,
              worst <= tol ? "" : "worst deviation " + format_dev(worst));
  }

  // --- Hausdorff-Young ----------------------------------------------------
  {
    const HausdorffYoungReport hy = verify_hausdorff_young(rep, trials, rng);
    Json j;
    j["trials"] = hy.trials;
    j["violations"] = hy.violations;
    j["max_excess"] = hy.max_excess;
    j["plancherel_max_dev"] = hy.plancherel_max_dev;
    suite.add("hausdorff_young", std::move(j), hy.pass(tol),
              hy.pass(tol) ? ""
                           : std::to_string(hy.violations) + " violations");
  }

  // --- Modulation (symmetric multiplier only) -------------------------------
  {
    Json j;
    bool ok = true;
    std::string detail;
    if (multiplier.kind() == MultiplierKind::weyl) {
      const ModulationReport mod = verify_modulation(rep, trials, rng);
      j["skipped"] = false;
      j["max_dev"] = mod.max_dev;
      ok = mod.pass(tol);
      if (!ok) detail = "deviation " + format_dev(mod.max_dev);
    } else {
      j["skipped"] = true;
    }
    suite.add("modulation", std::move(j), ok, detail);
  }

  // --- Positive-transform certification --------------------------------------
  {
    double roundtrip = 0.0;
    int pd_failures = 0;
    for (int t = 0; t < trials; ++t) {
      const Operator rho = rng.density(d);
      const DualFunction f = fourier_weyl(rep, rho);
      const TwistedPDReport pd = twisted_pd_check(f, tol);
      if (!pd.is_pd) {
        ++pd_failures;
      }
      const BochnerResult rec = bochner_reconstruct(rep, f, tol);
      roundtrip = std::max(roundtrip, rec.roundtrip_sup_err);
      if (!rec.certificate_ok) {
        ++pd_failures;
      }
    }
    const int indefinite_probes = std::max(5, trials / 5);
    int detected = 0;
    double worst_min_eig = 0.0;
    for (int t = 0; t < indefinite_probes; ++t) {
      const Operator bad = rng.indefinite_hermitian(d, 0.1);
      const DualFunction f = fourier_weyl(rep, bad);
      const TwistedPDReport pd = twisted_pd_check(f, tol);
      if (!pd.is_pd && pd.min_eigenvalue < -1e-6) {
        ++detected;
      }
      worst_min_eig = std::min(worst_min_eig, pd.min_eigenvalue);
    }
    Json j;
    j["densities"] = trials;
    j["density_certificate_failures"] = pd_failures;
    j["roundtrip_max_err"] = roundtrip;
    j["indefinite_probes"] = indefinite_probes;
    j["indefinite_detected"] = detected;
    j["worst_indefinite_min_eigenvalue"] = worst_min_eig;
    const bool ok =
        pd_failures == 0 && roundtrip <= tol && detected == indefinite_probes;
    suite.add("bochner", std::move(j), ok,
              ok ? ""
                 : pd_failures > 0
                       ? "positive input failed certification"
                       : detected != indefinite_probes
                             ? "indefinite input escaped detection"
                             : "roundtrip error " + format_dev(roundtrip));
  }

  // --- Regularity equivalences ------------------------------------------------
  {
    const int families = std::max(3, trials / 10);
    int consistent = 0;
    int regular = 0;
    for (int t = 0; t < families; ++t) {
      const WienerReport wr = wiener_report(rep, {rng.matrix(d)});
      if (wr.consistent) ++consistent;
      if (wr.regular) ++regular;
    }
    const WienerReport idrep =
        wiener_report(rep, {Operator::Identity(d, d)});
    Json j;
    j["random_families"] = families;
    j["consistent_families"] = consistent;
    j["regular_families"] = regular;
    j["identity_span_rank"] = idrep.span_rank;
    j["identity_regular"] = idrep.regular;
    j["identity_consistent"] = idrep.consistent;
    const bool ok = consistent == families && !idrep.regular &&
                    idrep.consistent && idrep.span_rank == 1;
    suite.add("wiener", std::move(j), ok,
              ok ? "" : "criteria disagree on some family");
  }

  // --- Correspondence rules --------------------------------------------------
  {
    const CorrespondenceRule rule =
        make_rule(rep, rng.density(d), rng.density(d), tol);
    const RuleReport rr = verify_rule(rep, rule, trials, rng);

    int op_side_holds = 0;
    int normalized_holds = 0;
    int printed_holds = 0;
    for (int t = 0; t < trials; ++t) {
      const Operator a = rng.hermitian(d);
      const CVec raw = rng.vector(n);
      const PhaseFunction f =
          make_function(space, raw.real().cast<Cplx>());
      const BerezinLiebReport bl =
          berezin_lieb_check(rep, rule, a, f, ConvexProbe::square, tol);
      if (bl.operator_side_holds) ++op_side_holds;
      if (bl.normalized_holds) ++normalized_holds;
      if (bl.printed_holds) ++printed_holds;
    }

    const auto [rb1, rb2] = recover_rule(rep, rule);
    const double rec_dev = std::max(max_abs(rb1 - rule.b1),
                                    max_abs(rb2 - rule.b2));

    Json j;
    j["covariance_max_dev"] = rr.covariance_max_dev;
    j["unit_exchange_dev"] = rr.unit_exchange_dev;
    j["positivity_min_fn"] = rr.positivity_min_fn;
    j["positivity_min_op_eig"] = rr.positivity_min_op_eig;
    j["positivity_structure_dev"] = rr.positivity_structure_dev;
    j["ks_max_violation"] = rr.ks_max_violation;
    j["trace_comparison_trials"] = trials;
    j["operator_side_holds"] = op_side_holds;
    j["normalized_function_side_holds"] = normalized_holds;
    j["printed_function_side_holds"] = printed_holds;
    j["recovery_dev"] = rec_dev;
    const bool ok = rr.pass(tol) && op_side_holds == trials &&
                    normalized_holds == trials && rec_dev <= tol;
    std::string detail;
    if (!rr.pass(tol)) detail = "channel law violated";
    if (op_side_holds != trials || normalized_holds != trials) {
      detail += (detail.empty() ? "" : ", ");
      detail += "trace comparison violated";
    }
    if (rec_dev > tol) {
      detail += (detail.empty() ? "" : ", ");
      detail += "recovery deviation " + format_dev(rec_dev);
    }
    suite.add("correspondence", std::move(j), ok, detail);
  }

  // --- Transform-side norms ---------------------------------------------------
  {
    const Window w0 = delta_window(rep);
    const Window w1 = symmetrized_window(rep, rng.vector(d));

    double isometry_dev = 0.0;
    double inversion_dev = 0.0;
    double co2_dev = 0.0;
    double equivariance_dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const CVec f = rng.vector(d);
      const PhaseFunction wf = wavelet_transform(rep, w0, f);
      isometry_dev =
          std::max(isometry_dev, std::abs(lp_norm(wf, 2.0) - f.norm()));
      inversion_dev =
          std::max(inversion_dev, max_abs(wavelet_adjoint(rep, w0, wf) - f));
      // Any unit window yields an isometric transform, so the p = 2
      // coefficient norm matches the Hilbert norm for both windows.
      co2_dev = std::max(
          co2_dev, std::abs(co_norm(rep, w1, f, 2.0) - f.norm()));
      co2_dev = std::max(
          co2_dev, std::abs(co_norm(rep, w0, f, 2.0) - f.norm()));
      const std::int64_t y = rng.index(n);
      equivariance_dev = std::max(equivariance_dev,
                                  wavelet_equivariance_dev(rep, w0, f, y));
    }

    double idempotent_dev = 0.0;
    double range_fix_dev = 0.0;
    for (int t = 0; t < trials; ++t) {
      const PhaseFunction g = make_function(space, rng.vector(n));
      const PhaseFunction pg = reproducing_projection(rep, w0, g);
      const PhaseFunction ppg = reproducing_projection(rep, w0, pg);
      idempotent_dev = std::max(idempotent_dev, max_abs(ppg.values - pg.values));
      const PhaseFunction wf = wavelet_transform(rep, w0, rng.vector(d));
      const PhaseFunction pwf = reproducing_projection(rep, w0, wf);
      range_fix_dev = std::max(range_fix_dev, max_abs(pwf.values - wf.values));
    }

    const WindowEquivalenceReport weq =
        window_equivalence(rep, w0, w1, 2.0, std::max(100, trials), rng);
    const double l1_ratio = conv_l1_bound_ratio(rep, trials, rng);

    const PIndependenceReport pind =
        wiener_p_independence(rep, {rng.matrix(d)}, {1.5, 2.0, 3.0});

    Json j;
    j["isometry_dev"] = isometry_dev;
    j["inversion_dev"] = inversion_dev;
    j["hilbert_norm_dev"] = co2_dev;
    j["equivariance_dev"] = equivariance_dev;
    j["projection_idempotent_dev"] = idempotent_dev;
    j["projection_range_fix_dev"] = range_fix_dev;
    j["window_ratio_min"] = weq.min_ratio;
    j["window_ratio_max"] = weq.max_ratio;
    j["correlation_l1_contraction"] = l1_ratio;
    j["p_independence_identical"] = pind.identical;
    j["p_annihilator_residuals"] = pind.annihilator_residuals;
    const double worst = std::max({isometry_dev, inversion_dev, co2_dev,
                                   equivariance_dev, idempotent_dev,
                                   range_fix_dev});
    const bool ok = worst <= tol && weq.min_ratio > 0.0 &&
                    std::isfinite(weq.max_ratio) &&
                    l1_ratio <= 1.0 + tol && pind.identical;
    suite.add("coorbit", std::move(j), ok,
              ok ? "" : "worst deviation " + format_dev(worst));
  }

  report["checks"] = std::move(suite.checks);
  report["overall_pass"] = suite.pass;

  VerifyOutcome out;
  out.report = std::move(report);
  out.pass = suite.pass;
  out.failure_summary = suite.failures;
  return out;
}

}  // namespace qha
