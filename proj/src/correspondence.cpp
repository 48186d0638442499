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

#include "qha/correspondence.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qha {

namespace {

void require_density(const Operator& b, int64_t dim, double tol,
                     const char* which) {
  if (b.rows() != dim || b.cols() != dim) {
    throw std::invalid_argument(std::string(which) +
                                ": dimension does not match the group");
  }
  const double herm = (b - b.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) {
    throw std::domain_error(std::string(which) + ": not Hermitian");
  }
  const double trace_dev = std::abs(b.trace() - Cplx(1.0, 0.0));
  if (trace_dev > tol) {
    throw std::domain_error(std::string(which) + ": trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (b + b.adjoint()));
  if (es.eigenvalues().minCoeff() < -tol) {
    throw std::domain_error(std::string(which) +
                            ": has a negative eigenvalue");
  }
}

double min_eigenvalue(const Operator& a) {
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (a + a.adjoint()));
  return es.eigenvalues().minCoeff();
}

double hermiticity_dev(const Operator& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

CorrespondenceRule make_rule(const Representation& rep, Operator b1,
                             Operator b2, double tol) {
  const int64_t d = rep.space().group().size();
  require_density(b1, d, tol, "b1");
  require_density(b2, d, tol, "b2");
  return CorrespondenceRule{std::move(b1), std::move(b2)};
}

MixedElement apply_rule(const Representation& rep,
                        const CorrespondenceRule& rule,
                        const MixedElement& u) {
  return MixedElement{conv_AB(rep, u.op, rule.b1),
                      conv_fA(rep, u.fun, rule.b2)};
}

MixedElement cstar_product(const MixedElement& u, const MixedElement& v) {
  require_same_space(u.fun.space, v.fun.space);
  MixedElement out{u.fun, u.op * v.op};
  out.fun.values = u.fun.values.cwiseProduct(v.fun.values);
  return out;
}

MixedElement mixed_adjoint(const MixedElement& u) {
  MixedElement out{u.fun, u.op.adjoint()};
  out.fun.values = u.fun.values.conjugate();
  return out;
}

RuleReport verify_rule(const Representation& rep,
                       const CorrespondenceRule& rule, int trials, Rng& rng) {
  const PhaseSpace& s = rep.space();
  const int64_t n = s.point_count();
  const int64_t d = s.group().size();

  RuleReport report;
  report.trials = trials;

  // Unit exchanges: the constant function becomes the identity operator and
  // the identity operator becomes the constant function 1.
  {
    MixedElement one_fn{constant_function(s, 1.0),
                        Operator::Zero(d, d)};
    const MixedElement img = apply_rule(rep, rule, one_fn);
    double dev = img.fun.values.cwiseAbs().maxCoeff();
    dev = std::max(dev,
                   (img.op - Operator::Identity(d, d)).cwiseAbs().maxCoeff());

    MixedElement id_op{constant_function(s, 0.0),
                       Operator::Identity(d, d)};
    const MixedElement img2 = apply_rule(rep, rule, id_op);
    dev = std::max(
        dev, (img2.fun.values - CVec::Ones(n)).cwiseAbs().maxCoeff());
    dev = std::max(dev, img2.op.cwiseAbs().maxCoeff());
    report.unit_exchange_dev = dev;
  }

  double covariance = 0.0;
  double min_fn = std::numeric_limits<double>::infinity();
  double min_op = std::numeric_limits<double>::infinity();
  double structure = 0.0;
  double ks = 0.0;

  for (int t = 0; t < trials; ++t) {
    // Shift covariance on a random mixed element, swept over every shift.
    MixedElement u{make_function(s, rng.vector(n)), rng.matrix(d)};
    const MixedElement img = apply_rule(rep, rule, u);
    for (int64_t x = 0; x < n; ++x) {
      MixedElement shifted_in{translate(u.fun, x), rep.shift(x, u.op)};
      const MixedElement lhs = apply_rule(rep, rule, shifted_in);
      const PhaseFunction rhs_fun = translate(img.fun, x);
      const Operator rhs_op = rep.shift(x, img.op);
      covariance = std::max(
          covariance, (lhs.fun.values - rhs_fun.values).cwiseAbs().maxCoeff());
      covariance =
          std::max(covariance, (lhs.op - rhs_op).cwiseAbs().maxCoeff());
    }

    // Positivity transport: nonnegative function + density operator in.
    const CVec raw = rng.vector(n);
    MixedElement pos{make_function(s, raw.cwiseAbs2().cast<Cplx>()),
                     rng.density(d)};
    const MixedElement pimg = apply_rule(rep, rule, pos);
    min_fn = std::min(min_fn, pimg.fun.values.real().minCoeff());
    structure = std::max(structure, pimg.fun.values.imag().cwiseAbs().maxCoeff());
    min_op = std::min(min_op, min_eigenvalue(pimg.op));
    structure = std::max(structure, hermiticity_dev(pimg.op));

    // Kadison-Schwarz in the C*-product.
    const MixedElement ustar = mixed_adjoint(u);
    const MixedElement lhs =
        cstar_product(apply_rule(rep, rule, ustar), apply_rule(rep, rule, u));
    const MixedElement rhs = apply_rule(rep, rule, cstar_product(ustar, u));
    const CVec fn_gap = rhs.fun.values - lhs.fun.values;
    double viol = std::max(0.0, -fn_gap.real().minCoeff());
    viol = std::max(viol, fn_gap.imag().cwiseAbs().maxCoeff());
    const Operator op_gap = rhs.op - lhs.op;
    viol = std::max(viol, hermiticity_dev(op_gap));
    viol = std::max(viol, std::max(0.0, -min_eigenvalue(op_gap)));
    ks = std::max(ks, viol);
  }

  report.covariance_max_dev = covariance;
  report.positivity_min_fn = trials > 0 ? min_fn : 0.0;
  report.positivity_min_op_eig = trials > 0 ? min_op : 0.0;
  report.positivity_structure_dev = structure;
  report.ks_max_violation = ks;
  return report;
}

double probe_value(ConvexProbe phi, double t) {
  switch (phi) {
    case ConvexProbe::square:
      return t * t;
    case ConvexProbe::abs_value:
      return std::abs(t);
    case ConvexProbe::exponential:
      return std::exp(t);
  }
  throw std::invalid_argument("unknown convex probe");
}

double probe_trace(ConvexProbe phi, const Operator& a) {
  Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (a + a.adjoint()));
  double acc = 0.0;
  for (int64_t i = 0; i < es.eigenvalues().size(); ++i) {
    acc += probe_value(phi, es.eigenvalues()(i));
  }
  return acc;
}

BerezinLiebReport berezin_lieb_check(const Representation& rep,
                                     const CorrespondenceRule& rule,
                                     const Operator& a,
                                     const PhaseFunction& f, ConvexProbe phi,
                                     double tol) {
  const PhaseSpace& s = rep.space();
  const int64_t n = s.point_count();
  const double w = s.weight();
  const double group_order = static_cast<double>(s.group().size());

  if (hermiticity_dev(a) > tol) {
    throw std::domain_error("operator argument must be Hermitian");
  }
  if (f.values.imag().cwiseAbs().maxCoeff() > tol) {
    throw std::domain_error("function argument must be real-valued");
  }

  BerezinLiebReport report;

  // Operator -> function: integrate phi over the lower symbol of a.
  const PhaseFunction symbol = conv_AB(rep, a, rule.b1);
  double lhs = 0.0;
  for (int64_t z = 0; z < n; ++z) {
    lhs += w * probe_value(phi, symbol.values(z).real());
  }
  report.operator_side_lhs = lhs;
  report.operator_side_rhs = probe_trace(phi, a);
  report.operator_side_holds =
      report.operator_side_lhs <= report.operator_side_rhs + tol;

  // Function -> operator.  tr(f * B2) equals the full integral of f.
  const Operator quantized = conv_fA(rep, f, rule.b2);
  const double traced = quantized.trace().real();
  double integral_phi = 0.0;
  for (int64_t z = 0; z < n; ++z) {
    integral_phi += w * probe_value(phi, f.values(z).real());
  }
  report.printed_lhs = probe_value(phi, traced);
  report.printed_rhs = integral_phi;
  report.printed_holds = report.printed_lhs <= report.printed_rhs + tol;

  report.normalized_lhs = probe_value(phi, traced / group_order);
  report.normalized_rhs = integral_phi / group_order;
  report.normalized_holds =
      report.normalized_lhs <= report.normalized_rhs + tol;
  return report;
}

std::pair<Operator, Operator> recover_rule(const Representation& rep,
                                           const CorrespondenceRule& rule) {
  const PhaseSpace& s = rep.space();
  const int64_t d = s.group().size();

  // B2 from the convolution unit: the operator slot of Gamma(unit) is
  // unit * B2 = B2 itself.
  const MixedElement probe_unit = mixed_unit(s);
  const Operator b2 = apply_rule(rep, rule, probe_unit).op;

  // B1 from matrix units: (E_pq * B1)(0) = (R B1 R)(q, p), so evaluating the
  // function slot at the origin over all matrix units assembles R B1 R.
  Operator conjugated = Operator::Zero(d, d);
  for (int64_t p = 0; p < d; ++p) {
    for (int64_t q = 0; q < d; ++q) {
      Operator e = Operator::Zero(d, d);
      e(p, q) = 1.0;
      const PhaseFunction img = conv_AB(rep, e, rule.b1);
      conjugated(q, p) = img.values(0);
    }
  }
  const Operator b1 = rep.parity() * conjugated * rep.parity();
  return {b1, b2};
}

}  // namespace qha
