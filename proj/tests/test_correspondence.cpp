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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qha/correspondence.hpp"
#include "qha/rng.hpp"

using qha::ConvexProbe;
using qha::CorrespondenceRule;
using qha::Cplx;
using qha::CVec;
using qha::make_group;
using qha::MixedElement;
using qha::Multiplier;
using qha::Operator;
using qha::PhaseFunction;
using qha::PhaseSpace;
using qha::Representation;
using qha::Rng;

namespace {

double fdist(const PhaseFunction& a, const PhaseFunction& b) {
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

double mdist(const Operator& a, const Operator& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Representation canonical_rep(const std::vector<std::int64_t>& orders) {
  return Representation::build(
      PhaseSpace(Multiplier::canonical(make_group(orders))));
}

Representation weyl_rep(const std::vector<std::int64_t>& orders) {
  return Representation::build(
      PhaseSpace(Multiplier::weyl(make_group(orders))));
}

CorrespondenceRule random_rule(const Representation& rep, Rng& rng) {
  return qha::make_rule(rep, rng.density(rep.dim()), rng.density(rep.dim()));
}

MixedElement random_element(const Representation& rep, Rng& rng) {
  return MixedElement{
      qha::make_function(rep.space(), rng.vector(rep.point_count())),
      rng.matrix(rep.dim())};
}

MixedElement shift_element(const Representation& rep, std::int64_t x,
                           const MixedElement& u) {
  return MixedElement{qha::translate(u.fun, x), rep.shift(x, u.op)};
}

PhaseFunction real_function(const PhaseSpace& s, Rng& rng) {
  CVec v(s.point_count());
  for (std::int64_t z = 0; z < s.point_count(); ++z) {
    v(z) = Cplx(rng.normal(), 0.0);
  }
  return qha::make_function(s, v);
}

}  // namespace

TEST_CASE("rules accept exactly the density pairs") {
  const Representation rep = canonical_rep({2});
  const Operator mixed = Operator::Identity(2, 2) / 2.0;
  Operator pure = Operator::Zero(2, 2);
  pure(0, 0) = 1.0;
  CHECK_NOTHROW(qha::make_rule(rep, mixed, pure));

  Operator indefinite(2, 2);
  indefinite << 1, 0, 0, -1;  // Hermitian, trace 0, not PSD
  CHECK_THROWS_AS(qha::make_rule(rep, indefinite, pure), std::domain_error);
  CHECK_THROWS_AS(qha::make_rule(rep, mixed, Operator::Identity(2, 2)),
                  std::domain_error);  // PSD but trace 2
  Operator skew(2, 2);
  skew << 0.5, 0.3, -0.3, 0.5;  // not Hermitian
  CHECK_THROWS_AS(qha::make_rule(rep, skew, pure), std::domain_error);
  CHECK_THROWS_AS(qha::make_rule(rep, Operator::Identity(3, 3) / 3.0, pure),
                  std::invalid_argument);  // wrong dimension
}

TEST_CASE("the channel is convolution against the stored densities") {
  Rng rng(173);
  for (const Representation& rep : {canonical_rep({3}), weyl_rep({3})}) {
    const CorrespondenceRule rule = random_rule(rep, rng);
    const MixedElement u = random_element(rep, rng);
    const MixedElement out = qha::apply_rule(rep, rule, u);
    CHECK(fdist(out.fun, qha::conv_AB(rep, u.op, rule.b1)) == 0.0);
    CHECK(mdist(out.op, qha::conv_fA(rep, u.fun, rule.b2)) == 0.0);
  }
}

TEST_CASE("unit exchanges are exact") {
  Rng rng(179);
  for (const Representation& rep : {canonical_rep({2}), canonical_rep({3}),
                                    weyl_rep({3})}) {
    const PhaseSpace& s = rep.space();
    const CorrespondenceRule rule = random_rule(rep, rng);
    const std::int64_t d = rep.dim();

    // (1, 0) -> (0, I).
    const MixedElement flat{qha::constant_function(s, Cplx(1, 0)),
                            Operator::Zero(d, d)};
    const MixedElement a = qha::apply_rule(rep, rule, flat);
    CHECK(a.fun.values.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(mdist(a.op, Operator::Identity(d, d)) < 1e-12);

    // (0, I) -> (1, 0).
    const MixedElement idop{
        qha::make_function(s, CVec::Zero(s.point_count())),
        Operator::Identity(d, d)};
    const MixedElement b = qha::apply_rule(rep, rule, idop);
    CHECK((b.fun.values.array() - Cplx(1, 0)).abs().maxCoeff() < 1e-12);
    CHECK(b.op.cwiseAbs().maxCoeff() < 1e-12);

    // Probing with the convolution unit reads the second density back.
    const MixedElement probe = qha::mixed_unit(s);
    const MixedElement c = qha::apply_rule(rep, rule, probe);
    CHECK(mdist(c.op, rule.b2) < 1e-12);
    CHECK(c.fun.values.cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("the channel commutes with every phase-space shift") {
  Rng rng(181);
  for (const Representation& rep : {canonical_rep({2, 2}), weyl_rep({3})}) {
    const CorrespondenceRule rule = random_rule(rep, rng);
    const MixedElement u = random_element(rep, rng);
    const MixedElement gu = qha::apply_rule(rep, rule, u);
    for (std::int64_t x = 0; x < rep.point_count(); ++x) {
      const MixedElement lhs = shift_element(rep, x, gu);
      const MixedElement rhs =
          qha::apply_rule(rep, rule, shift_element(rep, x, u));
      CHECK(fdist(lhs.fun, rhs.fun) < 1e-10);
      CHECK(mdist(lhs.op, rhs.op) < 1e-10);
    }
  }
}

TEST_CASE("the pointwise-composition product is a unital star algebra") {
  Rng rng(191);
  const Representation rep = canonical_rep({3});
  const PhaseSpace& s = rep.space();
  const MixedElement one{qha::constant_function(s, Cplx(1, 0)),
                         Operator::Identity(3, 3)};
  const MixedElement u = random_element(rep, rng);
  const MixedElement v = random_element(rep, rng);

  const MixedElement eu = qha::cstar_product(one, u);
  CHECK(fdist(eu.fun, u.fun) < 1e-13);
  CHECK(mdist(eu.op, u.op) < 1e-13);

  // Product acts slotwise: pointwise on functions, composition on operators.
  const MixedElement uv = qha::cstar_product(u, v);
  CHECK((uv.fun.values.array() -
         u.fun.values.array() * v.fun.values.array())
            .abs()
            .maxCoeff() < 1e-12);
  CHECK(mdist(uv.op, u.op * v.op) < 1e-12);

  // Involution: anti-multiplicative and involutive.
  const MixedElement ustar = qha::mixed_adjoint(u);
  CHECK(fdist(qha::mixed_adjoint(ustar).fun, u.fun) == 0.0);
  CHECK(mdist(qha::mixed_adjoint(ustar).op, u.op) == 0.0);
  const MixedElement lhs = qha::mixed_adjoint(uv);
  const MixedElement rhs =
      qha::cstar_product(qha::mixed_adjoint(v), qha::mixed_adjoint(u));
  CHECK(fdist(lhs.fun, rhs.fun) < 1e-12);
  CHECK(mdist(lhs.op, rhs.op) < 1e-12);
}

TEST_CASE("the two-sided operator inequality holds with equality at the unit") {
  Rng rng(193);
  for (const Representation& rep : {canonical_rep({2}), weyl_rep({3})}) {
    const PhaseSpace& s = rep.space();
    const CorrespondenceRule rule = random_rule(rep, rng);

    // Unital element: Gamma(u*) Gamma(u) = Gamma(u* u) exactly.
    const MixedElement one{qha::constant_function(s, Cplx(1, 0)),
                           Operator::Identity(rep.dim(), rep.dim())};
    const MixedElement lhs = qha::cstar_product(
        qha::apply_rule(rep, rule, qha::mixed_adjoint(one)),
        qha::apply_rule(rep, rule, one));
    const MixedElement rhs = qha::apply_rule(
        rep, rule, qha::cstar_product(qha::mixed_adjoint(one), one));
    CHECK(fdist(lhs.fun, rhs.fun) < 1e-10);
    CHECK(mdist(lhs.op, rhs.op) < 1e-10);

    // Random elements: Gamma(u*) Gamma(u) <= Gamma(u* u), pointwise in the
    // function slot and in eigenvalues in the operator slot.
    for (int t = 0; t < 20; ++t) {
      const MixedElement u = random_element(rep, rng);
      const MixedElement prod = qha::cstar_product(
          qha::apply_rule(rep, rule, qha::mixed_adjoint(u)),
          qha::apply_rule(rep, rule, u));
      const MixedElement dom = qha::apply_rule(
          rep, rule, qha::cstar_product(qha::mixed_adjoint(u), u));
      const CVec gap_fn = dom.fun.values - prod.fun.values;
      CHECK(gap_fn.imag().cwiseAbs().maxCoeff() < 1e-9);
      CHECK(gap_fn.real().minCoeff() > -1e-9);
      const Operator gap_op = dom.op - prod.op;
      Eigen::SelfAdjointEigenSolver<Operator> es(
          (gap_op + gap_op.adjoint().eval()) / 2.0);
      CHECK(es.eigenvalues().minCoeff() > -1e-9);
    }
  }
}

TEST_CASE("the randomized rule audit passes on clean rules") {
  Rng rng(197);
  for (const Representation& rep : {canonical_rep({2}), canonical_rep({3}),
                                    weyl_rep({3})}) {
    const CorrespondenceRule rule = random_rule(rep, rng);
    const qha::RuleReport r = qha::verify_rule(rep, rule, 25, rng);
    CHECK(r.trials == 25);
    CHECK(r.covariance_max_dev < 1e-9);
    CHECK(r.unit_exchange_dev < 1e-10);
    CHECK(r.positivity_min_fn > -1e-10);
    CHECK(r.positivity_min_op_eig > -1e-10);
    CHECK(r.positivity_structure_dev < 1e-10);
    CHECK(r.ks_max_violation < 1e-9);
    CHECK(r.pass(1e-9));
  }
}

TEST_CASE("convex probes evaluate exactly on frozen spectra") {
  CHECK(qha::probe_value(ConvexProbe::square, -3.0) == doctest::Approx(9.0));
  CHECK(qha::probe_value(ConvexProbe::abs_value, -3.0) == doctest::Approx(3.0));
  CHECK(qha::probe_value(ConvexProbe::exponential, 1.0) ==
        doctest::Approx(std::exp(1.0)));

  Operator a(2, 2);
  a << 1, 0, 0, -2;
  CHECK(qha::probe_trace(ConvexProbe::square, a) == doctest::Approx(5.0));
  CHECK(qha::probe_trace(ConvexProbe::abs_value, a) == doctest::Approx(3.0));
  CHECK(qha::probe_trace(ConvexProbe::exponential, a) ==
        doctest::Approx(std::exp(1.0) + std::exp(-2.0)));
  // The trace probe diagonalizes: rotating the operator changes nothing.
  Rng rng(199);
  const CVec v = rng.unit_vector(2);
  Operator h = rng.hermitian(2);
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  const Operator rotated = es.eigenvectors() *
                           Operator(a) * es.eigenvectors().adjoint();
  CHECK(qha::probe_trace(ConvexProbe::square, rotated) == doctest::Approx(5.0));
}

TEST_CASE("trace comparison: operator direction always holds") {
  Rng rng(211);
  for (const Representation& rep : {canonical_rep({2}), canonical_rep({3})}) {
    const CorrespondenceRule rule = random_rule(rep, rng);
    const PhaseFunction f = real_function(rep.space(), rng);
    for (ConvexProbe phi : {ConvexProbe::square, ConvexProbe::abs_value,
                            ConvexProbe::exponential}) {
      for (int t = 0; t < 20; ++t) {
        const Operator h = rng.hermitian(rep.dim());
        const qha::BerezinLiebReport r =
            qha::berezin_lieb_check(rep, rule, h, f, phi);
        CHECK(r.operator_side_holds);
        CHECK(r.operator_side_lhs <= r.operator_side_rhs + 1e-9);
        // The probability-normalized function direction also holds.
        CHECK(r.normalized_holds);
        CHECK(r.normalized_lhs <= r.normalized_rhs + 1e-9);
      }
    }
  }
}

TEST_CASE("trace comparison: equality at the identity for the square probe") {
  Rng rng(223);
  const Representation rep = canonical_rep({3});
  const CorrespondenceRule rule = random_rule(rep, rng);
  const qha::BerezinLiebReport r = qha::berezin_lieb_check(
      rep, rule, Operator::Identity(3, 3),
      qha::constant_function(rep.space(), Cplx(1, 0)), ConvexProbe::square);
  // (I * B1) is the constant 1, so both operator-direction sides equal |G|.
  CHECK(r.operator_side_lhs == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(r.operator_side_rhs == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(r.operator_side_holds);
}

TEST_CASE("trace comparison: the unnormalized function direction fails as stated") {
  // With f = 1 the function-direction left side evaluates the probe at the
  // full integral of f (mass |G|), while the right side averages the probe
  // of f itself; any strictly convex growing probe breaks the comparison.
  // The probability-normalized variant is the Jensen-consistent form.
  Rng rng(227);
  for (const Representation& rep : {canonical_rep({2}), canonical_rep({3})}) {
    const CorrespondenceRule rule = random_rule(rep, rng);
    const double d = double(rep.dim());
    const qha::BerezinLiebReport r = qha::berezin_lieb_check(
        rep, rule, Operator::Identity(rep.dim(), rep.dim()),
        qha::constant_function(rep.space(), Cplx(1, 0)), ConvexProbe::square);
    CHECK(r.printed_lhs == doctest::Approx(d * d).epsilon(1e-9));
    CHECK(r.printed_rhs == doctest::Approx(d).epsilon(1e-9));
    CHECK_FALSE(r.printed_holds);
    CHECK(r.normalized_lhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.normalized_rhs == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.normalized_holds);
  }
}

TEST_CASE("trace comparison validates its inputs") {
  Rng rng(229);
  const Representation rep = canonical_rep({2});
  const CorrespondenceRule rule = random_rule(rep, rng);
  const PhaseFunction realf = real_function(rep.space(), rng);
  CHECK_THROWS_AS(
      qha::berezin_lieb_check(rep, rule, rng.matrix(2), realf,
                              ConvexProbe::square),
      std::domain_error);  // non-Hermitian operator
  const PhaseFunction complexf =
      qha::make_function(rep.space(), rng.vector(rep.point_count()));
  CHECK_THROWS_AS(
      qha::berezin_lieb_check(rep, rule, rng.hermitian(2), complexf,
                              ConvexProbe::square),
      std::domain_error);  // complex-valued function
}

TEST_CASE("the maximally mixed rule collapses to normalized traces") {
  Rng rng(233);
  const Representation rep = canonical_rep({3});
  const PhaseSpace& s = rep.space();
  const double d = double(rep.dim());
  const Operator mixed = Operator::Identity(3, 3) / 3.0;
  const CorrespondenceRule rule = qha::make_rule(rep, mixed, mixed);
  const MixedElement u = random_element(rep, rng);
  const MixedElement out = qha::apply_rule(rep, rule, u);
  // Function slot: A * (I/d) is the constant tr(A)/d.
  CHECK(fdist(out.fun, qha::constant_function(s, u.op.trace() / d)) < 1e-11);
  // Operator slot: f * (I/d) = (integral of f)/d times the identity.
  const Cplx mass = s.weight() * u.fun.values.sum();
  CHECK(mdist(out.op, (mass / d) * Operator::Identity(3, 3)) < 1e-11);
}

TEST_CASE("three-factor correlation smearing is associative") {
  Rng rng(239);
  for (const Representation& rep : {canonical_rep({2}), weyl_rep({3})}) {
    for (int t = 0; t < 10; ++t) {
      const Operator a = rng.matrix(rep.dim());
      const Operator b = rng.matrix(rep.dim());
      const Operator c = rng.matrix(rep.dim());
      const Operator left =
          qha::conv_fA(rep, qha::conv_AB(rep, a, b), c);
      const Operator right =
          qha::conv_fA(rep, qha::conv_AB(rep, b, c), a);
      CHECK(mdist(left, right) < 1e-9);
    }
  }
}

TEST_CASE("the stored densities are recovered from the channel action") {
  Rng rng(241);
  for (const Representation& rep : {canonical_rep({2}), canonical_rep({3}),
                                    weyl_rep({3})}) {
    const CorrespondenceRule rule = random_rule(rep, rng);
    const auto [b1, b2] = qha::recover_rule(rep, rule);
    CHECK(mdist(b1, rule.b1) < 1e-10);
    CHECK(mdist(b2, rule.b2) < 1e-10);
  }
}
