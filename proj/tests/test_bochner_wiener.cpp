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

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qha/bochner_wiener.hpp"
#include "qha/rng.hpp"

using qha::BochnerResult;
using qha::Cplx;
using qha::CVec;
using qha::DualFunction;
using qha::make_group;
using qha::Multiplier;
using qha::Operator;
using qha::PhaseSpace;
using qha::Representation;
using qha::Rng;
using qha::TwistedPDReport;
using qha::WienerReport;

namespace {

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

// The Gram matrix of the twisted positive-definiteness criterion, restated
// from its defining formula.
Operator twisted_gram(const DualFunction& f) {
  const PhaseSpace& s = f.space;
  const std::int64_t n = s.point_count();
  Operator g(n, n);
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t k = 0; k < n; ++k) {
      g(j, k) = s.m(s.neg(k), k) * std::conj(s.m(j, s.neg(k))) *
                f.values(s.sub(j, k));
    }
  }
  return g;
}

std::vector<double> sorted_eigs(const Operator& h) {
  Eigen::SelfAdjointEigenSolver<Operator> es((h + h.adjoint().eval()) / 2.0);
  std::vector<double> v(es.eigenvalues().data(),
                        es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("the criterion Gram spectrum is the operator spectrum amplified") {
  // For f = F(A) the Gram matrix has eigenvalues |G| * eig(A), each with
  // multiplicity |G|; positivity of A and of the Gram form coincide exactly.
  Rng rng(137);
  for (const Representation& rep : {canonical_rep({2}), canonical_rep({3}),
                                    weyl_rep({3}), weyl_rep({5})}) {
    const Operator h = rng.hermitian(rep.dim());
    const DualFunction f = qha::fourier_weyl(rep, h);

    const std::vector<double> gram = sorted_eigs(twisted_gram(f));
    const std::vector<double> base = sorted_eigs(h);
    REQUIRE(gram.size() == base.size() * static_cast<std::size_t>(rep.dim()));
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::int64_t r = 0; r < rep.dim(); ++r) {
        const double expect = double(rep.dim()) * base[i];
        CHECK(gram[i * static_cast<std::size_t>(rep.dim()) +
                   static_cast<std::size_t>(r)] ==
              doctest::Approx(expect).epsilon(1e-9));
      }
    }

    // The library check agrees with the hand-built Gram.
    const TwistedPDReport r = qha::twisted_pd_check(f);
    CHECK(r.min_eigenvalue ==
          doctest::Approx(double(rep.dim()) * base.front()).epsilon(1e-9));
    CHECK(r.hermiticity_dev < 1e-11);
    CHECK(r.is_pd == (base.front() >= -1e-10 / double(rep.dim())));
  }
}

TEST_CASE("transforms of states pass the positivity criterion") {
  Rng rng(139);
  for (const Representation& rep : {canonical_rep({2}), weyl_rep({3})}) {
    for (int t = 0; t < 20; ++t) {
      const Operator rho = rng.density(rep.dim());
      const TwistedPDReport r = qha::twisted_pd_check(qha::fourier_weyl(rep, rho));
      CHECK(r.is_pd);
      CHECK(r.min_eigenvalue > -1e-10);
      CHECK(r.hermiticity_dev < 1e-11);
    }
  }
}

TEST_CASE("an indefinite operator fails the criterion with a scaled witness") {
  const Representation rep = canonical_rep({2});
  Operator sz(2, 2);
  sz << 1, 0, 0, -1;
  const TwistedPDReport r = qha::twisted_pd_check(qha::fourier_weyl(rep, sz));
  CHECK_FALSE(r.is_pd);
  CHECK(r.min_eigenvalue == doctest::Approx(-2.0).epsilon(1e-10));
}

TEST_CASE("reconstruction certifies states and flags everything else") {
  Rng rng(149);
  for (const Representation& rep : {canonical_rep({2}), canonical_rep({3}),
                                    weyl_rep({3})}) {
    for (int t = 0; t < 10; ++t) {
      const Operator rho = rng.density(rep.dim());
      const BochnerResult res =
          qha::bochner_reconstruct(rep, qha::fourier_weyl(rep, rho));
      CHECK(res.certificate_ok);
      CHECK(mdist(res.reconstructed, rho) < 1e-10);
      CHECK(res.roundtrip_sup_err < 1e-10);
      CHECK(res.min_eigenvalue > -1e-10);
    }
    for (int t = 0; t < 10; ++t) {
      const Operator bad = rng.indefinite_hermitian(rep.dim(), 0.25);
      const BochnerResult res =
          qha::bochner_reconstruct(rep, qha::fourier_weyl(rep, bad));
      CHECK_FALSE(res.certificate_ok);
      CHECK(res.min_eigenvalue < -1e-6);
      // Reconstruction itself is still faithful; only the certificate fails.
      CHECK(mdist(res.reconstructed, bad) < 1e-10);
    }
    // Arbitrary dual data reconstructs without throwing.
    const DualFunction noise = qha::make_dual_function(
        rep.space(), rng.vector(rep.point_count()));
    CHECK_NOTHROW(qha::bochner_reconstruct(rep, noise));
    const BochnerResult res = qha::bochner_reconstruct(rep, noise);
    CHECK_FALSE(res.certificate_ok);
  }
}

TEST_CASE("annihilator bases are exact and correctly sized") {
  const Representation rep = canonical_rep({2});
  const Operator id = Operator::Identity(2, 2);

  // Only multiples of the identity correlate trivially against everything
  // with nonzero trace; the annihilator of {I} is the traceless hyperplane.
  const std::vector<Operator> ann = qha::operator_annihilator(rep, {id});
  CHECK(ann.size() == 3);
  for (const Operator& b : ann) {
    CHECK(std::abs(b.trace()) < 1e-10);
    CHECK(qha::conv_AB(rep, id, b).values.cwiseAbs().maxCoeff() < 1e-10);
  }

  // Function side: smearing against I integrates the function, so the
  // annihilator is the mean-zero hyperplane of the phase space.
  const std::vector<CVec> fann = qha::function_annihilator(rep, {id});
  CHECK(fann.size() == 3);
  for (const CVec& v : fann) {
    const qha::PhaseFunction f = qha::make_function(rep.space(), v);
    CHECK(std::abs(f.values.sum()) < 1e-9);
    CHECK(qha::conv_fA(rep, f, id).cwiseAbs().maxCoeff() < 1e-9);
  }

  // A generic operator annihilates nothing.
  Rng rng(151);
  const Operator generic = rng.matrix(2);
  CHECK(qha::operator_annihilator(rep, {generic}).empty());
  CHECK(qha::function_annihilator(rep, {generic}).empty());

  CHECK_THROWS_AS(qha::operator_annihilator(rep, {}), std::invalid_argument);
  CHECK_THROWS_AS(qha::function_annihilator(rep, {}), std::invalid_argument);
}

TEST_CASE("generic single-operator families are regular by every criterion") {
  Rng rng(157);
  for (const Representation& rep : {canonical_rep({2}), canonical_rep({3}),
                                    weyl_rep({3})}) {
    const WienerReport r = qha::wiener_report(rep, {rng.matrix(rep.dim())});
    CHECK(r.regular);
    CHECK(r.consistent);
    CHECK(r.zero_set.empty());
    CHECK(r.span_rank == rep.point_count());
    CHECK(r.function_span_rank == rep.point_count());
    CHECK(r.operator_annihilator_dim == 0);
    CHECK(r.function_annihilator_dim == 0);
    CHECK(r.equivalences.size() == 7);
    for (const auto& [name, verdict] : r.equivalences) {
      INFO(name);
      CHECK(verdict);
    }
  }
}

TEST_CASE("the identity family is singular in every criterion at once") {
  const Representation rep = canonical_rep({2});
  const WienerReport r =
      qha::wiener_report(rep, {Operator::Identity(2, 2)});
  CHECK_FALSE(r.regular);
  CHECK(r.consistent);  // all criteria agree on the negative verdict
  CHECK(r.span_rank == 1);
  CHECK(r.function_span_rank == 1);
  CHECK(r.zero_set.size() == 3);
  CHECK(r.operator_annihilator_dim == 3);
  CHECK(r.function_annihilator_dim == 3);
  for (const auto& [name, verdict] : r.equivalences) {
    INFO(name);
    CHECK_FALSE(verdict);
  }
}

TEST_CASE("zero sets, ranks, and annihilator dimensions stay consistent") {
  Rng rng(163);
  const Representation rep = canonical_rep({3});

  // A single unitary concentrates its transform on one point.
  const WienerReport one = qha::wiener_report(rep, {rep.unitary(4)});
  CHECK(one.span_rank == 1);
  CHECK(one.zero_set.size() == static_cast<std::size_t>(rep.point_count() - 1));

  // A ground-state projector is supported on the zero-position row.
  Operator proj = Operator::Zero(3, 3);
  proj(0, 0) = 1.0;
  const WienerReport p = qha::wiener_report(rep, {proj});
  CHECK(p.span_rank == 3);
  CHECK(p.zero_set.size() == 6);
  for (std::int64_t z : p.zero_set) {
    CHECK(rep.space().pos(z) != 0);  // zeros live off the x = 0 row
  }

  // Mixed families merge supports: {I, U_z} has two nonvanishing points.
  const WienerReport two =
      qha::wiener_report(rep, {Operator::Identity(3, 3), rep.unitary(4)});
  CHECK(two.span_rank == 2);
  CHECK(two.zero_set.size() == static_cast<std::size_t>(rep.point_count() - 2));

  // The structural identities connecting the criteria hold in every case.
  for (const WienerReport& r :
       {one, p, two, qha::wiener_report(rep, {rng.matrix(3)})}) {
    CHECK(r.span_rank ==
          rep.point_count() - static_cast<std::int64_t>(r.zero_set.size()));
    CHECK(r.operator_annihilator_dim ==
          static_cast<std::int64_t>(r.zero_set.size()));
    CHECK(r.function_annihilator_dim ==
          static_cast<std::int64_t>(r.zero_set.size()));
    CHECK(r.consistent);
  }
}

TEST_CASE("the vanishing threshold is relative to the trace norm") {
  const Representation rep = canonical_rep({2});
  const Operator id = Operator::Identity(2, 2);
  const WienerReport big = qha::wiener_report(rep, {id});
  const WienerReport small = qha::wiener_report(rep, {1e-6 * id});
  CHECK(big.zero_set == small.zero_set);
  CHECK(big.span_rank == small.span_rank);
}

TEST_CASE("family audits reject empty or oversized inputs") {
  const Representation rep = canonical_rep({2});
  CHECK_THROWS_AS(qha::wiener_report(rep, {}), std::invalid_argument);
  const Representation large = canonical_rep({33});
  CHECK_THROWS_AS(
      qha::wiener_report(large, {Operator::Identity(33, 33)}),
      std::invalid_argument);
}

TEST_CASE("the geometric state is regular with a frozen comparison error") {
  // State vector psi(n) = 2^{-n} (unnormalized) on Z_d, canonical kind.
  // Its transform along the zero-position row is the truncated geometric
  // series in |c|^2 = 1/4, while the comparison curve is the closed form of
  // the full series in c = 1/2.  The gap peaks at frequency zero with value
  // 2/3 + (4/3) 4^{-d}: it decreases with d but floors at 2/3 instead of
  // vanishing, because the curve uses c where the series has |c|^2.
  const auto comparison_error = [](std::int64_t d) {
    const Representation rep = canonical_rep({d});
    CVec psi(d);
    for (std::int64_t n = 0; n < d; ++n) psi(n) = std::pow(0.5, double(n));
    const Operator a = psi * psi.adjoint();
    const DualFunction f = qha::fourier_weyl(rep, a);
    double err = 0.0;
    for (std::int64_t k = 0; k < d; ++k) {
      const Cplx target =
          1.0 / (1.0 - 0.5 * std::polar(1.0, -qha::kTwoPi * double(k) /
                                                 double(d)));
      err = std::max(err,
                     std::abs(f.values(rep.space().point(0, k)) - target));
    }
    return err;
  };

  CHECK(comparison_error(4) == doctest::Approx(0.671875).epsilon(1e-12));
  CHECK(comparison_error(6) == doctest::Approx(0.6669921875).epsilon(1e-12));
  CHECK(comparison_error(8) ==
        doctest::Approx(0.66668701171875).epsilon(1e-12));
  CHECK(comparison_error(4) > comparison_error(6));
  CHECK(comparison_error(6) > comparison_error(8));
  CHECK(comparison_error(8) > 2.0 / 3.0);
}

TEST_CASE("geometric-state regularity depends on the parity of the order") {
  // On odd orders the translated decay profile 2^{-y} 2^{-((y-x) mod d)} has
  // no internal symmetry and the transform never vanishes: regular.  On even
  // orders the profile at x = d/2 is d/2-periodic in y, so every odd
  // frequency cancels exactly: the zero set is {(d/2, k) : k odd} and the
  // family is not regular.  The cyclic wraparound creates these zeros; on
  // the infinite lattice, where the shifted profile never folds back onto
  // itself, the same state stays regular for every shift.
  const auto geometric_report = [](std::int64_t d) {
    const Representation rep = canonical_rep({d});
    CVec psi(d);
    for (std::int64_t n = 0; n < d; ++n) psi(n) = std::pow(0.5, double(n));
    return qha::wiener_report(rep, {psi * psi.adjoint()});
  };

  for (std::int64_t d : {3, 5, 7}) {
    const WienerReport r = geometric_report(d);
    CHECK(r.regular);
    CHECK(r.consistent);
    CHECK(r.zero_set.empty());
  }
  for (std::int64_t d : {4, 6, 8}) {
    const Representation rep = canonical_rep({d});
    const WienerReport r = geometric_report(d);
    CHECK_FALSE(r.regular);
    CHECK(r.consistent);
    REQUIRE(r.zero_set.size() == static_cast<std::size_t>(d / 2));
    for (std::size_t i = 0; i < r.zero_set.size(); ++i) {
      CHECK(rep.space().pos(r.zero_set[i]) == d / 2);
      CHECK(rep.space().mom(r.zero_set[i]) == 2 * std::int64_t(i) + 1);
    }
    CHECK(r.span_rank == rep.point_count() - d / 2);
  }
}

TEST_CASE("the uniform projector on the two-point group has two exact zeros") {
  const Representation rep = canonical_rep({2});
  CVec phi(2);
  phi << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const WienerReport r = qha::wiener_report(rep, {phi * phi.adjoint()});
  CHECK_FALSE(r.regular);
  CHECK(r.consistent);
  CHECK(r.zero_set == std::vector<std::int64_t>({1, 3}));
  CHECK(r.span_rank == 2);
}
