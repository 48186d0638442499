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

#include "qha/fourier.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

// All parallel loops run over independent output indices with serial inner
// sums, so results do not depend on the thread count.

namespace qha {

namespace {

CVec sigma_transform(const PhaseSpace& s, const CVec& in) {
  const std::int64_t n = s.point_count();
  const double w = s.weight();
  CVec out(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < n; ++xi) {
    Cplx acc = 0.0;
    for (std::int64_t x = 0; x < n; ++x) {
      acc += s.sigma(x, xi) * in(x);
    }
    out(xi) = w * acc;
  }
  return out;
}

}  // namespace

DualFunction fourier_sigma(const PhaseFunction& f) {
  return DualFunction{f.space, sigma_transform(f.space, f.values)};
}

PhaseFunction fourier_sigma_inv(const DualFunction& f) {
  return PhaseFunction{f.space, sigma_transform(f.space, f.values)};
}

DualFunction fourier_weyl(const Representation& rep, const Operator& a) {
  const std::int64_t d = rep.dim();
  if (a.rows() != d || a.cols() != d) {
    throw std::invalid_argument("fourier_weyl: operator dimension mismatch");
  }
  const PhaseSpace& s = rep.space();
  const FiniteAbelianGroup& g = s.group();
  const std::int64_t n = s.point_count();
  CVec out(n);
  // tr(A U_xi^*) = conj(m(xi,-xi)) tr(A U_{-xi}), and
  // tr(A U_w) = a(w) sum_y A_{y, y+x_w} <y + x_w, xi_w>.
#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < n; ++xi) {
    const std::int64_t nxi = s.neg(xi);
    const std::int64_t x = s.pos(nxi);
    const std::int64_t mom = s.mom(nxi);
    Cplx acc = 0.0;
    for (std::int64_t y = 0; y < d; ++y) {
      const std::int64_t yx = g.add(y, x);
      acc += a(y, yx) * g.character(yx, mom);
    }
    out(xi) = std::conj(s.m(xi, nxi)) * rep.phase(nxi) * acc;
  }
  return DualFunction{s, std::move(out)};
}

Operator fourier_weyl_inv(const Representation& rep, const DualFunction& f) {
  require_same_space(rep.space(), f.space);
  const PhaseSpace& s = rep.space();
  const FiniteAbelianGroup& g = s.group();
  const std::int64_t d = rep.dim();
  const double w = s.weight();
  Operator out(d, d);
  // (U_z)_{ij} is nonzero only for x_z = i - j, so each entry is a single
  // momentum sum: out_{ij} = w sum_xi f(i-j, xi) a(i-j, xi) <i, xi>.
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      const std::int64_t x = g.sub(i, j);
      Cplx acc = 0.0;
      for (std::int64_t xi = 0; xi < d; ++xi) {
        const std::int64_t z = s.point(x, xi);
        acc += f.values(z) * rep.phase(z) * g.character(i, xi);
      }
      out(i, j) = w * acc;
    }
  }
  return out;
}

DualFunction twisted_conv(const DualFunction& f, const DualFunction& g) {
  require_same_space(f.space, g.space);
  const PhaseSpace& s = f.space;
  const std::int64_t n = s.point_count();
  const double w = s.weight();
  CVec out(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < n; ++xi) {
    Cplx acc = 0.0;
    for (std::int64_t eta = 0; eta < n; ++eta) {
      const std::int64_t diff = s.sub(xi, eta);
      acc += f.values(diff) * g.values(eta) * s.m(diff, eta);
    }
    out(xi) = w * acc;
  }
  return DualFunction{s, std::move(out)};
}

DualFunction adjoint_twist(const DualFunction& f) {
  const PhaseSpace& s = f.space;
  const std::int64_t n = s.point_count();
  CVec out(n);
  for (std::int64_t xi = 0; xi < n; ++xi) {
    const std::int64_t nxi = s.neg(xi);
    out(xi) = std::conj(f.values(nxi) * s.m(nxi, xi));
  }
  return DualFunction{s, std::move(out)};
}

PhaseFunction wigner(const Representation& rep, const Operator& a) {
  return fourier_sigma_inv(fourier_weyl(rep, a));
}

ModulationReport verify_modulation(const Representation& rep, int trials,
                                   Rng& rng) {
  if (rep.space().kind() != MultiplierKind::weyl) {
    throw std::domain_error(
        "verify_modulation: half-shifts need the weyl multiplier kind");
  }
  const PhaseSpace& s = rep.space();
  const FiniteAbelianGroup& g = s.group();
  const std::int64_t n = s.point_count();
  ModulationReport report;
  report.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const Operator a = rng.matrix(rep.dim());
    const DualFunction fa = fourier_weyl(rep, a);
    for (std::int64_t x = 0; x < n; ++x) {
      const std::int64_t half =
          s.point(g.halve(s.pos(x)), g.halve(s.mom(x)));
      const Operator& uh = rep.unitary(half);
      const DualFunction mod = fourier_weyl(rep, Operator(uh * a * uh));
      const DualFunction expected = translate(fa, x);
      report.max_dev = std::max(
          report.max_dev,
          (mod.values - expected.values).cwiseAbs().maxCoeff());
    }
  }
  return report;
}

HausdorffYoungReport verify_hausdorff_young(const Representation& rep,
                                            int trials, Rng& rng) {
  constexpr double kSlack = 1e-9;
  const PhaseSpace& s = rep.space();
  HausdorffYoungReport report;
  report.trials = trials;
  const double ps[3] = {1.0, 4.0 / 3.0, 2.0};
  for (int t = 0; t < trials; ++t) {
    const Operator a = rng.matrix(rep.dim());
    const DualFunction fa = fourier_weyl(rep, a);
    const DualFunction f{s, rng.vector(s.point_count())};
    const Operator b = fourier_weyl_inv(rep, f);
    for (double p : ps) {
      const double q = std::isinf(p) ? 1.0
                       : (p == 1.0 ? std::numeric_limits<double>::infinity()
                                   : p / (p - 1.0));
      const double fwd_lhs = lp_norm(fa, q);
      const double fwd_rhs = schatten_norm(a, p);
      report.max_excess = std::max(report.max_excess, fwd_lhs - fwd_rhs);
      if (fwd_lhs > fwd_rhs * (1.0 + kSlack) + kSlack) ++report.violations;

      const double inv_lhs = schatten_norm(b, q);
      const double inv_rhs = lp_norm(f, p);
      report.max_excess = std::max(report.max_excess, inv_lhs - inv_rhs);
      if (inv_lhs > inv_rhs * (1.0 + kSlack) + kSlack) ++report.violations;
    }
    report.plancherel_max_dev =
        std::max(report.plancherel_max_dev,
                 std::abs(lp_norm(fa, 2.0) - schatten_norm(a, 2.0)));
  }
  return report;
}

}  // namespace qha
