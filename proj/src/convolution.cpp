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

#include "qha/convolution.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

// All parallel loops in this file run over independent output indices with
// serial inner sums, so results do not depend on the thread count.

namespace qha {

PhaseFunction make_function(PhaseSpace space, CVec values) {
  if (values.size() != space.point_count()) {
    throw std::invalid_argument("function: need one value per point");
  }
  return PhaseFunction{std::move(space), std::move(values)};
}

DualFunction make_dual_function(PhaseSpace space, CVec values) {
  if (values.size() != space.point_count()) {
    throw std::invalid_argument("function: need one value per point");
  }
  return DualFunction{std::move(space), std::move(values)};
}

PhaseFunction constant_function(const PhaseSpace& space, Cplx value) {
  return PhaseFunction{space,
                       CVec::Constant(space.point_count(), value)};
}

PhaseFunction delta_unit(const PhaseSpace& space) {
  CVec v = CVec::Zero(space.point_count());
  v(0) = 1.0 / space.weight();
  return PhaseFunction{space, std::move(v)};
}

MixedElement mixed_unit(const PhaseSpace& space) {
  return MixedElement{delta_unit(space),
                      Operator::Zero(space.dim(), space.dim())};
}

void require_same_space(const PhaseSpace& a, const PhaseSpace& b) {
  if (!(a == b)) {
    throw std::invalid_argument("phase-space mismatch between operands");
  }
}

namespace {

CVec translate_values(const PhaseSpace& space, std::int64_t z,
                      const CVec& values) {
  CVec out(values.size());
  for (std::int64_t y = 0; y < values.size(); ++y) {
    out(y) = values(space.sub(y, z));
  }
  return out;
}

}  // namespace

PhaseFunction translate(const PhaseFunction& f, std::int64_t z) {
  return PhaseFunction{f.space, translate_values(f.space, z, f.values)};
}

DualFunction translate(const DualFunction& f, std::int64_t z) {
  return DualFunction{f.space, translate_values(f.space, z, f.values)};
}

PhaseFunction reflect(const PhaseFunction& f) {
  CVec out(f.values.size());
  for (std::int64_t y = 0; y < f.values.size(); ++y) {
    out(y) = f.values(f.space.neg(y));
  }
  return PhaseFunction{f.space, std::move(out)};
}

PhaseFunction conv_ff(const PhaseFunction& f, const PhaseFunction& g) {
  require_same_space(f.space, g.space);
  const PhaseSpace& s = f.space;
  const std::int64_t n = s.point_count();
  const double w = s.weight();
  CVec out(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t y = 0; y < n; ++y) {
    Cplx acc = 0.0;
    for (std::int64_t x = 0; x < n; ++x) {
      acc += f.values(x) * g.values(s.sub(y, x));
    }
    out(y) = w * acc;
  }
  return PhaseFunction{s, std::move(out)};
}

Operator conv_fA(const Representation& rep, const PhaseFunction& f,
                 const Operator& a) {
  require_same_space(rep.space(), f.space);
  const std::int64_t d = rep.dim();
  if (a.rows() != d || a.cols() != d) {
    throw std::invalid_argument("conv_fA: operator dimension mismatch");
  }
  const PhaseSpace& s = rep.space();
  const FiniteAbelianGroup& g = s.group();
  const double w = s.weight();
  Operator out(d, d);
  // out_{ij} = w sum_{(x,xi)} f(x,xi) <i,xi> conj(<j,xi>) A_{i-x, j-x};
  // the phase factors a(z) cancel inside alpha_z.
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      Cplx acc = 0.0;
      for (std::int64_t x = 0; x < d; ++x) {
        const std::int64_t si = g.sub(i, x);
        const std::int64_t sj = g.sub(j, x);
        Cplx inner = 0.0;
        for (std::int64_t xi = 0; xi < d; ++xi) {
          inner += f.values(s.point(x, xi)) * g.character(i, xi) *
                   std::conj(g.character(j, xi));
        }
        acc += inner * a(si, sj);
      }
      out(i, j) = w * acc;
    }
  }
  return out;
}

PhaseFunction conv_AB(const Representation& rep, const Operator& a,
                      const Operator& b) {
  const std::int64_t d = rep.dim();
  if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d) {
    throw std::invalid_argument("conv_AB: operator dimension mismatch");
  }
  const PhaseSpace& s = rep.space();
  const FiniteAbelianGroup& g = s.group();
  const Operator c = rep.reflect(b);
  const std::int64_t n = s.point_count();
  CVec out(n);
  // (A*B)(z) = tr(A alpha_z(C)) = sum_{ij} A_{ij} <j,xi> conj(<i,xi>) C_{j-x, i-x}
#pragma omp parallel for schedule(static)
  for (std::int64_t z = 0; z < n; ++z) {
    const std::int64_t x = s.pos(z);
    const std::int64_t xi = s.mom(z);
    Cplx acc = 0.0;
    for (std::int64_t i = 0; i < d; ++i) {
      const Cplx ci = std::conj(g.character(i, xi));
      const std::int64_t si = g.sub(i, x);
      for (std::int64_t j = 0; j < d; ++j) {
        acc += a(i, j) * g.character(j, xi) * ci * c(g.sub(j, x), si);
      }
    }
    out(z) = acc;
  }
  return PhaseFunction{s, std::move(out)};
}

MixedElement banach_product(const Representation& rep, const MixedElement& u,
                            const MixedElement& v) {
  require_same_space(u.fun.space, v.fun.space);
  require_same_space(rep.space(), u.fun.space);
  PhaseFunction fun = conv_ff(u.fun, v.fun);
  fun.values += conv_AB(rep, u.op, v.op).values;
  Operator op = conv_fA(rep, u.fun, v.op) + conv_fA(rep, v.fun, u.op);
  return MixedElement{std::move(fun), std::move(op)};
}

namespace {

double weighted_lp(const CVec& values, double p, double weight) {
  if (p < 1.0) {
    throw std::invalid_argument("lp_norm: p must be at least 1");
  }
  if (std::isinf(p)) {
    return values.size() == 0 ? 0.0 : values.cwiseAbs().maxCoeff();
  }
  double acc = 0.0;
  for (std::int64_t i = 0; i < values.size(); ++i) {
    acc += std::pow(std::abs(values(i)), p);
  }
  return std::pow(weight * acc, 1.0 / p);
}

}  // namespace

double lp_norm(const PhaseFunction& f, double p) {
  return weighted_lp(f.values, p, f.space.weight());
}

double lp_norm(const DualFunction& f, double p) {
  return weighted_lp(f.values, p, f.space.weight());
}

double schatten_norm(const Operator& a, double p) {
  if (p < 1.0) {
    throw std::invalid_argument("schatten_norm: p must be at least 1");
  }
  Eigen::JacobiSVD<Operator> svd(a);
  const auto& sv = svd.singularValues();
  if (std::isinf(p)) {
    return sv.size() == 0 ? 0.0 : sv(0);
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv(i), p);
  return std::pow(acc, 1.0 / p);
}

namespace {

constexpr double kYoungSlack = 1e-9;

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

}  // namespace

YoungReport verify_young(const Representation& rep, int trials, Rng& rng) {
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> grid = {1.0, 4.0 / 3.0, 2.0, 4.0, inf};
  std::vector<std::array<double, 3>> triples;
  for (double p : grid)
    for (double q : grid)
      for (double r : grid)
        if (std::abs(inv(p) + inv(q) - 1.0 - inv(r)) < 1e-12)
          triples.push_back({p, q, r});

  const PhaseSpace& s = rep.space();
  YoungReport report;
  report.trials = trials;
  report.combinations = static_cast<int>(triples.size());
  for (int t = 0; t < trials; ++t) {
    const PhaseFunction f{s, rng.vector(s.point_count())};
    const PhaseFunction g{s, rng.vector(s.point_count())};
    const Operator a = rng.matrix(s.dim());
    const Operator b = rng.matrix(s.dim());
    const PhaseFunction fg = conv_ff(f, g);
    const Operator fb = conv_fA(rep, f, b);
    const Operator ag = conv_fA(rep, g, a);
    const PhaseFunction ab = conv_AB(rep, a, b);
    for (const auto& [p, q, r] : triples) {
      const double checks[4][2] = {
          {lp_norm(fg, r), lp_norm(f, p) * lp_norm(g, q)},
          {schatten_norm(fb, r), lp_norm(f, p) * schatten_norm(b, q)},
          {schatten_norm(ag, r), schatten_norm(a, p) * lp_norm(g, q)},
          {lp_norm(ab, r), schatten_norm(a, p) * schatten_norm(b, q)},
      };
      for (const auto& [lhs, rhs] : checks) {
        report.max_excess = std::max(report.max_excess, lhs - rhs);
        if (lhs > rhs * (1.0 + kYoungSlack) + kYoungSlack) {
          ++report.violations;
        }
      }
    }
  }
  return report;
}

PositivityReport verify_positivity(const Representation& rep, int trials,
                                   Rng& rng) {
  const PhaseSpace& s = rep.space();
  const std::int64_t d = s.dim();
  const std::int64_t n = s.point_count();
  PositivityReport report;
  report.trials = trials;
  report.min_fA_eigenvalue = std::numeric_limits<double>::infinity();
  report.min_AB_value = std::numeric_limits<double>::infinity();

  for (int t = 0; t < trials; ++t) {
    // Forward direction: positivity is transported.
    CVec fv(n);
    for (std::int64_t z = 0; z < n; ++z) fv(z) = std::abs(rng.normal());
    const PhaseFunction f{s, std::move(fv)};
    const Operator a = rng.density(d);
    const Operator b = rng.density(d);

    const Operator fa = conv_fA(rep, f, a);
    Eigen::SelfAdjointEigenSolver<Operator> es(
        Operator((fa + fa.adjoint()) / 2.0));
    report.min_fA_eigenvalue =
        std::min(report.min_fA_eigenvalue, es.eigenvalues().minCoeff());

    const PhaseFunction ab = conv_AB(rep, a, b);
    report.min_AB_value =
        std::min(report.min_AB_value, ab.values.real().minCoeff());
    report.max_AB_imag =
        std::max(report.max_AB_imag, ab.values.imag().cwiseAbs().maxCoeff());

    // Converse probes.  A function with a lone negative spike has a negative
    // position marginal, which the basis-state projector sees as a negative
    // eigenvalue of f * P.
    CVec spike = CVec::Zero(n);
    spike(rng.index(n)) = -1.0;
    CVec basis0 = CVec::Zero(d);
    basis0(0) = 1.0;
    const Operator p0 = basis0 * basis0.adjoint();
    const Operator spike_a = conv_fA(rep, PhaseFunction{s, spike}, p0);
    Eigen::SelfAdjointEigenSolver<Operator> spike_es(
        Operator((spike_a + spike_a.adjoint()) / 2.0));
    ++report.converse_total;
    if (spike_es.eigenvalues().minCoeff() < -kDefaultTolerance) {
      ++report.converse_detected;
    }

    // An indefinite operator is exposed by the reflected projector onto a
    // negative eigenvector: (H * P)(0) = <H v, v> < 0.
    const Operator h = rng.indefinite_hermitian(d);
    Eigen::SelfAdjointEigenSolver<Operator> hes(h);
    CVec witness = rep.parity() * hes.eigenvectors().col(0);
    const Operator pw = witness * witness.adjoint();
    const PhaseFunction probe = conv_AB(rep, h, pw);
    ++report.converse_total;
    if (probe.values.real().minCoeff() < -kDefaultTolerance) {
      ++report.converse_detected;
    }
  }
  return report;
}

}  // namespace qha
