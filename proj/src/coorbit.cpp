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

#include "qha/coorbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qha {

namespace {

void require_vector_dim(const Representation& rep, const CVec& v) {
  if (v.size() != rep.space().group().size()) {
    throw std::invalid_argument("vector length does not match the group");
  }
}

}  // namespace

Window make_window(const Representation& rep, CVec vec, double tol) {
  require_vector_dim(rep, vec);
  if (std::abs(vec.norm() - 1.0) > tol) {
    throw std::domain_error("window must be a unit vector");
  }
  const CVec reflected = rep.parity() * vec;
  if ((reflected - vec).cwiseAbs().maxCoeff() > tol) {
    throw std::domain_error("window must be parity-symmetric");
  }
  return Window{std::move(vec)};
}

Window delta_window(const Representation& rep) {
  const int64_t d = rep.space().group().size();
  CVec v = CVec::Zero(d);
  v(0) = 1.0;
  return Window{std::move(v)};
}

Window symmetrized_window(const Representation& rep, const CVec& seed) {
  require_vector_dim(rep, seed);
  CVec even = 0.5 * (seed + rep.parity() * seed);
  const double norm = even.norm();
  if (norm < 1e-12) {
    throw std::domain_error("seed vector has no even part");
  }
  even /= norm;
  return Window{std::move(even)};
}

PhaseFunction wavelet_transform(const Representation& rep, const Window& w,
                                const CVec& f) {
  require_vector_dim(rep, f);
  const PhaseSpace& s = rep.space();
  const int64_t n = s.point_count();
  CVec out(n);
#pragma omp parallel for schedule(static)
  for (int64_t x = 0; x < n; ++x) {
    out(x) = ((rep.unitary(x) * w.vec).adjoint() * f).value();
  }
  return make_function(s, std::move(out));
}

CVec wavelet_adjoint(const Representation& rep, const Window& w,
                     const PhaseFunction& coeff) {
  require_same_space(rep.space(), coeff.space);
  const PhaseSpace& s = rep.space();
  const int64_t d = s.group().size();
  const int64_t n = s.point_count();
  const double weight = s.weight();
  CVec out = CVec::Zero(d);
  for (int64_t x = 0; x < n; ++x) {
    out += coeff.values(x) * (rep.unitary(x) * w.vec);
  }
  return weight * out;
}

PhaseFunction reproducing_projection(const Representation& rep,
                                     const Window& w, const PhaseFunction& g) {
  require_same_space(rep.space(), g.space);
  const PhaseSpace& s = rep.space();
  const int64_t n = s.point_count();
  const double weight = s.weight();
  const PhaseFunction kernel = wavelet_transform(rep, w, w.vec);
  CVec out(n);
#pragma omp parallel for schedule(static)
  for (int64_t x = 0; x < n; ++x) {
    Cplx acc = 0.0;
    for (int64_t y = 0; y < n; ++y) {
      const int64_t ny = s.neg(y);
      acc += g.values(y) * kernel.values(s.sub(x, y)) * s.m(y, ny) *
             std::conj(s.m(ny, x));
    }
    out(x) = weight * acc;
  }
  return make_function(s, std::move(out));
}

double wavelet_equivariance_dev(const Representation& rep, const Window& w,
                                const CVec& f, std::int64_t y) {
  const PhaseSpace& s = rep.space();
  const int64_t n = s.point_count();
  const PhaseFunction base = wavelet_transform(rep, w, f);
  const PhaseFunction shifted = wavelet_transform(rep, w, rep.unitary(y) * f);
  const int64_t ny = s.neg(y);
  double dev = 0.0;
  for (int64_t x = 0; x < n; ++x) {
    const Cplx expected =
        s.m(y, ny) * std::conj(s.m(ny, x)) * base.values(s.sub(x, y));
    dev = std::max(dev, std::abs(shifted.values(x) - expected));
  }
  return dev;
}

double co_norm(const Representation& rep, const Window& w, const CVec& f,
               double p) {
  return lp_norm(wavelet_transform(rep, w, f), p);
}

WindowEquivalenceReport window_equivalence(const Representation& rep,
                                           const Window& w1, const Window& w2,
                                           double p, int samples, Rng& rng) {
  const int64_t d = rep.space().group().size();
  WindowEquivalenceReport report;
  report.samples = samples;
  report.min_ratio = std::numeric_limits<double>::infinity();
  report.max_ratio = 0.0;
  for (int i = 0; i < samples; ++i) {
    const CVec f = rng.unit_vector(d);
    const double a = co_norm(rep, w1, f, p);
    const double b = co_norm(rep, w2, f, p);
    const double ratio = b / a;
    report.min_ratio = std::min(report.min_ratio, ratio);
    report.max_ratio = std::max(report.max_ratio, ratio);
  }
  if (samples == 0) {
    report.min_ratio = 0.0;
  }
  return report;
}

double conv_l1_bound_ratio(const Representation& rep, int trials, Rng& rng) {
  const int64_t d = rep.space().group().size();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Operator a = rng.matrix(d);
    const Operator b = rng.matrix(d);
    const double num = lp_norm(conv_AB(rep, a, b), 1.0);
    const double den = schatten_norm(a, 1.0) * schatten_norm(b, 1.0);
    worst = std::max(worst, num / den);
  }
  return worst;
}

PIndependenceReport wiener_p_independence(
    const Representation& rep, const std::vector<Operator>& family,
    const std::vector<double>& p_list) {
  for (double p : p_list) {
    if (!(p > 1.0) || !std::isfinite(p)) {
      throw std::invalid_argument("exponents must lie strictly between 1 and "
                                  "infinity");
    }
  }

  PIndependenceReport report;
  report.base = wiener_report(rep, family);
  report.p_values = p_list;

  const std::vector<Operator> annihilator = operator_annihilator(rep, family);
  const bool trivial = annihilator.empty();

  for (double p : p_list) {
    double residual = 0.0;
    for (const Operator& b : annihilator) {
      for (const Operator& a : family) {
        residual = std::max(residual, lp_norm(conv_AB(rep, a, b), p));
      }
    }
    report.annihilator_residuals.push_back(residual);
    report.regular_per_p.push_back(trivial);
  }

  bool identical = true;
  for (bool verdict : report.regular_per_p) {
    identical = identical && (verdict == report.base.regular);
  }
  report.identical = identical;
  return report;
}

}  // namespace qha
