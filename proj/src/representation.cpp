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

#include "qha/representation.hpp"

#include <cmath>
#include <stdexcept>

namespace qha {

Representation Representation::build(const PhaseSpace& space) {
  if (space.kind() == MultiplierKind::table) {
    throw std::invalid_argument(
        "representation: raw table multipliers cannot be represented; "
        "use canonical, weyl, or modified kinds");
  }
  const std::int64_t d = space.dim();
  if (d > 64) {
    // The unitary cache grows as |G|^4 entries.
    throw std::invalid_argument("representation: group size above 64");
  }
  const std::int64_t n = space.point_count();
  const FiniteAbelianGroup& g = space.group();

  Representation rep(space);
  rep.phases_.resize(static_cast<std::size_t>(n));
  rep.unitaries_.assign(static_cast<std::size_t>(n), Operator::Zero(d, d));
  for (std::int64_t z = 0; z < n; ++z) {
    const std::int64_t x = space.pos(z);
    const std::int64_t xi = space.mom(z);
    const Cplx a = space.multiplier().phase(z);
    rep.phases_[static_cast<std::size_t>(z)] = a;
    Operator& u = rep.unitaries_[static_cast<std::size_t>(z)];
    for (std::int64_t y = 0; y < d; ++y) {
      // (U_z)_{y, y'} = a(z) <y, xi> [y' = y - x]
      u(y, g.sub(y, x)) = a * g.character(y, xi);
    }
  }

  rep.parity_ = Operator::Zero(d, d);
  for (std::int64_t y = 0; y < d; ++y) rep.parity_(y, g.neg(y)) = 1.0;
  return rep;
}

Operator Representation::shift(std::int64_t z, const Operator& a) const {
  const std::int64_t d = dim();
  if (a.rows() != d || a.cols() != d) {
    throw std::invalid_argument("shift: operator dimension mismatch");
  }
  const FiniteAbelianGroup& g = space_.group();
  const std::int64_t x = space_.pos(z);
  const std::int64_t xi = space_.mom(z);
  Operator out(d, d);
  for (std::int64_t i = 0; i < d; ++i) {
    const Cplx ci = g.character(i, xi);
    const std::int64_t si = g.sub(i, x);
    for (std::int64_t j = 0; j < d; ++j) {
      out(i, j) = ci * std::conj(g.character(j, xi)) * a(si, g.sub(j, x));
    }
  }
  return out;
}

Operator Representation::reflect(const Operator& a) const {
  const std::int64_t d = dim();
  if (a.rows() != d || a.cols() != d) {
    throw std::invalid_argument("reflect: operator dimension mismatch");
  }
  const FiniteAbelianGroup& g = space_.group();
  Operator out(d, d);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j) out(i, j) = a(g.neg(i), g.neg(j));
  return out;
}

std::optional<std::pair<Cplx, std::int64_t>> phase_covariant_decompose(
    const Representation& rep, const Operator& a, double tol) {
  const std::int64_t n = rep.point_count();
  const double norm2 = a.squaredNorm();
  if (norm2 == 0.0) {
    throw std::invalid_argument(
        "phase_covariant_decompose: zero operator is covariant for every "
        "phase family");
  }
  const double scale = std::sqrt(norm2);

  // Candidate eigenvalue under each shift, then check it really is one.
  std::vector<Cplx> c(static_cast<std::size_t>(n));
  for (std::int64_t z = 0; z < n; ++z) {
    const Operator shifted = rep.shift(z, a);
    const Cplx cz = (shifted * a.adjoint()).trace() / norm2;
    if ((shifted - cz * a).cwiseAbs().maxCoeff() > tol * scale) {
      return std::nullopt;
    }
    c[static_cast<std::size_t>(z)] = cz;
  }

  // A scalar multiple of U_w has covariance phases sigma(z, w); match the
  // phase table against each candidate w.
  const PhaseSpace& space = rep.space();
  for (std::int64_t w = 0; w < n; ++w) {
    double dev = 0.0;
    for (std::int64_t z = 0; z < n; ++z) {
      dev = std::max(dev, std::abs(c[static_cast<std::size_t>(z)] -
                                   space.sigma(z, w)));
    }
    if (dev <= tol) {
      const Cplx b = (a * rep.unitary(w).adjoint()).trace() /
                     static_cast<double>(rep.dim());
      if ((a - b * rep.unitary(w)).cwiseAbs().maxCoeff() <= tol * scale) {
        return std::make_pair(b, w);
      }
    }
  }
  return std::nullopt;
}

double ccr_max_deviation(const Representation& rep) {
  const std::int64_t n = rep.point_count();
  const PhaseSpace& space = rep.space();
  double dev = 0.0;
#pragma omp parallel for reduction(max : dev) schedule(static)
  for (std::int64_t z = 0; z < n; ++z) {
    for (std::int64_t w = 0; w < n; ++w) {
      const Operator lhs = rep.unitary(z) * rep.unitary(w);
      const Operator rhs = space.m(z, w) * rep.unitary(space.add(z, w));
      dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return dev;
}

double adjoint_law_max_deviation(const Representation& rep) {
  const std::int64_t n = rep.point_count();
  const PhaseSpace& space = rep.space();
  double dev = 0.0;
  for (std::int64_t z = 0; z < n; ++z) {
    const Operator lhs = rep.unitary(z).adjoint();
    const Operator rhs =
        std::conj(space.m(z, space.neg(z))) * rep.unitary(space.neg(z));
    dev = std::max(dev, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return dev;
}

double moyal_max_deviation(const Representation& rep, int trials, Rng& rng) {
  const std::int64_t d = rep.dim();
  const std::int64_t n = rep.point_count();
  const double w = rep.weight();
  double dev = 0.0;
  for (int t = 0; t < trials; ++t) {
    const CVec phi1 = rng.vector(d), psi1 = rng.vector(d);
    const CVec phi2 = rng.vector(d), psi2 = rng.vector(d);
    Cplx sum = 0.0;
    for (std::int64_t z = 0; z < n; ++z) {
      const Operator& u = rep.unitary(z);
      sum += (psi1.adjoint() * (u * phi1)).value() *
             std::conj((psi2.adjoint() * (u * phi2)).value());
    }
    const Cplx expected = (phi2.adjoint() * phi1).value() *
                          std::conj((psi2.adjoint() * psi1).value());
    dev = std::max(dev, std::abs(w * sum - expected));
  }
  return dev;
}

std::int64_t unitary_span_rank(const Representation& rep) {
  const std::int64_t d = rep.dim();
  const std::int64_t n = rep.point_count();
  Operator stacked(n, d * d);
  for (std::int64_t z = 0; z < n; ++z) {
    const Operator& u = rep.unitary(z);
    for (std::int64_t i = 0; i < d; ++i)
      for (std::int64_t j = 0; j < d; ++j) stacked(z, i * d + j) = u(i, j);
  }
  Eigen::JacobiSVD<Operator> svd(stacked);
  const auto& sv = svd.singularValues();
  const double cut = 1e-8 * sv(0);
  std::int64_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += (sv(i) > cut) ? 1 : 0;
  return rank;
}

}  // namespace qha
