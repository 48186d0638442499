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

#pragma once

#include <cstdint>
#include <random>

#include "qha/common.hpp"

namespace qha {

/// Deterministic random source for property checks and reports.  All draws
/// go through std::mt19937_64 with explicit distributions, so a fixed seed
/// reproduces every sampled object bit for bit on a given platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static constexpr const char* generator_name() { return "mt19937_64"; }

  double uniform() { return unit_(gen_); }
  double normal() { return normal_(gen_); }
  std::int64_t index(std::int64_t bound) {
    return std::uniform_int_distribution<std::int64_t>(0, bound - 1)(gen_);
  }

  Cplx complex_normal() { return Cplx(normal(), normal()); }

  CVec vector(std::int64_t n) {
    CVec v(n);
    for (std::int64_t i = 0; i < n; ++i) v(i) = complex_normal();
    return v;
  }

  CVec unit_vector(std::int64_t n) {
    CVec v = vector(n);
    return v / v.norm();
  }

  Operator matrix(std::int64_t n) {
    Operator a(n, n);
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = 0; j < n; ++j) a(i, j) = complex_normal();
    return a;
  }

  Operator hermitian(std::int64_t n) {
    Operator a = matrix(n);
    return (a + a.adjoint().eval()) / 2.0;
  }

  /// Positive semidefinite with unit trace.
  Operator density(std::int64_t n) {
    Operator a = matrix(n);
    Operator p = a * a.adjoint();
    return p / p.trace();
  }

  /// Hermitian with smallest eigenvalue <= -margin (c.f. indefinite inputs
  /// for positivity detectors).
  Operator indefinite_hermitian(std::int64_t n, double margin = 0.1) {
    Operator h = hermitian(n);
    Eigen::SelfAdjointEigenSolver<Operator> es(h);
    const double lo = es.eigenvalues().minCoeff();
    return h - (lo + margin) * Operator::Identity(n, n);
    // smallest eigenvalue is now exactly -margin
  }

  /// Unit-modulus phases with a(0) = 1 and a(z) = a(-z), suitable as a
  /// multiplier modification.  `negate` maps a flat index to its inverse.
  template <typename NegFn>
  std::vector<Cplx> even_phases(std::int64_t n, NegFn&& negate) {
    std::vector<Cplx> a(static_cast<std::size_t>(n), Cplx(1.0, 0.0));
    for (std::int64_t z = 1; z < n; ++z) {
      const std::int64_t nz = negate(z);
      if (nz < z) {
        a[static_cast<std::size_t>(z)] = a[static_cast<std::size_t>(nz)];
      } else {
        a[static_cast<std::size_t>(z)] = std::polar(1.0, kTwoPi * uniform());
      }
    }
    return a;
  }

 private:
  std::mt19937_64 gen_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qha
