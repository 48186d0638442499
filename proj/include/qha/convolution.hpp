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

#include "qha/representation.hpp"

namespace qha {

/// Complex function on the phase space, stored in canonical point order.
/// Integrals mean the Haar-weighted sum w * sum_z f(z).
struct PhaseFunction {
  PhaseSpace space;
  CVec values;
};

/// Function living on the dual copy of the phase space (transform targets).
/// Same storage and weight; the tag keeps transform directions honest.
struct DualFunction {
  PhaseSpace space;
  CVec values;
};

/// Element (f, A) of the function-operator convolution algebra.
struct MixedElement {
  PhaseFunction fun;
  Operator op;
};

PhaseFunction make_function(PhaseSpace space, CVec values);
DualFunction make_dual_function(PhaseSpace space, CVec values);
PhaseFunction constant_function(const PhaseSpace& space, Cplx value);

/// Convolution unit: the point mass at 0 scaled by 1/w, so that
/// conv_ff(delta_unit, f) = f under the weighted integral.
PhaseFunction delta_unit(const PhaseSpace& space);
/// Algebra unit (delta_unit, 0).
MixedElement mixed_unit(const PhaseSpace& space);

/// Throws std::invalid_argument unless both arguments live on the same
/// phase space (same orders, kind, and modification).
void require_same_space(const PhaseSpace& a, const PhaseSpace& b);

PhaseFunction translate(const PhaseFunction& f, std::int64_t z);
DualFunction translate(const DualFunction& f, std::int64_t z);
PhaseFunction reflect(const PhaseFunction& f);

/// (f * g)(y) = w * sum_x f(x) g(y - x).
PhaseFunction conv_ff(const PhaseFunction& f, const PhaseFunction& g);

/// f * A = w * sum_z f(z) alpha_z(A); an operator.
Operator conv_fA(const Representation& rep, const PhaseFunction& f,
                 const Operator& a);

/// (A * B)(z) = tr(A alpha_z(beta_-(B))); a phase-space function.
PhaseFunction conv_AB(const Representation& rep, const Operator& a,
                      const Operator& b);

/// Componentwise product in the commutative Banach algebra:
/// (f, A) * (g, B) = (f*g + A*B, f*B + g*A).
MixedElement banach_product(const Representation& rep, const MixedElement& u,
                            const MixedElement& v);

/// Weighted L^p norm, p in [1, inf]; p = inf gives the sup norm.
/// Throws std::invalid_argument for p < 1.
double lp_norm(const PhaseFunction& f, double p);
double lp_norm(const DualFunction& f, double p);

/// Schatten p-norm from singular values; p = inf gives the operator norm.
/// Throws std::invalid_argument for p < 1.
double schatten_norm(const Operator& a, double p);

/// Random audit of the convolution Young inequalities
///   ||f*g||_r <= ||f||_p ||g||_q,      ||f*B||_{S_r} <= ||f||_p ||B||_{S_q},
///   ||A*g||_{S_r} <= ||A||_{S_p} ||g||_q, ||A*B||_r <= ||A||_{S_p} ||B||_{S_q}
/// over every exponent triple from {1, 4/3, 2, 4, inf} with
/// 1 + 1/r = 1/p + 1/q.
struct YoungReport {
  int trials = 0;
  int combinations = 0;
  int violations = 0;
  double max_excess = 0.0;  // worst lhs - rhs over all checks (<= 0 is clean)
  bool pass() const { return violations == 0; }
};
YoungReport verify_young(const Representation& rep, int trials, Rng& rng);

/// Positivity transport: nonnegative f and PSD A give PSD f*A; PSD A, B give
/// a pointwise nonnegative A*B.  The converse probes feed constructed
/// non-positive inputs through rank-one projector witnesses and count how
/// many are detected.
struct PositivityReport {
  int trials = 0;
  double min_fA_eigenvalue = 0.0;   // over PSD inputs; >= -tol expected
  double min_AB_value = 0.0;        // over PSD inputs; >= -tol expected
  double max_AB_imag = 0.0;         // A*B should be real for Hermitian input
  int converse_total = 0;
  int converse_detected = 0;
  bool pass(double tol = kDefaultTolerance) const {
    return min_fA_eigenvalue >= -tol && min_AB_value >= -tol &&
           max_AB_imag <= tol && converse_detected == converse_total;
  }
};
PositivityReport verify_positivity(const Representation& rep, int trials,
                                   Rng& rng);

}  // namespace qha
