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

#include "qha/convolution.hpp"

namespace qha {

/// Symplectic Fourier transform F(xi) = w * sum_x sigma(x, xi) f(x).
/// With the normalized weight the transform is exactly self-inverse, so the
/// inverse applies the same formula on the dual side.
DualFunction fourier_sigma(const PhaseFunction& f);
PhaseFunction fourier_sigma_inv(const DualFunction& f);

/// Operator transform F(xi) = tr(A U_xi^*).
DualFunction fourier_weyl(const Representation& rep, const Operator& a);

/// Inverse transform A = w * sum_xi f(xi) U_xi.
Operator fourier_weyl_inv(const Representation& rep, const DualFunction& f);

/// Twisted convolution (f *_m g)(xi) = w * sum_eta f(xi-eta) g(eta) m(xi-eta, eta);
/// the transform side of the operator product.
DualFunction twisted_conv(const DualFunction& f, const DualFunction& g);

/// Involution f ->  conj(f(-xi) m(-xi, xi)) matching the operator adjoint
/// through the inverse transform.
DualFunction adjoint_twist(const DualFunction& f);

/// Wigner function: symplectic inverse transform of the operator transform.
/// Real-valued for Hermitian input under the weyl kind; other kinds may
/// produce complex values.
PhaseFunction wigner(const Representation& rep, const Operator& a);

/// Worst deviation of F_U(U_{x/2} A U_{x/2})(xi) = F_U(A)(xi - x) over all
/// phase-space x and `trials` random operators.  The half-shift needs the
/// symmetric multiplier; throws std::domain_error unless the kind is weyl.
struct ModulationReport {
  int trials = 0;
  double max_dev = 0.0;
  bool pass(double tol = kDefaultTolerance) const { return max_dev <= tol; }
};
ModulationReport verify_modulation(const Representation& rep, int trials,
                                   Rng& rng);

/// Random audit of both Hausdorff-Young families for p in {1, 4/3, 2}:
/// ||F_U(A)||_q <= ||A||_{S_p} and ||F_U^{-1}(f)||_{S_q} <= ||f||_p with
/// 1/p + 1/q = 1, plus the p = 2 Plancherel equality.
struct HausdorffYoungReport {
  int trials = 0;
  int violations = 0;
  double max_excess = 0.0;
  double plancherel_max_dev = 0.0;
  bool pass(double tol = kDefaultTolerance) const {
    return violations == 0 && plancherel_max_dev <= tol;
  }
};
HausdorffYoungReport verify_hausdorff_young(const Representation& rep,
                                            int trials, Rng& rng);

}  // namespace qha
