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

#include <utility>

#include "qha/convolution.hpp"
#include "qha/rng.hpp"

namespace qha {

/// Shift-covariant positive correspondence between functions and operators:
/// Gamma(f, A) = (A * B1, f * B2) for a fixed pair of density operators.
/// The map swaps the slots: bounded functions on phase space become
/// operators and vice versa, covariantly with respect to phase-space shifts.
struct CorrespondenceRule {
  Operator b1;
  Operator b2;
};

/// Validates that both operators are Hermitian positive semidefinite with
/// unit trace; throws std::domain_error when a law fails and
/// std::invalid_argument on a dimension mismatch.
CorrespondenceRule make_rule(const Representation& rep, Operator b1,
                             Operator b2, double tol = kDefaultTolerance);

MixedElement apply_rule(const Representation& rep,
                        const CorrespondenceRule& rule,
                        const MixedElement& u);

/// The function/operator pairs also form a unital C*-algebra under the
/// pointwise-function, composed-operator product (f, A)(g, B) = (fg, AB)
/// with unit (1, I).  This product — distinct from the convolution product
/// of the Banach algebra — is the one in which positivity and the
/// Kadison-Schwarz inequality for correspondence rules are phrased.
MixedElement cstar_product(const MixedElement& u, const MixedElement& v);

/// Involution of that C*-algebra: (f, A)* = (conj(f), A^dagger).
MixedElement mixed_adjoint(const MixedElement& u);

/// Randomized audit of the defining properties plus complete positivity:
///  - shift covariance alpha_x(Gamma(u)) = Gamma(alpha_x(u)) for every x;
///  - unit exchanges Gamma(1, 0) = (0, I) and Gamma(0, I) = (1, 0);
///  - positivity transport: nonnegative functions and positive operators
///    map to positive outputs;
///  - Kadison-Schwarz in the C*-product: Gamma(u*) Gamma(u) <= Gamma(u* u),
///    checked pointwise in the function slot and by eigenvalues in the
///    operator slot.
struct RuleReport {
  int trials = 0;
  double covariance_max_dev = 0.0;
  double unit_exchange_dev = 0.0;
  /// Smallest real value of a function-slot image of a positive input.
  double positivity_min_fn = 0.0;
  /// Smallest eigenvalue of an operator-slot image of a positive input.
  double positivity_min_op_eig = 0.0;
  /// Imaginary parts / non-Hermitian parts of images of positive inputs.
  double positivity_structure_dev = 0.0;
  double ks_max_violation = 0.0;
  bool pass(double tol = kDefaultTolerance) const {
    return covariance_max_dev <= tol && unit_exchange_dev <= tol &&
           positivity_min_fn >= -tol && positivity_min_op_eig >= -tol &&
           positivity_structure_dev <= tol && ks_max_violation <= tol;
  }
};
RuleReport verify_rule(const Representation& rep,
                       const CorrespondenceRule& rule, int trials, Rng& rng);

/// Convex functions used by the trace-comparison checks.
enum class ConvexProbe { square, abs_value, exponential };
double probe_value(ConvexProbe phi, double t);
/// tr(phi(A)) through the eigenvalues of the Hermitian operator A.
double probe_trace(ConvexProbe phi, const Operator& a);

/// Trace comparisons along both directions of the rule, for convex phi.
///
/// Operator -> function: w * sum_x phi((A*B1)(x)) <= tr(phi(A)).  Each value
/// (A*B1)(x) is the expectation of A in a shifted-reflected copy of B1, so
/// this is Jensen's inequality state by state; it holds exactly.
///
/// Function -> operator, as printed: phi(tr(f*B2)) <= w * sum_z phi(f(z)).
/// The left side evaluates phi at the full integral of f, whose mass is the
/// group order rather than 1, so the printed comparison fails at finite
/// scale whenever phi grows (already for phi = t^2 and f = 1).  The report
/// also evaluates the probability-normalized variant
///   phi(tr(f*B2) / |G|) <= (1/|G|) * w * sum_z phi(f(z)),
/// which is the Jensen-consistent scaling and does hold.  Both outcomes are
/// recorded as data; callers decide which to assert.
struct BerezinLiebReport {
  double operator_side_lhs = 0.0;
  double operator_side_rhs = 0.0;
  bool operator_side_holds = false;
  double printed_lhs = 0.0;
  double printed_rhs = 0.0;
  bool printed_holds = false;
  double normalized_lhs = 0.0;
  double normalized_rhs = 0.0;
  bool normalized_holds = false;
};
/// `a` must be Hermitian and `f` real-valued within tol; throws
/// std::domain_error otherwise.
BerezinLiebReport berezin_lieb_check(const Representation& rep,
                                     const CorrespondenceRule& rule,
                                     const Operator& a,
                                     const PhaseFunction& f, ConvexProbe phi,
                                     double tol = kDefaultTolerance);

/// Reads the defining densities back out of the channel, confirming the
/// rule is determined by its action.  B2 is the operator slot of
/// Gamma(unit); B1 is reassembled from the function slot over a matrix-unit
/// basis.  Returns {recovered B1, recovered B2}.
std::pair<Operator, Operator> recover_rule(const Representation& rep,
                                           const CorrespondenceRule& rule);

}  // namespace qha
