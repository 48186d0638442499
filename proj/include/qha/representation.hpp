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

#include <optional>
#include <utility>
#include <vector>

#include "qha/phase_space.hpp"
#include "qha/rng.hpp"

namespace qha {

/// Projective unitary family U_z on C^{|G|} indexed by phase-space points,
/// satisfying U_z U_w = m(z, w) U_{z+w} for the space's multiplier, plus the
/// parity unitary R with U_z R = R U_{-z}.
///
/// Every kind is a phase twist U_z = a(z) M_xi T_x of the same clock/shift
/// pair ((M_xi f)(y) = <y, xi> f(y), (T_x f)(y) = f(y - x)); the structural
/// kernels in the convolution and transform modules rely on exactly that
/// factorization.  The full matrices are built once and cached in canonical
/// phase-space order.
class Representation {
 public:
  /// Throws std::invalid_argument for raw table multipliers (those exist for
  /// auditing only) and for groups too large to cache |Xi| dense matrices.
  static Representation build(const PhaseSpace& space);

  const PhaseSpace& space() const { return space_; }
  std::int64_t dim() const { return space_.dim(); }
  std::int64_t point_count() const { return space_.point_count(); }
  double weight() const { return space_.weight(); }

  const Operator& unitary(std::int64_t z) const {
    return unitaries_[static_cast<std::size_t>(z)];
  }
  const Operator& parity() const { return parity_; }
  Cplx phase(std::int64_t z) const {
    return phases_[static_cast<std::size_t>(z)];
  }

  /// alpha_z(A) = U_z A U_z^*.  Independent of the phase kind; computed from
  /// the clock/shift factorization in O(dim^2).
  Operator shift(std::int64_t z, const Operator& a) const;

  /// beta_-(A) = R A R^*.
  Operator reflect(const Operator& a) const;

 private:
  explicit Representation(PhaseSpace space) : space_(std::move(space)) {}

  PhaseSpace space_;
  std::vector<Operator> unitaries_;
  std::vector<Cplx> phases_;
  Operator parity_;
};

/// If alpha_z(A) = c_z A for every z (each c_z a scalar), A is a scalar
/// multiple of a single U_z; returns that (scalar, z).  Returns nullopt when
/// A is not phase-covariant within tol; throws std::invalid_argument on
/// A = 0, where the covariance equation carries no information.
std::optional<std::pair<Cplx, std::int64_t>> phase_covariant_decompose(
    const Representation& rep, const Operator& a,
    double tol = kDefaultTolerance);

/// Worst deviation || U_z U_w - m(z,w) U_{z+w} ||_max over all pairs.
double ccr_max_deviation(const Representation& rep);

/// Worst deviation of U_z^* from conj(m(z,-z)) U_{-z} over all z.
double adjoint_law_max_deviation(const Representation& rep);

/// Worst deviation over `trials` random quadruples of the orthogonality
/// relation: the weighted phase-space sum of <U_z phi1, psi1> times
/// conj(<U_z phi2, psi2>) equals <phi1, phi2> conj(<psi1, psi2>).
double moyal_max_deviation(const Representation& rep, int trials, Rng& rng);

/// Rank of the family {U_z} inside the d^2-dimensional operator space; the
/// family is irreducible (and the transform built on it injective) iff this
/// equals dim^2.
std::int64_t unitary_span_rank(const Representation& rep);

}  // namespace qha
