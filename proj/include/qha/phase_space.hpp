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
#include <functional>
#include <string>
#include <vector>

#include "qha/group.hpp"

namespace qha {

enum class MultiplierKind { canonical, weyl, modified, table };

std::string to_string(MultiplierKind kind);

/// Unit-modulus 2-cocycle m on the phase space Xi = G x G^.  Phase-space
/// points are addressed by flat index z = x_index * |G| + xi_index, i.e.
/// the canonical enumeration of Xi as a product group.
///
/// The canonical and half-shifted ("weyl") kinds are evaluated lazily from
/// closed forms; the modified kind additionally carries the table of its
/// coboundary phases a; the raw table kind stores all |Xi|^2 values and
/// exists so externally supplied multipliers can be audited.
class Multiplier {
 public:
  static Multiplier canonical(FiniteAbelianGroup group);
  /// Half-shifted symmetric multiplier.  Throws std::domain_error unless the
  /// group is two-regular (all factor orders odd).
  static Multiplier weyl(FiniteAbelianGroup group);
  /// Coboundary modification m_a(z, w) = a(z) a(w) conj(a(z+w)) m(z, w) of
  /// the base multiplier.  `a` must have one unit-modulus entry per
  /// phase-space point with a(0) = 1 and a(z) = a(-z); a wrong-sized list
  /// throws std::invalid_argument and a law violation std::domain_error.
  static Multiplier modified(const Multiplier& base, std::vector<Cplx> a);
  /// Raw |Xi|^2 table in row-major order; no validation is performed (use
  /// verify_multiplier to audit).
  static Multiplier from_table(FiniteAbelianGroup group,
                               std::vector<Cplx> values);

  MultiplierKind kind() const { return kind_; }
  const FiniteAbelianGroup& group() const { return group_; }
  std::int64_t dim() const { return group_.size(); }
  std::int64_t point_count() const { return dim() * dim(); }

  // Phase-space index arithmetic.
  std::int64_t pos(std::int64_t z) const { return z / dim(); }
  std::int64_t mom(std::int64_t z) const { return z % dim(); }
  std::int64_t point(std::int64_t x, std::int64_t xi) const {
    return x * dim() + xi;
  }
  std::int64_t add(std::int64_t z, std::int64_t w) const {
    return point(group_.add(pos(z), pos(w)), group_.add(mom(z), mom(w)));
  }
  std::int64_t neg(std::int64_t z) const {
    return point(group_.neg(pos(z)), group_.neg(mom(z)));
  }

  /// m(z, w).
  Cplx eval(std::int64_t z, std::int64_t w) const;

  /// Coboundary phase a(z) relating this multiplier's representation to the
  /// canonical one: identically 1 for the canonical kind, the half-pairing
  /// phase for the weyl kind, the stored table for the modified kind.
  /// Throws std::domain_error for the table kind.
  Cplx phase(std::int64_t z) const;

  /// Antisymmetrized form sigma(z, w) = m(z, w) conj(m(w, z)).
  Cplx sigma(std::int64_t z, std::int64_t w) const {
    return eval(z, w) * std::conj(eval(w, z));
  }

  const std::vector<Cplx>& modification() const { return a_; }

  bool operator==(const Multiplier& other) const;

 private:
  Multiplier(MultiplierKind kind, FiniteAbelianGroup group)
      : kind_(kind), group_(std::move(group)) {}

  MultiplierKind kind_;
  FiniteAbelianGroup group_;
  std::vector<Cplx> a_;      // modified kind: |Xi| coboundary phases
  std::vector<Cplx> table_;  // table kind: |Xi|^2 row-major values
};

/// Phase space Xi = G x G^ with the normalized Haar weight w = 1/|G| at
/// every point, so the |Xi| points carry total mass |G|.  The weight is the
/// one that makes the pairing-orthogonality relation hold with constant 1;
/// the dual space carries the same weight.
class PhaseSpace {
 public:
  explicit PhaseSpace(Multiplier multiplier)
      : multiplier_(std::move(multiplier)) {}

  const FiniteAbelianGroup& group() const { return multiplier_.group(); }
  const Multiplier& multiplier() const { return multiplier_; }
  MultiplierKind kind() const { return multiplier_.kind(); }

  std::int64_t dim() const { return multiplier_.dim(); }
  std::int64_t point_count() const { return multiplier_.point_count(); }
  double weight() const { return 1.0 / static_cast<double>(dim()); }

  std::int64_t pos(std::int64_t z) const { return multiplier_.pos(z); }
  std::int64_t mom(std::int64_t z) const { return multiplier_.mom(z); }
  std::int64_t point(std::int64_t x, std::int64_t xi) const {
    return multiplier_.point(x, xi);
  }
  std::int64_t add(std::int64_t z, std::int64_t w) const {
    return multiplier_.add(z, w);
  }
  std::int64_t neg(std::int64_t z) const { return multiplier_.neg(z); }
  std::int64_t sub(std::int64_t z, std::int64_t w) const {
    return add(z, neg(w));
  }

  Cplx m(std::int64_t z, std::int64_t w) const { return multiplier_.eval(z, w); }
  Cplx sigma(std::int64_t z, std::int64_t w) const {
    return multiplier_.sigma(z, w);
  }

  bool operator==(const PhaseSpace& other) const {
    return multiplier_ == other.multiplier_;
  }

 private:
  Multiplier multiplier_;
};

/// Worst-case deviations of a multiplier from the three defining laws:
/// normalization m(z,0) = m(0,z) = 1, the associativity cocycle
/// m(z+w,u) m(z,w) = m(z,w+u) m(w,u), and inversion symmetry
/// m(z,w) = m(-z,-w).  Also reports the worst deviation of |m| from 1.
struct MultiplierReport {
  double normalization_max_dev = 0.0;
  double cocycle_max_dev = 0.0;
  double symmetry_max_dev = 0.0;
  double modulus_max_dev = 0.0;

  double max_dev() const;
  bool pass(double tol = kDefaultTolerance) const { return max_dev() <= tol; }
};

/// Exhaustive audit.  The cocycle sweep is cubic in |Xi|; inputs with
/// |Xi| > max_points are rejected with std::invalid_argument.
MultiplierReport verify_multiplier(const Multiplier& m,
                                   std::int64_t max_points = 4096);

/// True when z -> sigma(z, .) has trivial kernel, i.e. for every z != 0
/// some w exists with sigma(z, w) != 1.  This is the condition for the
/// associated representation theory to see the full phase space.
bool verify_heisenberg(const PhaseSpace& space,
                       double tol = kDefaultTolerance);

/// Same test for an arbitrary form given as a callable on flat indices;
/// lets degenerate forms be probed directly.
bool verify_heisenberg(std::int64_t point_count,
                       const std::function<Cplx(std::int64_t, std::int64_t)>&
                           sigma,
                       double tol = kDefaultTolerance);

}  // namespace qha
