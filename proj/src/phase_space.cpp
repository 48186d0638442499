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

#include "qha/phase_space.hpp"

#include <cmath>
#include <stdexcept>

namespace qha {

std::string to_string(MultiplierKind kind) {
  switch (kind) {
    case MultiplierKind::canonical: return "canonical";
    case MultiplierKind::weyl: return "weyl";
    case MultiplierKind::modified: return "modified";
    case MultiplierKind::table: return "table";
  }
  throw std::logic_error("multiplier: unknown kind");
}

Multiplier Multiplier::canonical(FiniteAbelianGroup group) {
  return Multiplier(MultiplierKind::canonical, std::move(group));
}

Multiplier Multiplier::weyl(FiniteAbelianGroup group) {
  if (!group.two_regular()) {
    throw std::domain_error(
        "multiplier: weyl kind needs a two-regular group (odd orders)");
  }
  return Multiplier(MultiplierKind::weyl, std::move(group));
}

Multiplier Multiplier::modified(const Multiplier& base, std::vector<Cplx> a) {
  if (base.kind_ == MultiplierKind::table) {
    throw std::invalid_argument("multiplier: cannot modify a raw table");
  }
  const std::int64_t n = base.point_count();
  if (static_cast<std::int64_t>(a.size()) != n) {
    throw std::invalid_argument(
        "multiplier: modification needs one phase per phase-space point");
  }
  if (std::abs(a[0] - Cplx(1.0, 0.0)) > kDefaultTolerance) {
    throw std::domain_error("multiplier: modification phase a(0) != 1");
  }
  for (std::int64_t z = 0; z < n; ++z) {
    if (std::abs(std::abs(a[static_cast<std::size_t>(z)]) - 1.0) >
        kDefaultTolerance) {
      throw std::domain_error(
          "multiplier: modification phases must be unit modulus");
    }
    const std::int64_t nz = base.neg(z);
    if (std::abs(a[static_cast<std::size_t>(z)] -
                 a[static_cast<std::size_t>(nz)]) > kDefaultTolerance) {
      throw std::domain_error(
          "multiplier: modification phases must be even, a(z) = a(-z)");
    }
  }
  // Fold the base's own phases in so the result is always a modification of
  // the canonical multiplier; the coboundary construction composes.
  Multiplier result(MultiplierKind::modified, base.group_);
  result.a_ = std::move(a);
  if (base.kind_ == MultiplierKind::weyl ||
      base.kind_ == MultiplierKind::modified) {
    for (std::int64_t z = 0; z < n; ++z) {
      result.a_[static_cast<std::size_t>(z)] *= base.phase(z);
    }
  }
  return result;
}

Multiplier Multiplier::from_table(FiniteAbelianGroup group,
                                  std::vector<Cplx> values) {
  Multiplier result(MultiplierKind::table, std::move(group));
  const std::int64_t n = result.point_count();
  if (static_cast<std::int64_t>(values.size()) != n * n) {
    throw std::invalid_argument(
        "multiplier: table needs |Xi|^2 row-major values");
  }
  result.table_ = std::move(values);
  return result;
}

Cplx Multiplier::eval(std::int64_t z, std::int64_t w) const {
  const FiniteAbelianGroup& g = group_;
  switch (kind_) {
    case MultiplierKind::canonical:
      return std::conj(g.character(pos(z), mom(w)));
    case MultiplierKind::weyl:
      // <y/2, xi> conj(<x/2, eta>): the symmetric half-pairing phase.
      return g.character(g.halve(pos(w)), mom(z)) *
             std::conj(g.character(g.halve(pos(z)), mom(w)));
    case MultiplierKind::modified: {
      const Cplx az = a_[static_cast<std::size_t>(z)];
      const Cplx aw = a_[static_cast<std::size_t>(w)];
      const Cplx azw = a_[static_cast<std::size_t>(add(z, w))];
      return az * aw * std::conj(azw) *
             std::conj(g.character(pos(z), mom(w)));
    }
    case MultiplierKind::table:
      return table_[static_cast<std::size_t>(z * point_count() + w)];
  }
  throw std::logic_error("multiplier: unknown kind");
}

Cplx Multiplier::phase(std::int64_t z) const {
  const FiniteAbelianGroup& g = group_;
  switch (kind_) {
    case MultiplierKind::canonical:
      return Cplx(1.0, 0.0);
    case MultiplierKind::weyl:
      // m(z, z/2) for the canonical m: conj(<x/2, xi>).
      return std::conj(g.character(g.halve(pos(z)), mom(z)));
    case MultiplierKind::modified:
      return a_[static_cast<std::size_t>(z)];
    case MultiplierKind::table:
      throw std::domain_error("multiplier: raw tables carry no phase data");
  }
  throw std::logic_error("multiplier: unknown kind");
}

bool Multiplier::operator==(const Multiplier& other) const {
  return kind_ == other.kind_ && group_.orders() == other.group_.orders() &&
         a_ == other.a_ && table_ == other.table_;
}

double MultiplierReport::max_dev() const {
  return std::max(std::max(normalization_max_dev, cocycle_max_dev),
                  std::max(symmetry_max_dev, modulus_max_dev));
}

MultiplierReport verify_multiplier(const Multiplier& m,
                                   std::int64_t max_points) {
  const std::int64_t n = m.point_count();
  if (n > max_points) {
    throw std::invalid_argument(
        "verify_multiplier: cocycle sweep is cubic; phase space too large");
  }
  MultiplierReport report;

  for (std::int64_t z = 0; z < n; ++z) {
    report.normalization_max_dev =
        std::max({report.normalization_max_dev,
                  std::abs(m.eval(z, 0) - Cplx(1.0, 0.0)),
                  std::abs(m.eval(0, z) - Cplx(1.0, 0.0))});
    for (std::int64_t w = 0; w < n; ++w) {
      report.modulus_max_dev = std::max(
          report.modulus_max_dev, std::abs(std::abs(m.eval(z, w)) - 1.0));
      report.symmetry_max_dev =
          std::max(report.symmetry_max_dev,
                   std::abs(m.eval(z, w) - m.eval(m.neg(z), m.neg(w))));
    }
  }

  double cocycle = 0.0;
#pragma omp parallel for reduction(max : cocycle) schedule(static)
  for (std::int64_t z = 0; z < n; ++z) {
    for (std::int64_t w = 0; w < n; ++w) {
      const Cplx mzw = m.eval(z, w);
      const std::int64_t zw = m.add(z, w);
      for (std::int64_t u = 0; u < n; ++u) {
        const double dev = std::abs(m.eval(zw, u) * mzw -
                                    m.eval(z, m.add(w, u)) * m.eval(w, u));
        cocycle = std::max(cocycle, dev);
      }
    }
  }
  report.cocycle_max_dev = cocycle;
  return report;
}

bool verify_heisenberg(const PhaseSpace& space, double tol) {
  return verify_heisenberg(
      space.point_count(),
      [&space](std::int64_t z, std::int64_t w) { return space.sigma(z, w); },
      tol);
}

bool verify_heisenberg(
    std::int64_t point_count,
    const std::function<Cplx(std::int64_t, std::int64_t)>& sigma, double tol) {
  for (std::int64_t z = 1; z < point_count; ++z) {
    bool separated = false;
    for (std::int64_t w = 0; w < point_count && !separated; ++w) {
      separated = std::abs(sigma(z, w) - Cplx(1.0, 0.0)) > tol;
    }
    if (!separated) return false;
  }
  return true;
}

}  // namespace qha
