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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qha/phase_space.hpp"
#include "qha/rng.hpp"

using qha::Cplx;
using qha::FiniteAbelianGroup;
using qha::make_group;
using qha::Multiplier;
using qha::MultiplierKind;
using qha::MultiplierReport;
using qha::PhaseSpace;
using qha::Rng;
using qha::verify_heisenberg;
using qha::verify_multiplier;

namespace {

double cdist(const Cplx& a, const Cplx& b) { return std::abs(a - b); }

Cplx unit_phase(double turns) { return std::polar(1.0, qha::kTwoPi * turns); }

Multiplier modified_example(const std::vector<std::int64_t>& orders,
                            std::uint64_t seed) {
  Multiplier base = Multiplier::canonical(make_group(orders));
  Rng rng(seed);
  std::vector<Cplx> a = rng.even_phases(
      base.point_count(), [&](std::int64_t z) { return base.neg(z); });
  return Multiplier::modified(base, std::move(a));
}

}  // namespace

TEST_CASE("kind names render stably") {
  CHECK(qha::to_string(MultiplierKind::canonical) == "canonical");
  CHECK(qha::to_string(MultiplierKind::weyl) == "weyl");
  CHECK(qha::to_string(MultiplierKind::modified) == "modified");
  CHECK(qha::to_string(MultiplierKind::table) == "table");
}

TEST_CASE("flat phase-space indexing round-trips") {
  const Multiplier m = Multiplier::canonical(make_group({2, 3}));
  CHECK(m.dim() == 6);
  CHECK(m.point_count() == 36);
  for (std::int64_t x = 0; x < m.dim(); ++x) {
    for (std::int64_t xi = 0; xi < m.dim(); ++xi) {
      const std::int64_t z = m.point(x, xi);
      CHECK(m.pos(z) == x);
      CHECK(m.mom(z) == xi);
    }
  }
  // Addition and negation act componentwise on the (position, momentum) pair.
  const FiniteAbelianGroup& g = m.group();
  for (std::int64_t z = 0; z < m.point_count(); ++z) {
    for (std::int64_t w = 0; w < m.point_count(); ++w) {
      CHECK(m.add(z, w) ==
            m.point(g.add(m.pos(z), m.pos(w)), g.add(m.mom(z), m.mom(w))));
    }
    CHECK(m.neg(z) == m.point(g.neg(m.pos(z)), g.neg(m.mom(z))));
    CHECK(m.add(z, m.neg(z)) == 0);
  }
}

TEST_CASE("canonical multiplier is the conjugate cross pairing") {
  // m((x, xi), (y, eta)) = conj <x, eta>, exhaustively.
  for (const auto& orders :
       std::vector<std::vector<std::int64_t>>{{2}, {3}, {2, 2}}) {
    const Multiplier m = Multiplier::canonical(make_group(orders));
    const FiniteAbelianGroup& g = m.group();
    for (std::int64_t z = 0; z < m.point_count(); ++z) {
      for (std::int64_t w = 0; w < m.point_count(); ++w) {
        CHECK(cdist(m.eval(z, w),
                    std::conj(g.character(m.pos(z), m.mom(w)))) < 1e-15);
      }
    }
  }
}

TEST_CASE("canonical multiplier takes frozen values") {
  const Multiplier z2 = Multiplier::canonical(make_group({2}));
  CHECK(cdist(z2.eval(3, 3), Cplx(-1, 0)) < 1e-15);  // (1,1) against itself
  CHECK(cdist(z2.eval(2, 1), Cplx(-1, 0)) < 1e-15);  // (1,0) against (0,1)
  CHECK(cdist(z2.eval(1, 2), Cplx(1, 0)) < 1e-15);   // (0,1) against (1,0)
  for (std::int64_t z = 0; z < 4; ++z) {
    CHECK(cdist(z2.eval(z, 0), Cplx(1, 0)) < 1e-15);
    CHECK(cdist(z2.eval(0, z), Cplx(1, 0)) < 1e-15);
  }

  const Multiplier z3 = Multiplier::canonical(make_group({3}));
  CHECK(cdist(z3.eval(z3.point(1, 0), z3.point(0, 1)), unit_phase(-1.0 / 3.0)) <
        1e-15);
  CHECK(cdist(z3.eval(z3.point(2, 1), z3.point(1, 2)), unit_phase(-4.0 / 3.0)) <
        1e-14);
}

TEST_CASE("antisymmetrized form matches its closed form") {
  // sigma((x,xi),(y,eta)) = conj<x,eta> * <y,xi> for every kind built over
  // the same group, because coboundary phases cancel.
  const std::vector<Multiplier> ms = {
      Multiplier::canonical(make_group({3})),
      Multiplier::weyl(make_group({3})),
      modified_example({3}, 11),
  };
  const FiniteAbelianGroup& g = ms.front().group();
  for (const Multiplier& m : ms) {
    for (std::int64_t z = 0; z < m.point_count(); ++z) {
      for (std::int64_t w = 0; w < m.point_count(); ++w) {
        const Cplx expect = std::conj(g.character(m.pos(z), m.mom(w))) *
                            g.character(m.pos(w), m.mom(z));
        CHECK(cdist(m.sigma(z, w), expect) < 1e-13);
      }
    }
  }
}

TEST_CASE("multiplier audit passes for every construction kind") {
  const std::vector<std::vector<std::int64_t>> canonical_groups = {
      {2}, {3}, {4}, {2, 2}, {2, 3}};
  for (const auto& orders : canonical_groups) {
    const MultiplierReport r =
        verify_multiplier(Multiplier::canonical(make_group(orders)));
    CHECK(r.pass(1e-12));
  }
  const std::vector<std::vector<std::int64_t>> odd_groups = {{3}, {5}, {3, 3}};
  for (const auto& orders : odd_groups) {
    const MultiplierReport r =
        verify_multiplier(Multiplier::weyl(make_group(orders)));
    CHECK(r.pass(1e-12));
  }
  CHECK(verify_multiplier(modified_example({3}, 5)).pass(1e-12));
  CHECK(verify_multiplier(modified_example({2, 2}, 7)).pass(1e-12));
}

TEST_CASE("multiplier audit flags a corrupted table") {
  const Multiplier base = Multiplier::canonical(make_group({2}));
  std::vector<Cplx> values;
  values.reserve(16 * 16);
  for (std::int64_t z = 0; z < base.point_count(); ++z) {
    for (std::int64_t w = 0; w < base.point_count(); ++w) {
      values.push_back(base.eval(z, w));
    }
  }
  // A faithful copy audits clean.
  const Multiplier copy = Multiplier::from_table(base.group(), values);
  CHECK(verify_multiplier(copy).pass(1e-12));
  for (std::int64_t z = 0; z < base.point_count(); ++z) {
    for (std::int64_t w = 0; w < base.point_count(); ++w) {
      CHECK(cdist(copy.eval(z, w), base.eval(z, w)) == 0.0);
    }
  }

  // One corrupted interior entry must show up in the cocycle (and only
  // law-specific) deviations.
  values[static_cast<std::size_t>(3 * base.point_count() + 2)] *= Cplx(0, 1);
  const MultiplierReport bad =
      verify_multiplier(Multiplier::from_table(base.group(), values));
  CHECK_FALSE(bad.pass(1e-12));
  CHECK(bad.cocycle_max_dev > 0.5);

  // A non-unit modulus entry trips the modulus check.
  std::vector<Cplx> scaled = values;
  scaled[5] *= 2.0;
  const MultiplierReport mod =
      verify_multiplier(Multiplier::from_table(base.group(), scaled));
  CHECK(mod.modulus_max_dev > 0.5);
}

TEST_CASE("table construction validates only the size") {
  const FiniteAbelianGroup g = make_group({2});
  CHECK_THROWS_AS(Multiplier::from_table(g, std::vector<Cplx>(15, Cplx(1, 0))),
                  std::invalid_argument);
  const Multiplier t = Multiplier::from_table(g, std::vector<Cplx>(16, Cplx(1, 0)));
  CHECK(t.kind() == MultiplierKind::table);
  // Raw tables have no coboundary-phase interpretation.
  CHECK_THROWS_AS(t.phase(0), std::domain_error);
}

TEST_CASE("half-shifted kind needs every factor order odd") {
  CHECK_THROWS_AS(Multiplier::weyl(make_group({2})), std::domain_error);
  CHECK_THROWS_AS(Multiplier::weyl(make_group({4})), std::domain_error);
  CHECK_THROWS_AS(Multiplier::weyl(make_group({2, 3})), std::domain_error);
  CHECK_NOTHROW(Multiplier::weyl(make_group({3, 5})));
}

TEST_CASE("half-shifted kind trivializes the inversion phase") {
  // m(z, -z) = 1 for all z; this is what makes adjoints phase-free.
  for (const auto& orders : std::vector<std::vector<std::int64_t>>{{3}, {5}}) {
    const Multiplier m = Multiplier::weyl(make_group(orders));
    for (std::int64_t z = 0; z < m.point_count(); ++z) {
      CHECK(cdist(m.eval(z, m.neg(z)), Cplx(1, 0)) < 1e-14);
    }
    // Coboundary phase against the canonical kind: a(z) = conj <x/2, xi>.
    const FiniteAbelianGroup& g = m.group();
    for (std::int64_t z = 0; z < m.point_count(); ++z) {
      const Cplx expect =
          std::conj(g.character(g.halve(m.pos(z)), m.mom(z)));
      CHECK(cdist(m.phase(z), expect) < 1e-14);
    }
  }
}

TEST_CASE("coboundary modification validates its phase table") {
  const Multiplier base = Multiplier::canonical(make_group({3}));
  const auto n = static_cast<std::size_t>(base.point_count());

  // Wrong size is a structural error.
  CHECK_THROWS_AS(Multiplier::modified(base, std::vector<Cplx>(n - 1, Cplx(1, 0))),
                  std::invalid_argument);

  // Value-level violations are content errors.
  std::vector<Cplx> bad_origin(n, Cplx(1, 0));
  bad_origin[0] = Cplx(0, 1);
  CHECK_THROWS_AS(Multiplier::modified(base, bad_origin), std::domain_error);

  std::vector<Cplx> bad_modulus(n, Cplx(1, 0));
  bad_modulus[1] = Cplx(2, 0);
  CHECK_THROWS_AS(Multiplier::modified(base, bad_modulus), std::domain_error);

  std::vector<Cplx> uneven(n, Cplx(1, 0));
  uneven[1] = Cplx(0, 1);  // leaves a(-z) = 1 != a(z)
  uneven[static_cast<std::size_t>(base.neg(1))] = Cplx(1, 0);
  CHECK_THROWS_AS(Multiplier::modified(base, uneven), std::domain_error);

  // A valid table is stored verbatim and re-exposed through phase().
  Rng rng(3);
  std::vector<Cplx> good = rng.even_phases(
      base.point_count(), [&](std::int64_t z) { return base.neg(z); });
  const Multiplier m = Multiplier::modified(base, good);
  CHECK(m.kind() == MultiplierKind::modified);
  for (std::int64_t z = 0; z < m.point_count(); ++z) {
    CHECK(cdist(m.phase(z), good[static_cast<std::size_t>(z)]) == 0.0);
    CHECK(cdist(m.phase(z), m.phase(m.neg(z))) == 0.0);
  }
  // And the modification formula holds: m_a(z,w) = a(z)a(w)conj(a(z+w)) m(z,w).
  for (std::int64_t z = 0; z < m.point_count(); ++z) {
    for (std::int64_t w = 0; w < m.point_count(); ++w) {
      const Cplx expect = good[static_cast<std::size_t>(z)] *
                          good[static_cast<std::size_t>(w)] *
                          std::conj(good[static_cast<std::size_t>(m.add(z, w))]) *
                          base.eval(z, w);
      CHECK(cdist(m.eval(z, w), expect) < 1e-14);
    }
  }
}

TEST_CASE("multiplier equality compares kind, group, and data") {
  const Multiplier a = Multiplier::canonical(make_group({3}));
  const Multiplier b = Multiplier::canonical(make_group({3}));
  CHECK(a == b);
  CHECK_FALSE(a == Multiplier::canonical(make_group({2})));
  CHECK_FALSE(a == Multiplier::weyl(make_group({3})));
  CHECK(modified_example({3}, 5) == modified_example({3}, 5));
  CHECK_FALSE(modified_example({3}, 5) == modified_example({3}, 6));
}

TEST_CASE("phase space carries the normalized weight") {
  const PhaseSpace s(Multiplier::canonical(make_group({2, 3})));
  CHECK(s.dim() == 6);
  CHECK(s.point_count() == 36);
  CHECK(s.weight() == doctest::Approx(1.0 / 6.0));
  // Total mass = weight * points = |G|.
  CHECK(s.weight() * double(s.point_count()) == doctest::Approx(6.0));
  CHECK(s.sub(5, 5) == 0);
  CHECK(s.kind() == MultiplierKind::canonical);
}

TEST_CASE("nondegeneracy holds for the built kinds and fails for flat forms") {
  CHECK(verify_heisenberg(PhaseSpace(Multiplier::canonical(make_group({2})))));
  CHECK(verify_heisenberg(PhaseSpace(Multiplier::canonical(make_group({2, 2})))));
  CHECK(verify_heisenberg(PhaseSpace(Multiplier::weyl(make_group({5})))));
  CHECK(verify_heisenberg(PhaseSpace(modified_example({2, 2}, 9))));

  // A constant form sees nothing: every z pairs trivially with every w.
  CHECK_FALSE(verify_heisenberg(
      4, [](std::int64_t, std::int64_t) { return Cplx(1, 0); }));
}

TEST_CASE("exhaustive audit rejects oversized inputs") {
  const Multiplier m = Multiplier::canonical(make_group({6}));
  CHECK_THROWS_AS(verify_multiplier(m, /*max_points=*/16),
                  std::invalid_argument);
}
