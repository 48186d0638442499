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
#include <string>

#include <nlohmann/json.hpp>

#include "qha/serialize.hpp"

namespace qha {

struct VerifySettings {
  std::uint64_t seed = 0;
  int trials = 50;
  double tol = 1e-9;
};

struct VerifyOutcome {
  Json report;
  bool pass = false;
  /// Empty when passing; otherwise "<section>: <law> deviation <value>"
  /// for every section that failed, semicolon-separated within a section.
  std::string failure_summary;
};

/// Runs the full audit suite against one multiplier: multiplier laws,
/// nondegeneracy, commutation/adjoint/overlap identities, convolution
/// algebra, inequality families, both Fourier transforms and their
/// interaction laws, positivity certification, regularity equivalences,
/// correspondence rules, and the transform-side norms.  Raw-table
/// multipliers get the multiplier-law and nondegeneracy audits only (no
/// representation is built for them).
///
/// The report is deterministic for a fixed configuration: one named, seeded
/// generator drives every randomized audit in a fixed order, no timestamps
/// are recorded, and all parallel kernels reduce over independent output
/// indices, so repeated runs serialize byte-identically.
VerifyOutcome run_verify(const Multiplier& multiplier,
                         const VerifySettings& settings);

}  // namespace qha
