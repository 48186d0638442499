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

#include <map>
#include <string>
#include <vector>

#include "qha/fourier.hpp"

namespace qha {

/// Twisted positive-definiteness audit of a dual-side function: the Gram
/// matrix G[j][k] = m(-z_k, z_k) conj(m(z_j, -z_k)) f(z_j - z_k) over the
/// full phase-space enumeration must be positive semidefinite.  For
/// f = F_U(A) the Gram spectrum is |G| times the spectrum of A (each value
/// with multiplicity |G|), which makes the check an exact positivity probe.
struct TwistedPDReport {
  double min_eigenvalue = 0.0;
  double hermiticity_dev = 0.0;  // worst |G - G^*| entry before symmetrizing
  bool is_pd = false;
};
TwistedPDReport twisted_pd_check(const DualFunction& f,
                                 double tol = kDefaultTolerance);

/// Inverse-transform reconstruction with a positivity certificate.  Inputs
/// that are not twisted positive-definite still reconstruct; their
/// certificate fails (negative eigenvalue or round-trip residual), it does
/// not throw.
struct BochnerResult {
  Operator reconstructed;
  double min_eigenvalue = 0.0;
  double hermiticity_dev = 0.0;
  double roundtrip_sup_err = 0.0;
  bool certificate_ok = false;
};
BochnerResult bochner_reconstruct(const Representation& rep,
                                  const DualFunction& f,
                                  double tol = kDefaultTolerance);

/// Basis of the operators B with A * B = 0 for every A in the family.
/// Throws std::invalid_argument on an empty family.
std::vector<Operator> operator_annihilator(const Representation& rep,
                                           const std::vector<Operator>& family);

/// Basis of the functions f with f * A = 0 for every A in the family.
std::vector<CVec> function_annihilator(const Representation& rep,
                                       const std::vector<Operator>& family);

/// Equivalent regularity criteria for an operator family, each computed
/// independently:
///  - shift_span: the translates alpha_z(A_i) span the full operator space;
///  - smoothed_operator_dense: functions convolved against the family span
///    the operator space (same translate system, reported separately);
///  - smoothed_function_dense: operators convolved against the family span
///    the function space;
///  - autocorrelation: the translates of the functions A_i * A_i span the
///    function space;
///  - zero_set: the transforms F_U(A_i) have no common zero (relative
///    threshold 1e-8 * ||A_i||_{S_1});
///  - operator_annihilator / function_annihilator: only 0 convolves to zero
///    against the family.
struct WienerReport {
  std::vector<std::int64_t> zero_set;
  std::int64_t span_rank = 0;
  std::int64_t function_span_rank = 0;
  std::int64_t operator_annihilator_dim = 0;
  std::int64_t function_annihilator_dim = 0;
  std::map<std::string, bool> equivalences;
  bool regular = false;     // the shift_span verdict
  bool consistent = false;  // all criteria returned the same verdict
};
/// Audits a family of trace-class operators.  The rank computations are
/// dense; phase spaces with more than 1024 points are rejected with
/// std::invalid_argument, as are empty families.
WienerReport wiener_report(const Representation& rep,
                           const std::vector<Operator>& family);

}  // namespace qha
