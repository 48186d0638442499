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

#include <complex>

#include <Eigen/Dense>

namespace qha {

using Cplx = std::complex<double>;

/// Dense operator on the representation space C^{|G|}.
using Operator = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Absolute tolerance every exact identity is checked against unless a
/// caller passes something tighter or looser explicitly.
inline constexpr double kDefaultTolerance = 1e-10;

inline constexpr double kTwoPi = 6.28318530717958647692;

}  // namespace qha
