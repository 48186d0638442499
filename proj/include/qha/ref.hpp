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

namespace qha::ref {

// Serial reference implementations, written term for term from the defining
// formulas with the cached unitary matrices and no parallelism or structural
// shortcuts.  They are the oracles the optimized kernels are tested against,
// and the baseline the benchmark compares against.

Operator shift(const Representation& rep, std::int64_t z, const Operator& a);
Operator reflect(const Representation& rep, const Operator& a);

PhaseFunction conv_ff(const PhaseFunction& f, const PhaseFunction& g);
Operator conv_fA(const Representation& rep, const PhaseFunction& f,
                 const Operator& a);
PhaseFunction conv_AB(const Representation& rep, const Operator& a,
                      const Operator& b);

DualFunction fourier_sigma(const PhaseFunction& f);
DualFunction fourier_weyl(const Representation& rep, const Operator& a);
Operator fourier_weyl_inv(const Representation& rep, const DualFunction& f);
DualFunction twisted_conv(const DualFunction& f, const DualFunction& g);

}  // namespace qha::ref
