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

#include "qha/ref.hpp"

namespace qha::ref {

Operator shift(const Representation& rep, std::int64_t z, const Operator& a) {
  const Operator& u = rep.unitary(z);
  return u * a * u.adjoint();
}

Operator reflect(const Representation& rep, const Operator& a) {
  return rep.parity() * a * rep.parity().adjoint();
}

PhaseFunction conv_ff(const PhaseFunction& f, const PhaseFunction& g) {
  require_same_space(f.space, g.space);
  const PhaseSpace& s = f.space;
  const std::int64_t n = s.point_count();
  CVec out = CVec::Zero(n);
  for (std::int64_t y = 0; y < n; ++y) {
    for (std::int64_t x = 0; x < n; ++x) {
      out(y) += f.values(x) * g.values(s.sub(y, x));
    }
    out(y) *= s.weight();
  }
  return PhaseFunction{s, std::move(out)};
}

Operator conv_fA(const Representation& rep, const PhaseFunction& f,
                 const Operator& a) {
  require_same_space(rep.space(), f.space);
  const std::int64_t n = rep.point_count();
  Operator out = Operator::Zero(rep.dim(), rep.dim());
  for (std::int64_t z = 0; z < n; ++z) {
    out += f.values(z) * shift(rep, z, a);
  }
  return rep.weight() * out;
}

PhaseFunction conv_AB(const Representation& rep, const Operator& a,
                      const Operator& b) {
  const PhaseSpace& s = rep.space();
  const std::int64_t n = s.point_count();
  const Operator reflected = reflect(rep, b);
  CVec out(n);
  for (std::int64_t z = 0; z < n; ++z) {
    out(z) = (a * shift(rep, z, reflected)).trace();
  }
  return PhaseFunction{s, std::move(out)};
}

DualFunction fourier_sigma(const PhaseFunction& f) {
  const PhaseSpace& s = f.space;
  const std::int64_t n = s.point_count();
  CVec out = CVec::Zero(n);
  for (std::int64_t xi = 0; xi < n; ++xi) {
    for (std::int64_t x = 0; x < n; ++x) {
      out(xi) += s.sigma(x, xi) * f.values(x);
    }
    out(xi) *= s.weight();
  }
  return DualFunction{s, std::move(out)};
}

DualFunction fourier_weyl(const Representation& rep, const Operator& a) {
  const PhaseSpace& s = rep.space();
  const std::int64_t n = s.point_count();
  CVec out(n);
  for (std::int64_t xi = 0; xi < n; ++xi) {
    out(xi) = (a * rep.unitary(xi).adjoint()).trace();
  }
  return DualFunction{s, std::move(out)};
}

Operator fourier_weyl_inv(const Representation& rep, const DualFunction& f) {
  require_same_space(rep.space(), f.space);
  const std::int64_t n = rep.point_count();
  Operator out = Operator::Zero(rep.dim(), rep.dim());
  for (std::int64_t xi = 0; xi < n; ++xi) {
    out += f.values(xi) * rep.unitary(xi);
  }
  return rep.weight() * out;
}

DualFunction twisted_conv(const DualFunction& f, const DualFunction& g) {
  require_same_space(f.space, g.space);
  const PhaseSpace& s = f.space;
  const std::int64_t n = s.point_count();
  CVec out = CVec::Zero(n);
  for (std::int64_t xi = 0; xi < n; ++xi) {
    for (std::int64_t eta = 0; eta < n; ++eta) {
      const std::int64_t diff = s.sub(xi, eta);
      out(xi) += f.values(diff) * g.values(eta) * s.m(diff, eta);
    }
    out(xi) *= s.weight();
  }
  return DualFunction{s, std::move(out)};
}

}  // namespace qha::ref
