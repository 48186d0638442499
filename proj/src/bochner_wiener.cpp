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

#include "qha/bochner_wiener.hpp"

#include <cmath>
#include <stdexcept>

namespace qha {

namespace {

constexpr double kZeroSetRelThreshold = 1e-8;
constexpr double kRankRelCutoff = 1e-8;

std::int64_t rank_of(const Operator& m) {
  Eigen::JacobiSVD<Operator> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cut = kRankRelCutoff * sv(0);
  std::int64_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += (sv(i) > cut) ? 1 : 0;
  return rank;
}

/// Orthonormal basis of the null space of m (columns).
Operator kernel_of(const Operator& m) {
  Eigen::JacobiSVD<Operator> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut =
      (sv.size() == 0 || sv(0) == 0.0) ? 0.0 : kRankRelCutoff * sv(0);
  std::int64_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) rank += (sv(i) > cut) ? 1 : 0;
  return svd.matrixV().rightCols(m.cols() - rank);
}

Operator unvec(const CVec& v, std::int64_t d) {
  Operator out(d, d);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j) out(i, j) = v(i * d + j);
  return out;
}

CVec vec(const Operator& a) {
  const std::int64_t d = a.rows();
  CVec out(d * d);
  for (std::int64_t i = 0; i < d; ++i)
    for (std::int64_t j = 0; j < d; ++j) out(i * d + j) = a(i, j);
  return out;
}

void require_family(const Representation& rep,
                    const std::vector<Operator>& family) {
  if (family.empty()) {
    throw std::invalid_argument("wiener: family must not be empty");
  }
  for (const Operator& a : family) {
    if (a.rows() != rep.dim() || a.cols() != rep.dim()) {
      throw std::invalid_argument("wiener: operator dimension mismatch");
    }
  }
}

}  // namespace

TwistedPDReport twisted_pd_check(const DualFunction& f, double tol) {
  const PhaseSpace& s = f.space;
  const std::int64_t n = s.point_count();
  Operator gram(n, n);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t k = 0; k < n; ++k) {
      const std::int64_t nk = s.neg(k);
      gram(j, k) = s.m(nk, k) * std::conj(s.m(j, nk)) *
                   f.values(s.sub(j, k));
    }
  }
  TwistedPDReport report;
  report.hermiticity_dev =
      (gram - gram.adjoint().eval()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Operator> es(
      Operator((gram + gram.adjoint().eval()) / 2.0));
  report.min_eigenvalue = es.eigenvalues().minCoeff();
  report.is_pd =
      report.min_eigenvalue >= -tol && report.hermiticity_dev <= tol;
  return report;
}

BochnerResult bochner_reconstruct(const Representation& rep,
                                  const DualFunction& f, double tol) {
  BochnerResult result;
  result.reconstructed = fourier_weyl_inv(rep, f);
  const Operator& a = result.reconstructed;
  result.hermiticity_dev = (a - a.adjoint().eval()).cwiseAbs().maxCoeff();
  Eigen::SelfAdjointEigenSolver<Operator> es(
      Operator((a + a.adjoint().eval()) / 2.0));
  result.min_eigenvalue = es.eigenvalues().minCoeff();
  const DualFunction back = fourier_weyl(rep, a);
  result.roundtrip_sup_err =
      (back.values - f.values).cwiseAbs().maxCoeff();
  result.certificate_ok = result.min_eigenvalue >= -tol &&
                          result.hermiticity_dev <= tol &&
                          result.roundtrip_sup_err <= tol;
  return result;
}

std::vector<Operator> operator_annihilator(
    const Representation& rep, const std::vector<Operator>& family) {
  require_family(rep, family);
  const PhaseSpace& s = rep.space();
  const std::int64_t d = rep.dim();
  const std::int64_t n = s.point_count();
  // (A * B)(z) = tr(M_{A,z} B) with M_{A,z} = beta_-(alpha_{-z}(A)), so each
  // (family member, point) pair contributes one linear functional on vec(B).
  Operator constraints(static_cast<std::int64_t>(family.size()) * n, d * d);
  std::int64_t row = 0;
  for (const Operator& a : family) {
    for (std::int64_t z = 0; z < n; ++z) {
      const Operator m = rep.reflect(rep.shift(s.neg(z), a));
      constraints.row(row++) = vec(m.transpose()).transpose();
    }
  }
  const Operator basis = kernel_of(constraints);
  std::vector<Operator> out;
  out.reserve(basis.cols());
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    out.push_back(unvec(basis.col(c), d));
  }
  return out;
}

std::vector<CVec> function_annihilator(const Representation& rep,
                                       const std::vector<Operator>& family) {
  require_family(rep, family);
  const PhaseSpace& s = rep.space();
  const std::int64_t d = rep.dim();
  const std::int64_t n = s.point_count();
  const double w = s.weight();
  // f * A = w sum_z f(z) alpha_z(A): stack the columns vec(alpha_z(A_i)).
  Operator map(static_cast<std::int64_t>(family.size()) * d * d, n);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::int64_t z = 0; z < n; ++z) {
      map.block(static_cast<std::int64_t>(i) * d * d, z, d * d, 1) =
          w * vec(rep.shift(z, family[i]));
    }
  }
  const Operator basis = kernel_of(map);
  std::vector<CVec> out;
  out.reserve(basis.cols());
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    out.push_back(basis.col(c));
  }
  return out;
}

WienerReport wiener_report(const Representation& rep,
                           const std::vector<Operator>& family) {
  require_family(rep, family);
  const PhaseSpace& s = rep.space();
  const std::int64_t d = rep.dim();
  const std::int64_t n = s.point_count();
  if (n > 1024) {
    throw std::invalid_argument(
        "wiener_report: dense rank computations; phase space too large");
  }
  const std::int64_t fam = static_cast<std::int64_t>(family.size());
  WienerReport report;

  // Common zeros of the operator transforms, against a relative floor.
  std::vector<DualFunction> transforms;
  transforms.reserve(family.size());
  std::vector<double> floors;
  for (const Operator& a : family) {
    transforms.push_back(fourier_weyl(rep, a));
    floors.push_back(kZeroSetRelThreshold * schatten_norm(a, 1.0));
  }
  for (std::int64_t xi = 0; xi < n; ++xi) {
    bool all_zero = true;
    for (std::size_t i = 0; i < transforms.size() && all_zero; ++i) {
      all_zero = std::abs(transforms[i].values(xi)) <= floors[i];
    }
    if (all_zero) report.zero_set.push_back(xi);
  }

  // Span of the operator translates.
  Operator translates(fam * n, d * d);
  std::int64_t row = 0;
  for (const Operator& a : family) {
    for (std::int64_t z = 0; z < n; ++z) {
      translates.row(row++) = vec(rep.shift(z, a)).transpose();
    }
  }
  report.span_rank = rank_of(translates);

  // Span of the function-side images A_i * B over an operator basis.
  Operator images(fam * d * d, n);
  row = 0;
  for (const Operator& a : family) {
    for (std::int64_t p = 0; p < d; ++p) {
      for (std::int64_t q = 0; q < d; ++q) {
        Operator basis = Operator::Zero(d, d);
        basis(p, q) = 1.0;
        images.row(row++) = conv_AB(rep, a, basis).values.transpose();
      }
    }
  }
  const std::int64_t image_rank = rank_of(images);

  // Translates of the autocorrelation functions A_i * A_i.
  Operator auto_translates(fam * n, n);
  row = 0;
  for (const Operator& a : family) {
    const PhaseFunction g = conv_AB(rep, a, a);
    for (std::int64_t z = 0; z < n; ++z) {
      auto_translates.row(row++) = translate(g, z).values.transpose();
    }
  }
  report.function_span_rank = rank_of(auto_translates);

  report.operator_annihilator_dim =
      static_cast<std::int64_t>(operator_annihilator(rep, family).size());
  report.function_annihilator_dim =
      static_cast<std::int64_t>(function_annihilator(rep, family).size());

  report.equivalences["shift_span"] = report.span_rank == d * d;
  report.equivalences["smoothed_operator_dense"] = report.span_rank == d * d;
  report.equivalences["smoothed_function_dense"] = image_rank == n;
  report.equivalences["autocorrelation"] = report.function_span_rank == n;
  report.equivalences["zero_set"] = report.zero_set.empty();
  report.equivalences["operator_annihilator"] =
      report.operator_annihilator_dim == 0;
  report.equivalences["function_annihilator"] =
      report.function_annihilator_dim == 0;

  report.regular = report.equivalences["shift_span"];
  report.consistent = true;
  for (const auto& [name, verdict] : report.equivalences) {
    report.consistent = report.consistent && (verdict == report.regular);
  }
  return report;
}

}  // namespace qha
