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

// Benchmark: optimized kernels (structural shifts, OpenMP loops) against
// the serial definitional reference implementations, with a max-deviation
// column confirming agreement on every run.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "qha/fourier.hpp"
#include "qha/ref.hpp"
#include "qha/rng.hpp"

namespace {

using namespace qha;

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

// Times one call after a warm-up run; these kernels are O(|G|^3)-ish at the
// sizes below, so single-shot timing is stable enough for a comparison.
template <typename Fn>
double time_call(Fn&& fn) {
  fn();
  const double start = now_seconds();
  fn();
  return now_seconds() - start;
}

struct Row {
  std::string kernel;
  std::string group;
  double serial_s = 0.0;
  double parallel_s = 0.0;
  double max_dev = 0.0;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-18s %-8s %12s %12s %9s %11s\n", "kernel", "group",
              "serial[ms]", "parallel[ms]", "speedup", "max|delta|");
  for (const Row& r : rows) {
    std::printf("%-18s %-8s %12.3f %12.3f %9.2f %11.2e\n", r.kernel.c_str(),
                r.group.c_str(), 1e3 * r.serial_s, 1e3 * r.parallel_s,
                r.serial_s / std::max(r.parallel_s, 1e-12), r.max_dev);
  }
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.derived().cwiseAbs().maxCoeff();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns are serial\n\n");
#endif

  std::vector<Row> rows;
  Rng rng(12345);

  for (const std::int64_t order : {8, 16, 32, 48}) {
    const std::string name = "Z" + std::to_string(order);
    const Representation rep = Representation::build(
        PhaseSpace(Multiplier::canonical(make_group({order}))));
    const std::int64_t d = rep.dim();
    const std::int64_t n = rep.point_count();

    const Operator a = rng.matrix(d);
    const Operator b = rng.matrix(d);
    const PhaseFunction f = make_function(rep.space(), rng.vector(n));
    const std::int64_t z = n / 3;

    {
      Row r{"shift", name};
      Operator fast, slow;
      r.parallel_s = time_call([&] { fast = rep.shift(z, a); });
      r.serial_s = time_call([&] { slow = ref::shift(rep, z, a); });
      r.max_dev = max_abs(fast - slow);
      rows.push_back(r);
    }
    {
      Row r{"conv_fA", name};
      Operator fast, slow;
      r.parallel_s = time_call([&] { fast = conv_fA(rep, f, a); });
      r.serial_s = time_call([&] { slow = ref::conv_fA(rep, f, a); });
      r.max_dev = max_abs(fast - slow);
      rows.push_back(r);
    }
    {
      Row r{"conv_AB", name};
      PhaseFunction fast = conv_AB(rep, a, b);
      PhaseFunction slow = ref::conv_AB(rep, a, b);
      r.parallel_s = time_call([&] { fast = conv_AB(rep, a, b); });
      r.serial_s = time_call([&] { slow = ref::conv_AB(rep, a, b); });
      r.max_dev = max_abs(fast.values - slow.values);
      rows.push_back(r);
    }
    {
      Row r{"fourier_weyl", name};
      DualFunction fast = fourier_weyl(rep, a);
      DualFunction slow = ref::fourier_weyl(rep, a);
      r.parallel_s = time_call([&] { fast = fourier_weyl(rep, a); });
      r.serial_s = time_call([&] { slow = ref::fourier_weyl(rep, a); });
      r.max_dev = max_abs(fast.values - slow.values);
      rows.push_back(r);
    }
    {
      Row r{"fourier_weyl_inv", name};
      const DualFunction tf = fourier_weyl(rep, a);
      Operator fast, slow;
      r.parallel_s = time_call([&] { fast = fourier_weyl_inv(rep, tf); });
      r.serial_s = time_call([&] { slow = ref::fourier_weyl_inv(rep, tf); });
      r.max_dev = max_abs(fast - slow);
      rows.push_back(r);
    }
  }

  print_rows(rows);
  return 0;
}
