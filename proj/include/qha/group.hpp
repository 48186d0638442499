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
#include <span>
#include <vector>

#include "qha/common.hpp"

namespace qha {

/// Element of a finite abelian group given by one coordinate per cyclic
/// factor, each reduced modulo the factor order.
using GroupElement = std::vector<std::int64_t>;

/// Finite abelian group Z_{n1} x ... x Z_{nk} in a fixed factorization.
///
/// Elements carry a canonical enumeration: mixed-radix lexicographic order
/// with the *last* coordinate fastest, so index(x) = ((x1*n2 + x2)*n3 + ...).
/// All hot-path arithmetic works on canonical indices; coordinate-tuple
/// overloads exist for I/O and tests.  The dual group is identified with the
/// group itself through the character pairing, so dual elements use the same
/// enumeration.
class FiniteAbelianGroup {
 public:
  /// Throws std::invalid_argument if `orders` is empty or any order is < 2.
  explicit FiniteAbelianGroup(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::int64_t size() const { return size_; }
  std::size_t factor_count() const { return orders_.size(); }

  /// Canonical index of a coordinate tuple.  Coordinates may be any integers;
  /// they are reduced modulo the factor orders.  Throws on arity mismatch.
  std::int64_t index_of(std::span<const std::int64_t> coords) const;
  GroupElement element(std::int64_t index) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    check_index(a);
    check_index(b);
    return add_table_[static_cast<std::size_t>(a * size_ + b)];
  }
  std::int64_t neg(std::int64_t a) const {
    check_index(a);
    return neg_table_[static_cast<std::size_t>(a)];
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    return add(a, neg(b));
  }

  /// Character pairing <x, xi> = exp(2*pi*i * sum_j x_j xi_j / n_j).
  /// Unit modulus; a bicharacter in both arguments.
  Cplx character(std::int64_t x, std::int64_t xi) const {
    check_index(x);
    check_index(xi);
    return char_table_[static_cast<std::size_t>(x * size_ + xi)];
  }

  /// True when every factor order is odd, i.e. doubling is invertible.
  bool two_regular() const { return two_regular_; }

  /// The unique y with y + y = x.  Throws std::domain_error unless the group
  /// is two-regular.
  std::int64_t halve(std::int64_t x) const;

 private:
  void check_index(std::int64_t a) const;

  std::vector<std::int64_t> orders_;
  std::int64_t size_ = 0;
  bool two_regular_ = false;
  std::vector<std::int64_t> add_table_;   // size^2
  std::vector<std::int64_t> neg_table_;   // size
  std::vector<std::int64_t> halve_table_; // size, two-regular groups only
  std::vector<Cplx> char_table_;          // size^2
};

FiniteAbelianGroup make_group(std::vector<std::int64_t> orders);

// Coordinate-tuple convenience layer.
GroupElement add(const FiniteAbelianGroup& g, const GroupElement& a,
                 const GroupElement& b);
GroupElement neg(const FiniteAbelianGroup& g, const GroupElement& a);
Cplx character(const FiniteAbelianGroup& g, const GroupElement& x,
               const GroupElement& xi);
GroupElement halve(const FiniteAbelianGroup& g, const GroupElement& x);

}  // namespace qha
