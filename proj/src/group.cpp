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

#include "qha/group.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qha {

namespace {

std::int64_t reduce_mod(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> orders)
    : orders_(std::move(orders)) {
  if (orders_.empty()) {
    throw std::invalid_argument("group: need at least one cyclic factor");
  }
  size_ = 1;
  for (std::int64_t n : orders_) {
    if (n < 2) {
      throw std::invalid_argument("group: factor orders must be >= 2, got " +
                                  std::to_string(n));
    }
    if (size_ > 1024 / n) {
      // Arithmetic and character tables are dense (size^2 entries).
      throw std::invalid_argument("group: size above 1024 not supported");
    }
    size_ *= n;
  }

  two_regular_ = true;
  for (std::int64_t n : orders_) two_regular_ &= (n % 2 == 1);

  const std::size_t d = static_cast<std::size_t>(size_);
  const std::size_t k = orders_.size();

  // Decode every index once, then fill the dense arithmetic tables.
  std::vector<std::int64_t> coords(d * k);
  for (std::size_t i = 0; i < d; ++i) {
    std::int64_t rest = static_cast<std::int64_t>(i);
    for (std::size_t j = k; j-- > 0;) {
      coords[i * k + j] = rest % orders_[j];
      rest /= orders_[j];
    }
  }

  neg_table_.resize(d);
  add_table_.resize(d * d);
  char_table_.resize(d * d);
  if (two_regular_) halve_table_.resize(d);

  std::vector<std::int64_t> tmp(k);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t j = 0; j < k; ++j) {
      tmp[j] = reduce_mod(-coords[a * k + j], orders_[j]);
    }
    neg_table_[a] = index_of(tmp);
    if (two_regular_) {
      for (std::size_t j = 0; j < k; ++j) {
        // (n+1)/2 is the multiplicative inverse of 2 modulo odd n.
        tmp[j] = reduce_mod(coords[a * k + j] * ((orders_[j] + 1) / 2),
                            orders_[j]);
      }
      halve_table_[a] = index_of(tmp);
    }
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t j = 0; j < k; ++j) {
        tmp[j] = reduce_mod(coords[a * k + j] + coords[b * k + j], orders_[j]);
      }
      add_table_[a * d + b] = index_of(tmp);
      double angle = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        angle += static_cast<double>(
                     reduce_mod(coords[a * k + j] * coords[b * k + j],
                                orders_[j])) /
                 static_cast<double>(orders_[j]);
      }
      char_table_[a * d + b] = std::polar(1.0, kTwoPi * angle);
    }
  }
}

std::int64_t FiniteAbelianGroup::index_of(
    std::span<const std::int64_t> coords) const {
  if (coords.size() != orders_.size()) {
    throw std::invalid_argument("group: coordinate arity mismatch");
  }
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    idx = idx * orders_[j] + reduce_mod(coords[j], orders_[j]);
  }
  return idx;
}

GroupElement FiniteAbelianGroup::element(std::int64_t index) const {
  check_index(index);
  GroupElement coords(orders_.size());
  std::int64_t rest = index;
  for (std::size_t j = orders_.size(); j-- > 0;) {
    coords[j] = rest % orders_[j];
    rest /= orders_[j];
  }
  return coords;
}

std::int64_t FiniteAbelianGroup::halve(std::int64_t x) const {
  if (!two_regular_) {
    throw std::domain_error("group: halving needs every factor order odd");
  }
  check_index(x);
  return halve_table_[static_cast<std::size_t>(x)];
}

void FiniteAbelianGroup::check_index(std::int64_t a) const {
  if (a < 0 || a >= size_) {
    throw std::out_of_range("group: element index " + std::to_string(a) +
                            " outside [0, " + std::to_string(size_) + ")");
  }
}

FiniteAbelianGroup make_group(std::vector<std::int64_t> orders) {
  return FiniteAbelianGroup(std::move(orders));
}

GroupElement add(const FiniteAbelianGroup& g, const GroupElement& a,
                 const GroupElement& b) {
  return g.element(g.add(g.index_of(a), g.index_of(b)));
}

GroupElement neg(const FiniteAbelianGroup& g, const GroupElement& a) {
  return g.element(g.neg(g.index_of(a)));
}

Cplx character(const FiniteAbelianGroup& g, const GroupElement& x,
               const GroupElement& xi) {
  return g.character(g.index_of(x), g.index_of(xi));
}

GroupElement halve(const FiniteAbelianGroup& g, const GroupElement& x) {
  return g.element(g.halve(g.index_of(x)));
}

}  // namespace qha
