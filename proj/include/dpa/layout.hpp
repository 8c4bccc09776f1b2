// Copyright 2026 The dpasim Authors
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

#include <string>
#include <vector>

#include "dpa/errors.hpp"

namespace dpa {

/// One tensor factor of the Hilbert space: either a truncated bosonic mode
/// (Fock states 0..cutoff) or the symmetric Dicke ladder of N spin-1/2
/// particles (states |l,m>, l = N/2, dimension N+1).
struct Factor {
  enum class Kind { Boson, Spin };
  Kind kind;
  int param;  // Boson: Fock cutoff n_max; Spin: atom count N

  static Factor boson(int cutoff) {
    if (cutoff < 1) throw InvalidArgumentError("Boson cutoff must be >= 1");
    return Factor{Kind::Boson, cutoff};
  }
  static Factor spin(int n_atoms) {
    if (n_atoms < 1) throw InvalidArgumentError("Spin atom count must be >= 1");
    return Factor{Kind::Spin, n_atoms};
  }

  int dim() const { return param + 1; }
  bool operator==(const Factor& o) const { return kind == o.kind && param == o.param; }
};

/// Ordered tensor-product layout. Factor 0 varies slowest in the flattened
/// index (standard Kronecker convention), so pump (x) signal (x) spin means
/// index = ((n_p * d_s) + n_s) * d_e + m.
class SpaceLayout {
 public:
  SpaceLayout() = default;
  explicit SpaceLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {}

  const std::vector<Factor>& factors() const { return factors_; }
  int num_factors() const { return static_cast<int>(factors_.size()); }
  const Factor& factor(int slot) const {
    if (slot < 0 || slot >= num_factors())
      throw InvalidArgumentError("factor slot out of range");
    return factors_[static_cast<size_t>(slot)];
  }

  long long total_dim() const {
    long long d = 1;
    for (const auto& f : factors_) d *= f.dim();
    return d;
  }

  /// Product of factor dimensions before `slot` (slower indices).
  long long dim_before(int slot) const;
  /// Product of factor dimensions after `slot` (faster indices).
  long long dim_after(int slot) const;

  /// First factor of the given kind, or -1.
  int find(Factor::Kind kind) const;

  bool operator==(const SpaceLayout& o) const { return factors_ == o.factors_; }
  bool operator!=(const SpaceLayout& o) const { return !(*this == o); }

  std::string describe() const;

 private:
  std::vector<Factor> factors_;
};

}  // namespace dpa
