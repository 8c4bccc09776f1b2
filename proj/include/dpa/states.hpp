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

#include "dpa/operators.hpp"

namespace dpa {

/// A pure state vector or a density matrix over a layout.
struct QuantumState {
  enum class Kind { Pure, Mixed };

  SpaceLayout layout;
  Kind kind = Kind::Pure;
  Vec vec;        // Pure
  DenseMat mat;   // Mixed

  static QuantumState pure(SpaceLayout layout, Vec psi);
  static QuantumState mixed(SpaceLayout layout, DenseMat rho);

  bool is_pure() const { return kind == Kind::Pure; }
  long long dim() const { return layout.total_dim(); }

  double norm() const;    // ||psi|| (pure) or trace (mixed), real part
  void normalize();       // divide by norm / trace

  /// Density-matrix view (outer product for pure states).
  DenseMat density() const;
};

/// Basis (Fock or Dicke-ladder) state |index> on a single factor.
QuantumState basis_state(const Factor& factor, int index);

/// Truncated coherent state |alpha> on Fock levels 0..cutoff, renormalized.
/// Warns when the truncated tail weight exceeds 1e-8.
QuantumState coherent_state(cplx alpha, int cutoff);

/// Tensor product of pure states, factor order preserved.
QuantumState tensor(const std::vector<QuantumState>& parts);

/// <psi|A|psi> or Tr(rho A). Layouts must match. For Hermitian-intended
/// operators the caller typically takes the real part; the imaginary residue
/// is returned as-is so it can be checked.
cplx expectation(const Operator& op, const QuantumState& state);

/// Partial trace onto the single factor `keep`; returns its reduced density
/// matrix.
DenseMat partial_trace(const QuantumState& state, int keep);

}  // namespace dpa
