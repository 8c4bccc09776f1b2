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

#include "dpa/layout.hpp"
#include "dpa/types.hpp"

namespace dpa {

/// A sparse operator tagged with the tensor-space layout it acts on.
/// Operators are immutable after construction and safe to share across
/// threads.
struct Operator {
  SpaceLayout layout;
  SparseMat mat;

  Operator() = default;
  Operator(SpaceLayout lay, SparseMat m);

  long long dim() const { return mat.rows(); }

  Operator adjoint() const;
  bool is_hermitian(double rel_tol = 1e-12) const;
};

// --- single-factor building blocks (layout = that one factor) ---

/// Bosonic annihilation operator on Fock states 0..cutoff: a|n> = sqrt(n)|n-1>.
Operator destroy_op(int cutoff);
/// Number operator a^dag a on Fock states 0..cutoff.
Operator number_op(int cutoff);

struct SpinOps {
  Operator sx, sy, sz, sp, sm;
};

/// Collective spin operators on the Dicke ladder l = N/2, basis ordered
/// |l,-l>, |l,-l+1>, ..., |l,+l>.
SpinOps spin_ops(int n_atoms);

/// Identity on a whole layout.
Operator identity_op(const SpaceLayout& layout);

/// Lift a single-factor operator into `layout` at position `slot`
/// (identity on every other factor).
Operator embed(const Operator& op, const SpaceLayout& layout, int slot);

// --- algebra (exact sparse arithmetic; layouts must match) ---

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(cplx scalar, const Operator& a);
Operator operator*(const Operator& a, const Operator& b);  // composition

/// Kronecker product of sparse matrices, row-major index convention
/// (left factor varies slowest).
SparseMat kron(const SparseMat& a, const SparseMat& b);

/// max_ij |a_ij - b_ij| over the union sparsity pattern.
double max_abs_diff(const SparseMat& a, const SparseMat& b);

/// Frobenius-ish sup norm: max |entry|.
double max_abs(const SparseMat& a);

}  // namespace dpa
