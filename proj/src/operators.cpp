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

#include "dpa/operators.hpp"

#include <cmath>
#include <vector>

namespace dpa {

Operator::Operator(SpaceLayout lay, SparseMat m) : layout(std::move(lay)), mat(std::move(m)) {
  if (mat.rows() != mat.cols()) throw InvalidArgumentError("operator matrix must be square");
  if (mat.rows() != layout.total_dim())
    throw InvalidArgumentError("operator dimension does not match layout");
  mat.makeCompressed();
}

Operator Operator::adjoint() const {
  return Operator(layout, SparseMat(mat.adjoint()));
}

bool Operator::is_hermitian(double rel_tol) const {
  double scale = max_abs(mat);
  if (scale == 0.0) return true;
  return max_abs_diff(mat, SparseMat(mat.adjoint())) <= rel_tol * scale;
}

Operator destroy_op(int cutoff) {
  if (cutoff < 1) throw InvalidArgumentError("destroy_op: cutoff must be >= 1");
  SparseMat a(cutoff + 1, cutoff + 1);
  std::vector<Eigen::Triplet<cplx>> t;
  t.reserve(static_cast<size_t>(cutoff));
  for (int n = 1; n <= cutoff; ++n) t.emplace_back(n - 1, n, cplx(std::sqrt(double(n)), 0.0));
  a.setFromTriplets(t.begin(), t.end());
  return Operator(SpaceLayout({Factor::boson(cutoff)}), std::move(a));
}

Operator number_op(int cutoff) {
  if (cutoff < 1) throw InvalidArgumentError("number_op: cutoff must be >= 1");
  SparseMat n(cutoff + 1, cutoff + 1);
  std::vector<Eigen::Triplet<cplx>> t;
  for (int k = 1; k <= cutoff; ++k) t.emplace_back(k, k, cplx(double(k), 0.0));
  n.setFromTriplets(t.begin(), t.end());
  return Operator(SpaceLayout({Factor::boson(cutoff)}), std::move(n));
}

SpinOps spin_ops(int n_atoms) {
  if (n_atoms < 1) throw InvalidArgumentError("spin_ops: N must be >= 1");
  const int dim = n_atoms + 1;
  const double l = 0.5 * n_atoms;
  SpaceLayout lay({Factor::spin(n_atoms)});

  std::vector<Eigen::Triplet<cplx>> tz, tp;
  for (int k = 0; k < dim; ++k) {
    const double m = -l + k;
    if (m != 0.0) tz.emplace_back(k, k, cplx(m, 0.0));
    if (k + 1 < dim) {
      // S+|l,m> = sqrt(l(l+1) - m(m+1)) |l,m+1>
      tp.emplace_back(k + 1, k, cplx(std::sqrt(l * (l + 1) - m * (m + 1)), 0.0));
    }
  }
  SparseMat sz(dim, dim), sp(dim, dim);
  sz.setFromTriplets(tz.begin(), tz.end());
  sp.setFromTriplets(tp.begin(), tp.end());
  SparseMat sm = sp.adjoint();
  SparseMat sx = 0.5 * (sp + sm);
  SparseMat sy = cplx(0.0, -0.5) * (sp - sm);
  return SpinOps{Operator(lay, std::move(sx)), Operator(lay, std::move(sy)),
                 Operator(lay, std::move(sz)), Operator(lay, std::move(sp)),
                 Operator(lay, std::move(sm))};
}

Operator identity_op(const SpaceLayout& layout) {
  SparseMat id(layout.total_dim(), layout.total_dim());
  id.setIdentity();
  return Operator(layout, std::move(id));
}

SparseMat kron(const SparseMat& a, const SparseMat& b) {
  SparseMat out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Eigen::Triplet<cplx>> t;
  t.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SparseMat::InnerIterator ia(a, ka); ia; ++ia)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SparseMat::InnerIterator ib(b, kb); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                         ia.value() * ib.value());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

Operator embed(const Operator& op, const SpaceLayout& layout, int slot) {
  const Factor& f = layout.factor(slot);
  if (op.dim() != f.dim())
    throw InvalidArgumentError("embed: operator dimension does not match the slot factor");
  SparseMat pre(layout.dim_before(slot), layout.dim_before(slot));
  pre.setIdentity();
  SparseMat post(layout.dim_after(slot), layout.dim_after(slot));
  post.setIdentity();
  return Operator(layout, kron(kron(pre, op.mat), post));
}

namespace {

void check_same_layout(const Operator& a, const Operator& b, const char* what) {
  if (a.layout != b.layout)
    throw InvalidArgumentError(std::string(what) + ": layout mismatch (" + a.layout.describe() +
                               " vs " + b.layout.describe() + ")");
}

}  // namespace

Operator operator+(const Operator& a, const Operator& b) {
  check_same_layout(a, b, "operator+");
  return Operator(a.layout, SparseMat(a.mat + b.mat));
}

Operator operator-(const Operator& a, const Operator& b) {
  check_same_layout(a, b, "operator-");
  return Operator(a.layout, SparseMat(a.mat - b.mat));
}

Operator operator*(cplx scalar, const Operator& a) {
  return Operator(a.layout, SparseMat(scalar * a.mat));
}

Operator operator*(const Operator& a, const Operator& b) {
  check_same_layout(a, b, "operator*");
  return Operator(a.layout, SparseMat(a.mat * b.mat));
}

double max_abs(const SparseMat& a) {
  double m = 0.0;
  for (int k = 0; k < a.outerSize(); ++k)
    for (SparseMat::InnerIterator it(a, k); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

double max_abs_diff(const SparseMat& a, const SparseMat& b) {
  return max_abs(SparseMat(a - b));
}

}  // namespace dpa
