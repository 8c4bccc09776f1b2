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

#include "dpa/states.hpp"

#include <cmath>
#include <sstream>

#include "dpa/warnings.hpp"

namespace dpa {

QuantumState QuantumState::pure(SpaceLayout layout, Vec psi) {
  if (psi.size() != layout.total_dim())
    throw InvalidArgumentError("pure state dimension does not match layout");
  QuantumState s;
  s.layout = std::move(layout);
  s.kind = Kind::Pure;
  s.vec = std::move(psi);
  return s;
}

QuantumState QuantumState::mixed(SpaceLayout layout, DenseMat rho) {
  if (rho.rows() != rho.cols() || rho.rows() != layout.total_dim())
    throw InvalidArgumentError("density matrix dimension does not match layout");
  QuantumState s;
  s.layout = std::move(layout);
  s.kind = Kind::Mixed;
  s.mat = std::move(rho);
  return s;
}

double QuantumState::norm() const {
  return is_pure() ? vec.norm() : mat.trace().real();
}

void QuantumState::normalize() {
  const double n = norm();
  if (n <= 0.0) throw NumericError("cannot normalize a zero state");
  if (is_pure())
    vec /= n;
  else
    mat /= n;
}

DenseMat QuantumState::density() const {
  if (is_pure()) return vec * vec.adjoint();
  return mat;
}

QuantumState basis_state(const Factor& factor, int index) {
  if (index < 0 || index >= factor.dim())
    throw InvalidArgumentError("basis_state: index out of range");
  Vec v = Vec::Zero(factor.dim());
  v(index) = 1.0;
  return QuantumState::pure(SpaceLayout({factor}), std::move(v));
}

QuantumState coherent_state(cplx alpha, int cutoff) {
  if (cutoff < 1) throw InvalidArgumentError("coherent_state: cutoff must be >= 1");
  Vec c(cutoff + 1);
  c(0) = 1.0;
  for (int n = 1; n <= cutoff; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
  c *= std::exp(-0.5 * std::norm(alpha));
  const double kept = c.squaredNorm();
  const double tail = 1.0 - kept;
  if (tail > 1e-8) {
    std::ostringstream os;
    os << "coherent_state: truncated tail weight " << tail << " exceeds 1e-8 for |alpha|="
       << std::abs(alpha) << ", cutoff=" << cutoff;
    warn(os.str());
  }
  c /= std::sqrt(kept);
  return QuantumState::pure(SpaceLayout({Factor::boson(cutoff)}), std::move(c));
}

QuantumState tensor(const std::vector<QuantumState>& parts) {
  if (parts.empty()) throw InvalidArgumentError("tensor: no parts");
  std::vector<Factor> factors;
  Vec v = Vec::Ones(1);
  for (const auto& p : parts) {
    if (!p.is_pure()) throw InvalidArgumentError("tensor: parts must be pure states");
    for (const auto& f : p.layout.factors()) factors.push_back(f);
    Vec next(v.size() * p.vec.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
      next.segment(i * p.vec.size(), p.vec.size()) = v(i) * p.vec;
    v = std::move(next);
  }
  return QuantumState::pure(SpaceLayout(std::move(factors)), std::move(v));
}

cplx expectation(const Operator& op, const QuantumState& state) {
  if (op.layout != state.layout)
    throw InvalidArgumentError("expectation: operator/state layout mismatch");
  if (state.is_pure()) return state.vec.dot(op.mat * state.vec);
  // Tr(rho A) accumulated over the sparsity of A.
  cplx acc = 0.0;
  for (int k = 0; k < op.mat.outerSize(); ++k)
    for (SparseMat::InnerIterator it(op.mat, k); it; ++it)
      acc += state.mat(it.col(), it.row()) * it.value();
  return acc;
}

DenseMat partial_trace(const QuantumState& state, int keep) {
  const auto& lay = state.layout;
  const long long pre = lay.dim_before(keep);
  const int d = lay.factor(keep).dim();
  const long long post = lay.dim_after(keep);
  DenseMat out = DenseMat::Zero(d, d);
  if (state.is_pure()) {
    const Vec& v = state.vec;
    for (long long a = 0; a < pre; ++a)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          cplx acc = 0.0;
          const long long oi = (a * d + i) * post;
          const long long oj = (a * d + j) * post;
          for (long long b = 0; b < post; ++b) acc += v(oi + b) * std::conj(v(oj + b));
          out(i, j) += acc;
        }
    return out;
  }
  const DenseMat& rho = state.mat;
  for (long long a = 0; a < pre; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        cplx acc = 0.0;
        const long long oi = (a * d + i) * post;
        const long long oj = (a * d + j) * post;
        for (long long b = 0; b < post; ++b) acc += rho(oi + b, oj + b);
        out(i, j) += acc;
      }
  return out;
}

}  // namespace dpa
