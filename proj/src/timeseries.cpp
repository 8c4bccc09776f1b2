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

#include <algorithm>

#include "dpa/dynamics.hpp"

namespace dpa {

TimeGrid::TimeGrid(double t0, double t1, int n) : start(t0), end(t1), count(n) {
  if (!(end > start) || start < 0.0) throw InvalidArgumentError("TimeGrid: need end > start >= 0");
  if (count < 2) throw InvalidArgumentError("TimeGrid: need count >= 2");
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> t(static_cast<size_t>(count));
  const double dt = (end - start) / double(count - 1);
  for (int i = 0; i < count; ++i) t[static_cast<size_t>(i)] = start + dt * i;
  t.back() = end;
  return t;
}

void ObservableSet::add(const std::string& name, Operator op) {
  names.push_back(name);
  ops.push_back(std::move(op));
}

void ObservableSet::eval_pure(const Vec& psi, const SpaceLayout& layout,
                              Eigen::Ref<Eigen::VectorXcd> out) const {
  for (size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].layout != layout)
      throw InvalidArgumentError("ObservableSet: operator layout mismatch");
    out(static_cast<Eigen::Index>(i)) = psi.dot(ops[i].mat * psi);
  }
}

void ObservableSet::eval_mixed(const DenseMat& rho, const SpaceLayout& layout,
                               Eigen::Ref<Eigen::VectorXcd> out) const {
  for (size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].layout != layout)
      throw InvalidArgumentError("ObservableSet: operator layout mismatch");
    cplx acc = 0.0;
    const SparseMat& a = ops[i].mat;
    for (int k = 0; k < a.outerSize(); ++k)
      for (SparseMat::InnerIterator it(a, k); it; ++it)
        acc += rho(it.col(), it.row()) * it.value();
    out(static_cast<Eigen::Index>(i)) = acc;
  }
}

Eigen::Index TimeSeries::index_of(const std::string& name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw InvalidArgumentError("TimeSeries: no observable named " + name);
  return static_cast<Eigen::Index>(it - names.begin());
}

bool TimeSeries::has(const std::string& name) const {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<cplx> reduced_pump_amplitude(const TimeSeries& ts, const SpaceLayout& layout) {
  if (layout.find(Factor::Kind::Boson) != 0)
    throw InvalidArgumentError("reduced_pump_amplitude: layout has no pump factor");
  const auto it = ts.rdm.find(0);
  if (it == ts.rdm.end())
    throw InvalidArgumentError("reduced_pump_amplitude: series carries no pump reduced matrix");
  const int d = layout.factor(0).dim();
  std::vector<cplx> out;
  out.reserve(it->second.size());
  for (const DenseMat& rho : it->second) {
    cplx acc = 0.0;
    for (int n = 1; n < d; ++n) acc += std::sqrt(double(n)) * rho(n, n - 1);
    out.push_back(acc);
  }
  return out;
}

cplx reduced_pump_amplitude(const QuantumState& state) {
  if (state.layout.find(Factor::Kind::Boson) != 0)
    throw InvalidArgumentError("reduced_pump_amplitude: layout has no pump factor");
  const DenseMat rho = partial_trace(state, 0);
  const int d = state.layout.factor(0).dim();
  cplx acc = 0.0;
  for (int n = 1; n < d; ++n) acc += std::sqrt(double(n)) * rho(n, n - 1);
  return acc;
}

}  // namespace dpa
