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

#include <sstream>

#include "dpa/dynamics.hpp"
#include "dpa/ode.hpp"

namespace dpa {

namespace {

struct LindbladRhs {
  SparseMat h_nh;       // H - (i/2) sum c^dag c
  SparseMat h_nh_adj;
  std::vector<SparseMat> cs, cs_adj;
  Eigen::Index d;
  mutable DenseMat tmp;

  void operator()(double, const Vec& y, Vec& dydt) const {
    Eigen::Map<const DenseMat> rho(y.data(), d, d);
    Eigen::Map<DenseMat> out(dydt.data(), d, d);
    out.noalias() = cplx(0, -1) * (h_nh * rho);
    out.noalias() += cplx(0, 1) * (rho * h_nh_adj);
    for (size_t k = 0; k < cs.size(); ++k) {
      tmp.noalias() = cs[k] * rho;
      out.noalias() += tmp * cs_adj[k];
    }
  }
};

}  // namespace

TimeSeries mesolve(const Model& model, const QuantumState& initial, const TimeGrid& grid,
                   const ObservableSet& observables, const SolverConfig& config) {
  const Eigen::Index d = model.layout.total_dim();
  if (initial.layout != model.layout)
    throw InvalidArgumentError("mesolve: initial state layout mismatch");
  {
    const double bytes = 16.0 * double(d) * double(d) * 16.0;  // ~16 live d x d buffers
    if (bytes > config.memory_limit_gb * 1e9) {
      std::ostringstream os;
      os << "mesolve: estimated " << bytes / 1e9 << " GB exceeds the limit for dimension " << d;
      throw MemoryRefusalError(os.str(), d);
    }
  }

  DenseMat rho0 = initial.density();
  {
    const double tr = rho0.trace().real();
    if (std::abs(tr - 1.0) > 1e-8) throw InvalidArgumentError("mesolve: initial trace != 1");
  }

  LindbladRhs rhs;
  rhs.d = d;
  rhs.tmp.resize(d, d);
  SparseMat cdagc(d, d);
  for (const Operator& c : model.collapse_ops) {
    if (c.layout != model.layout) throw InvalidArgumentError("mesolve: collapse layout mismatch");
    rhs.cs.push_back(c.mat);
    rhs.cs_adj.push_back(SparseMat(c.mat.adjoint()));
    cdagc += SparseMat(c.mat.adjoint() * c.mat);
  }
  rhs.h_nh = model.hamiltonian.mat - cplx(0, 0.5) * cdagc;
  rhs.h_nh_adj = rhs.h_nh.adjoint();

  const std::vector<double> times = grid.times();
  const int nt = static_cast<int>(times.size());

  TimeSeries ts;
  ts.times = times;
  ts.names = observables.names;
  ts.values.resize(observables.size(), nt);
  ts.n_traj = 1;
  ts.seed = config.seed;
  for (int f : observables.rdm_factors) ts.rdm[f] = {};

  OdeOptions opt;
  opt.rtol = config.rtol;
  opt.atol = config.atol;
  opt.max_step = config.max_step;

  Vec y(d * d);
  Eigen::Map<DenseMat>(y.data(), d, d) = rho0;
  Dopri5 ode([&rhs](double t, const Vec& yy, Vec& dy) { rhs(t, yy, dy); }, grid.start, y, opt);

  DenseMat rho_s(d, d);
  for (int i = 0; i < nt; ++i) {
    ode.set_end_cap(times[static_cast<size_t>(i)]);
    while (ode.t() < times[static_cast<size_t>(i)]) ode.step();

    rho_s = Eigen::Map<const DenseMat>(ode.y().data(), d, d);
    rho_s = 0.5 * (rho_s + rho_s.adjoint().eval());
    const double tr = rho_s.trace().real();
    if (std::abs(tr - 1.0) > 1e-6) {
      std::ostringstream os;
      os << "mesolve: trace drift " << std::abs(tr - 1.0) << " at t=" << ode.t();
      throw NumericError(os.str(), i > 0 ? times[static_cast<size_t>(i - 1)] : grid.start);
    }
    QuantumState snap = QuantumState::mixed(model.layout, rho_s);
    observables.eval_mixed(rho_s, model.layout, ts.values.col(i));
    for (int f : observables.rdm_factors) ts.rdm[f].push_back(partial_trace(snap, f));

    // re-inject the symmetrized state
    Eigen::Map<DenseMat>(y.data(), d, d) = rho_s;
    ode.reset_state(times[static_cast<size_t>(i)], y);
  }
  return ts;
}

}  // namespace dpa
