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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dpa/models.hpp"
#include "dpa/states.hpp"

namespace dpa {

/// Uniform sampling times; internal integration steps stay adaptive.
struct TimeGrid {
  double start = 0.0;
  double end = 1.0;
  int count = 2;

  TimeGrid() = default;
  TimeGrid(double t0, double t1, int n);
  std::vector<double> times() const;
};

struct SolverConfig {
  double rtol = 1e-8;
  double atol = 1e-10;
  double max_step = std::numeric_limits<double>::infinity();
  double jump_tol = 1e-6;   // survival-probability localization tolerance
  int n_traj = 1000;
  std::uint64_t seed = 0;
  int threads = 0;          // 0 = hardware concurrency
  double memory_limit_gb = 8.0;
};

/// Named scalar expectations plus optional reduced-density-matrix captures,
/// evaluated on normalized states at the sample times.
struct ObservableSet {
  std::vector<std::string> names;
  std::vector<Operator> ops;
  std::vector<int> rdm_factors;  // factor slots whose reduced rho is recorded

  void add(const std::string& name, Operator op);
  int size() const { return static_cast<int>(ops.size()); }

  void eval_pure(const Vec& psi_normalized, const SpaceLayout& layout,
                 Eigen::Ref<Eigen::VectorXcd> out) const;
  void eval_mixed(const DenseMat& rho, const SpaceLayout& layout,
                  Eigen::Ref<Eigen::VectorXcd> out) const;
};

struct TimeSeries {
  std::vector<double> times;
  std::vector<std::string> names;
  Eigen::MatrixXcd values;   // n_obs x n_times, trajectory means for mcsolve
  Eigen::MatrixXd stderrs;   // n_obs x n_times, empty for deterministic solves
  int n_traj = 1;
  std::uint64_t seed = 0;
  std::map<int, std::vector<DenseMat>> rdm;  // factor slot -> per-sample matrices

  Eigen::Index index_of(const std::string& name) const;
  bool has(const std::string& name) const;
  bool has_stderr() const { return stderrs.size() > 0; }
};

/// Exact Lindblad integration of the density matrix
///   drho/dt = -i[H,rho] + sum_k ( c_k rho c_k^dag - 1/2 {c_k^dag c_k, rho} ).
/// The state is re-symmetrized at each sample; trace drift beyond 1e-6
/// raises NumericError carrying the last good time.
TimeSeries mesolve(const Model& model, const QuantumState& initial, const TimeGrid& grid,
                   const ObservableSet& observables, const SolverConfig& config = {});

/// Quantum-jump Monte Carlo unraveling. Each trajectory evolves under
/// H - (i/2) sum_k c_k^dag c_k, jumps when the survival probability crosses a
/// uniform draw (localized by bisection on the dense output), and is averaged
/// with per-observable standard errors. Trajectory RNG streams are seeded by
/// (master seed, trajectory index); reductions run in a fixed block order, so
/// results are bitwise reproducible for any thread count.
TimeSeries mcsolve(const Model& model, const QuantumState& initial, const TimeGrid& grid,
                   const ObservableSet& observables, const SolverConfig& config = {});

/// <a_p> extracted from a solved time series (pump factor 0 reduced matrix).
std::vector<cplx> reduced_pump_amplitude(const TimeSeries& ts, const SpaceLayout& layout);
/// <a_p> of a single state; layout must contain a pump (first boson) factor.
cplx reduced_pump_amplitude(const QuantumState& state);

}  // namespace dpa
