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

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "dpa/dynamics.hpp"
#include "dpa/ode.hpp"

namespace dpa {

namespace {

// Trajectories are accumulated in fixed-size index blocks; block partials are
// combined pairwise in block order. This keeps every floating-point reduction
// independent of the thread count and of scheduling. Blocks are larger when
// reduced density matrices are captured, bounding the live accumulators.
constexpr int kBlock = 25;
constexpr int kBlockRdm = 125;

struct BlockAccum {
  Eigen::MatrixXcd sum;     // n_obs x n_t
  Eigen::MatrixXd sum_sq;   // n_obs x n_t, sum of |x|^2
  std::vector<DenseMat> rdm_sum;  // flattened (factor, time) majors
  int count = 0;

  void init(int n_obs, int nt, const std::vector<int>& rdm_dims) {
    sum = Eigen::MatrixXcd::Zero(n_obs, nt);
    sum_sq = Eigen::MatrixXd::Zero(n_obs, nt);
    for (int dfac : rdm_dims)
      for (int i = 0; i < nt; ++i) rdm_sum.push_back(DenseMat::Zero(dfac, dfac));
    count = 0;
  }
  void combine(const BlockAccum& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    for (size_t i = 0; i < rdm_sum.size(); ++i) rdm_sum[i] += o.rdm_sum[i];
    count += o.count;
  }
};

std::mt19937_64 trajectory_rng(std::uint64_t master_seed, int traj_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(traj_index), 0x9E3779B9u};
  return std::mt19937_64(seq);
}

struct McContext {
  const Model* model;
  SparseMat h_nh;
  const Vec* psi0;
  std::vector<double> times;
  std::vector<int> rdm_factors;
  std::vector<int> rdm_dims;
  const ObservableSet* obs;
  SolverConfig cfg;
};

void run_trajectory(const McContext& ctx, int traj, BlockAccum& acc) {
  const Eigen::Index d = ctx.psi0->size();
  const int nt = static_cast<int>(ctx.times.size());
  const int n_obs = ctx.obs->size();
  const bool jumps = !ctx.model->collapse_ops.empty();

  auto rng = trajectory_rng(ctx.cfg.seed, traj);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  OdeOptions opt;
  opt.rtol = ctx.cfg.rtol;
  opt.atol = ctx.cfg.atol;
  opt.max_step = ctx.cfg.max_step;

  const SparseMat& h = ctx.h_nh;
  Dopri5 ode([&h](double, const Vec& y, Vec& dy) { dy.noalias() = cplx(0, -1) * (h * y); },
             ctx.times.front(), *ctx.psi0, opt);

  double survival = jumps ? uniform(rng) : -1.0;
  Vec psi_norm(d), dense(d), cpsi(d), best(d);
  Eigen::VectorXcd vals(n_obs);

  auto record = [&](const Vec& psi, int sample) {
    psi_norm = psi / psi.norm();
    ctx.obs->eval_pure(psi_norm, ctx.model->layout, vals);
    acc.sum.col(sample) += vals;
    acc.sum_sq.col(sample) += vals.cwiseAbs2();
    if (!ctx.rdm_factors.empty()) {
      QuantumState s = QuantumState::pure(ctx.model->layout, psi_norm);
      for (size_t f = 0; f < ctx.rdm_factors.size(); ++f)
        acc.rdm_sum[f * static_cast<size_t>(nt) + static_cast<size_t>(sample)] +=
            partial_trace(s, ctx.rdm_factors[f]);
    }
  };

  int sample = 0;
  record(*ctx.psi0, sample++);

  const double t_end = ctx.times.back();
  while (sample < nt) {
    ode.set_end_cap(t_end);
    ode.step();

    // jump inside (t_prev, t]? survival decreases monotonically between jumps
    if (jumps && ode.y().squaredNorm() <= survival) {
      double lo = ode.t_prev(), hi = ode.t();
      double tj = hi;
      best = ode.y();
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        ode.eval_dense(mid, dense);
        const double g = dense.squaredNorm() - survival;
        if (std::abs(g) < ctx.cfg.jump_tol) {
          tj = mid;
          best = dense;
          break;
        }
        if (g > 0.0) {
          lo = mid;
        } else {
          hi = mid;
          tj = mid;
          best = dense;
        }
        if ((hi - lo) < 1e-14 * std::max(1.0, hi)) break;
      }
      // samples before the jump, from the pre-jump dense output
      while (sample < nt && ctx.times[static_cast<size_t>(sample)] < tj) {
        ode.eval_dense(ctx.times[static_cast<size_t>(sample)], dense);
        record(dense, sample++);
      }
      // pick the channel with probability ~ ||c_k psi||^2
      double total = 0.0;
      std::vector<double> w(ctx.model->collapse_ops.size());
      for (size_t k = 0; k < w.size(); ++k) {
        cpsi.noalias() = ctx.model->collapse_ops[k].mat * best;
        w[k] = cpsi.squaredNorm();
        total += w[k];
      }
      if (total <= 0.0)
        throw NumericError("mcsolve: zero total jump rate at a forced jump", tj);
      double pick = uniform(rng) * total;
      size_t chosen = 0;
      for (; chosen + 1 < w.size(); ++chosen) {
        if (pick < w[chosen]) break;
        pick -= w[chosen];
      }
      cpsi.noalias() = ctx.model->collapse_ops[chosen].mat * best;
      cpsi /= cpsi.norm();
      while (sample < nt && ctx.times[static_cast<size_t>(sample)] == tj)
        record(cpsi, sample++);
      survival = uniform(rng);
      ode.reset_state(tj, cpsi);
      continue;
    }

    while (sample < nt && ctx.times[static_cast<size_t>(sample)] <= ode.t()) {
      ode.eval_dense(ctx.times[static_cast<size_t>(sample)], dense);
      record(dense, sample++);
    }
  }
}

}  // namespace

TimeSeries mcsolve(const Model& model, const QuantumState& initial, const TimeGrid& grid,
                   const ObservableSet& observables, const SolverConfig& config) {
  if (!initial.is_pure()) throw InvalidArgumentError("mcsolve: initial state must be pure");
  if (initial.layout != model.layout)
    throw InvalidArgumentError("mcsolve: initial state layout mismatch");
  if (config.n_traj < 1) throw InvalidArgumentError("mcsolve: need at least one trajectory");
  const Eigen::Index d = model.layout.total_dim();
  {
    const int threads = config.threads > 0
                            ? config.threads
                            : std::max(1u, std::thread::hardware_concurrency());
    const double bytes = double(threads) * 16.0 * double(d) * 18.0;
    if (bytes > config.memory_limit_gb * 1e9) {
      std::ostringstream os;
      os << "mcsolve: estimated " << bytes / 1e9 << " GB exceeds the limit for dimension " << d;
      throw MemoryRefusalError(os.str(), d);
    }
  }

  McContext ctx;
  ctx.model = &model;
  ctx.psi0 = &initial.vec;
  ctx.times = grid.times();
  ctx.obs = &observables;
  ctx.cfg = config;
  ctx.rdm_factors = observables.rdm_factors;
  for (int f : ctx.rdm_factors) ctx.rdm_dims.push_back(model.layout.factor(f).dim());
  SparseMat cdagc(d, d);
  for (const Operator& c : model.collapse_ops) {
    if (c.layout != model.layout) throw InvalidArgumentError("mcsolve: collapse layout mismatch");
    cdagc += SparseMat(c.mat.adjoint() * c.mat);
  }
  ctx.h_nh = model.hamiltonian.mat - cplx(0, 0.5) * cdagc;

  const int n_traj = config.n_traj;
  const int block_size = ctx.rdm_factors.empty() ? kBlock : kBlockRdm;
  const int n_blocks = (n_traj + block_size - 1) / block_size;
  const int nt = static_cast<int>(ctx.times.size());
  std::vector<BlockAccum> blocks(static_cast<size_t>(n_blocks));

  std::atomic<int> next_block{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const int b = next_block.fetch_add(1);
      if (b >= n_blocks) return;
      try {
        BlockAccum& acc = blocks[static_cast<size_t>(b)];
        acc.init(observables.size(), nt, ctx.rdm_dims);
        const int lo = b * block_size;
        const int hi = std::min(n_traj, lo + block_size);
        for (int traj = lo; traj < hi; ++traj) {
          run_trajectory(ctx, traj, acc);
          ++acc.count;
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  int n_threads = config.threads > 0 ? config.threads
                                     : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n_threads = std::min(n_threads, n_blocks);
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  // fixed-order pairwise combine
  for (int stride = 1; stride < n_blocks; stride *= 2)
    for (int b = 0; b + stride < n_blocks; b += 2 * stride)
      blocks[static_cast<size_t>(b)].combine(blocks[static_cast<size_t>(b + stride)]);
  BlockAccum& total = blocks[0];

  TimeSeries ts;
  ts.times = ctx.times;
  ts.names = observables.names;
  ts.n_traj = n_traj;
  ts.seed = config.seed;
  const double m = double(n_traj);
  ts.values = total.sum / m;
  ts.stderrs.resize(observables.size(), nt);
  if (n_traj > 1) {
    for (int i = 0; i < observables.size(); ++i)
      for (int j = 0; j < nt; ++j) {
        const double var =
            std::max(0.0, total.sum_sq(i, j) / m - std::norm(ts.values(i, j)));
        ts.stderrs(i, j) = std::sqrt(var / (m - 1.0));
      }
  } else {
    ts.stderrs.setZero();
  }
  for (size_t f = 0; f < ctx.rdm_factors.size(); ++f) {
    std::vector<DenseMat> series;
    series.reserve(static_cast<size_t>(nt));
    for (int j = 0; j < nt; ++j)
      series.push_back(total.rdm_sum[f * static_cast<size_t>(nt) + static_cast<size_t>(j)] / m);
    ts.rdm[ctx.rdm_factors[f]] = std::move(series);
  }
  return ts;
}

}  // namespace dpa
