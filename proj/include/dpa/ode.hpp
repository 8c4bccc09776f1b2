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

#include <functional>
#include <limits>

#include "dpa/errors.hpp"
#include "dpa/types.hpp"

namespace dpa {

using OdeRhs = std::function<void(double t, const Vec& y, Vec& dydt)>;

struct OdeOptions {
  double rtol = 1e-8;
  double atol = 1e-10;
  double max_step = std::numeric_limits<double>::infinity();
  long long max_steps = 100'000'000;
};

/// Adaptive Dormand-Prince 5(4) stepper with the classic quartic dense
/// output. Step-by-step interface so callers can interleave sampling and
/// event localization (quantum-jump bisection) between accepted steps.
///
/// The state never steps past `end_cap`; set it before stepping.
class Dopri5 {
 public:
  Dopri5(OdeRhs rhs, double t0, Vec y0, OdeOptions opt = {});

  void set_end_cap(double t_end) { end_cap_ = t_end; }

  /// Take one accepted step (retrying rejected trials internally).
  /// Throws NumericError on step-size underflow.
  void step();

  double t() const { return t_; }
  double t_prev() const { return t_prev_; }
  const Vec& y() const { return y_; }

  /// Dense-output evaluation at time `ts` in [t_prev(), t()].
  void eval_dense(double ts, Vec& out) const;

  /// Restart from a new state (after a quantum jump); keeps the step-size
  /// history as a guess.
  void reset_state(double t0, const Vec& y0);

  long long accepted_steps() const { return n_accepted_; }
  long long rejected_steps() const { return n_rejected_; }

 private:
  double initial_step_guess();
  void prepare_dense();

  OdeRhs rhs_;
  OdeOptions opt_;
  double t_ = 0.0, t_prev_ = 0.0, h_ = 0.0, h_taken_ = 0.0;
  double end_cap_ = std::numeric_limits<double>::infinity();
  bool fsal_valid_ = false;
  bool dense_ready_ = false;
  Vec y_, y_prev_;
  Vec k1_, k2_, k3_, k4_, k5_, k6_, k7_;
  Vec ytmp_, yerr_;
  Vec rc1_, rc2_, rc3_, rc4_, rc5_;  // dense-output coefficients
  long long n_accepted_ = 0, n_rejected_ = 0;
};

}  // namespace dpa
