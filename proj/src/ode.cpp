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

#include "dpa/ode.hpp"

#include <algorithm>
#include <cmath>

namespace dpa {

namespace {

// Dormand-Prince 5(4) tableau (Hairer, Norsett, Wanner, "Solving ODEs I").
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

double error_norm(const Vec& err, const Vec& y0, const Vec& y1, double atol, double rtol) {
  const Eigen::Index n = err.size();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double sc = atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
    const double e = std::abs(err(i)) / sc;
    acc += e * e;
  }
  return std::sqrt(acc / double(n));
}

}  // namespace

Dopri5::Dopri5(OdeRhs rhs, double t0, Vec y0, OdeOptions opt)
    : rhs_(std::move(rhs)), opt_(opt), t_(t0), t_prev_(t0), y_(std::move(y0)) {
  const Eigen::Index n = y_.size();
  y_prev_ = y_;
  k1_.resize(n); k2_.resize(n); k3_.resize(n); k4_.resize(n);
  k5_.resize(n); k6_.resize(n); k7_.resize(n);
  ytmp_.resize(n); yerr_.resize(n);
  rc1_.resize(n); rc2_.resize(n); rc3_.resize(n); rc4_.resize(n); rc5_.resize(n);
  rhs_(t_, y_, k1_);
  fsal_valid_ = true;
  h_ = initial_step_guess();
}

double Dopri5::initial_step_guess() {
  // Hairer's hinit, simplified.
  double d0 = 0.0, dd1 = 0.0;
  for (Eigen::Index i = 0; i < y_.size(); ++i) {
    const double sc = opt_.atol + opt_.rtol * std::abs(y_(i));
    d0 += std::norm(y_(i)) / (sc * sc);
    dd1 += std::norm(k1_(i)) / (sc * sc);
  }
  d0 = std::sqrt(d0 / double(y_.size()));
  dd1 = std::sqrt(dd1 / double(y_.size()));
  double h0 = (d0 < 1e-5 || dd1 < 1e-5) ? 1e-6 : 0.01 * d0 / dd1;
  h0 = std::min(h0, opt_.max_step);
  // one explicit Euler probe to estimate the second derivative
  ytmp_ = y_ + cplx(h0, 0.0) * k1_;
  rhs_(t_ + h0, ytmp_, k2_);
  double d2 = 0.0;
  for (Eigen::Index i = 0; i < y_.size(); ++i) {
    const double sc = opt_.atol + opt_.rtol * std::abs(y_(i));
    d2 += std::norm(k2_(i) - k1_(i)) / (sc * sc);
  }
  d2 = std::sqrt(d2 / double(y_.size())) / h0;
  const double dmax = std::max(dd1, d2);
  double h1 = (dmax <= 1e-15) ? std::max(1e-6, h0 * 1e-3)
                              : std::pow(0.01 / dmax, 1.0 / 5.0);
  return std::min({100.0 * h0, h1, opt_.max_step});
}

void Dopri5::reset_state(double t0, const Vec& y0) {
  t_ = t_prev_ = t0;
  y_ = y0;
  y_prev_ = y0;
  rhs_(t_, y_, k1_);
  fsal_valid_ = true;
  dense_ready_ = false;
  h_taken_ = 0.0;
}

void Dopri5::step() {
  if (!fsal_valid_) {
    rhs_(t_, y_, k1_);
    fsal_valid_ = true;
  }
  double h = std::min(h_, opt_.max_step);
  bool rejected_before = false;
  for (long long attempt = 0;; ++attempt) {
    if (n_accepted_ + n_rejected_ > opt_.max_steps)
      throw NumericError("ode: step count limit exceeded", t_);
    if (t_ + h > end_cap_) h = end_cap_ - t_;
    if (!(h > 0.0) || t_ + h == t_)
      throw NumericError("ode: step size underflow", t_);

    const cplx ch(h, 0.0);
    ytmp_ = y_ + ch * (a21 * k1_);
    rhs_(t_ + c2 * h, ytmp_, k2_);
    ytmp_ = y_ + ch * (a31 * k1_ + a32 * k2_);
    rhs_(t_ + c3 * h, ytmp_, k3_);
    ytmp_ = y_ + ch * (a41 * k1_ + a42 * k2_ + a43 * k3_);
    rhs_(t_ + c4 * h, ytmp_, k4_);
    ytmp_ = y_ + ch * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_);
    rhs_(t_ + c5 * h, ytmp_, k5_);
    ytmp_ = y_ + ch * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_);
    rhs_(t_ + h, ytmp_, k6_);
    ytmp_ = y_ + ch * (b1 * k1_ + b3 * k3_ + b4 * k4_ + b5 * k5_ + b6 * k6_);  // 5th order
    rhs_(t_ + h, ytmp_, k7_);
    yerr_ = ch * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);

    const double err = error_norm(yerr_, y_, ytmp_, opt_.atol, opt_.rtol);
    if (err <= 1.0) {
      const double facmax = rejected_before ? 1.0 : 10.0;
      double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
      h_ = h * std::clamp(fac, 0.2, facmax);
      t_prev_ = t_;
      y_prev_.swap(y_);
      t_ += h;
      h_taken_ = h;
      y_.swap(ytmp_);
      k1_.swap(k7_);  // FSAL
      dense_ready_ = false;
      ++n_accepted_;
      return;
    }
    ++n_rejected_;
    rejected_before = true;
    h *= std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
  }
}

void Dopri5::prepare_dense() {
  // Note FSAL: after an accepted step k1_ holds f(t, y) and k7_ the old k1.
  const cplx ch(h_taken_, 0.0);
  rc1_ = y_prev_;
  rc2_ = y_ - y_prev_;
  rc3_ = ch * k7_ - rc2_;
  rc4_ = rc2_ - ch * k1_ - rc3_;
  rc5_ = ch * (d1 * k7_ + d3 * k3_ + d4 * k4_ + d5 * k5_ + d6 * k6_ + d7 * k1_);
  dense_ready_ = true;
}

void Dopri5::eval_dense(double ts, Vec& out) const {
  if (h_taken_ == 0.0) {
    out = y_;
    return;
  }
  if (!dense_ready_) const_cast<Dopri5*>(this)->prepare_dense();
  const double th = (ts - t_prev_) / h_taken_;
  const double th1 = 1.0 - th;
  out = rc1_ + cplx(th, 0.0) * (rc2_ + cplx(th1, 0.0) * (rc3_ + cplx(th, 0.0) *
        (rc4_ + cplx(th1, 0.0) * rc5_)));
}

}  // namespace dpa
