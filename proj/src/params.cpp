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

#include "dpa/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dpa/errors.hpp"

namespace dpa {

double ModelParams::g_c() const { return std::sqrt(double(n_atoms)) * g; }

ModelParams ModelParams::from_frequency_hz(const ModelParams& hz) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  ModelParams p = hz;
  p.g *= two_pi;
  p.J *= two_pi;
  p.Omega *= two_pi;
  p.delta_s *= two_pi;
  p.delta_q *= two_pi;
  p.kappa_p *= two_pi;
  p.kappa_s *= two_pi;
  p.gamma_s *= two_pi;
  p.gamma_c *= two_pi;
  return p;
}

DerivedParams derive_params(const ModelParams& p) {
  if (p.n_atoms < 1) throw InvalidArgumentError("derive_params: N must be >= 1");
  if (!(p.delta_s > 0.0)) throw InvalidArgumentError("derive_params: delta_s must be > 0");
  if (p.kappa_p < 0 || p.kappa_s < 0 || p.gamma_s < 0 || p.gamma_c < 0)
    throw InvalidArgumentError("derive_params: rates must be >= 0");

  DerivedParams out;
  out.g_eff_undriven = p.g * p.g * p.J / (p.delta_s * p.delta_s);
  out.p_gamma = 4.0 * p.kappa_s / (4.0 * p.delta_s * p.delta_s + p.kappa_s * p.kappa_s);
  if (p.kappa_p > 0.0) {
    out.d0 = I * p.Omega / p.kappa_p;
    out.d0_defined = true;
  }

  const bool driven = std::abs(p.Omega) > 0.0;
  double delta_S = p.delta_s;
  cplx d = 0.0;
  double delta_p = (delta_S > 0.0) ? p.J * p.J / delta_S : 0.0;
  int it = 0;
  if (driven) {
    for (it = 1; it <= 100; ++it) {
      delta_p = p.J * p.J / delta_S;
      const cplx denom(2.0 * delta_p, -p.kappa_p);
      if (std::abs(denom) == 0.0)
        throw ParameterRegimeError("derive_params: drive with no pump detuning or decay");
      d = p.Omega / denom;
      const double twoJd = 2.0 * p.J * std::abs(d);
      if (twoJd >= p.delta_s)
        throw ParameterRegimeError("derive_params: 2J|d| >= delta_s, Bogoliubov frame undefined");
      const double next = std::sqrt(p.delta_s * p.delta_s - twoJd * twoJd);
      const double change = std::abs(next - delta_S);
      delta_S = next;
      if (change < 1e-13 * p.delta_s) break;
    }
    out.residual = std::abs(delta_p - p.J * p.J / delta_S);
    if (out.residual >= 1e-12 * p.delta_s)
      throw NumericError("derive_params: fixed point did not converge in 100 iterations");
    delta_p = p.J * p.J / delta_S;
  } else {
    delta_p = (p.J != 0.0) ? p.J * p.J / delta_S : 0.0;
    out.residual = 0.0;
  }

  out.d = d;
  out.delta_p = delta_p;
  out.delta_S = delta_S;
  out.iterations = it;
  const double twoJd = 2.0 * p.J * std::abs(d);
  out.r = 0.25 * std::log((p.delta_s + twoJd) / (p.delta_s - twoJd));
  out.theta_S = (std::abs(d) > 0.0) ? -std::atan2(d.imag(), d.real()) : 0.0;
  out.g_eff = p.g * p.g * p.J / (delta_S * delta_S);
  return out;
}

int default_pump_cutoff(const ModelParams& p) {
  double aref = std::abs(p.alpha0);
  if (p.kappa_p > 0.0) aref = std::max(aref, std::abs(p.Omega) / p.kappa_p);
  const double a2 = aref * aref;
  return static_cast<int>(std::ceil(a2 + 6.0 * std::sqrt(std::max(a2, 1.0)) + 4.0));
}

int default_signal_cutoff() { return 5; }

std::vector<std::string> validity_report(const ModelParams& p, const DerivedParams& dp) {
  std::vector<std::string> notes;
  const double twoJd = 2.0 * p.J * std::abs(dp.d);
  if (twoJd > 0.0) {
    const double ratio = p.delta_s / twoJd;
    if (ratio < 5.0) {
      std::ostringstream os;
      os << "condition delta_s >> 2J|d| violated (ratio " << ratio << " < 5)";
      notes.push_back(os.str());
    } else if (ratio < 10.0) {
      std::ostringstream os;
      os << "condition delta_s >> 2J|d| weak (ratio " << ratio << ")";
      notes.push_back(os.str());
    }
  }
  const double scale = std::max(p.J, p.g_c());
  if (scale > 0.0) {
    const double ratio = dp.delta_S / scale;
    if (ratio < 5.0) {
      std::ostringstream os;
      os << "condition delta_S >> max(J, g_c) violated (ratio " << ratio << " < 5)";
      notes.push_back(os.str());
    } else if (ratio < 10.0) {
      std::ostringstream os;
      os << "condition delta_S >> max(J, g_c) weak (ratio " << ratio << ")";
      notes.push_back(os.str());
    }
  }
  return notes;
}

}  // namespace dpa
