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

#include <string>
#include <vector>

#include "dpa/types.hpp"

namespace dpa {

/// Raw physical inputs. Rates and detunings are angular frequencies; the
/// figure presets work in units of the collective coupling g_c = sqrt(N) g,
/// the Table-1 presets in absolute rad/s (2*pi times the frequency in Hz).
struct ModelParams {
  int n_atoms = 1;
  double g = 0.0;        // single-atom coupling; g_c = sqrt(N) g
  double J = 0.0;        // parametric (pump <-> signal-pair) coupling
  cplx Omega{0.0, 0.0};  // pump drive amplitude
  double delta_s = 0.0;  // signal detuning
  double delta_q = 0.0;  // spin detuning (0 when the Stark shift is compensated)
  double kappa_p = 0.0;  // pump cavity decay
  double kappa_s = 0.0;  // signal cavity decay
  double gamma_s = 0.0;  // single-atom spontaneous emission
  double gamma_c = 0.0;  // collective dephasing
  cplx alpha0{0.0, 0.0}; // initial pump coherent amplitude
  bool compensate_stark = true;

  // Fock truncations; <= 0 means pick the defaults (see default_pump_cutoff).
  int pump_cutoff = 0;
  int signal_cutoff = 0;

  double g_c() const;

  /// Convenience: same parameters with every frequency-like member given in
  /// Hz converted to angular units.
  static ModelParams from_frequency_hz(const ModelParams& hz);
};

/// Closed-form derived quantities. See derive_params.
struct DerivedParams {
  cplx d{0.0, 0.0};       // displacement, Omega/(2 delta_p - i kappa_p)
  double delta_p = 0.0;   // pump detuning fixed to J^2/delta_S
  double delta_S = 0.0;   // Bogoliubov frequency sqrt(delta_s^2 - (2J|d|)^2)
  double r = 0.0;         // cavity squeezing parameter
  double theta_S = 0.0;   // squeezing phase of d
  double g_eff = 0.0;     // g^2 J / delta_S^2
  double g_eff_undriven = 0.0;  // g^2 J / delta_s^2
  cplx d0{0.0, 0.0};      // quasi-steady amplitude i Omega / kappa_p
  bool d0_defined = false;
  double p_gamma = 0.0;   // 4 kappa_s / (4 delta_s^2 + kappa_s^2)
  int iterations = 0;
  double residual = 0.0;  // |delta_p - J^2/delta_S| at exit
};

/// Solves the self-consistent set
///   d = Omega / (2 delta_p - i kappa_p)
///   delta_S = sqrt(delta_s^2 - (2 J |d|)^2)
///   delta_p = J^2 / delta_S
/// by fixed-point iteration from delta_S = delta_s (relative residual 1e-12,
/// at most 100 iterations), and evaluates the remaining closed forms.
///
/// Throws ParameterRegimeError when 2J|d| >= delta_s and NumericError on
/// non-convergence.
DerivedParams derive_params(const ModelParams& p);

/// Default pump cutoff: ceil(|a|^2 + 6 sqrt(max(|a|^2,1)) + 4) with
/// a = max(|alpha0|, |d0|); keeps the coherent-state Poisson tail far below
/// observable tolerances.
int default_pump_cutoff(const ModelParams& p);
/// Default signal cutoff for the low-excitation regime.
int default_signal_cutoff();

/// Validity monitors (reported, not fatal): each entry is a human-readable
/// note like "delta_s >> 2J|d| weak (ratio 3.2)".
std::vector<std::string> validity_report(const ModelParams& p, const DerivedParams& dp);

}  // namespace dpa
