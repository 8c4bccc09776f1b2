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

#include "dpa/models.hpp"

#include <cmath>

namespace dpa {

namespace {

void push_channel(std::vector<Operator>& ops, double rate, const Operator& op) {
  if (rate > 0.0) ops.push_back(cplx(std::sqrt(rate), 0.0) * op);
}

}  // namespace

Model build_full_model(const ModelParams& p) {
  const DerivedParams dp = derive_params(p);
  const int ncp = p.pump_cutoff > 0 ? p.pump_cutoff : default_pump_cutoff(p);
  const int ncs = p.signal_cutoff > 0 ? p.signal_cutoff : default_signal_cutoff();
  SpaceLayout lay({Factor::boson(ncp), Factor::boson(ncs), Factor::spin(p.n_atoms)});

  const Operator a_p = embed(destroy_op(ncp), lay, 0);
  const Operator a_s = embed(destroy_op(ncs), lay, 1);
  const SpinOps s = spin_ops(p.n_atoms);
  const Operator sp = embed(s.sp, lay, 2);
  const Operator sm = embed(s.sm, lay, 2);
  const Operator sz = embed(s.sz, lay, 2);
  const Operator n_p = embed(number_op(ncp), lay, 0);
  const Operator n_s = embed(number_op(ncs), lay, 1);

  // Non-Hermitian couplings, then +H.c.; the drive enters with a minus sign
  // (see header).
  Operator v = cplx(p.J, 0.0) * (a_p * a_s.adjoint() * a_s.adjoint()) +
               cplx(p.g, 0.0) * (a_s * sp) + cplx(-0.5) * (std::conj(p.Omega) * a_p);
  Operator h = cplx(dp.delta_p, 0.0) * n_p + cplx(p.delta_s, 0.0) * n_s + v + v.adjoint();
  if (p.delta_q != 0.0) h = h + cplx(p.delta_q, 0.0) * sz;
  if (p.compensate_stark) h = h + cplx(p.g * p.g / dp.delta_S, 0.0) * (sp * sm);

  Model m;
  m.layout = lay;
  m.hamiltonian = std::move(h);
  push_channel(m.collapse_ops, p.kappa_p, a_p);
  push_channel(m.collapse_ops, p.kappa_s, a_s);
  push_channel(m.collapse_ops, p.gamma_s / p.n_atoms, sm);
  push_channel(m.collapse_ops, p.gamma_c, sz);
  m.label = "full";
  return m;
}

Model build_effective_model(const ModelParams& p) {
  const DerivedParams dp = derive_params(p);
  const int ncp = p.pump_cutoff > 0 ? p.pump_cutoff : default_pump_cutoff(p);
  SpaceLayout lay({Factor::boson(ncp), Factor::spin(p.n_atoms)});

  const Operator a_p = embed(destroy_op(ncp), lay, 0);
  const SpinOps s = spin_ops(p.n_atoms);
  const Operator sp = embed(s.sp, lay, 1);
  const Operator sm = embed(s.sm, lay, 1);
  const Operator sz = embed(s.sz, lay, 1);

  Operator v = cplx(dp.g_eff, 0.0) * (a_p * sp * sp) + cplx(-0.5) * (std::conj(p.Omega) * a_p);
  Operator h = v + v.adjoint();

  Model m;
  m.layout = lay;
  m.hamiltonian = std::move(h);
  push_channel(m.collapse_ops, p.kappa_p, a_p);
  push_channel(m.collapse_ops, p.gamma_s / p.n_atoms, sm);
  push_channel(m.collapse_ops, p.gamma_c, sz);
  m.label = "effective";
  return m;
}

Model build_tat_model(cplx g_tat, int n_atoms) {
  if (n_atoms < 2) throw InvalidArgumentError("build_tat_model: N must be >= 2");
  const SpinOps s = spin_ops(n_atoms);
  Operator h = g_tat * (s.sp * s.sp) + std::conj(g_tat) * (s.sm * s.sm);
  Model m;
  m.layout = h.layout;
  m.hamiltonian = std::move(h);
  m.label = "tat";
  return m;
}

Model apply_adiabatic_elimination(const Model& full, const ModelParams& p) {
  if (full.layout.num_factors() != 3)
    throw InvalidArgumentError("apply_adiabatic_elimination: expected the full three-factor model");
  if (!(p.kappa_s > 0.0))
    throw InvalidArgumentError("apply_adiabatic_elimination: kappa_s must be > 0");
  const DerivedParams dp = derive_params(p);

  Model m = build_effective_model(p);
  const int ncp = m.layout.factor(0).param;
  const Operator a_p = embed(destroy_op(ncp), m.layout, 0);
  const Operator sm = embed(spin_ops(p.n_atoms).sm, m.layout, 1);
  push_channel(m.collapse_ops, p.J * p.J * dp.p_gamma, a_p);
  push_channel(m.collapse_ops, p.g * p.g * dp.p_gamma, sm);
  m.label = "eliminated";
  return m;
}

QuantumState ground_initial_state(const Model& model, const ModelParams& p) {
  std::vector<QuantumState> parts;
  for (int i = 0; i < model.layout.num_factors(); ++i) {
    const Factor& f = model.layout.factor(i);
    if (f.kind == Factor::Kind::Spin) {
      parts.push_back(basis_state(f, 0));  // |l,-l>
    } else if (i == 0 && model.layout.num_factors() > 1) {
      parts.push_back(coherent_state(p.alpha0, f.param));  // pump
    } else {
      parts.push_back(basis_state(f, 0));  // signal vacuum
    }
  }
  return tensor(parts);
}

}  // namespace dpa
