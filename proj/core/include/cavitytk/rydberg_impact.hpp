// Copyright 2026 The cavitytk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

namespace cavitytk::rydberg {

/// Polarizability alpha is kept in ordinary-frequency units, Hz / (V/m)^2,
/// so that delta_R / 2pi = alpha E^2 / 2 and tau_pi = 1 / (alpha E^2) both
/// hold as written. Rabi frequencies are angular (rad/s).
struct RydbergConfig {
  double polarizability = 53.4e3;  // Hz / (V/m)^2, Rb 70S
  double two_photon_rabi = 0.0;    // Omega_R, rad/s
  std::string ground_state = "5S1/2";
  std::string rydberg_state = "70S1/2";
};

/// delta_R / 2pi = alpha E^2 / 2, in Hz.
double stark_shift(const RydbergConfig& cfg, double field_v_per_m);

/// Ramsey phase pi alpha E^2 tau, in radians.
double dephasing(const RydbergConfig& cfg, double field_v_per_m, double duration_s);

/// tau_pi = 1 / (alpha E^2); +infinity at zero field.
double decoherence_time(const RydbergConfig& cfg, double field_v_per_m);

/// (1/2) (delta_R / Omega_R)^2 with delta_R in rad/s.
double blockade_infidelity(const RydbergConfig& cfg, double stark_shift_angular);

struct ChargeLimit {
  double q1_e = 0.0;
  double field_v_per_m = 0.0;  // E_Q(0)
};

/// Q1 (Q2 = 0, atom at the cavity centre) reaching the target infidelity.
ChargeLimit max_charge_for_infidelity(const RydbergConfig& cfg, double target_infidelity,
                                      double x_q_m);

/// Q1 (Q2 = 0) whose field decoheres the atom in exactly `tau_pi_s`.
ChargeLimit max_charge_for_coherence(const RydbergConfig& cfg, double tau_pi_s, double x_q_m);

/// Field E_Q(0) of Q1 alone at distance x_Q, and its inverse.
double field_at_centre(double q1_e, double x_q_m);
double charge_for_centre_field(double field_v_per_m, double x_q_m);

}  // namespace cavitytk::rydberg
