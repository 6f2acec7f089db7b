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

#include <optional>

namespace cavitytk::charging {

/// Conductive film on a mirror face, grounded at its perimeter.
struct FilmSample {
  double resistivity_ohm_m = 0.0;
  double thickness_m = 0.0;
  double mirror_radius_m = 0.0;
  double capacitance_f = 0.1e-12;

  void validate() const;
};

/// Stray light striking a mirror.
struct IlluminationScenario {
  double power_w = 0.0;
  double wavelength_m = 0.0;
  double quantum_efficiency = 1.0;
  double beam_waist_m = 0.0;
  double mirror_distance_m = 0.0;
  /// When set, replaces the first-principles photo-electron rate (1/s).
  std::optional<double> electron_rate_override;

  void validate() const;
};

struct TransportSample {
  double resistivity_ohm_m = 0.0;
  double carrier_density_per_m3 = 0.0;
  double mobility_m2_per_vs = 0.0;
};

struct Photocurrent {
  double rate_per_s;  // photo-electrons per second
  double current_a;
};

/// eta P lambda / (h c) electrons per second, or the override when set.
Photocurrent photocurrent(const IlluminationScenario& s);

struct FilmResistance {
  double sheet_resistance_ohm_sq;
  double resistance_ohm;
};

/// R_s = rho / h and R = (2r / 2r) R_s for a round film.
FilmResistance film_resistance(const FilmSample& f);

struct EquilibriumCharge {
  double voltage_v;
  double charge_e;
  double rc_time_s;
};

/// V = I R, Q = R C I, tau = R C.
EquilibriumCharge equilibrium_charge(double resistance_ohm, double capacitance_f,
                                     double current_a);

/// Intensity drop at the mirror for a beam focused at the centre,
/// exp(-x_Q^2 / w0^2)^2.
double gaussian_clipping_factor(double beam_waist_m, double mirror_distance_m);

struct TransportCheck {
  double predicted_resistivity_ohm_m;
  double relative_deviation;  // (predicted - measured) / measured
};

/// rho = 1 / (n e mu) compared with the measured resistivity.
TransportCheck transport_consistency(const TransportSample& t);

struct CapacitanceBreakdown {
  double self_f;       // 8 eps0 r, isolated disc
  double mirror_pair_f;  // eps0 pi r^2 / (2 x_Q)
  double electrode_f;  // coupling to nearby conductors
  double total_f() const { return self_f + mirror_pair_f + electrode_f; }
};

CapacitanceBreakdown capacitance_breakdown(double mirror_radius_m, double mirror_distance_m,
                                           double electrode_f = 0.1e-12);

}  // namespace cavitytk::charging
