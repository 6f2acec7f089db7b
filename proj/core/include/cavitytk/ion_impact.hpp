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

#include "cavitytk/electrostatics.hpp"

namespace cavitytk::ion {

/// Paul-trap and laser parameters for a single trapped ion. Angular
/// frequencies in rad/s; use from_lab_units for amu and Hz inputs.
struct TrapConfig {
  double mass_kg = 0.0;
  double secular_frequency = 0.0;  // omega_x, rad/s
  double rf_frequency = 0.0;       // Omega_RF, rad/s
  double cooling_wavelength_m = 0.0;
  double gate_wavelength_m = 0.0;
  double cavity_wavelength_m = 0.0;

  static TrapConfig from_lab_units(double mass_amu, double secular_hz, double rf_hz,
                                   double cooling_wavelength_m, double gate_wavelength_m,
                                   double cavity_wavelength_m);

  /// Spring constant k_t = m omega_x^2 / 2 of U_t = k_t x^2.
  double spring_constant() const;

  /// Throws ParameterError unless every field is positive and
  /// Omega_RF > omega_x.
  void validate() const;
};

/// Yb+ (171 amu) in the example trap: omega_x/2pi = 500 kHz,
/// Omega_RF/2pi = 30 MHz, cooling 369 nm, gate 355 nm, cavity 1650 nm.
TrapConfig ytterbium_example_trap();

struct GateParams {
  double two_qubit_rabi = 0.0;   // Omega_2g, rad/s
  int occupation = 50;           // n_x, provenance only
  double threshold_ratio = 0.013;
};

/// x~ = -(1/2) s_q A / (k_t + s_q B). StabilityError if k_t + s_q B <= 0.
double equilibrium_position(const TrapConfig& trap, const electrostatics::ChargeScenario& s);

/// omega~_x = sqrt(2 (k_t + s_q B) / m).
double shifted_frequency(const TrapConfig& trap, const electrostatics::ChargeScenario& s);

/// Excess micromotion amplitude sqrt(2) (omega~_x / Omega_RF) |x~|.
double micromotion_amplitude(const TrapConfig& trap, double displacement_m,
                             double shifted_secular);

/// Bessel function of the first kind, order zero. Absolute error below
/// 1e-10 for |x| <= 20.
double bessel_j0(double x);

/// J0(2 pi x_um / lambda_D)^2, the carrier intensity seen by a
/// micromoving ion.
double carrier_intensity_factor(double micromotion_m, double cooling_wavelength_m);

/// Ion state for a given stray-charge scenario.
struct IonResponse {
  double displacement_m;
  double shifted_secular;  // rad/s
  double micromotion_m;
  double field_v_per_m;  // quadratic-model field at the displaced position
};

IonResponse ion_response(const TrapConfig& trap, const electrostatics::ChargeScenario& s);

struct ChargeBudget {
  double q1_max_e = 0.0;
  double field_v_per_m = 0.0;  // at x~
  double displacement_m = 0.0;
  double micromotion_m = 0.0;
};

struct BisectionOptions {
  double relative_tolerance = 1e-6;
  double q1_ceiling_e = 1e9;
};

/// Largest Q1 (Q2 = 0) keeping J0^2(beta) at or above `intensity_floor`.
/// SearchError if the floor cannot be crossed below the ceiling.
ChargeBudget max_charge_for_cooling(const TrapConfig& trap, double x_q_m, double intensity_floor,
                                    const BisectionOptions& options = {});

/// Q1 (Q2 = 0) that displaces the ion by `displacement_m`; closed form.
ChargeBudget charge_for_displacement(const TrapConfig& trap, double x_q_m,
                                     double displacement_m);

struct LambDickeBudget {
  double displacement_max_m = 0.0;
  double micromotion_max_m = 0.0;
  double q1_max_e = 0.0;
  double field_v_per_m = 0.0;
};

/// Inverts k x_um < limit with k = 2 pi / lambda_g for Q1 (Q2 = 0).
LambDickeBudget lamb_dicke_budget(const TrapConfig& trap, double x_q_m, double modulation_limit,
                                  const BisectionOptions& options = {});

/// sqrt(hbar / (2 m omega_x)).
double zero_point_spread(double mass_kg, double secular_frequency);

struct GateVerdict {
  double delta_x = 0.0;            // |omega_x - omega~_x|, rad/s
  double ratio = 0.0;              // delta_x / Omega_2g
  double ratio_to_secular = 0.0;   // delta_x / omega_x
  bool within_threshold = false;   // ratio < threshold_ratio
};

GateVerdict gate_detuning_verdict(const TrapConfig& trap, const electrostatics::ChargeScenario& s,
                                  const GateParams& gate);

/// Largest Q1 = Q2 whose secular shift keeps delta_x / Omega_2g below the
/// threshold; closed form since omega~_x depends only on Q1 + Q2.
double max_symmetric_charge_for_gate(const TrapConfig& trap, double x_q_m,
                                     const GateParams& gate);

}  // namespace cavitytk::ion
