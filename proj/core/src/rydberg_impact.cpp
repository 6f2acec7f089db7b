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

#include "cavitytk/rydberg_impact.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/electrostatics.hpp"
#include "cavitytk/errors.hpp"

namespace cavitytk::rydberg {

using constants::pi;

double stark_shift(const RydbergConfig& cfg, double e) { return 0.5 * cfg.polarizability * e * e; }

double dephasing(const RydbergConfig& cfg, double e, double duration_s) {
  if (duration_s < 0.0) throw ParameterError("duration must be non-negative");
  return pi * cfg.polarizability * e * e * duration_s;
}

double decoherence_time(const RydbergConfig& cfg, double e) {
  const double rate = cfg.polarizability * e * e;
  return rate == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / rate;
}

double blockade_infidelity(const RydbergConfig& cfg, double stark_shift_angular) {
  if (!(cfg.two_photon_rabi > 0.0)) throw ParameterError("two-photon Rabi frequency must be positive");
  const double ratio = stark_shift_angular / cfg.two_photon_rabi;
  return 0.5 * ratio * ratio;
}

double field_at_centre(double q1_e, double x_q_m) {
  return electrostatics::field_at({q1_e, 0.0, x_q_m, 1.0}, 0.0);
}

double charge_for_centre_field(double field, double x_q_m) {
  if (!(x_q_m > 0.0)) throw ParameterError("x_Q must be positive");
  return field * x_q_m * x_q_m / (constants::coulomb * constants::elementary_charge);
}

ChargeLimit max_charge_for_infidelity(const RydbergConfig& cfg, double target, double x_q_m) {
  if (!(target > 0.0 && target < 0.5)) {
    throw ParameterError(fmt::format("target infidelity {} outside (0, 0.5)", target));
  }
  if (!(cfg.two_photon_rabi > 0.0)) throw ParameterError("two-photon Rabi frequency must be positive");
  // delta_R = Omega_R sqrt(2 target); delta_R = 2 pi (alpha E^2 / 2) = pi alpha E^2.
  const double shift = cfg.two_photon_rabi * std::sqrt(2.0 * target);
  const double field = std::sqrt(shift / (pi * cfg.polarizability));
  return {charge_for_centre_field(field, x_q_m), field};
}

ChargeLimit max_charge_for_coherence(const RydbergConfig& cfg, double tau_pi_s, double x_q_m) {
  if (!(tau_pi_s > 0.0)) throw ParameterError("coherence goal must be positive");
  const double field = 1.0 / std::sqrt(cfg.polarizability * tau_pi_s);
  return {charge_for_centre_field(field, x_q_m), field};
}

}  // namespace cavitytk::rydberg
