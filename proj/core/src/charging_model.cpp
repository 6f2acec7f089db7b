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

#include "cavitytk/charging_model.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/errors.hpp"

namespace cavitytk::charging {

using constants::elementary_charge;
using constants::pi;
using constants::vacuum_permittivity;

void FilmSample::validate() const {
  if (!(resistivity_ohm_m > 0.0) || !(thickness_m > 0.0) || !(mirror_radius_m > 0.0) ||
      !(capacitance_f > 0.0)) {
    throw ParameterError("film resistivity, thickness, radius and capacitance must be positive");
  }
}

void IlluminationScenario::validate() const {
  if (power_w < 0.0) throw ParameterError("optical power must be non-negative");
  if (!(quantum_efficiency >= 0.0 && quantum_efficiency <= 1.0)) {
    throw ParameterError(fmt::format("quantum efficiency {} outside [0, 1]", quantum_efficiency));
  }
  if (!(wavelength_m > 0.0)) throw ParameterError("wavelength must be positive");
  if (electron_rate_override && *electron_rate_override < 0.0) {
    throw ParameterError("photo-electron rate must be non-negative");
  }
}

Photocurrent photocurrent(const IlluminationScenario& s) {
  s.validate();
  const double rate = s.electron_rate_override
                          ? *s.electron_rate_override
                          : s.quantum_efficiency * s.power_w * s.wavelength_m /
                                (constants::planck * constants::speed_of_light);
  return {rate, rate * elementary_charge};
}

FilmResistance film_resistance(const FilmSample& f) {
  f.validate();
  const double sheet = f.resistivity_ohm_m / f.thickness_m;
  const double diameter = 2.0 * f.mirror_radius_m;
  return {sheet, diameter / diameter * sheet};
}

EquilibriumCharge equilibrium_charge(double r, double c, double i) {
  if (!(r > 0.0) || !(c > 0.0)) throw ParameterError("resistance and capacitance must be positive");
  const double v = i * r;
  return {v, c * v / elementary_charge, r * c};
}

double gaussian_clipping_factor(double w0, double x_q) {
  if (!(w0 > 0.0)) throw ParameterError("beam waist must be positive");
  const double single = std::exp(-(x_q * x_q) / (w0 * w0));
  return single * single;
}

TransportCheck transport_consistency(const TransportSample& t) {
  if (!(t.resistivity_ohm_m > 0.0) || !(t.carrier_density_per_m3 > 0.0) ||
      !(t.mobility_m2_per_vs > 0.0)) {
    throw ParameterError("transport sample values must be positive");
  }
  const double predicted =
      1.0 / (t.carrier_density_per_m3 * elementary_charge * t.mobility_m2_per_vs);
  return {predicted, (predicted - t.resistivity_ohm_m) / t.resistivity_ohm_m};
}

CapacitanceBreakdown capacitance_breakdown(double r, double x_q, double electrode_f) {
  if (!(r > 0.0) || !(x_q > 0.0)) throw ParameterError("radius and distance must be positive");
  return {8.0 * vacuum_permittivity * r, vacuum_permittivity * pi * r * r / (2.0 * x_q),
          electrode_f};
}

}  // namespace cavitytk::charging
