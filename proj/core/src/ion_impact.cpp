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

#include "cavitytk/ion_impact.hpp"

#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/errors.hpp"

namespace cavitytk::ion {

using constants::pi;
using electrostatics::ChargeScenario;

TrapConfig TrapConfig::from_lab_units(double mass_amu, double secular_hz, double rf_hz,
                                      double cooling_wavelength_m, double gate_wavelength_m,
                                      double cavity_wavelength_m) {
  TrapConfig trap{mass_amu * constants::atomic_mass_unit,
                  2.0 * pi * secular_hz,
                  2.0 * pi * rf_hz,
                  cooling_wavelength_m,
                  gate_wavelength_m,
                  cavity_wavelength_m};
  trap.validate();
  return trap;
}

double TrapConfig::spring_constant() const {
  return 0.5 * mass_kg * secular_frequency * secular_frequency;
}

void TrapConfig::validate() const {
  if (!(mass_kg > 0.0) || !(secular_frequency > 0.0) || !(rf_frequency > 0.0) ||
      !(cooling_wavelength_m > 0.0) || !(gate_wavelength_m > 0.0) ||
      !(cavity_wavelength_m > 0.0)) {
    throw ParameterError("trap parameters must all be positive");
  }
  if (!(rf_frequency > secular_frequency)) {
    throw ParameterError("RF frequency must exceed the secular frequency");
  }
}

TrapConfig ytterbium_example_trap() {
  return TrapConfig::from_lab_units(171.0, 500e3, 30e6, 369e-9, 355e-9, 1650e-9);
}

namespace {

// k_t + s_q B, checked for stability.
double curvature(const TrapConfig& trap, const electrostatics::ExpansionCoefficients& k) {
  const double total = trap.spring_constant() + k.s_q * k.b;
  if (!(total > 0.0)) {
    throw StabilityError(fmt::format(
        "stray charge destabilises the trap: k_t + s_q B = {:.3e} N/m", total));
  }
  return total;
}

ChargeScenario single_charge(double q1_e, double x_q_m) { return {q1_e, 0.0, x_q_m, 1.0}; }

// Smallest q in (0, ceiling] with predicate(q) true, assuming predicate is
// false at 0. Geometric scan then bisection.
double first_crossing(const std::function<bool(double)>& crossed, const BisectionOptions& options,
                      const char* what) {
  double lo = 0.0;
  double hi = 1.0;
  while (!crossed(hi)) {
    lo = hi;
    hi *= 1.1;
    if (hi > options.q1_ceiling_e) {
      throw SearchError(fmt::format("{} not reached for Q1 up to {:.3g} e", what,
                                    options.q1_ceiling_e));
    }
  }
  while (hi - lo > options.relative_tolerance * hi) {
    const double mid = 0.5 * (lo + hi);
    (crossed(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double equilibrium_position(const TrapConfig& trap, const ChargeScenario& s) {
  const auto k = electrostatics::expansion_coefficients(s);
  return -0.5 * k.s_q * k.a / curvature(trap, k);
}

double shifted_frequency(const TrapConfig& trap, const ChargeScenario& s) {
  const auto k = electrostatics::expansion_coefficients(s);
  return std::sqrt(2.0 * curvature(trap, k) / trap.mass_kg);
}

double micromotion_amplitude(const TrapConfig& trap, double displacement_m,
                             double shifted_secular) {
  if (!(trap.rf_frequency > 0.0)) throw ParameterError("RF frequency must be positive");
  return std::sqrt(2.0) * (shifted_secular / trap.rf_frequency) * std::abs(displacement_m);
}

double bessel_j0(double x) {
  using ld = long double;
  const ld ax = std::abs(static_cast<ld>(x));
  if (ax < 12.0L) {
    // sum (-x^2/4)^k / (k!)^2; long double keeps cancellation below 1e-14.
    const ld q = -ax * ax / 4.0L;
    ld term = 1.0L;
    ld sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
      term *= q / (static_cast<ld>(k) * static_cast<ld>(k));
      sum += term;
      if (std::abs(term) < 1e-22L * std::max(std::abs(sum), 1e-3L)) break;
    }
    return static_cast<double>(sum);
  }

  // Hankel asymptotic expansion, truncated at its smallest term.
  ld p = 0.0L;
  ld q = 0.0L;
  ld b = 1.0L;  // prod_{j<=k} (2j-1)^2 / (8 j x)
  ld previous = INFINITY;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) {
      const ld odd = 2.0L * k - 1.0L;
      b *= odd * odd / (8.0L * k * ax);
    }
    if (b > previous) break;
    previous = b;
    const int sign = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0) {
      p += sign * b;
    } else {
      q -= sign * b;
    }
    if (b < 1e-20L) break;
  }
  const ld chi = ax - static_cast<ld>(pi) / 4.0L;
  const ld amplitude = std::sqrt(2.0L / (static_cast<ld>(pi) * ax));
  return static_cast<double>(amplitude * (p * std::cos(chi) - q * std::sin(chi)));
}

double carrier_intensity_factor(double micromotion_m, double cooling_wavelength_m) {
  if (!(cooling_wavelength_m > 0.0)) throw ParameterError("wavelength must be positive");
  const double j0 = bessel_j0(2.0 * pi * micromotion_m / cooling_wavelength_m);
  return j0 * j0;
}

IonResponse ion_response(const TrapConfig& trap, const ChargeScenario& s) {
  const double x = equilibrium_position(trap, s);
  const double w = shifted_frequency(trap, s);
  return {x, w, micromotion_amplitude(trap, x, w), electrostatics::field_at(s, x)};
}

ChargeBudget max_charge_for_cooling(const TrapConfig& trap, double x_q_m, double intensity_floor,
                                    const BisectionOptions& options) {
  trap.validate();
  if (!(intensity_floor > 0.0 && intensity_floor < 1.0)) {
    throw ParameterError(fmt::format("intensity floor {} outside (0, 1)", intensity_floor));
  }
  const auto factor = [&](double q1) {
    const auto r = ion_response(trap, single_charge(q1, x_q_m));
    return carrier_intensity_factor(r.micromotion_m, trap.cooling_wavelength_m);
  };
  const double q1 = first_crossing([&](double q) { return factor(q) < intensity_floor; }, options,
                                   "cooling intensity floor");
  const auto r = ion_response(trap, single_charge(q1, x_q_m));
  return {q1, r.field_v_per_m, r.displacement_m, r.micromotion_m};
}

ChargeBudget charge_for_displacement(const TrapConfig& trap, double x_q_m, double displacement_m) {
  trap.validate();
  if (!(x_q_m > 0.0)) throw ParameterError("x_Q must be positive");
  if (displacement_m < 0.0 || !(displacement_m < 0.5 * x_q_m)) {
    throw SearchError(fmt::format("displacement {} m unreachable: the point-charge model caps x~ "
                                  "below x_Q / 2 = {} m",
                                  displacement_m, 0.5 * x_q_m));
  }
  // x~ (k_t + u / x_Q^3) = u / (2 x_Q^2) with u = s_q e Q1 solved for u.
  const double s_q = constants::elementary_charge * constants::coulomb;
  const double u = displacement_m * trap.spring_constant() /
                   (1.0 / (2.0 * x_q_m * x_q_m) - displacement_m / (x_q_m * x_q_m * x_q_m));
  const double q1 = u / (s_q * constants::elementary_charge);
  const auto r = ion_response(trap, single_charge(q1, x_q_m));
  return {q1, r.field_v_per_m, r.displacement_m, r.micromotion_m};
}

LambDickeBudget lamb_dicke_budget(const TrapConfig& trap, double x_q_m, double modulation_limit,
                                  const BisectionOptions& options) {
  trap.validate();
  if (modulation_limit < 0.0) throw ParameterError("modulation limit must be non-negative");
  const double target = modulation_limit * trap.gate_wavelength_m / (2.0 * pi);
  if (target == 0.0) return {};
  const double q1 = first_crossing(
      [&](double q) { return ion_response(trap, single_charge(q, x_q_m)).micromotion_m > target; },
      options, "Lamb-Dicke micromotion limit");
  const auto r = ion_response(trap, single_charge(q1, x_q_m));
  return {r.displacement_m, target, q1, r.field_v_per_m};
}

double zero_point_spread(double mass_kg, double secular_frequency) {
  if (!(mass_kg > 0.0) || !(secular_frequency > 0.0)) {
    throw ParameterError("mass and secular frequency must be positive");
  }
  return std::sqrt(constants::hbar / (2.0 * mass_kg * secular_frequency));
}

GateVerdict gate_detuning_verdict(const TrapConfig& trap, const ChargeScenario& s,
                                  const GateParams& gate) {
  if (!(gate.two_qubit_rabi > 0.0) || !(gate.threshold_ratio > 0.0)) {
    throw ParameterError("gate Rabi rate and threshold must be positive");
  }
  GateVerdict v;
  v.delta_x = std::abs(trap.secular_frequency - shifted_frequency(trap, s));
  v.ratio = v.delta_x / gate.two_qubit_rabi;
  v.ratio_to_secular = v.delta_x / trap.secular_frequency;
  v.within_threshold = v.ratio < gate.threshold_ratio;
  return v;
}

double max_symmetric_charge_for_gate(const TrapConfig& trap, double x_q_m, const GateParams& gate) {
  trap.validate();
  if (!(x_q_m > 0.0)) throw ParameterError("x_Q must be positive");
  if (!(gate.two_qubit_rabi > 0.0) || !(gate.threshold_ratio > 0.0)) {
    throw ParameterError("gate Rabi rate and threshold must be positive");
  }
  // omega~^2 = omega^2 + 2 s_q B / m with B = 2 e Q / x_Q^3 for Q1 = Q2 = Q.
  const double w = trap.secular_frequency;
  const double shifted = w + gate.threshold_ratio * gate.two_qubit_rabi;
  const double s_q_b = 0.5 * trap.mass_kg * (shifted * shifted - w * w);
  const double s_q = constants::elementary_charge * constants::coulomb;
  return s_q_b * x_q_m * x_q_m * x_q_m / (2.0 * s_q * constants::elementary_charge);
}

}  // namespace cavitytk::ion
