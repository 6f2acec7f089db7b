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

#include "cavitytk/electrostatics.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/errors.hpp"

namespace cavitytk::electrostatics {

using constants::coulomb;
using constants::elementary_charge;
using constants::vacuum_permittivity;

namespace {

void require_inside(const ChargeScenario& s, double x) {
  if (!(std::abs(x) < s.x_q_m)) {
    throw DomainError(
        fmt::format("position {} m outside the open interval (-{}, {}) m", x, s.x_q_m, s.x_q_m));
  }
}

}  // namespace

void ChargeScenario::validate() const {
  if (!(x_q_m > 0.0)) throw ParameterError(fmt::format("x_Q = {} m must be positive", x_q_m));
}

ExpansionCoefficients expansion_coefficients(const ChargeScenario& s) {
  s.validate();
  const double q1 = s.q1_e * elementary_charge;
  const double q2 = s.q2_e * elementary_charge;
  const double x = s.x_q_m;
  return {(q2 - q1) / (x * x), (q1 + q2) / (x * x * x), (q1 + q2) / x,
          s.test_charge_e * elementary_charge * coulomb};
}

double potential_exact(const ChargeScenario& s, double x) {
  s.validate();
  require_inside(s, x);
  const double s_q = s.test_charge_e * elementary_charge * coulomb;
  return s_q * elementary_charge *
         (s.q1_e / std::abs(x + s.x_q_m) + s.q2_e / std::abs(x - s.x_q_m));
}

double potential_quadratic(const ExpansionCoefficients& k, double x) {
  return k.s_q * (k.a * x + k.b * x * x + k.c_const);
}

double potential_quadratic(const ChargeScenario& s, double x) {
  const auto k = expansion_coefficients(s);
  require_inside(s, x);
  return potential_quadratic(k, x);
}

double field_at(const ChargeScenario& s, double x) {
  const auto k = expansion_coefficients(s);
  require_inside(s, x);
  return -(k.a + 2.0 * k.b * x) * coulomb;
}

double field_exact(const ChargeScenario& s, double x) {
  s.validate();
  require_inside(s, x);
  // Q1 sits at -x_Q (pushes +x), Q2 at +x_Q (pushes -x).
  const double d1 = x + s.x_q_m;
  const double d2 = s.x_q_m - x;
  return coulomb * elementary_charge * (s.q1_e / (d1 * d1) - s.q2_e / (d2 * d2));
}

double sheet_pair_field(double sigma1, double sigma2) {
  return -(sigma2 - sigma1) / (2.0 * vacuum_permittivity);
}

double sheet_pair_energy(double sigma1, double sigma2, double x, double x_q, double test_e) {
  return test_e * elementary_charge * (sigma2 - sigma1) / (2.0 * vacuum_permittivity) * (x - x_q);
}

double single_sheet_field(double sigma) { return sigma / (2.0 * vacuum_permittivity); }

double disc_potential_energy(double charge_e, double r, double x, double test_e) {
  if (!(r > 0.0)) throw ParameterError("disc radius must be positive");
  const double s_q = test_e * elementary_charge * coulomb;
  return 2.0 * s_q * charge_e * elementary_charge * (std::hypot(r, x) - x) / (r * r);
}

double point_potential_energy(double charge_e, double x, double test_e) {
  if (!(x > 0.0)) throw ParameterError("distance must be positive");
  return test_e * elementary_charge * coulomb * charge_e * elementary_charge / x;
}

DiscPointRatios disc_point_ratios(double r, double x) {
  if (!(r > 0.0) || !(x > 0.0)) {
    throw ParameterError("disc radius and distance must be positive");
  }
  const double h = std::hypot(r, x);
  // sqrt(r^2 + x^2) - x and 1 - x / sqrt(r^2 + x^2) rewritten to avoid
  // cancellation when x >> r.
  const double rise = r * r / (h + x);
  const double drop = r * r / (h * (h + x));
  return {2.0 * x * rise / (r * r), 2.0 * x * x * drop / (r * r)};
}

}  // namespace cavitytk::electrostatics
