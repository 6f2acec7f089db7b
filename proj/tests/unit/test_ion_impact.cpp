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

#include <cmath>

#include <gtest/gtest.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/errors.hpp"
#include "cavitytk/ion_impact.hpp"
#include "oracles.hpp"

using namespace cavitytk;
using namespace cavitytk::ion;
using electrostatics::ChargeScenario;

namespace {

constexpr double kXq = 200e-6;
constexpr double kTwoPi = 2.0 * constants::pi;

double rel(double got, const oracle::big& want) {
  const double w = static_cast<double>(want);
  return std::abs(got - w) / std::abs(w);
}

}  // namespace

TEST(Trap, ExampleAndValidation) {
  const auto t = ytterbium_example_trap();
  EXPECT_DOUBLE_EQ(t.mass_kg, 171.0 * constants::atomic_mass_unit);
  EXPECT_DOUBLE_EQ(t.secular_frequency, kTwoPi * 500e3);
  EXPECT_DOUBLE_EQ(t.spring_constant(), 0.5 * t.mass_kg * t.secular_frequency * t.secular_frequency);
  EXPECT_THROW(TrapConfig::from_lab_units(171, -1, 30e6, 1, 1, 1), ParameterError);
  EXPECT_THROW(TrapConfig::from_lab_units(171, 30e6, 1e6, 1, 1, 1), ParameterError);
  EXPECT_THROW(TrapConfig::from_lab_units(0, 5e5, 30e6, 1, 1, 1), ParameterError);
}

TEST(Bessel, AgainstBoost) {
  double worst = 0.0;
  for (int i = -4000; i <= 4000; ++i) {
    const double x = 20.0 * i / 4000.0;
    worst = std::max(worst, std::abs(bessel_j0(x) - oracle::bessel_j0(x)));
  }
  EXPECT_LT(worst, 1e-10);
  EXPECT_EQ(bessel_j0(0.0), 1.0);
  // Both sides of the series / asymptotic switch.
  for (double x : {11.999999, 12.0, 12.000001, 30.0, 100.0}) {
    EXPECT_NEAR(bessel_j0(x), oracle::bessel_j0(x), 1e-10) << x;
  }
}

// Property: J0^2 + 2 sum J_n^2 = 1, with J_{n>0} from the reference.
TEST(Bessel, SumRule) {
  for (double x : {0.3, 2.404825557695773, 5.0, 11.0, 17.5}) {
    double sum = bessel_j0(x) * bessel_j0(x);
    for (int n = 1; n < 80; ++n) sum += 2.0 * oracle::bessel_jn(n, x) * oracle::bessel_jn(n, x);
    EXPECT_NEAR(sum, 1.0, 1e-10) << x;
  }
}

TEST(Response, MatchesExtendedPrecision) {
  const auto t = ytterbium_example_trap();
  const oracle::YbTrap ot;
  for (auto [q1, q2] : {std::pair{100.0, 0.0}, {1400.0, 0.0}, {-300.0, 50.0}, {630.0, 630.0}}) {
    const auto r = ion_response(t, {q1, q2, kXq, 1.0});
    const auto o = oracle::ion_state(ot, q1, q2, oracle::big("200e-6"));
    EXPECT_LT(rel(r.shifted_secular, o.omega), 1e-12);
    if (q1 != q2) {
      EXPECT_LT(rel(r.displacement_m, o.displacement), 1e-10);
      EXPECT_LT(rel(r.micromotion_m, o.micromotion), 1e-10);
    } else {
      EXPECT_EQ(r.displacement_m, 0.0);
      EXPECT_EQ(r.micromotion_m, 0.0);
    }
    EXPECT_LT(std::abs(r.field_v_per_m - static_cast<double>(o.field)),
              1e-10 * std::max(1.0, std::abs(static_cast<double>(o.field))));
  }
}

TEST(Response, RestoringForceBalancesField) {
  // At equilibrium the trap force cancels the stray force: 2 k_t x~ = e E.
  const auto t = ytterbium_example_trap();
  const ChargeScenario s{500.0, 0.0, kXq, 1.0};
  const auto r = ion_response(t, s);
  EXPECT_NEAR(2.0 * t.spring_constant() * r.displacement_m,
              constants::elementary_charge * r.field_v_per_m,
              1e-12 * std::abs(2.0 * t.spring_constant() * r.displacement_m));
}

TEST(Response, Instability) {
  const auto t = ytterbium_example_trap();
  EXPECT_THROW(shifted_frequency(t, {-1e6, -1e6, kXq, 1.0}), StabilityError);
  EXPECT_THROW(equilibrium_position(t, {-1e6, -1e6, kXq, 1.0}), StabilityError);
}

TEST(Response, MicromotionSignFree) {
  const auto t = ytterbium_example_trap();
  EXPECT_EQ(micromotion_amplitude(t, -1e-6, t.secular_frequency),
            micromotion_amplitude(t, 1e-6, t.secular_frequency));
}

TEST(Budgets, CoolingBackSubstitutes) {
  const auto t = ytterbium_example_trap();
  const auto b = max_charge_for_cooling(t, kXq, 0.5);
  const auto o = oracle::ion_state(oracle::YbTrap{}, b.q1_max_e, 0, oracle::big("200e-6"));
  const double j0 = oracle::bessel_j0(kTwoPi * static_cast<double>(o.micromotion) / 369e-9);
  EXPECT_NEAR(j0 * j0, 0.5, 1e-5);
  EXPECT_NEAR(b.q1_max_e, 1400.0, 0.05 * 1400.0);
  EXPECT_NEAR(b.field_v_per_m, 49.0, 0.05 * 49.0);
  EXPECT_NEAR(b.displacement_m, 2.8e-6, 0.05 * 2.8e-6);
  // Below the budget the floor holds.
  const auto below = ion_response(t, {0.99 * b.q1_max_e, 0.0, kXq, 1.0});
  EXPECT_GT(carrier_intensity_factor(below.micromotion_m, 369e-9), 0.5);
}

TEST(Budgets, CoolingErrors) {
  const auto t = ytterbium_example_trap();
  EXPECT_THROW(max_charge_for_cooling(t, kXq, 1.0), ParameterError);
  EXPECT_THROW(max_charge_for_cooling(t, kXq, 0.0), ParameterError);
  EXPECT_THROW(max_charge_for_cooling(t, kXq, 0.5, {1e-6, 100.0}), SearchError);
}

TEST(Budgets, CouplingDisplacement) {
  const auto t = ytterbium_example_trap();
  const double target = 1650e-9 / 8.0;
  const auto b = charge_for_displacement(t, kXq, target);
  EXPECT_NEAR(b.displacement_m, target, 1e-12 * target);
  EXPECT_NEAR(b.q1_max_e, 100.0, 5.0);
  EXPECT_NEAR(b.field_v_per_m, 3.6, 0.05 * 3.6);
  EXPECT_THROW(charge_for_displacement(t, kXq, kXq / 2.0), SearchError);
  EXPECT_THROW(charge_for_displacement(t, kXq, -1e-9), SearchError);
  EXPECT_EQ(charge_for_displacement(t, kXq, 0.0).q1_max_e, 0.0);
}

// Property: the closed-form inversion and forward model are inverses.
TEST(Budgets, DisplacementRoundTrip) {
  const auto t = ytterbium_example_trap();
  for (double q1 : {1.0, 37.0, 500.0, 5000.0, 1e5}) {
    const double x = ion_response(t, {q1, 0.0, kXq, 1.0}).displacement_m;
    EXPECT_NEAR(charge_for_displacement(t, kXq, x).q1_max_e, q1, 1e-9 * q1);
  }
}

TEST(Budgets, LambDicke) {
  const auto t = ytterbium_example_trap();
  const auto b = lamb_dicke_budget(t, kXq, 0.2);
  EXPECT_NEAR(b.micromotion_max_m, 0.2 * 355e-9 / kTwoPi, 1e-20);
  const auto o = oracle::ion_state(oracle::YbTrap{}, b.q1_max_e, 0, oracle::big("200e-6"));
  EXPECT_NEAR(kTwoPi / 355e-9 * static_cast<double>(o.micromotion), 0.2, 1e-5 * 0.2);
  EXPECT_NEAR(b.q1_max_e, 230.0, 0.05 * 230.0);
  EXPECT_NEAR(b.field_v_per_m, 8.2, 0.05 * 8.2);
  EXPECT_NEAR(b.displacement_max_m, 0.47e-6, 0.05 * 0.47e-6);
  EXPECT_NEAR(b.micromotion_max_m, 11e-9, 0.1 * 11e-9);
  EXPECT_EQ(lamb_dicke_budget(t, kXq, 0.0).q1_max_e, 0.0);
  EXPECT_THROW(lamb_dicke_budget(t, kXq, -0.1), ParameterError);
}

TEST(Budgets, ZeroPointSpread) {
  const auto t = ytterbium_example_trap();
  const double z = zero_point_spread(t.mass_kg, t.secular_frequency);
  const oracle::YbTrap ot;
  EXPECT_LT(rel(z, sqrt(oracle::hbar() / (2 * ot.mass * ot.omega_x))), 1e-12);
  EXPECT_NEAR(z, 8e-9, 0.05 * 8e-9);
  EXPECT_THROW(zero_point_spread(0.0, 1.0), ParameterError);
}

TEST(Gate, WorkedExample) {
  const auto t = ytterbium_example_trap();
  const GateParams g{kTwoPi * 10e3, 50, 0.013};
  const auto v = gate_detuning_verdict(t, {630.0, 630.0, kXq, 1.0}, g);
  EXPECT_NEAR(v.ratio_to_secular, 0.013, 0.001);
  EXPECT_NEAR(v.ratio, v.ratio_to_secular * 50.0, 1e-12);
  EXPECT_FALSE(v.within_threshold);
  // No stray charge, no detuning.
  EXPECT_EQ(gate_detuning_verdict(t, {0.0, 0.0, kXq, 1.0}, g).delta_x, 0.0);
  EXPECT_THROW(gate_detuning_verdict(t, {0.0, 0.0, kXq, 1.0}, {0.0, 50, 0.013}), ParameterError);
}

TEST(Gate, SymmetricBound) {
  const auto t = ytterbium_example_trap();
  const GateParams g{kTwoPi * 10e3, 50, 0.013};
  const double q = max_symmetric_charge_for_gate(t, kXq, g);
  EXPECT_NEAR(q, 13.0, 1.3);
  const auto at = gate_detuning_verdict(t, {q, q, kXq, 1.0}, g);
  EXPECT_NEAR(at.ratio, 0.013, 1e-9);
  EXPECT_TRUE(gate_detuning_verdict(t, {0.999 * q, 0.999 * q, kXq, 1.0}, g).within_threshold);
  EXPECT_FALSE(gate_detuning_verdict(t, {1.001 * q, 1.001 * q, kXq, 1.0}, g).within_threshold);
  // Only Q1 + Q2 matters for the frequency.
  EXPECT_NEAR(gate_detuning_verdict(t, {2.0 * q, 0.0, kXq, 1.0}, g).ratio, at.ratio, 1e-9);
}
