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
#include <limits>

#include <gtest/gtest.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/errors.hpp"
#include "cavitytk/quantities.hpp"

using namespace cavitytk;

namespace {

double finesse_of(std::span<const double> x) { return x[1] / x[0]; }

const UncertainQuantity kLinewidth(523e3, 9e3, dim::frequency);
const UncertainQuantity kFsr(7.410e9, 0.013e9, dim::frequency);

}  // namespace

TEST(UncertainQuantity, RejectsNegativeSigmaAndNaN) {
  EXPECT_THROW(UncertainQuantity(1.0, -0.1), ParameterError);
  EXPECT_THROW(UncertainQuantity(std::nan(""), 0.1), ParameterError);
  EXPECT_THROW(UncertainQuantity(1.0, std::nan("")), ParameterError);
}

TEST(UncertainQuantity, AdditionRequiresMatchingDimension) {
  const UncertainQuantity a(1.0, 0.1, dim::length);
  const UncertainQuantity b(2.0, 0.2, dim::time);
  EXPECT_THROW(a + b, DimensionError);
  EXPECT_THROW(a - b, DimensionError);
  const auto c = a + UncertainQuantity(2.0, 0.2, dim::length);
  EXPECT_DOUBLE_EQ(c.value(), 3.0);
  EXPECT_NEAR(c.sigma(), std::hypot(0.1, 0.2), 1e-15);
  EXPECT_EQ(c.dimension(), dim::length);
}

TEST(UncertainQuantity, ProductAndQuotientCarryDimensions) {
  const UncertainQuantity v(2.0, 0.02, dim::voltage);
  const UncertainQuantity i(0.5, 0.005, dim::current);
  const auto r = v / i;
  EXPECT_EQ(r.dimension(), dim::resistance);
  EXPECT_DOUBLE_EQ(r.value(), 4.0);
  EXPECT_NEAR(r.relative_sigma(), std::hypot(0.01, 0.01), 1e-12);
  EXPECT_EQ((r * UncertainQuantity::exact(1.0, dim::length)).dimension(), dim::resistivity);
  EXPECT_EQ((dim::charge / dim::voltage), dim::capacitance);
  EXPECT_EQ((dim::voltage / dim::length), dim::field);
  EXPECT_EQ((dim::power / dim::current), dim::voltage);
}

TEST(UncertainQuantity, ScalarScalingKeepsRelativeSigma) {
  const UncertainQuantity x(5.0, 0.1, dim::length);
  const auto y = -3.0 * x;
  EXPECT_DOUBLE_EQ(y.value(), -15.0);
  EXPECT_DOUBLE_EQ(y.sigma(), 0.3);
  EXPECT_DOUBLE_EQ((x / 2.0).sigma(), 0.05);
}

TEST(UncertainQuantity, RelativeSigmaAtZeroValue) {
  EXPECT_EQ(UncertainQuantity::exact(0.0).relative_sigma(), 0.0);
  EXPECT_TRUE(std::isinf(UncertainQuantity(0.0, 1.0).relative_sigma()));
}

TEST(Dimension, Symbols) {
  EXPECT_EQ(dim::frequency.symbol(), "Hz");
  EXPECT_EQ(dim::field.symbol(), "V/m");
  EXPECT_EQ(dim::dimensionless.symbol(), "1");
  EXPECT_FALSE((dim::length * dim::length * dim::field).symbol().empty());
}

TEST(Constants, CoulombPrefactor) {
  EXPECT_NEAR(constants::coulomb * 4.0 * constants::pi * constants::vacuum_permittivity, 1.0,
              1e-15);
  EXPECT_NEAR(constants::hbar * 2.0 * constants::pi, constants::planck, 1e-48);
}

TEST(PropagateLinear, FinesseFromLinewidth) {
  const auto f = propagate_linear(finesse_of, {kLinewidth, kFsr});
  EXPECT_NEAR(f.value(), 14168.26, 0.01);
  // First-order analytic sigma of a ratio.
  const double rel = std::hypot(9e3 / 523e3, 0.013 / 7.410);
  EXPECT_NEAR(f.sigma(), f.value() * rel, 1e-6 * f.sigma());
  EXPECT_NEAR(f.sigma(), 245.0, 1.0);
}

TEST(PropagateLinear, IdentityAndSquare) {
  const auto id = propagate_linear([](std::span<const double> x) { return x[0]; },
                                   {UncertainQuantity(5.0, 0.1)});
  EXPECT_DOUBLE_EQ(id.value(), 5.0);
  EXPECT_NEAR(id.sigma(), 0.1, 1e-9);
  const auto sq = propagate_linear([](std::span<const double> x) { return x[0] * x[0]; },
                                   {UncertainQuantity(2.0, 0.01)});
  EXPECT_DOUBLE_EQ(sq.value(), 4.0);
  EXPECT_NEAR(sq.sigma(), 0.04, 1e-9);
}

TEST(PropagateLinear, ZeroInputUsesAbsoluteStep) {
  const auto r = propagate_linear([](std::span<const double> x) { return 3.0 * x[0]; },
                                  {UncertainQuantity(0.0, 0.5)});
  EXPECT_NEAR(r.sigma(), 1.5, 1e-6);
}

TEST(PropagateLinear, NonFiniteEvaluationThrows) {
  EXPECT_THROW(propagate_linear([](std::span<const double> x) { return std::log(x[0]); },
                                {UncertainQuantity(0.0, 0.1)}),
               EvaluationError);
  // Finite at the point, non-finite on the stencil.
  EXPECT_THROW(propagate_linear([](std::span<const double> x) { return std::sqrt(x[0]); },
                                {UncertainQuantity(1e-13, 0.1)}),
               EvaluationError);
}

TEST(PropagateMonteCarlo, AgreesWithLinearOnFinesse) {
  const auto lin = propagate_linear(finesse_of, {kLinewidth, kFsr});
  const auto mc = propagate_monte_carlo(finesse_of, {kLinewidth, kFsr}, 100'000, 7);
  EXPECT_NEAR(mc.quantity.value(), lin.value(), 0.005 * lin.value());
  EXPECT_NEAR(mc.quantity.sigma(), lin.sigma(), 0.10 * lin.sigma());
  EXPECT_EQ(mc.sample_count, 100'000u);
  EXPECT_EQ(mc.non_finite_count, 0u);
}

TEST(PropagateMonteCarlo, BitIdenticalForSameSeed) {
  const auto a = propagate_monte_carlo(finesse_of, {kLinewidth, kFsr}, 5000, 42);
  const auto b = propagate_monte_carlo(finesse_of, {kLinewidth, kFsr}, 5000, 42);
  const auto c = propagate_monte_carlo(finesse_of, {kLinewidth, kFsr}, 5000, 43);
  EXPECT_EQ(a.quantity.value(), b.quantity.value());
  EXPECT_EQ(a.quantity.sigma(), b.quantity.sigma());
  EXPECT_NE(a.quantity.value(), c.quantity.value());
}

TEST(PropagateMonteCarlo, ZeroSigmaInputs) {
  const auto r = propagate_monte_carlo(
      finesse_of, {UncertainQuantity::exact(2.0), UncertainQuantity::exact(8.0)}, 1000, 1);
  EXPECT_DOUBLE_EQ(r.quantity.value(), 4.0);
  EXPECT_EQ(r.quantity.sigma(), 0.0);
}

TEST(PropagateMonteCarlo, IndependentSumVariance) {
  const auto r = propagate_monte_carlo([](std::span<const double> x) { return x[0] + x[1]; },
                                       {UncertainQuantity(1.0, 1.0), UncertainQuantity(1.0, 1.0)},
                                       100'000, 3);
  EXPECT_NEAR(r.quantity.sigma(), std::sqrt(2.0), 0.05 * std::sqrt(2.0));
  EXPECT_NEAR(r.quantity.value(), 2.0, 0.02);
}

TEST(PropagateMonteCarlo, RequiresThousandSamples) {
  EXPECT_THROW(propagate_monte_carlo(finesse_of, {kLinewidth, kFsr}, 999, 0), ParameterError);
}

TEST(PropagateMonteCarlo, CountsAndRejectsNonFiniteSamples) {
  // log(x) with x = 1 +- 0.4 is non-finite for ~0.6% of draws: tolerated.
  const auto ok = propagate_monte_carlo([](std::span<const double> x) { return std::log(x[0]); },
                                        {UncertainQuantity(1.0, 0.4)}, 20'000, 5);
  EXPECT_GT(ok.non_finite_count, 0u);
  EXPECT_LT(ok.non_finite_count, 200u);
  // x = 1 +- 1 is non-finite for ~16%: rejected.
  EXPECT_THROW(propagate_monte_carlo([](std::span<const double> x) { return std::log(x[0]); },
                                     {UncertainQuantity(1.0, 1.0)}, 20'000, 5),
               EvaluationError);
}

// Property: for smooth f with relative input sigmas below 1%, the two
// engines agree on sigma within 20%.
class SmoothFunctions : public ::testing::TestWithParam<int> {};

TEST_P(SmoothFunctions, LinearAndMonteCarloAgree) {
  const std::function<double(std::span<const double>)> fs[] = {
      [](std::span<const double> x) { return x[0] * x[1] / x[2]; },
      [](std::span<const double> x) { return std::exp(x[0]) + std::sin(x[1]) * x[2]; },
      [](std::span<const double> x) { return std::sqrt(x[0] * x[0] + x[1]) * std::log(x[2]); },
      [](std::span<const double> x) { return std::pow(x[0], 3.0) / (x[1] + x[2]); },
  };
  const int i = GetParam();
  const std::vector<UncertainQuantity> in = {UncertainQuantity(1.3, 0.008),
                                             UncertainQuantity(2.1, 0.01),
                                             UncertainQuantity(3.7, 0.03)};
  const auto lin = propagate_linear(fs[i], in);
  const auto mc = propagate_monte_carlo(fs[i], in, 50'000, 11u + static_cast<unsigned>(i));
  EXPECT_NEAR(mc.quantity.sigma(), lin.sigma(), 0.2 * lin.sigma());
}

INSTANTIATE_TEST_SUITE_P(Property, SmoothFunctions, ::testing::Range(0, 4));
