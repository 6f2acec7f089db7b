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
#include <sstream>

#include <gtest/gtest.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/errors.hpp"
#include "cavitytk/film_optics.hpp"
#include "oracles.hpp"

using namespace cavitytk;
using namespace cavitytk::film;

namespace {

// eps = eps_inf - wp^2 / (w^2 + i gamma w) and its principal root at 50 digits.
std::pair<double, double> index_oracle(const DrudeModel& m, double lambda) {
  using oracle::big;
  using oracle::big_complex;
  const big w = 2 * oracle::pi() * big("299792458") / big(lambda);
  const big wp = m.plasma_frequency;
  const big_complex denom(w * w, big(m.damping) * w);
  const big_complex eps = big_complex(big(m.eps_inf), 0) - big_complex(wp * wp, 0) / denom;
  const big_complex root = sqrt(eps);
  return {static_cast<double>(root.real()), static_cast<double>(root.imag())};
}

// Linear (alpha E)^2 = s (E - gap) with alpha in 1/cm.
AbsorptionSpectrum linear_edge(double gap, double s, double e_lo, double e_hi, int n) {
  std::vector<SpectrumPoint> pts;
  for (int i = 0; i < n; ++i) {
    const double e = e_lo + (e_hi - e_lo) * i / (n - 1);
    const double y = e > gap ? s * (e - gap) : 0.0;
    pts.push_back({e, std::sqrt(y) / e * 100.0});
  }
  return AbsorptionSpectrum(pts);
}

}  // namespace

TEST(PowerAttenuation, Definitions) {
  EXPECT_EQ(power_attenuation(0.0, 1550e-9, 1.0), 1.0);
  const double kappa = 0.04, lambda = 1550e-9;
  EXPECT_NEAR(power_attenuation(kappa, lambda, lambda / (4.0 * constants::pi * kappa)),
              std::exp(-1.0), 1e-15);
}

TEST(PowerAttenuation, FilmLimitsFinesseNearAThousand) {
  // 10 nm film crossed twice per bounce.
  const double loss = 1.0 - power_attenuation(0.04, 1550e-9, 20e-9);
  EXPECT_NEAR(loss, 6.5e-3, 0.05e-3);
  const double limit = finesse_limit(loss);
  EXPECT_GT(limit, 500.0);
  EXPECT_LT(limit, 2000.0);
  EXPECT_NEAR(limit, 2.0 * constants::pi / loss, 1e-9);
  EXPECT_THROW(finesse_limit(0.0), ParameterError);
}

TEST(DrudeIndex, NoCarriersGivesBackground) {
  const DrudeModel m{3.6, 0.0, 1e13};
  const auto n = drude_index(m, 1650e-9);
  EXPECT_NEAR(n.n, std::sqrt(3.6), 1e-15);
  EXPECT_EQ(n.kappa, 0.0);
}

TEST(DrudeIndex, LosslessAbovePlasmaEdge) {
  const double w = angular_frequency(1650e-9);
  const DrudeModel m{3.6, 0.5 * w, 0.0};
  const auto n = drude_index(m, 1650e-9);
  EXPECT_NEAR(n.kappa, 0.0, 1e-15);
  EXPECT_NEAR(n.n, std::sqrt(3.6 - 0.25), 1e-12);
}

TEST(DrudeIndex, ZnOCarriersAgainstExtendedPrecision) {
  const auto m = DrudeModel::from_carriers(2e25, 37e-4);
  const double e = constants::elementary_charge;
  const double mstar = 0.28 * constants::electron_mass;
  EXPECT_NEAR(m.plasma_frequency,
              std::sqrt(2e25 * e * e / (constants::vacuum_permittivity * mstar)),
              1e-12 * m.plasma_frequency);
  EXPECT_NEAR(m.damping, e / (mstar * 37e-4), 1e-12 * m.damping);
  const auto got = drude_index(m, 1650e-9);
  const auto [n, k] = index_oracle(m, 1650e-9);
  EXPECT_NEAR(got.n, n, 1e-12 * n);
  EXPECT_NEAR(got.kappa, k, 1e-10 * k);
  EXPECT_GT(got.kappa, 0.0);
}

// Property: n~^2 reproduces eps(w) to 1e-12.
TEST(DrudeIndex, SquareIsPermittivity) {
  for (double lambda : {400e-9, 1e-6, 1650e-9, 5e-6, 20e-6}) {
    for (double wp : {1e14, 1e15, 3e15}) {
      for (double g : {1e12, 1e14, 1e15}) {
        const DrudeModel m{3.6, wp, g};
        const auto idx = drude_index(m, lambda);
        EXPECT_GE(idx.n, 0.0);
        EXPECT_GE(idx.kappa, 0.0);
        const std::complex<double> nt(idx.n, idx.kappa);
        const auto eps = m.permittivity(angular_frequency(lambda));
        EXPECT_LT(std::abs(nt * nt - eps), 1e-12 * std::abs(eps));
      }
    }
  }
}

TEST(DrudeIndex, KappaShrinksWithDamping) {
  const double w = angular_frequency(1650e-9);
  double previous = INFINITY;
  for (double g = w / 10.0; g > w * 1e-6; g /= 3.0) {
    const double k = drude_index({3.6, 0.5 * w, g}, 1650e-9).kappa;
    EXPECT_LE(k, previous);
    previous = k;
  }
}

TEST(LambdaCubed, InRegime) {
  const double w = angular_frequency(1650e-9);
  const auto r = lambda_cubed_ratio({3.6, w / 10.0, w / 100.0}, 1650e-9);
  EXPECT_GE(r.ratio, 7.2);
  EXPECT_LE(r.ratio, 8.8);
  EXPECT_FALSE(r.regime_warning);
  // Same ratio from two direct evaluations.
  const DrudeModel m{3.6, w / 10.0, w / 100.0};
  EXPECT_DOUBLE_EQ(r.ratio, drude_index(m, 3300e-9).kappa / drude_index(m, 1650e-9).kappa);
}

TEST(LambdaCubed, RegimeViolationFlagged) {
  const double w = angular_frequency(1650e-9);
  EXPECT_TRUE(lambda_cubed_ratio({3.6, w / 10.0, w}, 1650e-9).regime_warning);
  EXPECT_TRUE(lambda_cubed_ratio({3.6, 2.0 * w, w / 100.0}, 1650e-9).regime_warning);
}

TEST(LambdaCubed, WeakDampingLimitIsEight) {
  // kappa ~ wp^2 gamma / (2 n w^3) to first order in gamma; n is nearly
  // constant when wp << w.
  const double w = angular_frequency(1650e-9);
  const auto r = lambda_cubed_ratio({3.6, w * 1e-3, w * 1e-6}, 1650e-9);
  EXPECT_NEAR(r.ratio, 8.0, 0.08);
}

TEST(Conversions, SelfInverse) {
  for (double kappa : {1e-6, 1e-3, 0.04, 1.2}) {
    for (double lambda : {300e-9, 1650e-9}) {
      EXPECT_NEAR(extinction_from_absorption(absorption_coefficient(kappa, lambda), lambda), kappa,
                  1e-15 * kappa);
    }
  }
  EXPECT_NEAR(photon_energy_ev(wavelength_from_energy_ev(3.3)), 3.3, 1e-14);
  EXPECT_NEAR(photon_energy_ev(1239.84198e-9), 1.0, 1e-8);
}

TEST(AbsorptionSpectrum, Validation) {
  EXPECT_THROW(AbsorptionSpectrum({{3.0, 1.0}, {3.0, 2.0}}), ParameterError);
  EXPECT_THROW(AbsorptionSpectrum({{3.0, 1.0}, {2.9, 2.0}}), ParameterError);
  EXPECT_THROW(AbsorptionSpectrum({{3.0, -1.0}}), ParameterError);
  const auto s = AbsorptionSpectrum::from_index(
      {{2.0, 0.1, 400e-9}, {2.0, 0.2, 350e-9}, {2.0, 0.05, 500e-9}});
  ASSERT_EQ(s.points().size(), 3u);
  EXPECT_LT(s.points()[0].energy_ev, s.points()[1].energy_ev);
}

TEST(Tauc, ExactOnLinearData) {
  const auto fit = tauc_bandgap(linear_edge(3.3, 4e10, 3.0, 3.8, 81), {3.35, 3.7});
  EXPECT_NEAR(fit.band_gap_ev.value(), 3.3, 1e-12);
  EXPECT_NEAR(fit.slope, 4e10, 1e-3);
  EXPECT_GE(fit.points_used, 4u);
}

TEST(Tauc, IdenticalEdgesGiveIdenticalGaps) {
  const auto before = tauc_bandgap(linear_edge(3.3, 2e10, 3.0, 3.8, 81), {3.35, 3.7});
  const auto after = tauc_bandgap(linear_edge(3.3, 5e10, 3.0, 3.8, 81), {3.35, 3.7});
  EXPECT_NEAR(before.band_gap_ev.value(), after.band_gap_ev.value(), 1e-12);
}

TEST(Tauc, LinearAlphaNearThreshold) {
  // alpha = a (E - 3.3) above the edge. (alpha E)^2 is then quadratic in
  // E - 3.3, so only a narrow window next to threshold extrapolates back
  // to the edge; its bias is about a sixth of the window width.
  std::vector<SpectrumPoint> pts;
  for (int i = 0; i <= 200; ++i) {
    const double e = 3.0 + 0.004 * i;
    pts.push_back({e, e > 3.3 ? 1e7 * (e - 3.3) : 0.0});
  }
  const auto fit = tauc_bandgap(AbsorptionSpectrum(pts), {3.3, 3.341});
  EXPECT_NEAR(fit.band_gap_ev.value(), 3.3, 0.041 / 6.0 + 1e-3);
  EXPECT_GT(fit.band_gap_ev.value(), 3.3);
  EXPECT_GT(fit.band_gap_ev.sigma(), 0.0);
}

TEST(Tauc, EdgeDetectionErrors) {
  const auto s = linear_edge(3.3, 4e10, 3.0, 3.8, 81);
  EXPECT_THROW(tauc_bandgap(s, {3.35, 3.37}), EdgeDetectionError);
  std::vector<SpectrumPoint> falling;
  for (int i = 0; i < 10; ++i) falling.push_back({3.0 + 0.1 * i, 1e6 * (10 - i)});
  EXPECT_THROW(tauc_bandgap(AbsorptionSpectrum(falling), {3.0, 4.0}), EdgeDetectionError);
  EXPECT_THROW(tauc_bandgap(s, {3.5, 3.4}), ParameterError);
}

TEST(ReadSpectrumCsv, BothLayouts) {
  std::istringstream abs_csv("# measured\nenergy_eV,alpha_per_cm\n3.2,0\n3.3,100\n3.4,2000\n");
  const auto a = read_spectrum_csv(abs_csv);
  ASSERT_EQ(a.points().size(), 3u);
  EXPECT_DOUBLE_EQ(a.points()[2].alpha_per_m, 2000.0 * 100.0);

  std::istringstream idx_csv("wavelength_nm,n,kappa\n400,2.0,0.1\n375,2.1,0.2\n");
  const auto b = read_spectrum_csv(idx_csv);
  ASSERT_EQ(b.points().size(), 2u);
  EXPECT_NEAR(b.points()[0].alpha_per_m, absorption_coefficient(0.1, 400e-9), 1e-6);
  EXPECT_NEAR(b.points()[1].alpha_per_m, absorption_coefficient(0.2, 375e-9), 1e-6);

  std::istringstream unknown("lambda,k\n1,2\n");
  EXPECT_THROW(read_spectrum_csv(unknown), InputError);
  std::istringstream bad("energy_eV,alpha_per_cm\n3.2\n");
  EXPECT_THROW(read_spectrum_csv(bad), InputError);
  std::istringstream unordered("energy_eV,alpha_per_cm\n3.3,1\n3.2,1\n");
  EXPECT_THROW(read_spectrum_csv(unordered), InputError);
}
