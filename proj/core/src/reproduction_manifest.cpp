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

// Reproduction targets and their tolerances. Every row of
// `toolkit reproduce-paper` is declared here so the acceptance thresholds
// can be audited in one place.

#include <array>

#include "cavitytk/reports.hpp"

namespace cavitytk::reports {

namespace {

using T = Tolerance;

const std::array kManifest = {
    // Film extinction from the finesse table, h = 30 +- 2 nm, 1650 nm.
    ManifestEntry{"kappa_zno_27d", "kappa M_ZnO, 27 days", "1", 38e-5, T::absolute(3e-5), false,
                  "within the reference 1 sigma"},
    ManifestEntry{"kappa_zno_69d", "kappa M_ZnO, 69 days", "1", 16e-5, T::absolute(3e-5), false,
                  "within the reference 1 sigma"},
    ManifestEntry{"kappa_zno_128d", "kappa M_ZnO, 128 days", "1", 8.0e-5, T::absolute(0.7e-5), true,
                  "reference 8.0e-5 is not reproduced by the extinction formula from F01 = 19800, "
                  "although the same inputs reproduce r0^2 - r1^2 = 4.8e-5"},
    ManifestEntry{"kappa_a_69d", "kappa M_A, 69 days", "1", 6.7e-5, T::absolute(1.1e-5), false,
                  "within the reference 1 sigma"},
    ManifestEntry{"kappa_a_128d", "kappa M_A, 128 days", "1", 3.2e-5, T::absolute(0.4e-5), false,
                  "within the reference 1 sigma"},
    ManifestEntry{"excess_zno_69d", "r0^2 - r1^2 M_ZnO, 69 days", "1", 7.2e-5, T::relative(0.03),
                  false, ""},
    ManifestEntry{"excess_zno_128d", "r0^2 - r1^2 M_ZnO, 128 days", "1", 4.8e-5, T::relative(0.02),
                  false, ""},

    // Finesse from the 27-day linewidth and FSR.
    ManifestEntry{"finesse_27d", "finesse from 523 kHz / 7.410 GHz", "1", 14160.0,
                  T::absolute(250.0), false, "linear propagation sigma"},
    ManifestEntry{"finesse_27d_mc_sigma", "finesse Monte-Carlo sigma / linear sigma", "1", 1.0,
                  T::relative(0.2), false, "reference is the linear-propagation sigma"},
    ManifestEntry{"fsr_from_length", "c / 2d for d = 20.2 mm", "Hz", 7.410e9, T::relative(0.002),
                  false, "plane-wave estimate against the measured FSR"},

    // Disc calibration r = 125 um, x = 200 um.
    ManifestEntry{"disc_u_ratio", "U_disc / U_point", "1", 0.92, T::absolute(0.005), false,
                  "disc potential 2 s_q Q (sqrt(r^2 + x^2) - x) / r^2"},
    ManifestEntry{"disc_e_ratio", "E_disc / E_point", "1", 0.78, T::absolute(0.005), false, ""},

    // Yb+ trap, x_Q = 200 um, Omega_RF/2pi = 30 MHz, omega_x/2pi = 500 kHz.
    ManifestEntry{"cooling_q1", "cooling budget Q1 (J0^2 = 0.5)", "e", 1400.0, T::relative(0.05),
                  false, ""},
    ManifestEntry{"cooling_field", "cooling budget E_Q(x~)", "V/m", 49.0, T::relative(0.05), false,
                  ""},
    ManifestEntry{"cooling_displacement", "cooling budget x~", "m", 2.8e-6, T::relative(0.05),
                  false, ""},
    ManifestEntry{"coupling_displacement", "x~ at Q1 = 100 e", "m", 1650e-9 / 8.0,
                  T::relative(0.05), false, "reference is lambda_c / 8"},
    ManifestEntry{"coupling_field", "E_Q(x~) at Q1 = 100 e", "V/m", 3.6, T::relative(0.05), false,
                  ""},
    ManifestEntry{"lamb_dicke_q1", "Lamb-Dicke budget Q1 (k x_um = 0.2)", "e", 230.0,
                  T::relative(0.05), false, ""},
    ManifestEntry{"lamb_dicke_field", "Lamb-Dicke budget E_Q(x~)", "V/m", 8.2, T::relative(0.05),
                  false, ""},
    ManifestEntry{"lamb_dicke_displacement", "Lamb-Dicke budget x~", "m", 0.47e-6,
                  T::relative(0.05), false, ""},
    ManifestEntry{"lamb_dicke_micromotion", "Lamb-Dicke budget x_um", "m", 11e-9, T::relative(0.10),
                  false, ""},
    ManifestEntry{"zero_point_spread", "Yb+ zero-point spread", "m", 8e-9, T::relative(0.05), false,
                  ""},

    // Gate detuning at Q1 = Q2 = 630 e, Omega_2g/2pi = 10 kHz.
    ManifestEntry{"gate_ratio_secular", "delta_x / omega_x at Q1 = Q2 = 630 e", "1", 0.013,
                  T::absolute(0.001), false,
                  "the reference 0.013 is matched by the ratio to omega_x"},
    ManifestEntry{"gate_ratio_rabi", "delta_x / Omega_2g at Q1 = Q2 = 630 e", "1", 0.013,
                  T::range(0.0, 0.013), true,
                  "claimed delta_x / Omega_2g < 0.013 does not hold for Omega_2g/2pi = 10 kHz"},
    ManifestEntry{"gate_bound_q1", "Q1 = Q2 bound for delta_x / Omega_2g < 0.013", "e", 13.0,
                  T::relative(0.10), false, "reference derived from the same formulas"},

    // Rydberg 70S, alpha = 53.4 kHz (V/m)^-2.
    ManifestEntry{"rydberg_field", "E_Q(0) at Q1 = 54 e", "V/m", 1.9, T::relative(0.05), false, ""},
    ManifestEntry{"rydberg_shift", "delta_R / 2pi at Q1 = 54 e", "Hz", 100e3,
                  T::range(96e3, 100e3), false, "reference 100 kHz; band [96, 100] kHz"},
    ManifestEntry{"rydberg_tau_pi", "tau_pi at Q1 = 54 e", "s", 5e-6, T::relative(0.05), false, ""},
    ManifestEntry{"blockade_q1", "blockade budget Q1 (1 - F = 0.01, Omega_R/2pi = 5 MHz)", "e",
                  140.0, T::relative(0.05), false, ""},
    ManifestEntry{"blockade_field", "blockade budget E_Q(0)", "V/m", 5.1, T::relative(0.05), false,
                  ""},

    // Laser-induced charging.
    ManifestEntry{"charging_resistance", "film resistance, rho = 1e-4 Ohm m, h = 30 nm", "Ohm",
                  3.3e3, T::relative(0.01), false, ""},
    ManifestEntry{"charging_charge", "equilibrium charge, I/e = 4e11 1/s, C = 0.1 pF", "e", 120.0,
                  T::range(100.0, 160.0), false, "reference Q ~ 120 e"},
    ManifestEntry{"charging_rc", "discharge RC time", "s", 1e-9, T::range(0.0, 1e-9), false,
                  "reference is an upper bound"},
    ManifestEntry{"clipping_factor", "Gaussian clipping, w0 = 100 um, x_Q = 200 um", "1", 3.35e-4,
                  T::relative(0.01), false, ""},
    ManifestEntry{"photon_rate", "photo-electron rate, 0.2 mW at 369 nm", "1/s", 4e11,
                  T::relative(0.15), true,
                  "first-principles P lambda / (h c) is ~3.7e14 1/s; the quoted 4e11 is used "
                  "for the charge row"},

    // Hall-effect consistency, rho = 1 / (n e mu).
    ManifestEntry{"transport_zno1", "ZnO-1 predicted resistivity", "Ohm m", 8.6e-5,
                  T::relative(0.05), false, "n = 2e19 cm^-3, mu = 37 cm^2/(V s)"},
    ManifestEntry{"transport_zno2", "ZnO-2 predicted resistivity", "Ohm m", 13.2e-5,
                  T::relative(0.15), false, "n = 1.5e19 cm^-3, mu = 28 cm^2/(V s)"},
};

constexpr std::array<std::string_view, 3> kDocumented = {"kappa_zno_128d", "gate_ratio_rabi",
                                                         "photon_rate"};

}  // namespace

std::span<const ManifestEntry> reproduction_manifest() { return kManifest; }

std::span<const std::string_view> documented_discrepancies() { return kDocumented; }

}  // namespace cavitytk::reports
