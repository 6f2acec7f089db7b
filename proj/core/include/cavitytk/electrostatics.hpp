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

namespace cavitytk::electrostatics {

/// Stray charges Q1 at -x_Q and Q2 at +x_Q acting on a test charge q on
/// the axis between them. Charges are in elementary charges.
struct ChargeScenario {
  double q1_e = 0.0;
  double q2_e = 0.0;
  double x_q_m = 0.0;
  double test_charge_e = 1.0;

  /// Throws ParameterError unless x_Q > 0.
  void validate() const;
};

/// Second-order expansion U = s_q (A x + B x^2 + C) of the two-charge
/// potential. A, B, C carry coulombs per metre^2, ^3 and ^1.
struct ExpansionCoefficients {
  double a = 0.0;        // (Q2 - Q1) / x_Q^2
  double b = 0.0;        // (Q1 + Q2) / x_Q^3
  double c_const = 0.0;  // (Q1 + Q2) / x_Q, unobservable offset
  double s_q = 0.0;      // q / (4 pi eps0), V m
};

ExpansionCoefficients expansion_coefficients(const ChargeScenario& s);

/// Exact Coulomb energy (J) for |x| < x_Q; DomainError otherwise.
double potential_exact(const ChargeScenario& s, double x_m);

/// Quadratic-order energy (J). The expansion is only meaningful for
/// |x| < x_Q, so the same DomainError applies.
double potential_quadratic(const ChargeScenario& s, double x_m);
double potential_quadratic(const ExpansionCoefficients& coeffs, double x_m);

/// Axial field of the quadratic model, -(A + 2 B x) / (4 pi eps0), in V/m.
double field_at(const ChargeScenario& s, double x_m);

/// Exact axial Coulomb field of the two charges, in V/m.
double field_exact(const ChargeScenario& s, double x_m);

/// Uniform axial field of two infinite sheets at -x_Q (sigma1) and +x_Q
/// (sigma2), E_x = -(sigma2 - sigma1) / (2 eps0). Densities in C/m^2.
double sheet_pair_field(double sigma1, double sigma2);

/// q (sigma2 - sigma1) / (2 eps0) (x - x_Q) for the sheet pair, in J.
double sheet_pair_energy(double sigma1, double sigma2, double x_m, double x_q_m,
                         double test_charge_e = 1.0);

/// Field magnitude of one infinite sheet, sigma / (2 eps0).
double single_sheet_field(double sigma);

/// On-axis energy of a test charge at height x above a uniformly charged
/// disc of radius r holding charge Q: 2 s_q Q (sqrt(r^2 + x^2) - x) / r^2.
double disc_potential_energy(double charge_e, double radius_m, double x_m,
                             double test_charge_e = 1.0);

/// Energy of the same test charge at distance x from a point charge Q.
double point_potential_energy(double charge_e, double x_m, double test_charge_e = 1.0);

struct DiscPointRatios {
  double u_ratio;  ///< U_disc / U_point
  double e_ratio;  ///< E_disc / E_point
};

/// Finite-mirror calibration of the point-charge model.
DiscPointRatios disc_point_ratios(double radius_m, double x_m);

}  // namespace cavitytk::electrostatics
