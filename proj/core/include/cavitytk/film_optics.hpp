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

#include <complex>
#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

#include "cavitytk/quantities.hpp"

namespace cavitytk::film {

/// n + i kappa at a given vacuum wavelength.
struct ComplexIndex {
  double n = 1.0;
  double kappa = 0.0;
  double wavelength_m = 0.0;
};

/// exp(-(4 pi / lambda) kappa z): power surviving a path z in the medium.
double power_attenuation(double kappa, double wavelength_m, double path_m);

/// Finesse ceiling set by a fractional round-trip power loss alone,
/// 2 pi / loss (small-loss form of pi sqrt(r_i r_j) / (1 - r_i r_j)).
double finesse_limit(double round_trip_loss);

/// Free-carrier dielectric response eps(w) = eps_inf - wp^2 / (w^2 + i gamma w).
struct DrudeModel {
  double eps_inf = 3.6;
  double plasma_frequency = 0.0;  // rad/s
  double damping = 0.0;           // rad/s

  /// Builds wp and gamma from a carrier density (1/m^3), an effective mass
  /// in units of the electron mass and a mobility (m^2/(V s)):
  ///   wp^2 = n e^2 / (eps0 m*),  gamma = e / (m* mu).
  static DrudeModel from_carriers(double carrier_density, double mobility,
                                  double effective_mass_ratio = kZnOEffectiveMass,
                                  double eps_inf = kZnOEpsInf);

  std::complex<double> permittivity(double angular_frequency) const;

  /// Conduction-band effective mass commonly used for ZnO, in m_e.
  static constexpr double kZnOEffectiveMass = 0.28;
  static constexpr double kZnOEpsInf = 3.6;
};

double angular_frequency(double wavelength_m);

/// Principal square root of the Drude permittivity.
ComplexIndex drude_index(const DrudeModel& model, double wavelength_m);

struct LambdaCubedRatio {
  double ratio = 0.0;  ///< kappa(2 lambda) / kappa(lambda)
  /// Set when either wavelength violates w >= 10 gamma or
  /// wp^2 / w^2 <= 0.1 eps_inf.
  bool regime_warning = false;
};

LambdaCubedRatio lambda_cubed_ratio(const DrudeModel& model, double wavelength_m);

/// Absorption coefficient alpha = 4 pi kappa / lambda, in 1/m.
double absorption_coefficient(double kappa, double wavelength_m);
/// Inverse of absorption_coefficient.
double extinction_from_absorption(double alpha_per_m, double wavelength_m);

/// Photon energy in eV at a vacuum wavelength, and back.
double photon_energy_ev(double wavelength_m);
double wavelength_from_energy_ev(double energy_ev);

struct SpectrumPoint {
  double energy_ev;
  double alpha_per_m;
};

/// Absorption spectrum with strictly increasing photon energies.
class AbsorptionSpectrum {
 public:
  /// Sorts nothing: throws ParameterError unless energies strictly
  /// increase and every alpha is non-negative.
  explicit AbsorptionSpectrum(std::vector<SpectrumPoint> points);

  /// Builds from (wavelength, n, kappa) rows in any wavelength order.
  static AbsorptionSpectrum from_index(const std::vector<ComplexIndex>& rows);

  const std::vector<SpectrumPoint>& points() const { return points_; }

 private:
  std::vector<SpectrumPoint> points_;
};

struct TaucFit {
  UncertainQuantity band_gap_ev;
  double slope = 0.0;      ///< d(alpha E)^2 / dE
  double intercept = 0.0;  ///< (alpha E)^2 at E = 0
  std::size_t points_used = 0;
};

/// Direct-gap Tauc extrapolation: least-squares line of (alpha E)^2 against
/// E over the closed window, band gap at its zero crossing. alpha is taken
/// in 1/cm for the ordinate so slopes stay in a readable range. Throws
/// EdgeDetectionError for fewer than 4 window points or a non-positive slope.
TaucFit tauc_bandgap(const AbsorptionSpectrum& spectrum, std::pair<double, double> edge_window_ev);

/// Spectrum CSV, auto-detected by header: `wavelength_nm,n,kappa` or
/// `energy_eV,alpha_per_cm`. Throws InputError.
AbsorptionSpectrum read_spectrum_csv(std::istream& in);
AbsorptionSpectrum read_spectrum_csv(const std::filesystem::path& path);

}  // namespace cavitytk::film
