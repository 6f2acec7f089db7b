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

#include "cavitytk/film_optics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include <fmt/format.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/errors.hpp"
#include "cavitytk/text.hpp"

namespace cavitytk::film {

using constants::pi;

namespace {
constexpr double kJoulePerEv = constants::elementary_charge;
constexpr double kRegimeRatio = 10.0;   // w / gamma floor
constexpr double kPlasmaFraction = 0.1; // ceiling on wp^2 / (w^2 eps_inf)
}  // namespace

double power_attenuation(double kappa, double wavelength_m, double path_m) {
  if (kappa < 0.0 || !(wavelength_m > 0.0) || path_m < 0.0) {
    throw ParameterError("attenuation inputs must be non-negative with a positive wavelength");
  }
  return std::exp(-(4.0 * pi / wavelength_m) * kappa * path_m);
}

double finesse_limit(double round_trip_loss) {
  if (!(round_trip_loss > 0.0 && round_trip_loss < 1.0)) {
    throw ParameterError(fmt::format("round-trip loss {} outside (0, 1)", round_trip_loss));
  }
  return 2.0 * pi / round_trip_loss;
}

DrudeModel DrudeModel::from_carriers(double carrier_density, double mobility,
                                     double effective_mass_ratio, double eps_inf) {
  if (!(carrier_density > 0.0) || !(mobility > 0.0) || !(effective_mass_ratio > 0.0) ||
      !(eps_inf > 0.0)) {
    throw ParameterError("Drude carrier parameters must be positive");
  }
  const double mass = effective_mass_ratio * constants::electron_mass;
  const double e = constants::elementary_charge;
  DrudeModel model;
  model.eps_inf = eps_inf;
  model.plasma_frequency = std::sqrt(carrier_density * e * e / (constants::vacuum_permittivity * mass));
  model.damping = e / (mass * mobility);
  return model;
}

std::complex<double> DrudeModel::permittivity(double w) const {
  const std::complex<double> denom(w * w, damping * w);
  return eps_inf - plasma_frequency * plasma_frequency / denom;
}

double angular_frequency(double wavelength_m) {
  return 2.0 * pi * constants::speed_of_light / wavelength_m;
}

ComplexIndex drude_index(const DrudeModel& model, double wavelength_m) {
  if (!(wavelength_m > 0.0)) throw ParameterError("wavelength must be positive");
  const auto index = std::sqrt(model.permittivity(angular_frequency(wavelength_m)));
  // Principal branch: Re >= 0; Im(eps) >= 0 keeps Im >= 0.
  return {std::max(index.real(), 0.0), std::max(index.imag(), 0.0), wavelength_m};
}

LambdaCubedRatio lambda_cubed_ratio(const DrudeModel& model, double wavelength_m) {
  const auto in_regime = [&](double lambda) {
    const double w = angular_frequency(lambda);
    const double wp2 = model.plasma_frequency * model.plasma_frequency;
    return w >= kRegimeRatio * model.damping && wp2 / (w * w) <= kPlasmaFraction * model.eps_inf;
  };
  const double k1 = drude_index(model, wavelength_m).kappa;
  const double k2 = drude_index(model, 2.0 * wavelength_m).kappa;
  LambdaCubedRatio out;
  out.ratio = k1 > 0.0 ? k2 / k1 : std::numeric_limits<double>::quiet_NaN();
  out.regime_warning = !in_regime(wavelength_m) || !in_regime(2.0 * wavelength_m);
  return out;
}

double absorption_coefficient(double kappa, double wavelength_m) {
  return 4.0 * pi * kappa / wavelength_m;
}

double extinction_from_absorption(double alpha_per_m, double wavelength_m) {
  return alpha_per_m * wavelength_m / (4.0 * pi);
}

double photon_energy_ev(double wavelength_m) {
  return constants::planck * constants::speed_of_light / (wavelength_m * kJoulePerEv);
}

double wavelength_from_energy_ev(double energy_ev) {
  return constants::planck * constants::speed_of_light / (energy_ev * kJoulePerEv);
}

AbsorptionSpectrum::AbsorptionSpectrum(std::vector<SpectrumPoint> points)
    : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!(points_[i].alpha_per_m >= 0.0)) {
      throw ParameterError(fmt::format("negative absorption at point {}", i));
    }
    if (i > 0 && !(points_[i].energy_ev > points_[i - 1].energy_ev)) {
      throw ParameterError(fmt::format("photon energies not strictly increasing at point {}", i));
    }
  }
}

AbsorptionSpectrum AbsorptionSpectrum::from_index(const std::vector<ComplexIndex>& rows) {
  std::vector<SpectrumPoint> points;
  points.reserve(rows.size());
  for (const auto& row : rows) {
    if (!(row.wavelength_m > 0.0)) throw ParameterError("wavelength must be positive");
    points.push_back({photon_energy_ev(row.wavelength_m),
                      absorption_coefficient(row.kappa, row.wavelength_m)});
  }
  std::sort(points.begin(), points.end(),
            [](const SpectrumPoint& a, const SpectrumPoint& b) { return a.energy_ev < b.energy_ev; });
  return AbsorptionSpectrum(std::move(points));
}

TaucFit tauc_bandgap(const AbsorptionSpectrum& spectrum, std::pair<double, double> window) {
  const auto [lo, hi] = window;
  if (!(lo < hi)) throw ParameterError("edge window must satisfy low < high");

  std::vector<double> x;
  std::vector<double> y;
  for (const auto& p : spectrum.points()) {
    if (p.energy_ev < lo || p.energy_ev > hi) continue;
    const double alpha_cm = p.alpha_per_m / 100.0;
    const double ordinate = alpha_cm * p.energy_ev;
    x.push_back(p.energy_ev);
    y.push_back(ordinate * ordinate);
  }
  const std::size_t n = x.size();
  if (n < 4) {
    throw EdgeDetectionError(fmt::format("edge window holds {} points, at least 4 required", n));
  }

  // Centred regression: y = slope (x - x_mean) + y_mean.
  double x_mean = 0.0;
  double y_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x_mean += x[i];
    y_mean += y[i];
  }
  x_mean /= static_cast<double>(n);
  y_mean /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - x_mean) * (x[i] - x_mean);
    sxy += (x[i] - x_mean) * (y[i] - y_mean);
  }
  const double slope = sxy / sxx;
  if (!(slope > 0.0)) {
    throw EdgeDetectionError(fmt::format("non-positive Tauc slope {}", slope));
  }
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (y_mean + slope * (x[i] - x_mean));
    sse += r * r;
  }
  const double s2 = sse / static_cast<double>(n - 2);
  const double gap = x_mean - y_mean / slope;
  const double var_mean = s2 / static_cast<double>(n);
  const double var_slope = s2 / sxx;
  const double var_gap =
      var_mean / (slope * slope) + y_mean * y_mean * var_slope / (slope * slope * slope * slope);

  TaucFit fit;
  fit.band_gap_ev = UncertainQuantity(gap, std::sqrt(var_gap));
  fit.slope = slope;
  fit.intercept = y_mean - slope * x_mean;
  fit.points_used = n;
  return fit;
}

AbsorptionSpectrum read_spectrum_csv(std::istream& in) {
  enum class Layout { unknown, index, absorption } layout = Layout::unknown;
  std::vector<ComplexIndex> index_rows;
  std::vector<SpectrumPoint> absorption_rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto body = text::trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = text::split(body, ',');
    if (layout == Layout::unknown) {
      std::vector<std::string> names;
      for (auto f : fields) names.push_back(text::to_lower(f));
      if (names == std::vector<std::string>{"wavelength_nm", "n", "kappa"}) {
        layout = Layout::index;
      } else if (names == std::vector<std::string>{"energy_ev", "alpha_per_cm"}) {
        layout = Layout::absorption;
      } else {
        throw InputError(fmt::format(
            "line {}: header must be `wavelength_nm,n,kappa` or `energy_eV,alpha_per_cm`",
            line_number));
      }
      continue;
    }
    const std::size_t expected = layout == Layout::index ? 3 : 2;
    std::vector<double> values(fields.size());
    bool ok = fields.size() == expected;
    for (std::size_t i = 0; ok && i < fields.size(); ++i) ok = text::parse_double(fields[i], values[i]);
    if (!ok) throw InputError(fmt::format("line {}: expected {} numbers", line_number, expected));
    if (layout == Layout::index) {
      index_rows.push_back({values[1], values[2], values[0] * 1e-9});
    } else {
      absorption_rows.push_back({values[0], values[1] * 100.0});
    }
  }
  try {
    switch (layout) {
      case Layout::index: return AbsorptionSpectrum::from_index(index_rows);
      case Layout::absorption: return AbsorptionSpectrum(std::move(absorption_rows));
      case Layout::unknown: break;
    }
  } catch (const ParameterError& e) {
    throw InputError(e.what());
  }
  throw InputError("spectrum file has no header");
}

AbsorptionSpectrum read_spectrum_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open {}", path.string()));
  return read_spectrum_csv(in);
}

}  // namespace cavitytk::film
