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

#include <cstdint>
#include <string>

#include "cavitytk/quantities.hpp"

namespace cavitytk::cavity {

/// Amplitude reflectivity r of a mirror, stored as the deficit 1 - r so
/// that mirrors with r within 1e-8 of unity keep full relative precision.
class Reflectivity {
 public:
  /// Throws ParameterError unless 0 < deficit < 1.
  static Reflectivity from_deficit(double deficit);
  /// Throws ParameterError unless 0 < r < 1.
  static Reflectivity from_amplitude(double r);

  double amplitude() const { return 1.0 - deficit_; }
  double deficit() const { return deficit_; }
  /// Transmittance plus loss, 1 - r^2.
  double power_loss() const { return deficit_ * (2.0 - deficit_); }
  double power_reflectance() const { return amplitude() * amplitude(); }

 private:
  explicit Reflectivity(double deficit) : deficit_(deficit) {}
  double deficit_;
};

/// F_ij = pi sqrt(r_i r_j) / (1 - r_i r_j).
double finesse_from_reflectivities(Reflectivity ri, Reflectivity rj);
double finesse_from_reflectivities(double ri, double rj);

/// r0 of two identical mirrors with finesse F00 (closed-form inverse of
/// finesse_from_reflectivities(r0, r0)).
Reflectivity symmetric_mirror_reflectivity(double f00);

/// r1 of the modified mirror in an (r0, r1) cavity of finesse F01.
/// Throws ConsistencyError when the result leaves (0, 1).
Reflectivity modified_mirror_reflectivity(double f01, Reflectivity r0);

UncertainQuantity r0_from_symmetric_finesse(const UncertainQuantity& f00);
UncertainQuantity r1_from_asymmetric_finesse(const UncertainQuantity& f01,
                                             const UncertainQuantity& r0);

/// r0^2 - r1^2, the power reflection lost when one mirror is modified.
double excess_reflection_loss(double f00, double f01);

struct ExtinctionOptions {
  std::size_t samples = 100'000;
  std::uint64_t seed = 0;
};

struct ExtinctionResult {
  UncertainQuantity kappa;  ///< direct evaluation, Monte-Carlo sigma
  double monte_carlo_mean = 0.0;
  double linear_sigma = 0.0;
  double excess_loss = 0.0;  ///< r0^2 - r1^2 at the central values
  /// Set when F01 > F00: the modified mirror lost less than the reference
  /// (annealing), giving a negative kappa.
  bool negative_kappa = false;
};

/// Film extinction from the finesse drop, attributing all excess loss to a
/// double pass through a film of thickness h:
///   kappa = -(lambda / (8 pi h)) ln(1 - r0^2 + r1^2).
/// Throws DomainError if the log argument is not positive.
ExtinctionResult extinction_from_finesse(const UncertainQuantity& f00,
                                         const UncertainQuantity& f01,
                                         const UncertainQuantity& thickness_m,
                                         double wavelength_m, const ExtinctionOptions& options = {});

/// kappa at the central values only.
double extinction_coefficient(double f00, double f01, double thickness_m, double wavelength_m);

/// Small-loss expansion (lambda / 4h)(1/F01 - 1/F00).
double extinction_first_order(double f00, double f01, double thickness_m, double wavelength_m);

enum class MirrorLabel { m0, m_zno, m_annealed, custom };

std::string to_string(MirrorLabel label);

struct MirrorState {
  /// Throws ParameterError unless 0 <= T <= 1 - r^2.
  MirrorState(Reflectivity r, double transmission, MirrorLabel label = MirrorLabel::custom);

  Reflectivity r;
  double transmission;
  MirrorLabel label;

  /// Absorption and scatter, 1 - r^2 - T.
  double absorption() const { return r.power_loss() - transmission; }
};

struct ResonantResponse {
  double transmission;   ///< T_a T_b / (1 - r_a r_b)^2
  double reflection_dip; ///< ((r_a - r_b (r_a^2 + T_a)) / (1 - r_a r_b))^2
};

/// On-resonance power transmission and reflection for light incident on
/// mirror_a.
ResonantResponse resonant_response(const MirrorState& mirror_a, const MirrorState& mirror_b);

struct CavityAssembly {
  MirrorState mirror_a;
  MirrorState mirror_b;
  double length_m;
  UncertainQuantity fsr;             // Hz
  UncertainQuantity film_thickness;  // m
  double wavelength_m;

  /// Throws ParameterError on a non-positive wavelength, or a non-positive
  /// film thickness when `needs_film` is set.
  void validate(bool needs_film) const;
};

}  // namespace cavitytk::cavity
