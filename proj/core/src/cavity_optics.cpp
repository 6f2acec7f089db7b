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

#include "cavitytk/cavity_optics.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/errors.hpp"

namespace cavitytk::cavity {

using constants::pi;

Reflectivity Reflectivity::from_deficit(double deficit) {
  if (!(deficit > 0.0 && deficit < 1.0)) {
    throw ParameterError(fmt::format("reflectivity deficit 1 - r = {} outside (0, 1)", deficit));
  }
  return Reflectivity(deficit);
}

Reflectivity Reflectivity::from_amplitude(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw ParameterError(fmt::format("amplitude reflectivity {} outside (0, 1)", r));
  }
  return Reflectivity(1.0 - r);
}

double finesse_from_reflectivities(Reflectivity ri, Reflectivity rj) {
  const double di = ri.deficit();
  const double dj = rj.deficit();
  // 1 - ri rj evaluated without cancellation.
  const double one_minus_product = di + dj - di * dj;
  return pi * std::sqrt(ri.amplitude() * rj.amplitude()) / one_minus_product;
}

double finesse_from_reflectivities(double ri, double rj) {
  return finesse_from_reflectivities(Reflectivity::from_amplitude(ri),
                                     Reflectivity::from_amplitude(rj));
}

Reflectivity symmetric_mirror_reflectivity(double f00) {
  if (!(f00 > 0.0) || !std::isfinite(f00)) {
    throw ParameterError(fmt::format("finesse {} must be positive and finite", f00));
  }
  // 1 - (sqrt(4F^2 + pi^2) - pi) / 2F, with 2F - sqrt(4F^2 + pi^2) rationalised.
  const double root = std::sqrt(4.0 * f00 * f00 + pi * pi);
  const double deficit = (pi - pi * pi / (2.0 * f00 + root)) / (2.0 * f00);
  return Reflectivity::from_deficit(deficit);
}

Reflectivity modified_mirror_reflectivity(double f01, Reflectivity r0) {
  // r1 = g^2 / r0 where g is the symmetric-cavity root for F01.
  const double dg = symmetric_mirror_reflectivity(f01).deficit();
  const double d0 = r0.deficit();
  const double d1 = (dg * (2.0 - dg) - d0) / (1.0 - d0);
  if (!(d1 > 0.0 && d1 < 1.0)) {
    throw ConsistencyError(fmt::format(
        "finesse {} is incompatible with r0 = 1 - {:.6e}: r1 = 1 - {:.6e} outside (0, 1)", f01,
        d0, d1));
  }
  return Reflectivity::from_deficit(d1);
}

UncertainQuantity r0_from_symmetric_finesse(const UncertainQuantity& f00) {
  if (!(f00.value() > 0.0)) throw ParameterError("finesse must be positive");
  return propagate_linear(
      [](std::span<const double> x) {
        if (!(x[0] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
        return symmetric_mirror_reflectivity(x[0]).amplitude();
      },
      {f00});
}

UncertainQuantity r1_from_asymmetric_finesse(const UncertainQuantity& f01,
                                             const UncertainQuantity& r0) {
  if (!(f01.value() > 0.0)) throw ParameterError("finesse must be positive");
  const auto r0_state = Reflectivity::from_amplitude(r0.value());
  // Validates consistency at the central values (throws ConsistencyError).
  modified_mirror_reflectivity(f01.value(), r0_state);
  return propagate_linear(
      [](std::span<const double> x) {
        const double g = symmetric_mirror_reflectivity(x[0]).amplitude();
        return g * g / x[1];
      },
      {f01, r0});
}

double excess_reflection_loss(double f00, double f01) {
  const double d0 = symmetric_mirror_reflectivity(f00).deficit();
  const double d1 = modified_mirror_reflectivity(f01, Reflectivity::from_deficit(d0)).deficit();
  // (1 - d0)^2 - (1 - d1)^2 factored.
  return (d1 - d0) * (2.0 - d0 - d1);
}

double extinction_coefficient(double f00, double f01, double thickness_m, double wavelength_m) {
  if (!(thickness_m > 0.0)) throw ParameterError("film thickness must be positive");
  if (!(wavelength_m > 0.0)) throw ParameterError("wavelength must be positive");
  const double excess = excess_reflection_loss(f00, f01);
  if (!(excess < 1.0)) {
    throw DomainError(fmt::format("ln(1 - r0^2 + r1^2) undefined for excess loss {}", excess));
  }
  return -(wavelength_m / (8.0 * pi * thickness_m)) * std::log1p(-excess);
}

double extinction_first_order(double f00, double f01, double thickness_m, double wavelength_m) {
  return (wavelength_m / (4.0 * thickness_m)) * (1.0 / f01 - 1.0 / f00);
}

ExtinctionResult extinction_from_finesse(const UncertainQuantity& f00,
                                         const UncertainQuantity& f01,
                                         const UncertainQuantity& thickness_m,
                                         double wavelength_m, const ExtinctionOptions& options) {
  if (!(f00.value() > 0.0) || !(f01.value() > 0.0)) {
    throw ParameterError("finesse values must be positive");
  }
  if (!(thickness_m.value() > 0.0)) throw ParameterError("film thickness must be positive");
  if (thickness_m.dimension() != dim::length) {
    throw DimensionError("film thickness must be a length");
  }

  const double kappa = extinction_coefficient(f00.value(), f01.value(), thickness_m.value(),
                                              wavelength_m);

  // Samples that leave the model domain count as non-finite.
  const ScalarFunction model = [wavelength_m](std::span<const double> x) {
    try {
      return extinction_coefficient(x[0], x[1], x[2], wavelength_m);
    } catch (const Error&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  const UncertainQuantity inputs[] = {f00, f01, thickness_m};
  const auto mc = propagate_monte_carlo(model, inputs, options.samples, options.seed);
  const auto linear = propagate_linear(model, inputs);

  ExtinctionResult result;
  result.kappa = UncertainQuantity(kappa, mc.quantity.sigma());
  result.monte_carlo_mean = mc.quantity.value();
  result.linear_sigma = linear.sigma();
  result.excess_loss = excess_reflection_loss(f00.value(), f01.value());
  result.negative_kappa = f01.value() > f00.value();
  return result;
}

std::string to_string(MirrorLabel label) {
  switch (label) {
    case MirrorLabel::m0: return "M0";
    case MirrorLabel::m_zno: return "M_ZnO";
    case MirrorLabel::m_annealed: return "M_A";
    case MirrorLabel::custom: break;
  }
  return "custom";
}

MirrorState::MirrorState(Reflectivity r_, double transmission_, MirrorLabel label_)
    : r(r_), transmission(transmission_), label(label_) {
  if (!(transmission >= 0.0) || transmission > r.power_loss()) {
    throw ParameterError(fmt::format("transmission {} outside [0, 1 - r^2 = {}]", transmission,
                                     r.power_loss()));
  }
}

ResonantResponse resonant_response(const MirrorState& a, const MirrorState& b) {
  const double rb = b.r.amplitude();
  const double denom = a.r.deficit() + b.r.deficit() - a.r.deficit() * b.r.deficit();
  const double transmission = a.transmission * b.transmission / (denom * denom);
  // r_a - r_b (r_a^2 + T_a) = (r_a - r_b) + r_b A_a.
  const double numerator = (b.r.deficit() - a.r.deficit()) + rb * a.absorption();
  const double amplitude = numerator / denom;
  return {transmission, amplitude * amplitude};
}

void CavityAssembly::validate(bool needs_film) const {
  if (!(wavelength_m > 0.0)) throw ParameterError("wavelength must be positive");
  if (needs_film && !(film_thickness.value() > 0.0)) {
    throw ParameterError("film thickness must be positive for extinction extraction");
  }
}

}  // namespace cavitytk::cavity
