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

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cavitytk {

/// Physical dimension as integer exponents of the SI base units
/// kilogram, metre, second and ampere.
struct Dimension {
  std::int8_t kg = 0;
  std::int8_t m = 0;
  std::int8_t s = 0;
  std::int8_t a = 0;

  friend constexpr bool operator==(Dimension, Dimension) = default;

  friend constexpr Dimension operator*(Dimension l, Dimension r) {
    return {static_cast<std::int8_t>(l.kg + r.kg), static_cast<std::int8_t>(l.m + r.m),
            static_cast<std::int8_t>(l.s + r.s), static_cast<std::int8_t>(l.a + r.a)};
  }
  friend constexpr Dimension operator/(Dimension l, Dimension r) {
    return {static_cast<std::int8_t>(l.kg - r.kg), static_cast<std::int8_t>(l.m - r.m),
            static_cast<std::int8_t>(l.s - r.s), static_cast<std::int8_t>(l.a - r.a)};
  }

  /// Conventional symbol when the dimension is one of the named ones,
  /// otherwise the base-unit product (e.g. "kg m^2 s^-3 A^-1").
  std::string symbol() const;
};

namespace dim {
inline constexpr Dimension dimensionless{};
inline constexpr Dimension frequency{0, 0, -1, 0};
inline constexpr Dimension length{0, 1, 0, 0};
inline constexpr Dimension time{0, 0, 1, 0};
inline constexpr Dimension mass{1, 0, 0, 0};
inline constexpr Dimension charge{0, 0, 1, 1};
inline constexpr Dimension current{0, 0, 0, 1};
inline constexpr Dimension field{1, 1, -3, -1};
inline constexpr Dimension energy{1, 2, -2, 0};
inline constexpr Dimension power{1, 2, -3, 0};
inline constexpr Dimension voltage{1, 2, -3, -1};
inline constexpr Dimension resistance{1, 2, -3, -2};
inline constexpr Dimension resistivity{1, 3, -3, -2};
inline constexpr Dimension capacitance{-1, -2, 4, 2};
}  // namespace dim

/// A value with a symmetric one-standard-deviation uncertainty and a
/// physical dimension. Immutable once built.
///
/// The arithmetic operators propagate sigma to first order assuming the
/// operands are independent; `x - x` therefore reports a non-zero sigma.
class UncertainQuantity {
 public:
  constexpr UncertainQuantity() = default;
  /// Throws ParameterError when sigma is negative or either number is NaN.
  UncertainQuantity(double value, double sigma, Dimension dimension = dim::dimensionless);

  static UncertainQuantity exact(double value, Dimension dimension = dim::dimensionless) {
    return {value, 0.0, dimension};
  }

  double value() const { return value_; }
  double sigma() const { return sigma_; }
  Dimension dimension() const { return dimension_; }
  double relative_sigma() const;

  UncertainQuantity operator-() const { return {-value_, sigma_, dimension_}; }

  friend UncertainQuantity operator+(const UncertainQuantity& l, const UncertainQuantity& r);
  friend UncertainQuantity operator-(const UncertainQuantity& l, const UncertainQuantity& r);
  friend UncertainQuantity operator*(const UncertainQuantity& l, const UncertainQuantity& r);
  friend UncertainQuantity operator/(const UncertainQuantity& l, const UncertainQuantity& r);
  friend UncertainQuantity operator*(double k, const UncertainQuantity& q);
  friend UncertainQuantity operator*(const UncertainQuantity& q, double k) { return k * q; }
  friend UncertainQuantity operator/(const UncertainQuantity& q, double k);

 private:
  double value_ = 0.0;
  double sigma_ = 0.0;
  Dimension dimension_{};
};

/// Scalar function of k real inputs.
using ScalarFunction = std::function<double(std::span<const double>)>;

/// First-order propagation with central finite-difference partials,
/// step max(1e-6 |x_i|, 1e-12). Throws EvaluationError if f is non-finite
/// at the evaluation point or any stencil point.
UncertainQuantity propagate_linear(const ScalarFunction& f,
                                   std::span<const UncertainQuantity> inputs,
                                   Dimension result_dimension = dim::dimensionless);

inline UncertainQuantity propagate_linear(const ScalarFunction& f,
                                          std::initializer_list<UncertainQuantity> inputs,
                                          Dimension result_dimension = dim::dimensionless) {
  return propagate_linear(f, std::span<const UncertainQuantity>(inputs.begin(), inputs.size()),
                          result_dimension);
}

struct MonteCarloResult {
  UncertainQuantity quantity;
  std::size_t sample_count = 0;
  std::size_t non_finite_count = 0;
};

inline constexpr std::size_t kMinMonteCarloSamples = 1000;

/// Draws independent normal samples for each input and returns the mean
/// and standard deviation of f over the finite samples. Bit-identical for
/// a given seed. Throws ParameterError for fewer than 1000 samples and
/// EvaluationError when more than 1% of the samples are non-finite.
MonteCarloResult propagate_monte_carlo(const ScalarFunction& f,
                                       std::span<const UncertainQuantity> inputs,
                                       std::size_t sample_count, std::uint64_t seed,
                                       Dimension result_dimension = dim::dimensionless);

inline MonteCarloResult propagate_monte_carlo(const ScalarFunction& f,
                                              std::initializer_list<UncertainQuantity> inputs,
                                              std::size_t sample_count, std::uint64_t seed,
                                              Dimension result_dimension = dim::dimensionless) {
  return propagate_monte_carlo(
      f, std::span<const UncertainQuantity>(inputs.begin(), inputs.size()), sample_count, seed,
      result_dimension);
}

}  // namespace cavitytk
