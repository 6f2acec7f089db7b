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

#include "cavitytk/quantities.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include <fmt/format.h>

#include "cavitytk/errors.hpp"

namespace cavitytk {

namespace {

constexpr std::pair<Dimension, const char*> kNamedDimensions[] = {
    {dim::dimensionless, "1"}, {dim::frequency, "Hz"},   {dim::length, "m"},
    {dim::time, "s"},          {dim::mass, "kg"},        {dim::charge, "C"},
    {dim::current, "A"},       {dim::field, "V/m"},      {dim::energy, "J"},
    {dim::power, "W"},         {dim::voltage, "V"},      {dim::resistance, "Ohm"},
    {dim::resistivity, "Ohm m"}, {dim::capacitance, "F"},
};

void require_same(Dimension l, Dimension r, const char* op) {
  if (l != r) {
    throw DimensionError(fmt::format("cannot {} quantities of dimension [{}] and [{}]", op,
                                     l.symbol(), r.symbol()));
  }
}

}  // namespace

std::string Dimension::symbol() const {
  for (const auto& [d, name] : kNamedDimensions) {
    if (d == *this) return name;
  }
  std::string out;
  auto append = [&out](const char* unit, int exponent) {
    if (exponent == 0) return;
    if (!out.empty()) out += ' ';
    out += unit;
    if (exponent != 1) out += fmt::format("^{}", exponent);
  };
  append("kg", kg);
  append("m", m);
  append("s", s);
  append("A", a);
  return out;
}

UncertainQuantity::UncertainQuantity(double value, double sigma, Dimension dimension)
    : value_(value), sigma_(sigma), dimension_(dimension) {
  if (std::isnan(value) || std::isnan(sigma)) {
    throw ParameterError("uncertain quantity built from NaN");
  }
  if (sigma < 0.0) {
    throw ParameterError(fmt::format("negative uncertainty {}", sigma));
  }
}

double UncertainQuantity::relative_sigma() const {
  if (value_ == 0.0) return sigma_ == 0.0 ? 0.0 : INFINITY;
  return sigma_ / std::abs(value_);
}

UncertainQuantity operator+(const UncertainQuantity& l, const UncertainQuantity& r) {
  require_same(l.dimension_, r.dimension_, "add");
  return {l.value_ + r.value_, std::hypot(l.sigma_, r.sigma_), l.dimension_};
}

UncertainQuantity operator-(const UncertainQuantity& l, const UncertainQuantity& r) {
  require_same(l.dimension_, r.dimension_, "subtract");
  return {l.value_ - r.value_, std::hypot(l.sigma_, r.sigma_), l.dimension_};
}

UncertainQuantity operator*(const UncertainQuantity& l, const UncertainQuantity& r) {
  return {l.value_ * r.value_, std::hypot(r.value_ * l.sigma_, l.value_ * r.sigma_),
          l.dimension_ * r.dimension_};
}

UncertainQuantity operator/(const UncertainQuantity& l, const UncertainQuantity& r) {
  if (r.value_ == 0.0) throw DomainError("division by a quantity with zero value");
  const double q = l.value_ / r.value_;
  return {q, std::hypot(l.sigma_ / r.value_, q * r.sigma_ / r.value_),
          l.dimension_ / r.dimension_};
}

UncertainQuantity operator*(double k, const UncertainQuantity& q) {
  return {k * q.value_, std::abs(k) * q.sigma_, q.dimension_};
}

UncertainQuantity operator/(const UncertainQuantity& q, double k) {
  if (k == 0.0) throw DomainError("division of a quantity by zero");
  return {q.value_ / k, q.sigma_ / std::abs(k), q.dimension_};
}

UncertainQuantity propagate_linear(const ScalarFunction& f,
                                   std::span<const UncertainQuantity> inputs,
                                   Dimension result_dimension) {
  std::vector<double> x(inputs.size());
  std::transform(inputs.begin(), inputs.end(), x.begin(),
                 [](const UncertainQuantity& q) { return q.value(); });

  const double centre = f(x);
  if (!std::isfinite(centre)) {
    throw EvaluationError("propagated function is non-finite at the input values");
  }

  double variance = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (inputs[i].sigma() == 0.0) continue;
    const double xi = x[i];
    const double step = std::max(1e-6 * std::abs(xi), 1e-12);
    x[i] = xi + step;
    const double up = f(x);
    x[i] = xi - step;
    const double down = f(x);
    x[i] = xi;
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw EvaluationError(
          fmt::format("propagated function is non-finite on the stencil of input {}", i));
    }
    const double partial = (up - down) / (2.0 * step);
    variance += (partial * inputs[i].sigma()) * (partial * inputs[i].sigma());
  }
  return {centre, std::sqrt(variance), result_dimension};
}

MonteCarloResult propagate_monte_carlo(const ScalarFunction& f,
                                       std::span<const UncertainQuantity> inputs,
                                       std::size_t sample_count, std::uint64_t seed,
                                       Dimension result_dimension) {
  if (sample_count < kMinMonteCarloSamples) {
    throw ParameterError(fmt::format("Monte-Carlo needs at least {} samples, got {}",
                                     kMinMonteCarloSamples, sample_count));
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> unit_normal(0.0, 1.0);
  std::vector<double> x(inputs.size());

  // Welford accumulation over finite samples.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t finite = 0;
  std::size_t non_finite = 0;
  for (std::size_t n = 0; n < sample_count; ++n) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      x[i] = inputs[i].value() + inputs[i].sigma() * unit_normal(rng);
    }
    const double y = f(x);
    if (!std::isfinite(y)) {
      ++non_finite;
      continue;
    }
    ++finite;
    const double delta = y - mean;
    mean += delta / static_cast<double>(finite);
    m2 += delta * (y - mean);
  }

  if (static_cast<double>(non_finite) > 0.01 * static_cast<double>(sample_count)) {
    throw EvaluationError(fmt::format("{} of {} Monte-Carlo samples are non-finite", non_finite,
                                      sample_count));
  }
  const double variance = finite > 1 ? m2 / static_cast<double>(finite - 1) : 0.0;
  return {UncertainQuantity(mean, std::sqrt(std::max(variance, 0.0)), result_dimension),
          sample_count, non_finite};
}

}  // namespace cavitytk
