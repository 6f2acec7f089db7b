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

#include "cavitytk/ringdown.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <string_view>

#include <fmt/format.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/text.hpp"

namespace cavitytk::ringdown {

using constants::pi;

RingdownTrace::RingdownTrace(std::vector<double> times_s, std::vector<double> volts,
                             double trigger_time_s)
    : times_(std::move(times_s)), volts_(std::move(volts)), trigger_time_(trigger_time_s) {
  if (times_.size() != volts_.size()) {
    throw ParameterError(fmt::format("trace has {} timestamps but {} voltages", times_.size(),
                                     volts_.size()));
  }
  if (times_.size() < kMinTraceSamples) {
    throw ParameterError(fmt::format("trace has {} samples, at least {} required",
                                     times_.size(), kMinTraceSamples));
  }
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (!std::isfinite(times_[i]) || !std::isfinite(volts_[i])) {
      throw ParameterError(fmt::format("non-finite sample at index {}", i));
    }
    if (i > 0 && !(times_[i] > times_[i - 1])) {
      throw ParameterError(fmt::format("timestamps not strictly increasing at index {}", i));
    }
  }
}

double RingdownTrace::sample_rate() const {
  return static_cast<double>(times_.size() - 1) / (times_.back() - times_.front());
}

double RingdownFit::decay_time() const { return 1.0 / (2.0 * pi * linewidth.value()); }

RingdownTrace synthesize_trace(double v0, double linewidth_hz, double duration_s,
                               double sample_rate_hz, double noise_sigma, std::uint64_t seed) {
  if (!(duration_s > 0.0) || !(sample_rate_hz > 0.0)) {
    throw ParameterError("duration and sample rate must be positive");
  }
  if (!(linewidth_hz > 0.0)) throw ParameterError("linewidth must be positive");
  if (noise_sigma < 0.0) throw ParameterError("noise sigma must be non-negative");
  const auto n = static_cast<std::size_t>(std::floor(duration_s * sample_rate_hz));
  if (n < kMinTraceSamples) {
    throw ParameterError(fmt::format("duration * sample_rate = {} < {}", n, kMinTraceSamples));
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<double> t(n);
  std::vector<double> v(n);
  const double k = 2.0 * pi * linewidth_hz;
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = static_cast<double>(i) / sample_rate_hz;
    v[i] = v0 * std::exp(-k * t[i]);
    if (noise_sigma > 0.0) v[i] += noise_sigma * noise(rng);
  }
  return RingdownTrace(std::move(t), std::move(v));
}

namespace {

double median(std::vector<double> values) {
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
  std::nth_element(values.begin(), mid, values.end());
  double m = *mid;
  if (values.size() % 2 == 0) {
    m = 0.5 * (m + *std::max_element(values.begin(), mid));
  }
  return m;
}

double tail_noise(std::span<const double> volts) {
  const std::size_t count = std::max<std::size_t>(volts.size() / 4, 4);
  std::vector<double> tail(volts.end() - static_cast<std::ptrdiff_t>(count), volts.end());
  const double centre = median(tail);
  for (double& x : tail) x = std::abs(x - centre);
  return 1.4826 * median(std::move(tail));
}

// Samples in model form: v = a exp(-k (t - t_ref)).
struct Samples {
  std::span<const double> t;
  std::span<const double> v;
};

struct Parameters {
  double a;
  double k;
};

struct Solution {
  Parameters p;
  double cov_aa, cov_ak, cov_kk;
  double sse;
  int iterations;
};

double sum_squares(const std::vector<Samples>& data, double t_ref, Parameters p) {
  double sse = 0.0;
  for (const auto& s : data) {
    for (std::size_t i = 0; i < s.t.size(); ++i) {
      const double r = s.v[i] - p.a * std::exp(-p.k * (s.t[i] - t_ref));
      sse += r * r;
    }
  }
  return sse;
}

Parameters log_linear_seed(const std::vector<Samples>& data, double t_ref, double floor) {
  const double threshold = 3.0 * floor;
  // Weighted regression of ln v against t with weights v^2.
  double sw = 0.0, st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  std::size_t used = 0;
  for (const auto& s : data) {
    for (std::size_t i = 0; i < s.t.size(); ++i) {
      const double v = s.v[i];
      if (!(v > threshold) || !(v > 0.0)) continue;
      const double w = v * v;
      const double x = s.t[i] - t_ref;
      const double y = std::log(v);
      sw += w;
      st += w * x;
      sy += w * y;
      stt += w * x * x;
      sty += w * x * y;
      ++used;
    }
  }
  if (used < 2) throw FitError("fewer than two samples above the noise floor", 0.0, 0.0);
  const double det = sw * stt - st * st;
  if (!(det > 0.0)) throw FitError("degenerate log-linear seed", 0.0, 0.0);
  const double slope = (sw * sty - st * sy) / det;
  const double intercept = (sy - slope * st) / sw;
  return {std::exp(intercept), -slope};
}

Solution gauss_newton(const std::vector<Samples>& data, double t_ref, Parameters p,
                      const FitOptions& options) {
  double sse = sum_squares(data, t_ref, p);
  std::size_t n = 0;
  for (const auto& s : data) n += s.t.size();

  auto normal_matrix = [&](Parameters q, double& jaa, double& jak, double& jkk, double& ga,
                           double& gk) {
    jaa = jak = jkk = ga = gk = 0.0;
    for (const auto& s : data) {
      for (std::size_t i = 0; i < s.t.size(); ++i) {
        const double x = s.t[i] - t_ref;
        const double e = std::exp(-q.k * x);
        const double da = e;
        const double dk = -x * q.a * e;
        const double r = s.v[i] - q.a * e;
        jaa += da * da;
        jak += da * dk;
        jkk += dk * dk;
        ga += da * r;
        gk += dk * r;
      }
    }
  };

  int iteration = 0;
  bool converged = false;
  while (iteration < options.max_iterations) {
    ++iteration;
    double jaa, jak, jkk, ga, gk;
    normal_matrix(p, jaa, jak, jkk, ga, gk);
    const double det = jaa * jkk - jak * jak;
    if (!(det > 0.0) || !std::isfinite(det)) {
      throw FitError("singular normal matrix", p.a, p.k / (2.0 * pi));
    }
    const double step_a = (jkk * ga - jak * gk) / det;
    const double step_k = (jaa * gk - jak * ga) / det;

    double lambda = 1.0;
    Parameters trial{};
    double trial_sse = INFINITY;
    for (int halving = 0; halving < 40; ++halving) {
      trial = {p.a + lambda * step_a, p.k + lambda * step_k};
      trial_sse = sum_squares(data, t_ref, trial);
      if (trial_sse <= sse) break;
      lambda *= 0.5;
    }
    const double change = std::max(std::abs(lambda * step_a) / std::abs(p.a),
                                   std::abs(lambda * step_k) / std::abs(p.k));
    if (!(trial_sse <= sse)) {
      // No descent possible: only acceptable at the rounding floor.
      if (std::max(std::abs(step_a / p.a), std::abs(step_k / p.k)) < 1e-8) {
        converged = true;
        break;
      }
      throw FitError("damped Gauss-Newton step failed to reduce the residual", p.a,
                     p.k / (2.0 * pi));
    }
    p = trial;
    sse = trial_sse;
    if (change < options.relative_tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw FitError(fmt::format("no convergence after {} iterations", options.max_iterations),
                   p.a, p.k / (2.0 * pi));
  }

  double jaa, jak, jkk, ga, gk;
  normal_matrix(p, jaa, jak, jkk, ga, gk);
  const double det = jaa * jkk - jak * jak;
  const double s2 = n > 2 ? sse / static_cast<double>(n - 2) : 0.0;
  return {p, s2 * jkk / det, -s2 * jak / det, s2 * jaa / det, sse, iteration};
}

RingdownFit fit_samples(const std::vector<Samples>& data, double t_ref, double floor,
                        const FitOptions& options) {
  const Parameters seed = log_linear_seed(data, t_ref, floor);
  if (!(seed.k > 0.0)) {
    throw FitError("log-linear seed has a non-decaying slope", seed.a, seed.k / (2.0 * pi));
  }
  const Solution sol = gauss_newton(data, t_ref, seed, options);
  if (!(sol.p.k > 0.0)) {
    throw FitError("fitted linewidth is not positive", sol.p.a, sol.p.k / (2.0 * pi));
  }

  // Refer the amplitude back to t = 0: v0 = a exp(k t_ref).
  const double growth = std::exp(sol.p.k * t_ref);
  const double v0 = sol.p.a * growth;
  const double dv0_da = growth;
  const double dv0_dk = sol.p.a * t_ref * growth;
  const double var_v0 = dv0_da * dv0_da * sol.cov_aa + 2.0 * dv0_da * dv0_dk * sol.cov_ak +
                        dv0_dk * dv0_dk * sol.cov_kk;
  const double linewidth = sol.p.k / (2.0 * pi);
  const double sigma_linewidth = std::sqrt(std::max(sol.cov_kk, 0.0)) / (2.0 * pi);

  std::size_t n = 0;
  for (const auto& s : data) n += s.t.size();
  return {UncertainQuantity(v0, std::sqrt(std::max(var_v0, 0.0))),
          UncertainQuantity(linewidth, sigma_linewidth, dim::frequency),
          std::sqrt(sol.sse / static_cast<double>(n)), sol.iterations};
}

}  // namespace

double noise_floor(const RingdownTrace& trace) { return tail_noise(trace.volts()); }

RingdownFit fit_ringdown(const RingdownTrace& trace, const FitOptions& options) {
  const double floor = noise_floor(trace);
  const auto volts = trace.volts();
  const double peak = *std::max_element(volts.begin(), volts.end());
  if (!(peak > 5.0 * floor)) {
    throw FitError(fmt::format("peak {} does not exceed 5x the noise floor {}", peak, floor),
                   0.0, 0.0);
  }
  const std::vector<Samples> data{{trace.times(), trace.volts()}};
  return fit_samples(data, trace.times().front(), floor, options);
}

PooledLinewidth pool_traces(std::span<const RingdownTrace> traces, PoolingMode mode,
                            const FitOptions& options) {
  if (traces.empty()) throw ParameterError("no traces to pool");

  if (mode == PoolingMode::joint_v0) {
    std::vector<Samples> data;
    double t_ref = INFINITY;
    double floor = 0.0;
    for (const auto& trace : traces) {
      data.push_back({trace.times(), trace.volts()});
      t_ref = std::min(t_ref, trace.times().front());
      floor = std::max(floor, noise_floor(trace));
    }
    RingdownFit fit = fit_samples(data, t_ref, floor, options);
    return {fit.linewidth, {fit}, 1.0};
  }

  PooledLinewidth pooled;
  for (const auto& trace : traces) pooled.fits.push_back(fit_ringdown(trace, options));

  const auto& fits = pooled.fits;
  const bool any_exact = std::any_of(fits.begin(), fits.end(), [](const RingdownFit& f) {
    return f.linewidth.sigma() == 0.0;
  });
  if (any_exact) {
    double sum = 0.0;
    int count = 0;
    for (const auto& f : fits) {
      if (f.linewidth.sigma() == 0.0) {
        sum += f.linewidth.value();
        ++count;
      }
    }
    pooled.linewidth = UncertainQuantity(sum / count, 0.0, dim::frequency);
    return pooled;
  }

  double sw = 0.0;
  double swx = 0.0;
  for (const auto& f : fits) {
    const double w = 1.0 / (f.linewidth.sigma() * f.linewidth.sigma());
    sw += w;
    swx += w * f.linewidth.value();
  }
  const double mean = swx / sw;
  double chi2 = 0.0;
  for (const auto& f : fits) {
    const double d = (f.linewidth.value() - mean) / f.linewidth.sigma();
    chi2 += d * d;
  }
  const double birge =
      fits.size() > 1 ? std::sqrt(chi2 / static_cast<double>(fits.size() - 1)) : 1.0;
  pooled.birge_ratio = birge;
  pooled.linewidth =
      UncertainQuantity(mean, std::sqrt(1.0 / sw) * std::max(1.0, birge), dim::frequency);
  return pooled;
}

UncertainQuantity finesse(const UncertainQuantity& linewidth, const UncertainQuantity& fsr) {
  if (!(linewidth.value() > 0.0)) throw ParameterError("linewidth must be positive");
  if (!(fsr.value() > 0.0)) throw ParameterError("free spectral range must be positive");
  if (linewidth.dimension() != fsr.dimension()) {
    throw DimensionError("linewidth and free spectral range must share a dimension");
  }
  return propagate_linear([](std::span<const double> x) { return x[1] / x[0]; },
                          {linewidth, fsr});
}

double fsr_from_length(double length_m) {
  if (!(length_m > 0.0)) throw ParameterError("cavity length must be positive");
  return constants::speed_of_light / (2.0 * length_m);
}

RingdownTrace read_trace_csv(std::istream& in) {
  std::vector<double> t;
  std::vector<double> v;
  std::string line;
  std::size_t line_number = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view text = text::trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = text::split(text, ',');
    double time = 0.0;
    double volts = 0.0;
    const bool numeric = fields.size() == 2 && text::parse_double(fields[0], time) &&
                         text::parse_double(fields[1], volts);
    if (!numeric) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      throw InputError(fmt::format("line {}: expected `t_seconds,v_volts`", line_number));
    }
    header_allowed = false;
    t.push_back(time);
    v.push_back(volts);
  }
  if (t.empty()) throw InputError("trace contains no samples");
  try {
    return RingdownTrace(std::move(t), std::move(v));
  } catch (const ParameterError& e) {
    throw InputError(e.what());
  }
}

RingdownTrace read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open {}", path.string()));
  try {
    return read_trace_csv(in);
  } catch (const InputError& e) {
    throw InputError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace cavitytk::ringdown
