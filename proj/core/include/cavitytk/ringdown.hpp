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
#include <filesystem>
#include <istream>
#include <span>
#include <vector>

#include "cavitytk/errors.hpp"
#include "cavitytk/quantities.hpp"

namespace cavitytk::ringdown {

inline constexpr std::size_t kMinTraceSamples = 16;

/// Photodetector samples of a cavity ring-down, V_PD(t).
class RingdownTrace {
 public:
  /// Throws ParameterError unless the two series have equal length, hold at
  /// least 16 finite samples and the timestamps strictly increase.
  RingdownTrace(std::vector<double> times_s, std::vector<double> volts,
                double trigger_time_s = 0.0);

  std::span<const double> times() const { return times_; }
  std::span<const double> volts() const { return volts_; }
  std::size_t size() const { return times_.size(); }
  double trigger_time() const { return trigger_time_; }
  /// Mean sample rate over the trace, in Hz.
  double sample_rate() const;

 private:
  std::vector<double> times_;
  std::vector<double> volts_;
  double trigger_time_ = 0.0;
};

struct RingdownFit {
  UncertainQuantity v0;         // volts (stored dimensionless: arbitrary units)
  UncertainQuantity linewidth;  // Hz, FWHM delta nu_c
  double residual_rms = 0.0;
  int iterations = 0;

  /// 1/e amplitude decay time, tau = 1/(2 pi linewidth).
  double decay_time() const;
};

/// Thrown when Gauss-Newton refinement fails; carries the last iterate.
class FitError : public Error {
 public:
  FitError(const std::string& what, double last_v0, double last_linewidth)
      : Error(what), last_v0(last_v0), last_linewidth(last_linewidth) {}
  double last_v0;
  double last_linewidth;
};

/// v_i = v0 exp(-2 pi linewidth t_i) + N(0, noise_sigma), t_i = i / sample_rate
/// for i in [0, floor(duration * sample_rate)).
RingdownTrace synthesize_trace(double v0, double linewidth_hz, double duration_s,
                               double sample_rate_hz, double noise_sigma, std::uint64_t seed);

/// Robust noise-floor estimate: 1.4826 * MAD over the last quarter of the trace.
double noise_floor(const RingdownTrace& trace);

struct FitOptions {
  double relative_tolerance = 1e-10;
  int max_iterations = 100;
};

/// Least-squares fit of V_PD = V0 exp(-2 pi dnu t). Seeded by a log-linear
/// regression over samples above 3x the noise floor, refined by damped
/// Gauss-Newton. Sigmas come from the covariance s^2 (J^T J)^-1.
RingdownFit fit_ringdown(const RingdownTrace& trace, const FitOptions& options = {});

enum class PoolingMode {
  per_trace,  ///< independent fits, inverse-variance weighted linewidth
  joint_v0,   ///< one (V0, linewidth) pair fitted to every sample
};

struct PooledLinewidth {
  UncertainQuantity linewidth;  // Hz
  std::vector<RingdownFit> fits;  // per-trace fits (per_trace mode only)
  double birge_ratio = 1.0;
};

/// Combines several successive traces into one linewidth estimate.
PooledLinewidth pool_traces(std::span<const RingdownTrace> traces,
                            PoolingMode mode = PoolingMode::per_trace,
                            const FitOptions& options = {});

/// nu_FSR / dnu_c with linear uncertainty propagation.
UncertainQuantity finesse(const UncertainQuantity& linewidth, const UncertainQuantity& fsr);

/// Plane-wave free spectral range c / 2d, in Hz.
double fsr_from_length(double length_m);

/// Two-column `t_seconds,v_volts` CSV; optional header, `#` comments ignored.
/// Throws InputError on malformed lines or an invalid trace.
RingdownTrace read_trace_csv(std::istream& in);
RingdownTrace read_trace_csv(const std::filesystem::path& path);

}  // namespace cavitytk::ringdown
