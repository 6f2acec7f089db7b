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

// toolkit: ring-down fitting, reproduction report and charge budgets.
//
// Exit codes: 0 success, 1 acceptance failure, 2 input error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cavitytk/errors.hpp"
#include "cavitytk/reports.hpp"
#include "cavitytk/ringdown.hpp"
#include "cavitytk/scenario.hpp"

namespace {

namespace rp = cavitytk::reports;
namespace rd = cavitytk::ringdown;

constexpr int kOk = 0;
constexpr int kAcceptanceFailure = 1;
constexpr int kInputError = 2;

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("TOOLKIT_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::uint64_t v = 0;
  const std::string_view s(raw);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw cavitytk::InputError(fmt::format("TOOLKIT_SEED = `{}` is not a non-negative integer", s));
  }
  return v;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cavitytk::InputError(fmt::format("cannot write {}", path));
  out << content;
  if (!out) throw cavitytk::InputError(fmt::format("failed writing {}", path));
}

struct FitArgs {
  std::vector<std::string> traces;
  std::optional<double> fsr_hz;
  double fsr_sigma_hz = 0.0;
  std::optional<double> length_m;
  std::string pooling = "per-trace";
  std::string csv_out;
};

int run_fit(const FitArgs& a) {
  cavitytk::UncertainQuantity fsr;
  if (a.fsr_hz) {
    fsr = cavitytk::UncertainQuantity(*a.fsr_hz, a.fsr_sigma_hz, cavitytk::dim::frequency);
  } else {
    fsr = cavitytk::UncertainQuantity::exact(rd::fsr_from_length(*a.length_m),
                                             cavitytk::dim::frequency);
  }
  const auto mode = a.pooling == "joint-v0" ? rd::PoolingMode::joint_v0 : rd::PoolingMode::per_trace;

  std::vector<rp::NamedTrace> loaded;
  std::vector<rp::TraceFitRow> unreadable;
  for (const auto& path : a.traces) {
    try {
      loaded.push_back({path, rd::read_trace_csv(std::filesystem::path(path))});
    } catch (const cavitytk::Error& e) {
      unreadable.push_back({path, std::nullopt, e.what()});
    }
  }
  auto report = rp::fit_report(loaded, fsr, mode);
  report.traces.insert(report.traces.end(), unreadable.begin(), unreadable.end());

  std::cout << rp::render_fit_text(report);
  if (!a.csv_out.empty()) write_file(a.csv_out, rp::render_fit_csv(report));
  return report.pooled_linewidth ? kOk : kInputError;
}

int run_reproduce(std::optional<std::uint64_t> seed, std::size_t samples, const std::string& out) {
  rp::ReproductionOptions options;
  options.seed = env_seed().value_or(seed.value_or(0));
  options.mc_samples = samples;
  const auto report = rp::reproduce_paper(options);
  std::cout << rp::render_text(report);
  if (!out.empty()) write_file(out, rp::render_csv(report));
  return rp::reproduction_exit_code(report) == 0 ? kOk : kAcceptanceFailure;
}

int run_budget(const std::string& path, const std::string& target_name, const std::string& out,
               const std::string& sweep_out) {
  const auto target = rp::parse_budget_target(target_name);
  if (!target) throw cavitytk::InputError(fmt::format("unknown budget target `{}`", target_name));
  auto s = cavitytk::scenario::load_scenario(path);
  if (const auto seed = env_seed()) {
    s.seed = *seed;
    s.seed_source = cavitytk::scenario::SeedSource::environment;
  }
  const auto budget = rp::run_budget(s, *target);
  std::cout << rp::render_text(budget.report);
  if (!out.empty()) write_file(out, rp::render_csv(budget.report));
  if (!sweep_out.empty()) write_file(sweep_out, rp::render_sweep_csv(budget.sweep));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cavitytk: cavity finesse analysis and stray-charge budgets"};
  app.require_subcommand(1);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit-ringdown", "fit ring-down traces and report the finesse");
  fit_cmd->add_option("traces", fit.traces, "two-column t_seconds,v_volts CSV files")->required();
  auto* fsr_opt = fit_cmd->add_option("--fsr-hz", fit.fsr_hz, "free spectral range in Hz");
  fit_cmd->add_option("--fsr-sigma-hz", fit.fsr_sigma_hz, "FSR uncertainty in Hz")
      ->check(CLI::NonNegativeNumber);
  auto* len_opt = fit_cmd->add_option("--length-m", fit.length_m, "cavity length in m (FSR = c/2d)")
                      ->check(CLI::PositiveNumber);
  fsr_opt->check(CLI::PositiveNumber)->excludes(len_opt);
  fit_cmd->add_option("--pooling", fit.pooling, "per-trace or joint-v0")
      ->check(CLI::IsMember({"per-trace", "joint-v0"}));
  fit_cmd->add_option("--csv", fit.csv_out, "write trace,linewidth_hz,sigma_hz,v0 CSV here");

  std::optional<std::uint64_t> seed;
  std::size_t samples = 100'000;
  std::string report_out;
  auto* repro = app.add_subcommand("reproduce-paper", "recompute every reproduction target");
  repro->add_option("--out", report_out, "write the report as CSV");
  repro->add_option("--seed", seed, "Monte-Carlo seed (TOOLKIT_SEED takes precedence)");
  repro->add_option("--mc-samples", samples, "Monte-Carlo samples per quantity")
      ->check(CLI::Range(std::size_t{1000}, std::size_t{100'000'000}));

  std::string scenario_path, target, budget_out, sweep_out;
  auto* budget = app.add_subcommand("budget", "stray-charge budget for one target");
  budget->add_option("--scenario", scenario_path, "scenario file")->required();
  budget->add_option("--target", target,
                     "cooling, coupling, lamb-dicke, gate, rydberg-coherence, rydberg-gate or "
                     "charging")
      ->required();
  budget->add_option("--out", budget_out, "write the budget rows as CSV");
  budget->add_option("--sweep-out", sweep_out, "write the 200-point sweep as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*fit_cmd) {
      if (!fit.fsr_hz && !fit.length_m) {
        throw cavitytk::InputError("one of --fsr-hz or --length-m is required");
      }
      return run_fit(fit);
    }
    if (*repro) return run_reproduce(seed, samples, report_out);
    return run_budget(scenario_path, target, budget_out, sweep_out);
  } catch (const cavitytk::Error& e) {
    // Schema, domain and search failures all trace back to the inputs.
    std::cerr << "toolkit: " << e.what() << "\n";
    return kInputError;
  }
}
