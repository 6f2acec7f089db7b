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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cavitytk/ringdown.hpp"
#include "cavitytk/scenario.hpp"

namespace cavitytk::reports {

enum class Status { match, mismatch, mismatch_documented, not_applicable };

std::string_view to_string(Status s);

/// How a computed value is compared with its reference value.
struct Tolerance {
  enum class Kind { relative, absolute, range, none } kind = Kind::none;
  double amount = 0.0;  // relative fraction or absolute half-width
  double low = 0.0;     // range bounds (inclusive)
  double high = 0.0;

  static Tolerance relative(double fraction) { return {Kind::relative, fraction, 0.0, 0.0}; }
  static Tolerance absolute(double half_width) { return {Kind::absolute, half_width, 0.0, 0.0}; }
  static Tolerance range(double lo, double hi) { return {Kind::range, 0.0, lo, hi}; }

  bool accepts(double computed, double reference) const;
  std::string describe() const;
};

/// One declared reproduction target.
struct ManifestEntry {
  std::string_view id;
  std::string_view quantity;
  std::string_view unit;
  std::optional<double> reference;  // published (or oracle-derived) value
  Tolerance tolerance;
  bool documented_discrepancy = false;
  std::string_view note;
};

/// Every row of the reproduction report, with its tolerance.
std::span<const ManifestEntry> reproduction_manifest();

/// Ids of the rows known not to reproduce their reference value.
std::span<const std::string_view> documented_discrepancies();

struct ReportRow {
  std::string id;
  std::string quantity;
  std::string unit;
  double value = 0.0;
  double sigma = 0.0;
  std::optional<double> reference;
  double deviation = 0.0;  // (value - reference) / |reference|
  std::string tolerance;
  Status status = Status::not_applicable;
  std::string note;
};

/// Applies an entry's tolerance to a computed value.
ReportRow evaluate(const ManifestEntry& entry, double value, double sigma = 0.0);

struct Report {
  std::string title;
  std::vector<std::string> provenance;
  std::vector<ReportRow> rows;

  const ReportRow* find(std::string_view id) const;
  std::size_t count(Status s) const;
};

std::string render_text(const Report& report);
std::string render_csv(const Report& report);

struct ReproductionOptions {
  std::uint64_t seed = 0;
  std::size_t mc_samples = 100'000;
};

/// Recomputes every manifest row from the bundled inputs.
Report reproduce_paper(const ReproductionOptions& options = {});

/// 0 when no row is MISMATCH and the documented rows are exactly the
/// known discrepancies, 1 otherwise.
int reproduction_exit_code(const Report& report);

struct TraceFitRow {
  std::string trace;
  std::optional<ringdown::RingdownFit> fit;
  std::string error;
};

struct FitReport {
  std::vector<TraceFitRow> traces;
  std::optional<UncertainQuantity> pooled_linewidth;
  std::optional<UncertainQuantity> finesse;
  UncertainQuantity fsr;
  std::string mode;
};

struct NamedTrace {
  std::string name;
  ringdown::RingdownTrace trace;
};

/// Fits each trace, pools the successes and converts to finesse.
FitReport fit_report(std::span<const NamedTrace> traces, const UncertainQuantity& fsr,
                     ringdown::PoolingMode mode);

/// `trace,linewidth_hz,sigma_hz,v0`, one line per trace (failed traces
/// carry empty numeric fields), then a `pooled` line.
std::string render_fit_csv(const FitReport& report);
std::string render_fit_text(const FitReport& report);

enum class BudgetTarget {
  cooling,
  coupling,
  lamb_dicke,
  gate,
  rydberg_coherence,
  rydberg_gate,
  charging,
};

std::optional<BudgetTarget> parse_budget_target(std::string_view name);
std::string_view to_string(BudgetTarget t);

/// Tabular plot data; first column is the swept variable.
struct Sweep {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string render_sweep_csv(const Sweep& sweep);

struct BudgetReport {
  Report report;
  Sweep sweep;
};

inline constexpr std::size_t kSweepPoints = 200;

/// Runs one budget against a scenario. Throws SchemaError when a required
/// section or key is missing.
BudgetReport run_budget(const scenario::Scenario& s, BudgetTarget target);

}  // namespace cavitytk::reports
