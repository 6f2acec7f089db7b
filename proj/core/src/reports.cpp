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

#include "cavitytk/reports.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "cavitytk/cavity_optics.hpp"
#include "cavitytk/charging_model.hpp"
#include "cavitytk/constants.hpp"
#include "cavitytk/electrostatics.hpp"
#include "cavitytk/errors.hpp"
#include "cavitytk/ion_impact.hpp"
#include "cavitytk/rydberg_impact.hpp"

namespace cavitytk::reports {

using constants::pi;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::match: return "MATCH";
    case Status::mismatch: return "MISMATCH";
    case Status::mismatch_documented: return "MISMATCH-DOCUMENTED";
    case Status::not_applicable: return "N/A";
  }
  return "N/A";
}

bool Tolerance::accepts(double computed, double reference) const {
  if (!std::isfinite(computed)) return false;
  switch (kind) {
    case Kind::relative: return std::abs(computed - reference) <= amount * std::abs(reference);
    case Kind::absolute: return std::abs(computed - reference) <= amount;
    case Kind::range: return computed >= low && computed <= high;
    case Kind::none: return true;
  }
  return false;
}

std::string Tolerance::describe() const {
  switch (kind) {
    case Kind::relative: return fmt::format("+-{:g}%", amount * 100.0);
    case Kind::absolute: return fmt::format("+-{:g}", amount);
    case Kind::range: return fmt::format("[{:g}, {:g}]", low, high);
    case Kind::none: return "none";
  }
  return "none";
}

ReportRow evaluate(const ManifestEntry& entry, double value, double sigma) {
  ReportRow row;
  row.id = entry.id;
  row.quantity = entry.quantity;
  row.unit = entry.unit;
  row.value = value;
  row.sigma = sigma;
  row.reference = entry.reference;
  row.tolerance = entry.reference ? entry.tolerance.describe() : "";
  row.note = entry.note;
  if (!entry.reference) {
    row.status = Status::not_applicable;
    return row;
  }
  const double ref = *entry.reference;
  row.deviation = ref != 0.0 ? (value - ref) / std::abs(ref) : value - ref;
  if (entry.tolerance.accepts(value, ref)) {
    row.status = Status::match;
  } else {
    row.status = entry.documented_discrepancy ? Status::mismatch_documented : Status::mismatch;
  }
  return row;
}

const ReportRow* Report::find(std::string_view id) const {
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const auto& r) { return r.id == id; });
  return it == rows.end() ? nullptr : &*it;
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const auto& r) { return r.status == s; }));
}

namespace {

std::string num(double v) { return fmt::format("{:.6g}", v); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_num(double v) { return fmt::format("{:.10g}", v); }

}  // namespace

std::string render_text(const Report& report) {
  struct Cells {
    std::string quantity, value, unit, reference, deviation, tolerance, status;
  };
  std::vector<Cells> cells;
  cells.push_back({"quantity", "value +- sigma", "unit", "reference", "deviation", "tolerance",
                   "status"});
  for (const auto& r : report.rows) {
    cells.push_back({r.quantity,
                     r.sigma > 0.0 ? fmt::format("{} +- {}", num(r.value), num(r.sigma))
                                   : num(r.value),
                     r.unit, r.reference ? num(*r.reference) : "-",
                     r.reference ? fmt::format("{:+.2f}%", r.deviation * 100.0) : "-",
                     r.tolerance.empty() ? "-" : r.tolerance, std::string(to_string(r.status))});
  }
  std::array<std::size_t, 7> w{};
  for (const auto& c : cells) {
    const std::array<const std::string*, 7> f = {&c.quantity,  &c.value,     &c.unit,  &c.reference,
                                                 &c.deviation, &c.tolerance, &c.status};
    for (std::size_t i = 0; i < f.size(); ++i) w[i] = std::max(w[i], f[i]->size());
  }

  std::string out = report.title + "\n";
  for (const auto& p : report.provenance) out += "  " + p + "\n";
  out += "\n";
  // Budgets carry no reference values; drop the comparison columns.
  const bool compare = std::any_of(report.rows.begin(), report.rows.end(),
                                   [](const auto& r) { return r.reference.has_value(); });
  for (const auto& c : cells) {
    if (compare) {
      out += fmt::format("{:<{}}  {:>{}}  {:<{}}  {:>{}}  {:>{}}  {:<{}}  {}\n", c.quantity, w[0],
                         c.value, w[1], c.unit, w[2], c.reference, w[3], c.deviation, w[4],
                         c.tolerance, w[5], c.status);
    } else {
      out += fmt::format("{:<{}}  {:>{}}  {}\n", c.quantity, w[0], c.value, w[1], c.unit);
    }
  }
  bool any_note = false;
  for (const auto& r : report.rows) {
    if (r.note.empty() || (compare && r.status == Status::match)) continue;
    if (!any_note) out += "\nnotes:\n";
    any_note = true;
    out += fmt::format("  {}: {}\n", r.id, r.note);
  }
  if (!compare) return out;
  out += fmt::format("\n{} MATCH, {} MISMATCH-DOCUMENTED, {} MISMATCH, {} N/A\n",
                     report.count(Status::match), report.count(Status::mismatch_documented),
                     report.count(Status::mismatch), report.count(Status::not_applicable));
  return out;
}

std::string render_csv(const Report& report) {
  std::string out;
  for (const auto& p : report.provenance) out += "# " + p + "\n";
  out += "id,quantity,unit,value,sigma,reference,relative_deviation,tolerance,status,note\n";
  for (const auto& r : report.rows) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", r.id, csv_field(r.quantity),
                       csv_field(r.unit), csv_num(r.value), csv_num(r.sigma),
                       r.reference ? csv_num(*r.reference) : "",
                       r.reference ? csv_num(r.deviation) : "", csv_field(r.tolerance),
                       to_string(r.status), csv_field(r.note));
  }
  return out;
}

namespace {

const ManifestEntry& entry(std::string_view id) {
  for (const auto& e : reproduction_manifest()) {
    if (e.id == id) return e;
  }
  throw Error(fmt::format("no manifest entry `{}`", id));
}

struct RowSink {
  Report& report;
  void add(std::string_view id, double value, double sigma = 0.0) {
    report.rows.push_back(evaluate(entry(id), value, sigma));
  }
};

// Measured finesses; the reference pair uses two uncoated mirrors.
constexpr double kF00 = 23340.0, kF00Sigma = 60.0;
constexpr double kThickness = 30e-9, kThicknessSigma = 2e-9;
constexpr double kFilmWavelength = 1650e-9;

struct TableEntry {
  std::string_view id;
  double f01, f01_sigma;
};

constexpr TableEntry kTable[] = {
    {"kappa_zno_27d", 14160.0, 250.0}, {"kappa_zno_69d", 18400.0, 700.0},
    {"kappa_zno_128d", 19800.0, 180.0}, {"kappa_a_69d", 20900.0, 300.0},
    {"kappa_a_128d", 22120.0, 130.0},
};

constexpr double kMirrorDistance = 200e-6;

}  // namespace

Report reproduce_paper(const ReproductionOptions& options) {
  Report report;
  report.title = "cavitytk reproduction report";
  report.provenance = {fmt::format("seed = {}", options.seed),
                       fmt::format("mc_samples = {}", options.mc_samples)};
  RowSink sink{report};

  const UncertainQuantity f00(kF00, kF00Sigma);
  const UncertainQuantity h(kThickness, kThicknessSigma, dim::length);
  std::uint64_t stream = 0;
  double excess_69d = 0.0;
  double excess_128d = 0.0;
  for (const auto& t : kTable) {
    const auto res = cavity::extinction_from_finesse(
        f00, UncertainQuantity(t.f01, t.f01_sigma), h, kFilmWavelength,
        {options.mc_samples, options.seed + stream++});
    sink.add(t.id, res.kappa.value(), res.kappa.sigma());
    if (t.id == "kappa_zno_69d") excess_69d = res.excess_loss;
    if (t.id == "kappa_zno_128d") excess_128d = res.excess_loss;
  }
  sink.add("excess_zno_69d", excess_69d);
  sink.add("excess_zno_128d", excess_128d);

  const UncertainQuantity linewidth(523e3, 9e3, dim::frequency);
  const UncertainQuantity fsr(7.410e9, 0.013e9, dim::frequency);
  const auto f_lin = ringdown::finesse(linewidth, fsr);
  const auto f_mc = propagate_monte_carlo([](std::span<const double> x) { return x[1] / x[0]; },
                                          {linewidth, fsr}, options.mc_samples,
                                          options.seed + stream++);
  sink.add("finesse_27d", f_lin.value(), f_lin.sigma());
  sink.add("finesse_27d_mc_sigma", f_mc.quantity.sigma() / f_lin.sigma());
  sink.add("fsr_from_length", ringdown::fsr_from_length(20.2e-3));

  const auto disc = electrostatics::disc_point_ratios(125e-6, kMirrorDistance);
  sink.add("disc_u_ratio", disc.u_ratio);
  sink.add("disc_e_ratio", disc.e_ratio);

  const auto trap = ion::ytterbium_example_trap();
  const auto cooling = ion::max_charge_for_cooling(trap, kMirrorDistance, 0.5);
  sink.add("cooling_q1", cooling.q1_max_e);
  sink.add("cooling_field", std::abs(cooling.field_v_per_m));
  sink.add("cooling_displacement", std::abs(cooling.displacement_m));

  const auto coupling = ion::ion_response(trap, {100.0, 0.0, kMirrorDistance});
  sink.add("coupling_displacement", std::abs(coupling.displacement_m));
  sink.add("coupling_field", std::abs(coupling.field_v_per_m));

  const auto ld = ion::lamb_dicke_budget(trap, kMirrorDistance, 0.2);
  sink.add("lamb_dicke_q1", ld.q1_max_e);
  sink.add("lamb_dicke_field", std::abs(ld.field_v_per_m));
  sink.add("lamb_dicke_displacement", ld.displacement_max_m);
  sink.add("lamb_dicke_micromotion", ld.micromotion_max_m);
  sink.add("zero_point_spread", ion::zero_point_spread(trap.mass_kg, trap.secular_frequency));

  const ion::GateParams gate{2.0 * pi * 10e3, 50, 0.013};
  const auto verdict = ion::gate_detuning_verdict(trap, {630.0, 630.0, kMirrorDistance}, gate);
  sink.add("gate_ratio_secular", verdict.ratio_to_secular);
  sink.add("gate_ratio_rabi", verdict.ratio);
  sink.add("gate_bound_q1", ion::max_symmetric_charge_for_gate(trap, kMirrorDistance, gate));

  const rydberg::RydbergConfig ryd{53.4e3, 2.0 * pi * 5e6};
  const double e54 = rydberg::field_at_centre(54.0, kMirrorDistance);
  sink.add("rydberg_field", e54);
  sink.add("rydberg_shift", rydberg::stark_shift(ryd, e54));
  sink.add("rydberg_tau_pi", rydberg::decoherence_time(ryd, e54));
  const auto blockade = rydberg::max_charge_for_infidelity(ryd, 0.01, kMirrorDistance);
  sink.add("blockade_q1", blockade.q1_e);
  sink.add("blockade_field", blockade.field_v_per_m);

  const charging::FilmSample film{1e-4, 30e-9, 125e-6, 0.1e-12};
  const auto resistance = charging::film_resistance(film);
  charging::IlluminationScenario light{0.2e-3, 369e-9, 1.0, 100e-6, kMirrorDistance, 4e11};
  const auto current = charging::photocurrent(light);
  const auto eq =
      charging::equilibrium_charge(resistance.resistance_ohm, film.capacitance_f, current.current_a);
  sink.add("charging_resistance", resistance.resistance_ohm);
  sink.add("charging_charge", eq.charge_e);
  sink.add("charging_rc", eq.rc_time_s);
  sink.add("clipping_factor", charging::gaussian_clipping_factor(100e-6, kMirrorDistance));
  light.electron_rate_override.reset();
  sink.add("photon_rate", charging::photocurrent(light).rate_per_s);

  sink.add("transport_zno1",
           charging::transport_consistency({8.6e-5, 2e25, 37e-4}).predicted_resistivity_ohm_m);
  sink.add("transport_zno2",
           charging::transport_consistency({13.2e-5, 1.5e25, 28e-4}).predicted_resistivity_ohm_m);
  return report;
}

int reproduction_exit_code(const Report& report) {
  if (report.count(Status::mismatch) > 0) return 1;
  std::set<std::string_view> documented;
  for (const auto& r : report.rows) {
    if (r.status == Status::mismatch_documented) documented.insert(r.id);
  }
  const auto known = documented_discrepancies();
  const std::set<std::string_view> expected(known.begin(), known.end());
  return documented == expected ? 0 : 1;
}

FitReport fit_report(std::span<const NamedTrace> traces, const UncertainQuantity& fsr,
                     ringdown::PoolingMode mode) {
  FitReport out{{}, std::nullopt, std::nullopt, fsr,
                mode == ringdown::PoolingMode::per_trace ? "per-trace" : "joint-v0"};
  std::vector<ringdown::RingdownTrace> good;
  for (const auto& t : traces) {
    TraceFitRow row{t.name, std::nullopt, ""};
    try {
      row.fit = ringdown::fit_ringdown(t.trace);
      good.push_back(t.trace);
    } catch (const Error& e) {
      row.error = e.what();
    }
    out.traces.push_back(std::move(row));
  }
  if (!good.empty()) {
    const auto pooled = ringdown::pool_traces(good, mode);
    out.pooled_linewidth = pooled.linewidth;
    out.finesse = ringdown::finesse(pooled.linewidth, fsr);
  }
  return out;
}

std::string render_fit_csv(const FitReport& report) {
  std::string out = "trace,linewidth_hz,sigma_hz,v0\n";
  for (const auto& t : report.traces) {
    if (t.fit) {
      out += fmt::format("{},{},{},{}\n", csv_field(t.trace), csv_num(t.fit->linewidth.value()),
                         csv_num(t.fit->linewidth.sigma()), csv_num(t.fit->v0.value()));
    } else {
      out += fmt::format("{},,,\n", csv_field(t.trace));
    }
  }
  if (report.pooled_linewidth) {
    out += fmt::format("pooled,{},{},\n", csv_num(report.pooled_linewidth->value()),
                       csv_num(report.pooled_linewidth->sigma()));
  }
  return out;
}

std::string render_fit_text(const FitReport& report) {
  std::string out;
  for (const auto& t : report.traces) {
    if (t.fit) {
      out += fmt::format("{}: linewidth {} +- {} Hz, V0 {} V, {} iterations\n", t.trace,
                         num(t.fit->linewidth.value()), num(t.fit->linewidth.sigma()),
                         num(t.fit->v0.value()), t.fit->iterations);
    } else {
      out += fmt::format("{}: error: {}\n", t.trace, t.error);
    }
  }
  if (report.pooled_linewidth && report.finesse) {
    out += fmt::format("pooled ({}): linewidth {} +- {} Hz\n", report.mode,
                       num(report.pooled_linewidth->value()),
                       num(report.pooled_linewidth->sigma()));
    out += fmt::format("FSR {} +- {} Hz\n", num(report.fsr.value()), num(report.fsr.sigma()));
    out += fmt::format("finesse {} +- {}\n", num(report.finesse->value()),
                       num(report.finesse->sigma()));
  } else {
    out += "no trace could be fitted\n";
  }
  return out;
}

namespace {

constexpr std::pair<std::string_view, BudgetTarget> kTargets[] = {
    {"cooling", BudgetTarget::cooling},
    {"coupling", BudgetTarget::coupling},
    {"lamb-dicke", BudgetTarget::lamb_dicke},
    {"gate", BudgetTarget::gate},
    {"rydberg-coherence", BudgetTarget::rydberg_coherence},
    {"rydberg-gate", BudgetTarget::rydberg_gate},
    {"charging", BudgetTarget::charging},
};

}  // namespace

std::optional<BudgetTarget> parse_budget_target(std::string_view name) {
  for (const auto& [n, t] : kTargets) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::string_view to_string(BudgetTarget t) {
  for (const auto& [n, target] : kTargets) {
    if (target == t) return n;
  }
  return "?";
}

std::string render_sweep_csv(const Sweep& sweep) {
  std::string out;
  for (std::size_t i = 0; i < sweep.columns.size(); ++i) {
    out += (i ? "," : "") + sweep.columns[i];
  }
  out += "\n";
  for (const auto& row : sweep.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += (i ? "," : "") + csv_num(row[i]);
    }
    out += "\n";
  }
  return out;
}

namespace {

class BudgetBuilder {
 public:
  explicit BudgetBuilder(BudgetReport& out) : out_(out) {}

  void row(std::string_view id, std::string_view quantity, std::string_view unit, double value,
           std::string_view note = "") {
    const ManifestEntry e{id, quantity, unit, std::nullopt, {}, false, note};
    out_.report.rows.push_back(evaluate(e, value, 0.0));
  }

  // Fills `points` rows over [0, upper] of the swept column.
  template <typename F>
  void sweep(std::vector<std::string> columns, double upper, F&& point) {
    out_.sweep.columns = std::move(columns);
    for (std::size_t i = 0; i < kSweepPoints; ++i) {
      const double x = upper * static_cast<double>(i) / static_cast<double>(kSweepPoints - 1);
      out_.sweep.rows.push_back(point(x));
    }
  }

 private:
  BudgetReport& out_;
};

double sweep_ceiling(double q) { return q > 0.0 ? 2.0 * q : 1000.0; }

}  // namespace

BudgetReport run_budget(const scenario::Scenario& s, BudgetTarget target) {
  BudgetReport out;
  out.report.title = fmt::format("cavitytk budget: {}", to_string(target));
  const char* source = s.seed_source == scenario::SeedSource::environment ? "TOOLKIT_SEED"
                       : s.seed_source == scenario::SeedSource::file      ? "scenario"
                                                                          : "default";
  if (!s.name.empty()) out.report.provenance.push_back(fmt::format("scenario = {}", s.name));
  out.report.provenance.push_back(fmt::format("seed = {} ({})", s.seed, source));
  out.report.provenance.push_back("budget inputs are exact; sigma = 0");
  BudgetBuilder b(out);

  switch (target) {
    case BudgetTarget::cooling: {
      const auto trap = s.trap();
      const double xq = s.charges().x_q_m;
      const double floor = s.find("trap", "intensity_floor").value_or(0.5);
      const auto r = ion::max_charge_for_cooling(trap, xq, floor);
      b.row("q1_max", "largest Q1 keeping the carrier intensity", "e", r.q1_max_e,
            fmt::format("J0^2 >= {:g}", floor));
      b.row("field", "E_Q at the displaced ion", "V/m", std::abs(r.field_v_per_m));
      b.row("displacement", "ion displacement x~", "m", std::abs(r.displacement_m));
      b.row("micromotion", "micromotion amplitude x_um", "m", r.micromotion_m);
      b.sweep({"q1_e", "displacement_m", "micromotion_m", "carrier_intensity"},
              sweep_ceiling(r.q1_max_e), [&](double q) {
                const auto ion = ion::ion_response(trap, {q, 0.0, xq});
                return std::vector<double>{
                    q, std::abs(ion.displacement_m), ion.micromotion_m,
                    ion::carrier_intensity_factor(ion.micromotion_m, trap.cooling_wavelength_m)};
              });
      break;
    }
    case BudgetTarget::coupling: {
      const auto trap = s.trap();
      const double xq = s.charges().x_q_m;
      const double target_x = trap.cavity_wavelength_m / 8.0;
      const auto r = ion::charge_for_displacement(trap, xq, target_x);
      b.row("q1", "Q1 displacing the ion by lambda_c / 8", "e", r.q1_max_e);
      b.row("field", "E_Q at the displaced ion", "V/m", std::abs(r.field_v_per_m));
      b.row("displacement", "ion displacement x~", "m", std::abs(r.displacement_m));
      const double q1 = s.find("charges", "q1_e").value_or(0.0);
      if (q1 > 0.0) {
        const auto ion = ion::ion_response(trap, {q1, 0.0, xq});
        b.row("displacement_at_q1", "x~ at the scenario Q1", "m", std::abs(ion.displacement_m));
        b.row("field_at_q1", "E_Q at the scenario Q1", "V/m", std::abs(ion.field_v_per_m));
      }
      b.sweep({"q1_e", "displacement_m", "field_v_per_m", "displacement_over_lambda_c"},
              sweep_ceiling(r.q1_max_e), [&](double q) {
                const auto ion = ion::ion_response(trap, {q, 0.0, xq});
                return std::vector<double>{q, std::abs(ion.displacement_m),
                                           std::abs(ion.field_v_per_m),
                                           std::abs(ion.displacement_m) / trap.cavity_wavelength_m};
              });
      break;
    }
    case BudgetTarget::lamb_dicke: {
      const auto trap = s.trap();
      const double xq = s.charges().x_q_m;
      const double limit = s.find("trap", "lamb_dicke_limit").value_or(0.2);
      const auto r = ion::lamb_dicke_budget(trap, xq, limit);
      b.row("q1_max", "largest Q1 with k x_um below the limit", "e", r.q1_max_e,
            fmt::format("k x_um < {:g}", limit));
      b.row("field", "E_Q at the displaced ion", "V/m", std::abs(r.field_v_per_m));
      b.row("displacement", "largest displacement x~", "m", r.displacement_max_m);
      b.row("micromotion", "largest micromotion x_um", "m", r.micromotion_max_m);
      b.row("zero_point_spread", "zero-point spread", "m",
            ion::zero_point_spread(trap.mass_kg, trap.secular_frequency));
      const double k = 2.0 * pi / trap.gate_wavelength_m;
      b.sweep({"q1_e", "displacement_m", "micromotion_m", "k_x_um"}, sweep_ceiling(r.q1_max_e),
              [&](double q) {
                const auto ion = ion::ion_response(trap, {q, 0.0, xq});
                return std::vector<double>{q, std::abs(ion.displacement_m), ion.micromotion_m,
                                           k * ion.micromotion_m};
              });
      break;
    }
    case BudgetTarget::gate: {
      const auto trap = s.trap();
      const auto gate = s.gate();
      const auto charges = s.charges();
      const auto v = ion::gate_detuning_verdict(trap, charges, gate);
      const double bound = ion::max_symmetric_charge_for_gate(trap, charges.x_q_m, gate);
      b.row("delta_x", "secular shift delta_x / 2pi", "Hz", v.delta_x / (2.0 * pi));
      b.row("ratio_rabi", "delta_x / Omega_2g", "1", v.ratio);
      b.row("ratio_secular", "delta_x / omega_x", "1", v.ratio_to_secular);
      b.row("within_threshold", "delta_x / Omega_2g below threshold", "1",
            v.within_threshold ? 1.0 : 0.0, fmt::format("threshold {:g}", gate.threshold_ratio));
      b.row("q_bound", "largest Q1 = Q2 within the threshold", "e", bound);
      b.sweep({"q_e", "delta_x_over_rabi", "delta_x_over_secular"},
              sweep_ceiling(std::max(bound, std::max(charges.q1_e, charges.q2_e))),
              [&](double q) {
                const auto g = ion::gate_detuning_verdict(trap, {q, q, charges.x_q_m}, gate);
                return std::vector<double>{q, g.ratio, g.ratio_to_secular};
              });
      break;
    }
    case BudgetTarget::rydberg_coherence: {
      const auto cfg = s.rydberg();
      const double xq = s.charges().x_q_m;
      const double goal = s.find("rydberg", "coherence_goal_s").value_or(5e-6);
      const auto r = rydberg::max_charge_for_coherence(cfg, goal, xq);
      b.row("q1", "Q1 decohering in the goal time", "e", r.q1_e,
            fmt::format("tau_pi = {:g} s", goal));
      b.row("field", "E_Q at the atom", "V/m", r.field_v_per_m);
      b.row("stark_shift", "delta_R / 2pi", "Hz", rydberg::stark_shift(cfg, r.field_v_per_m));
      b.row("tau_pi", "decoherence time tau_pi", "s",
            rydberg::decoherence_time(cfg, r.field_v_per_m));
      b.sweep({"q1_e", "field_v_per_m", "stark_shift_hz", "tau_pi_s"}, sweep_ceiling(r.q1_e),
              [&](double q) {
                const double e = rydberg::field_at_centre(q, xq);
                return std::vector<double>{q, e, rydberg::stark_shift(cfg, e),
                                           rydberg::decoherence_time(cfg, e)};
              });
      break;
    }
    case BudgetTarget::rydberg_gate: {
      auto cfg = s.rydberg();
      cfg.two_photon_rabi = 2.0 * pi * s.number("rydberg", "rabi_hz");
      const double xq = s.charges().x_q_m;
      const double target_inf = s.find("rydberg", "target_infidelity").value_or(0.01);
      const auto r = rydberg::max_charge_for_infidelity(cfg, target_inf, xq);
      b.row("q1", "Q1 reaching the blockade infidelity", "e", r.q1_e,
            fmt::format("1 - F = {:g}", target_inf));
      b.row("field", "E_Q at the atom", "V/m", r.field_v_per_m);
      b.row("stark_shift", "delta_R / 2pi", "Hz", rydberg::stark_shift(cfg, r.field_v_per_m));
      b.sweep({"q1_e", "field_v_per_m", "stark_shift_hz", "infidelity"}, sweep_ceiling(r.q1_e),
              [&](double q) {
                const double e = rydberg::field_at_centre(q, xq);
                const double shift = rydberg::stark_shift(cfg, e);
                return std::vector<double>{q, e, shift,
                                           rydberg::blockade_infidelity(cfg, 2.0 * pi * shift)};
              });
      break;
    }
    case BudgetTarget::charging: {
      const auto film = s.film();
      auto light = s.illumination();
      const auto resistance = charging::film_resistance(film);
      const auto current = charging::photocurrent(light);
      const auto eq = charging::equilibrium_charge(resistance.resistance_ohm, film.capacitance_f,
                                                   current.current_a);
      b.row("sheet_resistance", "sheet resistance", "Ohm/sq", resistance.sheet_resistance_ohm_sq);
      b.row("resistance", "film resistance", "Ohm", resistance.resistance_ohm);
      b.row("electron_rate", "photo-electron rate", "1/s", current.rate_per_s,
            light.electron_rate_override ? "scenario override" : "eta P lambda / (h c)");
      b.row("voltage", "film voltage", "V", eq.voltage_v);
      b.row("charge", "equilibrium charge", "e", eq.charge_e);
      b.row("rc_time", "discharge RC time", "s", eq.rc_time_s);
      if (light.beam_waist_m > 0.0 && light.mirror_distance_m > 0.0) {
        b.row("clipping", "Gaussian clipping factor", "1",
              charging::gaussian_clipping_factor(light.beam_waist_m, light.mirror_distance_m));
      }
      if (light.electron_rate_override) {
        auto bare = light;
        bare.electron_rate_override.reset();
        b.row("first_principles_rate", "eta P lambda / (h c)", "1/s",
              charging::photocurrent(bare).rate_per_s, "flagged: differs from the override");
      }
      const double p0 = light.power_w;
      b.sweep({"power_w", "electron_rate_per_s", "charge_e"}, p0 > 0.0 ? 2.0 * p0 : 1e-3,
              [&](double p) {
                auto l = light;
                l.power_w = p;
                if (l.electron_rate_override) {
                  l.electron_rate_override = p0 > 0.0 ? *light.electron_rate_override * p / p0 : 0.0;
                }
                const auto c = charging::photocurrent(l);
                const auto q = charging::equilibrium_charge(resistance.resistance_ohm,
                                                            film.capacitance_f, c.current_a);
                return std::vector<double>{p, c.rate_per_s, q.charge_e};
              });
      break;
    }
  }
  return out;
}

}  // namespace cavitytk::reports
