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

#include "cavitytk/scenario.hpp"

#include <cmath>
#include <fstream>
#include <span>
#include <sstream>

#include <fmt/format.h>

#include "cavitytk/constants.hpp"
#include "cavitytk/errors.hpp"
#include "cavitytk/text.hpp"

namespace cavitytk::scenario {

namespace {

enum class Rule { any, positive, non_negative, open_unit, closed_unit, below_half, count };

struct KeySpec {
  std::string_view section;
  std::string_view stem;
  std::string_view unit;  // suffix after `stem_`; empty for dimensionless keys
  Rule rule;

  std::string key() const {
    return unit.empty() ? std::string(stem) : fmt::format("{}_{}", stem, unit);
  }
};

// Canonical order for serialization.
constexpr std::string_view kSections[] = {"cavity", "trap",  "charges",
                                          "rydberg", "film", "illumination"};

constexpr KeySpec kSchema[] = {
    {"cavity", "f00", "", Rule::positive},
    {"cavity", "f00_sigma", "", Rule::non_negative},
    {"cavity", "f01", "", Rule::positive},
    {"cavity", "f01_sigma", "", Rule::non_negative},
    {"cavity", "fsr", "hz", Rule::positive},
    {"cavity", "fsr_sigma", "hz", Rule::non_negative},
    {"cavity", "length", "m", Rule::positive},
    {"cavity", "film_thickness", "m", Rule::positive},
    {"cavity", "film_thickness_sigma", "m", Rule::non_negative},
    {"cavity", "wavelength", "m", Rule::positive},

    {"trap", "mass", "amu", Rule::positive},
    {"trap", "secular", "hz", Rule::positive},
    {"trap", "rf", "hz", Rule::positive},
    {"trap", "cooling_wavelength", "m", Rule::positive},
    {"trap", "gate_wavelength", "m", Rule::positive},
    {"trap", "cavity_wavelength", "m", Rule::positive},
    {"trap", "gate_rabi", "hz", Rule::positive},
    {"trap", "occupation", "", Rule::count},
    {"trap", "gate_threshold", "", Rule::positive},
    {"trap", "intensity_floor", "", Rule::open_unit},
    {"trap", "lamb_dicke_limit", "", Rule::positive},

    {"charges", "q1", "e", Rule::any},
    {"charges", "q2", "e", Rule::any},
    {"charges", "xq", "m", Rule::positive},
    {"charges", "test_charge", "e", Rule::any},

    {"rydberg", "alpha", "hz_m2_per_v2", Rule::positive},
    {"rydberg", "rabi", "hz", Rule::positive},
    {"rydberg", "target_infidelity", "", Rule::below_half},
    {"rydberg", "coherence_goal", "s", Rule::positive},

    {"film", "resistivity", "ohm_m", Rule::positive},
    {"film", "thickness", "m", Rule::positive},
    {"film", "radius", "m", Rule::positive},
    {"film", "capacitance", "f", Rule::positive},

    {"illumination", "power", "w", Rule::non_negative},
    {"illumination", "wavelength", "m", Rule::positive},
    {"illumination", "quantum_efficiency", "", Rule::closed_unit},
    {"illumination", "waist", "m", Rule::positive},
    {"illumination", "electron_rate", "per_s", Rule::non_negative},
};

const KeySpec* find_spec(std::string_view section, std::string_view key) {
  for (const auto& spec : kSchema) {
    if (spec.section == section && spec.key() == key) return &spec;
  }
  return nullptr;
}

bool known_section(std::string_view section) {
  for (auto s : kSections) {
    if (s == section) return true;
  }
  return false;
}

// Key with a recognised stem but a different unit suffix.
const KeySpec* suffix_mismatch(std::string_view section, std::string_view key) {
  const KeySpec* best = nullptr;
  for (const auto& spec : kSchema) {
    if (spec.section != section || spec.unit.empty()) continue;
    const std::string prefix = fmt::format("{}_", spec.stem);
    if (key == spec.stem || key.substr(0, prefix.size()) == prefix) {
      // Prefer the longest stem (film_thickness_sigma over film_thickness).
      if (best == nullptr || spec.stem.size() > best->stem.size()) best = &spec;
    }
  }
  return best;
}

void check_rule(const KeySpec& spec, double v) {
  const auto fail = [&](std::string_view need) {
    throw SchemaError(fmt::format("[{}] {} = {}: value must be {}", spec.section, spec.key(),
                                  text::format_double(v), need));
  };
  if (!std::isfinite(v)) fail("finite");
  switch (spec.rule) {
    case Rule::any: break;
    case Rule::positive: if (!(v > 0.0)) fail("positive"); break;
    case Rule::non_negative: if (!(v >= 0.0)) fail("non-negative"); break;
    case Rule::open_unit: if (!(v > 0.0 && v < 1.0)) fail("in (0, 1)"); break;
    case Rule::closed_unit: if (!(v >= 0.0 && v <= 1.0)) fail("in [0, 1]"); break;
    case Rule::below_half: if (!(v > 0.0 && v < 0.5)) fail("in (0, 0.5)"); break;
    case Rule::count:
      if (!(v >= 0.0) || v != std::floor(v)) fail("a non-negative integer");
      break;
  }
}

std::uint64_t parse_unsigned(std::string_view key, std::string_view raw) {
  double v = 0.0;
  if (!text::parse_double(raw, v) || !(v >= 0.0) || v != std::floor(v) || v > 1.8e19) {
    throw SchemaError(fmt::format("{} = {}: expected a non-negative integer", key, raw));
  }
  return static_cast<std::uint64_t>(v);
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return text::trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

}  // namespace

bool Scenario::has_section(std::string_view section) const {
  return values_.find(section) != values_.end();
}

std::optional<double> Scenario::find(std::string_view section, std::string_view key) const {
  const auto s = values_.find(section);
  if (s == values_.end()) return std::nullopt;
  const auto k = s->second.find(key);
  if (k == s->second.end()) return std::nullopt;
  return k->second;
}

double Scenario::number(std::string_view section, std::string_view key) const {
  if (!has_section(section)) {
    throw SchemaError(fmt::format("missing section [{}] (needed for key {})", section, key));
  }
  const auto v = find(section, key);
  if (!v) throw SchemaError(fmt::format("missing key [{}] {}", section, key));
  return *v;
}

void Scenario::set(std::string_view section, std::string_view key, double value) {
  const KeySpec* spec = find_spec(section, key);
  if (spec == nullptr) {
    throw SchemaError(fmt::format("unknown key [{}] {}", section, key));
  }
  check_rule(*spec, value);
  values_[std::string(section)][std::string(key)] = value;
}

CavityInputs Scenario::cavity() const {
  CavityInputs c;
  c.f00 = UncertainQuantity(number("cavity", "f00"), find("cavity", "f00_sigma").value_or(0.0));
  c.f01 = UncertainQuantity(number("cavity", "f01"), find("cavity", "f01_sigma").value_or(0.0));
  if (const auto fsr = find("cavity", "fsr_hz")) {
    c.fsr = UncertainQuantity(*fsr, find("cavity", "fsr_sigma_hz").value_or(0.0), dim::frequency);
  } else if (const auto length = find("cavity", "length_m")) {
    c.fsr = UncertainQuantity::exact(constants::speed_of_light / (2.0 * *length), dim::frequency);
  }
  c.film_thickness =
      UncertainQuantity(number("cavity", "film_thickness_m"),
                        find("cavity", "film_thickness_sigma_m").value_or(0.0), dim::length);
  c.wavelength_m = number("cavity", "wavelength_m");
  return c;
}

ion::TrapConfig Scenario::trap() const {
  try {
    return ion::TrapConfig::from_lab_units(
        number("trap", "mass_amu"), number("trap", "secular_hz"), number("trap", "rf_hz"),
        number("trap", "cooling_wavelength_m"), number("trap", "gate_wavelength_m"),
        number("trap", "cavity_wavelength_m"));
  } catch (const ParameterError& e) {
    throw SchemaError(fmt::format("[trap] {}", e.what()));
  }
}

ion::GateParams Scenario::gate() const {
  ion::GateParams g;
  g.two_qubit_rabi = 2.0 * constants::pi * number("trap", "gate_rabi_hz");
  g.occupation = static_cast<int>(find("trap", "occupation").value_or(50.0));
  g.threshold_ratio = find("trap", "gate_threshold").value_or(0.013);
  return g;
}

electrostatics::ChargeScenario Scenario::charges() const {
  return {find("charges", "q1_e").value_or(0.0), find("charges", "q2_e").value_or(0.0),
          number("charges", "xq_m"), find("charges", "test_charge_e").value_or(1.0)};
}

rydberg::RydbergConfig Scenario::rydberg() const {
  rydberg::RydbergConfig r;
  if (!has_section("rydberg")) throw SchemaError("missing section [rydberg]");
  r.polarizability = find("rydberg", "alpha_hz_m2_per_v2").value_or(r.polarizability);
  if (const auto rabi = find("rydberg", "rabi_hz")) r.two_photon_rabi = 2.0 * constants::pi * *rabi;
  return r;
}

charging::FilmSample Scenario::film() const {
  return {number("film", "resistivity_ohm_m"), number("film", "thickness_m"),
          number("film", "radius_m"), find("film", "capacitance_f").value_or(0.1e-12)};
}

charging::IlluminationScenario Scenario::illumination() const {
  charging::IlluminationScenario s;
  s.power_w = number("illumination", "power_w");
  s.wavelength_m = number("illumination", "wavelength_m");
  s.quantum_efficiency = find("illumination", "quantum_efficiency").value_or(1.0);
  s.beam_waist_m = find("illumination", "waist_m").value_or(0.0);
  s.mirror_distance_m = find("charges", "xq_m").value_or(0.0);
  s.electron_rate_override = find("illumination", "electron_rate_per_s");
  return s;
}

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  std::string section;
  bool saw_seed = false;
  bool saw_name = false;
  bool saw_samples = false;
  std::size_t line_number = 0;
  std::istringstream in{std::string(text)};
  std::string raw_line;
  while (std::getline(in, raw_line)) {
    ++line_number;
    const auto line = strip_comment(raw_line);
    if (line.empty()) continue;
    const auto where = [&] { return fmt::format("line {}", line_number); };

    if (line.front() == '[') {
      if (line.back() != ']') throw SchemaError(fmt::format("{}: malformed section header", where()));
      section = std::string(text::trim(line.substr(1, line.size() - 2)));
      if (!known_section(section)) {
        throw SchemaError(fmt::format("{}: unknown section [{}]", where(), section));
      }
      if (s.has_section(section)) {
        throw SchemaError(fmt::format("{}: duplicate section [{}]", where(), section));
      }
      s.values_[section];
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw SchemaError(fmt::format("{}: expected `key = value`", where()));
    }
    const auto key = text::trim(line.substr(0, eq));
    const auto value = text::trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw SchemaError(fmt::format("{}: expected `key = value`", where()));
    }

    if (section.empty()) {
      if (key == "name") {
        if (saw_name) throw SchemaError(fmt::format("{}: duplicate key name", where()));
        s.name = std::string(value);
        saw_name = true;
      } else if (key == "seed") {
        if (saw_seed) throw SchemaError(fmt::format("{}: duplicate key seed", where()));
        s.seed = parse_unsigned(key, value);
        s.seed_source = SeedSource::file;
        saw_seed = true;
      } else if (key == "mc_samples") {
        if (saw_samples) throw SchemaError(fmt::format("{}: duplicate key mc_samples", where()));
        s.mc_samples = parse_unsigned(key, value);
        if (s.mc_samples < kMinMonteCarloSamples) {
          throw SchemaError(fmt::format("mc_samples = {} below the minimum of {}", s.mc_samples,
                                        kMinMonteCarloSamples));
        }
        saw_samples = true;
      } else {
        throw SchemaError(fmt::format("{}: unknown top-level key `{}`", where(), key));
      }
      continue;
    }

    const KeySpec* spec = find_spec(section, key);
    if (spec == nullptr) {
      if (const KeySpec* near = suffix_mismatch(section, key)) {
        throw SchemaError(fmt::format("{}: unit-suffix mismatch for `{}`; expected `{}`", where(),
                                      key, near->key()));
      }
      throw SchemaError(fmt::format("{}: unknown key `{}` in [{}]", where(), key, section));
    }
    double v = 0.0;
    if (!text::parse_double(value, v)) {
      throw SchemaError(fmt::format("{}: `{}` is not a number", where(), value));
    }
    if (s.find(section, key)) {
      throw SchemaError(fmt::format("{}: duplicate key `{}`", where(), key));
    }
    check_rule(*spec, v);
    s.values_[section][std::string(key)] = v;
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot open {}", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& s) {
  std::string out;
  if (!s.name.empty()) out += fmt::format("name = {}\n", s.name);
  out += fmt::format("seed = {}\n", s.seed);
  out += fmt::format("mc_samples = {}\n", s.mc_samples);
  for (auto section : kSections) {
    if (!s.has_section(section)) continue;
    out += fmt::format("\n[{}]\n", section);
    for (const auto& spec : kSchema) {
      if (spec.section != section) continue;
      const std::string key = spec.key();
      if (const auto v = s.find(section, key)) {
        out += fmt::format("{} = {}\n", key, text::format_double(*v));
      }
    }
  }
  return out;
}

}  // namespace cavitytk::scenario
