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
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cavitytk/charging_model.hpp"
#include "cavitytk/electrostatics.hpp"
#include "cavitytk/ion_impact.hpp"
#include "cavitytk/quantities.hpp"
#include "cavitytk/rydberg_impact.hpp"

namespace cavitytk::scenario {

/// Finesse-to-extinction inputs of the [cavity] section.
struct CavityInputs {
  UncertainQuantity f00;
  UncertainQuantity f01;
  std::optional<UncertainQuantity> fsr;  // Hz; from fsr_hz or length_m
  UncertainQuantity film_thickness;      // m
  double wavelength_m = 0.0;
};

enum class SeedSource { defaulted, file, environment };

/// A parsed scenario document. Values are held exactly as written, in the
/// units named by each key's suffix; the typed accessors convert to SI and
/// throw SchemaError naming the first missing key.
///
/// Format: UTF-8 text, optional top-level `name`, `seed`, `mc_samples`
/// keys, then `[section]` blocks of `key = value` lines. `#` starts a
/// comment. Unknown sections or keys are rejected.
class Scenario {
 public:
  std::string name;
  std::uint64_t seed = 0;
  std::size_t mc_samples = 100'000;
  SeedSource seed_source = SeedSource::defaulted;

  bool has_section(std::string_view section) const;
  std::optional<double> find(std::string_view section, std::string_view key) const;
  /// Throws SchemaError("missing key [section] key") when absent.
  double number(std::string_view section, std::string_view key) const;
  /// Sets a value after checking it against the schema.
  void set(std::string_view section, std::string_view key, double value);

  CavityInputs cavity() const;
  ion::TrapConfig trap() const;
  ion::GateParams gate() const;
  electrostatics::ChargeScenario charges() const;
  rydberg::RydbergConfig rydberg() const;
  charging::FilmSample film() const;
  charging::IlluminationScenario illumination() const;

  /// Compares content; seed_source is provenance and is ignored.
  friend bool operator==(const Scenario& l, const Scenario& r) {
    return l.name == r.name && l.seed == r.seed && l.mc_samples == r.mc_samples &&
           l.values_ == r.values_;
  }

 private:
  friend Scenario parse_scenario(std::string_view text);
  std::map<std::string, std::map<std::string, double, std::less<>>, std::less<>> values_;
};

/// Throws SchemaError on unknown sections or keys, unit-suffix mismatches,
/// duplicates, malformed lines or values outside a key's domain.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical text: schema key order and shortest round-trip decimals, so
/// parse_scenario(serialize_scenario(s)) == s.
std::string serialize_scenario(const Scenario& s);

}  // namespace cavitytk::scenario
