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

#include <numbers>

// CODATA 2018 values. The SI redefinition fixes e, h, c exactly.
namespace cavitytk::constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double elementary_charge = 1.602176634e-19;     // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double planck = 6.62607015e-34;                 // J s
inline constexpr double hbar = planck / (2.0 * pi);              // J s
inline constexpr double speed_of_light = 299792458.0;            // m/s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;    // kg
inline constexpr double electron_mass = 9.1093837015e-31;        // kg

/// Coulomb constant 1/(4 pi eps0), in N m^2 / C^2.
inline constexpr double coulomb = 1.0 / (4.0 * pi * vacuum_permittivity);

}  // namespace cavitytk::constants
