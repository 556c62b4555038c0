// Copyright 2026 The fermap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV interchange. Field names are stable; bump kSchemaVersion on any
// incompatible change.
//
// Pauli: {"n", "x", "z", "phase_exp", "text"}. x and z are hex with bit 0 as
// the high bit of the first digit; "text" is informational and ignored on read.
// Degeneracies are decimal strings since they overflow 64 bits.

#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fermap/lattice.hpp"
#include "fermap/planner.hpp"
#include "fermap/spectra.hpp"
#include "fermap/verifier.hpp"

namespace fermap {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json pauli_to_json(const PauliOperator& p);
PauliOperator pauli_from_json(const Json& j);

Json layout_to_json(const CodeLayout& layout);

Json plan_to_json(const TransformPlan& plan);
/// Validates shape, schema_version and every generator; throws FormatError.
TransformPlan plan_from_json(const Json& j);

Json report_to_json(const ValidationReport& report);
Json string_report_to_json(const StringMapReport& report);

Json spectrum_to_json(const Spectrum& spectrum);
/// Header "energy,degeneracy", one row per level, ascending energy.
std::string spectrum_to_csv(const Spectrum& spectrum);

Json entanglement_to_json(const EntanglementReport& report);

}  // namespace fermap
