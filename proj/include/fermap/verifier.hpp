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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermap/lattice.hpp"
#include "fermap/planner.hpp"

namespace fermap {

struct ReportEntry {
  enum class Kind { Target, Structure };
  Kind kind = Kind::Target;
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ReportEntry> entries;

  bool all_passed() const;
  std::size_t count(ReportEntry::Kind kind) const;
  std::size_t passed(ReportEntry::Kind kind) const;
};

/// Plaquette ids anticommuting with an operator, plus (toric, when a mode map
/// is supplied) whether it anticommutes with B_b1 and B_w1, the stabilizers
/// that become the parity operators.
struct SyndromeSet {
  std::vector<int> ids;
  std::optional<bool> black_parity;
  std::optional<bool> white_parity;

  bool operator==(const SyndromeSet&) const = default;
};

struct StringMapReport {
  PauliOperator original;
  PauliOperator transformed;
  /// Syndrome of `original` on the code lattice.
  std::vector<int> endpoints_before;
  /// Endpoints read off `transformed` through the mode map: plaquettes whose
  /// mode carries X or Y, plus b1/w1 when the black/white parity operator
  /// anticommutes.
  std::vector<int> endpoints_after;
  /// (qubit, letter) on dynamic modes and on zero modes.
  std::vector<std::pair<Qubit, char>> dynamic_letters;
  std::vector<std::pair<Qubit, char>> zero_mode_letters;
  bool black_parity = false;
  bool white_parity = false;
  bool endpoints_preserved = false;
};

/// Every plaquette and logical conjugated through the plan must land on its
/// target form: +Z on its dynamic mode, the same-colour parity product for the
/// toric b1/w1, +X/+Z on the zero modes for logicals. Also checks the mode map
/// invariants and the logical commutation pattern.
ValidationReport check_code_transform(const TransformPlan& plan, const CodeLayout& layout);

SyndromeSet syndrome(const CodeLayout& layout, const PauliOperator& op);
SyndromeSet syndrome(const CodeLayout& layout, const PauliOperator& op,
                     const ModeMap& modes);

/// Target form of a plaquette stabilizer after the map.
PauliOperator transformed_stabilizer_target(const TransformPlan& plan,
                                            const CodeLayout& layout, int plaquette_id);

/// Endpoints of an already-transformed operator, read through the mode map.
std::vector<int> endpoints_in_fermion_picture(const TransformPlan& plan,
                                              const CodeLayout& layout,
                                              const PauliOperator& transformed,
                                              bool* black_parity = nullptr,
                                              bool* white_parity = nullptr);

StringMapReport map_operator(const TransformPlan& plan, const CodeLayout& layout,
                             const PauliOperator& op);
StringMapReport map_string(const TransformPlan& plan, const CodeLayout& layout,
                           const StringPath& path);

/// Pulls a single X on a dynamic mode back to the code picture. On return
/// `original` is the pre-image, `transformed` the single X, and
/// endpoints_preserved says whether the pre-image syndrome is exactly {p}
/// (surface) or {p, b1 or w1} (toric).
StringMapReport inverse_image_of_single_x(const TransformPlan& plan,
                                          const CodeLayout& layout, Qubit mode_qubit);

/// O_X O_Z O_X O_Z for Hermitian Paulis: +1 or -1.
int commutator_phase(const PauliOperator& a, const PauliOperator& b);
int braiding_phase_check(const CodeLayout& layout, const StringPath& x_path,
                         const StringPath& z_path);
/// Same, after conjugating both string operators through the plan.
int braiding_phase_check(const CodeLayout& layout, const StringPath& x_path,
                         const StringPath& z_path, const TransformPlan& plan);

}  // namespace fermap
