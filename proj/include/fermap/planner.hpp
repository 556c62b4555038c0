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

#include <map>
#include <string>
#include <vector>

#include "fermap/lattice.hpp"
#include "fermap/pauli.hpp"

namespace fermap {

struct ValidationReport;

/// What a plan step belongs to: a plaquette's part or a logical's part.
struct Provenance {
  enum class Kind { Plaquette, Logical };
  Kind kind = Kind::Plaquette;
  int plaquette_id = -1;
  std::string logical_label;

  static Provenance plaquette(int id) { return {Kind::Plaquette, id, {}}; }
  static Provenance logical(std::string label) {
    return {Kind::Logical, -1, std::move(label)};
  }
  bool operator==(const Provenance&) const = default;
};

struct PlanStep {
  C4Rotation rotation;
  Provenance provenance;
  /// The arrowhead: qubit receiving the +/-Y (or swapped letter) in this part
  /// and carrying the transformed operator afterwards.
  Qubit target_qubit = 0;
  /// Zero-based index of the unitary part this step belongs to.
  int part = 0;

  bool operator==(const PlanStep&) const = default;
};

/// Where each transformed operator ends up.
struct ModeMap {
  /// plaquette id -> qubit carrying +Z for that plaquette.
  std::map<int, Qubit> dynamic_modes;
  /// Surface: one zero mode. Toric: two, in logical-qubit order.
  std::vector<Qubit> zero_modes;
  /// Toric only: ids of b1 and w1, which map to the parity operators.
  std::vector<int> parity_plaquettes;
  /// logical label -> zero mode carrying it.
  std::map<std::string, Qubit> logical_modes;

  bool operator==(const ModeMap&) const = default;
};

/// Ordered C4 rotations realising the map to fermion modes. The first step acts
/// first on an operator (Heisenberg picture, q -> R^dagger q R).
struct TransformPlan {
  CodeKind kind = CodeKind::Surface;
  int d = 0;
  std::vector<PlanStep> steps;
  ModeMap mode_map;
  /// Toric only: plaquette id -> id of the same-colour plaquette its arrow
  /// points at (the plaquette sharing the target corner).
  std::map<int, int> arrow_parent;

  std::vector<C4Rotation> rotations() const;
  int part_count() const;
  bool operator==(const TransformPlan&) const = default;
};

TransformPlan plan_surface(const CodeLayout& layout);
TransformPlan plan_toric(const CodeLayout& layout);
TransformPlan plan_for(const CodeLayout& layout);

/// Arrow corner used for a toric plaquette (black or white); std::nullopt for
/// b1 and w1, which get no part.
std::optional<Corner> toric_arrow_corner(const CodeLayout& layout, int plaquette_id);

PauliOperator conjugate_by_plan(const PauliOperator& q, const TransformPlan& plan,
                                bool inverse = false);

/// Runs the transform checks of the verifier; the plan is acceptable only if
/// every entry passes.
ValidationReport validate_plan(const TransformPlan& plan, const CodeLayout& layout);

}  // namespace fermap
