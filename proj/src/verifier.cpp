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

#include "fermap/verifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fermap {
namespace {

bool is_parity_plaquette(const TransformPlan& plan, int id) {
  const auto& pp = plan.mode_map.parity_plaquettes;
  return std::find(pp.begin(), pp.end(), id) != pp.end();
}

std::optional<int> parity_plaquette_of(const TransformPlan& plan, const CodeLayout& layout,
                                       Color color) {
  for (int id : plan.mode_map.parity_plaquettes) {
    if (layout.plaquette(id).color == color) return id;
  }
  return std::nullopt;
}

// Product of +Z over the dynamic modes of one colour.
PauliOperator parity_operator(const TransformPlan& plan, const CodeLayout& layout,
                              Color color) {
  PauliOperator out(layout.n());
  for (const auto& [id, q] : plan.mode_map.dynamic_modes) {
    if (layout.plaquette(id).color == color) out.set_letter(q, 'Z');
  }
  return out;
}

bool anticommutes_with_z(const PauliOperator& op, Qubit q) {
  return op.x().get(q);
}

ReportEntry structure_entry(std::string label, std::string expected, std::string actual,
                            bool pass) {
  return ReportEntry{ReportEntry::Kind::Structure, std::move(label), std::move(expected),
                     std::move(actual), pass};
}

ReportEntry check_mode_map(const TransformPlan& plan, const CodeLayout& layout) {
  const auto& mm = plan.mode_map;
  const std::size_t n = layout.n();
  const bool toric = layout.kind() == CodeKind::Toric;
  const std::size_t want_dynamic = toric ? n - 2 : n - 1;
  const std::size_t want_zero = toric ? 2 : 1;
  std::set<Qubit> dyn;
  bool ok = true;
  std::string problem;
  for (const auto& [id, q] : mm.dynamic_modes) {
    if (q >= n || !dyn.insert(q).second) {
      ok = false;
      problem = "dynamic mode " + std::to_string(q) + " repeated or out of range";
    }
    if (is_parity_plaquette(plan, id)) {
      ok = false;
      problem = "parity plaquette " + std::to_string(id) + " has a dynamic mode";
    }
  }
  std::set<Qubit> zero(mm.zero_modes.begin(), mm.zero_modes.end());
  if (zero.size() != mm.zero_modes.size()) {
    ok = false;
    problem = "zero modes repeated";
  }
  for (Qubit q : zero) {
    if (dyn.count(q) != 0 || q >= n) {
      ok = false;
      problem = "zero mode " + std::to_string(q) + " collides with a dynamic mode";
    }
  }
  if (dyn.size() != want_dynamic || zero.size() != want_zero) {
    ok = false;
    problem = "expected " + std::to_string(want_dynamic) + " dynamic and " +
              std::to_string(want_zero) + " zero modes";
  }
  if (toric && mm.parity_plaquettes.size() != 2) {
    ok = false;
    problem = "toric plan needs two parity plaquettes";
  }
  const std::string actual = ok ? "ok"
                                : problem + " (have " + std::to_string(dyn.size()) +
                                      " dynamic, " + std::to_string(zero.size()) + " zero)";
  return structure_entry("mode_map",
                         std::to_string(want_dynamic) + " distinct dynamic modes, " +
                             std::to_string(want_zero) + " disjoint zero modes",
                         actual, ok);
}

// Required (anti)commutation of logical pairs: anticommuting pairs listed.
std::vector<std::pair<std::string, std::string>> anticommuting_logical_pairs(CodeKind kind) {
  if (kind == CodeKind::Surface) return {{"X_L", "Z_L"}};
  return {{"X_L1", "Z_L1"}, {"X_L2", "Z_L2"}};
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

std::size_t ValidationReport::count(ReportEntry::Kind kind) const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [&](const auto& e) { return e.kind == kind; }));
}

std::size_t ValidationReport::passed(ReportEntry::Kind kind) const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&](const auto& e) {
    return e.kind == kind && e.pass;
  }));
}

PauliOperator transformed_stabilizer_target(const TransformPlan& plan,
                                            const CodeLayout& layout, int plaquette_id) {
  const auto& p = layout.plaquette(plaquette_id);
  if (is_parity_plaquette(plan, plaquette_id)) {
    return parity_operator(plan, layout, p.color);
  }
  const auto it = plan.mode_map.dynamic_modes.find(plaquette_id);
  if (it == plan.mode_map.dynamic_modes.end()) {
    throw std::invalid_argument("plaquette " + std::to_string(plaquette_id) +
                                " has no dynamic mode in the plan");
  }
  return PauliOperator::single(layout.n(), it->second, 'Z');
}

ValidationReport check_code_transform(const TransformPlan& plan, const CodeLayout& layout) {
  ValidationReport report;
  if (plan.kind != layout.kind() || plan.d != layout.d()) {
    report.entries.push_back(structure_entry(
        "layout", to_string(layout.kind()) + " d=" + std::to_string(layout.d()),
        to_string(plan.kind) + " d=" + std::to_string(plan.d), false));
    return report;
  }
  report.entries.push_back(check_mode_map(plan, layout));

  for (const auto& p : layout.plaquettes()) {
    const std::string label = "B" + std::to_string(p.id) + "(" + to_string(p.color) + ")";
    const PauliOperator actual = conjugate_by_plan(p.stabilizer, plan);
    std::string expected_text = "(no mode)";
    bool pass = false;
    if (is_parity_plaquette(plan, p.id) || plan.mode_map.dynamic_modes.count(p.id) != 0) {
      const PauliOperator expected = transformed_stabilizer_target(plan, layout, p.id);
      expected_text = pauli_to_text(expected);
      pass = actual == expected;
    }
    report.entries.push_back(ReportEntry{ReportEntry::Kind::Target, label, expected_text,
                                         pauli_to_text(actual), pass});
  }

  std::map<std::string, PauliOperator> transformed_logicals;
  for (const auto& l : layout.logicals()) {
    const PauliOperator actual = conjugate_by_plan(l.op, plan);
    transformed_logicals.emplace(l.label, actual);
    std::string expected_text = "(no zero mode)";
    bool pass = false;
    const auto it = plan.mode_map.logical_modes.find(l.label);
    if (it != plan.mode_map.logical_modes.end()) {
      const PauliOperator expected = PauliOperator::single(layout.n(), it->second, l.label[0]);
      expected_text = pauli_to_text(expected);
      const auto& zm = plan.mode_map.zero_modes;
      pass = actual == expected && std::find(zm.begin(), zm.end(), it->second) != zm.end();
    }
    report.entries.push_back(ReportEntry{ReportEntry::Kind::Target, l.label, expected_text,
                                         pauli_to_text(actual), pass});
  }

  // Logical commutation pattern: the listed pairs anticommute, all others
  // commute.
  const auto anti = anticommuting_logical_pairs(layout.kind());
  bool pattern_ok = true;
  for (auto a = transformed_logicals.begin(); a != transformed_logicals.end(); ++a) {
    for (auto b = std::next(a); b != transformed_logicals.end(); ++b) {
      const bool want_anti =
          std::find(anti.begin(), anti.end(), std::pair(a->first, b->first)) != anti.end() ||
          std::find(anti.begin(), anti.end(), std::pair(b->first, a->first)) != anti.end();
      if (commutes(a->second, b->second) == want_anti) pattern_ok = false;
    }
  }
  report.entries.push_back(structure_entry("logical_commutation", "required pattern",
                                           pattern_ok ? "ok" : "violated", pattern_ok));
  return report;
}

SyndromeSet syndrome(const CodeLayout& layout, const PauliOperator& op) {
  if (op.n() != layout.n()) {
    throw std::invalid_argument("syndrome: operator has " + std::to_string(op.n()) +
                                " qubits, layout has " + std::to_string(layout.n()));
  }
  SyndromeSet out;
  for (const auto& p : layout.plaquettes()) {
    if (!commutes(op, p.stabilizer)) out.ids.push_back(p.id);
  }
  return out;
}

SyndromeSet syndrome(const CodeLayout& layout, const PauliOperator& op, const ModeMap& modes) {
  SyndromeSet out = syndrome(layout, op);
  if (layout.kind() == CodeKind::Toric && modes.parity_plaquettes.size() == 2) {
    auto contains = [&](int id) {
      return std::find(out.ids.begin(), out.ids.end(), id) != out.ids.end();
    };
    out.black_parity = contains(modes.parity_plaquettes[0]);
    out.white_parity = contains(modes.parity_plaquettes[1]);
  }
  return out;
}

std::vector<int> endpoints_in_fermion_picture(const TransformPlan& plan,
                                              const CodeLayout& layout,
                                              const PauliOperator& transformed,
                                              bool* black_parity, bool* white_parity) {
  std::vector<int> ids;
  for (const auto& [id, q] : plan.mode_map.dynamic_modes) {
    if (anticommutes_with_z(transformed, q)) ids.push_back(id);
  }
  for (Color color : {Color::Black, Color::White}) {
    const auto parity_id = parity_plaquette_of(plan, layout, color);
    if (!parity_id) continue;
    const bool anti = !commutes(transformed, parity_operator(plan, layout, color));
    if (anti) ids.push_back(*parity_id);
    bool* flag = color == Color::Black ? black_parity : white_parity;
    if (flag != nullptr) *flag = anti;
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

StringMapReport map_operator(const TransformPlan& plan, const CodeLayout& layout,
                             const PauliOperator& op) {
  StringMapReport report;
  report.original = op;
  report.transformed = conjugate_by_plan(op, plan);
  report.endpoints_before = syndrome(layout, op).ids;
  report.endpoints_after = endpoints_in_fermion_picture(
      plan, layout, report.transformed, &report.black_parity, &report.white_parity);
  std::set<Qubit> zero(plan.mode_map.zero_modes.begin(), plan.mode_map.zero_modes.end());
  for (Qubit q : report.transformed.support()) {
    const char letter = report.transformed.letter(q);
    if (zero.count(q) != 0) {
      report.zero_mode_letters.emplace_back(q, letter);
    } else {
      report.dynamic_letters.emplace_back(q, letter);
    }
  }
  report.endpoints_preserved = report.endpoints_before == report.endpoints_after;
  return report;
}

StringMapReport map_string(const TransformPlan& plan, const CodeLayout& layout,
                           const StringPath& path) {
  return map_operator(plan, layout, string_operator(layout, path));
}

StringMapReport inverse_image_of_single_x(const TransformPlan& plan,
                                          const CodeLayout& layout, Qubit mode_qubit) {
  std::optional<int> owner;
  for (const auto& [id, q] : plan.mode_map.dynamic_modes) {
    if (q == mode_qubit) owner = id;
  }
  if (!owner) {
    throw std::invalid_argument("qubit " + std::to_string(mode_qubit) +
                                " is not a dynamic mode of the plan");
  }
  StringMapReport report;
  report.transformed = PauliOperator::single(layout.n(), mode_qubit, 'X');
  report.original = conjugate_by_plan(report.transformed, plan, /*inverse=*/true);
  report.endpoints_before = syndrome(layout, report.original).ids;
  report.endpoints_after = endpoints_in_fermion_picture(
      plan, layout, report.transformed, &report.black_parity, &report.white_parity);

  std::vector<int> expected{*owner};
  if (layout.kind() == CodeKind::Toric) {
    const auto partner = parity_plaquette_of(plan, layout, layout.plaquette(*owner).color);
    if (partner) expected.push_back(*partner);
  }
  std::sort(expected.begin(), expected.end());
  for (Qubit q : report.transformed.support()) {
    report.dynamic_letters.emplace_back(q, 'X');
  }
  report.endpoints_preserved =
      report.endpoints_before == expected && report.endpoints_after == expected;
  return report;
}

int commutator_phase(const PauliOperator& a, const PauliOperator& b) {
  if (!a.is_hermitian() || !b.is_hermitian()) {
    throw std::invalid_argument("commutator_phase needs Hermitian Pauli operators");
  }
  const PauliOperator loop = a * b * a * b;
  if (!loop.is_identity_up_to_phase() || loop.phase_exp() % 2 != 0) {
    throw std::invalid_argument("commutator_phase needs Hermitian Pauli operators");
  }
  return loop.phase_exp() == 0 ? 1 : -1;
}

int braiding_phase_check(const CodeLayout& layout, const StringPath& x_path,
                         const StringPath& z_path) {
  return commutator_phase(string_operator(layout, x_path), string_operator(layout, z_path));
}

int braiding_phase_check(const CodeLayout& layout, const StringPath& x_path,
                         const StringPath& z_path, const TransformPlan& plan) {
  return commutator_phase(conjugate_by_plan(string_operator(layout, x_path), plan),
                          conjugate_by_plan(string_operator(layout, z_path), plan));
}

}  // namespace fermap
