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

#include "fermap/serialize.hpp"

#include <sstream>

namespace fermap {
namespace {

std::string letters(const std::vector<std::pair<Qubit, char>>& v) {
  std::string out;
  for (const auto& [q, c] : v) {
    if (!out.empty()) out += ' ';
    out += c + std::to_string(q);
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

Json pauli_to_json(const PauliOperator& p) {
  return Json{{"n", p.n()},
              {"x", p.x().to_hex()},
              {"z", p.z().to_hex()},
              {"phase_exp", p.phase_exp()},
              {"text", pauli_to_text(p)}};
}

PauliOperator pauli_from_json(const Json& j) {
  const auto n = get<std::size_t>(j, "n");
  try {
    return PauliOperator(BitVec::from_hex(get<std::string>(j, "x"), n),
                         BitVec::from_hex(get<std::string>(j, "z"), n),
                         get<int>(j, "phase_exp"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(std::string("bad Pauli: ") + e.what());
  }
}

Json layout_to_json(const CodeLayout& layout) {
  Json plaquettes = Json::array();
  for (const auto& p : layout.plaquettes()) {
    plaquettes.push_back({{"id", p.id},
                          {"color", to_string(p.color)},
                          {"anchor", {p.anchor_row, p.anchor_col}},
                          {"qubits", p.qubits},
                          {"stabilizer", pauli_to_text(p.stabilizer)}});
  }
  Json logicals = Json::array();
  for (const auto& l : layout.logicals()) {
    logicals.push_back({{"label", l.label}, {"path", l.path}, {"op", pauli_to_text(l.op)}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"code", to_string(layout.kind())},
              {"d", layout.d()},
              {"rows", layout.d()},
              {"cols", layout.d()},
              {"n", layout.n()},
              {"plaquettes", plaquettes},
              {"logicals", logicals}};
}

Json plan_to_json(const TransformPlan& plan) {
  Json steps = Json::array();
  for (const auto& s : plan.steps) {
    Json prov;
    if (s.provenance.kind == Provenance::Kind::Plaquette) {
      prov = {{"kind", "plaquette"}, {"plaquette_id", s.provenance.plaquette_id}};
    } else {
      prov = {{"kind", "logical"}, {"label", s.provenance.logical_label}};
    }
    steps.push_back({{"generator", pauli_to_json(s.rotation.generator())},
                     {"provenance", prov},
                     {"target", s.target_qubit},
                     {"part", s.part}});
  }
  Json dyn = Json::array();
  for (const auto& [id, q] : plan.mode_map.dynamic_modes) dyn.push_back({{"plaquette_id", id}, {"qubit", q}});
  Json logical_modes = Json::object();
  for (const auto& [label, q] : plan.mode_map.logical_modes) logical_modes[label] = q;
  Json arrows = Json::array();
  for (const auto& [id, parent] : plan.arrow_parent) arrows.push_back({{"plaquette_id", id}, {"parent", parent}});
  return Json{{"schema_version", kSchemaVersion},
              {"code", to_string(plan.kind)},
              {"d", plan.d},
              {"steps", steps},
              {"mode_map",
               {{"dynamic_modes", dyn},
                {"zero_modes", plan.mode_map.zero_modes},
                {"parity_plaquettes", plan.mode_map.parity_plaquettes},
                {"logical_modes", logical_modes}}},
              {"arrow_parent", arrows}};
}

TransformPlan plan_from_json(const Json& j) {
  const int version = get<int>(j, "schema_version");
  if (version != kSchemaVersion) {
    throw FormatError("unsupported schema_version " + std::to_string(version));
  }
  TransformPlan plan;
  try {
    plan.kind = code_kind_from_string(get<std::string>(j, "code"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception& e) {
    throw FormatError(e.what());
  }
  plan.d = get<int>(j, "d");
  const std::size_t n = static_cast<std::size_t>(plan.d) * static_cast<std::size_t>(plan.d);
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw FormatError("'steps' must be an array");
  for (const auto& s : steps) {
    PauliOperator g = pauli_from_json(field(s, "generator"));
    if (g.n() != n) throw FormatError("generator size does not match d");
    if (!g.is_hermitian() || g.is_identity_up_to_phase()) {
      throw FormatError("generator " + pauli_to_text(g) + " is not a Hermitian non-identity Pauli");
    }
    const Json& prov = field(s, "provenance");
    const auto kind = get<std::string>(prov, "kind");
    Provenance p;
    if (kind == "plaquette") {
      p = Provenance::plaquette(get<int>(prov, "plaquette_id"));
    } else if (kind == "logical") {
      p = Provenance::logical(get<std::string>(prov, "label"));
    } else {
      throw FormatError("unknown provenance kind '" + kind + "'");
    }
    const auto target = get<Qubit>(s, "target");
    if (target >= n) throw FormatError("target qubit out of range");
    plan.steps.push_back(PlanStep{C4Rotation(std::move(g)), std::move(p), target, get<int>(s, "part")});
  }
  const Json& mm = field(j, "mode_map");
  for (const auto& e : field(mm, "dynamic_modes")) {
    plan.mode_map.dynamic_modes[get<int>(e, "plaquette_id")] = get<Qubit>(e, "qubit");
  }
  plan.mode_map.zero_modes = get<std::vector<Qubit>>(mm, "zero_modes");
  plan.mode_map.parity_plaquettes = get<std::vector<int>>(mm, "parity_plaquettes");
  const Json& lm = field(mm, "logical_modes");
  if (!lm.is_object()) throw FormatError("'logical_modes' must be an object");
  for (const auto& [label, q] : lm.items()) {
    if (!q.is_number_unsigned()) throw FormatError("bad logical mode for " + label);
    plan.mode_map.logical_modes[label] = q.get<Qubit>();
  }
  for (const auto& e : field(j, "arrow_parent")) {
    plan.arrow_parent[get<int>(e, "plaquette_id")] = get<int>(e, "parent");
  }
  return plan;
}

Json report_to_json(const ValidationReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"kind", e.kind == ReportEntry::Kind::Target ? "target" : "structure"},
                       {"label", e.label},
                       {"expected", e.expected},
                       {"actual", e.actual},
                       {"pass", e.pass}});
  }
  using K = ReportEntry::Kind;
  return Json{{"schema_version", kSchemaVersion},
              {"all_passed", report.all_passed()},
              {"targets", {{"passed", report.passed(K::Target)}, {"total", report.count(K::Target)}}},
              {"structure",
               {{"passed", report.passed(K::Structure)}, {"total", report.count(K::Structure)}}},
              {"entries", entries}};
}

Json string_report_to_json(const StringMapReport& report) {
  return Json{{"schema_version", kSchemaVersion},
              {"original", pauli_to_text(report.original)},
              {"transformed", pauli_to_text(report.transformed)},
              {"endpoints_before", report.endpoints_before},
              {"endpoints_after", report.endpoints_after},
              {"dynamic_letters", letters(report.dynamic_letters)},
              {"zero_mode_letters", letters(report.zero_mode_letters)},
              {"black_parity", report.black_parity},
              {"white_parity", report.white_parity},
              {"endpoints_preserved", report.endpoints_preserved}};
}

Json spectrum_to_json(const Spectrum& spectrum) {
  Json levels = Json::array();
  for (const auto& [e, g] : spectrum.levels) {
    levels.push_back({{"energy", e}, {"degeneracy", g.str()}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"units", "J"},
              {"total", spectrum.total().str()},
              {"levels", levels}};
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
  std::ostringstream out;
  out << "energy,degeneracy\n";
  for (const auto& [e, g] : spectrum.levels) out << e << ',' << g << '\n';
  return out.str();
}

Json entanglement_to_json(const EntanglementReport& report) {
  return Json{{"schema_version", kSchemaVersion},
              {"region", report.region},
              {"s", report.s},
              {"level_count", report.level_count.str()},
              {"flat", report.flat},
              {"boundary_plaquettes", report.boundary_plaquettes},
              {"boundary_formula_levels", report.boundary_formula_levels.str()}};
}

}  // namespace fermap
