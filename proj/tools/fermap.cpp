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

// fermap: build codes, plan and check the fermion maps, print spectra and
// render lattice diagrams.
//
// Exit status: 0 success, 1 a check failed, 2 usage or input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fermap/dense.hpp"
#include "fermap/lattice.hpp"
#include "fermap/planner.hpp"
#include "fermap/render.hpp"
#include "fermap/serialize.hpp"
#include "fermap/spectra.hpp"
#include "fermap/verifier.hpp"

namespace {

using namespace fermap;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string code;
  int d = 0;
  std::string in;
  std::string out;
  std::string format;
  std::optional<std::uint64_t> seed;
  std::string op;
  bool inverse = false;
  std::string region;
  int samples = 1000;
  bool dense = false;
  bool plain = false;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + o.format + " not supported here (use " + list + ")");
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

CodeLayout layout_from(const Options& o) {
  if (o.code.empty() || o.d == 0) throw UsageError("--code and --d are required");
  return build_code(code_kind_from_string(o.code), o.d);
}

// Plan from --in when given, else planned from --code/--d.
std::pair<CodeLayout, TransformPlan> layout_and_plan(const Options& o) {
  if (!o.in.empty()) {
    TransformPlan plan = plan_from_json(read_json(o.in));
    if (!o.code.empty() && code_kind_from_string(o.code) != plan.kind) {
      throw UsageError("--code does not match the plan file");
    }
    if (o.d != 0 && o.d != plan.d) throw UsageError("--d does not match the plan file");
    return {build_code(plan.kind, plan.d), std::move(plan)};
  }
  CodeLayout layout = layout_from(o);
  TransformPlan plan = plan_for(layout);
  return {std::move(layout), std::move(plan)};
}

PauliOperator random_pauli(std::size_t n, std::mt19937_64& rng) {
  BitVec x(n), z(n);
  for (std::size_t j = 0; j < n; ++j) {
    x.set(j, rng() & 1);
    z.set(j, rng() & 1);
  }
  return PauliOperator(x, z, static_cast<int>(rng() % 4));
}

std::string layout_text(const CodeLayout& layout) {
  std::ostringstream s;
  s << to_string(layout.kind()) << " code d=" << layout.d() << ", " << layout.n() << " qubits, "
    << layout.plaquettes().size() << " plaquettes, stabilizer rank " << stabilizer_group_rank(layout) << "\n";
  for (const auto& p : layout.plaquettes()) {
    s << "  B" << p.id << " " << to_string(p.color) << " @(" << p.anchor_row << "," << p.anchor_col << ") "
      << pauli_to_text(p.stabilizer) << "\n";
  }
  for (const auto& l : layout.logicals()) s << "  " << l.label << " " << pauli_to_text(l.op) << "\n";
  return s.str();
}

std::string plan_text(const TransformPlan& plan) {
  std::ostringstream s;
  s << to_string(plan.kind) << " d=" << plan.d << ": " << plan.steps.size() << " rotations in "
    << plan.part_count() << " parts\n";
  for (const auto& st : plan.steps) {
    s << "  U" << st.part + 1 << " ";
    if (st.provenance.kind == Provenance::Kind::Plaquette) {
      s << "B" << st.provenance.plaquette_id;
    } else {
      s << st.provenance.logical_label;
    }
    s << " -> q" << st.target_qubit << "  G=" << pauli_to_text(st.rotation.generator()) << "\n";
  }
  for (Qubit q : plan.mode_map.zero_modes) s << "  zero mode q" << q << "\n";
  return s.str();
}

int cmd_build(const Options& o) {
  require_format(o, {"json", "text"});
  const CodeLayout layout = layout_from(o);
  emit(o, o.format == "json" ? layout_to_json(layout).dump(2) + "\n" : layout_text(layout));
  return kOk;
}

int cmd_plan(const Options& o) {
  require_format(o, {"json", "text"});
  const CodeLayout layout = layout_from(o);
  const TransformPlan plan = plan_for(layout);
  emit(o, o.format == "json" ? plan_to_json(plan).dump(2) + "\n" : plan_text(plan));
  return kOk;
}

int cmd_apply(const Options& o) {
  require_format(o, {"json", "text"});
  const auto [layout, plan] = layout_and_plan(o);
  PauliOperator op;
  if (!o.op.empty()) {
    op = pauli_from_text(o.op);
  } else if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    op = random_pauli(layout.n(), rng);
  } else {
    throw UsageError("apply needs --op or --seed");
  }
  if (op.n() != layout.n()) {
    throw UsageError("operator has " + std::to_string(op.n()) + " qubits, layout has " +
                     std::to_string(layout.n()));
  }
  if (o.inverse) {
    const PauliOperator back = conjugate_by_plan(op, plan, true);
    if (o.format == "json") {
      emit(o, Json{{"input", pauli_to_text(op)}, {"inverse_image", pauli_to_text(back)}}.dump(2) + "\n");
    } else {
      emit(o, pauli_to_text(op) + " <- " + pauli_to_text(back) + "\n");
    }
    return kOk;
  }
  const StringMapReport r = map_operator(plan, layout, op);
  if (o.format == "json") {
    emit(o, string_report_to_json(r).dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << pauli_to_text(r.original) << " -> " << pauli_to_text(r.transformed) << "\n";
    s << "endpoints " << (r.endpoints_preserved ? "preserved" : "NOT preserved") << "\n";
    emit(o, s.str());
  }
  return r.endpoints_preserved ? kOk : kCheckFailed;
}

int cmd_verify(const Options& o) {
  require_format(o, {"json", "text"});
  const auto [layout, plan] = layout_and_plan(o);
  const ValidationReport report = check_code_transform(plan, layout);
  bool ok = report.all_passed();

  // Optional randomized round trip and commutation checks.
  std::size_t prop_cases = 0, prop_failures = 0;
  if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    for (int i = 0; i < o.samples; ++i) {
      const PauliOperator a = random_pauli(layout.n(), rng);
      const PauliOperator b = random_pauli(layout.n(), rng);
      const PauliOperator ta = conjugate_by_plan(a, plan);
      const PauliOperator tb = conjugate_by_plan(b, plan);
      ++prop_cases;
      if (conjugate_by_plan(ta, plan, true) != a || commutes(a, b) != commutes(ta, tb) ||
          conjugate_by_plan(a * b, plan) != ta * tb) {
        ++prop_failures;
      }
    }
    ok = ok && prop_failures == 0;
  }

  using K = ReportEntry::Kind;
  if (o.format == "json") {
    Json j = report_to_json(report);
    if (o.seed) j["properties"] = {{"seed", *o.seed}, {"cases", prop_cases}, {"failures", prop_failures}};
    j["pass"] = ok;
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    for (const auto& e : report.entries) {
      if (!e.pass) s << "FAIL " << e.label << ": expected " << e.expected << ", got " << e.actual << "\n";
    }
    s << report.passed(K::Target) << "/" << report.count(K::Target) << " targets passed\n";
    s << report.passed(K::Structure) << "/" << report.count(K::Structure) << " structure checks passed\n";
    if (o.seed) s << (prop_cases - prop_failures) << "/" << prop_cases << " random property cases passed\n";
    s << (ok ? "PASS" : "FAIL") << "\n";
    emit(o, s.str());
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_spectrum(const Options& o) {
  require_format(o, {"csv", "json", "text"});
  const CodeLayout layout = layout_from(o);
  const TransformPlan plan = plan_for(layout);
  const Spectrum s = code_energy_spectrum(layout);
  bool ok = free_decomposition_check(s, free_fermion_witness(layout)) &&
            transformed_hamiltonian_spectrum(plan, layout) == s;
  if (o.dense) {
    if (layout.n() > kMaxDenseQubits) throw UsageError("--dense needs at most 12 qubits");
    ok = ok && dense_energy_spectrum(layout) == s && dense_isospectrality(plan, layout) <= 1e-9;
  }
  if (!ok) {
    std::cerr << "spectrum check failed: code spectrum differs from the free-fermion model\n";
    return kCheckFailed;
  }
  if (o.format == "csv") {
    emit(o, spectrum_to_csv(s));
  } else if (o.format == "json") {
    emit(o, spectrum_to_json(s).dump(2) + "\n");
  } else {
    std::ostringstream t;
    for (const auto& [e, g] : s.levels) t << "E=" << e << " J  x" << g << "\n";
    t << "total " << s.total() << "\n";
    emit(o, t.str());
  }
  return kOk;
}

std::vector<Qubit> parse_region(const std::string& text, std::size_t n) {
  std::vector<Qubit> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad region entry '" + item + "'");
    }
    if (pos != item.size() || v >= n) throw UsageError("bad region entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int cmd_entanglement(const Options& o) {
  require_format(o, {"json", "text"});
  const CodeLayout layout = layout_from(o);
  std::vector<Qubit> region;
  if (!o.region.empty()) {
    region = parse_region(o.region, layout.n());
  } else if (o.seed) {
    std::mt19937_64 rng(*o.seed);
    for (Qubit q = 0; q < layout.n(); ++q) {
      if (rng() & 1) region.push_back(q);
    }
  } else {
    throw UsageError("entanglement needs --region or --seed");
  }
  const auto gens = ground_state_stabilizers(layout);
  const EntanglementReport r = entanglement_flat_levels(layout, gens, region);
  bool ok = true;
  std::optional<double> dense_dev;
  if (layout.n() <= kMaxDenseQubits) {
    const auto ev = dense_reduced_spectrum(gens, region);
    const std::size_t levels = static_cast<std::size_t>(r.level_count);
    const double level = 1.0 / static_cast<double>(levels);
    double dev = 0;
    for (std::size_t i = 0; i < ev.size(); ++i) dev = std::max(dev, std::abs(ev[i] - (i < levels ? level : 0.0)));
    dense_dev = dev;
    ok = dev <= 1e-9;
  }
  if (o.format == "json") {
    Json j = entanglement_to_json(r);
    if (dense_dev) j["dense_max_deviation"] = *dense_dev;
    j["pass"] = ok;
    emit(o, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "|A|=" << r.region.size() << " s=" << r.s << " levels=" << r.level_count
      << " boundary_plaquettes=" << r.boundary_plaquettes << "\n";
    if (dense_dev) s << "dense deviation " << *dense_dev << "\n";
    s << (ok ? "PASS" : "FAIL") << "\n";
    emit(o, s.str());
  }
  return ok ? kOk : kCheckFailed;
}

int cmd_render(const Options& o) {
  require_format(o, {"svg"});
  const auto [layout, plan] = layout_and_plan(o);
  RenderSpec spec;
  spec.layout = &layout;
  if (!o.plain) {
    spec.plan = &plan;
    spec.overlay = full_overlay();
  }
  emit(o, render_layout(spec));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surface and toric code to free-fermion maps"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--code", o.code, "surface or toric")->check(CLI::IsMember({"surface", "toric"}));
    sub->add_option("--d", o.d, "code distance");
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--format", o.format, "json, csv, svg or text")
        ->check(CLI::IsMember({"json", "csv", "svg", "text"}));
    sub->add_option("--seed", o.seed, "seed for randomized runs");
  };

  auto* build = app.add_subcommand("build", "export the code layout");
  auto* plan = app.add_subcommand("plan", "export the rotation plan");
  auto* apply = app.add_subcommand("apply", "conjugate a Pauli through the plan");
  auto* verify = app.add_subcommand("verify", "check every transformed stabilizer and logical");
  auto* spectrum = app.add_subcommand("spectrum", "energy levels and degeneracies");
  auto* entanglement = app.add_subcommand("entanglement", "ground-state entanglement spectrum");
  auto* render = app.add_subcommand("render", "SVG diagram");

  for (auto* sub : {build, plan, apply, verify, spectrum, entanglement, render}) common(sub);
  for (auto* sub : {apply, verify, render}) sub->add_option("--in", o.in, "plan JSON file");
  apply->add_option("--op", o.op, "Pauli text, e.g. +XIZ");
  apply->add_flag("--inverse", o.inverse, "pull back instead of push forward");
  verify->add_option("--samples", o.samples, "random cases with --seed")->check(CLI::PositiveNumber);
  spectrum->add_flag("--dense", o.dense, "also diagonalize densely (n <= 12)");
  entanglement->add_option("--region", o.region, "comma-separated qubit indices");
  render->add_flag("--plain", o.plain, "bare lattice without overlays");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "fermap: " << e.what() << "\n";
    return kUsage;
  }

  // Formats default per subcommand unless given explicitly.
  auto* sub = app.get_subcommands().front();
  if (sub->count("--format") == 0) {
    const std::string name = sub->get_name();
    o.format = name == "spectrum" ? "csv"
               : name == "render" ? "svg"
               : (name == "apply" || name == "verify") ? "text"
                                                        : "json";
  }

  try {
    const std::string name = sub->get_name();
    if (name == "build") return cmd_build(o);
    if (name == "plan") return cmd_plan(o);
    if (name == "apply") return cmd_apply(o);
    if (name == "verify") return cmd_verify(o);
    if (name == "spectrum") return cmd_spectrum(o);
    if (name == "entanglement") return cmd_entanglement(o);
    return cmd_render(o);
  } catch (const UsageError& e) {
    std::cerr << "fermap: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // Bad distance, malformed plan or Pauli text.
    std::cerr << "fermap: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "fermap: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "fermap: check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
}
