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

#include "fermap/planner.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

#include "fermap/verifier.hpp"

namespace fermap {
namespace {

// Accumulates steps and keeps every tracked operator in its current
// (partially transformed) form.
class PlanBuilder {
 public:
  explicit PlanBuilder(const CodeLayout& layout) : layout_(layout) {
    for (const auto& p : layout.plaquettes()) plaquette_ops_.push_back(p.stabilizer);
    for (const auto& l : layout.logicals()) logical_ops_[l.label] = l.op;
  }

  // Two rotations: +Y substituted at the target, then -Y on the target alone.
  // Takes the untouched all-Z stabilizer to +Z at the target.
  void black_part(int id, Qubit target) {
    const PauliOperator& cur = current_plaquette(id);
    if (!(cur == layout_.plaquette(id).stabilizer)) {
      throw std::logic_error("black plaquette " + std::to_string(id) +
                             " was disturbed by an earlier part; ordering violated");
    }
    PauliOperator g1 = cur;
    g1.set_letter(target, 'Y');
    add_step(C4Rotation(g1), Provenance::plaquette(id), target);
    finish_on_site(Provenance::plaquette(id), current_plaquette(id), target, 'Z');
    expect_single_site(current_plaquette(id), target, 'Z', "plaquette " + std::to_string(id));
    end_part();
  }

  // One rotation: the current operator with its X at the target replaced by
  // -Y. Takes it to +Z at the target.
  void white_part(int id, Qubit target) {
    const PauliOperator cur = current_plaquette(id);
    if (cur.letter(target) != 'X') {
      throw std::logic_error("white plaquette " + std::to_string(id) + " has '" +
                             std::string(1, cur.letter(target)) + "' at its target qubit " +
                             std::to_string(target) + "; expected X");
    }
    PauliOperator g = cur;
    g.set_letter(target, 'Y');
    add_step(C4Rotation(-g), Provenance::plaquette(id), target);
    expect_single_site(current_plaquette(id), target, 'Z', "plaquette " + std::to_string(id));
    end_part();
  }

  // Two rotations: the current operator with the letter at the mode swapped
  // (X <-> Z), then a single-site rotation landing on +letter at the mode.
  void logical_part(const std::string& label, Qubit mode, char letter) {
    const PauliOperator cur = logical_ops_.at(label);
    if (cur.letter(mode) != letter) {
      throw std::logic_error("logical " + label + " has '" +
                             std::string(1, cur.letter(mode)) + "' at zero mode " +
                             std::to_string(mode) + "; expected " + letter);
    }
    PauliOperator g1 = cur;
    g1.set_letter(mode, letter == 'X' ? 'Z' : 'X');
    add_step(C4Rotation(g1), Provenance::logical(label), mode);
    finish_on_site(Provenance::logical(label), logical_ops_.at(label), mode, letter);
    expect_single_site(logical_ops_.at(label), mode, letter, label);
    end_part();
  }

  const PauliOperator& current_plaquette(int id) const {
    return plaquette_ops_.at(static_cast<std::size_t>(id));
  }

  std::vector<PlanStep> take_steps() { return std::move(steps_); }

 private:
  void add_step(const C4Rotation& r, const Provenance& prov, Qubit target) {
    for (auto& op : plaquette_ops_) op = conjugate_by_c4(op, r);
    for (auto& [label, op] : logical_ops_) op = conjugate_by_c4(op, r);
    steps_.push_back(PlanStep{r, prov, target, part_});
  }

  // `mid` is a single-site operator at `site`; rotate it onto +letter there.
  // i * mid * G = T  =>  G = -i * mid * T.
  void finish_on_site(const Provenance& prov, const PauliOperator& mid, Qubit site,
                      char letter) {
    if (mid.weight() != 1 || mid.support().front() != site) {
      throw std::logic_error("first rotation of a part did not isolate qubit " +
                             std::to_string(site) + ": " + pauli_to_text(mid));
    }
    const PauliOperator target = PauliOperator::single(layout_.n(), site, letter);
    if (mid == target) return;
    PauliOperator g = mid * target;
    g.rotate_phase(3);
    add_step(C4Rotation(g), prov, site);
  }

  void expect_single_site(const PauliOperator& op, Qubit site, char letter,
                          const std::string& what) const {
    if (!(op == PauliOperator::single(layout_.n(), site, letter))) {
      throw std::logic_error(what + " did not reach +" + std::string(1, letter) +
                             " on qubit " + std::to_string(site) + ": " +
                             pauli_to_text(op));
    }
  }

  void end_part() { ++part_; }

  const CodeLayout& layout_;
  std::vector<PauliOperator> plaquette_ops_;
  std::map<std::string, PauliOperator> logical_ops_;
  std::vector<PlanStep> steps_;
  int part_ = 0;
};

Qubit first_corner(const Plaquette& p) { return p.qubits.front(); }
Qubit last_corner(const Plaquette& p) { return p.qubits.back(); }

void require_kind(const CodeLayout& layout, CodeKind kind) {
  if (layout.kind() != kind) {
    throw std::invalid_argument("expected a " + to_string(kind) + " code layout, got " +
                                to_string(layout.kind()));
  }
}

// Same-colour plaquette other than `self` containing qubit q.
int other_plaquette_at(const CodeLayout& layout, int self, Qubit q) {
  const Color color = layout.plaquette(self).color;
  for (const auto& p : layout.plaquettes()) {
    if (p.id == self || p.color != color) continue;
    if (std::find(p.qubits.begin(), p.qubits.end(), q) != p.qubits.end()) return p.id;
  }
  throw std::logic_error("no plaquette shares qubit " + std::to_string(q) +
                         " with plaquette " + std::to_string(self));
}

// Kahn's algorithm over the arrow tree rooted at `root`; ties go to the
// smallest id (reading order).
std::vector<int> dependency_order(const std::vector<int>& ids, int root,
                                  const std::map<int, int>& parent) {
  std::map<int, std::vector<int>> children;
  for (int id : ids) {
    if (id != root) children[parent.at(id)].push_back(id);
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int child : children[root]) ready.push(child);
  std::vector<int> order;
  while (!ready.empty()) {
    const int id = ready.top();
    ready.pop();
    order.push_back(id);
    for (int child : children[id]) ready.push(child);
  }
  if (order.size() + 1 != ids.size()) {
    throw std::logic_error("arrow dependency graph is not a tree rooted at plaquette " +
                           std::to_string(root) + " (" + std::to_string(order.size()) +
                           " of " + std::to_string(ids.size() - 1) + " parts reachable)");
  }
  return order;
}

void require_canonical_toric_logicals(const CodeLayout& layout) {
  const int d = layout.d();
  const int half = d / 2;
  auto expect = [&](const std::string& label, auto qubit_of) {
    const auto& l = layout.logical(label);
    std::vector<Qubit> path;
    for (int k = 0; k < d; ++k) path.push_back(qubit_of(k));
    const char letter = label[0];
    PauliOperator op(layout.n());
    for (Qubit q : path) op.set_letter(q, letter);
    if (!(l.op == op)) {
      throw std::invalid_argument("toric logical " + label +
                                  " is not in the canonical placement; arrow rules "
                                  "are defined relative to it");
    }
  };
  expect("X_L1", [&](int k) { return layout.qubit(half, k); });
  expect("Z_L1", [&](int k) { return layout.qubit(k, 0); });
  expect("X_L2", [&](int k) { return layout.qubit(k, half); });
  expect("Z_L2", [&](int k) { return layout.qubit(0, k); });
}

}  // namespace

std::vector<C4Rotation> TransformPlan::rotations() const {
  std::vector<C4Rotation> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.rotation);
  return out;
}

int TransformPlan::part_count() const {
  return steps.empty() ? 0 : steps.back().part + 1;
}

TransformPlan plan_surface(const CodeLayout& layout) {
  require_kind(layout, CodeKind::Surface);
  const int d = layout.d();
  PlanBuilder builder(layout);
  TransformPlan plan;
  plan.kind = CodeKind::Surface;
  plan.d = d;

  // Black: top row to bottom row, left to right; target is the top-left
  // (top, for edge plaquettes) qubit.
  std::vector<int> black = layout.ids_of_color(Color::Black);
  for (int id : black) {
    const Qubit t = first_corner(layout.plaquette(id));
    builder.black_part(id, t);
    plan.mode_map.dynamic_modes[id] = t;
  }

  // White: right column to left column, top to bottom within a column; target
  // is the bottom-right (right, for edge plaquettes) qubit.
  std::vector<int> white = layout.ids_of_color(Color::White);
  std::stable_sort(white.begin(), white.end(), [&](int a, int b) {
    const auto& pa = layout.plaquette(a);
    const auto& pb = layout.plaquette(b);
    if (pa.anchor_col != pb.anchor_col) return pa.anchor_col > pb.anchor_col;
    return pa.anchor_row < pb.anchor_row;
  });
  for (int id : white) {
    const Qubit t = last_corner(layout.plaquette(id));
    builder.white_part(id, t);
    plan.mode_map.dynamic_modes[id] = t;
  }

  const Qubit zero = layout.qubit(d - 1, 0);
  builder.logical_part("X_L", zero, 'X');
  builder.logical_part("Z_L", zero, 'Z');
  plan.mode_map.zero_modes = {zero};
  plan.mode_map.logical_modes = {{"X_L", zero}, {"Z_L", zero}};
  plan.steps = builder.take_steps();
  return plan;
}

std::optional<Corner> toric_arrow_corner(const CodeLayout& layout, int plaquette_id) {
  require_kind(layout, CodeKind::Toric);
  const auto& p = layout.plaquette(plaquette_id);
  const int d = layout.d();
  const int half = d / 2;
  const int r = p.anchor_row;
  const int c = p.anchor_col;
  const bool top = r < half;
  const bool left = c < half;
  if (p.color == Color::Black) {
    if (r == 0 && c == 0) return std::nullopt;  // b1
    if (top && left) return r == c ? Corner::TopLeft : Corner::BottomRight;
    if (top) return Corner::BottomLeft;
    if (left) return Corner::TopRight;
    return Corner::TopLeft;
  }
  if (r == half && c == half - 1) return std::nullopt;  // w1
  if (top && left) return Corner::TopLeft;
  if (top) return Corner::TopRight;
  if (!left) return Corner::BottomRight;
  return r + c == d - 1 ? Corner::TopRight : Corner::BottomLeft;
}

TransformPlan plan_toric(const CodeLayout& layout) {
  require_kind(layout, CodeKind::Toric);
  require_canonical_toric_logicals(layout);
  const int d = layout.d();
  const int half = d / 2;
  const int b1 = *layout.plaquette_at(0, 0);
  const int w1 = *layout.plaquette_at(half, half - 1);

  TransformPlan plan;
  plan.kind = CodeKind::Toric;
  plan.d = d;
  plan.mode_map.parity_plaquettes = {b1, w1};

  std::map<int, Qubit> target;
  for (const auto& p : layout.plaquettes()) {
    const auto corner = toric_arrow_corner(layout, p.id);
    if (!corner) continue;
    const Qubit t = *p.corner(*corner);
    target[p.id] = t;
    plan.arrow_parent[p.id] = other_plaquette_at(layout, p.id, t);
  }

  PlanBuilder builder(layout);
  for (int id : dependency_order(layout.ids_of_color(Color::Black), b1, plan.arrow_parent)) {
    builder.black_part(id, target.at(id));
    plan.mode_map.dynamic_modes[id] = target.at(id);
  }
  for (int id : dependency_order(layout.ids_of_color(Color::White), w1, plan.arrow_parent)) {
    builder.white_part(id, target.at(id));
    plan.mode_map.dynamic_modes[id] = target.at(id);
  }

  // Each logical qubit's zero mode is where its X and Z loops cross.
  const Qubit j = layout.qubit(half, 0);
  const Qubit k = layout.qubit(0, half);
  builder.logical_part("X_L1", j, 'X');
  builder.logical_part("Z_L1", j, 'Z');
  builder.logical_part("X_L2", k, 'X');
  builder.logical_part("Z_L2", k, 'Z');
  plan.mode_map.zero_modes = {j, k};
  plan.mode_map.logical_modes = {{"X_L1", j}, {"Z_L1", j}, {"X_L2", k}, {"Z_L2", k}};
  plan.steps = builder.take_steps();
  return plan;
}

TransformPlan plan_for(const CodeLayout& layout) {
  return layout.kind() == CodeKind::Surface ? plan_surface(layout) : plan_toric(layout);
}

PauliOperator conjugate_by_plan(const PauliOperator& q, const TransformPlan& plan,
                                bool inverse) {
  PauliOperator out = q;
  if (!inverse) {
    for (const auto& s : plan.steps) out = conjugate_by_c4(out, s.rotation);
  } else {
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
      out = conjugate_by_c4(out, it->rotation.inverse());
    }
  }
  return out;
}

ValidationReport validate_plan(const TransformPlan& plan, const CodeLayout& layout) {
  return check_code_transform(plan, layout);
}

}  // namespace fermap
