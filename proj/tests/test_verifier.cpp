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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fermap/verifier.hpp"

namespace fermap {
namespace {

// Random nearest-neighbour walk; toric walks wrap.
StringPath random_walk(const CodeLayout& l, std::mt19937_64& rng) {
  StringPath path;
  path.kind = rng() & 1 ? StringKind::X : StringKind::Z;
  int r = static_cast<int>(rng() % l.d()), c = static_cast<int>(rng() % l.d());
  const int len = 1 + static_cast<int>(rng() % (2 * l.d()));
  path.qubits.push_back(l.qubit(r, c));
  while (static_cast<int>(path.qubits.size()) < len) {
    static const int dr[4] = {1, -1, 0, 0}, dc[4] = {0, 0, 1, -1};
    const int k = static_cast<int>(rng() % 4);
    int nr = r + dr[k], nc = c + dc[k];
    if (l.kind() == CodeKind::Toric) {
      nr = (nr + l.d()) % l.d();
      nc = (nc + l.d()) % l.d();
    } else if (nr < 0 || nc < 0 || nr >= l.d() || nc >= l.d()) {
      continue;
    }
    r = nr;
    c = nc;
    path.qubits.push_back(l.qubit(r, c));
  }
  return path;
}

// Plaquettes of the opposite type meeting the string on an odd number of qubits.
std::vector<int> oracle_endpoints(const CodeLayout& l, const StringPath& path) {
  std::vector<int> count(l.n(), 0);
  for (Qubit q : path.qubits) count[q] ^= 1;
  const Color detecting = path.kind == StringKind::X ? Color::Black : Color::White;
  std::vector<int> out;
  for (const auto& p : l.plaquettes()) {
    if (p.color != detecting) continue;
    int parity = 0;
    for (Qubit q : p.qubits) parity ^= count[q];
    if (parity) out.push_back(p.id);
  }
  return out;
}

TEST(Verifier, SurfaceD3ReportCounts) {
  const CodeLayout l = build_surface_code(3);
  const ValidationReport r = check_code_transform(plan_for(l), l);
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.count(ReportEntry::Kind::Target), 10u);
  EXPECT_EQ(r.passed(ReportEntry::Kind::Target), 10u);
}

TEST(Verifier, ToricReportCounts) {
  for (int d : {4, 6}) {
    const CodeLayout l = build_toric_code(d);
    const ValidationReport r = check_code_transform(plan_for(l), l);
    EXPECT_TRUE(r.all_passed());
    EXPECT_EQ(r.count(ReportEntry::Kind::Target), static_cast<std::size_t>(d * d + 4));
  }
}

TEST(Verifier, MismatchedLayoutFails) {
  const CodeLayout l3 = build_surface_code(3);
  const CodeLayout l5 = build_surface_code(5);
  EXPECT_FALSE(check_code_transform(plan_for(l5), l3).all_passed());
}

TEST(Verifier, ToricParityTargets) {
  const CodeLayout l = build_toric_code(4);
  const TransformPlan p = plan_for(l);
  for (std::size_t k = 0; k < 2; ++k) {
    const int id = p.mode_map.parity_plaquettes[k];
    const Color color = k == 0 ? Color::Black : Color::White;
    PauliOperator want(l.n());
    for (const auto& [other, q] : p.mode_map.dynamic_modes) {
      if (l.plaquette(other).color == color) want = want * PauliOperator::single(l.n(), q, 'Z');
    }
    EXPECT_EQ(transformed_stabilizer_target(p, l, id), want);
    EXPECT_EQ(conjugate_by_plan(l.plaquette(id).stabilizer, p), want);
    EXPECT_EQ(want.weight(), 7u);
  }
}

TEST(Verifier, SyndromeExamples) {
  const CodeLayout s = build_surface_code(3);
  EXPECT_EQ(syndrome(s, PauliOperator::single(9, 0, 'X')).ids, (std::vector<int>{0}));
  EXPECT_EQ(syndrome(s, PauliOperator::single(9, 4, 'Z')).ids, (std::vector<int>{5, 6}));
  EXPECT_EQ(syndrome(s, PauliOperator::single(9, 4, 'Y')).ids, (std::vector<int>{0, 3, 5, 6}));
  EXPECT_TRUE(syndrome(s, s.logical("X_L").op).ids.empty());
  EXPECT_THROW(syndrome(s, PauliOperator(4)), std::invalid_argument);

  const CodeLayout t = build_toric_code(4);
  const TransformPlan p = plan_for(t);
  const SyndromeSet withb1 = syndrome(t, PauliOperator::single(16, 0, 'X'), p.mode_map);
  EXPECT_EQ(withb1.black_parity, true);
  EXPECT_EQ(withb1.white_parity, false);
  EXPECT_FALSE(syndrome(s, PauliOperator::single(9, 0, 'X'), plan_for(s).mode_map).black_parity.has_value());
}

TEST(Verifier, RandomStringsKeepEndpoints) {
  std::mt19937_64 rng(314);
  for (const CodeLayout& l : {build_surface_code(3), build_surface_code(5), build_toric_code(4), build_toric_code(6)}) {
    const TransformPlan p = plan_for(l);
    for (int i = 0; i < 300; ++i) {
      const StringPath path = random_walk(l, rng);
      const StringMapReport r = map_string(p, l, path);
      ASSERT_EQ(r.endpoints_before, oracle_endpoints(l, path));
      ASSERT_TRUE(r.endpoints_preserved);
    }
  }
}

TEST(Verifier, SingleModeXPullsBackToPairs) {
  for (int d : {4, 6}) {
    const CodeLayout l = build_toric_code(d);
    const TransformPlan p = plan_for(l);
    for (const auto& [id, q] : p.mode_map.dynamic_modes) {
      const StringMapReport r = inverse_image_of_single_x(p, l, q);
      ASSERT_TRUE(r.endpoints_preserved) << "plaquette " << id;
      ASSERT_EQ(r.endpoints_before.size(), 2u);
      const int partner = l.plaquette(id).color == Color::Black ? p.mode_map.parity_plaquettes[0]
                                                                 : p.mode_map.parity_plaquettes[1];
      std::vector<int> want{id, partner};
      std::sort(want.begin(), want.end());
      ASSERT_EQ(r.endpoints_before, want);
    }
    EXPECT_THROW(inverse_image_of_single_x(p, l, p.mode_map.zero_modes[0]), std::invalid_argument);
  }
  const CodeLayout s = build_surface_code(5);
  const TransformPlan ps = plan_for(s);
  for (const auto& [id, q] : ps.mode_map.dynamic_modes) {
    const StringMapReport r = inverse_image_of_single_x(ps, s, q);
    EXPECT_TRUE(r.endpoints_preserved);
    EXPECT_EQ(r.endpoints_before, (std::vector<int>{id}));
  }
}

TEST(Verifier, BraidingPhases) {
  const CodeLayout l = build_surface_code(5);
  const TransformPlan p = plan_for(l);
  // Horizontal X string and vertical Z string crossing once at (2,2).
  const StringPath xs{StringKind::X, {l.qubit(2, 1), l.qubit(2, 2), l.qubit(2, 3)}};
  const StringPath zs{StringKind::Z, {l.qubit(1, 2), l.qubit(2, 2), l.qubit(3, 2)}};
  const StringPath zs_miss{StringKind::Z, {l.qubit(0, 0), l.qubit(1, 0)}};
  EXPECT_EQ(braiding_phase_check(l, xs, zs), -1);
  EXPECT_EQ(braiding_phase_check(l, xs, zs, p), -1);
  EXPECT_EQ(braiding_phase_check(l, xs, zs_miss), 1);
  EXPECT_EQ(braiding_phase_check(l, xs, zs_miss, p), 1);
  EXPECT_EQ(commutator_phase(pauli_from_text("+XX"), pauli_from_text("+ZZ")), 1);
  EXPECT_THROW(commutator_phase(pauli_from_text("+iX"), pauli_from_text("+Z")), std::invalid_argument);
}

TEST(Verifier, CommutatorPhasesSurviveThePlan) {
  std::mt19937_64 rng(2718);
  for (const CodeLayout& l : {build_surface_code(3), build_toric_code(4)}) {
    const TransformPlan p = plan_for(l);
    for (int i = 0; i < 500; ++i) {
      BitVec x1(l.n()), z1(l.n()), x2(l.n()), z2(l.n());
      for (std::size_t j = 0; j < l.n(); ++j) {
        x1.set(j, rng() & 1);
        z1.set(j, rng() & 1);
        x2.set(j, rng() & 1);
        z2.set(j, rng() & 1);
      }
      PauliOperator a(x1, z1, 0), b(x2, z2, 0);
      if (!a.is_hermitian()) a.rotate_phase(1);
      if (!b.is_hermitian()) b.rotate_phase(1);
      ASSERT_EQ(commutator_phase(a, b), commutator_phase(conjugate_by_plan(a, p), conjugate_by_plan(b, p)));
    }
  }
}

}  // namespace
}  // namespace fermap
