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

#include <map>

#include <gtest/gtest.h>

#include "fermap/lattice.hpp"

namespace fermap {
namespace {

// Symplectic form computed letter by letter, independent of the bit layout.
bool anticommute_by_letters(const PauliOperator& a, const PauliOperator& b) {
  int count = 0;
  for (std::size_t j = 0; j < a.n(); ++j) {
    const char p = a.letter(j), q = b.letter(j);
    if (p != 'I' && q != 'I' && p != q) ++count;
  }
  return count % 2 == 1;
}

TEST(Lattice, SurfaceD3Table) {
  const CodeLayout l = build_surface_code(3);
  ASSERT_EQ(l.n(), 9u);
  ASSERT_EQ(l.plaquettes().size(), 8u);
  const std::vector<std::string> want = {"+ZZIZZIIII", "+IIZIIZIII", "+IIIZIIZII", "+IIIIZZIZZ",
                                         "+XXIIIIIII", "+IXXIXXIII", "+IIIXXIXXI", "+IIIIIIIXX"};
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(pauli_to_text(l.plaquettes()[i].stabilizer), want[i]) << i;
    EXPECT_EQ(l.plaquettes()[i].id, static_cast<int>(i));
  }
  EXPECT_EQ(pauli_to_text(l.logical("X_L").op), "+XIIXIIXII");
  EXPECT_EQ(pauli_to_text(l.logical("Z_L").op), "+IIIIIIZZZ");
  EXPECT_EQ(l.plaquette_at(0, 0), 0);
  EXPECT_EQ(l.plaquette_at(-1, 0), 4);
  EXPECT_FALSE(l.plaquette_at(-1, 1).has_value());
}

TEST(Lattice, CountsAndWeights) {
  for (int d : {3, 5, 7, 9, 11}) {
    const CodeLayout l = build_surface_code(d);
    std::map<std::size_t, int> weights;
    for (const auto& p : l.plaquettes()) ++weights[p.weight()];
    EXPECT_EQ(weights[4], (d - 1) * (d - 1));
    EXPECT_EQ(weights[2], 2 * (d - 1));
    EXPECT_EQ(l.ids_of_color(Color::Black).size(), l.ids_of_color(Color::White).size());
  }
  for (int d : {4, 6, 8, 10}) {
    const CodeLayout l = build_toric_code(d);
    EXPECT_EQ(l.plaquettes().size(), static_cast<std::size_t>(d * d));
    // Every qubit touches two plaquettes of each colour.
    std::vector<std::map<Color, int>> touch(l.n());
    for (const auto& p : l.plaquettes()) {
      EXPECT_EQ(p.weight(), 4u);
      for (Qubit q : p.qubits) ++touch[q][p.color];
    }
    for (const auto& t : touch) {
      EXPECT_EQ(t.at(Color::Black), 2);
      EXPECT_EQ(t.at(Color::White), 2);
    }
  }
}

TEST(Lattice, SurfaceD5AllPairsCommute) {
  const CodeLayout l = build_surface_code(5);
  const auto& ps = l.plaquettes();
  int pairs = 0;
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      EXPECT_FALSE(anticommute_by_letters(ps[a].stabilizer, ps[b].stabilizer));
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 276);
}

TEST(Lattice, LogicalsCommuteWithStabilizersAndPairUp) {
  for (const CodeLayout& l : {build_surface_code(3), build_surface_code(7), build_toric_code(4), build_toric_code(8)}) {
    for (const auto& lo : l.logicals()) {
      for (const auto& p : l.plaquettes()) EXPECT_FALSE(anticommute_by_letters(lo.op, p.stabilizer));
    }
    for (const auto& a : l.logicals()) {
      for (const auto& b : l.logicals()) {
        const bool partners = a.label[0] != b.label[0] && a.label.substr(3) == b.label.substr(3);
        EXPECT_EQ(anticommute_by_letters(a.op, b.op), partners) << a.label << " " << b.label;
      }
    }
  }
}

TEST(Lattice, ToricLogicalPlacement) {
  const CodeLayout l = build_toric_code(6);
  EXPECT_EQ(l.logical("X_L1").path.front(), l.qubit(3, 0));
  EXPECT_EQ(l.logical("Z_L1").path.front(), l.qubit(0, 0));
  for (Qubit q : l.logical("X_L1").path) EXPECT_EQ(l.row_of(q), 3);
  for (Qubit q : l.logical("Z_L1").path) EXPECT_EQ(l.col_of(q), 0);
  for (Qubit q : l.logical("X_L2").path) EXPECT_EQ(l.col_of(q), 3);
  for (Qubit q : l.logical("Z_L2").path) EXPECT_EQ(l.row_of(q), 0);
  EXPECT_EQ(l.qubit(-1, 6), l.qubit(5, 0));
}

TEST(Lattice, GroupRanks) {
  for (int d : {3, 5, 7, 9, 11, 13}) {
    EXPECT_EQ(stabilizer_group_rank(build_surface_code(d)), static_cast<std::size_t>(d * d - 1));
  }
  for (int d : {4, 6, 8, 10, 12}) {
    EXPECT_EQ(stabilizer_group_rank(build_toric_code(d)), static_cast<std::size_t>(d * d - 2));
  }
}

TEST(Lattice, RejectsBadDistances) {
  for (int d : {-1, 0, 1, 2, 4}) EXPECT_THROW(build_surface_code(d), std::invalid_argument) << d;
  for (int d : {0, 2, 3, 5}) EXPECT_THROW(build_toric_code(d), std::invalid_argument) << d;
  EXPECT_THROW(code_kind_from_string("hex"), std::invalid_argument);
}

TEST(Lattice, StringOperators) {
  const CodeLayout l = build_surface_code(3);
  EXPECT_EQ(pauli_to_text(string_operator(l, {StringKind::X, {0, 1, 2}})), "+XXXIIIIII");
  EXPECT_EQ(pauli_to_text(string_operator(l, {StringKind::Z, {0, 1, 1}})), "+ZIIIIIIII");
  EXPECT_THROW(string_operator(l, {StringKind::X, {}}), std::invalid_argument);
  EXPECT_THROW(string_operator(l, {StringKind::X, {9}}), std::out_of_range);
}

}  // namespace
}  // namespace fermap
