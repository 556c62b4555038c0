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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fermap/pauli.hpp"

namespace fermap {

using Qubit = std::size_t;

enum class CodeKind { Surface, Toric };
enum class Color { Black, White };

/// Corner slots of a plaquette cell, in reading order.
enum class Corner { TopLeft = 0, TopRight = 1, BottomLeft = 2, BottomRight = 3 };

std::string to_string(CodeKind kind);
std::string to_string(Color color);
CodeKind code_kind_from_string(const std::string& s);

/// A face of the vertex lattice. Qubits sit on the corners of the cell whose
/// top-left corner is (anchor_row, anchor_col); boundary semicircles of the
/// surface code have anchors just outside the grid (row -1 or column -1) or on
/// its last row/column, and only two corners occupied.
struct Plaquette {
  int id = 0;
  Color color = Color::Black;
  int anchor_row = 0;
  int anchor_col = 0;
  std::array<std::optional<Qubit>, 4> corners;
  /// Occupied corners in corner order.
  std::vector<Qubit> qubits;
  /// All-Z on the qubits for black, all-X for white, sign +1.
  PauliOperator stabilizer;

  std::optional<Qubit> corner(Corner c) const {
    return corners[static_cast<std::size_t>(c)];
  }
  std::size_t weight() const { return qubits.size(); }
};

struct LogicalOp {
  std::string label;  // X_L, Z_L or X_L1, Z_L1, X_L2, Z_L2
  std::vector<Qubit> path;
  PauliOperator op;
};

enum class StringKind { X, Z };

struct StringPath {
  StringKind kind = StringKind::X;
  std::vector<Qubit> qubits;
};

/// Distance-d surface (open) or toric (periodic) code on a d x d vertex
/// lattice. Qubit (row, col) has index row * d + col, (0, 0) top-left.
///
/// Black plaquettes carry Z stabilizers, white ones X. The cell whose top-left
/// corner is qubit (0, 0) is black. Plaquette ids run over black plaquettes in
/// reading order of their anchors, then white plaquettes likewise.
class CodeLayout {
 public:
  CodeLayout(CodeKind kind, int d, std::vector<Plaquette> plaquettes,
             std::vector<LogicalOp> logicals);

  CodeKind kind() const { return kind_; }
  int d() const { return d_; }
  std::size_t n() const { return static_cast<std::size_t>(d_) * static_cast<std::size_t>(d_); }

  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  const Plaquette& plaquette(int id) const;
  /// Id of the plaquette anchored at (row, col), if any.
  std::optional<int> plaquette_at(int row, int col) const;
  std::vector<int> ids_of_color(Color color) const;

  const std::vector<LogicalOp>& logicals() const { return logicals_; }
  const LogicalOp& logical(const std::string& label) const;

  Qubit qubit(int row, int col) const;
  int row_of(Qubit q) const { return static_cast<int>(q) / d_; }
  int col_of(Qubit q) const { return static_cast<int>(q) % d_; }

 private:
  CodeKind kind_;
  int d_;
  std::vector<Plaquette> plaquettes_;
  std::vector<LogicalOp> logicals_;
};

/// d odd, >= 3. Weight-2 black plaquettes sit on the left and right edges,
/// weight-2 white ones on the top and bottom edges. X_L runs down the left
/// column, Z_L along the bottom row.
CodeLayout build_surface_code(int d);

/// d even, >= 4. Logicals: Z_L1 on the left column, Z_L2 on the top row,
/// X_L1 on row d/2, X_L2 on column d/2.
CodeLayout build_toric_code(int d);

CodeLayout build_code(CodeKind kind, int d);

PauliOperator string_operator(const CodeLayout& layout, const StringPath& path);

/// Rows are the symplectic (x | z) vectors of the plaquette stabilizers.
std::vector<BitVec> stabilizer_generator_matrix(const CodeLayout& layout);
std::size_t stabilizer_group_rank(const CodeLayout& layout);

}  // namespace fermap
