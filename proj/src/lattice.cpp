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

#include "fermap/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fermap {
namespace {

struct CellSpec {
  Color color;
  int anchor_row;
  int anchor_col;
  std::array<std::optional<Qubit>, 4> corners;
};

// Orders cells black-first, each color in reading order, and assigns ids.
std::vector<Plaquette> finalize_plaquettes(std::vector<CellSpec> cells, std::size_t n) {
  std::stable_sort(cells.begin(), cells.end(), [](const CellSpec& a, const CellSpec& b) {
    return std::tuple(a.color != Color::Black, a.anchor_row, a.anchor_col) <
           std::tuple(b.color != Color::Black, b.anchor_row, b.anchor_col);
  });
  std::vector<Plaquette> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    Plaquette p;
    p.id = static_cast<int>(out.size());
    p.color = cell.color;
    p.anchor_row = cell.anchor_row;
    p.anchor_col = cell.anchor_col;
    p.corners = cell.corners;
    p.stabilizer = PauliOperator(n);
    const char letter = cell.color == Color::Black ? 'Z' : 'X';
    for (const auto& q : cell.corners) {
      if (!q) continue;
      p.qubits.push_back(*q);
      p.stabilizer.set_letter(*q, letter);
    }
    out.push_back(std::move(p));
  }
  return out;
}

LogicalOp make_logical(std::string label, std::vector<Qubit> path, char letter,
                       std::size_t n) {
  PauliOperator op(n);
  for (Qubit q : path) op.set_letter(q, letter);
  return LogicalOp{std::move(label), std::move(path), std::move(op)};
}

void check_layout_invariants(const CodeLayout& layout) {
  const auto& ps = layout.plaquettes();
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      if (!commutes(ps[a].stabilizer, ps[b].stabilizer)) {
        throw std::logic_error("stabilizers " + std::to_string(a) + " and " +
                               std::to_string(b) + " anticommute");
      }
    }
    for (const auto& l : layout.logicals()) {
      if (!commutes(ps[a].stabilizer, l.op)) {
        throw std::logic_error("logical " + l.label +
                               " anticommutes with stabilizer " +
                               std::to_string(a));
      }
    }
  }
  if (layout.kind() == CodeKind::Toric) {
    for (Color color : {Color::Black, Color::White}) {
      PauliOperator product(layout.n());
      for (int id : layout.ids_of_color(color)) {
        product = product * layout.plaquette(id).stabilizer;
      }
      if (!(product == PauliOperator::identity(layout.n()))) {
        throw std::logic_error("toric color product is not +identity");
      }
    }
  }
}

}  // namespace

std::string to_string(CodeKind kind) {
  return kind == CodeKind::Surface ? "surface" : "toric";
}

std::string to_string(Color color) {
  return color == Color::Black ? "black" : "white";
}

CodeKind code_kind_from_string(const std::string& s) {
  if (s == "surface") return CodeKind::Surface;
  if (s == "toric") return CodeKind::Toric;
  throw std::invalid_argument("unknown code kind '" + s +
                              "' (expected surface or toric)");
}

CodeLayout::CodeLayout(CodeKind kind, int d, std::vector<Plaquette> plaquettes,
                       std::vector<LogicalOp> logicals)
    : kind_(kind), d_(d), plaquettes_(std::move(plaquettes)), logicals_(std::move(logicals)) {
  for (std::size_t i = 0; i < plaquettes_.size(); ++i) {
    if (plaquettes_[i].id != static_cast<int>(i)) {
      throw std::invalid_argument("plaquette ids must be 0..N-1 in order");
    }
  }
}

const Plaquette& CodeLayout::plaquette(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= plaquettes_.size()) {
    throw std::out_of_range("no plaquette with id " + std::to_string(id));
  }
  return plaquettes_[static_cast<std::size_t>(id)];
}

std::optional<int> CodeLayout::plaquette_at(int row, int col) const {
  for (const auto& p : plaquettes_) {
    if (p.anchor_row == row && p.anchor_col == col) return p.id;
  }
  return std::nullopt;
}

std::vector<int> CodeLayout::ids_of_color(Color color) const {
  std::vector<int> out;
  for (const auto& p : plaquettes_) {
    if (p.color == color) out.push_back(p.id);
  }
  return out;
}

const LogicalOp& CodeLayout::logical(const std::string& label) const {
  for (const auto& l : logicals_) {
    if (l.label == label) return l;
  }
  throw std::out_of_range("no logical operator labelled " + label);
}

Qubit CodeLayout::qubit(int row, int col) const {
  if (kind_ == CodeKind::Toric) {
    row = ((row % d_) + d_) % d_;
    col = ((col % d_) + d_) % d_;
  } else if (row < 0 || row >= d_ || col < 0 || col >= d_) {
    throw std::out_of_range("qubit (" + std::to_string(row) + "," +
                            std::to_string(col) + ") outside the lattice");
  }
  return static_cast<Qubit>(row) * static_cast<Qubit>(d_) + static_cast<Qubit>(col);
}

CodeLayout build_surface_code(int d) {
  if (d < 3 || d % 2 == 0) {
    throw std::invalid_argument("surface code distance must be odd and >= 3, got " +
                                std::to_string(d));
  }
  const auto n = static_cast<std::size_t>(d * d);
  auto q = [d](int r, int c) { return static_cast<Qubit>(r * d + c); };
  auto color_of = [](int r, int c) { return (r + c) % 2 == 0 ? Color::Black : Color::White; };

  std::vector<CellSpec> cells;
  for (int r = 0; r + 1 < d; ++r) {
    for (int c = 0; c + 1 < d; ++c) {
      cells.push_back({color_of(r, c), r, c, {q(r, c), q(r, c + 1), q(r + 1, c), q(r + 1, c + 1)}});
    }
  }
  // Boundary semicircles take the color opposite to the interior cell they
  // sit against: white on top/bottom edges, black on left/right edges.
  for (int c = 0; c + 1 < d; ++c) {
    if (color_of(0, c) == Color::Black) {
      cells.push_back({Color::White, -1, c, {std::nullopt, std::nullopt, q(0, c), q(0, c + 1)}});
    }
    if (color_of(d - 2, c) == Color::Black) {
      cells.push_back({Color::White, d - 1, c, {q(d - 1, c), q(d - 1, c + 1), std::nullopt, std::nullopt}});
    }
  }
  for (int r = 0; r + 1 < d; ++r) {
    if (color_of(r, 0) == Color::White) {
      cells.push_back({Color::Black, r, -1, {std::nullopt, q(r, 0), std::nullopt, q(r + 1, 0)}});
    }
    if (color_of(r, d - 2) == Color::White) {
      cells.push_back({Color::Black, r, d - 1, {q(r, d - 1), std::nullopt, q(r + 1, d - 1), std::nullopt}});
    }
  }

  std::vector<Qubit> left;
  std::vector<Qubit> bottom;
  for (int k = 0; k < d; ++k) {
    left.push_back(q(k, 0));
    bottom.push_back(q(d - 1, k));
  }
  std::vector<LogicalOp> logicals;
  logicals.push_back(make_logical("X_L", left, 'X', n));
  logicals.push_back(make_logical("Z_L", bottom, 'Z', n));

  CodeLayout layout(CodeKind::Surface, d, finalize_plaquettes(std::move(cells), n),
                    std::move(logicals));
  check_layout_invariants(layout);
  return layout;
}

CodeLayout build_toric_code(int d) {
  if (d < 4 || d % 2 != 0) {
    throw std::invalid_argument("toric code distance must be even and >= 4, got " +
                                std::to_string(d));
  }
  const auto n = static_cast<std::size_t>(d * d);
  auto q = [d](int r, int c) { return static_cast<Qubit>(((r + d) % d) * d + (c + d) % d); };

  std::vector<CellSpec> cells;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      const Color color = (r + c) % 2 == 0 ? Color::Black : Color::White;
      cells.push_back({color, r, c, {q(r, c), q(r, c + 1), q(r + 1, c), q(r + 1, c + 1)}});
    }
  }

  const int half = d / 2;
  std::vector<Qubit> left, top, mid_row, mid_col;
  for (int k = 0; k < d; ++k) {
    left.push_back(q(k, 0));
    top.push_back(q(0, k));
    mid_row.push_back(q(half, k));
    mid_col.push_back(q(k, half));
  }
  std::vector<LogicalOp> logicals;
  logicals.push_back(make_logical("X_L1", mid_row, 'X', n));
  logicals.push_back(make_logical("Z_L1", left, 'Z', n));
  logicals.push_back(make_logical("X_L2", mid_col, 'X', n));
  logicals.push_back(make_logical("Z_L2", top, 'Z', n));

  CodeLayout layout(CodeKind::Toric, d, finalize_plaquettes(std::move(cells), n),
                    std::move(logicals));
  check_layout_invariants(layout);
  return layout;
}

CodeLayout build_code(CodeKind kind, int d) {
  return kind == CodeKind::Surface ? build_surface_code(d) : build_toric_code(d);
}

PauliOperator string_operator(const CodeLayout& layout, const StringPath& path) {
  if (path.qubits.empty()) {
    throw std::invalid_argument("string path must not be empty");
  }
  const char letter = path.kind == StringKind::X ? 'X' : 'Z';
  PauliOperator op(layout.n());
  for (Qubit j : path.qubits) {
    if (j >= layout.n()) {
      throw std::out_of_range("string path qubit " + std::to_string(j) +
                              " out of range for " + std::to_string(layout.n()) +
                              " qubits");
    }
    op = op * PauliOperator::single(layout.n(), j, letter);
  }
  return op;
}

std::vector<BitVec> stabilizer_generator_matrix(const CodeLayout& layout) {
  const std::size_t n = layout.n();
  std::vector<BitVec> rows;
  rows.reserve(layout.plaquettes().size());
  for (const auto& p : layout.plaquettes()) {
    BitVec row(2 * n);
    for (std::size_t j : p.stabilizer.x().ones()) row.set(j);
    for (std::size_t j : p.stabilizer.z().ones()) row.set(n + j);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t stabilizer_group_rank(const CodeLayout& layout) {
  return gf2::rank(stabilizer_generator_matrix(layout));
}

}  // namespace fermap
