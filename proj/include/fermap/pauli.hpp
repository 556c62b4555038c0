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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fermap/bitvec.hpp"

namespace fermap {

/// n-qubit Pauli operator in symplectic form:
///
///   P = i^phase_exp * prod_j X_j^{x_j} Z_j^{z_j}
///
/// Per site Y = i X Z, so a bare "Y" has x=z=1 and phase_exp=1. Every product
/// and conjugation is exact in this representation.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n);
  PauliOperator(BitVec x, BitVec z, int phase_exp);

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
  /// Single-site operator with letter in {I,X,Y,Z} at qubit j, sign +1.
  static PauliOperator single(std::size_t n, std::size_t j, char letter);

  std::size_t n() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  int phase_exp() const { return phase_exp_; }

  /// Letter at qubit j: one of 'I', 'X', 'Y', 'Z'.
  char letter(std::size_t j) const;
  /// Replaces the letter at j, keeping the overall sign in front of the
  /// letter string (the value of letter_phase()) fixed.
  void set_letter(std::size_t j, char letter);

  /// Phase in front of the letter string, (phase_exp - #Y) mod 4. Hermitian
  /// operators have letter_phase in {0, 2}.
  int letter_phase() const;
  bool is_hermitian() const { return letter_phase() % 2 == 0; }
  /// +1 or -1 for Hermitian operators.
  int sign() const;
  bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }

  std::size_t weight() const;
  std::vector<std::size_t> support() const;

  /// Multiplies by i^k.
  PauliOperator& rotate_phase(int k);
  PauliOperator operator-() const;

  bool operator==(const PauliOperator& other) const = default;

 private:
  BitVec x_;
  BitVec z_;
  int phase_exp_ = 0;
};

class PauliParseError : public std::invalid_argument {
 public:
  PauliParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses "+XIZY", "-iYZ", "ZZ". Accepted prefixes: +, -, +i, -i, i.
PauliOperator pauli_from_text(std::string_view text);
/// Always emits an explicit prefix: "+", "-", "+i" or "-i".
std::string pauli_to_text(const PauliOperator& p);

PauliOperator pauli_mul(const PauliOperator& a, const PauliOperator& b);
inline PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  return pauli_mul(a, b);
}

/// Symplectic inner product test.
bool commutes(const PauliOperator& a, const PauliOperator& b);

/// C4 Clifford rotation R = (1 + i G) / sqrt(2) for a Hermitian Pauli G. Any
/// sign of the rotation is carried by G itself.
class C4Rotation {
 public:
  explicit C4Rotation(PauliOperator generator);

  const PauliOperator& generator() const { return generator_; }
  std::size_t n() const { return generator_.n(); }
  /// R(-G) = R(G)^dagger.
  C4Rotation inverse() const { return C4Rotation(-generator_); }

  bool operator==(const C4Rotation& other) const = default;

 private:
  PauliOperator generator_;
};

/// R^dagger q R: q when q commutes with the generator, i q G otherwise.
PauliOperator conjugate_by_c4(const PauliOperator& q, const C4Rotation& r);

/// Applies the rotations in order (first element acts first). With
/// `inverse`, applies the reversed sequence with negated generators, which
/// undoes the forward map.
PauliOperator conjugate_by_sequence(PauliOperator q,
                                    std::span<const C4Rotation> rotations,
                                    bool inverse = false);

}  // namespace fermap
