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

#include "fermap/pauli.hpp"

#include <string>

namespace fermap {
namespace {

int mod4(int k) { return ((k % 4) + 4) % 4; }

void require_same_size(const PauliOperator& a, const PauliOperator& b,
                       const char* op) {
  if (a.n() != b.n()) {
    throw std::invalid_argument(std::string(op) + ": size mismatch (" +
                                std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()) + " qubits)");
  }
}

}  // namespace

PauliOperator::PauliOperator(std::size_t n) : x_(n), z_(n) {}

PauliOperator::PauliOperator(BitVec x, BitVec z, int phase_exp)
    : x_(std::move(x)), z_(std::move(z)), phase_exp_(mod4(phase_exp)) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("PauliOperator: x and z bit-vectors differ in length");
  }
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t j, char letter) {
  if (j >= n) {
    throw std::out_of_range("qubit " + std::to_string(j) + " out of range for " +
                            std::to_string(n) + " qubits");
  }
  PauliOperator p(n);
  p.set_letter(j, letter);
  return p;
}

char PauliOperator::letter(std::size_t j) const {
  const bool xb = x_.get(j);
  const bool zb = z_.get(j);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

void PauliOperator::set_letter(std::size_t j, char letter) {
  if (j >= n()) {
    throw std::out_of_range("qubit " + std::to_string(j) + " out of range");
  }
  const int before = letter_phase();
  bool xb = false;
  bool zb = false;
  switch (letter) {
    case 'I': break;
    case 'X': xb = true; break;
    case 'Y': xb = zb = true; break;
    case 'Z': zb = true; break;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                  letter + "'");
  }
  x_.set(j, xb);
  z_.set(j, zb);
  phase_exp_ = mod4(before + static_cast<int>((x_ & z_).popcount()));
}

int PauliOperator::letter_phase() const {
  return mod4(phase_exp_ - static_cast<int>((x_ & z_).popcount()));
}

int PauliOperator::sign() const {
  const int lp = letter_phase();
  if (lp % 2 != 0) {
    throw std::logic_error("sign() of a non-Hermitian Pauli operator");
  }
  return lp == 0 ? 1 : -1;
}

std::size_t PauliOperator::weight() const { return (x_ | z_).popcount(); }

std::vector<std::size_t> PauliOperator::support() const { return (x_ | z_).ones(); }

PauliOperator& PauliOperator::rotate_phase(int k) {
  phase_exp_ = mod4(phase_exp_ + k);
  return *this;
}

PauliOperator PauliOperator::operator-() const {
  PauliOperator out = *this;
  out.rotate_phase(2);
  return out;
}

PauliOperator pauli_from_text(std::string_view text) {
  std::size_t pos = 0;
  int prefix = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') prefix = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    prefix += 1;
    ++pos;
  }
  if (pos == text.size()) {
    throw PauliParseError("Pauli text has no letters after position " +
                              std::to_string(pos),
                          pos);
  }
  const std::size_t n = text.size() - pos;
  PauliOperator p(n);
  for (std::size_t j = 0; j < n; ++j) {
    const char ch = text[pos + j];
    if (ch != 'I' && ch != 'X' && ch != 'Y' && ch != 'Z') {
      throw PauliParseError(std::string("invalid Pauli character '") + ch +
                                "' at position " + std::to_string(pos + j),
                            pos + j);
    }
    p.set_letter(j, ch);
  }
  p.rotate_phase(prefix);
  return p;
}

std::string pauli_to_text(const PauliOperator& p) {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[p.letter_phase()];
  out.reserve(out.size() + p.n());
  for (std::size_t j = 0; j < p.n(); ++j) out.push_back(p.letter(j));
  return out;
}

PauliOperator pauli_mul(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b, "pauli_mul");
  // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{z1.x2} X^{x1+x2} Z^{z1+z2}
  const int swap_sign = BitVec::dot(a.z(), b.x()) ? 2 : 0;
  return PauliOperator(a.x() ^ b.x(), a.z() ^ b.z(),
                       a.phase_exp() + b.phase_exp() + swap_sign);
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  require_same_size(a, b, "commutes");
  return BitVec::dot(a.x(), b.z()) == BitVec::dot(a.z(), b.x());
}

C4Rotation::C4Rotation(PauliOperator generator) : generator_(std::move(generator)) {
  if (!generator_.is_hermitian()) {
    throw std::invalid_argument("C4 rotation generator must be Hermitian, got " +
                                pauli_to_text(generator_));
  }
  if (generator_.is_identity_up_to_phase()) {
    throw std::invalid_argument("C4 rotation generator must not be the identity");
  }
}

PauliOperator conjugate_by_c4(const PauliOperator& q, const C4Rotation& r) {
  require_same_size(q, r.generator(), "conjugate_by_c4");
  if (commutes(q, r.generator())) return q;
  PauliOperator out = pauli_mul(q, r.generator());
  out.rotate_phase(1);
  return out;
}

PauliOperator conjugate_by_sequence(PauliOperator q,
                                    std::span<const C4Rotation> rotations,
                                    bool inverse) {
  if (!inverse) {
    for (const auto& r : rotations) q = conjugate_by_c4(q, r);
  } else {
    for (auto it = rotations.rbegin(); it != rotations.rend(); ++it) {
      q = conjugate_by_c4(q, it->inverse());
    }
  }
  return q;
}

}  // namespace fermap
