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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fermap {

/// Fixed-length bit vector packed into 64-bit words. Bit j lives in word j/64
/// at position j%64; unused high bits of the last word are always zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size);

  std::size_t size() const { return size_; }
  bool get(std::size_t j) const {
    return (words_[j >> 6] >> (j & 63)) & 1u;
  }
  void set(std::size_t j, bool value = true);
  void flip(std::size_t j) { words_[j >> 6] ^= std::uint64_t{1} << (j & 63); }

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  bool operator==(const BitVec& other) const = default;

  std::size_t popcount() const;
  bool any() const;
  bool none() const { return !any(); }
  /// Parity of popcount(a & b).
  static bool dot(const BitVec& a, const BitVec& b);
  /// Lowest set bit at or after `from`, or size() when there is none.
  std::size_t find_next(std::size_t from) const;
  std::vector<std::size_t> ones() const;

  /// Bit 0 is the high bit of the first hex digit; the tail is zero padded to a
  /// multiple of four bits. "1000" -> "8".
  std::string to_hex() const;
  static BitVec from_hex(std::string_view hex, std::size_t size);
  /// '0'/'1' string, bit 0 first.
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check_same_size(const BitVec& other) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace gf2 {

/// Rank over GF(2) of the given rows (all of equal length).
std::size_t rank(std::vector<BitVec> rows);

/// Basis of the left null space: combinations c with sum_i c_i * rows[i] = 0.
/// Each returned vector has rows.size() bits.
std::vector<BitVec> left_nullspace(const std::vector<BitVec>& rows);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(std::vector<BitVec>& rows);

}  // namespace gf2
}  // namespace fermap
