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

#include "fermap/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace fermap {

BitVec::BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

void BitVec::set(std::size_t j, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (j & 63);
  if (value) {
    words_[j >> 6] |= mask;
  } else {
    words_[j >> 6] &= ~mask;
  }
}

void BitVec::check_same_size(const BitVec& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("BitVec size mismatch: " +
                                std::to_string(size_) + " vs " +
                                std::to_string(other.size_));
  }
}

BitVec& BitVec::operator^=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::size_t BitVec::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

bool BitVec::dot(const BitVec& a, const BitVec& b) {
  a.check_same_size(b);
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    acc ^= a.words_[w] & b.words_[w];
  }
  return std::popcount(acc) & 1;
}

std::size_t BitVec::find_next(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) {
      return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
    }
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t j = find_next(0); j < size_; j = find_next(j + 1)) {
    out.push_back(j);
  }
  return out;
}

std::string BitVec::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((size_ + 3) / 4);
  for (std::size_t base = 0; base < size_; base += 4) {
    unsigned nibble = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      nibble <<= 1;
      if (base + k < size_ && get(base + k)) nibble |= 1;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t size) {
  if (hex.size() != (size + 3) / 4) {
    throw std::invalid_argument("hex string of length " +
                                std::to_string(hex.size()) +
                                " does not encode " + std::to_string(size) +
                                " bits");
  }
  BitVec out(size);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char ch = hex[i];
    unsigned nibble;
    if (ch >= '0' && ch <= '9') {
      nibble = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      nibble = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw std::invalid_argument("invalid hex digit at position " +
                                  std::to_string(i));
    }
    for (std::size_t k = 0; k < 4; ++k) {
      const bool bit = (nibble >> (3 - k)) & 1u;
      const std::size_t j = 4 * i + k;
      if (j < size) {
        out.set(j, bit);
      } else if (bit) {
        throw std::invalid_argument("hex padding bits must be zero");
      }
    }
  }
  return out;
}

std::string BitVec::to_string() const {
  std::string out(size_, '0');
  for (std::size_t j = 0; j < size_; ++j) {
    if (get(j)) out[j] = '1';
  }
  return out;
}

namespace gf2 {

std::vector<std::size_t> row_reduce(std::vector<BitVec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r].get(col)) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

std::size_t rank(std::vector<BitVec> rows) { return row_reduce(rows).size(); }

std::vector<BitVec> left_nullspace(const std::vector<BitVec>& rows) {
  // Augment each row with an identity block and eliminate on the left part.
  const std::size_t m = rows.size();
  if (m == 0) return {};
  const std::size_t cols = rows.front().size();
  std::vector<BitVec> aug;
  aug.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    BitVec row(cols + m);
    for (std::size_t j : rows[i].ones()) row.set(j);
    row.set(cols + i);
    aug.push_back(std::move(row));
  }
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < m; ++col) {
    std::size_t found = m;
    for (std::size_t r = next; r < m; ++r) {
      if (aug[r].get(col)) {
        found = r;
        break;
      }
    }
    if (found == m) continue;
    std::swap(aug[next], aug[found]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r != next && aug[r].get(col)) aug[r] ^= aug[next];
    }
    ++next;
  }
  std::vector<BitVec> basis;
  for (std::size_t r = next; r < m; ++r) {
    BitVec combo(m);
    for (std::size_t i = 0; i < m; ++i) combo.set(i, aug[r].get(cols + i));
    basis.push_back(std::move(combo));
  }
  return basis;
}

}  // namespace gf2
}  // namespace fermap
