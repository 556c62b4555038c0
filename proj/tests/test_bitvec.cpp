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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fermap/bitvec.hpp"

namespace fermap {
namespace {

BitVec bits(const std::string& s) {
  BitVec v(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) v.set(j, s[j] == '1');
  return v;
}

// Rank by counting the span: |span| = 2^rank.
std::size_t span_rank(const std::vector<BitVec>& rows) {
  std::set<std::string> span{BitVec(rows.empty() ? 0 : rows[0].size()).to_string()};
  for (const auto& r : rows) {
    std::set<std::string> next = span;
    for (const auto& s : span) next.insert((bits(s) ^ r).to_string());
    span = std::move(next);
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < span.size()) ++k;
  return k;
}

TEST(BitVec, BasicOps) {
  BitVec v(130);
  v.set(0);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.popcount(), 3u);
  EXPECT_EQ(v.ones(), (std::vector<std::size_t>{0, 64, 129}));
  EXPECT_EQ(v.find_next(1), 64u);
  EXPECT_EQ(v.find_next(130), 130u);
  v.flip(64);
  EXPECT_FALSE(v.get(64));
  EXPECT_TRUE(BitVec::dot(bits("1101"), bits("1011")) == false);
  EXPECT_TRUE(BitVec::dot(bits("1100"), bits("1011")));
}

TEST(BitVec, HexLayout) {
  EXPECT_EQ(bits("1000").to_hex(), "8");
  EXPECT_EQ(bits("0001").to_hex(), "1");
  EXPECT_EQ(bits("11110000101").to_hex(), "f0a");
  EXPECT_EQ(BitVec::from_hex("f0a", 11), bits("11110000101"));
  EXPECT_THROW(BitVec::from_hex("f0f", 11), std::invalid_argument);
  EXPECT_THROW(BitVec::from_hex("zz", 8), std::invalid_argument);
}

TEST(Gf2, RankExamples) {
  EXPECT_EQ(gf2::rank({bits("110"), bits("011"), bits("101")}), 2u);
  EXPECT_EQ(gf2::rank({bits("100"), bits("010"), bits("001")}), 3u);
  EXPECT_EQ(gf2::rank({bits("000")}), 0u);
  EXPECT_EQ(gf2::rank({}), 0u);
}

TEST(Gf2, RandomRankAndNullspaceAgainstSpan) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 9;
    std::vector<BitVec> m;
    for (std::size_t i = 0; i < rows; ++i) {
      BitVec r(cols);
      for (std::size_t j = 0; j < cols; ++j) r.set(j, (rng() % 3) == 0);
      m.push_back(r);
    }
    const std::size_t rank = gf2::rank(m);
    ASSERT_EQ(rank, span_rank(m));
    const auto null = gf2::left_nullspace(m);
    ASSERT_EQ(null.size(), rows - rank);
    for (const auto& c : null) {
      ASSERT_EQ(c.size(), rows);
      BitVec sum(cols);
      for (std::size_t i = 0; i < rows; ++i) {
        if (c.get(i)) sum ^= m[i];
      }
      EXPECT_TRUE(sum.none());
    }
    EXPECT_EQ(span_rank(null), null.size());
  }
}

}  // namespace
}  // namespace fermap
