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

#include <bit>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "fermap/spectra.hpp"
#include "fermap/verifier.hpp"

namespace fermap {
namespace {

std::uint64_t choose(unsigned n, unsigned k) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

// Exhaustive walk over computational basis states of a diagonal Hamiltonian
// -sum_p t_p where every t_p is a signed product of Z's.
Spectrum diagonal_oracle(const std::vector<PauliOperator>& terms, std::size_t n) {
  Spectrum out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    std::int64_t e = 0;
    for (const auto& t : terms) {
      int s = t.sign();
      for (std::size_t q : t.support()) {
        if ((b >> q) & 1) s = -s;
      }
      e -= s;
    }
    out.levels[e] += 1;
  }
  return out;
}

TEST(Spectra, SurfaceD3Binomial) {
  const Spectrum s = code_energy_spectrum(build_surface_code(3));
  Spectrum want;
  for (unsigned m = 0; m <= 8; ++m) want.levels[-8 + 2 * static_cast<int>(m)] = 2 * choose(8, m);
  EXPECT_EQ(s, want);
  EXPECT_EQ(s.total(), 512);
}

TEST(Spectra, ToricD4EvenPerColour) {
  const Spectrum s = code_energy_spectrum(build_toric_code(4));
  // Independent count over (black, white) syndrome patterns.
  Spectrum want;
  for (std::uint32_t sb = 0; sb < 256; ++sb) {
    if (std::popcount(sb) % 2) continue;
    for (std::uint32_t sw = 0; sw < 256; ++sw) {
      if (std::popcount(sw) % 2) continue;
      want.levels[-16 + 2 * (std::popcount(sb) + std::popcount(sw))] += 4;
    }
  }
  EXPECT_EQ(s, want);
  EXPECT_EQ(s.total(), 65536);
  EXPECT_EQ(s.levels.size(), 9u);
  EXPECT_EQ(s.levels.at(-16), 4);
  EXPECT_EQ(s.levels.at(0), 25880);
}

TEST(Spectra, TransformedHamiltonianDiagonalOracle) {
  for (const CodeLayout& l : {build_surface_code(3), build_toric_code(4)}) {
    const TransformPlan p = plan_for(l);
    std::vector<PauliOperator> terms;
    for (const auto& pl : l.plaquettes()) terms.push_back(conjugate_by_plan(pl.stabilizer, p));
    for (const auto& t : terms) ASSERT_TRUE(t.x().none());
    const Spectrum oracle = diagonal_oracle(terms, l.n());
    EXPECT_EQ(transformed_hamiltonian_spectrum(p, l), oracle);
    EXPECT_EQ(code_energy_spectrum(l), oracle);
  }
}

TEST(Spectra, FreeWitnessAcrossSizes) {
  for (int d : {3, 5, 7, 9}) {
    const CodeLayout l = build_surface_code(d);
    const Spectrum s = code_energy_spectrum(l);
    EXPECT_TRUE(free_decomposition_check(s, free_fermion_witness(l)));
    EXPECT_EQ(transformed_hamiltonian_spectrum(plan_for(l), l), s);
    Degeneracy total = 1;
    total <<= d * d;
    EXPECT_EQ(s.total(), total);
  }
  for (int d : {4, 6, 8}) {
    const CodeLayout l = build_toric_code(d);
    const Spectrum s = code_energy_spectrum(l);
    EXPECT_TRUE(free_decomposition_check(s, free_fermion_witness(l)));
    EXPECT_EQ(transformed_hamiltonian_spectrum(plan_for(l), l), s);
  }
}

TEST(Spectra, TotalParityVariantDiverges) {
  const CodeLayout l = build_toric_code(4);
  SpectrumModel total_even = free_fermion_witness(l);
  std::vector<std::size_t> all;
  for (std::size_t j = 0; j < l.plaquettes().size(); ++j) all.push_back(j);
  total_even.parity_groups = {all};
  EXPECT_FALSE(free_decomposition_check(code_energy_spectrum(l), total_even));
}

TEST(Spectra, WitnessCheckIsPermutationSymmetricAndMutationSensitive) {
  const CodeLayout l = build_toric_code(4);
  const Spectrum s = code_energy_spectrum(l);
  SpectrumModel m = free_fermion_witness(l);
  m.epsilons[0] = 4;
  m.epsilons[9] = 0;
  const Spectrum base = model_spectrum(m);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    // Relabel modes; parity groups follow their modes.
    std::vector<std::size_t> perm(m.epsilons.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SpectrumModel q = m;
    for (std::size_t j = 0; j < perm.size(); ++j) q.epsilons[perm[j]] = m.epsilons[j];
    for (auto& g : q.parity_groups) {
      for (auto& j : g) j = perm[j];
    }
    EXPECT_EQ(model_spectrum(q), base);
  }
  for (const auto& [e, g] : s.levels) {
    for (int delta : {-1, 1}) {
      Spectrum mutant = s;
      mutant.levels[e] += delta;
      EXPECT_FALSE(free_decomposition_check(mutant, free_fermion_witness(l))) << "E=" << e;
    }
  }
}

TEST(Spectra, ModelExamples) {
  SpectrumModel m;
  m.epsilons = {1, 2};
  EXPECT_EQ(model_spectrum(m).levels, (std::map<std::int64_t, Degeneracy>{{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  m.parity_groups = {{0, 1}};
  m.multiplier = 3;
  m.e0 = -1;
  EXPECT_EQ(model_spectrum(m).levels, (std::map<std::int64_t, Degeneracy>{{-1, 3}, {2, 3}}));
  m.parity_groups = {{0, 1}, {1}};
  EXPECT_THROW(model_spectrum(m), std::invalid_argument);
}

TEST(SpectraDense, SurfaceD3EigenvaluesMatch) {
  const CodeLayout l = build_surface_code(3);
  EXPECT_EQ(dense_energy_spectrum(l), code_energy_spectrum(l));
}

TEST(SpectraDense, IsospectralityAndMutants) {
  const CodeLayout l = build_surface_code(3);
  const TransformPlan p = plan_for(l);
  EXPECT_LE(dense_isospectrality(p, l), 1e-9);
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    TransformPlan mutant = p;
    mutant.steps.erase(mutant.steps.begin() + static_cast<std::ptrdiff_t>(k));
    const double dev = dense_isospectrality(mutant, l);
    if (p.steps[k].provenance.kind == Provenance::Kind::Plaquette) {
      EXPECT_GT(dev, 0.1) << "deleted step " << k;
    } else {
      // Logical rotations commute with every transformed stabilizer.
      EXPECT_LE(dev, 1e-9) << "deleted step " << k;
    }
  }
  EXPECT_THROW(dense_isospectrality(plan_for(build_toric_code(4)), build_toric_code(4)), std::invalid_argument);
}

TEST(Entanglement, SimpleRegions) {
  const CodeLayout l = build_surface_code(3);
  const auto g = ground_state_stabilizers(l);
  ASSERT_EQ(g.size(), 9u);
  EXPECT_EQ(entanglement_flat_levels(l, g, {4}).s, 1u);
  EXPECT_EQ(entanglement_flat_levels(l, g, {}).s, 0u);
  std::vector<Qubit> all;
  for (Qubit q = 0; q < 9; ++q) all.push_back(q);
  EXPECT_EQ(entanglement_flat_levels(l, g, all).s, 0u);
  // Complementary regions share the spectrum.
  EXPECT_EQ(entanglement_flat_levels(l, g, {0, 1, 3}).s, entanglement_flat_levels(l, g, {2, 4, 5, 6, 7, 8}).s);
}

TEST(Entanglement, ToricGeneratorsAreMaximal) {
  const CodeLayout l = build_toric_code(4);
  const auto g = ground_state_stabilizers(l);
  EXPECT_EQ(g.size(), 16u);
  EXPECT_EQ(entanglement_flat_levels(l, g, {0}).s, 1u);
}

TEST(Entanglement, RejectsBadGenerators) {
  const CodeLayout l = build_surface_code(3);
  auto g = ground_state_stabilizers(l);
  g.pop_back();
  EXPECT_THROW(entanglement_flat_levels(l, g, {0}), std::invalid_argument);
  g.push_back(l.logical("X_L").op);
  g.push_back(l.logical("Z_L").op);
  EXPECT_THROW(entanglement_flat_levels(l, g, {0}), std::invalid_argument);
}

TEST(Entanglement, RankRouteMatchesDensePartialTrace) {
  const CodeLayout l = build_surface_code(3);
  const auto g = ground_state_stabilizers(l);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Qubit> region;
    for (Qubit q = 0; q < l.n(); ++q) {
      if (rng() & 1) region.push_back(q);
    }
    const EntanglementReport r = entanglement_flat_levels(l, g, region);
    const auto ev = dense_reduced_spectrum(g, region);
    const std::size_t levels = std::size_t{1} << r.s;
    ASSERT_EQ(static_cast<std::size_t>(r.level_count), levels);
    for (std::size_t i = 0; i < ev.size(); ++i) {
      EXPECT_NEAR(ev[i], i < levels ? 1.0 / static_cast<double>(levels) : 0.0, 1e-9) << "trial " << trial;
    }
  }
}

}  // namespace
}  // namespace fermap
