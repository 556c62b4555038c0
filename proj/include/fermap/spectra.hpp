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

// Energy and entanglement spectra. Energies are exact integers in units of J
// (J = 1); degeneracies are arbitrary precision since they reach 2^(d^2).

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "fermap/lattice.hpp"
#include "fermap/planner.hpp"

namespace fermap {

using Degeneracy = boost::multiprecision::cpp_int;

/// Multiset of energies: energy -> degeneracy.
struct Spectrum {
  std::map<std::int64_t, Degeneracy> levels;

  Degeneracy total() const;
  bool operator==(const Spectrum&) const = default;
};

/// E = e0 + sum_j epsilon_j n_j over occupations n in {0,1}^N, each pattern
/// counted `multiplier` times. With parity groups, only patterns with an even
/// number of occupied modes inside every group are admissible.
struct SpectrumModel {
  std::int64_t e0 = 0;
  std::vector<std::int64_t> epsilons;
  std::vector<std::vector<std::size_t>> parity_groups;
  Degeneracy multiplier = 1;
};

/// Spectrum of -sum_p B_p from the syndrome structure: realizable syndromes
/// are those orthogonal to every GF(2) relation among the stabilizers, each
/// carrying 2^(n - rank) states.
Spectrum code_energy_spectrum(const CodeLayout& layout);

Spectrum model_spectrum(const SpectrumModel& model);
bool free_decomposition_check(const Spectrum& spectrum, const SpectrumModel& model);

/// All epsilon_j = 2J, one mode per plaquette. Surface: unconstrained, x2.
/// Toric: even occupation per colour, x4.
SpectrumModel free_fermion_witness(const CodeLayout& layout);

/// Spectrum of the transformed Hamiltonian -sum_p U B_p U^dagger, read directly
/// from its terms (single-site Z plus parity products over disjoint blocks).
Spectrum transformed_hamiltonian_spectrum(const TransformPlan& plan, const CodeLayout& layout);

// Dense oracles (n <= kMaxDenseQubits).

Eigen::MatrixXcd dense_code_hamiltonian(const CodeLayout& layout);
/// -sum of the target forms: +Z on each dynamic mode, parity products for b1/w1.
Eigen::MatrixXcd dense_fermion_hamiltonian(const TransformPlan& plan, const CodeLayout& layout);
/// V^dagger H V with V = R_1 R_2 ... R_K, i.e. U H U^dagger for U = V^dagger.
Eigen::MatrixXcd dense_conjugate(const Eigen::MatrixXcd& h, const TransformPlan& plan);
/// max |U H_code U^dagger - H_fermion| over all entries.
double dense_isospectrality(const TransformPlan& plan, const CodeLayout& layout);
/// Eigenvalues of the dense code Hamiltonian, rounded to integers.
Spectrum dense_energy_spectrum(const CodeLayout& layout);

struct EntanglementReport {
  std::vector<Qubit> region;
  /// Reduced state is uniform over 2^s levels.
  std::size_t s = 0;
  Degeneracy level_count = 1;
  bool flat = true;
  /// Plaquettes with qubits on both sides of the cut.
  std::size_t boundary_plaquettes = 0;
  /// 2^(|dA| - 1) with |dA| = boundary_plaquettes; reported, not asserted.
  Degeneracy boundary_formula_levels = 1;
};

/// Ground state generators: every plaquette (toric: minus b1-like and w1-like
/// dependent ones) plus the Z logicals.
std::vector<PauliOperator> ground_state_stabilizers(const CodeLayout& layout);

/// GF(2) rank route: s = |A| - dim{g in G : supp(g) in A}.
EntanglementReport entanglement_flat_levels(const CodeLayout& layout,
                                            const std::vector<PauliOperator>& state_stabilizers,
                                            const std::vector<Qubit>& region);

/// Dense route: builds the stabilizer state and returns the eigenvalues of its
/// reduced density matrix on `region`, descending.
std::vector<double> dense_reduced_spectrum(const std::vector<PauliOperator>& state_stabilizers,
                                           const std::vector<Qubit>& region);

}  // namespace fermap
