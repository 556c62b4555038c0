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

#include "fermap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

#include "fermap/dense.hpp"
#include "fermap/verifier.hpp"

namespace fermap {
namespace {

using Poly = std::vector<Degeneracy>;  // coefficient of x^m at index m
using EnergyPoly = std::map<std::int64_t, Degeneracy>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Degeneracy binomial(std::size_t k, std::size_t j) {
  Degeneracy out = 1;
  for (std::size_t i = 0; i < j; ++i) {
    out *= (k - i);
    out /= (i + 1);
  }
  return out;
}

// Even-weight part of (1 + x)^k.
Poly even_block(std::size_t k) {
  Poly out(k + 1, 0);
  for (std::size_t j = 0; j <= k; j += 2) out[j] = binomial(k, j);
  return out;
}

EnergyPoly energy_mul(const EnergyPoly& a, const EnergyPoly& b) {
  EnergyPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  return out;
}

Degeneracy pow2(std::size_t k) {
  Degeneracy out = 1;
  out <<= k;
  return out;
}

// Syndrome weight enumerator given the relation space among N stabilizers.
Poly syndrome_weight_enumerator(std::size_t count, std::vector<BitVec> relations) {
  gf2::row_reduce(relations);
  relations.erase(std::remove_if(relations.begin(), relations.end(),
                                 [](const BitVec& r) { return r.none(); }),
                  relations.end());
  BitVec covered(count);
  bool disjoint = true;
  for (const auto& r : relations) {
    if ((covered & r).any()) disjoint = false;
    covered |= r;
  }
  if (disjoint) {
    Poly out{1};
    for (const auto& r : relations) out = poly_mul(out, even_block(r.popcount()));
    const std::size_t free = count - covered.popcount();
    for (std::size_t i = 0; i < free; ++i) out = poly_mul(out, Poly{1, 1});
    return out;
  }
  if (count > 24) {
    throw std::runtime_error("overlapping stabilizer relations on more than 24 plaquettes");
  }
  Poly out(count + 1, 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << count); ++s) {
    BitVec syn(count);
    for (std::size_t i = 0; i < count; ++i) syn.set(i, (s >> i) & 1);
    bool ok = true;
    for (const auto& r : relations) ok = ok && !BitVec::dot(syn, r);
    if (ok) out[syn.popcount()] += 1;
  }
  return out;
}

std::vector<BitVec> symplectic_rows(const std::vector<PauliOperator>& ops) {
  std::vector<BitVec> rows;
  for (const auto& op : ops) {
    const std::size_t n = op.n();
    BitVec row(2 * n);
    for (std::size_t j : op.x().ones()) row.set(j);
    for (std::size_t j : op.z().ones()) row.set(n + j);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Degeneracy Spectrum::total() const {
  Degeneracy out = 0;
  for (const auto& [e, g] : levels) out += g;
  return out;
}

Spectrum code_energy_spectrum(const CodeLayout& layout) {
  const auto rows = stabilizer_generator_matrix(layout);
  const std::size_t count = rows.size();
  const std::size_t rank = gf2::rank(rows);
  const Poly weights = syndrome_weight_enumerator(count, gf2::left_nullspace(rows));
  const Degeneracy per_syndrome = pow2(layout.n() - rank);
  Spectrum out;
  for (std::size_t m = 0; m < weights.size(); ++m) {
    if (weights[m] == 0) continue;
    const auto energy = -static_cast<std::int64_t>(count) + 2 * static_cast<std::int64_t>(m);
    out.levels[energy] = weights[m] * per_syndrome;
  }
  return out;
}

Spectrum model_spectrum(const SpectrumModel& model) {
  const std::size_t modes = model.epsilons.size();
  std::vector<bool> grouped(modes, false);
  EnergyPoly acc{{model.e0, 1}};
  for (const auto& group : model.parity_groups) {
    // (energy, parity) dynamic programme over the group's modes.
    EnergyPoly even{{0, 1}};
    EnergyPoly odd;
    for (std::size_t j : group) {
      if (j >= modes || grouped[j]) {
        throw std::invalid_argument("parity groups must be disjoint and in range");
      }
      grouped[j] = true;
      EnergyPoly next_even = even;
      EnergyPoly next_odd = odd;
      for (const auto& [e, c] : odd) next_even[e + model.epsilons[j]] += c;
      for (const auto& [e, c] : even) next_odd[e + model.epsilons[j]] += c;
      even = std::move(next_even);
      odd = std::move(next_odd);
    }
    acc = energy_mul(acc, even);
  }
  for (std::size_t j = 0; j < modes; ++j) {
    if (!grouped[j]) acc = energy_mul(acc, EnergyPoly{{0, 1}, {model.epsilons[j], 1}});
  }
  Spectrum out;
  for (auto& [e, c] : acc) {
    if (c != 0) out.levels[e] = c * model.multiplier;
  }
  return out;
}

bool free_decomposition_check(const Spectrum& spectrum, const SpectrumModel& model) {
  return model_spectrum(model) == spectrum;
}

SpectrumModel free_fermion_witness(const CodeLayout& layout) {
  SpectrumModel model;
  const std::size_t count = layout.plaquettes().size();
  model.e0 = -static_cast<std::int64_t>(count);
  model.epsilons.assign(count, 2);
  if (layout.kind() == CodeKind::Surface) {
    model.multiplier = 2;
  } else {
    model.multiplier = 4;
    for (Color color : {Color::Black, Color::White}) {
      std::vector<std::size_t> group;
      for (int id : layout.ids_of_color(color)) group.push_back(static_cast<std::size_t>(id));
      model.parity_groups.push_back(std::move(group));
    }
  }
  return model;
}

Spectrum transformed_hamiltonian_spectrum(const TransformPlan& plan, const CodeLayout& layout) {
  const std::size_t n = layout.n();
  struct Term {
    BitVec support;
    int sign;
  };
  std::vector<Term> singles;
  std::vector<Term> products;
  for (const auto& p : layout.plaquettes()) {
    const PauliOperator t = conjugate_by_plan(p.stabilizer, plan);
    if (t.x().any()) {
      throw std::runtime_error("transformed term " + pauli_to_text(t) + " is not diagonal");
    }
    Term term{t.z(), t.sign()};
    (t.weight() == 1 ? singles : products).push_back(std::move(term));
  }
  BitVec single_sites(n);
  for (const auto& t : singles) {
    if ((single_sites & t.support).any()) {
      throw std::runtime_error("two single-site terms share a qubit");
    }
    single_sites |= t.support;
  }
  auto single_sign = [&](std::size_t q) {
    for (const auto& t : singles) {
      if (t.support.get(q)) return t.sign;
    }
    return 0;
  };

  // Each product term couples a block of single-site modes; E contribution of
  // the block with o occupied modes is -sum signs*(1-2n) - sign_P*(-1)^o.
  EnergyPoly acc{{0, 1}};
  BitVec in_block(n);
  for (const auto& prod : products) {
    if ((prod.support & in_block).any() || !((prod.support & single_sites) == prod.support)) {
      throw std::runtime_error("product terms must act on disjoint blocks of single-site modes");
    }
    in_block |= prod.support;
    // (energy, parity) over the block.
    EnergyPoly even{{0, 1}};
    EnergyPoly odd;
    for (std::size_t q : prod.support.ones()) {
      const int s = single_sign(q);
      EnergyPoly next_even, next_odd;
      for (const auto& [e, c] : even) {
        next_even[e - s] += c;
        next_odd[e + s] += c;
      }
      for (const auto& [e, c] : odd) {
        next_odd[e - s] += c;
        next_even[e + s] += c;
      }
      even = std::move(next_even);
      odd = std::move(next_odd);
    }
    EnergyPoly block;
    for (const auto& [e, c] : even) block[e - prod.sign] += c;
    for (const auto& [e, c] : odd) block[e + prod.sign] += c;
    acc = energy_mul(acc, block);
  }
  for (std::size_t q : single_sites.ones()) {
    if (in_block.get(q)) continue;
    const int s = single_sign(q);
    acc = energy_mul(acc, EnergyPoly{{-s, 1}, {s, 1}});
  }
  const std::size_t idle = n - single_sites.popcount();
  Spectrum out;
  for (auto& [e, c] : acc) {
    if (c != 0) out.levels[e] = c * pow2(idle);
  }
  return out;
}

Eigen::MatrixXcd dense_code_hamiltonian(const CodeLayout& layout) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << std::min(layout.n(), kMaxDenseQubits + 1));
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& p : layout.plaquettes()) h -= dense_matrix(p.stabilizer);
  return h;
}

Eigen::MatrixXcd dense_fermion_hamiltonian(const TransformPlan& plan, const CodeLayout& layout) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << std::min(layout.n(), kMaxDenseQubits + 1));
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& p : layout.plaquettes()) {
    h -= dense_matrix(transformed_stabilizer_target(plan, layout, p.id));
  }
  return h;
}

Eigen::MatrixXcd dense_conjugate(const Eigen::MatrixXcd& h, const TransformPlan& plan) {
  Eigen::MatrixXcd out = h;
  for (const auto& step : plan.steps) {
    const Eigen::SparseMatrix<std::complex<double>> r = dense_matrix(step.rotation).sparseView();
    if (r.rows() != out.rows()) {
      throw std::invalid_argument("plan and Hamiltonian act on different qubit counts");
    }
    Eigen::MatrixXcd left = r.adjoint() * out;
    out = left * r;
  }
  return out;
}

double dense_isospectrality(const TransformPlan& plan, const CodeLayout& layout) {
  if (layout.n() > kMaxDenseQubits) {
    throw std::invalid_argument("dense isospectrality check limited to " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
  return max_abs_deviation(dense_conjugate(dense_code_hamiltonian(layout), plan),
                           dense_fermion_hamiltonian(plan, layout));
}

Spectrum dense_energy_spectrum(const CodeLayout& layout) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_code_hamiltonian(layout),
                                                         Eigen::EigenvaluesOnly);
  Spectrum out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    out.levels[static_cast<std::int64_t>(std::llround(solver.eigenvalues()(i)))] += 1;
  }
  return out;
}

std::vector<PauliOperator> ground_state_stabilizers(const CodeLayout& layout) {
  std::vector<PauliOperator> gens;
  std::size_t rank = 0;
  auto try_add = [&](const PauliOperator& op) {
    gens.push_back(op);
    const std::size_t r = gf2::rank(symplectic_rows(gens));
    if (r == rank) {
      gens.pop_back();
    } else {
      rank = r;
    }
  };
  for (const auto& p : layout.plaquettes()) try_add(p.stabilizer);
  for (const auto& l : layout.logicals()) {
    if (l.label[0] == 'Z') try_add(l.op);
  }
  return gens;
}

EntanglementReport entanglement_flat_levels(const CodeLayout& layout,
                                            const std::vector<PauliOperator>& state_stabilizers,
                                            const std::vector<Qubit>& region) {
  const std::size_t n = layout.n();
  for (std::size_t a = 0; a < state_stabilizers.size(); ++a) {
    const auto& g = state_stabilizers[a];
    if (g.n() != n || !g.is_hermitian()) {
      throw std::invalid_argument("state stabilizers must be Hermitian on the layout's qubits");
    }
    for (std::size_t b = a + 1; b < state_stabilizers.size(); ++b) {
      if (!commutes(g, state_stabilizers[b])) {
        throw std::invalid_argument("state stabilizers must commute");
      }
    }
  }
  const auto rows = symplectic_rows(state_stabilizers);
  if (state_stabilizers.size() != n || gf2::rank(rows) != n) {
    throw std::invalid_argument("state stabilizers do not generate a maximal stabilizer group (need " +
                                std::to_string(n) + " independent generators)");
  }
  std::vector<bool> in_a(n, false);
  for (Qubit q : region) {
    if (q >= n) throw std::out_of_range("region qubit out of range");
    in_a[q] = true;
  }
  std::vector<Qubit> complement;
  for (Qubit q = 0; q < n; ++q) {
    if (!in_a[q]) complement.push_back(q);
  }
  const std::size_t region_size = n - complement.size();
  // Elements supported in A are the combinations vanishing on B.
  std::vector<BitVec> restricted;
  for (const auto& g : state_stabilizers) {
    BitVec row(2 * complement.size());
    for (std::size_t k = 0; k < complement.size(); ++k) {
      row.set(k, g.x().get(complement[k]));
      row.set(complement.size() + k, g.z().get(complement[k]));
    }
    restricted.push_back(std::move(row));
  }
  const std::size_t rank_b = complement.empty() ? 0 : gf2::rank(restricted);
  const std::size_t dim_a = n - rank_b;

  EntanglementReport report;
  std::vector<Qubit> sorted_region;
  for (Qubit q = 0; q < n; ++q) {
    if (in_a[q]) sorted_region.push_back(q);
  }
  report.region = sorted_region;
  report.s = region_size - dim_a;
  report.level_count = pow2(report.s);
  report.flat = true;
  for (const auto& p : layout.plaquettes()) {
    const bool any_in = std::any_of(p.qubits.begin(), p.qubits.end(), [&](Qubit q) { return in_a[q]; });
    const bool any_out = std::any_of(p.qubits.begin(), p.qubits.end(), [&](Qubit q) { return !in_a[q]; });
    if (any_in && any_out) ++report.boundary_plaquettes;
  }
  report.boundary_formula_levels =
      report.boundary_plaquettes == 0 ? Degeneracy(1) : pow2(report.boundary_plaquettes - 1);
  return report;
}

std::vector<double> dense_reduced_spectrum(const std::vector<PauliOperator>& state_stabilizers,
                                           const std::vector<Qubit>& region) {
  if (state_stabilizers.empty()) throw std::invalid_argument("no stabilizers given");
  const std::size_t n = state_stabilizers.front().n();
  if (n > kMaxDenseQubits) {
    throw std::invalid_argument("dense reduced spectrum limited to " +
                                std::to_string(kMaxDenseQubits) + " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  std::mt19937_64 rng(20260101);
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index i = 0; i < dim; ++i) psi(i) = {gauss(rng), gauss(rng)};
  for (const auto& s : state_stabilizers) {
    psi = 0.5 * (psi + dense_matrix(s) * psi);
  }
  const double norm = psi.norm();
  if (norm < 1e-6) throw std::runtime_error("projected state vanished");
  psi /= norm;

  std::vector<bool> in_a(n, false);
  for (Qubit q : region) in_a.at(q) = true;
  std::vector<Qubit> a_qubits, b_qubits;
  for (Qubit q = 0; q < n; ++q) (in_a[q] ? a_qubits : b_qubits).push_back(q);
  const auto dim_a = static_cast<Eigen::Index>(std::size_t{1} << a_qubits.size());
  const auto dim_b = static_cast<Eigen::Index>(std::size_t{1} << b_qubits.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_a, dim_b);
  for (Eigen::Index i = 0; i < dim; ++i) {
    auto bit = [&](Qubit q) { return (static_cast<std::size_t>(i) >> (n - 1 - q)) & 1u; };
    std::size_t ia = 0, ib = 0;
    for (Qubit q : a_qubits) ia = (ia << 1) | bit(q);
    for (Qubit q : b_qubits) ib = (ib << 1) | bit(q);
    m(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)) = psi(i);
  }
  const Eigen::MatrixXcd rho = m * m.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace fermap
