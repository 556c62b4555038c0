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

#include "fermap/dense.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace fermap {
namespace {

void guard_size(std::size_t n) {
  if (n > kMaxDenseQubits) {
    throw std::invalid_argument("dense matrix requested for " + std::to_string(n) +
                                " qubits; limit is " +
                                std::to_string(kMaxDenseQubits));
  }
}

// Basis index bit for qubit j (qubit 0 most significant).
std::size_t qubit_mask(std::size_t n, std::size_t j) {
  return std::size_t{1} << (n - 1 - j);
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const PauliOperator& p) {
  const std::size_t n = p.n();
  guard_size(n);
  const std::size_t dim = std::size_t{1} << n;
  std::size_t xmask = 0;
  std::size_t zmask = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (p.x().get(j)) xmask |= qubit_mask(n, j);
    if (p.z().get(j)) zmask |= qubit_mask(n, j);
  }
  static const std::complex<double> kPhase[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> global = kPhase[p.phase_exp()];
  // i^k X^x Z^z |b> = i^k (-1)^{z.b} |b xor x>
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const bool odd = std::popcount(col & zmask) & 1;
    const std::size_t row = col ^ xmask;
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
        odd ? -global : global;
  }
  return m;
}

Eigen::MatrixXcd dense_matrix(const C4Rotation& r) {
  const Eigen::MatrixXcd g = dense_matrix(r.generator());
  const auto dim = g.rows();
  const std::complex<double> i{0, 1};
  return (Eigen::MatrixXcd::Identity(dim, dim) + i * g) / std::sqrt(2.0);
}

double max_abs_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_deviation: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace fermap
