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

// Dense matrix oracle for small systems. Qubit 0 is the leftmost tensor
// factor, i.e. the most significant bit of the basis index.

#pragma once

#include <Eigen/Dense>

#include "fermap/pauli.hpp"

namespace fermap {

inline constexpr std::size_t kMaxDenseQubits = 12;

Eigen::MatrixXcd dense_matrix(const PauliOperator& p);
/// (1 + i G) / sqrt(2).
Eigen::MatrixXcd dense_matrix(const C4Rotation& r);

/// max_ij |a_ij - b_ij|.
double max_abs_deviation(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace fermap
