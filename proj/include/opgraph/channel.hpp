// Copyright 2026 The opgraph developers
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
#include <vector>

#include "opgraph/checks.hpp"
#include "opgraph/matrix.hpp"
#include "opgraph/operator_system.hpp"

namespace opgraph {

// Construction-time trace-preservation tolerance factor (residual bound is
// factor * dim_in). Files produced elsewhere are accepted at the looser
// kTpTolLoad to survive decimal round trips.
inline constexpr double kTpTolStrict = 1e-9;
inline constexpr double kTpTolLoad = 1e-6;

// A completely positive trace-preserving map in Kraus form. The Kraus
// operators map C^dim_in to C^dim_out and satisfy sum V_k* V_k = I.
// The Stinespring isometry is implicit in the stacked Kraus blocks.
class QuantumChannel {
 public:
  // Validates shape consistency, rejects all-zero Kraus operators, and
  // requires || sum V_k* V_k - I ||_F <= tp_tol_factor * dim_in.
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus,
                          double tp_tol_factor = kTpTolStrict);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  std::size_t kraus_count() const { return kraus_.size(); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  // sum_k V_k rho V_k*
  ComplexMatrix apply(const ComplexMatrix& rho) const;

  // Adjoint map: sum_k V_k* B V_k. Unital.
  ComplexMatrix dual_apply(const ComplexMatrix& b) const;

  // Adjoint of the complementary channel, evaluated directly from the Kraus
  // stack: sum_{n,m} B(n,m) V_n* V_m for B acting on the environment.
  ComplexMatrix dual_complementary_apply(const ComplexMatrix& b) const;

  // || sum V_k* V_k - I ||_F
  double tp_residual() const;

 private:
  std::size_t dim_in_;
  std::size_t dim_out_;
  std::vector<ComplexMatrix> kraus_;
};

// Channel whose operator graph equals the span of the effects: Kraus
// operators V_k embed sqrt(A_k) into the k-th block of C^(d*n), so that
// V_k* V_l = delta_kl A_k.
QuantumChannel synthesize_channel(const EffectBasis& effects);

// Complementary channel into the environment C^m (m = Kraus count), with
// Kraus operators indexed by the output dimension; all-zero rows are pruned.
QuantumChannel complementary(const QuantumChannel& phi);

// Choi matrix sum_{ij} |i><j| (x) phi(|i><j|), built on the unnormalized
// maximally entangled vector so trace preservation reads "partial trace = I".
ComplexMatrix choi(const QuantumChannel& phi);

// Haar-style random channel: a seeded Gaussian matrix is orthonormalized
// into an isometry and sliced into kraus_count blocks. Deterministic per seed.
QuantumChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                              std::size_t kraus_count, std::uint64_t seed);

// Invariant checks; strict mode additionally verifies the Choi matrix
// (PSD and output-side partial trace).
std::vector<CheckResult> check_channel(const QuantumChannel& phi, bool strict);

}  // namespace opgraph
