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

namespace opgraph {

// A self-adjoint, identity-containing matrix subspace of B(C^n), represented
// by an HS-orthonormal Hermitian basis of its self-adjoint part. The complex
// dimension of the system equals the real dimension of that basis.
class OperatorSystem {
 public:
  // Smallest operator system containing the generators: the identity is
  // adjoined and each generator is split into its two Hermitian parts before
  // orthonormalization. Parts are normalized first so that genuinely tiny
  // directions survive the rank tolerance.
  static OperatorSystem from_generators(std::size_t dim_h,
                                        const std::vector<ComplexMatrix>& generators);

  // Adopts an existing Hermitian basis as-is after validating the invariants
  // (hermiticity, orthonormality, identity membership) within `tol`.
  static OperatorSystem from_herm_basis(std::size_t dim_h, std::vector<ComplexMatrix> basis,
                                        double tol);

  std::size_t dim_h() const { return dim_h_; }
  std::size_t dim() const { return herm_basis_.size(); }
  const std::vector<ComplexMatrix>& herm_basis() const { return herm_basis_; }

  // Complex-span membership: both Hermitian parts of `m` are tested against
  // the real span. True iff ||m - P(m)||_F <= tol * max(1, ||m||_F).
  bool contains(const ComplexMatrix& m, double tol) const;

  bool equals(const OperatorSystem& other, double tol) const;

 private:
  OperatorSystem(std::size_t dim_h, std::vector<ComplexMatrix> basis);

  std::size_t dim_h_;
  std::vector<ComplexMatrix> herm_basis_;
};

// Frobenius distance of the HS-orthogonal projectors onto the two real spans,
// computed on the n^2-dimensional Hermitian coordinate space.
double projector_distance(const OperatorSystem& a, const OperatorSystem& b);

enum class EffectKind { duan, geometric };

const char* effect_kind_name(EffectKind kind);

// Ordered effects {A_k} with 0 <= A_k <= I and sum A_k = I, spanning the
// operator system they were built from.
struct EffectBasis {
  EffectKind kind = EffectKind::duan;
  std::vector<ComplexMatrix> effects;

  std::size_t size() const { return effects.size(); }
  std::size_t dim_h() const { return effects.empty() ? 0 : effects.front().rows(); }
};

// Effect basis with exactly dim(S) members: F_k = I + B_k/2 over the
// unit-operator-norm non-identity basis directions, scaled by
// beta = 1/(2 lambda_max(sum F_k)), with A_1 = I - sum_{k>=2} A_k.
EffectBasis duan_effect_basis(const OperatorSystem& s);

// Geometrically decaying effect sequence: each non-identity direction is
// mapped into the ball {B : ||B - I|| <= 1/2} and scaled by 2^-k, so that
// ||A_k|| < 2^-(k-1) for k >= 2 and ||I - A_1|| < 1.
EffectBasis geometric_effect_sequence(const OperatorSystem& s);

// Invariant checks for an effect basis. Loose mode relaxes the tolerances to
// the ones used when loading foreign files.
std::vector<CheckResult> check_effect_basis(const EffectBasis& e, bool strict);

// Throws ValidationError naming the first failed invariant.
void validate_effect_basis(const EffectBasis& e);

std::vector<CheckResult> check_operator_system(const OperatorSystem& s, bool strict);

// Seeded random operator system of complex dimension dim_s inside B(C^dim_h).
OperatorSystem random_system(std::size_t dim_h, std::size_t dim_s, std::uint64_t seed);

}  // namespace opgraph
