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

#include <algorithm>
#include <cstddef>
#include <vector>

#include "opgraph/matrix.hpp"

namespace opgraph {

// Relative tolerance factors. Bounds are factor * max(1, ||A||_F) so they
// behave sensibly for both tiny and large-norm inputs.
inline constexpr double kHermTolFactor = 1e-10;
inline constexpr double kEigTolFactor = 1e-10;
inline constexpr double kPsdTolFactor = 1e-10;

inline double scaled_tol(double factor, double frobenius_norm) {
  return factor * std::max(1.0, frobenius_norm);
}

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary, eigenvectors as columns
};

// Tr(A* B). Conjugate-symmetric in its arguments.
complexd hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Full eigendecomposition of a Hermitian matrix. The input must be Hermitian
// within kHermTolFactor * max(1, ||A||_F); it is symmetrized before the solve.
HermitianEig eig_hermitian(const ComplexMatrix& a);

// Eigenvalues only (ascending). Same domain checks as eig_hermitian.
std::vector<double> eigvals_hermitian(const ComplexMatrix& a);

// max |eigenvalue| of a Hermitian matrix.
double operator_norm_hermitian(const ComplexMatrix& a);

// Hermitian PSD square root. Eigenvalues in [-tau_psd, 0) are clipped to 0;
// anything below -tau_psd raises NotPsdError.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

// Kronecker product with entry layout (iA*rB + iB, jA*cB + jB).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

enum class TracedFactor { first, second };

// Partial trace of a square matrix on a tensor product of dimensions
// dim_first * dim_second, tracing out the named factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_first,
                            std::size_t dim_second, TracedFactor traced);

// Modified Gram-Schmidt with one reorthogonalization pass, in the
// Hilbert-Schmidt geometry. Inputs whose residual is
// <= rank_tol * max(1, largest input norm) are dropped. Deterministic in
// input order; empty input gives empty output.
std::vector<ComplexMatrix> orthonormalize_hs(const std::vector<ComplexMatrix>& mats,
                                             double rank_tol);

// Isometric real coordinates for Hermitian n x n matrices: n diagonal
// entries, then (sqrt(2) Re, sqrt(2) Im) per upper-triangle entry in
// row-major order. dot(coords(A), coords(B)) = Tr(A B) for Hermitian A, B.
std::vector<double> hermitian_coords(const ComplexMatrix& a);
ComplexMatrix hermitian_from_coords(const std::vector<double>& coords, std::size_t n);

}  // namespace opgraph
