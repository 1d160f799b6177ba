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

#include "opgraph/numerics.hpp"

#include <cmath>
#include <complex>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "opgraph/errors.hpp"

namespace opgraph {

namespace {

void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionError(std::string(op) + " requires a square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_hermitian(const ComplexMatrix& a, const char* op) {
  const double res = hermiticity_residual(a);
  if (res > scaled_tol(kHermTolFactor, a.frobenius_norm())) {
    throw DomainError(std::string(op) + ": input is not Hermitian (residual " +
                      std::to_string(res) + ")");
  }
}

// zheev on the symmetrized input. jobz is 'V' or 'N'.
void zheev_symmetrized(const ComplexMatrix& a, char jobz, ComplexMatrix& vectors,
                       std::vector<double>& values) {
  require_square(a, "eig_hermitian");
  require_hermitian(a, "eig_hermitian");
  const std::size_t n = a.rows();
  vectors = hermitian_part(a);
  values.assign(n, 0.0);
  const int info =
      LAPACKE_zheev(LAPACK_ROW_MAJOR, jobz, 'L', static_cast<lapack_int>(n),
                    vectors.data().data(), static_cast<lapack_int>(n), values.data());
  if (info != 0) {
    throw DomainError("eig_hermitian: eigensolver failed to converge (info " +
                      std::to_string(info) + ")");
  }
}

}  // namespace

complexd hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!same_shape(a, b)) throw DimensionError("hs_inner: shape mismatch");
  complexd s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    s += std::conj(a.data()[i]) * b.data()[i];
  }
  return s;
}

HermitianEig eig_hermitian(const ComplexMatrix& a) {
  HermitianEig out{std::vector<double>(), ComplexMatrix(1, 1)};
  zheev_symmetrized(a, 'V', out.eigenvectors, out.eigenvalues);
  return out;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& a) {
  ComplexMatrix scratch(1, 1);
  std::vector<double> values;
  zheev_symmetrized(a, 'N', scratch, values);
  return values;
}

double operator_norm_hermitian(const ComplexMatrix& a) {
  const auto values = eigvals_hermitian(a);
  return std::max(std::abs(values.front()), std::abs(values.back()));
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  const auto eig = eig_hermitian(a);
  const double tol = scaled_tol(kPsdTolFactor, a.frobenius_norm());
  const std::size_t n = a.rows();
  std::vector<double> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda < -tol) {
      throw NotPsdError("psd_sqrt: eigenvalue " + std::to_string(lambda) +
                        " below -" + std::to_string(tol));
    }
    roots[i] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
  }
  // U diag(sqrt(lambda)) U*
  ComplexMatrix scaled = eig.eigenvectors;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= roots[j];
  }
  return hermitian_part(scaled * eig.eigenvectors.adjoint());
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const complexd av = a(ia, ja);
      if (av == complexd(0.0, 0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_first,
                            std::size_t dim_second, TracedFactor traced) {
  require_square(m, "partial_trace");
  if (dim_first == 0 || dim_second == 0 || m.rows() != dim_first * dim_second) {
    throw DimensionError("partial_trace: matrix size " + std::to_string(m.rows()) +
                         " does not factor as " + std::to_string(dim_first) + "*" +
                         std::to_string(dim_second));
  }
  if (traced == TracedFactor::first) {
    ComplexMatrix out(dim_second, dim_second);
    for (std::size_t i2 = 0; i2 < dim_second; ++i2) {
      for (std::size_t j2 = 0; j2 < dim_second; ++j2) {
        complexd s = 0.0;
        for (std::size_t i1 = 0; i1 < dim_first; ++i1) {
          s += m(i1 * dim_second + i2, i1 * dim_second + j2);
        }
        out(i2, j2) = s;
      }
    }
    return out;
  }
  ComplexMatrix out(dim_first, dim_first);
  for (std::size_t i1 = 0; i1 < dim_first; ++i1) {
    for (std::size_t j1 = 0; j1 < dim_first; ++j1) {
      complexd s = 0.0;
      for (std::size_t i2 = 0; i2 < dim_second; ++i2) {
        s += m(i1 * dim_second + i2, j1 * dim_second + i2);
      }
      out(i1, j1) = s;
    }
  }
  return out;
}

std::vector<ComplexMatrix> orthonormalize_hs(const std::vector<ComplexMatrix>& mats,
                                             double rank_tol) {
  if (rank_tol <= 0.0) throw ParameterError("orthonormalize_hs: rank_tol must be positive");
  if (mats.empty()) return {};
  double scale = 1.0;
  for (const auto& m : mats) {
    if (!same_shape(m, mats.front())) {
      throw DimensionError("orthonormalize_hs: inputs must share one shape");
    }
    scale = std::max(scale, m.frobenius_norm());
  }
  const double drop = rank_tol * scale;

  std::vector<ComplexMatrix> basis;
  for (const auto& m : mats) {
    ComplexMatrix r = m;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis) {
        const complexd c = hs_inner(e, r);
        for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] -= c * e.data()[i];
      }
    }
    const double nrm = r.frobenius_norm();
    if (nrm > drop) {
      r *= complexd(1.0 / nrm, 0.0);
      basis.push_back(std::move(r));
    }
  }
  return basis;
}

std::vector<double> hermitian_coords(const ComplexMatrix& a) {
  require_square(a, "hermitian_coords");
  const std::size_t n = a.rows();
  const double rt2 = std::sqrt(2.0);
  std::vector<double> coords;
  coords.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) coords.push_back(a(i, i).real());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      coords.push_back(rt2 * a(i, j).real());
      coords.push_back(rt2 * a(i, j).imag());
    }
  }
  return coords;
}

ComplexMatrix hermitian_from_coords(const std::vector<double>& coords, std::size_t n) {
  if (coords.size() != n * n) {
    throw DimensionError("hermitian_from_coords: expected " + std::to_string(n * n) +
                         " coordinates, got " + std::to_string(coords.size()));
  }
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = coords[i];
  std::size_t k = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const complexd v(coords[k] * inv_rt2, coords[k + 1] * inv_rt2);
      k += 2;
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

}  // namespace opgraph
