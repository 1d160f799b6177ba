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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace opgraph {

using complexd = std::complex<double>;

// Dense complex matrix with row-major storage. The universal carrier for
// operators, Kraus blocks and state vectors (columns).
class ComplexMatrix {
 public:
  // Zero-initialized rows x cols matrix. Both dimensions must be >= 1.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  // Row-major initializer, e.g. ComplexMatrix{{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<complexd>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  complexd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const complexd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<complexd>& data() { return data_; }
  const std::vector<complexd>& data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(complexd scalar);

  ComplexMatrix adjoint() const;
  complexd trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_finite() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<complexd> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(complexd scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, complexd scalar);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

bool same_shape(const ComplexMatrix& a, const ComplexMatrix& b);
double distance_frobenius(const ComplexMatrix& a, const ComplexMatrix& b);

// (A + A*)/2, the Hermitian part H of A = H + iK.
ComplexMatrix hermitian_part(const ComplexMatrix& a);
// (A - A*)/(2i), the Hermitian matrix K of A = H + iK.
ComplexMatrix antihermitian_part(const ComplexMatrix& a);
// ||A - A*||_F.
double hermiticity_residual(const ComplexMatrix& a);

}  // namespace opgraph
