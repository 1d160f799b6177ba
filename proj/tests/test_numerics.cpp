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

#include <cmath>
#include <random>

#include "doctest.h"
#include "opgraph/errors.hpp"
#include "opgraph/numerics.hpp"
#include "test_helpers.hpp"

using namespace opgraph;
using namespace opgraph::test;

namespace {

ComplexMatrix reconstruct(const HermitianEig& eig) {
  ComplexMatrix scaled = eig.eigenvectors;
  for (std::size_t i = 0; i < scaled.rows(); ++i) {
    for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= eig.eigenvalues[j];
  }
  return scaled * eig.eigenvectors.adjoint();
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("hs_inner on known pairs") {
  CHECK(hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == complexd(2.0, 0.0));
  CHECK(std::abs(hs_inner(pauli_x(), pauli_y())) == doctest::Approx(0.0).epsilon(1e-15));

  std::mt19937_64 rng(101);
  const ComplexMatrix a = random_complex(3, 3, rng);
  const ComplexMatrix b = random_complex(3, 3, rng);
  CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-13);

  // <A, A> equals the elementwise sum of |entries|^2
  double elementwise = 0.0;
  for (const auto& v : a.data()) elementwise += std::norm(v);
  CHECK(std::abs(hs_inner(a, a).real() - elementwise) < 1e-12);
  CHECK(std::abs(hs_inner(a, a).imag()) < 1e-13);

  CHECK_THROWS_AS(hs_inner(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                  DimensionError);
}

TEST_CASE("eig_hermitian on diagonal and pauli inputs") {
  const auto diag = eig_hermitian(ComplexMatrix{{2.0, 0.0}, {0.0, -1.0}});
  CHECK(diag.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(diag.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));

  const auto sx = eig_hermitian(pauli_x());
  CHECK(sx.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sx.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), DomainError);
}

TEST_CASE("eig_hermitian reconstruction and unitarity over random inputs") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const ComplexMatrix a = random_hermitian(n, rng);
    const auto eig = eig_hermitian(a);
    const double tol = scaled_tol(kEigTolFactor, a.frobenius_norm());
    CHECK(distance_frobenius(reconstruct(eig), a) <= tol);
    CHECK(distance_frobenius(eig.eigenvectors.adjoint() * eig.eigenvectors,
                             ComplexMatrix::identity(n)) <= tol);
    for (std::size_t i = 1; i < n; ++i) CHECK(eig.eigenvalues[i - 1] <= eig.eigenvalues[i]);
  }
}

TEST_CASE("eig_hermitian is deterministic and matches eigvals_hermitian") {
  std::mt19937_64 rng(7);
  const ComplexMatrix a = random_hermitian(6, rng);
  const auto e1 = eig_hermitian(a);
  const auto e2 = eig_hermitian(a);
  CHECK(e1.eigenvalues == e2.eigenvalues);
  CHECK(e1.eigenvectors.data() == e2.eigenvectors.data());

  const auto vals = eigvals_hermitian(a);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    CHECK(std::abs(vals[i] - e1.eigenvalues[i]) < 1e-12 * std::max(1.0, a.frobenius_norm()));
  }
}

TEST_CASE("psd_sqrt fixed points and squaring oracle") {
  CHECK(distance_frobenius(psd_sqrt(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) <
        1e-13);
  const ComplexMatrix diag = psd_sqrt(ComplexMatrix{{4.0, 0.0}, {0.0, 9.0}});
  CHECK(distance_frobenius(diag, ComplexMatrix{{2.0, 0.0}, {0.0, 3.0}}) < 1e-13);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = random_complex(3, 3, rng);
    const ComplexMatrix a = m * m.adjoint();
    const ComplexMatrix r = psd_sqrt(a);
    CHECK(distance_frobenius(r * r, a) <= 1e-8 * std::max(1.0, a.frobenius_norm()));
    CHECK(hermiticity_residual(r) < 1e-13);
    CHECK(eigvals_hermitian(r).front() >= -scaled_tol(kPsdTolFactor, r.frobenius_norm()));
  }

  CHECK_THROWS_AS(psd_sqrt(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}), NotPsdError);

  // eigenvalues in [-tau_psd, 0) are clipped to zero
  const ComplexMatrix clipped = psd_sqrt(ComplexMatrix{{1.0, 0.0}, {0.0, -5e-11}});
  CHECK(clipped(1, 1) == complexd(0.0, 0.0));
}

TEST_CASE("tensor product layout and mixed-product identity") {
  CHECK(distance_frobenius(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                           ComplexMatrix::identity(6)) == 0.0);

  const ComplexMatrix d1{{1.0, 0.0}, {0.0, 2.0}};
  const ComplexMatrix d2{{3.0, 0.0}, {0.0, 4.0}};
  const ComplexMatrix expected{
      {3.0, 0.0, 0.0, 0.0}, {0.0, 4.0, 0.0, 0.0}, {0.0, 0.0, 6.0, 0.0}, {0.0, 0.0, 0.0, 8.0}};
  CHECK(distance_frobenius(tensor(d1, d2), expected) == 0.0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_complex(2, 2, rng);
    const ComplexMatrix b = random_complex(2, 2, rng);
    const ComplexMatrix c = random_complex(2, 2, rng);
    const ComplexMatrix d = random_complex(2, 2, rng);
    CHECK(distance_frobenius(tensor(a, b) * tensor(c, d), tensor(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("partial_trace against the product-state oracle") {
  std::mt19937_64 rng(11);
  const ComplexMatrix rho = random_complex(2, 2, rng);
  const ComplexMatrix sigma = random_complex(3, 3, rng);
  const ComplexMatrix joint = tensor(rho, sigma);

  ComplexMatrix expect_second = rho;
  expect_second *= sigma.trace();
  CHECK(distance_frobenius(partial_trace(joint, 2, 3, TracedFactor::second), expect_second) <
        1e-12);
  ComplexMatrix expect_first = sigma;
  expect_first *= rho.trace();
  CHECK(distance_frobenius(partial_trace(joint, 2, 3, TracedFactor::first), expect_first) <
        1e-12);

  CHECK(distance_frobenius(partial_trace(ComplexMatrix::identity(4), 2, 2, TracedFactor::first),
                           2.0 * ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("partial_trace preserves trace and is linear") {
  std::mt19937_64 rng(13);
  const ComplexMatrix m = random_complex(6, 6, rng);
  const ComplexMatrix n = random_complex(6, 6, rng);
  for (const auto factor : {TracedFactor::first, TracedFactor::second}) {
    CHECK(std::abs(partial_trace(m, 2, 3, factor).trace() - m.trace()) < 1e-12);
    const complexd a(0.7, -0.2), b(-1.3, 0.4);
    const ComplexMatrix combo = a * m + b * n;
    const ComplexMatrix lhs = partial_trace(combo, 2, 3, factor);
    const ComplexMatrix rhs =
        a * partial_trace(m, 2, 3, factor) + b * partial_trace(n, 2, 3, factor);
    CHECK(distance_frobenius(lhs, rhs) < 1e-12);
  }
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(4), 2, 3, TracedFactor::first),
                  DimensionError);
}

TEST_CASE("orthonormalize_hs drops dependent inputs and normalizes") {
  const auto collapsed =
      orthonormalize_hs({ComplexMatrix::identity(2), 2.0 * ComplexMatrix::identity(2)}, 1e-9);
  REQUIRE(collapsed.size() == 1);
  CHECK(distance_frobenius(collapsed[0],
                           complexd(1.0 / std::sqrt(2.0), 0.0) * ComplexMatrix::identity(2)) <
        1e-15);

  const auto pair = orthonormalize_hs({ComplexMatrix::identity(2), pauli_z()}, 1e-9);
  REQUIRE(pair.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const double target = i == j ? 1.0 : 0.0;
      CHECK(std::abs(hs_inner(pair[i], pair[j]) - complexd(target, 0.0)) < 1e-14);
    }
  }

  CHECK(orthonormalize_hs({pauli_x(), pauli_y(), pauli_x() + pauli_y()}, 1e-9).size() == 2);
  CHECK(orthonormalize_hs({}, 1e-9).empty());
  CHECK_THROWS_AS(orthonormalize_hs({pauli_x()}, 0.0), ParameterError);
  CHECK_THROWS_AS(orthonormalize_hs({pauli_x(), ComplexMatrix::identity(3)}, 1e-9),
                  DimensionError);
}

TEST_CASE("orthonormalize_hs output spans the input") {
  std::mt19937_64 rng(17);
  std::vector<ComplexMatrix> mats;
  for (int k = 0; k < 4; ++k) mats.push_back(random_complex(3, 3, rng));
  mats.push_back(mats[0] + complexd(0.0, 2.0) * mats[1]);
  mats.push_back(complexd(-0.5, 0.0) * mats[2]);

  const auto basis = orthonormalize_hs(mats, 1e-9);
  REQUIRE(basis.size() == 4);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double target = i == j ? 1.0 : 0.0;
      CHECK(std::abs(hs_inner(basis[i], basis[j]) - complexd(target, 0.0)) <= 1e-9);
    }
  }
  for (const auto& m : mats) {
    ComplexMatrix rebuilt(3, 3);
    for (const auto& e : basis) rebuilt += hs_inner(e, m) * e;
    CHECK(distance_frobenius(rebuilt, m) <= 1e-8 * std::max(1.0, m.frobenius_norm()));
  }
}

TEST_CASE("hermitian coordinates are an isometry") {
  std::mt19937_64 rng(23);
  const ComplexMatrix a = random_hermitian(4, rng);
  const ComplexMatrix b = random_hermitian(4, rng);
  CHECK(distance_frobenius(hermitian_from_coords(hermitian_coords(a), 4), a) < 1e-14);

  const auto ca = hermitian_coords(a);
  const auto cb = hermitian_coords(b);
  double dot = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i) dot += ca[i] * cb[i];
  CHECK(std::abs(dot - hs_inner(a, b).real()) < 1e-12);
  CHECK(std::abs(hs_inner(a, b).imag()) < 1e-12);
}

}  // TEST_SUITE
