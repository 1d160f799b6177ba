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
#include <vector>

#include "doctest.h"
#include "opgraph/errors.hpp"
#include "opgraph/graph.hpp"
#include "opgraph/numerics.hpp"
#include "test_helpers.hpp"

using namespace opgraph;
using namespace opgraph::test;

namespace {

QuantumChannel depolarizing_qubit() {
  // Kraus family {|i><j| / sqrt(2)} sends every state to I/2.
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      kraus.push_back(complexd(1.0 / std::sqrt(2.0), 0.0) * matrix_unit(2, i, j));
    }
  }
  return QuantumChannel(std::move(kraus));
}

}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("noiseless channel has the trivial graph") {
  const auto g = operator_graph(QuantumChannel({ComplexMatrix::identity(3)}));
  CHECK(g.system.dim() == 1);
  CHECK(g.raw_products.size() == 1);
  CHECK(g.system.equals(OperatorSystem::from_generators(3, {}), 1e-10));
}

TEST_CASE("completely depolarizing channel has the full graph") {
  const auto g = operator_graph(depolarizing_qubit());
  CHECK(g.system.dim() == 4);
  CHECK(g.raw_products.size() == 16);
  const auto full = OperatorSystem::from_generators(2, {pauli_x(), pauli_y(), pauli_z()});
  CHECK(g.system.equals(full, 1e-8));
  // brute force: every matrix unit lies in the span
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(g.system.contains(matrix_unit(2, i, j), 1e-10));
    }
  }
}

TEST_CASE("graph of the synthesized channel recovers the source span") {
  const auto s = OperatorSystem::from_generators(2, {pauli_z()});
  const auto g = operator_graph(synthesize_channel(duan_effect_basis(s)));
  CHECK(g.system.equals(s, 1e-8));
  CHECK(projector_distance(g.system, s) <= 1e-10);
}

TEST_CASE("both graph routes agree") {
  std::vector<QuantumChannel> channels;
  channels.push_back(QuantumChannel({ComplexMatrix::identity(2)}));
  channels.push_back(random_channel(3, 3, 2, 11));
  channels.push_back(random_channel(2, 3, 3, 2));
  channels.push_back(random_channel(4, 2, 2, 9));
  channels.push_back(synthesize_channel(duan_effect_basis(random_system(3, 4, 55))));

  for (const auto& phi : channels) {
    const auto direct = operator_graph(phi);
    const auto via_dual = graph_via_dual_complementary(phi);
    CHECK(direct.system.dim() == via_dual.system.dim());
    CHECK(direct.system.equals(via_dual.system, 1e-8));
    CHECK(via_dual.raw_products.size() == phi.kraus_count() * phi.kraus_count());
  }

  const auto bounded = operator_graph(random_channel(3, 3, 2, 4242));
  CHECK(bounded.system.dim() <= 4);  // min(m^2, n^2) with m = 2
}

TEST_CASE("verify_round_trip on the trivial and full systems") {
  const auto r1 = verify_round_trip(OperatorSystem::from_generators(2, {}), EffectKind::duan);
  CHECK(r1.verdict);
  CHECK(r1.effect_count == 1);
  CHECK(r1.graph_dim_complex == 1);
  CHECK(r1.projector_distance <= 1e-10);

  const auto m2 = OperatorSystem::from_generators(2, {pauli_x(), pauli_y(), pauli_z()});
  const auto r2 = verify_round_trip(m2, EffectKind::geometric);
  CHECK(r2.verdict);
  CHECK(r2.graph_dim_complex == 4);
  CHECK(r2.graph_dim_real == 4);
  CHECK(r2.geometric_bounds_ok);

  std::vector<ComplexMatrix> gens3;
  std::mt19937_64 rng(59);
  for (int k = 0; k < 12; ++k) gens3.push_back(random_complex(3, 3, rng));
  const auto m3 = OperatorSystem::from_generators(3, gens3);
  REQUIRE(m3.dim() == 9);
  const auto r3 = verify_round_trip(m3, EffectKind::duan);
  CHECK(r3.verdict);
  CHECK(r3.graph_dim_complex == 9);
}

TEST_CASE("verify_round_trip verdicts hold over random systems") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const std::size_t d = 1 + rng() % (n * n);
    const auto s = random_system(n, d, 90000 + trial);
    const auto kind = trial % 2 == 0 ? EffectKind::duan : EffectKind::geometric;
    const auto r = verify_round_trip(s, kind);
    CHECK(r.verdict);
    CHECK(r.projector_distance <= 1e-8);
    CHECK(r.graph_dim_complex == d);
  }
}

TEST_CASE("zero_error_distinguishable on known graphs") {
  const auto trivial = OperatorSystem::from_generators(2, {});
  CHECK(zero_error_distinguishable(basis_vector(2, 0), basis_vector(2, 1), trivial));

  const auto full = OperatorSystem::from_generators(2, {pauli_x(), pauli_y(), pauli_z()});
  CHECK_FALSE(zero_error_distinguishable(basis_vector(2, 0), basis_vector(2, 1), full));

  const auto iz = OperatorSystem::from_generators(2, {pauli_z()});
  CHECK(zero_error_distinguishable(basis_vector(2, 0), basis_vector(2, 1), iz));

  // symmetry under swapping the two inputs
  std::mt19937_64 rng(71);
  const auto g = random_system(3, 4, 73);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix phi = random_unit_vector(3, rng);
    const ComplexMatrix psi = random_unit_vector(3, rng);
    CHECK(zero_error_distinguishable(phi, psi, g) == zero_error_distinguishable(psi, phi, g));
  }

  ComplexMatrix not_unit(2, 1);
  not_unit(0, 0) = 2.0;
  CHECK_THROWS_AS(zero_error_distinguishable(not_unit, basis_vector(2, 1), trivial),
                  DomainError);
  CHECK_THROWS_AS(zero_error_distinguishable(basis_vector(3, 0), basis_vector(3, 1), trivial),
                  DimensionError);
}

TEST_CASE("extracted graphs satisfy the operator system invariants") {
  for (const std::uint64_t seed : {1u, 2u, 3u}) {
    const auto phi = random_channel(3, 2, 2, seed);
    const auto g = operator_graph(phi);
    const std::size_t m = phi.kraus_count();
    CHECK(g.system.dim() <= std::min(m * m, std::size_t(9)));
    CHECK(g.system.contains(ComplexMatrix::identity(3), 1e-8));
    for (const auto& p : g.raw_products) {
      CHECK(g.system.contains(p, 1e-8));
      CHECK(g.system.contains(p.adjoint(), 1e-8));  // adjoint closure
    }
  }
}

TEST_CASE("graphs from product subsets stay inside the full graph") {
  const auto phi = synthesize_channel(duan_effect_basis(random_system(3, 5, 79)));
  const auto g = operator_graph(phi);
  std::vector<ComplexMatrix> subset(g.raw_products.begin(),
                                    g.raw_products.begin() + g.raw_products.size() / 2);
  const auto sub = OperatorSystem::from_generators(3, subset);
  CHECK(sub.dim() <= g.system.dim());
  for (const auto& b : sub.herm_basis()) CHECK(g.system.contains(b, 1e-8));
  for (const auto& p : subset) CHECK(g.system.contains(p, 1e-8));
}

}  // TEST_SUITE
