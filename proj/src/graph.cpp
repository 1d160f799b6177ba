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

#include "opgraph/graph.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "opgraph/errors.hpp"
#include "opgraph/numerics.hpp"

namespace opgraph {

namespace {

constexpr double kSpanTol = 1e-8;
constexpr double kZeroErrorTol = 1e-9;

std::vector<ComplexMatrix> kraus_products(const QuantumChannel& phi) {
  const std::size_t m = phi.kraus_count();
  std::vector<ComplexMatrix> products;
  products.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    const ComplexMatrix va = phi.kraus()[a].adjoint();
    for (std::size_t b = 0; b < m; ++b) {
      products.push_back(va * phi.kraus()[b]);
    }
  }
  return products;
}

}  // namespace

GraphExtraction operator_graph(const QuantumChannel& phi) {
  std::vector<ComplexMatrix> products = kraus_products(phi);
  OperatorSystem system = OperatorSystem::from_generators(phi.dim_in(), products);
  return GraphExtraction{std::move(system), std::move(products)};
}

GraphExtraction graph_via_dual_complementary(const QuantumChannel& phi) {
  const std::size_t m = phi.kraus_count();
  std::vector<ComplexMatrix> images;
  images.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ComplexMatrix unit(m, m);
      unit(i, j) = 1.0;
      images.push_back(phi.dual_complementary_apply(unit));
    }
  }
  OperatorSystem system = OperatorSystem::from_generators(phi.dim_in(), images);
  return GraphExtraction{std::move(system), std::move(images)};
}

RoundTripReport verify_round_trip(const OperatorSystem& s, EffectKind kind) {
  RoundTripReport r;
  r.kind = kind;
  r.dim_h = s.dim_h();
  r.system_dim = s.dim();
  const std::size_t n = s.dim_h();

  EffectBasis basis;
  try {
    basis = (kind == EffectKind::duan) ? duan_effect_basis(s) : geometric_effect_sequence(s);
  } catch (const OpgraphError& e) {
    throw ValidationError(std::string("effect construction stage: ") + e.what());
  }

  r.effect_count = basis.size();
  r.effect_spectrum_ok = true;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto vals = eigvals_hermitian(basis.effects[k]);
    const double c = std::max(1.0, basis.effects[k].frobenius_norm());
    r.effect_spectrum_ok = r.effect_spectrum_ok && vals.front() >= -kPsdTolFactor * c &&
                           vals.back() <= 1.0 + kPsdTolFactor * c;
    if (k == 0) {
      r.effect_min_eigenvalue = vals.front();
      r.effect_max_eigenvalue = vals.back();
    } else {
      r.effect_min_eigenvalue = std::min(r.effect_min_eigenvalue, vals.front());
      r.effect_max_eigenvalue = std::max(r.effect_max_eigenvalue, vals.back());
    }
  }

  ComplexMatrix sum(n, n);
  for (const auto& a : basis.effects) sum += a;
  r.effect_sum_residual = distance_frobenius(sum, ComplexMatrix::identity(n));
  r.effect_sum_ok = r.effect_sum_residual <= 1e-9 * double(n);

  const OperatorSystem effect_span = OperatorSystem::from_generators(n, basis.effects);
  r.effect_span_distance = projector_distance(effect_span, s);
  r.effect_span_ok = r.effect_span_distance <= kSpanTol;

  if (kind == EffectKind::geometric) {
    r.norm_decay_margin = 0.0;
    for (std::size_t k = 1; k < basis.size(); ++k) {
      const double norm = operator_norm_hermitian(basis.effects[k]);
      r.norm_decay_margin =
          std::max(r.norm_decay_margin, norm * std::ldexp(1.0, static_cast<int>(k)));
    }
    r.identity_defect_norm =
        operator_norm_hermitian(ComplexMatrix::identity(n) - basis.effects.front());
    r.geometric_bounds_ok = r.norm_decay_margin < 1.0 && r.identity_defect_norm < 1.0;
  }

  QuantumChannel phi = [&] {
    try {
      return synthesize_channel(basis);
    } catch (const OpgraphError& e) {
      throw ValidationError(std::string("channel synthesis stage: ") + e.what());
    }
  }();
  r.dim_out = phi.dim_out();
  r.kraus_count = phi.kraus_count();
  r.tp_residual = phi.tp_residual();
  r.tp_ok = r.tp_residual <= 1e-9 * double(n);

  // Kraus orthogonality V_k* V_l = delta_kl A_k, relative to each A_k.
  r.kraus_orthogonality_residual = 0.0;
  for (std::size_t k = 0; k < phi.kraus_count(); ++k) {
    const ComplexMatrix vk = phi.kraus()[k].adjoint();
    const double scale = std::max(1.0, basis.effects[k].frobenius_norm());
    for (std::size_t l = 0; l < phi.kraus_count(); ++l) {
      ComplexMatrix product = vk * phi.kraus()[l];
      if (k == l) product -= basis.effects[k];
      r.kraus_orthogonality_residual =
          std::max(r.kraus_orthogonality_residual, product.frobenius_norm() / scale);
    }
  }
  r.kraus_orthogonality_ok = r.kraus_orthogonality_residual <= 1e-8;

  const ComplexMatrix c = choi(phi);
  r.choi_min_eigenvalue = eigvals_hermitian(c).front();
  r.choi_psd_ok = r.choi_min_eigenvalue >= -scaled_tol(kPsdTolFactor, c.frobenius_norm());
  r.choi_tp_residual = distance_frobenius(
      partial_trace(c, n, phi.dim_out(), TracedFactor::second), ComplexMatrix::identity(n));
  r.choi_tp_ok = r.choi_tp_residual <= 1e-9 * double(n);

  GraphExtraction g = [&] {
    try {
      return operator_graph(phi);
    } catch (const OpgraphError& e) {
      throw ValidationError(std::string("graph extraction stage: ") + e.what());
    }
  }();
  r.graph_dim_complex = g.system.dim();
  r.graph_dim_real = g.system.dim();
  r.projector_distance = projector_distance(g.system, s);
  r.graph_equal = r.projector_distance <= kSpanTol;

  r.verdict = r.effect_spectrum_ok && r.effect_sum_ok && r.effect_span_ok &&
              r.geometric_bounds_ok && r.tp_ok && r.kraus_orthogonality_ok && r.choi_psd_ok &&
              r.choi_tp_ok && r.graph_equal;
  return r;
}

bool zero_error_distinguishable(const ComplexMatrix& phi, const ComplexMatrix& psi,
                                const OperatorSystem& graph) {
  const std::size_t n = graph.dim_h();
  if (phi.cols() != 1 || psi.cols() != 1 || phi.rows() != n || psi.rows() != n) {
    throw DimensionError("zero_error_distinguishable: inputs must be column vectors of length " +
                         std::to_string(n));
  }
  for (const ComplexMatrix* v : {&phi, &psi}) {
    const double norm = v->frobenius_norm();
    if (std::abs(norm - 1.0) > 1e-9) {
      throw DomainError("zero_error_distinguishable: vector norm " + std::to_string(norm) +
                        " is not 1");
    }
  }
  // The Hermitian basis spans the system over C, so testing it suffices.
  for (const auto& e : graph.herm_basis()) {
    const ComplexMatrix image = e * psi;
    complexd overlap = 0.0;
    for (std::size_t i = 0; i < n; ++i) overlap += std::conj(phi(i, 0)) * image(i, 0);
    if (std::abs(overlap) > kZeroErrorTol) return false;
  }
  return true;
}

}  // namespace opgraph
