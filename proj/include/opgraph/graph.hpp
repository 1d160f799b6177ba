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
#include <vector>

#include "opgraph/channel.hpp"
#include "opgraph/matrix.hpp"
#include "opgraph/operator_system.hpp"

namespace opgraph {

// Operator graph of a channel together with the m^2 raw products V_n* V_m
// the span was built from.
struct GraphExtraction {
  OperatorSystem system;
  std::vector<ComplexMatrix> raw_products;
};

// G(phi) = span{V_n* V_m}, extracted from the Kraus operators.
GraphExtraction operator_graph(const QuantumChannel& phi);

// Same subspace through the adjoint of the complementary channel: images of
// all elementary environment matrices under dual_complementary_apply.
GraphExtraction graph_via_dual_complementary(const QuantumChannel& phi);

// Structured result of the effect-basis -> channel -> graph round trip.
// Thresholds are fixed; `verdict` is the conjunction of all sub-checks.
struct RoundTripReport {
  EffectKind kind = EffectKind::duan;
  std::size_t dim_h = 0;
  std::size_t system_dim = 0;

  // effect basis stage
  std::size_t effect_count = 0;
  double effect_min_eigenvalue = 0.0;
  double effect_max_eigenvalue = 0.0;
  bool effect_spectrum_ok = false;
  double effect_sum_residual = 0.0;
  bool effect_sum_ok = false;
  double effect_span_distance = 0.0;
  bool effect_span_ok = false;
  bool geometric_bounds_ok = true;   // trivially true for the duan kind
  double norm_decay_margin = 0.0;    // max_k ||A_k|| 2^(k-1), must stay < 1
  double identity_defect_norm = 0.0; // ||I - A_1||, must stay < 1

  // channel stage
  std::size_t dim_out = 0;
  std::size_t kraus_count = 0;
  double tp_residual = 0.0;
  bool tp_ok = false;
  double kraus_orthogonality_residual = 0.0;
  bool kraus_orthogonality_ok = false;
  double choi_min_eigenvalue = 0.0;
  bool choi_psd_ok = false;
  double choi_tp_residual = 0.0;
  bool choi_tp_ok = false;

  // graph stage
  std::size_t graph_dim_complex = 0;
  std::size_t graph_dim_real = 0;
  double projector_distance = 0.0;
  bool graph_equal = false;

  bool verdict = false;
};

// Runs the selected effect construction, synthesizes the channel, extracts
// the graph and compares it with the source system. Construction failures
// are rethrown with a stage label.
RoundTripReport verify_round_trip(const OperatorSystem& s, EffectKind kind);

// True iff <phi|A|psi> vanishes (within 1e-9) for every element of the graph,
// i.e. the two pure inputs stay perfectly distinguishable through any channel
// with this operator graph.
bool zero_error_distinguishable(const ComplexMatrix& phi, const ComplexMatrix& psi,
                                const OperatorSystem& graph);

}  // namespace opgraph
