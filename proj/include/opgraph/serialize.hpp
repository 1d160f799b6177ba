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

#include <string>
#include <variant>

#include "opgraph/channel.hpp"
#include "opgraph/graph.hpp"
#include "opgraph/matrix.hpp"
#include "opgraph/operator_system.hpp"

namespace opgraph {

// Canonical JSON text: sorted keys, fixed layout, decimals at 17 significant
// digits. Two emissions of the same object are byte-identical and a
// parse(emit(x)) round trip reproduces entries exactly.
std::string emit(const ComplexMatrix& m);
std::string emit(const OperatorSystem& s);
std::string emit(const EffectBasis& e);
std::string emit(const QuantumChannel& c);

// Machine-readable summary of a round-trip report (same canonical style).
std::string emit_report(const RoundTripReport& r);

// Parsers validate structure (ParseError) and re-check the kind-specific
// invariants at load tolerances (ValidationError). Channels are accepted up
// to a trace-preservation residual of kTpTolLoad * dim_in.
ComplexMatrix parse_matrix(const std::string& text);
OperatorSystem parse_operator_system(const std::string& text);
EffectBasis parse_effect_basis(const std::string& text);
QuantumChannel parse_channel(const std::string& text);

using Document = std::variant<ComplexMatrix, OperatorSystem, EffectBasis, QuantumChannel>;

// Dispatches on the document's "kind" field.
Document parse_any(const std::string& text);

const char* document_kind_name(const Document& doc);

}  // namespace opgraph
