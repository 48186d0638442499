// Copyright 2026 The qha Authors
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
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qha/convolution.hpp"
#include "qha/correspondence.hpp"

namespace qha {

using Json = nlohmann::ordered_json;

/// Parse group spellings like "Z2" or "Z2xZ3" (case-insensitive, no
/// whitespace).  Throws std::invalid_argument on anything else.
std::vector<std::int64_t> parse_group_orders(const std::string& spec);
/// Renders orders back to the canonical spelling "Z2xZ3".
std::string group_spec_string(const std::vector<std::int64_t>& orders);

// Complex payloads are encoded as [re, im] pairs throughout.
Json complex_to_json(const Cplx& v);
Cplx complex_from_json(const nlohmann::json& j);

/// {"orders": [n1, ...]}
Json group_to_json(const FiniteAbelianGroup& g);
FiniteAbelianGroup group_from_json(const nlohmann::json& j);

/// {"kind": ..., "orders": [...], "phases"/"values" when applicable}.
Json multiplier_to_json(const Multiplier& m);
Multiplier multiplier_from_json(const nlohmann::json& j);

/// {"dim": n, "entries": [[re, im], ...]} in row-major order.
Json operator_to_json(const Operator& a);
Operator operator_from_json(const nlohmann::json& j);

/// {"values": [[re, im], ...]} — used for phase-space functions (length
/// |Xi|) and plain vectors (length |G|); the consumer dictates the length.
Json values_to_json(const CVec& v);
CVec values_from_json(const nlohmann::json& j);

/// {"b1": operator, "b2": operator}.  The reader performs no density
/// validation; run the result through make_rule to validate.
Json rule_to_json(const CorrespondenceRule& rule);
CorrespondenceRule rule_from_json(const nlohmann::json& j);

/// {"operators": [operator, ...]}.
Json family_to_json(const std::vector<Operator>& family);
std::vector<Operator> family_from_json(const nlohmann::json& j);

/// CSV grid of a phase-space function in canonical point order: one row per
/// point, columns x0..x{k-1}, xi0..xi{k-1}, re, im.  The header comments
/// document the point weight and the trace normalization; `warning`, when
/// nonempty, is emitted as an extra comment line.
std::string phase_function_csv(const PhaseFunction& f,
                               const std::string& warning = "");

/// File helpers.  Readers throw std::runtime_error on unreadable files and
/// nlohmann::json::exception on malformed JSON.
nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qha
