// Copyright 2026 The lefschetz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON wire formats.
//
//   motive      {"terms": {"0": 1, "2": 2}}
//   morphism    {"source": motive, "target": motive,
//                "components": {"<r>": [["p/q", ...], ...]}}
//   collection  {"pieces": [{"label": "O(-1)", "kind": "exceptional"},
//                           {"label": "Cl0", "kind": "opaque", "ncRank": 2}]}
//   expression  {"type": "blowup", "base": {...}, "center": {...}, "codim": 2}
//   k0 class    {"terms": {"0": 1, "1": -1}}
//   hodge poly  {"terms": {"1,1": 1}}
//
// Map keys are decimal exponents (or "p,q" tuples); parsers reject anything
// else with InvalidArgument.

#pragma once

#include <json.hpp>

#include "lefschetz/measures.hpp"
#include "lefschetz/orbit.hpp"
#include "lefschetz/sod.hpp"
#include "lefschetz/tate_motive.hpp"
#include "lefschetz/varieties.hpp"

namespace lefschetz {

using Json = nlohmann::ordered_json;

Json to_json(const TateMotive& m);
TateMotive tate_motive_from_json(const Json& j);

Json to_json(const PoincarePoly& p);

Json to_json(const OrbitMorphism& f);
OrbitMorphism orbit_morphism_from_json(const Json& j);

Json to_json(const SODPiece& p);
Json to_json(const Collection& c);
Collection collection_from_json(const Json& j);

Json to_json(const VarietyExpr& e);
ExprPtr variety_expr_from_json(const Json& j);

Json to_json(const OpaquePart& p);
Json to_json(const GeneralizedMotive& m);

Json to_json(const K0Class& c);
K0Class k0_class_from_json(const Json& j);
Json to_json(const HodgeDelignePoly& p);

Json to_json(const FecReport& r);

}  // namespace lefschetz
