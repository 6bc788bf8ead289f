/*
   Copyright 2026 the etaflat authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <string>
#include <variant>

#include "etaflat/catalog.hpp"
#include "etaflat/eta.hpp"
#include "etaflat/group.hpp"

namespace etaflat {

/// One manifold description file.  Three forms:
///   split-cyclic:   { order, a: "p/q", matrix }
///   split-explicit: { elements: [{ a, matrix }, ...] }
///   affine:         { generators: [{ matrix (d x d), translation }], group_order }
/// Rationals are strings "p/q"; matrices are arrays of integer rows.
struct ManifoldFile {
    std::string name;
    long dimension = 0;
    std::string form;
    std::variant<CyclicSpec, std::vector<IsometryElement>, AffineSpec> payload;
};

/// Parses and structurally validates manifold JSON.  Malformed JSON throws
/// ParseError; schema violations (including dimension != 3 mod 4) throw
/// SchemaError.
ManifoldFile parse_manifold(const std::string& text);

/// Builds the group action (validated).  May throw UnsupportedAction.
GroupAction manifold_to_action(const ManifoldFile& mf);

/// Serializes a catalog entry to the manifold JSON format (round-trips
/// through parse_manifold to an action with identical eta).
std::string export_manifold(const CatalogEntry& entry);

/// Report serialization: fixed element order and "p/q" rational strings,
/// so identical inputs yield identical bytes.
std::string report_to_json(const EtaReport& report);
std::string report_to_text(const EtaReport& report, bool breakdown);

}  // namespace etaflat
