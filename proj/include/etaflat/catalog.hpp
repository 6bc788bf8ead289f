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

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "etaflat/group.hpp"

namespace etaflat {

struct CyclicSpec {
    long order;
    BigRational a;
    IntMatrix matrix;
};

struct AffineSpec {
    std::vector<AffineElement> generators;
    long group_order;
};

/// A manifold with a known construction and, where published, its exact
/// eta value for golden tests.
struct CatalogEntry {
    std::string name;
    std::string holonomy;  ///< e.g. "Z6", "Z2xZ2", "(Z2)^6"
    long dimension;
    std::variant<CyclicSpec, AffineSpec> spec;
    std::optional<BigRational> expected_eta;
    std::string description;
};

/// Built-in entry by name.  Throws NotFound for unknown names.
CatalogEntry builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// Hantzsche-Wendt type action on T^m, m odd: holonomy (Z_2)^{m-1} made of
/// diagonal +-1 matrices of determinant one, half-integer translations.
/// Every eta contribution vanishes.
CatalogEntry hantzsche_wendt(long m);

/// The dimension 4n-1 cyclic family of order 2(4n-2) built on the signed
/// cycle generator; eta has the closed form evaluated by closed_form_z2m.
CatalogEntry family_z2m(long n);

/// Instantiates the entry's GroupAction.  May throw UnsupportedAction
/// (the "example2" entry exists to exercise exactly that).
GroupAction build_action(const CatalogEntry& entry);

/// One row of the dimension-7 summary: which eta values occur for each
/// cyclic holonomy group.
struct EtaValueRow {
    std::string holonomy;
    std::set<BigRational> reference;  ///< published value set
};

/// Reference value sets for every dimension-7 holonomy row the catalog
/// covers.
std::vector<EtaValueRow> dim7_reference_rows();

}  // namespace etaflat
