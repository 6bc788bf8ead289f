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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "etaflat/catalog.hpp"
#include "etaflat/eta.hpp"

using namespace etaflat;

TEST_CASE("every entry with a published value reproduces it exactly") {
    for (const auto& name : builtin_names()) {
        CatalogEntry e = builtin(name);
        if (!e.expected_eta) continue;
        EtaReport r = eta_total(build_action(e), e.name);
        CHECK_MESSAGE(r.eta_exact == *e.expected_eta, "entry ", name, ": got ",
                      r.eta_exact.str());
    }
}

TEST_CASE("generator orders match the declared holonomy orders") {
    for (const auto& name : builtin_names()) {
        CatalogEntry e = builtin(name);
        if (const auto* c = std::get_if<CyclicSpec>(&e.spec))
            CHECK_MESSAGE(matrix_order(c->matrix) == c->order, "entry ", name);
    }
}

TEST_CASE("dimension-7 value sets sit inside the reference rows") {
    std::map<std::string, std::set<BigRational>> computed;
    for (const auto& name : builtin_names()) {
        CatalogEntry e = builtin(name);
        if (e.dimension != 7 || !std::holds_alternative<CyclicSpec>(e.spec)) continue;
        computed[e.holonomy].insert(eta_total(build_action(e), e.name).eta_exact);
    }
    int rows_checked = 0;
    for (const auto& row : dim7_reference_rows()) {
        auto it = computed.find(row.holonomy);
        if (it == computed.end()) continue;
        ++rows_checked;
        for (const auto& v : it->second)
            CHECK_MESSAGE(row.reference.count(v) == 1, "row ", row.holonomy, " value ", v.str());
    }
    CHECK(rows_checked == 13);
}

TEST_CASE("the two order-30 companions realize the published pair of values") {
    std::set<BigRational> got{eta_total(build_action(builtin("Z30-A2")), "Z30-A2").eta_exact,
                              eta_total(build_action(builtin("Z30-A3")), "Z30-A3").eta_exact};
    CHECK(got == std::set<BigRational>{BigRational(0), BigRational(4)});
}

TEST_CASE("Hantzsche-Wendt family") {
    CatalogEntry hw3 = hantzsche_wendt(3);
    EtaReport r3 = eta_total(build_action(hw3), hw3.name);
    CHECK(r3.eta_exact == BigRational(0));
    CHECK(r3.contributions.size() == 3);

    CatalogEntry hw7 = hantzsche_wendt(7);
    EtaReport r7 = eta_total(build_action(hw7), hw7.name);
    CHECK(r7.eta_exact == BigRational(0));
    CHECK(r7.contributions.size() == 63);
    for (const auto& c : r7.contributions) CHECK(c.zero_reason.has_value());

    CHECK_THROWS_AS(hantzsche_wendt(4), DimensionError);
    CHECK_THROWS_AS(hantzsche_wendt(13), DimensionError);
}

TEST_CASE("M6 is the three-dimensional Hantzsche-Wendt manifold") {
    CatalogEntry m6 = builtin("M6");
    CHECK(m6.dimension == 3);
    EtaReport r = eta_total(build_action(m6), "M6");
    CHECK(r.eta_exact == BigRational(0));
    CHECK(r.group_order == 4);
}

TEST_CASE("signed-cycle family") {
    CatalogEntry f2 = family_z2m(2);
    CHECK(f2.dimension == 7);
    const auto& spec = std::get<CyclicSpec>(f2.spec);
    CHECK(spec.order == 12);
    CHECK(*signed_permutation_cycles(spec.matrix) == 1);
    CHECK(*signed_permutation_cycles(spec.matrix.pow(3)) == 3);
    CHECK(eta_total(build_action(f2), f2.name).eta_exact == BigRational(0));

    CatalogEntry f3 = family_z2m(3);
    CHECK(f3.dimension == 11);
    CHECK(std::get<CyclicSpec>(f3.spec).order == 20);
    CHECK(eta_total(build_action(f3), f3.name).eta_exact == closed_form_z2m(3));

    CHECK_THROWS_AS(family_z2m(1), DimensionError);
    CHECK_THROWS_AS(family_z2m(7), DimensionError);
}

TEST_CASE("unknown names are rejected") {
    CHECK_THROWS_AS(builtin("Z99"), NotFound);
}
