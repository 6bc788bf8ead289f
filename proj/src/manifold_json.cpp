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

#include "etaflat/manifold_json.hpp"

#include <sstream>

#include <json.hpp>

namespace etaflat {

namespace {

using nlohmann::json;

BigRational parse_rational_field(const json& j, const std::string& where) {
    if (j.is_number_integer()) return BigRational(j.get<long>());
    if (!j.is_string()) throw SchemaError(where + " must be a rational string \"p/q\"");
    try {
        return BigRational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

IntMatrix parse_matrix_field(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw SchemaError(where + " must be a nonempty array of rows");
    const size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw SchemaError(where + " rows must be nonempty arrays");
    IntMatrix m(static_cast<int>(j.size()), static_cast<int>(cols));
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw SchemaError(where + " has a row-length mismatch");
        for (size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_number_integer())
                throw SchemaError(where + " entries must be integers");
            m.at(static_cast<int>(i), static_cast<int>(c)) = BigInt(j[i][c].get<long>());
        }
    }
    return m;
}

const json& require(const json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field \"" + key + "\"");
    return *it;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(m.at(i, j2).get_si());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ManifoldFile parse_manifold(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("manifold file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("manifold file must be a JSON object");

    ManifoldFile mf;
    const json& jn = require(j, "name");
    if (!jn.is_string()) throw SchemaError("\"name\" must be a string");
    mf.name = jn.get<std::string>();
    const json& jd = require(j, "dimension");
    if (!jd.is_number_integer()) throw SchemaError("\"dimension\" must be an integer");
    mf.dimension = jd.get<long>();
    if (mf.dimension < 3 || mf.dimension % 4 != 3)
        throw SchemaError("\"dimension\" must be 3 (mod 4); the cotangent formulas are stated "
                          "for dimension 4n-1 only");
    const json& jf = require(j, "form");
    if (!jf.is_string()) throw SchemaError("\"form\" must be a string");
    mf.form = jf.get<std::string>();

    const int torus_dim = static_cast<int>(mf.dimension) - 1;
    if (mf.form == "split-cyclic") {
        CyclicSpec spec;
        const json& jo = require(j, "order");
        if (!jo.is_number_integer() || jo.get<long>() < 1)
            throw SchemaError("\"order\" must be a positive integer");
        spec.order = jo.get<long>();
        spec.a = parse_rational_field(require(j, "a"), "\"a\"");
        spec.matrix = parse_matrix_field(require(j, "matrix"), "\"matrix\"");
        if (spec.matrix.rows() != torus_dim || spec.matrix.cols() != torus_dim)
            throw SchemaError("\"matrix\" must be (dimension-1) x (dimension-1)");
        mf.payload = std::move(spec);
        return mf;
    }
    if (mf.form == "split-explicit") {
        const json& je = require(j, "elements");
        if (!je.is_array() || je.empty())
            throw SchemaError("\"elements\" must be a nonempty array");
        std::vector<IsometryElement> elements;
        int index = 0;
        for (const auto& item : je) {
            ++index;
            IsometryElement e;
            e.label = "e" + std::to_string(index);
            e.a = parse_rational_field(require(item, "a"), "element \"a\"").mod_one();
            e.torus_part = parse_matrix_field(require(item, "matrix"), "element \"matrix\"");
            if (e.torus_part.rows() != torus_dim || e.torus_part.cols() != torus_dim)
                throw SchemaError("element \"matrix\" must be (dimension-1) x (dimension-1)");
            elements.push_back(std::move(e));
        }
        mf.payload = std::move(elements);
        return mf;
    }
    if (mf.form == "affine") {
        AffineSpec spec;
        const json& jo = require(j, "group_order");
        if (!jo.is_number_integer() || jo.get<long>() < 1)
            throw SchemaError("\"group_order\" must be a positive integer");
        spec.group_order = jo.get<long>();
        const json& jg = require(j, "generators");
        if (!jg.is_array() || jg.empty())
            throw SchemaError("\"generators\" must be a nonempty array");
        for (const auto& item : jg) {
            AffineElement g;
            g.m = parse_matrix_field(require(item, "matrix"), "generator \"matrix\"");
            if (g.m.rows() != mf.dimension || g.m.cols() != mf.dimension)
                throw SchemaError("generator \"matrix\" must be dimension x dimension");
            const json& jt = require(item, "translation");
            if (!jt.is_array() || static_cast<long>(jt.size()) != mf.dimension)
                throw SchemaError("generator \"translation\" must have `dimension` entries");
            for (const auto& t : jt)
                g.t.push_back(parse_rational_field(t, "translation entry").mod_one());
            spec.generators.push_back(std::move(g));
        }
        mf.payload = std::move(spec);
        return mf;
    }
    throw SchemaError("\"form\" must be split-cyclic, split-explicit or affine");
}

GroupAction manifold_to_action(const ManifoldFile& mf) {
    GroupAction action = [&] {
        if (const auto* c = std::get_if<CyclicSpec>(&mf.payload))
            return cyclic_action(mf.dimension, c->order, c->a, c->matrix);
        if (const auto* e = std::get_if<std::vector<IsometryElement>>(&mf.payload))
            return action_from_elements(mf.dimension, *e);
        const auto& a = std::get<AffineSpec>(mf.payload);
        return action_from_affine(mf.dimension, a.generators, a.group_order);
    }();
    auto diag = validate_action(action);
    if (!diag.ok()) {
        std::string msg = "invalid action:";
        for (const auto& v : diag.violations) msg += "\n  " + v;
        throw SchemaError(msg);
    }
    return action;
}

std::string export_manifold(const CatalogEntry& entry) {
    json j;
    j["name"] = entry.name;
    j["dimension"] = entry.dimension;
    if (const auto* c = std::get_if<CyclicSpec>(&entry.spec)) {
        j["form"] = "split-cyclic";
        j["order"] = c->order;
        j["a"] = c->a.str();
        j["matrix"] = matrix_to_json(c->matrix);
    } else {
        const auto& a = std::get<AffineSpec>(entry.spec);
        j["form"] = "affine";
        j["group_order"] = a.group_order;
        json gens = json::array();
        for (const auto& g : a.generators) {
            json item;
            item["matrix"] = matrix_to_json(g.m);
            json tr = json::array();
            for (const auto& t : g.t) tr.push_back(t.str());
            item["translation"] = std::move(tr);
            gens.push_back(std::move(item));
        }
        j["generators"] = std::move(gens);
    }
    return j.dump(2) + "\n";
}

std::string report_to_json(const EtaReport& report) {
    json j;
    j["name"] = report.name;
    j["dimension"] = report.dimension;
    j["group_order"] = report.group_order;
    j["eta"] = {{"num", report.eta_exact.numerator().get_str()},
                {"den", report.eta_exact.denominator().get_str()}};
    j["eta_float"] = report.eta_float;
    j["is_integer"] = report.is_integer;
    j["obstructed"] = report.obstructed;
    json elems = json::array();
    for (const auto& c : report.contributions) {
        json e;
        e["label"] = c.label;
        e["a"] = c.a.str();
        e["nu"] = c.nu ? json(c.nu->get_si()) : json(nullptr);
        e["zero_reason"] = c.zero_reason
                               ? json(*c.zero_reason == ZeroReason::kEigenvaluePlus1
                                          ? "eigenvalue_plus_one"
                                          : "eigenvalue_minus_one")
                               : json(nullptr);
        json angles = json::array();
        for (const auto& p : c.angles) angles.push_back({{"k", p.k}, {"d", p.d}});
        e["angles"] = std::move(angles);
        e["contribution_float"] = c.value_float;
        elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    return j.dump(2) + "\n";
}

std::string report_to_text(const EtaReport& report, bool breakdown) {
    std::ostringstream os;
    os << "manifold: " << report.name << " (dimension " << report.dimension << ", group order "
       << report.group_order << ")\n";
    os << "eta = " << report.eta_exact.str();
    if (report.is_integer)
        os << " (integer)";
    else
        os << " (non-integer: obstructed as one-cusp cross-section)";
    os << "\n";
    if (breakdown) {
        for (const auto& c : report.contributions) {
            os << "  " << c.label << ": a = " << c.a.str();
            if (c.zero_reason) {
                os << ", zero ("
                   << (*c.zero_reason == ZeroReason::kEigenvaluePlus1 ? "eigenvalue +1"
                                                                      : "eigenvalue -1")
                   << ")";
            } else {
                os << ", nu = " << c.nu->get_str() << ", angles =";
                for (const auto& p : c.angles) os << " " << p.k << "/" << p.d;
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.9g", c.value_float);
                os << ", contribution ~ " << buf;
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace etaflat
