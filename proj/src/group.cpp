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

#include "etaflat/group.hpp"

#include <map>
#include <set>

#include "etaflat/cyclotomic.hpp"

namespace etaflat {

GroupAction::GroupAction(long dimension, long group_order, std::vector<IsometryElement> elements,
                         std::vector<OrientedAngles> cyclic_angles)
    : dimension_(dimension),
      order_(group_order),
      elements_(std::move(elements)),
      cyclic_angles_(std::move(cyclic_angles)) {
    if (order_ < 1) throw OrderMismatch("group order must be positive");
    if (static_cast<long>(elements_.size()) != order_ - 1)
        throw OrderMismatch("element count must be group order minus one");
    if (!cyclic_angles_.empty() && cyclic_angles_.size() != elements_.size())
        throw InternalError("oriented angle data must align with elements");
    for (const auto& e : elements_)
        if (!e.torus_part.is_square() || e.torus_part.rows() != dimension_ - 1)
            throw ShapeError("torus part of " + e.label + " must be (d-1) x (d-1)");
}

GroupAction cyclic_action(long dimension, long order, const BigRational& a, const IntMatrix& A) {
    if (dimension % 4 != 3)
        throw DimensionError("cyclic action dimension must be 3 (mod 4)");
    if (!A.is_square() || A.rows() != dimension - 1)
        throw ShapeError("generator matrix must be (d-1) x (d-1)");
    if (order < 1) throw OrderMismatch("order must be positive");

    if (order == 1) return GroupAction(dimension, 1, {});

    if (order % matrix_order(A) != 0)
        throw OrderMismatch("matrix order does not divide the group order");
    BigRational na = (a * BigRational(order)).mod_one();
    if (!na.is_zero()) throw OrderMismatch("order * a is not an integer");
    for (long k = 1; k < order; ++k)
        if ((a * BigRational(k)).mod_one().is_zero())
            throw NotFree("power " + std::to_string(k) + " of the generator fixes the circle");

    RotationSpectrum gen = rotation_spectrum(A);

    std::vector<IsometryElement> elements;
    std::vector<OrientedAngles> angles;
    elements.reserve(order - 1);
    for (long k = 1; k < order; ++k) {
        IsometryElement e;
        e.a = (a * BigRational(k)).mod_one();
        e.torus_part = A.pow(k);
        e.label = "g^" + std::to_string(k);
        elements.push_back(std::move(e));

        OrientedAngles oa;
        oa.has_plus1 = gen.mult_plus1 > 0 || (gen.mult_minus1 > 0 && k % 2 == 0);
        oa.has_minus1 = gen.mult_minus1 > 0 && k % 2 == 1;
        for (const auto& p : gen.pairs) {
            long m = (p.k * k) % p.d;
            if (m == 0)
                oa.has_plus1 = true;
            else if (2 * m == p.d)
                oa.has_minus1 = true;
            else
                oa.pairs.push_back({m, p.d});
        }
        angles.push_back(std::move(oa));
    }
    return GroupAction(dimension, order, std::move(elements), std::move(angles));
}

IsometryElement split_affine(const AffineElement& e, const std::string& label) {
    const IntMatrix& m = e.m;
    if (!m.is_square()) throw ShapeError("affine matrix must be square");
    const int d = m.rows();
    if (static_cast<int>(e.t.size()) != d)
        throw ShapeError("translation length must match matrix size");

    for (int i = 0; i < d; ++i) {
        bool fixed = true;
        for (int r = 0; r < d && fixed; ++r) {
            const BigInt want_col = (r == i) ? 1 : 0;
            if (m.at(r, i) != want_col || m.at(i, r) != want_col) fixed = false;
        }
        if (!fixed) continue;
        BigRational a = e.t[i].mod_one();
        if (a.is_zero()) continue;

        IsometryElement out;
        out.a = a;
        out.torus_part = m.minor_without(i);
        out.label = label;
        for (int r = 0; r < d; ++r)
            if (r != i) out.translation_rest.push_back(e.t[r].mod_one());
        return out;
    }
    throw UnsupportedAction(
        "element " + label +
        " has no fixed coordinate axis with nonzero translation: the action does not split as "
        "(x, y) -> (x + a, Ay + abar) with a != 0");
}

GroupAction action_from_elements(long dimension, std::vector<IsometryElement> elements,
                                 long group_order) {
    if (group_order == 0) group_order = static_cast<long>(elements.size()) + 1;
    return GroupAction(dimension, group_order, std::move(elements));
}

namespace {

struct AffineKey {
    IntMatrix m;
    std::vector<BigRational> t;
    bool operator<(const AffineKey& o) const {
        if (m != o.m) return m < o.m;
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i] != o.t[i]) return t[i] < o.t[i];
        }
        return false;
    }
};

AffineElement affine_mul(const AffineElement& x, const AffineElement& y) {
    AffineElement r;
    r.m = x.m * y.m;
    r.t.resize(x.t.size(), BigRational(0));
    for (int i = 0; i < x.m.rows(); ++i) {
        BigRational acc = x.t[i];
        for (int j = 0; j < x.m.cols(); ++j)
            if (x.m.at(i, j) != 0) acc += BigRational(x.m.at(i, j)) * y.t[j];
        r.t[i] = acc.mod_one();
    }
    return r;
}

}  // namespace

GroupAction action_from_affine(long dimension, const std::vector<AffineElement>& generators,
                               long group_order) {
    if (generators.empty()) throw OrderMismatch("affine form needs at least one generator");
    const int d = static_cast<int>(dimension);
    for (const auto& g : generators)
        if (!g.m.is_square() || g.m.rows() != d)
            throw ShapeError("affine generator must be d x d");

    // close the generators into the full group, translations mod 1
    AffineElement id{IntMatrix::identity(d), std::vector<BigRational>(d, BigRational(0))};
    std::map<AffineKey, AffineElement> seen;
    seen.emplace(AffineKey{id.m, id.t}, id);
    std::vector<AffineElement> frontier{id};
    while (!frontier.empty()) {
        std::vector<AffineElement> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                AffineElement y = affine_mul(x, g);
                AffineKey key{y.m, y.t};
                if (seen.count(key)) continue;
                if (static_cast<long>(seen.size()) >= group_order)
                    throw OrderMismatch("affine closure exceeds the declared group order");
                seen.emplace(std::move(key), y);
                next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    if (static_cast<long>(seen.size()) != group_order)
        throw OrderMismatch("affine closure has " + std::to_string(seen.size()) +
                            " elements, declared order is " + std::to_string(group_order));
    for (const auto& [key, e] : seen) {
        if (e.m != id.m) continue;
        for (const auto& x : e.t)
            if (!x.is_zero())
                throw OrderMismatch("closure contains a pure translation; the declared group "
                                    "order is inconsistent with the lattice");
    }

    // single generator: present as a cyclic action so all powers share the
    // generator's angle orientation
    if (generators.size() == 1) {
        IsometryElement gen = split_affine(generators[0], "g");
        return cyclic_action(dimension, group_order, gen.a, gen.torus_part);
    }

    std::vector<IsometryElement> elements;
    int index = 0;
    for (const auto& [key, e] : seen) {
        if (e.m == id.m) continue;
        ++index;
        elements.push_back(split_affine(e, "e" + std::to_string(index)));
    }
    return action_from_elements(dimension, std::move(elements), group_order);
}

ActionDiagnostics validate_action(const GroupAction& g) {
    ActionDiagnostics diag;

    if (g.dimension() % 4 != 3) {
        // The cotangent formulas need dimension 4n-1; an action whose every
        // element has an eigenvalue +-1 never reaches them.
        bool all_vanish = true;
        for (const auto& e : g.elements()) {
            auto [p1, m1] = eigen_pm1_flags(char_poly(e.torus_part));
            if (!p1 && !m1) {
                all_vanish = false;
                break;
            }
        }
        if (!all_vanish)
            diag.violations.push_back("DimensionViolation: dimension " +
                                      std::to_string(g.dimension()) + " is not 3 (mod 4)");
    }

    for (const auto& e : g.elements()) {
        if (det(e.torus_part) != 1)
            diag.violations.push_back("OrientationViolation: det(A) != +1 for " + e.label);
        if (e.a.mod_one().is_zero())
            diag.violations.push_back("FreenessViolation: a = 0 for " + e.label);
    }

    // power-consistency for actions labeled as cyclic powers
    if (g.has_cyclic_angles() && !g.elements().empty()) {
        const auto& gen = g.elements().front();
        for (size_t i = 0; i < g.elements().size(); ++i) {
            const long k = static_cast<long>(i) + 1;
            const auto& e = g.elements()[i];
            if (e.torus_part != gen.torus_part.pow(k) ||
                e.a != (gen.a * BigRational(k)).mod_one())
                diag.violations.push_back("ClosureViolation: element " + e.label +
                                          " is not the k-th power of the generator");
        }
    }
    return diag;
}

}  // namespace etaflat
