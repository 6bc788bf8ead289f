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
#include <string>
#include <vector>

#include "etaflat/cycfactor.hpp"
#include "etaflat/intmat.hpp"
#include "etaflat/rational.hpp"

namespace etaflat {

/// One group element acting on S^1 x T^{d-1} as (x, y) -> (x + a, Ay + abar).
struct IsometryElement {
    BigRational a;                        ///< circle rotation number in [0, 1)
    IntMatrix torus_part;                 ///< A, (d-1) x (d-1) integral
    std::string label;                    ///< e.g. "g^5"
    std::vector<BigRational> translation_rest;  ///< abar; recorded, never used by eta
};

/// Full d x d affine map (M, t) acting as y -> My + t on the torus T^d.
struct AffineElement {
    IntMatrix m;
    std::vector<BigRational> t;
};

/// Rotation angles of one element, oriented consistently with the rest of
/// its group: pairs (k, d) meaning angle 2*pi*k/d with 1 <= k < d, where k
/// may exceed d/2 (that carries the orientation).  Only present for
/// elements whose angles were derived from a group-level normalization.
struct OrientedAngles {
    std::vector<AnglePair> pairs;
    bool has_plus1 = false;
    bool has_minus1 = false;
};

/// The finite action on T^d: every nontrivial element, plus optional
/// per-element oriented angle data for cyclic constructions.  Immutable
/// after construction.
class GroupAction {
public:
    GroupAction(long dimension, long group_order, std::vector<IsometryElement> elements,
                std::vector<OrientedAngles> cyclic_angles = {});

    long dimension() const { return dimension_; }
    long group_order() const { return order_; }
    const std::vector<IsometryElement>& elements() const { return elements_; }
    bool has_cyclic_angles() const { return !cyclic_angles_.empty(); }
    const OrientedAngles& cyclic_angles(size_t index) const { return cyclic_angles_.at(index); }

private:
    long dimension_;
    long order_;
    std::vector<IsometryElement> elements_;
    std::vector<OrientedAngles> cyclic_angles_;
};

/// Cyclic action generated by (a, A): element k carries rotation k*a mod 1
/// and matrix A^k, with rotation angles k times the generator's canonical
/// angles (mod 2*pi), so that all powers share one orientation of the torus.
GroupAction cyclic_action(long dimension, long order, const BigRational& a, const IntMatrix& A);

/// Extracts the split form from a full affine map: finds a coordinate i
/// with M e_i = e_i, row i of M = e_i^T, and t_i != 0 (mod 1); returns
/// a = t_i and the complementary block.  Throws UnsupportedAction if no
/// such axis exists.
IsometryElement split_affine(const AffineElement& e, const std::string& label = "g");

/// Non-cyclic action from explicit per-element data.
GroupAction action_from_elements(long dimension, std::vector<IsometryElement> elements,
                                 long group_order = 0);

/// Action from affine generators: closes the generators into a group of
/// exactly `group_order` elements (translations mod 1) and splits each.
/// A single generator yields a cyclic action (generator-consistent angles).
GroupAction action_from_affine(long dimension, const std::vector<AffineElement>& generators,
                               long group_order);

struct ActionDiagnostics {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks dimension residue, orientation (det A = +1), freeness (a != 0),
/// and power-consistency for cyclic actions.  Returns every violated check.
ActionDiagnostics validate_action(const GroupAction& g);

}  // namespace etaflat
