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

#include "etaflat/cyclotomic.hpp"
#include "etaflat/group.hpp"

namespace etaflat {

enum class ZeroReason { kEigenvaluePlus1, kEigenvalueMinus1 };

/// One group element's exact contribution eta_g(0, T^{4n-1}).
///
/// For nonzero contributions, value equals
///     nu * (-1)^n * cot(pi a) * prod over angles (k, d) of cot(pi k / d)
/// exactly; the orientation of the rotation-angle decomposition is already
/// folded into the angle list (a pair may have k > d/2).
struct ElementContribution {
    std::string label;
    BigRational a;
    std::optional<BigInt> nu;        ///< fixed point count; absent when the value is 0
    std::vector<AnglePair> angles;   ///< pairs actually multiplied; empty when 0
    CyclotomicNumber value;
    std::optional<ZeroReason> zero_reason;
    double value_float = 0.0;        ///< independent double-precision recomputation
};

/// Prop.-1/3 vanishing plus the cotangent fixed-point formula, with
/// nu = |det(A - I)| and the element's own orientation sign.
ElementContribution eta_element(const IsometryElement& e, long n);

/// Same contract on signed-permutation matrices, with 2^l in place of nu
/// (l = number of cycles) and the orientation taken from Pf(A - A^T).
/// Throws DegenerateInput if the matrix is not a signed permutation.
ElementContribution eta_element_signed_perm(const IsometryElement& e, long n);

struct EtaReport {
    std::string name;
    long dimension = 0;
    long group_order = 1;
    std::vector<ElementContribution> contributions;
    BigRational eta_exact;
    double eta_float = 0.0;  ///< independent double-precision recomputation
    bool is_integer = false;
    bool obstructed = false;  ///< true iff eta is not an integer
};

/// eta(0, Y) = (1/|G|) sum over g != 1 of eta_g(0, T^d), assembled exactly
/// in one ambient cyclotomic field.  Asserts that every contribution is
/// real, that the total is rational, and that an independent double
/// recomputation agrees within float_eps.  With `oracle` set, fixed point
/// counts are re-derived through the Smith normal form.
EtaReport eta_total(const GroupAction& g, const std::string& name = "",
                    double float_eps = 1e-9, bool oracle = false);

/// Character-twisted variant: (1/|G|) sum over g != 1 of eta_g * chi(g).
/// chi must be defined on all of G: chi[k] is the value on element k of the
/// action's element list shifted by one, chi[0] being the identity (whose
/// eta term vanishes).
CyclotomicNumber eta_twisted(const GroupAction& g, const std::vector<CyclotomicNumber>& chi);

struct IntegralityVerdict {
    bool is_integer;
    std::optional<BigInt> value;  ///< present iff integral
};

/// Integer iff the reduced denominator is 1.  A non-integer eta obstructs
/// the manifold from being the cross-section of a one-cusped hyperbolic
/// 4n-manifold.
IntegralityVerdict integrality_verdict(const BigRational& q);

/// Closed form for the order-2(4n-2) family on T^{4n-1}:
///     ((-1)^n / (8n-4)) * sum_{r=0}^{4n-3} 2^{l_r} (-1)^r cot((2r+1)pi/(2(4n-2)))
/// with l_r the cycle count of A^{2r+1}.  Must match eta_total of the
/// generated action exactly.
BigRational closed_form_z2m(long n);

/// The family's (4n-2) x (4n-2) generator: the signed cycle
/// e_1 -> e_2 -> ... -> e_{4n-2} -> -e_1, of order 2(4n-2).
IntMatrix z2m_generator_matrix(long n);

}  // namespace etaflat
