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

#include <map>
#include <vector>

namespace etaflat {

class IntMatrix;
class IntPolynomial;

struct CyclotomicFactorization {
    /// order d of the cyclotomic factor -> multiplicity
    std::map<long, int> factors;
};

/// Trial-divides a monic integer polynomial by Phi_d in ascending d,
/// repeatedly, until fully factored.  Throws NotRootsOfUnity if a
/// non-cyclotomic factor remains (the matrix behind p is not finite order).
CyclotomicFactorization factor_into_cyclotomics(const IntPolynomial& p);

/// Rotation angle 2*pi*k/d.
struct AnglePair {
    long k;
    long d;
    bool operator==(const AnglePair& o) const { return k == o.k && d == o.d; }
    bool operator<(const AnglePair& o) const { return k * o.d < o.k * d; }  // by angle
};

/// Multiset of canonical rotation angles of a finite-order integral matrix:
/// one pair (k, d) per conjugate eigenvalue pair, gcd(k, d) = 1, 2k < d,
/// plus the multiplicities of the real eigenvalues +1 and -1.
struct RotationSpectrum {
    std::vector<AnglePair> pairs;
    int mult_plus1 = 0;
    int mult_minus1 = 0;
};

RotationSpectrum rotation_spectrum(const IntMatrix& a);

}  // namespace etaflat
