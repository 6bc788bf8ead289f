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

#include "etaflat/cycfactor.hpp"

#include <numeric>

#include "etaflat/cyclotomic.hpp"
#include "etaflat/intmat.hpp"

namespace etaflat {

CyclotomicFactorization factor_into_cyclotomics(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic())
        throw DegenerateInput("cyclotomic factorization expects a monic polynomial");

    CyclotomicFactorization out;
    IntPolynomial rest = p;
    // phi(d) >= sqrt(d/2), so phi(d) <= deg forces d <= 2*deg^2.
    const long dmax = 2L * p.degree() * p.degree() + 2;
    for (long d = 1; d <= dmax && rest.degree() > 0; ++d) {
        if (euler_phi(d) > rest.degree()) continue;
        const IntPolynomial& phi = cyclotomic_polynomial(d);
        for (;;) {
            auto q = rest.divide_exact(phi);
            if (!q) break;
            rest = std::move(*q);
            out.factors[d] += 1;
        }
    }
    if (rest.degree() != 0)
        throw NotRootsOfUnity("polynomial has a non-cyclotomic factor: " + rest.str());

    // reconstruction certificate
    IntPolynomial check = IntPolynomial::constant(1);
    for (const auto& [d, mult] : out.factors)
        for (int i = 0; i < mult; ++i) check = check * cyclotomic_polynomial(d);
    if (check != p) throw InternalError("cyclotomic factorization failed to reconstruct input");
    return out;
}

RotationSpectrum rotation_spectrum(const IntMatrix& a) {
    if (!a.is_square()) throw ShapeError("rotation spectrum of non-square matrix");
    auto factors = factor_into_cyclotomics(char_poly(a));

    RotationSpectrum spec;
    for (const auto& [d, mult] : factors.factors) {
        if (d == 1) {
            spec.mult_plus1 += mult;
            continue;
        }
        if (d == 2) {
            spec.mult_minus1 += mult;
            continue;
        }
        for (long k = 1; 2 * k < d; ++k) {
            if (std::gcd(k, d) != 1) continue;
            for (int i = 0; i < mult; ++i) spec.pairs.push_back({k, d});
        }
    }
    if (2 * static_cast<int>(spec.pairs.size()) + spec.mult_plus1 + spec.mult_minus1 != a.rows())
        throw InternalError("rotation spectrum does not account for the full dimension");
    return spec;
}

}  // namespace etaflat
