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

#include <complex>
#include <optional>
#include <vector>

#include "etaflat/intmat.hpp"
#include "etaflat/rational.hpp"

namespace etaflat {

/// phi(N)^2 multiplication cost bounds runtime; every built-in computation
/// stays far below this.
inline constexpr long kConductorCapDefault = 10000;

long euler_phi(long n);

/// The d-th cyclotomic polynomial, computed by dividing x^d - 1 by the
/// product of Phi_e over proper divisors e | d.  Memoized.
IntPolynomial cyclotomic_polynomial(long d, long cap = kConductorCapDefault);

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}
/// modulo Phi_N.  Values are immutable; all operations return new values.
class CyclotomicNumber {
public:
    /// The zero element of Q(zeta_1) = Q.
    CyclotomicNumber() : conductor_(1), c_(1, BigRational(0)) {}

    static CyclotomicNumber from_rational(const BigRational& q, long conductor = 1,
                                          long cap = kConductorCapDefault);
    /// zeta_N^k (k may be any integer; it is reduced mod N).
    static CyclotomicNumber zeta_power(long conductor, long k, long cap = kConductorCapDefault);
    /// From raw coefficients of 1, zeta, ..., of any length < conductor cap;
    /// reduced mod Phi_N.
    static CyclotomicNumber from_coeffs(long conductor, std::vector<BigRational> raw,
                                        long cap = kConductorCapDefault);

    long conductor() const { return conductor_; }
    const std::vector<BigRational>& coeffs() const { return c_; }

    bool is_zero() const;

    /// Same algebraic number in Q(zeta_M); requires conductor | M.
    CyclotomicNumber lift(long conductor, long cap = kConductorCapDefault) const;

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const BigRational& q) const;
    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// coefficient polynomial and Phi_N over Q.
    CyclotomicNumber inverse() const;

    /// Image under the Galois automorphism zeta -> zeta^{-1}.
    CyclotomicNumber conjugate() const;
    bool is_real() const { return conjugate() == *this; }

    /// The constant coefficient iff all higher coefficients vanish.
    std::optional<BigRational> to_rational() const;

    /// Evaluation at zeta = exp(2*pi*i/N) in double precision.
    std::complex<double> eval() const;

private:
    CyclotomicNumber(long conductor, std::vector<BigRational> reduced)
        : conductor_(conductor), c_(std::move(reduced)) {}

    long conductor_;
    std::vector<BigRational> c_;
};

inline CyclotomicNumber operator*(const BigRational& q, const CyclotomicNumber& x) {
    return x * q;
}

/// Exact cot(k*pi/m) as i(zeta_m^k + 1)/(zeta_m^k - 1), an element of
/// Q(zeta_lcm(4, m')) with m' = m/gcd(k, m).  The value is real.
CyclotomicNumber cyc_cot(long k, long m, long cap = kConductorCapDefault);

}  // namespace etaflat
