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

#include "etaflat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace etaflat {

long euler_phi(long n) {
    if (n <= 0) throw DegenerateInput("euler_phi of non-positive argument");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPolynomial cyclotomic_polynomial(long d, long cap) {
    if (d < 1) throw DegenerateInput("cyclotomic polynomial index must be positive");
    if (d > cap) throw ConductorTooLarge("cyclotomic polynomial index exceeds cap");

    static std::map<long, IntPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto compute = [&](long n, auto&& self) -> const IntPolynomial& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        IntPolynomial p = IntPolynomial::x_power_minus_one(static_cast<int>(n));
        for (long e = 1; e < n; ++e) {
            if (n % e) continue;
            auto q = p.divide_exact(self(e, self));
            if (!q) throw InternalError("cyclotomic division failed");
            p = std::move(*q);
        }
        return cache.emplace(n, std::move(p)).first->second;
    };
    return compute(d, compute);
}

namespace {

// Reduces a raw coefficient vector (powers of zeta) modulo the monic Phi_N
// and truncates to length phi(N).
std::vector<BigRational> reduce_mod_phi(std::vector<BigRational> raw, const IntPolynomial& phi) {
    const int deg = phi.degree();
    for (int i = static_cast<int>(raw.size()) - 1; i >= deg; --i) {
        if (raw[i].is_zero()) continue;
        BigRational c = raw[i];
        raw[i] = BigRational(0);
        for (int j = 0; j < deg; ++j) raw[i - deg + j] -= c * BigRational(phi.coeff(j));
    }
    raw.resize(deg, BigRational(0));
    return raw;
}

using RatPoly = std::vector<BigRational>;  // ascending coefficients

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// p -= q * c * x^shift
void rp_submul(RatPoly& p, const RatPoly& q, const BigRational& c, size_t shift) {
    if (p.size() < q.size() + shift) p.resize(q.size() + shift, BigRational(0));
    for (size_t i = 0; i < q.size(); ++i) p[i + shift] -= q[i] * c;
}

RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    rp_trim(a);
    for (;;) {
        if (a.size() < b.size()) return a;
        BigRational f = a.back() / b.back();
        rp_submul(a, b, f, a.size() - b.size());
        a.pop_back();  // leading term cancels exactly
        rp_trim(a);
    }
}

}  // namespace

CyclotomicNumber CyclotomicNumber::from_rational(const BigRational& q, long conductor, long cap) {
    if (conductor < 1) throw DegenerateInput("conductor must be positive");
    if (conductor > cap) throw ConductorTooLarge("conductor exceeds cap");
    std::vector<BigRational> c(euler_phi(conductor), BigRational(0));
    c[0] = q;
    return CyclotomicNumber(conductor, std::move(c));
}

CyclotomicNumber CyclotomicNumber::from_coeffs(long conductor, std::vector<BigRational> raw,
                                               long cap) {
    if (conductor < 1) throw DegenerateInput("conductor must be positive");
    if (conductor > cap) throw ConductorTooLarge("conductor exceeds cap");
    const IntPolynomial phi = cyclotomic_polynomial(conductor, cap);
    auto red = reduce_mod_phi(std::move(raw), phi);
    return CyclotomicNumber(conductor, std::move(red));
}

CyclotomicNumber CyclotomicNumber::zeta_power(long conductor, long k, long cap) {
    if (conductor < 1) throw DegenerateInput("conductor must be positive");
    k %= conductor;
    if (k < 0) k += conductor;
    std::vector<BigRational> raw(k + 1, BigRational(0));
    raw[k] = BigRational(1);
    return from_coeffs(conductor, std::move(raw), cap);
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::lift(long conductor, long cap) const {
    if (conductor % conductor_ != 0)
        throw IncompatibleConductors("lift target conductor is not a multiple");
    if (conductor > cap) throw ConductorTooLarge("lift target conductor exceeds cap");
    if (conductor == conductor_) return *this;
    const long q = conductor / conductor_;
    std::vector<BigRational> raw(size_t((c_.size() - 1) * q + 1), BigRational(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * q] = c_[i];
    return from_coeffs(conductor, std::move(raw), cap);
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    const long n = std::lcm(conductor_, o.conductor_);
    CyclotomicNumber a = lift(n), b = o.lift(n);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    const long n = std::lcm(conductor_, o.conductor_);
    CyclotomicNumber a = lift(n), b = o.lift(n);
    std::vector<BigRational> raw(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            raw[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return from_coeffs(n, std::move(raw));
}

CyclotomicNumber CyclotomicNumber::operator*(const BigRational& q) const {
    CyclotomicNumber r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    const long n = std::lcm(conductor_, o.conductor_);
    return lift(n).c_ == o.lift(n).c_;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");

    const IntPolynomial phi = cyclotomic_polynomial(conductor_);
    RatPoly b(phi.degree() + 1);
    for (int i = 0; i <= phi.degree(); ++i) b[i] = BigRational(phi.coeff(i));
    RatPoly a(c_.begin(), c_.end());
    rp_trim(a);

    // extended Euclid: maintain s with s*self = r (mod Phi)
    RatPoly r0 = b, r1 = a;
    RatPoly s0, s1{BigRational(1)};
    while (!(r1.size() <= 1)) {
        // quotient of r0 by r1, remainder pass
        RatPoly q;
        RatPoly rem = r0;
        rp_trim(rem);
        while (rem.size() >= r1.size()) {
            size_t shift = rem.size() - r1.size();
            BigRational f = rem.back() / r1.back();
            if (q.size() < shift + 1) q.resize(shift + 1, BigRational(0));
            q[shift] += f;
            rp_submul(rem, r1, f, shift);
            rem.pop_back();
            rp_trim(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        RatPoly s2 = s0;
        for (size_t i = 0; i < q.size(); ++i)
            if (!q[i].is_zero()) rp_submul(s2, s1, q[i], i);
        rp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw InternalError("gcd with irreducible Phi_N vanished");

    const BigRational inv_c = BigRational(1) / r1[0];
    RatPoly u = rp_rem(std::move(s1), b);
    std::vector<BigRational> out(c_.size(), BigRational(0));
    for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] * inv_c;
    return CyclotomicNumber(conductor_, std::move(out));
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
    std::vector<BigRational> raw(conductor_, BigRational(0));
    raw[0] = c_[0];
    for (size_t i = 1; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        raw[conductor_ - i] += c_[i];
    }
    return from_coeffs(conductor_, std::move(raw));
}

std::optional<BigRational> CyclotomicNumber::to_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return std::nullopt;
    return c_[0];
}

std::complex<double> CyclotomicNumber::eval() const {
    std::complex<double> acc = 0.0;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(conductor_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        double arg = step * static_cast<double>(i);
        acc += c_[i].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

CyclotomicNumber cyc_cot(long k, long m, long cap) {
    if (m < 1) throw DegenerateInput("cotangent denominator must be positive");
    long kk = k % m;
    if (kk < 0) kk += m;
    if (kk == 0) throw CotangentPole("cot(k*pi/m) with k = 0 (mod m)");
    const long g = std::gcd(kk, m);
    kk /= g;
    const long mm = m / g;

    const long n = std::lcm(4L, mm);
    if (n > cap) throw ConductorTooLarge("cotangent conductor exceeds cap");
    CyclotomicNumber z = CyclotomicNumber::zeta_power(n, (n / mm) * kk, cap);
    CyclotomicNumber i_unit = CyclotomicNumber::zeta_power(n, n / 4, cap);
    CyclotomicNumber one = CyclotomicNumber::from_rational(BigRational(1), n, cap);
    return i_unit * (z + one) * (z - one).inverse();
}

}  // namespace etaflat
