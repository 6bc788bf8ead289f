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

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "etaflat/errors.hpp"

namespace etaflat {

using BigInt = mpz_class;

/// Arbitrary-precision reduced fraction.
///
/// Invariants: gcd(|num|, den) = 1, den >= 1, zero is 0/1.  GMP keeps the
/// canonical form for us; every constructor canonicalizes.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT: implicit by design
    BigRational(const BigInt& n) : v_(n) {}
    BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw DivisionByZero("rational with zero denominator");
        v_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or a bare integer "p".
    static BigRational parse(const std::string& text) {
        if (text.empty()) throw ParseError("empty rational literal");
        mpq_class q;
        if (q.set_str(text, 10) != 0)
            throw ParseError("bad rational literal: \"" + text + "\"");
        if (q.get_den() == 0)
            throw ParseError("zero denominator: \"" + text + "\"");
        q.canonicalize();
        BigRational r;
        r.v_ = q;
        return r;
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Value minus its floor; always in [0, 1).
    BigRational mod_one() const {
        BigInt r;
        mpz_fdiv_r(r.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return BigRational(r, v_.get_den());
    }

    BigRational operator-() const { return wrap(-v_); }
    BigRational operator+(const BigRational& o) const { return wrap(v_ + o.v_); }
    BigRational operator-(const BigRational& o) const { return wrap(v_ - o.v_); }
    BigRational operator*(const BigRational& o) const { return wrap(v_ * o.v_); }
    BigRational operator/(const BigRational& o) const {
        if (o.is_zero()) throw DivisionByZero("rational division by zero");
        return wrap(v_ / o.v_);
    }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }

    bool operator==(const BigRational& o) const { return v_ == o.v_; }
    bool operator!=(const BigRational& o) const { return v_ != o.v_; }
    bool operator<(const BigRational& o) const { return v_ < o.v_; }
    bool operator<=(const BigRational& o) const { return v_ <= o.v_; }
    bool operator>(const BigRational& o) const { return v_ > o.v_; }
    bool operator>=(const BigRational& o) const { return v_ >= o.v_; }

    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// "p/q", or just "p" for integers.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
        return os << r.str();
    }

private:
    static BigRational wrap(const mpq_class& q) {
        BigRational r;
        r.v_ = q;
        return r;
    }
    mpq_class v_;
};

}  // namespace etaflat
