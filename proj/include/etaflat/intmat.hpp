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
#include <utility>
#include <vector>

#include "etaflat/rational.hpp"

namespace etaflat {

/// Integer-coefficient polynomial, coefficients ascending by degree,
/// trailing zeros stripped.  The zero polynomial has an empty vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(const BigInt& c) { return IntPolynomial({c}); }
    static IntPolynomial monomial(int degree, const BigInt& c = 1);
    /// x^n - 1
    static IntPolynomial x_power_minus_one(int n);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const BigInt& coeff(int i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    BigInt operator()(const BigInt& x) const;  // Horner evaluation

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    /// Exact division by a monic divisor: returns the quotient iff the
    /// remainder is zero, nullopt otherwise.
    std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

    std::string str() const;  // human-readable, highest degree first

private:
    void trim();
    std::vector<BigInt> c_;
};

/// Dense integer matrix, row-major arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {}
    IntMatrix(int rows, int cols, std::vector<BigInt> entries);
    /// Builds from nested initializer rows, e.g. {{0,-1},{1,-1}}.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const;
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    bool operator<(const IntMatrix& o) const;  // lexicographic, for map keys

    IntMatrix transpose() const;
    IntMatrix pow(long k) const;  // k >= 0
    BigInt trace() const;

    /// Removes row and column `axis` (0-based).
    IntMatrix minor_without(int axis) const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<BigInt> e_;
};

/// Exact determinant via fraction-free Bareiss elimination.
BigInt det(const IntMatrix& m);

/// det(xI - M): monic characteristic polynomial with integer coefficients,
/// computed by the Faddeev-LeVerrier recursion (all intermediate divisions
/// are exact for integer input; this is asserted).
IntPolynomial char_poly(const IntMatrix& m);

/// Least k >= 1 with M^k = I.  Uses the lcm of cyclotomic orders of the
/// characteristic polynomial as a candidate when the factorization exists,
/// and falls back to repeated multiplication up to `cap`.
long matrix_order(const IntMatrix& m, long cap = 1000);

struct SmithNormalForm {
    IntMatrix u;  ///< unimodular row transform
    IntMatrix d;  ///< diagonal, d_i >= 0, d_i | d_{i+1}
    IntMatrix v;  ///< unimodular column transform
};

/// U*M*V = D with U, V unimodular and D in Smith normal form.
SmithNormalForm smith_normal_form(const IntMatrix& m);

/// Number of solutions x in (R/Z)^m of (A - I)x = -abar, which equals
/// |det(A - I)| and is independent of the translation abar.  When
/// `snf_oracle` is set the count is re-derived from the Smith invariant
/// factors of (A - I) with the supplied abar and any disagreement throws.
BigInt torus_fixed_point_count(const IntMatrix& a, const std::vector<BigRational>& abar,
                               bool snf_oracle = false);

/// Number of cycles of the underlying permutation if every row and column
/// has exactly one nonzero entry equal to +-1 (fixed points count as
/// 1-cycles); nullopt otherwise.
std::optional<int> signed_permutation_cycles(const IntMatrix& a);

/// (p(1) == 0, p(-1) == 0): does the polynomial have the eigenvalue +1 / -1.
std::pair<bool, bool> eigen_pm1_flags(const IntPolynomial& p);

/// Sign of the Pfaffian of a skew-symmetric rational matrix (-1, 0, +1).
int pfaffian_sign(std::vector<std::vector<BigRational>> s);

/// Orientation of the rotation-angle decomposition of a finite-order
/// integral matrix without eigenvalues +-1, relative to the canonical
/// choice of all angles in (0, pi): +1 if an even number of planes must be
/// flipped to match the standard orientation of R^2m, -1 if odd.
///
/// Computed exactly as (-1)^m * sign Pf(P (A - A^-1)) where
/// P = sum_k (A^k)^T A^k is an A-invariant positive form.
int orientation_sign(const IntMatrix& a);

/// Same orientation sign for an orthogonal (signed-permutation) matrix,
/// where P is a positive multiple of the identity: (-1)^m * sign Pf(A - A^T).
int orientation_sign_orthogonal(const IntMatrix& a);

}  // namespace etaflat
