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

#include "etaflat/intmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "etaflat/cycfactor.hpp"

namespace etaflat {

// ---------------------------------------------------------------- IntPolynomial

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int degree, const BigInt& c) {
    std::vector<BigInt> v(degree + 1, 0);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_power_minus_one(int n) {
    std::vector<BigInt> v(n + 1, 0);
    v[0] = -1;
    v[n] = 1;
    return IntPolynomial(std::move(v));
}

const BigInt& IntPolynomial::coeff(int i) const {
    static const BigInt kZero = 0;
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const BigInt& IntPolynomial::leading() const {
    if (c_.empty()) throw DegenerateInput("leading coefficient of zero polynomial");
    return c_.back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<BigInt> v(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(v));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (!divisor.is_monic()) throw DegenerateInput("divide_exact requires a monic divisor");
    if (is_zero()) return IntPolynomial();
    if (degree() < divisor.degree()) return std::nullopt;

    std::vector<BigInt> rem = c_;
    const int dd = divisor.degree();
    std::vector<BigInt> quot(degree() - dd + 1, 0);
    for (int i = degree(); i >= dd; --i) {
        BigInt q = rem[i];
        if (q == 0) continue;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = c_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        BigInt a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(int rows, int cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != size_t(rows) * cols) throw ShapeError("entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    e_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw ShapeError("ragged initializer rows");
        for (long x : r) e_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix addition shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix subtraction shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return e_ < o.e_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::pow(long k) const {
    if (!is_square()) throw ShapeError("power of non-square matrix");
    if (k < 0) throw DegenerateInput("negative matrix power");
    IntMatrix acc = identity(rows_);
    IntMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

BigInt IntMatrix::trace() const {
    if (!is_square()) throw ShapeError("trace of non-square matrix");
    BigInt t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

IntMatrix IntMatrix::minor_without(int axis) const {
    if (!is_square()) throw ShapeError("minor of non-square matrix");
    IntMatrix r(rows_ - 1, cols_ - 1);
    for (int i = 0, ri = 0; i < rows_; ++i) {
        if (i == axis) continue;
        for (int j = 0, rj = 0; j < cols_; ++j) {
            if (j == axis) continue;
            r.at(ri, rj) = at(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    return os.str();
}

// ------------------------------------------------------------------ algorithms

BigInt det(const IntMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { r = i; break; }
            if (r < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(r, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // Bareiss: division by the previous pivot is exact
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntPolynomial char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw ShapeError("characteristic polynomial of non-square matrix");
    const int n = m.rows();
    std::vector<BigInt> c(n + 1, 0);
    c[n] = 1;
    if (n == 0) return IntPolynomial(std::move(c));

    IntMatrix mk = m;
    for (int k = 1; k <= n; ++k) {
        BigInt t = mk.trace();
        BigInt ck;
        // trace(M_k) is divisible by k exactly when A is integral
        mpz_tdiv_q_ui(ck.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        if (ck * k != t) throw InternalError("Faddeev-LeVerrier division not exact");
        c[n - k] = -ck;
        if (k < n) {
            IntMatrix shifted = mk;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k];
            mk = m * shifted;
        }
    }
    return IntPolynomial(std::move(c));
}

namespace {

std::vector<long> sorted_divisors(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace

long matrix_order(const IntMatrix& m, long cap) {
    if (!m.is_square()) throw ShapeError("order of non-square matrix");
    BigInt d = det(m);
    if (d != 1 && d != -1) throw NotUnimodular("matrix_order requires |det| = 1");

    const IntMatrix id = IntMatrix::identity(m.rows());
    bool have_candidate = false;
    long candidate = 0;
    try {
        auto factors = factor_into_cyclotomics(char_poly(m));
        candidate = 1;
        for (const auto& [ord, mult] : factors.factors)
            candidate = std::lcm(candidate, ord);
        have_candidate = true;
    } catch (const NotRootsOfUnity&) {
        // char poly has a non-root-of-unity factor: fall through to the scan
    }

    if (have_candidate && candidate <= cap) {
        for (long k : sorted_divisors(candidate))
            if (m.pow(k) == id) return k;
        throw NotFiniteOrder("no power up to the cyclotomic candidate reaches the identity");
    }

    IntMatrix acc = m;
    for (long k = 1; k <= cap; ++k) {
        if (acc == id) return k;
        acc = acc * m;
    }
    throw NotFiniteOrder("no order found up to cap");
}

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    SmithNormalForm out{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& u = out.u;
    IntMatrix& d = out.d;
    IntMatrix& v = out.v;

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < rows; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < cols; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    auto add_row = [&](int dst, int src, const BigInt& f) {  // row_dst += f*row_src
        for (int j = 0; j < cols; ++j) d.at(dst, j) += f * d.at(src, j);
        for (int j = 0; j < rows; ++j) u.at(dst, j) += f * u.at(src, j);
    };
    auto add_col = [&](int dst, int src, const BigInt& f) {
        for (int i = 0; i < rows; ++i) d.at(i, dst) += f * d.at(i, src);
        for (int i = 0; i < cols; ++i) v.at(i, dst) += f * v.at(i, src);
    };
    auto negate_row = [&](int r) {
        for (int j = 0; j < cols; ++j) d.at(r, j) = -d.at(r, j);
        for (int j = 0; j < rows; ++j) u.at(r, j) = -u.at(r, j);
    };

    const int nmin = std::min(rows, cols);
    for (int s = 0; s < nmin; ++s) {
        for (;;) {
            // smallest nonzero entry of the trailing submatrix -> pivot
            int pi = -1, pj = -1;
            for (int i = s; i < rows; ++i)
                for (int j = s; j < cols; ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;  // trailing submatrix is zero
            swap_rows(s, pi);
            swap_cols(s, pj);

            bool dirty = false;
            for (int i = s + 1; i < rows; ++i) {
                if (d.at(i, s) == 0) continue;
                BigInt q = d.at(i, s) / d.at(s, s);  // truncated: |rem| < |pivot|
                if (q != 0) add_row(i, s, -q);
                if (d.at(i, s) != 0) dirty = true;
            }
            for (int j = s + 1; j < cols; ++j) {
                if (d.at(s, j) == 0) continue;
                BigInt q = d.at(s, j) / d.at(s, s);
                if (q != 0) add_col(j, s, -q);
                if (d.at(s, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot is lone; enforce divisibility of the rest
            bool divides_all = true;
            for (int i = s + 1; i < rows && divides_all; ++i)
                for (int j = s + 1; j < cols; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        add_row(s, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (d.at(s, s) < 0) negate_row(s);
    }

    if (u * m * v != d) throw InternalError("Smith normal form certificate failed");
    return out;
}

BigInt torus_fixed_point_count(const IntMatrix& a, const std::vector<BigRational>& abar,
                               bool snf_oracle) {
    if (!a.is_square()) throw ShapeError("fixed point count of non-square matrix");
    if (!abar.empty() && static_cast<int>(abar.size()) != a.rows())
        throw ShapeError("translation length does not match matrix size");

    IntMatrix b = a - IntMatrix::identity(a.rows());
    BigInt dt = det(b);
    if (dt == 0) throw NonIsolatedFixedPoints("A - I is singular");
    BigInt count = abs(dt);

    if (snf_oracle) {
        // Counting solutions of (A - I)x = -abar on the torus through the
        // Smith form: with U(A-I)V = D, each coordinate congruence
        // d_i y_i = c_i (mod 1) has exactly d_i solutions, whatever c_i is.
        auto snf = smith_normal_form(b);
        BigInt prod = 1;
        for (int i = 0; i < snf.d.rows(); ++i) prod *= snf.d.at(i, i);
        if (prod != count)
            throw CertificationError("SNF invariant-factor product disagrees with |det(A - I)|");
        BigInt du = det(snf.u), dv = det(snf.v);
        if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
            throw CertificationError("SNF transforms are not unimodular");
        // the per-coordinate solution count never saw abar; nothing else to do
        (void)abar;
    }
    return count;
}

std::optional<int> signed_permutation_cycles(const IntMatrix& a) {
    if (!a.is_square()) throw ShapeError("cycle count of non-square matrix");
    const int n = a.rows();
    std::vector<int> image(n, -1), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {  // column j holds the image of e_j
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            const BigInt& x = a.at(i, j);
            if (x == 0) continue;
            if (hit >= 0 || (x != 1 && x != -1)) return std::nullopt;
            hit = i;
        }
        if (hit < 0 || seen_col[hit]) return std::nullopt;
        seen_col[hit] = 1;
        image[j] = hit;
    }
    int cycles = 0;
    std::vector<int> visited(n, 0);
    for (int j = 0; j < n; ++j) {
        if (visited[j]) continue;
        ++cycles;
        for (int t = j; !visited[t]; t = image[t]) visited[t] = 1;
    }
    return cycles;
}

std::pair<bool, bool> eigen_pm1_flags(const IntPolynomial& p) {
    if (p.is_zero()) throw DegenerateInput("eigenvalue flags of the zero polynomial");
    return {p(BigInt(1)) == 0, p(BigInt(-1)) == 0};
}

int pfaffian_sign(std::vector<std::vector<BigRational>> s) {
    const int n = static_cast<int>(s.size());
    if (n % 2 != 0) throw ShapeError("Pfaffian of odd-sized matrix");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(s[i].size()) != n) throw ShapeError("Pfaffian of non-square matrix");
        for (int j = 0; j < n; ++j)
            if (s[i][j] != -s[j][i]) throw DegenerateInput("Pfaffian of non-skew matrix");
    }

    int sign = 1;
    auto swap_sym = [&](int a, int b) {  // congruence by a transposition
        if (a == b) return;
        std::swap(s[a], s[b]);
        for (int i = 0; i < n; ++i) std::swap(s[i][a], s[i][b]);
        sign = -sign;
    };
    auto shear_sym = [&](int dst, int src, const BigRational& f) {
        for (int j = 0; j < n; ++j) s[dst][j] += f * s[src][j];
        for (int i = 0; i < n; ++i) s[i][dst] += f * s[i][src];
    };

    for (int j = 0; j + 1 < n; j += 2) {
        if (s[j][j + 1].is_zero()) {
            int r = -1;
            for (int i = j + 2; i < n; ++i)
                if (!s[j][i].is_zero()) { r = i; break; }
            if (r < 0) return 0;
            swap_sym(j + 1, r);
        }
        const BigRational p = s[j][j + 1];
        for (int i = j + 2; i < n; ++i) {
            if (!s[j][i].is_zero()) shear_sym(i, j + 1, -(s[j][i] / p));
            if (!s[j + 1][i].is_zero()) shear_sym(i, j, s[j + 1][i] / p);
        }
        sign *= p.sign();
    }
    return sign;
}

namespace {

int orientation_from_skew(const IntMatrix& skew) {
    const int n = skew.rows();
    if (n % 2 != 0) throw ShapeError("orientation sign needs an even-sized matrix");
    std::vector<std::vector<BigRational>> s(n, std::vector<BigRational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i][j] = BigRational(skew.at(i, j));
    int pf = pfaffian_sign(std::move(s));
    if (pf == 0)
        throw DegenerateInput("orientation sign undefined: matrix has eigenvalues +-1");
    return ((n / 2) % 2 == 0) ? pf : -pf;
}

}  // namespace

int orientation_sign(const IntMatrix& a) {
    const long ord = matrix_order(a);
    // P = sum_k (A^k)^T A^k is positive definite and A-invariant, so
    // P(A - A^-1) is skew and its Pfaffian sign carries the orientation.
    IntMatrix p(a.rows(), a.cols());
    IntMatrix ak = IntMatrix::identity(a.rows());
    for (long k = 0; k < ord; ++k) {
        p = p + ak.transpose() * ak;
        ak = ak * a;
    }
    IntMatrix skew = p * (a - a.pow(ord - 1));
    return orientation_from_skew(skew);
}

int orientation_sign_orthogonal(const IntMatrix& a) {
    if (!signed_permutation_cycles(a))
        throw DegenerateInput("orientation_sign_orthogonal requires a signed permutation");
    return orientation_from_skew(a - a.transpose());
}

}  // namespace etaflat
