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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "etaflat/cycfactor.hpp"
#include "etaflat/eta.hpp"
#include "etaflat/intmat.hpp"
#include "support.hpp"

using namespace etaflat;
using namespace etaflat::testing;

namespace {
const IntMatrix kB{{0, -1}, {1, -1}};      // order 3
const IntMatrix kBp{{0, -1}, {1, 0}};      // order 4
const IntMatrix kD{{0, -1}, {1, 1}};       // order 6
}  // namespace

TEST_CASE("determinant") {
    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix::identity(2) - kB) == 3);
    IntMatrix a = block_diag({kBp, kBp, kBp});
    CHECK(det(IntMatrix::identity(6) - a) == 8);
    CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), ShapeError);
}

TEST_CASE("characteristic polynomial golden cases") {
    IntMatrix z9{{0, 0, 0, 0, 0, -1}, {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                 {0, 0, 1, 0, 0, -1}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}};
    CHECK(char_poly(z9) == IntPolynomial({1, 0, 0, 1, 0, 0, 1}));  // x^6 + x^3 + 1

    IntMatrix z14{{0, 0, 0, 0, 0, 1},  {-1, 0, 0, 0, 0, 1}, {0, -1, 0, 0, 0, 1},
                  {0, 0, -1, 0, 0, 1}, {0, 0, 0, -1, 0, 1}, {0, 0, 0, 0, -1, 1}};
    CHECK(char_poly(z14) == IntPolynomial({1, -1, 1, -1, 1, -1, 1}));

    CHECK(char_poly(IntMatrix{{5}}) == IntPolynomial({-5, 1}));  // x - 5
    CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), ShapeError);
}

TEST_CASE("property: char_poly at 1 equals det(I - A)") {
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        int m = static_cast<int>(rand_in(rng, 2, 6));
        IntMatrix a(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a.at(i, j) = rand_in(rng, -3, 3);
        CHECK(char_poly(a)(BigInt(1)) == det(IntMatrix::identity(m) - a));
    }
}

TEST_CASE("matrix order") {
    CHECK(matrix_order(IntMatrix::identity(4)) == 1);
    CHECK(matrix_order(z2m_generator_matrix(2)) == 12);  // 6x6 signed cycle: order 2*6
    CHECK(matrix_order(kB) == 3);
    CHECK(matrix_order(kD) == 6);
    CHECK_THROWS_AS(matrix_order(IntMatrix{{1, 1}, {0, 1}}), NotFiniteOrder);
    CHECK_THROWS_AS(matrix_order(IntMatrix{{2, 0}, {0, 1}}), NotUnimodular);
}

TEST_CASE("property: matrix order divides the lcm of cyclotomic orders") {
    Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix a = random_finite_order(rng, static_cast<int>(rand_in(rng, 2, 6)), false);
        auto factors = factor_into_cyclotomics(char_poly(a));
        long l = 1;
        for (const auto& [d, mult] : factors.factors) l = std::lcm(l, d);
        CHECK(l % matrix_order(a) == 0);
    }
}

TEST_CASE("Smith normal form golden cases") {
    auto snf = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(snf.d == IntMatrix{{1, 0}, {0, 6}});

    // invariant factors of B - I, validated against the brute-force count
    // of solutions of (B - I)x = 0 on the 2-torus
    auto snf2 = smith_normal_form(kB - IntMatrix::identity(2));
    CHECK(snf2.d == IntMatrix{{1, 0}, {0, 3}});
    CHECK(brute_force_fixed_points(kB, {}) == 3);

    auto snf3 = smith_normal_form(IntMatrix(2, 2));
    CHECK(snf3.d == IntMatrix(2, 2));
}

TEST_CASE("property: SNF transforms are unimodular and exact") {
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        int r = static_cast<int>(rand_in(rng, 1, 4));
        int c = static_cast<int>(rand_in(rng, 1, 4));
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = rand_in(rng, -6, 6);
        auto snf = smith_normal_form(m);
        BigInt du = det(snf.u), dv = det(snf.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        CHECK(snf.u * m * snf.v == snf.d);
        // divisibility chain, nonnegative diagonal
        int nmin = std::min(r, c);
        for (int i = 0; i < nmin; ++i) {
            CHECK(snf.d.at(i, i) >= 0);
            if (i + 1 < nmin && snf.d.at(i, i) != 0)
                CHECK(snf.d.at(i + 1, i + 1) % snf.d.at(i, i) == 0);
        }
    }
}

TEST_CASE("torus fixed point counts from the worked examples") {
    CHECK(torus_fixed_point_count(kB, {}) == 3);
    CHECK(torus_fixed_point_count(kB, {BigRational(1, 5), BigRational(3, 7)}) == 3);

    IntMatrix z7{{0, 0, 0, 0, 0, -1}, {1, 0, 0, 0, 0, -1}, {0, 1, 0, 0, 0, -1},
                 {0, 0, 1, 0, 0, -1}, {0, 0, 0, 1, 0, -1}, {0, 0, 0, 0, 1, -1}};
    CHECK(torus_fixed_point_count(z7, {}) == 7);

    IntMatrix z18{{0, 0, 0, 0, 0, 1},  {-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0},
                  {0, 0, -1, 0, 0, 1}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}};
    CHECK(torus_fixed_point_count(z18.pow(6), {}) == 27);
    CHECK(torus_fixed_point_count(z18.pow(2), {}) == 3);

    CHECK_THROWS_AS(torus_fixed_point_count(IntMatrix::identity(2), {}),
                    NonIsolatedFixedPoints);
}

TEST_CASE("signed permutation cycle counts") {
    CHECK(*signed_permutation_cycles(block_diag({kBp, kBp, kBp})) == 3);
    IntMatrix a = z2m_generator_matrix(2);
    CHECK(*signed_permutation_cycles(a) == 1);
    CHECK(*signed_permutation_cycles(a.pow(3)) == 3);
    CHECK(*signed_permutation_cycles(IntMatrix::identity(5)) == 5);

    IntMatrix z7{{0, 0, 0, 0, 0, -1}, {1, 0, 0, 0, 0, -1}, {0, 1, 0, 0, 0, -1},
                 {0, 0, 1, 0, 0, -1}, {0, 0, 0, 1, 0, -1}, {0, 0, 0, 0, 1, -1}};
    CHECK(!signed_permutation_cycles(z7));
    CHECK(!signed_permutation_cycles(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("eigenvalue +-1 flags") {
    CHECK(eigen_pm1_flags(IntPolynomial({-1, 1})) == std::pair<bool, bool>{true, false});
    CHECK(eigen_pm1_flags(IntPolynomial({1, 0, 0, 1, 0, 0, 1})) ==
          std::pair<bool, bool>{false, false});
    CHECK(eigen_pm1_flags(IntPolynomial({-1, 0, 1})) == std::pair<bool, bool>{true, true});
    CHECK_THROWS_AS(eigen_pm1_flags(IntPolynomial()), DegenerateInput);
}

TEST_CASE("Pfaffian sign") {
    auto skew2 = [](long s) {
        return std::vector<std::vector<BigRational>>{{BigRational(0), BigRational(s)},
                                                     {BigRational(-s), BigRational(0)}};
    };
    CHECK(pfaffian_sign(skew2(5)) == 1);
    CHECK(pfaffian_sign(skew2(-5)) == -1);
    CHECK(pfaffian_sign(skew2(0)) == 0);

    // the skew form of the order-12 signed 6-cycle: Pf = -2
    IntMatrix a = z2m_generator_matrix(2);
    IntMatrix s = a - a.transpose();
    std::vector<std::vector<BigRational>> sr(6, std::vector<BigRational>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) sr[i][j] = BigRational(s.at(i, j));
    CHECK(pfaffian_sign(sr) == -1);

    CHECK_THROWS_AS(pfaffian_sign({{BigRational(0)}}), ShapeError);
}

TEST_CASE("property: Pf(S)^2 = det(S) sign-consistency on random skew matrices") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int m = 2 * static_cast<int>(rand_in(rng, 1, 3));
        IntMatrix s(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                s.at(i, j) = rand_in(rng, -4, 4);
                s.at(j, i) = -s.at(i, j);
            }
        std::vector<std::vector<BigRational>> sr(m, std::vector<BigRational>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sr[i][j] = BigRational(s.at(i, j));
        int pf = pfaffian_sign(sr);
        BigInt dt = det(s);
        CHECK((pf == 0) == (dt == 0));
        if (pf != 0) CHECK(dt > 0);  // det of a skew matrix is a square
    }
}

TEST_CASE("orientation signs of the standard plane blocks") {
    CHECK(orientation_sign(kB) == 1);               // rotation by 2*pi/3
    CHECK(orientation_sign(kBp) == 1);              // rotation by pi/2
    CHECK(orientation_sign(kBp.pow(3)) == -1);      // rotation by 3*pi/2
    CHECK(orientation_sign(kD) == 1);               // rotation by pi/3
    CHECK(orientation_sign(kD.pow(5)) == -1);
    CHECK(orientation_sign(IntMatrix{{0, 1}, {-1, 1}}) == -1);

    // conjugation by a determinant +1 matrix preserves the sign
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        auto [u, uinv] = random_unimodular(rng, 2);
        CHECK(orientation_sign(u * kB * uinv) == 1);
        CHECK(orientation_sign(u * kBp.pow(3) * uinv) == -1);
    }
}

TEST_CASE("orientation sign: orthogonal fast path agrees with the general one") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int size = 2 * static_cast<int>(rand_in(rng, 1, 3));
        IntMatrix a = random_signed_perm_no_pm1(rng, size);
        CHECK(orientation_sign_orthogonal(a) == orientation_sign(a));
    }
}

TEST_CASE("property: 2^l = |det(I - A)| for signed permutations without +-1") {
    Rng rng(47);
    for (int trial = 0; trial < 50; ++trial) {
        int size = 2 * static_cast<int>(rand_in(rng, 1, 3));
        IntMatrix a = random_signed_perm_no_pm1(rng, size);
        auto flags = eigen_pm1_flags(char_poly(a));
        REQUIRE(!flags.first);
        REQUIRE(!flags.second);
        auto l = signed_permutation_cycles(a);
        REQUIRE(l);
        BigInt expected = 1;
        expected <<= *l;
        CHECK(abs(det(IntMatrix::identity(size) - a)) == expected);
    }
}
