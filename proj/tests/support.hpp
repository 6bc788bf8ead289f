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

// Test-only helpers: deterministic random inputs and independent oracles.
// Everything here must stay independent of the implementation paths it
// checks (brute force counts by grid enumeration, not linear algebra).

#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "etaflat/group.hpp"
#include "etaflat/intmat.hpp"
#include "etaflat/rational.hpp"

namespace etaflat::testing {

using Rng = std::mt19937_64;

inline long rand_in(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Small finite-order plane blocks and the two reflections, by order.
inline const std::vector<IntMatrix>& finite_order_blocks() {
    static const std::vector<IntMatrix> blocks = {
        IntMatrix{{0, -1}, {1, -1}},   // order 3
        IntMatrix{{0, -1}, {1, 0}},    // order 4
        IntMatrix{{0, -1}, {1, 1}},    // order 6
        IntMatrix{{-1, -1}, {1, 0}},   // order 3
        IntMatrix{{0, 1}, {-1, 1}},    // order 6
        IntMatrix{{-1}},               // order 2
    };
    return blocks;
}

inline IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    IntMatrix m(n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows();
    }
    return m;
}

/// Random element of SL(n, Z) with its inverse, as a short product of
/// elementary shears (determinant +1 by construction).
inline std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, int n, int shears = 5) {
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix uinv = IntMatrix::identity(n);
    for (int s = 0; s < shears; ++s) {
        int i = static_cast<int>(rand_in(rng, 0, n - 1));
        int j = static_cast<int>(rand_in(rng, 0, n - 1));
        if (i == j) continue;
        long c = rand_in(rng, -2, 2);
        if (c == 0) continue;
        IntMatrix e = IntMatrix::identity(n);
        e.at(i, j) = c;
        IntMatrix einv = IntMatrix::identity(n);
        einv.at(i, j) = -c;
        u = u * e;
        uinv = einv * uinv;
    }
    return {u, uinv};
}

/// Random finite-order integral matrix of the given size: a block-diagonal
/// assembly of small-order blocks, conjugated by a random SL(n, Z) element.
/// With `avoid_plus1` no block is the 1x1 identity, so det(A - I) != 0.
inline IntMatrix random_finite_order(Rng& rng, int size, bool avoid_plus1 = true) {
    std::vector<IntMatrix> blocks;
    int left = size;
    while (left > 0) {
        if (left == 1) {
            blocks.push_back(avoid_plus1 ? IntMatrix{{-1}}
                                         : IntMatrix{{rand_in(rng, 0, 1) ? 1 : -1}});
            left -= 1;
            continue;
        }
        const auto& pool = finite_order_blocks();
        const IntMatrix& b = pool[rand_in(rng, 0, static_cast<long>(pool.size()) - 1)];
        blocks.push_back(b);
        left -= b.rows();
    }
    auto [u, uinv] = random_unimodular(rng, size, 4);
    return u * block_diag(blocks) * uinv;
}

/// Random signed permutation without eigenvalues +-1: every cycle has even
/// length and sign product -1, then the basis is scrambled by a signed
/// permutation conjugation (which preserves the class).
inline IntMatrix random_signed_perm_no_pm1(Rng& rng, int size) {
    std::vector<int> parts;
    int left = size;
    while (left > 0) {
        int c = 2 * static_cast<int>(rand_in(rng, 1, left / 2));
        parts.push_back(c);
        left -= c;
    }
    IntMatrix a(size, size);
    int off = 0;
    for (int c : parts) {
        for (int i = 0; i + 1 < c; ++i) a.at(off + i + 1, off + i) = 1;
        a.at(off, off + c - 1) = -1;
        off += c;
    }
    // conjugate by (P D): permutation followed by signs
    std::vector<int> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix p(size, size);
    for (int i = 0; i < size; ++i) p.at(perm[i], i) = 1;
    IntMatrix d = IntMatrix::identity(size);
    for (int i = 0; i < size; ++i)
        if (rand_in(rng, 0, 1)) d.at(i, i) = -1;
    return (p * d) * a * (d * p.transpose());
}

/// Counts solutions x in (R/Z)^m of (A - I)x + abar = 0 by enumerating the
/// grid (1/L)Z^m with L = |det(A - I)| * lcm of the abar denominators.
/// Every solution lies on that grid, so plain enumeration is exhaustive.
inline long brute_force_fixed_points(const IntMatrix& a, const std::vector<BigRational>& abar) {
    const int m = a.rows();
    long dt = std::abs(det(a - IntMatrix::identity(m)).get_si());
    if (dt == 0) throw std::logic_error("brute force needs det(A - I) != 0");
    // every solution x = (A - I)^{-1}(z - abar) has denominator dividing
    // |det| * lcm of the abar denominators, so this grid is exhaustive
    long q = 1;
    for (const auto& t : abar) q = std::lcm(q, t.denominator().get_si());
    const long L = dt * q;
    auto norm = [L](long x) { return ((x % L) + L) % L; };

    std::vector<std::vector<long>> b(m, std::vector<long>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) b[i][j] = a.at(i, j).get_si() - (i == j ? 1 : 0);

    std::vector<long> shift(m, 0);  // L * abar, an exact integer by choice of L
    for (int i = 0; i < m && !abar.empty(); ++i) {
        BigRational s = BigRational(L) * abar[i];
        shift[i] = norm(s.numerator().get_si());
    }

    long count = 0;
    std::vector<long> k(m, 0);
    std::vector<std::vector<long>> partial(m + 1, std::vector<long>(m, 0));
    int level = 0;
    for (;;) {
        if (level == m) {
            bool ok = true;
            for (int r = 0; r < m && ok; ++r)
                if (norm(partial[m][r] + shift[r]) != 0) ok = false;
            if (ok) ++count;
            --level;
            ++k[level];
            continue;
        }
        if (k[level] >= L) {
            if (level == 0) break;
            k[level] = 0;
            --level;
            ++k[level];
            continue;
        }
        for (int r = 0; r < m; ++r)
            partial[level + 1][r] = norm(partial[level][r] + b[r][level] * k[level]);
        ++level;
        if (level < m) k[level] = 0;
    }
    return count;
}

inline IsometryElement make_element(const BigRational& a, IntMatrix torus_part,
                                    const std::string& label = "g") {
    IsometryElement e;
    e.a = a;
    e.torus_part = std::move(torus_part);
    e.label = label;
    return e;
}

}  // namespace etaflat::testing
