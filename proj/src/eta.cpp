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

#include "etaflat/eta.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace etaflat {

namespace {

double cot_pi(const BigRational& x) {
    double arg = std::numbers::pi * x.to_double();
    return std::cos(arg) / std::sin(arg);
}

// cot values recur heavily across elements and conjugated reruns
const CyclotomicNumber& cached_cot(long k, long m) {
    static std::map<std::pair<long, long>, CyclotomicNumber> cache;
    static std::mutex mu;
    long kk = k % m;
    if (kk < 0) kk += m;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({kk, m});
    if (it != cache.end()) return it->second;
    return cache.emplace(std::make_pair(kk, m), cyc_cot(kk, m)).first->second;
}

ElementContribution zero_contribution(const IsometryElement& e, ZeroReason reason) {
    ElementContribution c;
    c.label = e.label;
    c.a = e.a;
    c.zero_reason = reason;
    c.value = CyclotomicNumber();  // exact 0
    c.value_float = 0.0;
    return c;
}

// Shared core: value = nu * (-1)^n * cot(pi a) * prod cot(pi k/d) over the
// already-oriented pair list.
ElementContribution assemble_contribution(const IsometryElement& e, long n, const BigInt& nu,
                                          std::vector<AnglePair> pairs) {
    if (!e.a.denominator().fits_slong_p() || !e.a.numerator().fits_slong_p())
        throw DegenerateInput("rotation number of " + e.label + " has an oversized denominator");
    ElementContribution c;
    c.label = e.label;
    c.a = e.a;
    c.nu = nu;
    c.angles = std::move(pairs);

    const BigRational sign_nu = (n % 2 == 0) ? BigRational(nu) : BigRational(-nu);
    CyclotomicNumber acc = cached_cot(e.a.numerator().get_si(), e.a.denominator().get_si());
    double facc = cot_pi(e.a);
    for (const auto& p : c.angles) {
        acc = acc * cached_cot(p.k, p.d);
        facc *= cot_pi(BigRational(p.k, p.d));
    }
    c.value = acc * sign_nu;
    c.value_float = facc * sign_nu.to_double();

    if (c.value.conjugate() != c.value)
        throw CertificationError("contribution of " + e.label + " is not real");
    return c;
}

// a must have a small denominator for cot caching; group orders guarantee it
void check_element(const IsometryElement& e, long n) {
    if (!e.torus_part.is_square()) throw ShapeError("torus part must be square");
    if (e.a.mod_one().is_zero())
        throw NotFree("element " + e.label + " does not move the circle factor");
    if (e.torus_part.rows() != 4 * n - 2)
        throw DimensionError("torus part of " + e.label + " is not (4n-2) x (4n-2)");
}

ElementContribution eta_element_oriented(const IsometryElement& e, long n,
                                         const OrientedAngles& oa) {
    if (oa.has_plus1) return zero_contribution(e, ZeroReason::kEigenvaluePlus1);
    if (oa.has_minus1) return zero_contribution(e, ZeroReason::kEigenvalueMinus1);
    check_element(e, n);
    if (static_cast<long>(oa.pairs.size()) != 2 * n - 1)
        throw DimensionError("angle pair count of " + e.label + " is not 2n-1");
    BigInt nu = torus_fixed_point_count(e.torus_part, {});
    return assemble_contribution(e, n, nu, oa.pairs);
}

std::vector<AnglePair> oriented_pairs_standalone(int sigma, const RotationSpectrum& spec) {
    std::vector<AnglePair> pairs = spec.pairs;
    // canonical pairs all have 2k < d and positive cotangent; a single flip
    // k -> d - k realizes the orientation sign
    if (sigma < 0 && !pairs.empty()) pairs[0].k = pairs[0].d - pairs[0].k;
    return pairs;
}

}  // namespace

ElementContribution eta_element(const IsometryElement& e, long n) {
    auto [plus1, minus1] = eigen_pm1_flags(char_poly(e.torus_part));
    if (plus1) return zero_contribution(e, ZeroReason::kEigenvaluePlus1);
    if (minus1) return zero_contribution(e, ZeroReason::kEigenvalueMinus1);
    check_element(e, n);

    RotationSpectrum spec = rotation_spectrum(e.torus_part);
    if (static_cast<long>(spec.pairs.size()) != 2 * n - 1)
        throw DimensionError("angle pair count of " + e.label + " is not 2n-1");
    const int sigma = orientation_sign(e.torus_part);
    BigInt nu = torus_fixed_point_count(e.torus_part, e.translation_rest);
    return assemble_contribution(e, n, nu, oriented_pairs_standalone(sigma, spec));
}

ElementContribution eta_element_signed_perm(const IsometryElement& e, long n) {
    auto cycles = signed_permutation_cycles(e.torus_part);
    if (!cycles) throw DegenerateInput("matrix of " + e.label + " is not a signed permutation");

    auto [plus1, minus1] = eigen_pm1_flags(char_poly(e.torus_part));
    if (plus1) return zero_contribution(e, ZeroReason::kEigenvaluePlus1);
    if (minus1) return zero_contribution(e, ZeroReason::kEigenvalueMinus1);
    check_element(e, n);

    RotationSpectrum spec = rotation_spectrum(e.torus_part);
    if (static_cast<long>(spec.pairs.size()) != 2 * n - 1)
        throw DimensionError("angle pair count of " + e.label + " is not 2n-1");
    const int sigma = orientation_sign_orthogonal(e.torus_part);
    BigInt nu = 1;
    nu <<= *cycles;  // 2^l
    return assemble_contribution(e, n, nu, oriented_pairs_standalone(sigma, spec));
}

EtaReport eta_total(const GroupAction& g, const std::string& name, double float_eps,
                    bool oracle) {
    EtaReport report;
    report.name = name;
    report.dimension = g.dimension();
    report.group_order = g.group_order();

    const long n = (g.dimension() + 1) / 4;  // used only by nonzero contributions

    for (size_t i = 0; i < g.elements().size(); ++i) {
        const auto& e = g.elements()[i];
        ElementContribution c =
            g.has_cyclic_angles() ? eta_element_oriented(e, n, g.cyclic_angles(i))
                                  : eta_element(e, n);
        if (oracle && c.nu) {
            BigInt recheck = torus_fixed_point_count(e.torus_part, e.translation_rest, true);
            if (recheck != *c.nu)
                throw CertificationError("oracle fixed point count disagrees for " + e.label);
        }
        report.contributions.push_back(std::move(c));
    }

    CyclotomicNumber sum;
    double fsum = 0.0;
    for (const auto& c : report.contributions) {
        sum = sum + c.value;
        fsum += c.value_float;
    }
    sum = sum * BigRational(1, g.group_order());
    fsum /= static_cast<double>(g.group_order());

    auto q = sum.to_rational();
    if (!q)
        throw CertificationError("eta total is not rational; this signals an engine defect");
    report.eta_exact = *q;
    report.eta_float = fsum;
    if (std::abs(fsum - q->to_double()) >= float_eps)
        throw CertificationError("float cross-check of eta disagrees with the exact value");

    auto verdict = integrality_verdict(report.eta_exact);
    report.is_integer = verdict.is_integer;
    report.obstructed = !verdict.is_integer;
    return report;
}

CyclotomicNumber eta_twisted(const GroupAction& g, const std::vector<CyclotomicNumber>& chi) {
    if (static_cast<long>(chi.size()) != g.group_order())
        throw IncompleteCharacter("character must provide a value for every group element");

    EtaReport base = eta_total(g);
    CyclotomicNumber sum;  // identity term: eta of the torus is 0
    for (size_t i = 0; i < base.contributions.size(); ++i)
        sum = sum + base.contributions[i].value * chi[i + 1];
    return sum * BigRational(1, g.group_order());
}

IntegralityVerdict integrality_verdict(const BigRational& q) {
    if (q.is_integer()) return {true, q.numerator()};
    return {false, std::nullopt};
}

IntMatrix z2m_generator_matrix(long n) {
    const int size = static_cast<int>(4 * n - 2);
    IntMatrix a(size, size);
    for (int i = 0; i + 1 < size; ++i) a.at(i + 1, i) = 1;  // e_i -> e_{i+1}
    a.at(0, size - 1) = -1;                                 // e_{4n-2} -> -e_1
    return a;
}

BigRational closed_form_z2m(long n) {
    if (n < 2) throw DimensionError("closed form needs n >= 2");
    const long m2 = 2 * (4 * n - 2);
    const IntMatrix a = z2m_generator_matrix(n);

    CyclotomicNumber sum;
    for (long r = 0; r <= 4 * n - 3; ++r) {
        auto l = signed_permutation_cycles(a.pow(2 * r + 1));
        if (!l) throw InternalError("family generator power is not a signed permutation");
        BigInt coeff = 1;
        coeff <<= *l;  // 2^{l_r}
        if (r % 2 == 1) coeff = -coeff;
        sum = sum + cached_cot(2 * r + 1, m2) * BigRational(coeff);
    }
    BigRational scale(n % 2 == 0 ? 1 : -1, 8 * n - 4);
    auto q = (sum * scale).to_rational();
    if (!q) throw CertificationError("closed form did not evaluate to a rational");
    return *q;
}

}  // namespace etaflat
