// oracles.hpp - test-only reference implementations, kept independent of
// the library code paths they are used to check.
#pragma once

#include "cpell/eisenstein.hpp"

#include <optional>
#include <vector>

namespace cpell::oracle {

// Independent factorization into primary primes by trial division over
// Eisenstein primes enumerated by increasing norm (the library lifts from
// the rational factorization of the norm instead).
inline std::vector<std::pair<EisensteinInt, int>> trial_factor_primary(EisensteinInt m) {
    std::vector<std::pair<EisensteinInt, int>> out;
    if (norm(m) <= 1) return out;
    for (const EisensteinInt& cand : enumerate_disc(std::sqrt(to_double(norm(m))) + 1.0)) {
        if (norm(cand) < 2) continue;
        if (!is_primary(cand)) continue;
        // primality of cand: its norm is either a rational prime or the
        // square of an inert prime equal to |cand|
        BigInt nc = norm(cand);
        bool isprime = true;
        for (BigInt d = 2; d * d <= nc; ++d)
            if (nc % d == 0) { isprime = false; break; }
        if (!isprime) {
            // inert candidates are +-q with q prime, norm q^2
            if (cand.v() != 0) continue;
            BigInt q = cand.u() < 0 ? BigInt(-cand.u()) : cand.u();
            if (q * q != nc) continue;
            bool qprime = q > 1;
            for (BigInt d = 2; d * d <= q; ++d)
                if (q % d == 0) { qprime = false; break; }
            if (!qprime) continue;
        }
        int k = 0;
        for (;;) {
            auto d = exact_div(m, cand);
            if (!d) break;
            m = *d;
            ++k;
        }
        if (k > 0) out.emplace_back(cand, k);
        if (norm(m) <= 1) break;
    }
    return out;
}

struct SupportWitness {
    int exponent_class;  // 0: lambda-exponent = 0 mod 3 pattern, 2: the other
    int n;
    EisensteinInt a, b;
};

// Independent reimplementation of the support test for the theta
// coefficients: strips lambda by repeated exact division, scans the six
// units directly, and uses trial_factor_primary for the cube split.
inline std::optional<SupportWitness> support_decompose(const EisensteinInt& num) {
    if (num.is_zero()) return std::nullopt;
    EisensteinInt cur = num;
    int bigE = 0;
    for (;;) {
        auto d = exact_div(cur, lambda());
        if (!d) break;
        cur = *d;
        ++bigE;
    }
    int e = bigE - 3;
    int cls = ((e % 3) + 3) % 3;
    if (cls == 1) return std::nullopt;
    // find the primary associate and the responsible unit
    int uidx = -1;
    EisensteinInt m1;
    for (int i = 0; i < 6; ++i) {
        auto p = exact_div(cur, unit_by_index(i));
        if (p && is_primary(*p)) { uidx = i; m1 = *p; break; }
    }
    if (uidx < 0) return std::nullopt;
    int j = uidx % 3;
    if (cls == 0 && j != 0) return std::nullopt;
    EisensteinInt a(1, 0), b(1, 0);
    for (auto& [pi, k] : trial_factor_primary(m1)) {
        if (k % 3 == 2) return std::nullopt;
        if (k % 3 == 1) a = a * pi;
        for (int i = 0; i < k / 3; ++i) b = b * pi;
    }
    SupportWitness w;
    w.exponent_class = cls;
    w.n = cls == 0 ? (e + 3) / 3 : (e + 4) / 3;
    if ((cls == 0 && w.n < 0) || (cls == 2 && w.n < 1)) return std::nullopt;
    w.a = a;
    w.b = b;
    return w;
}

} // namespace cpell::oracle
