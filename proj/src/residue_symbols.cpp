#include "cpell/residue_symbols.hpp"

#include <cmath>

namespace cpell {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
} // namespace

std::complex<double> CubicSymbolValue::to_complex() const {
    if (zero) return {0.0, 0.0};
    switch (omega_power) {
        case 0: return {1.0, 0.0};
        case 1: return {-0.5, 0.8660254037844386467637231707529362};
        default: return {-0.5, -0.8660254037844386467637231707529362};
    }
}

CubicSymbolValue cubic_symbol_mul(CubicSymbolValue x, CubicSymbolValue y) {
    if (x.zero || y.zero) return {true, 0};
    return {false, (x.omega_power + y.omega_power) % 3};
}

namespace detail {

EisensteinInt pow_mod(EisensteinInt base, const BigInt& k, const EisensteinInt& m) {
    EisensteinInt result(1, 0);
    base = divmod(base, m).second;
    BigInt e = k;
    while (e > 0) {
        if ((e & 1) != 0) result = divmod(result * base, m).second;
        base = divmod(base * base, m).second;
        e >>= 1;
    }
    return result;
}

CubicSymbolValue cubic_symbol_prime(const EisensteinInt& beta, const EisensteinInt& pi) {
    if (divmod(beta, pi).second.is_zero()) return {true, 0};
    BigInt q = norm(pi);
    EisensteinInt r = detail::pow_mod(beta, (q - 1) / 3, pi);
    // r is congruent to exactly one of 1, w, w^2 mod pi
    for (int k = 0; k < 3; ++k) {
        EisensteinInt cand = unit_by_index(k);  // 1, w, w^2
        if (divmod(r - cand, pi).second.is_zero()) return {false, k};
    }
    throw std::logic_error("cubic character value is not a cube root of unity");
}

} // namespace detail

CubicSymbolValue cubic_symbol(const EisensteinInt& beta, const EisensteinInt& a) {
    if (a.is_zero() || !is_primary(a) || norm(a) % 3 == 0)
        throw std::domain_error("cubic_symbol modulus must be primary and coprime to lambda");
    Factorization f = factor(a);
    if (f.lambda_exp != 0) throw std::domain_error("cubic_symbol modulus not coprime to lambda");
    for (auto& [p, k] : f.primes)
        if (k > 1) throw std::domain_error("cubic_symbol modulus must be squarefree");
    CubicSymbolValue acc{false, 0};
    for (auto& [pi, k] : f.primes)
        acc = cubic_symbol_mul(acc, detail::cubic_symbol_prime(beta, pi));
    return acc;
}

std::complex<double> e_char(const KRational& q) {
    auto [p, den] = q.re_exact();
    // reduce 2p/den mod 2 exactly, then exp(2 pi i * that / 1) -> exp(4 pi i Re)
    // 4 pi Re = 2 pi * (2p/den); reduce (2p mod den... ) exactly:
    BigInt twop = 2 * p;
    BigInt r = twop % den;
    if (r < 0) r += den;
    double frac = to_double(r) / to_double(den);  // in [0,1): e^{2 pi i frac}
    return std::polar(1.0, kTwoPi * frac);
}

std::vector<EisensteinInt> residues_mod(const EisensteinInt& a) {
    if (a.is_zero()) throw std::domain_error("residues_mod(0)");
    BigInt na = norm(a);
    if (na == 1) return {EisensteinInt(0, 0)};

    Factorization f = factor(a);
    // factor moduli: lambda^e plus pi^k blocks
    struct Block {
        EisensteinInt mod;
        std::vector<EisensteinInt> reps;
    };
    std::vector<Block> blocks;

    auto pow_ei = [](EisensteinInt b, int k) {
        EisensteinInt r(1, 0);
        for (int i = 0; i < k; ++i) r = r * b;
        return r;
    };

    if (f.lambda_exp > 0) {
        int e = f.lambda_exp;
        Block blk;
        blk.mod = pow_ei(lambda(), e);
        long long xs = 1, ys = 1;
        // O_K / lambda^(2f) has reps {x+yw : 0<=x,y<3^f};  odd exponent gets
        // an extra factor 3 on the x side.
        long long p3f = 1;
        for (int i = 0; i < e / 2; ++i) p3f *= 3;
        xs = p3f * (e % 2 ? 3 : 1);
        ys = p3f;
        for (long long x = 0; x < xs; ++x)
            for (long long y = 0; y < ys; ++y)
                blk.reps.emplace_back(x, y);
        blocks.push_back(std::move(blk));
    }
    for (auto& [pi, k] : f.primes) {
        Block blk;
        blk.mod = pow_ei(pi, k);
        BigInt p = norm(pi);
        // inert primes are rational integers (v = 0, norm q^2); split primes
        // have prime norm p and integer representatives 0..p^k-1 work via
        // O_K/pi^k = Z/p^k.
        bool inert = (pi.v() == 0);
        if (inert) {
            BigInt q = -pi.u();  // pi = -q, q the rational prime
            BigInt qk = 1;
            for (int i = 0; i < k; ++i) qk *= q;
            for (BigInt x = 0; x < qk; ++x)
                for (BigInt y = 0; y < qk; ++y)
                    blk.reps.emplace_back(EisensteinInt(x, y));
        } else {
            // split: O_K/pi^k is Z/p^k, integer representatives suffice
            BigInt pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            for (BigInt x = 0; x < pk; ++x) blk.reps.emplace_back(EisensteinInt(x, BigInt(0)));
        }
        blocks.push_back(std::move(blk));
    }

    // CRT combine: x = sum_i r_i * (a/m_i) * inv(a/m_i mod m_i)
    std::vector<EisensteinInt> out{EisensteinInt(0, 0)};
    for (auto& blk : blocks) {
        EisensteinInt cof = *exact_div(a, blk.mod);
        // invert cof mod blk.mod by extended Euclid
        EisensteinInt r0 = blk.mod, r1 = divmod(cof, blk.mod).second;
        EisensteinInt s0(0, 0), s1(1, 0);
        while (!r1.is_zero()) {
            auto [q, r2] = divmod(r0, r1);
            EisensteinInt s2 = s0 - q * s1;
            r0 = r1; r1 = r2; s0 = s1; s1 = s2;
        }
        // r0 is a unit (cof coprime to mod); inv = s0 / r0
        int ui = unit_index_of(r0);
        if (ui < 0) throw std::logic_error("CRT cofactor not coprime");
        // unit inverse: find j with unit_i * unit_j = 1
        EisensteinInt inv = s0;
        for (int j = 0; j < 6; ++j)
            if (unit_by_index(ui) * unit_by_index(j) == EisensteinInt(1, 0)) {
                inv = s0 * unit_by_index(j);
                break;
            }
        EisensteinInt lift = cof * inv;  // = 1 mod blk.mod, = 0 mod a/blk.mod
        std::vector<EisensteinInt> next;
        next.reserve(out.size() * blk.reps.size());
        for (const auto& base : out)
            for (const auto& rep : blk.reps)
                next.push_back(divmod(base + rep * lift, a).second);
        out = std::move(next);
    }
    return out;
}

} // namespace cpell
