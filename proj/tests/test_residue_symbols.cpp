#include "doctest.h"

#include "cpell/residue_symbols.hpp"

#include <complex>
#include <map>
#include <random>

using namespace cpell;

namespace {

// small pool of primary squarefree moduli for the property sweeps
std::vector<EisensteinInt> modulus_pool() {
    std::vector<EisensteinInt> out;
    for (const EisensteinInt& z : enumerate_disc(12.0)) {
        if (norm(z) < 2 || norm(z) % 3 == 0) continue;
        if (!is_primary(z)) continue;
        if (!is_squarefree(z)) continue;
        out.push_back(z);
        if (out.size() >= 40) break;
    }
    return out;
}

} // namespace

TEST_CASE("cubic symbol conventions and the small examples") {
    EisensteinInt a(-5, 0);  // -5 = 1 mod 3, squarefree (inert prime associate)
    CHECK(cubic_symbol(EisensteinInt(1, 0), a) == CubicSymbolValue{false, 0});
    // empty modulus
    CHECK(cubic_symbol(EisensteinInt(2, 0), EisensteinInt(1, 0)) == CubicSymbolValue{false, 0});
    // 2^8 = 256 = 1 mod 5, so (2 / -5) = 1
    CHECK(cubic_symbol(EisensteinInt(2, 0), a) == CubicSymbolValue{false, 0});
    // numerator divisible by the modulus
    CHECK(cubic_symbol(EisensteinInt(-10, 0), a).zero);
    CHECK_THROWS_AS(cubic_symbol(EisensteinInt(1, 0), EisensteinInt(5, 0)), std::domain_error);
    CHECK_THROWS_AS(cubic_symbol(EisensteinInt(1, 0), EisensteinInt(49, 0)), std::domain_error);
}

TEST_CASE("cubic symbol is multiplicative in the numerator") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<int> d(-30, 30);
    for (const EisensteinInt& a : modulus_pool()) {
        for (int i = 0; i < 10; ++i) {
            EisensteinInt b1(d(rng), d(rng)), b2(d(rng), d(rng));
            CubicSymbolValue lhs = cubic_symbol(b1 * b2, a);
            CubicSymbolValue rhs = cubic_symbol_mul(cubic_symbol(b1, a), cubic_symbol(b2, a));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cubes are cubic residues") {
    std::mt19937 rng(909);
    std::uniform_int_distribution<int> d(-20, 20);
    for (const EisensteinInt& a : modulus_pool()) {
        for (int i = 0; i < 8; ++i) {
            EisensteinInt g(d(rng), d(rng));
            CubicSymbolValue s = cubic_symbol(g * g * g, a);
            if (s.zero) continue;  // shared factor
            CHECK(s.omega_power == 0);
        }
    }
}

TEST_CASE("additive character basics") {
    CHECK(e_char(KRational(EisensteinInt(0, 0), EisensteinInt(1, 0))).real() ==
          doctest::Approx(1.0));
    // real part 1/4 -> exp(pi i) = -1
    KRational quarter(EisensteinInt(1, 1), EisensteinInt(2, 0));  // Re = 1/4
    CHECK(e_char(quarter).real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e_char(quarter).imag() == doctest::Approx(0.0).epsilon(1e-14));
    // Re((1+2w)/7) = 0 exactly
    CHECK(e_char(KRational(EisensteinInt(1, 2), EisensteinInt(7, 0))).real() ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("additive character is a homomorphism") {
    std::mt19937 rng(1001);
    std::uniform_int_distribution<int> d(-25, 25);
    for (int i = 0; i < 200; ++i) {
        EisensteinInt n1(d(rng), d(rng)), m1(d(rng), d(rng));
        EisensteinInt n2(d(rng), d(rng)), m2(d(rng), d(rng));
        if (m1.is_zero() || m2.is_zero()) continue;
        KRational q1(n1, m1), q2(n2, m2);
        std::complex<double> lhs = e_char(q1 + q2);
        std::complex<double> rhs = e_char(q1) * e_char(q2);
        CHECK(std::abs(lhs - rhs) < 1e-14);
    }
}

TEST_CASE("residue systems have the right size and no collisions") {
    CHECK(residues_mod(EisensteinInt(1, 0)).size() == 1);
    CHECK(residues_mod(EisensteinInt(-2, 0)).size() == 4);
    // a split prime of norm 7
    EisensteinInt pi7 = factor(EisensteinInt(7, 0)).primes[0].first;
    CHECK(residues_mod(pi7).size() == 7);
    CHECK_THROWS_AS(residues_mod(EisensteinInt(0, 0)), std::domain_error);

    for (const EisensteinInt& a :
         {EisensteinInt(4, 1), EisensteinInt(-5, 0), EisensteinInt(3, 0), EisensteinInt(6, 3),
          EisensteinInt(7, 0), EisensteinInt(-2, 4)}) {
        auto reps = residues_mod(a);
        CHECK(static_cast<BigInt>(reps.size()) == norm(a));
        // pairwise distinct mod a
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(divmod(reps[i] - reps[j], a).second.is_zero());
    }
}
