// residue_symbols.hpp - cubic residue symbol (beta/a)_3 for primary
// squarefree moduli, the additive character e(.) restricted to K, and
// residue-system enumeration mod a.
#pragma once

#include "cpell/eisenstein.hpp"

#include <complex>
#include <vector>

namespace cpell {

// 0 or w^k as a small tagged value; value^3 = 1 when nonzero.
struct CubicSymbolValue {
    bool zero = false;
    int omega_power = 0;  // meaningful when !zero, in {0,1,2}

    std::complex<double> to_complex() const;
    bool operator==(const CubicSymbolValue& o) const {
        return zero == o.zero && (zero || omega_power == o.omega_power);
    }
};

CubicSymbolValue cubic_symbol_mul(CubicSymbolValue x, CubicSymbolValue y);

// (beta/a)_3 for a primary, squarefree, coprime to lambda.  Multiplicative
// over the prime factors of a; at a prime pi it is the cube root of unity
// congruent to beta^{(N(pi)-1)/3} mod pi, or 0 when pi | beta.
// (x/unit)_3 = 1 by the empty-product convention.
CubicSymbolValue cubic_symbol(const EisensteinInt& beta, const EisensteinInt& a);

// e restricted to the complex line: e(q) = exp(4 pi i Re(q)), with Re(q)
// reduced mod 1 as an exact rational before any floating point happens.
std::complex<double> e_char(const KRational& q);

// A complete residue system mod a (size norm(a)), built by CRT over the
// factorization of a.
std::vector<EisensteinInt> residues_mod(const EisensteinInt& a);

namespace detail {
// beta^k mod m (nearest-remainder reduction); helper shared with tests.
EisensteinInt pow_mod(EisensteinInt base, const BigInt& k, const EisensteinInt& m);
// symbol at a single primary prime pi
CubicSymbolValue cubic_symbol_prime(const EisensteinInt& beta, const EisensteinInt& pi);
} // namespace detail

} // namespace cpell
