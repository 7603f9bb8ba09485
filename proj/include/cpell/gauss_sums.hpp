// gauss_sums.hpp - brute-force cubic Gauss sums over Z[w].
#pragma once

#include "cpell/eisenstein.hpp"
#include "cpell/residue_symbols.hpp"

#include <complex>

namespace cpell {

// g(mu, a) = sum over a complete residue system beta mod a of
// (beta/a)_3 * e(mu*beta/a), for mu in O_K and a primary squarefree
// coprime to lambda.  g(mu, unit) = 1 (empty-modulus convention).
// Direct O(norm(a)) summation; phases are reduced mod 1 in exact rational
// arithmetic before the complex exponential is taken.
std::complex<double> gauss_sum(const EisensteinInt& mu, const EisensteinInt& a);

// General form for mu in lambda^{-3} O_K:
// g(mu, a) = sum (3 beta / a)_3 * e(3 mu beta / a).
// For mu in O_K this agrees with gauss_sum (tested, not assumed).
std::complex<double> gauss_sum_general(const ThetaIndex& mu, const EisensteinInt& a);

} // namespace cpell
