// pell.hpp - extraction and exact verification of cubic Pell solution
// witnesses from nonvanishing coefficient pairs tau(nu) * conj(tau(1+d nu)).
//
// A nonvanishing pair forces nu = m x^3 and 1 + d nu = n y^3 with m, n
// squarefree up to the lambda^2 caveat below, hence n y^3 - d m x^3 = 1.
#pragma once

#include "cpell/eisenstein.hpp"
#include "cpell/theta_tau.hpp"

#include <vector>

namespace cpell {

struct PellWitness {
    ThetaIndex nu;
    TauDecomposition dec_nu;
    TauDecomposition dec_succ;
    KRational m, x;  // nu = m x^3
    KRational n, y;  // 1 + d nu = n y^3
    // true iff both decompositions have the lambda-exponent = 0 (mod 3)
    // pattern and x, y land in O_K; the other pattern forces x in
    // lambda^{-1} O_K with m carrying a lambda^2 factor.
    bool pure_integral = false;
};

// Builds the witness and verifies nu = m x^3, 1 + d nu = n y^3 and
// n y^3 - d m x^3 = 1 exactly in K; verification failure means an
// arithmetic bug and raises logic_error.
PellWitness witness_from_decompositions(int d, const ThetaIndex& nu,
                                        const TauDecomposition& dec_nu,
                                        const TauDecomposition& dec_succ);

// All witnesses with 0 < |nu| <= R, ordered by (norm, angle) of the
// numerator of nu.
std::vector<PellWitness> find_solutions(int d, double R);

} // namespace cpell
