// lfunctions.hpp - truncated evaluation of the Dirichlet series L_d, L_d*,
// L_d#, the Bessel-integral form S_d, the Dedekind zeta of Q(sqrt(-3)), and
// both sides of the closed-form identity for sum |tau(nu)|^2 |nu|^{-2s}.
#pragma once

#include "cpell/eisenstein.hpp"
#include "cpell/quadrature.hpp"
#include "cpell/theta_tau.hpp"

#include <complex>
#include <cstdint>

namespace cpell {

struct TruncatedSum {
    std::complex<double> value{0.0, 0.0};
    std::int64_t terms_total = 0;    // lattice indices enumerated
    std::int64_t terms_nonzero = 0;  // indices with a nonvanishing coefficient
    double radius = 0.0;
};

// a_d(nu) = (|nu|^2 + |1+d nu|^2 - 1) / (2 |nu| |1+d nu|); numerator and the
// squared denominator are exact integers over a common 27, with one square
// root at the end.  Tends to (d^2+1)/(2d) as |nu| grows.
double a_d(int d, const ThetaIndex& nu);

// sum over 0 < |nu| <= R of tau(nu) conj(tau(1+d nu)) |nu (1+d nu)|^{-s}
TruncatedSum L_d_truncated(int d, std::complex<double> s, double R,
                           const QuadratureConfig& cfg = {});

// same with the extra factor (a_d(nu) - (d^2+1)/(2d))
TruncatedSum L_d_star_truncated(int d, std::complex<double> s, double R,
                                const QuadratureConfig& cfg = {});

// F(s,(d+1)^2/(2d)) L_d(s) - s F(s+1,(d+1)^2/(2d)) L_d*(s), truncated at R
TruncatedSum L_d_sharp_truncated(int d, std::complex<double> s, double R,
                                 const QuadratureConfig& cfg = {});

// sum of tau(nu) conj(tau(1+d nu)) * int_0^inf K_{1/3}(4 pi |nu| y)
//   K_{1/3}(4 pi |1+d nu| y) e^{-4 pi y} y^{2s} dy/y over 0 < |nu| <= R
TruncatedSum S_d_bessel_truncated(int d, std::complex<double> s, double R,
                                  const QuadratureConfig& cfg = {});

// Dedekind zeta of Q(sqrt(-3)): zeta(s) * L(s, chi_{-3}), s real > 1.
double zeta_K(double s);

// 2 * 3^{5+3s} (1+3^{1-2s})(1-3^{-s}) zeta_K(3s-1) zeta_K(s)
//   / ((1-3^{-2s}) zeta_K(2s)),  s > 1
double hjl_rhs(double s);

// sum over 0 < |nu| <= R of |tau(nu)|^2 |nu|^{-2s}, s > 1.  Uses the exact
// decomposition form of |tau|^2 so that desk-scale radii stay fast.
TruncatedSum hjl_lhs_truncated(double s, double R, int threads = 1);

// Explicit tail majorants built from |tau(nu)|^2 <= 3^7 |nu|^{2/3} and the
// lattice count in an annulus; used by the stabilization tests.
double hjl_tail_majorant(double s, double R);
double ld_tail_majorant(int d, double s_re, double R);

// d > 1 and cubefree; throws otherwise.
void require_cubefree_d(int d);

} // namespace cpell
