// specfun.hpp - complex gamma, K-Bessel integrals (real and imaginary
// order), Gauss 2F1, Appell F1 via the Euler-Picard integral, the Picard
// integral F(s,x), and the closed-form identity checks built on them.
#pragma once

#include "cpell/quadrature.hpp"

#include <complex>

namespace cpell {

using Complex = std::complex<double>;

// ---- gamma ---------------------------------------------------------------

// log Gamma on Re(z) > 0 (recurrence shift + Stirling series).
Complex log_gamma(Complex z);
// Gamma on C minus the nonpositive integers (reflection for Re < 1/2).
Complex gamma_complex(Complex s);

// ---- K-Bessel --------------------------------------------------------------

// K_v(y) = int_0^inf exp(-y cosh t) cosh(v t) dt, y > 0 real order.
double bessel_k_real(double v, double y, const QuadratureConfig& cfg = {});

// K_{2it}(y), real-valued; evaluated on the rotated contour
//   K_{2it}(y) = e^{-2 t theta} int_0^inf e^{-y cos(theta) cosh v}
//                 cos(2tv - y sin(theta) sinh v) dv     (0 <= theta < pi/2)
// which keeps the integrand non-cancelling, so the e^{-pi t} scale of the
// result is carried by the exact prefactor instead of by cancellation.
// Oscillation cells are summed with compensated summation.
double bessel_k_imag(double t, double y, const QuadratureConfig& cfg = {});

// The explicit majorant f(t,y) with |K_{2it}(4 pi y)| <= exp(-pi t) f(t,y):
//  (i)  4 pi y >= 2t:
//       exp(-sqrt(16 pi^2 y^2 - 4 t^2) + 2 t arccos(2t / (4 pi y)))
//         * min( sqrt(pi/2) (16 pi^2 y^2 - 4t^2)^{-1/4},
//                Gamma(1/3) 2^{-2/3} 3^{-1/6} (2t)^{-1/3} )
//  (ii) 1 <= 4 pi y <= 2t - (2t)^{1/3}/2:   5 (4t^2 - 16 pi^2 y^2)^{-1/4}
//  (iii) remaining band 1 <= 4 pi y < 2t:   4 (2t)^{-1/3}
double kbessel_bound_f(double t, double y);

// ---- hypergeometric --------------------------------------------------------

// 2F1(a,b;c;z) for real z < 1: direct series on [0, 1/2], Pfaff transform
// into (0,1) for z < 0 and z in (1/2, 1), and the |z| -> infinity
// connection formula once the Pfaff image gets too close to 1.
Complex gauss_2f1(Complex a, Complex b, Complex c, double z,
                  const QuadratureConfig& cfg = {});

// Mellin-Barnes contour evaluation along Re(w) = -r (Re a, Re b > r, z < 0).
Complex gauss_2f1_mellin_barnes(Complex a, Complex b, Complex c, double z, double r,
                                const QuadratureConfig& cfg = {});

// Appell F1 by the Euler-Picard integral, Re(c) > Re(alpha) > 0, z1, z2 < 1:
// Gamma(c)/(Gamma(alpha) Gamma(c-alpha)) *
//   int_0^1 t^{alpha-1} (1-t)^{c-alpha-1} (1-z1 t)^{-b1} (1-z2 t)^{-b2} dt
Complex appell_f1_picard(Complex alpha, Complex beta1, Complex beta2, Complex c,
                         double z1, double z2, const QuadratureConfig& cfg = {});

// ---- Picard integral F(s,x) ------------------------------------------------

// F(s,x) = int_0^1 (t^{s-4/3} + t^{s-2/3}) (x t + (t-1)^2/2)^{-s} dt,
// Re(s) > 1/3, x > 0.  The t -> 0 endpoint is handled by an exact series
// head on [0, delta]; the rest is either adaptive (small |Im s|) or summed
// over half-period cells of the phase Im(s)(log t - log(xt+(t-1)^2/2)).
Complex picard_F(Complex s, double x, const QuadratureConfig& cfg = {});

// dF/ds: the same integral with the factor log t - log(x t + (t-1)^2/2).
Complex picard_F_deriv(Complex s, double x, const QuadratureConfig& cfg = {});

// Both at once (shared evaluation pass; the scan driver needs pairs).
std::pair<Complex, Complex> picard_F_with_deriv(Complex s, double x,
                                                const QuadratureConfig& cfg = {});

// Partial sum sum_{k=0..K} binom(-s,k) (x-x0)^k F(s+k, x0).  Throws when
// the observed term ratio exceeds 1 (expansion not converging).
Complex binomial_expand_F(Complex s, double x, double x0, int K,
                          const QuadratureConfig& cfg = {});

// (2 pi/|t|)^{1/2} e^{-i (log a) t} 2 a^{-sigma} a^{-1/2}: the stationary
// phase approximation of F(sigma+it, a) as |t| -> infinity.
Complex saddle_asymptotic(double sigma, double t, double a);

// int_0^inf (a + cosh u)^w cosh(u/3) du, a > 1, Re(w) < -1/3.
Complex cosh_integral(Complex w, double a, const QuadratureConfig& cfg = {});

// ---- identity checks -------------------------------------------------------

struct IdentityResult {
    Complex lhs;
    Complex rhs;
    double residual() const { return std::abs(lhs - rhs); }
    double relative() const { return std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs)); }
};

// 2^{-6s+1} pi^{-2s+5/6} Gamma(2s) Gamma(2s-2/3) / Gamma(2s+1/6): the
// closed form of the first Bessel-Laplace moment (simple pole at s = 1/3).
Complex first_integral_rhs(Complex s);

// int_0^inf y^{2s-4/3} e^{-4 pi y} K_{1/3}(4 pi y) dy vs the closed form.
IdentityResult first_integral_check(Complex s, const QuadratureConfig& cfg = {});

// K_a(my) K_a(ny) vs int_0^inf K_0(alpha(u) y) cosh(a u) du,
// alpha(u) = (m^2 + n^2 + 2 m n cosh u)^{1/2}
IdentityResult bessel_product_identity_check(double a_order, double m, double n, double y,
                                             const QuadratureConfig& cfg = {});

// int_0^inf K_{1/3}(my) K_{1/3}(ny) e^{-y} y^{2s} dy/y
//   vs  sqrt(pi) 2^{-2s} Gamma(2s)^2/Gamma(2s+1/2)
//       * int_0^inf 2F1(s+1/2, s; 2s+1/2; 1-alpha(u)^2) cosh(u/3) du
IdentityResult identity1_check(double s, double m, double n, const QuadratureConfig& cfg = {});

// cosh_integral(w,a) vs (a+1)^w/(18w^2-2) [(3-9w) Phi1 - (3+9w) Phi2] with
//   Phi1(w,a) = (-w-1/3) int_0^1 (1-t)^{-w-4/3} (1-t+t^2/(2(a+1)))^w dt
//   Phi2(w,a) = (-w+1/3) int_0^1 (1-t)^{-w-2/3} (1-t+t^2/(2(a+1)))^w dt
IdentityResult cosh_lemma_check(Complex w, double a, const QuadratureConfig& cfg = {});

// F1(a,b1,b2,c;z1,z2) vs (1-z1)^{-b1}(1-z2)^{-b2}
//                         F1(c-a,b1,b2,c; z1/(z1-1), z2/(z2-1))
IdentityResult f1_reduction_check(Complex a, Complex b1, Complex b2, Complex c, double z1,
                                  double z2, const QuadratureConfig& cfg = {});

// The helpers behind identity1/S_d terms:
// int_0^inf K_a(my) K_a(ny) e^{-y} y^{2s} dy/y by direct quadrature.
Complex kk_laplace_integral(double a_order, double m, double n, Complex s,
                            const QuadratureConfig& cfg = {});

} // namespace cpell
