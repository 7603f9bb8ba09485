#include "cpell/specfun.hpp"

#include <cmath>

namespace cpell {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
} // namespace

Complex first_integral_rhs(Complex s) {
    if (!(s.real() > 1.0 / 3.0) || std::abs(s - Complex(1.0 / 3.0, 0.0)) == 0.0)
        throw std::domain_error("first_integral_rhs requires Re(s) > 1/3");
    return std::exp((-6.0 * s + 1.0) * std::log(2.0) + (-2.0 * s + 5.0 / 6.0) * std::log(kPi) +
                    log_gamma(2.0 * s) + log_gamma(2.0 * s - 2.0 / 3.0) -
                    log_gamma(2.0 * s + 1.0 / 6.0));
}

IdentityResult first_integral_check(Complex s, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(s.real() > 1.0 / 3.0)) throw std::domain_error("first_integral_check requires Re(s) > 1/3");
    // LHS: int_0^inf y^{2s-4/3} e^{-4 pi y} K_{1/3}(4 pi y) dy.  Near 0 the
    // integrand behaves like y^{2 Re(s) - 5/3}; the tail dies like e^{-8 pi y}.
    double Y = (-std::log(cfg.abs_tol) + 10.0) / (8.0 * kPi) * cfg.truncation_margin + 1.0;
    QuadratureConfig inner = cfg;
    inner.abs_tol = std::min(cfg.abs_tol, 1e-14);
    auto f = [&](double u, double) {  // u in (0,1): y = Y u
        double y = Y * u;
        return std::exp((2.0 * s - 4.0 / 3.0) * std::log(y) - 4.0 * kPi * y) *
               bessel_k_real(1.0 / 3.0, 4.0 * kPi * y, inner) * Y;
    };
    Complex lhs = integrate_01_endpoint_powers(f, 2.0 * s.real() - 5.0 / 3.0, 0.0, cfg);
    return {lhs, first_integral_rhs(s)};
}

Complex kk_laplace_integral(double a_order, double m, double n, Complex s,
                            const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(m > 0.0) || !(n > 0.0)) throw std::domain_error("kk_laplace_integral requires m, n > 0");
    // integrand ~ y^{2 Re s - 1 - 2|a|} near 0, tail e^{-(1+m+n)y}
    double Y = (-std::log(cfg.abs_tol) + 12.0) / (1.0 + m + n) * cfg.truncation_margin + 1.0;
    QuadratureConfig inner = cfg;
    inner.rel_tol = std::min(cfg.rel_tol, 1e-12);
    auto f = [&](double u, double) {
        double y = Y * u;
        return bessel_k_real(a_order, m * y, inner) * bessel_k_real(a_order, n * y, inner) *
               std::exp(-y + (2.0 * s - 1.0) * std::log(y)) * Y;
    };
    double p0 = 2.0 * s.real() - 1.0 - 2.0 * std::abs(a_order);
    return integrate_01_endpoint_powers(f, p0, 0.0, cfg);
}

IdentityResult bessel_product_identity_check(double a_order, double m, double n, double y,
                                             const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(m > 0.0) || !(n > 0.0) || !(y > 0.0))
        throw std::domain_error("bessel_product_identity_check requires m, n, y > 0");
    QuadratureConfig inner = cfg;
    inner.rel_tol = std::min(cfg.rel_tol, 1e-12);
    double lhs = bessel_k_real(a_order, m * y, inner) * bessel_k_real(a_order, n * y, inner);
    // alpha(u) >= sqrt(2 m n) e^{u/2}; K_0 dies exponentially in alpha*y
    double U = 2.0 * std::log((-std::log(cfg.abs_tol) + 12.0 + std::abs(a_order) * 20.0) /
                              (y * std::sqrt(2.0 * m * n)) + 3.0) + 2.0;
    U *= cfg.truncation_margin;
    auto f = [&](double u) {
        double alpha = std::sqrt(m * m + n * n + 2.0 * m * n * std::cosh(u));
        return bessel_k_real(0.0, alpha * y, inner) * std::cosh(a_order * u);
    };
    double rhs = integrate_real(f, 0.0, U, cfg);
    return {Complex(lhs, 0.0), Complex(rhs, 0.0)};
}

IdentityResult identity1_check(double s, double m, double n, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(s > 1.0 / 3.0)) throw std::domain_error("identity1_check requires s > 1/3");
    Complex lhs = kk_laplace_integral(1.0 / 3.0, m, n, Complex(s, 0.0), cfg);
    // RHS: 2F1 factor decays like (2 m n cosh u)^{-s}, times cosh(u/3)
    double U = (-std::log(cfg.abs_tol) + 12.0) / (s - 1.0 / 3.0) * cfg.truncation_margin;
    auto f = [&](double u) {
        double alpha2 = m * m + n * n + 2.0 * m * n * std::cosh(u);
        return gauss_2f1(Complex(s + 0.5, 0.0), Complex(s, 0.0), Complex(2.0 * s + 0.5, 0.0),
                         1.0 - alpha2, cfg) *
               std::cosh(u / 3.0);
    };
    Complex integral = integrate(f, 0.0, U, cfg);
    Complex pref = std::sqrt(kPi) * std::exp(-2.0 * s * std::log(2.0) + 2.0 * log_gamma(Complex(2.0 * s, 0.0)) -
                                             log_gamma(Complex(2.0 * s + 0.5, 0.0)));
    return {lhs, pref * integral};
}

IdentityResult cosh_lemma_check(Complex w, double a, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(w.real() < -1.0 / 3.0)) throw std::domain_error("cosh_lemma_check requires Re(w) < -1/3");
    if (!(a > 1.0)) throw std::domain_error("cosh_lemma_check requires a > 1");
    Complex denom = 18.0 * w * w - 2.0;
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("cosh_lemma_check at a zero of 18w^2-2 (removable factor)");
    Complex lhs = cosh_integral(w, a, cfg);

    double c2 = 1.0 / (2.0 * (a + 1.0));
    auto phi = [&](double shift) {  // shift = 4/3 for Phi1, 2/3 for Phi2
        auto f = [&](double t, double omt) {
            return std::exp(-(w + shift) * std::log(omt) + w * std::log(omt + c2 * t * t));
        };
        return integrate_01_endpoint_powers(f, 0.0, -w.real() - shift, cfg);
    };
    Complex phi1 = (-w - 1.0 / 3.0) * phi(4.0 / 3.0);
    Complex phi2 = (-w + 1.0 / 3.0) * phi(2.0 / 3.0);
    Complex rhs = std::pow(Complex(a + 1.0, 0.0), w) / denom *
                  ((3.0 - 9.0 * w) * phi1 - (3.0 + 9.0 * w) * phi2);
    return {lhs, rhs};
}

} // namespace cpell
