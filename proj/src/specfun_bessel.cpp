#include "cpell/specfun.hpp"

#include <cmath>
#include <limits>

namespace cpell {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// smallest T with y cosh(T) - |v| T >= target
double bessel_cutoff(double v, double y, double target) {
    double t = 1.0;
    while (y * std::cosh(t) - std::abs(v) * t < target) {
        t *= 1.5;
        if (t > 1e4) throw std::runtime_error("bessel cutoff search diverged");
    }
    return t;
}

} // namespace

double bessel_k_real(double v, double y, const QuadratureConfig& cfg) {
    cfg.validate();
    if (y <= 0.0) throw std::domain_error("bessel_k_real requires y > 0");
    double target = -std::log(cfg.abs_tol) + 8.0 + std::max(0.0, -std::log(y));
    double T = bessel_cutoff(v, y, target) * cfg.truncation_margin;
    return integrate_real([v, y](double t) { return std::exp(-y * std::cosh(t)) * std::cosh(v * t); },
                          0.0, T, cfg);
}

double bessel_k_imag(double t, double y, const QuadratureConfig& cfg) {
    cfg.validate();
    if (y <= 0.0) throw std::domain_error("bessel_k_imag requires y > 0");
    if (t == 0.0) return bessel_k_real(0.0, y, cfg);
    double ta = std::abs(t);
    // rotation angle: keep residual cancellation e^{-2 t eps} mild while the
    // integrand still decays like exp(-y sin(eps) cosh v)
    double eps = 0.12;
    double theta = kPi / 2 - eps;
    double ce = std::sin(eps);  // cos(theta)
    double se = std::cos(eps);  // sin(theta)
    double target = -std::log(cfg.abs_tol) + 10.0;
    double V = bessel_cutoff(0.0, y * ce, target) * cfg.truncation_margin;

    // integrand e^{-y ce cosh v} cos(2 t v - y se sinh v); split [0, V] at
    // bounded-phase cells and Kahan-sum the panels.
    auto phase = [&](double v) { return 2.0 * ta * v - y * se * std::sinh(v); };
    auto f = [&](double v) {
        return std::complex<double>(std::exp(-y * ce * std::cosh(v)) * std::cos(phase(v)), 0.0);
    };
    KahanSum acc;
    double v0 = 0.0;
    const double dphi = kPi;  // at most one half-period per cell
    while (v0 < V) {
        // advance until the phase moved by ~pi or the cell spans 0.5
        double rate = std::abs(2.0 * ta - y * se * std::cosh(v0));
        double step = rate > 1e-9 ? dphi / rate : 0.5;
        step = std::min(step, 0.5);
        double v1 = std::min(v0 + step, V);
        acc.add(kronrod15(f, v0, v1));
        v0 = v1;
    }
    double factor = std::exp(-2.0 * ta * theta);
    return factor * acc.value().real();
}

double kbessel_bound_f(double t, double y) {
    if (t <= 0.0 || y <= 0.0) throw std::domain_error("kbessel_bound_f requires t, y > 0");
    double fourpiy = 4.0 * kPi * y;
    double twot = 2.0 * t;
    if (fourpiy >= twot) {
        double d = 16.0 * kPi * kPi * y * y - 4.0 * t * t;
        double expo = -std::sqrt(d) + twot * std::acos(twot / fourpiy);
        double first = d > 0 ? std::sqrt(kPi / 2.0) / std::pow(d, 0.25)
                             : std::numeric_limits<double>::infinity();
        double second =
            std::tgamma(1.0 / 3.0) / (std::pow(2.0, 2.0 / 3.0) * std::pow(3.0, 1.0 / 6.0)) *
            std::pow(twot, -1.0 / 3.0);
        return std::exp(expo) * std::min(first, second);
    }
    if (fourpiy < 1.0) throw std::domain_error("kbessel_bound_f outside the covered bands");
    if (fourpiy <= twot - 0.5 * std::cbrt(twot))
        return 5.0 / std::pow(4.0 * t * t - 16.0 * kPi * kPi * y * y, 0.25);
    return 4.0 * std::pow(twot, -1.0 / 3.0);
}

} // namespace cpell
