#include "cpell/specfun.hpp"

#include <cmath>

namespace cpell {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool near_nonpositive_integer(Complex z, double tol = 1e-9) {
    if (std::abs(z.imag()) > tol) return false;
    double r = z.real();
    return r < 0.5 && std::abs(r - std::round(r)) < tol;
}

// plain power series, |z| < 1
Complex series_2f1(Complex a, Complex b, Complex c, double z, const QuadratureConfig& cfg) {
    Complex term{1.0, 0.0}, acc{1.0, 0.0};
    int small_streak = 0;
    for (int k = 0; k < 200000; ++k) {
        term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                ((c + static_cast<double>(k)) * (k + 1.0)) * z;
        acc += term;
        if (std::abs(term) < 0.1 * (cfg.abs_tol + cfg.rel_tol * std::abs(acc))) {
            if (++small_streak >= 2) return acc;
        } else {
            small_streak = 0;
        }
    }
    throw std::runtime_error("2F1 series did not converge");
}

// connection at z -> -infinity (valid when b - a is not an integer):
// F(a,b;c;z) = G(c)G(b-a)/(G(b)G(c-a)) (-z)^{-a} F(a, 1-c+a; 1-b+a; 1/z)
//            + G(c)G(a-b)/(G(a)G(c-b)) (-z)^{-b} F(b, 1-c+b; 1-a+b; 1/z)
Complex inversion_2f1(Complex a, Complex b, Complex c, double z, const QuadratureConfig& cfg) {
    Complex ba = b - a;
    if (std::abs(ba - std::round(ba.real())) < 1e-8 && std::abs(ba.imag()) < 1e-8)
        throw std::domain_error("2F1 inversion needs non-integer b-a");
    double invz = 1.0 / z;
    Complex t1 = gamma_complex(c) * gamma_complex(ba) /
                 (gamma_complex(b) * gamma_complex(c - a)) * std::pow(Complex(-z, 0.0), -a) *
                 series_2f1(a, 1.0 - c + a, 1.0 - b + a, invz, cfg);
    Complex t2 = gamma_complex(c) * gamma_complex(-ba) /
                 (gamma_complex(a) * gamma_complex(c - b)) * std::pow(Complex(-z, 0.0), -b) *
                 series_2f1(b, 1.0 - c + b, 1.0 - a + b, invz, cfg);
    return t1 + t2;
}

} // namespace

Complex gauss_2f1(Complex a, Complex b, Complex c, double z, const QuadratureConfig& cfg) {
    cfg.validate();
    if (z >= 1.0) throw std::domain_error("gauss_2f1 requires z < 1");
    if (near_nonpositive_integer(c)) throw std::domain_error("gauss_2f1 with c a nonpositive integer");
    if (z == 0.0) return {1.0, 0.0};
    if (z > 0.0) return series_2f1(a, b, c, z, cfg);
    // z < 0: Pfaff image z/(z-1) lies in (0,1); use it while it stays
    // comfortably away from 1, otherwise switch to the 1/z connection.
    if (z >= -3.0) {
        double zs = z / (z - 1.0);  // in (0, 3/4]
        return std::pow(Complex(1.0 - z, 0.0), -a) * series_2f1(a, c - b, c, zs, cfg);
    }
    return inversion_2f1(a, b, c, z, cfg);
}

Complex gauss_2f1_mellin_barnes(Complex a, Complex b, Complex c, double z, double r,
                                const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(z < 0.0)) throw std::domain_error("gauss_2f1_mellin_barnes requires z < 0");
    if (!(r > 0.0) || a.real() <= r || b.real() <= r)
        throw std::domain_error("gauss_2f1_mellin_barnes requires Re(a), Re(b) > r > 0");
    if (c.real() - r <= 0.0)
        throw std::domain_error("gauss_2f1_mellin_barnes requires Re(c) > r");
    double logmz = std::log(-z);
    // integrand along w = -r + iv decays like e^{-pi |v|}
    double V = (-std::log(cfg.abs_tol) + 12.0) / kPi * cfg.truncation_margin;
    auto g = [&](double v) {
        Complex w{-r, v};
        Complex lg = log_gamma(a + w) + log_gamma(b + w) + log_gamma(-w) - log_gamma(c + w);
        return std::exp(lg + w * logmz);
    };
    Complex integral = integrate(g, -V, V, cfg);
    // (1/(2 pi i)) * i dv = dv/(2 pi)
    return gamma_complex(c) / (gamma_complex(a) * gamma_complex(b)) * integral / (2.0 * kPi);
}

Complex appell_f1_picard(Complex alpha, Complex beta1, Complex beta2, Complex c, double z1,
                         double z2, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(alpha.real() > 0.0) || !(c.real() > alpha.real()))
        throw std::domain_error("appell_f1_picard requires Re(c) > Re(alpha) > 0");
    if (z1 >= 1.0 || z2 >= 1.0) throw std::domain_error("appell_f1_picard requires z1, z2 < 1");
    Complex pref = std::exp(log_gamma(c) - log_gamma(alpha) - log_gamma(c - alpha));
    auto f = [&](double t, double omt) {
        return std::pow(Complex(t, 0.0), alpha - 1.0) *
               std::pow(Complex(omt, 0.0), c - alpha - 1.0) *
               std::pow(Complex(1.0 - z1 * t, 0.0), -beta1) *
               std::pow(Complex(1.0 - z2 * t, 0.0), -beta2);
    };
    Complex integral =
        integrate_01_endpoint_powers(f, alpha.real() - 1.0, c.real() - alpha.real() - 1.0, cfg);
    return pref * integral;
}

IdentityResult f1_reduction_check(Complex a, Complex b1, Complex b2, Complex c, double z1,
                                  double z2, const QuadratureConfig& cfg) {
    if (std::abs(z1) >= 1.0 || std::abs(z2) >= 1.0)
        throw std::domain_error("f1_reduction_check requires |z1|, |z2| < 1");
    Complex lhs = appell_f1_picard(a, b1, b2, c, z1, z2, cfg);
    double w1 = z1 / (z1 - 1.0), w2 = z2 / (z2 - 1.0);
    Complex rhs = std::pow(Complex(1.0 - z1, 0.0), -b1) * std::pow(Complex(1.0 - z2, 0.0), -b2) *
                  appell_f1_picard(c - a, b1, b2, c, w1, w2, cfg);
    return {lhs, rhs};
}

} // namespace cpell
