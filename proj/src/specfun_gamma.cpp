#include "cpell/specfun.hpp"

#include <cmath>

namespace cpell {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLogTwoPiHalf = 0.91893853320467274178032973640561764;  // log(2 pi)/2

// Stirling coefficients B_{2n} / (2n (2n-1))
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

} // namespace

Complex log_gamma(Complex z) {
    if (z.real() <= 0.0 && z.imag() == 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("log_gamma at a nonpositive integer");
    if (z.real() <= 0.0)
        throw std::domain_error("log_gamma requires Re(z) > 0 (use gamma_complex)");
    // shift until |z| is comfortably in the Stirling zone
    Complex shift{0.0, 0.0};
    Complex w = z;
    while (std::abs(w) < 16.0) {
        shift += std::log(w);
        w += 1.0;
    }
    Complex r = (w - 0.5) * std::log(w) - w + kLogTwoPiHalf;
    Complex w2 = 1.0 / (w * w);
    Complex term = 1.0 / w;
    for (double c : kStirling) {
        r += c * term;
        term *= w2;
    }
    return r - shift;
}

Complex gamma_complex(Complex s) {
    if (s.imag() == 0.0 && s.real() == std::floor(s.real()) && s.real() <= 0.0)
        throw std::domain_error("gamma pole");
    if (s.real() >= 0.5) return std::exp(log_gamma(s));
    // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
    return kPi / (std::sin(kPi * s) * std::exp(log_gamma(1.0 - s)));
}

} // namespace cpell
