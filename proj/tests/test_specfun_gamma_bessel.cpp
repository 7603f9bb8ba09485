#include "doctest.h"

#include "cpell/specfun.hpp"

#include <cmath>

using namespace cpell;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

// Reference values computed with an independent arbitrary-precision
// implementation (22 significant digits), frozen here.

TEST_CASE("gamma at classical points") {
    CHECK(gamma_complex({0.5, 0.0}).real() == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(gamma_complex({5.0, 0.0}).real() == doctest::Approx(24.0).epsilon(1e-13));
    // |Gamma(1+i)|^2 = pi / sinh(pi)
    double g = std::abs(gamma_complex({1.0, 1.0}));
    CHECK(g == doctest::Approx(0.52156404686493984).epsilon(1e-13));
    CHECK(g * g == doctest::Approx(kPi / std::sinh(kPi)).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_complex({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(gamma_complex({-3.0, 0.0}), std::domain_error);
}

TEST_CASE("gamma high in the strip") {
    Complex g = gamma_complex({0.5, 14.1347});
    CHECK(g.real() == doctest::Approx(-1.4459762901176066e-10).epsilon(1e-11));
    CHECK(g.imag() == doctest::Approx(-5.5229099255553258e-10).epsilon(1e-11));
    Complex g2 = gamma_complex({2.5, 200.0});
    CHECK(g2.real() == doctest::Approx(-1.5195581143114361e-132).epsilon(1e-10));
    CHECK(g2.imag() == doctest::Approx(3.3300817585016144e-132).epsilon(1e-10));
}

TEST_CASE("log gamma is consistent with the functional equation") {
    for (double y : {0.5, 3.0, 40.0, 250.0, 500.0}) {
        Complex z{1.3, y};
        Complex lhs = log_gamma(z + 1.0) - log_gamma(z);
        CHECK(std::abs(std::exp(lhs) - z) < 1e-12 * std::abs(z));
    }
}

TEST_CASE("real-order K at the half-integer closed form") {
    double v = bessel_k_real(0.5, 1.0);
    CHECK(v == doctest::Approx(std::sqrt(kPi / 2.0) * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("real-order K reference values") {
    CHECK(bessel_k_real(1.0 / 3.0, 1.0) == doctest::Approx(0.43843063344153436).epsilon(1e-11));
    CHECK(bessel_k_real(1.0 / 3.0, 0.05) == doctest::Approx(3.9910177068675402).epsilon(1e-10));
    CHECK(bessel_k_real(5.0, 0.01) == doctest::Approx(3839976000099.9996).epsilon(1e-10));
    CHECK_THROWS_AS(bessel_k_real(0.5, 0.0), std::domain_error);
}

TEST_CASE("real-order K decreases in y") {
    double prev = bessel_k_real(1.0 / 3.0, 0.2);
    for (double y = 0.4; y < 4.0; y += 0.2) {
        double cur = bessel_k_real(1.0 / 3.0, y);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("imaginary-order K matches the real-order function at t = 0") {
    for (double y : {0.3, 1.0, 2.5}) {
        CHECK(bessel_k_imag(0.0, y) == doctest::Approx(bessel_k_real(0.0, y)).epsilon(1e-11));
    }
}

TEST_CASE("imaginary-order K reference values") {
    // K_{2it}(y) for t=1 means order 2i
    CHECK(bessel_k_imag(1.0, 1.0) == doctest::Approx(0.080616997622365979).epsilon(1e-10));
    CHECK(bessel_k_imag(1.0, 0.5) == doctest::Approx(0.016502018949481443).epsilon(1e-10));
    CHECK(bessel_k_imag(5.0, 2.0) == doctest::Approx(1.1735704221220612e-7).epsilon(1e-8));
    // deep in the exponentially small regime: order 40i
    CHECK(bessel_k_imag(20.0, 30.0) ==
          doctest::Approx(-3.844887695498386e-29).epsilon(1e-6));
    CHECK(bessel_k_imag(20.0, 2.0) ==
          doctest::Approx(2.045052399984535e-28).epsilon(1e-6));
    CHECK_THROWS_AS(bessel_k_imag(1.0, -1.0), std::domain_error);
}

TEST_CASE("imaginary-order K oscillates in y below the turning point") {
    // for order 2it with t = 5, sign changes occur for y below ~2t
    int sign_changes = 0;
    double prev = bessel_k_imag(5.0, 0.2);
    for (double y = 0.4; y <= 6.0; y += 0.2) {
        double cur = bessel_k_imag(5.0, y);
        if (prev * cur < 0) ++sign_changes;
        prev = cur;
    }
    CHECK(sign_changes >= 2);
}

TEST_CASE("bound function branch selection") {
    // 4 pi y > 2t: monotone-decay branch
    CHECK(kbessel_bound_f(10.0, 10.0) > 0.0);
    // small y: the inverse-quartic-root branch (t=10, y=0.1: 4 pi y ~ 1.26)
    double f2 = kbessel_bound_f(10.0, 0.1);
    CHECK(f2 == doctest::Approx(5.0 / std::pow(400.0 - 16 * kPi * kPi * 0.01, 0.25)).epsilon(1e-12));
    // transition band
    double y3 = (2 * 10.0 - 0.25 * std::cbrt(2 * 10.0)) / (4 * kPi);
    CHECK(kbessel_bound_f(10.0, y3) == doctest::Approx(4.0 * std::pow(20.0, -1.0 / 3.0)).epsilon(1e-12));
    // below all branches
    CHECK_THROWS_AS(kbessel_bound_f(10.0, 0.01), std::domain_error);
}

TEST_CASE("the bound dominates on a grid spanning all branches") {
    for (double t = 1.0; t <= 20.0; t += 2.38) {
        for (int i = 0; i < 12; ++i) {
            double ylo = 1.0 / (4 * kPi);
            double yhi = 2.2 * (2 * t) / (4 * kPi);
            double y = ylo + (yhi - ylo) * i / 11.0;
            double k = bessel_k_imag(t, 4 * kPi * y);
            double bound = std::exp(-kPi * t) * kbessel_bound_f(t, y);
            CHECK(std::abs(k) <= bound * (1 + 1e-8) + 1e-300);
        }
    }
}
