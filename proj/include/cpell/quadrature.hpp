// quadrature.hpp - adaptive Gauss-Kronrod integration plus the endpoint
// and oscillation handling shared by the special-function evaluators.
#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

namespace cpell {

struct QuadratureConfig {
    double abs_tol = 1e-13;
    double rel_tol = 1e-11;
    int max_subdivisions = 4000;
    double truncation_margin = 1.25;  // multiplier on computed tail cutoffs

    void validate() const {
        if (abs_tol <= 0 || rel_tol <= 0) throw std::domain_error("tolerances must be positive");
        if (max_subdivisions < 10) throw std::domain_error("max_subdivisions must be >= 10");
        if (truncation_margin <= 0) throw std::domain_error("truncation_margin must be positive");
    }
};

using CFunc = std::function<std::complex<double>(double)>;
using RFunc = std::function<double(double)>;

// Adaptive G7/K15 on [a, b].  Deterministic depth-first subdivision.
std::complex<double> integrate(const CFunc& f, double a, double b, const QuadratureConfig& cfg);
double integrate_real(const RFunc& f, double a, double b, const QuadratureConfig& cfg);

// Single nonadaptive K15 panel (with embedded G7 error estimate ignored);
// used on phase-bounded oscillation cells.
std::complex<double> kronrod15(const CFunc& f, double a, double b);

// integral over [0, 1] of f with algebraic endpoint behaviour
// f ~ t^{p0} near 0 and ~ (1-t)^{p1} near 1 (p0, p1 > -1): the interval is
// split at 1/2 and each half is regularized by a power substitution.  The
// integrand receives t and 1-t separately so that the distance to either
// endpoint never collapses to zero by rounding.
using CFunc01 = std::function<std::complex<double>(double t, double one_minus_t)>;
std::complex<double> integrate_01_endpoint_powers(const CFunc01& f, double p0, double p1,
                                                  const QuadratureConfig& cfg);

// Compensated (Kahan) accumulator for long cell sums.
class KahanSum {
public:
    void add(std::complex<double> x) {
        std::complex<double> y = x - c_;
        std::complex<double> t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    std::complex<double> value() const { return s_; }

private:
    std::complex<double> s_{0.0, 0.0}, c_{0.0, 0.0};
};

} // namespace cpell
