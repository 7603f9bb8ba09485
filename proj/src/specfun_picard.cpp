#include "cpell/specfun.hpp"

#include <cmath>
#include <vector>

namespace cpell {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr int kHeadDegree = 16;   // polynomial truncation of the t=0 head
constexpr int kHeadExpTerms = 18; // exp() series terms in the composition

// Coefficients of exp(-s * log(1 + p1 t + p2 t^2)) up to degree M, plus the
// coefficients of that polynomial multiplied by log(1 + p1 t + p2 t^2).
struct HeadPolys {
    std::vector<Complex> c;  // exp part
    std::vector<Complex> d;  // exp part * L
};

std::vector<Complex> poly_mul(const std::vector<Complex>& a, const std::vector<Complex>& b,
                              int M) {
    std::vector<Complex> r(M + 1, Complex(0.0, 0.0));
    for (int i = 0; i <= M && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= M && j < static_cast<int>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

HeadPolys head_polys(Complex s, double x) {
    const int M = kHeadDegree;
    // P(t) = p1 t + p2 t^2
    std::vector<Complex> P(M + 1, Complex(0.0, 0.0));
    P[1] = 2.0 * (x - 1.0);
    P[2] = 1.0;
    // L = log(1+P) = sum (-1)^{i+1} P^i / i
    std::vector<Complex> L(M + 1, Complex(0.0, 0.0));
    std::vector<Complex> Pi = P;
    for (int i = 1; i <= M; ++i) {
        double sgn = (i % 2 == 1) ? 1.0 : -1.0;
        for (int m = 0; m <= M; ++m) L[m] += sgn / i * Pi[m];
        if (i < M) Pi = poly_mul(Pi, P, M);
    }
    // E = exp(-s L)
    std::vector<Complex> sL(M + 1);
    for (int m = 0; m <= M; ++m) sL[m] = -s * L[m];
    std::vector<Complex> E(M + 1, Complex(0.0, 0.0));
    E[0] = 1.0;
    std::vector<Complex> pw(M + 1, Complex(0.0, 0.0));
    pw[0] = 1.0;
    double fact = 1.0;
    for (int j = 1; j <= kHeadExpTerms; ++j) {
        pw = poly_mul(pw, sL, M);
        fact *= j;
        for (int m = 0; m <= M; ++m) E[m] += pw[m] / fact;
    }
    HeadPolys hp;
    hp.c = E;
    hp.d = poly_mul(E, L, M);
    return hp;
}

double pick_delta(Complex s, double x) {
    double smag = std::abs(s);
    double slope = 2.0 * std::abs(x - 1.0) + 1.0;
    double d = std::min(0.05, 0.2 / slope);
    d = std::min(d, 0.3 / (std::max(smag, 1.0) * slope));
    return d;
}

// int_0^delta t^{z-1} dt and int_0^delta t^{z-1} log t dt
Complex power_int(Complex z, double logdelta) {
    return std::exp(z * logdelta) / z;
}
Complex power_int_log(Complex z, double logdelta) {
    Complex dz = std::exp(z * logdelta);
    return dz * (z * logdelta - 1.0) / (z * z);
}

struct PicardEval {
    Complex value;
    Complex deriv;
};

PicardEval picard_engine(Complex s, double x, const QuadratureConfig& cfg, bool want_deriv) {
    cfg.validate();
    if (!(s.real() > 1.0 / 3.0)) throw std::domain_error("picard_F requires Re(s) > 1/3");
    if (!(x > 0.0)) throw std::domain_error("picard_F requires x > 0");

    const double delta = pick_delta(s, x);
    const double logdelta = std::log(delta);
    const double log_half = std::log(0.5);

    // ---- head: exact power integrals of the series expansion on [0, delta]
    HeadPolys hp = head_polys(s, x);
    Complex head{0.0, 0.0}, head_d{0.0, 0.0};
    Complex q0s = std::exp(-s * log_half);  // (1/2)^{-s}
    for (int m = 0; m <= kHeadDegree; ++m) {
        Complex z1 = s - 1.0 / 3.0 + static_cast<double>(m);
        Complex z2 = s + 1.0 / 3.0 + static_cast<double>(m);
        Complex ii = power_int(z1, logdelta) + power_int(z2, logdelta);
        head += hp.c[m] * ii;
        if (want_deriv) {
            Complex aa = power_int_log(z1, logdelta) + power_int_log(z2, logdelta);
            head_d += hp.c[m] * aa - (log_half * hp.c[m] + hp.d[m]) * ii;
        }
    }
    head *= q0s;
    head_d *= q0s;

    // ---- tail on [delta, 1]
    auto Q = [x](double t) { return x * t + 0.5 * (t - 1.0) * (t - 1.0); };
    auto f_pair = [&](double t) -> std::pair<Complex, Complex> {
        double lt = std::log(t);
        double lq = std::log(Q(t));
        Complex v = std::exp((s - 4.0 / 3.0) * lt - s * lq) * (1.0 + std::cbrt(t * t));
        return {v, want_deriv ? v * (lt - lq) : Complex(0.0, 0.0)};
    };

    double tp = s.imag();
    Complex tail{0.0, 0.0}, tail_d{0.0, 0.0};
    if (std::abs(tp) <= 2.0) {
        tail = integrate([&](double t) { return f_pair(t).first; }, delta, 1.0, cfg);
        if (want_deriv)
            tail_d = integrate([&](double t) { return f_pair(t).second; }, delta, 1.0, cfg);
    } else {
        // walk cells bounded by half-periods of the phase
        // psi(t) = Im(s) (log t - log Q(t)); psi' = Im(s)(1-t^2)/(2 t Q(t))
        auto psi = [&](double t) { return tp * (std::log(t) - std::log(Q(t))); };
        auto rate = [&](double t) {
            return std::abs(tp) * std::abs(1.0 - t * t) / (2.0 * t * Q(t));
        };
        KahanSum acc, acc_d;
        double t0 = delta;
        double psi0 = psi(t0);
        while (t0 < 1.0) {
            double r = rate(t0);
            double dt = r > 1e-12 ? kPi / r : 0.1;
            dt = std::min(dt, 0.1);
            double t1 = std::min(t0 + dt, 1.0);
            double dt_min = 1e-13 * std::max(t0, 1e-6);
            while (t1 - t0 > dt_min && std::abs(psi(t1) - psi0) > 1.15 * kPi)
                t1 = t0 + 0.5 * (t1 - t0);
            if (t1 - t0 <= dt_min) t1 = t0 + dt_min;
            acc.add(kronrod15([&](double t) { return f_pair(t).first; }, t0, t1));
            if (want_deriv)
                acc_d.add(kronrod15([&](double t) { return f_pair(t).second; }, t0, t1));
            psi0 = psi(t1);
            t0 = t1;
        }
        tail = acc.value();
        tail_d = acc_d.value();
    }

    return {head + tail, head_d + tail_d};
}

} // namespace

Complex picard_F(Complex s, double x, const QuadratureConfig& cfg) {
    return picard_engine(s, x, cfg, false).value;
}

Complex picard_F_deriv(Complex s, double x, const QuadratureConfig& cfg) {
    return picard_engine(s, x, cfg, true).deriv;
}

std::pair<Complex, Complex> picard_F_with_deriv(Complex s, double x, const QuadratureConfig& cfg) {
    PicardEval e = picard_engine(s, x, cfg, true);
    return {e.value, e.deriv};
}

Complex binomial_expand_F(Complex s, double x, double x0, int K, const QuadratureConfig& cfg) {
    if (K < 0) throw std::domain_error("binomial_expand_F requires K >= 0");
    Complex acc{0.0, 0.0};
    Complex coef{1.0, 0.0};  // binom(-s, k)
    double prev_mag = 0.0;
    double dx = x - x0;
    for (int k = 0; k <= K; ++k) {
        Complex term = coef * std::pow(dx, k) * picard_F(s + static_cast<double>(k), x0, cfg);
        double mag = std::abs(term);
        if (k >= 2 && prev_mag > 0.0 && mag > prev_mag)
            throw std::runtime_error("binomial expansion of F is not converging");
        acc += term;
        prev_mag = mag;
        coef *= (-s - static_cast<double>(k)) / (k + 1.0);
    }
    return acc;
}

Complex saddle_asymptotic(double sigma, double t, double a) {
    if (t == 0.0) throw std::domain_error("saddle_asymptotic requires t != 0");
    if (!(a > 0.0)) throw std::domain_error("saddle_asymptotic requires a > 0");
    double amp = std::sqrt(2.0 * kPi / std::abs(t)) * 2.0 * std::pow(a, -sigma - 0.5);
    return amp * std::exp(Complex(0.0, -std::log(a) * t));
}

Complex cosh_integral(Complex w, double a, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(w.real() < -1.0 / 3.0)) throw std::domain_error("cosh_integral requires Re(w) < -1/3");
    if (!(a > 1.0)) throw std::domain_error("cosh_integral requires a > 1");
    // integrand ~ (e^u/2)^{Re w} e^{u/3}: decays at rate Re(w)+1/3 < 0
    double decay = -(w.real() + 1.0 / 3.0);
    double U = (-std::log(cfg.abs_tol) + 10.0) / decay * cfg.truncation_margin;
    auto f = [&](double u) {
        return std::pow(Complex(a + std::cosh(u), 0.0), w) * std::cosh(u / 3.0);
    };
    return integrate(f, 0.0, U, cfg);
}

} // namespace cpell
