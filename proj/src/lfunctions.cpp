#include "cpell/lfunctions.hpp"

#include "cpell/gauss_sums.hpp"
#include "cpell/specfun.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cpell {

namespace {

// Bernoulli B_{2j} for the Euler-Maclaurin tail
constexpr double kB2j[] = {1.0 / 6,   -1.0 / 30,  1.0 / 42,   -1.0 / 30,  5.0 / 66,
                           -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};

// Hurwitz zeta(s, a) for real s > 1, 0 < a <= 1, Euler-Maclaurin with 10
// correction terms.
double hurwitz_zeta(double s, double a) {
    const int N = 40;
    double acc = 0.0;
    for (int k = 0; k < N; ++k) acc += std::pow(k + a, -s);
    double na = N + a;
    acc += std::pow(na, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(na, -s);
    double spow = s;  // (s)_{2j-1} running product
    double napow = std::pow(na, -s - 1.0);
    double fact2j = 2.0;  // (2j)!
    for (int j = 1; j <= 10; ++j) {
        acc += kB2j[j - 1] / fact2j * spow * napow;
        spow *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        napow /= na * na;
        fact2j *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return acc;
}

EisensteinInt lambda_cubed() { return lambda() * lambda() * lambda(); }

// cache of Gauss sums keyed by (mu class, a); classes 0..3 correspond to
// lambda^2, w lambda^2, w^2 lambda^2, 1.
class GaussCache {
public:
    std::complex<double> get(int cls, const EisensteinInt& a) {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = map_.find(key(cls, a));
            if (it != map_.end()) return it->second;
        }
        const EisensteinInt lam2 = lambda() * lambda();
        EisensteinInt arg;
        switch (cls) {
            case 0: arg = lam2; break;
            case 1: arg = omega() * lam2; break;
            case 2: arg = omega() * omega() * lam2; break;
            default: arg = EisensteinInt(1, 0); break;
        }
        std::complex<double> v = gauss_sum(arg, a);
        std::lock_guard<std::mutex> lk(mu_);
        return map_.emplace(key(cls, a), v).first->second;
    }

private:
    static std::string key(int cls, const EisensteinInt& a) {
        return std::to_string(cls) + "|" + a.u().str() + "|" + a.v().str();
    }
    std::mutex mu_;
    std::map<std::string, std::complex<double>> map_;
};

GaussCache& gauss_cache() {
    static GaussCache c;
    return c;
}

constexpr double kPi = 3.14159265358979323846264338327950288;

std::complex<double> tau_from_dec(const TauDecomposition& dec) {
    double abs_b_over_a = std::sqrt(to_double(norm(dec.b)) / to_double(norm(dec.a)));
    std::complex<double> g;
    double scale;
    std::complex<double> phase{1.0, 0.0};
    switch (dec.form) {
        case TauForm::F1:
            g = gauss_cache().get(0, dec.a);
            scale = std::pow(3.0, dec.n / 2.0 + 2.0);
            break;
        case TauForm::F2:
            g = gauss_cache().get(1, dec.a);
            scale = std::pow(3.0, dec.n / 2.0 + 2.0);
            phase = std::polar(1.0, -2.0 * kPi / 9.0);
            break;
        case TauForm::F3:
            g = gauss_cache().get(2, dec.a);
            scale = std::pow(3.0, dec.n / 2.0 + 2.0);
            phase = std::polar(1.0, 2.0 * kPi / 9.0);
            break;
        case TauForm::F4:
        default:
            g = gauss_cache().get(3, dec.a);
            scale = std::pow(3.0, (dec.n + 5) / 2.0);
            break;
    }
    return phase * std::conj(g) * abs_b_over_a * scale;
}

// shared driver over the support pairs (nu, 1 + d nu)
template <typename TermFn>
TruncatedSum support_sum(int d, double R, TermFn&& term) {
    require_cubefree_d(d);
    TruncatedSum out;
    out.radius = R;
    long long max_norm = static_cast<long long>(std::floor(27.0 * R * R * (1 + 1e-12)));
    const EisensteinInt l3 = lambda_cubed();
    KahanSum acc;
    for_each_in_disc(max_norm, [&](long long u, long long v, long long) {
        ++out.terms_total;
        ThetaIndex nu{EisensteinInt(u, v)};
        auto dec1 = tau_decompose(nu);
        if (!dec1) return;
        EisensteinInt succ_num = l3 + EisensteinInt(d, 0) * nu.numerator();
        if (succ_num.is_zero()) return;
        ThetaIndex succ{succ_num};
        auto dec2 = tau_decompose(succ);
        if (!dec2) return;
        ++out.terms_nonzero;
        acc.add(term(nu, *dec1, succ, *dec2));
    });
    out.value = acc.value();
    return out;
}

} // namespace

void require_cubefree_d(int d) {
    if (d <= 1) throw std::domain_error("d must be a cubefree integer > 1");
    for (int p = 2; p * p * p <= d; ++p)
        if (d % (p * p * p) == 0) throw std::domain_error("d must be cubefree");
}

double a_d(int d, const ThetaIndex& nu) {
    require_cubefree_d(d);
    if (nu.is_zero()) throw std::domain_error("a_d requires nu != 0");
    EisensteinInt succ = lambda_cubed() + EisensteinInt(d, 0) * nu.numerator();
    if (succ.is_zero()) throw std::domain_error("a_d requires 1 + d nu != 0");
    BigInt n1 = norm(nu.numerator());
    BigInt n2 = norm(succ);
    // (n1/27 + n2/27 - 1) / (2 sqrt(n1 n2)/27) = (n1 + n2 - 27)/(2 sqrt(n1 n2))
    return to_double(n1 + n2 - 27) / (2.0 * std::sqrt(to_double(n1 * n2)));
}

TruncatedSum L_d_truncated(int d, std::complex<double> s, double R, const QuadratureConfig&) {
    return support_sum(d, R, [&](const ThetaIndex& nu, const TauDecomposition& d1,
                                 const ThetaIndex& succ, const TauDecomposition& d2) {
        double mag2 = to_double(norm(nu.numerator()) * norm(succ.numerator())) / 729.0;
        // |nu (1+d nu)|^{-s} = exp(-s/2 * log |.|^2), real positive log
        std::complex<double> w = std::exp(-0.5 * s * std::log(mag2));
        return tau_from_dec(d1) * std::conj(tau_from_dec(d2)) * w;
    });
}

TruncatedSum L_d_star_truncated(int d, std::complex<double> s, double R, const QuadratureConfig&) {
    double center = (static_cast<double>(d) * d + 1.0) / (2.0 * d);
    return support_sum(d, R, [&](const ThetaIndex& nu, const TauDecomposition& d1,
                                 const ThetaIndex& succ, const TauDecomposition& d2) {
        double mag2 = to_double(norm(nu.numerator()) * norm(succ.numerator())) / 729.0;
        std::complex<double> w = std::exp(-0.5 * s * std::log(mag2));
        return tau_from_dec(d1) * std::conj(tau_from_dec(d2)) * w * (a_d(d, nu) - center);
    });
}

TruncatedSum L_d_sharp_truncated(int d, std::complex<double> s, double R,
                                 const QuadratureConfig& cfg) {
    if (!(s.real() > 1.0 / 3.0))
        throw std::domain_error("L_d_sharp_truncated requires Re(s) > 1/3");
    double x = (static_cast<double>(d) + 1.0) * (d + 1.0) / (2.0 * d);
    TruncatedSum l = L_d_truncated(d, s, R, cfg);
    TruncatedSum lstar = L_d_star_truncated(d, s, R, cfg);
    TruncatedSum out = l;
    out.value = picard_F(s, x, cfg) * l.value - s * picard_F(s + 1.0, x, cfg) * lstar.value;
    return out;
}

TruncatedSum S_d_bessel_truncated(int d, std::complex<double> s, double R,
                                  const QuadratureConfig& cfg) {
    if (!(s.real() > 1.0 / 3.0))
        throw std::domain_error("S_d_bessel_truncated requires Re(s) > 1/3");
    // per-term substitution y -> y/(4 pi) reduces each integral to
    // (4 pi)^{-2s} * int K_{1/3}(|nu| y) K_{1/3}(|1+d nu| y) e^{-y} y^{2s} dy/y
    std::complex<double> pref = std::exp(-2.0 * s * std::log(4.0 * kPi));
    return support_sum(d, R, [&](const ThetaIndex& nu, const TauDecomposition& d1,
                                 const ThetaIndex& succ, const TauDecomposition& d2) {
        double m = nu.abs();
        double n = succ.abs();
        std::complex<double> integral = kk_laplace_integral(1.0 / 3.0, m, n, s, cfg);
        return tau_from_dec(d1) * std::conj(tau_from_dec(d2)) * pref * integral;
    });
}

double zeta_K(double s) {
    if (!(s > 1.0)) throw std::domain_error("zeta_K requires s > 1");
    double z = hurwitz_zeta(s, 1.0);
    // L(s, chi_-3) as the paired series sum_k [(3k+1)^{-s} - (3k+2)^{-s}],
    // which is 3^{-s} (zeta(s,1/3) - zeta(s,2/3)) summed by Euler-Maclaurin.
    double l = std::pow(3.0, -s) * (hurwitz_zeta(s, 1.0 / 3.0) - hurwitz_zeta(s, 2.0 / 3.0));
    return z * l;
}

double hjl_rhs(double s) {
    if (!(s > 1.0) || !(3.0 * s - 1.0 > 1.0)) throw std::domain_error("hjl_rhs requires s > 1");
    return 2.0 * std::pow(3.0, 5.0 + 3.0 * s) * (1.0 + std::pow(3.0, 1.0 - 2.0 * s)) *
           (1.0 - std::pow(3.0, -s)) * zeta_K(3.0 * s - 1.0) * zeta_K(s) /
           ((1.0 - std::pow(3.0, -2.0 * s)) * zeta_K(2.0 * s));
}

TruncatedSum hjl_lhs_truncated(double s, double R, int threads) {
    if (!(s > 1.0)) throw std::domain_error("hjl_lhs_truncated requires s > 1");
    if (threads < 1) threads = 1;
    TruncatedSum out;
    out.radius = R;
    long long max_norm = static_cast<long long>(std::floor(27.0 * R * R * (1 + 1e-12)));
    long long U = static_cast<long long>(std::floor(2.0 * std::sqrt(max_norm / 3.0))) + 2;

    // fixed column chunks so the reduction order is independent of the
    // thread count
    const long long chunk_cols = 64;
    long long n_chunks = (2 * U + 1 + chunk_cols - 1) / chunk_cols;
    struct ChunkResult {
        KahanSum sum;
        std::int64_t total = 0, nonzero = 0;
    };
    std::vector<ChunkResult> results(static_cast<std::size_t>(n_chunks));

    auto run_chunk = [&](long long ci) {
        ChunkResult& r = results[static_cast<std::size_t>(ci)];
        long long ulo = -U + ci * chunk_cols;
        long long uhi = std::min(U, ulo + chunk_cols - 1);
        for (long long u = ulo; u <= uhi; ++u) {
            double disc = 4.0 * max_norm - 3.0 * static_cast<double>(u) * u;
            if (disc < 0) continue;
            long long rr = static_cast<long long>(std::sqrt(disc));
            while (3 * u * u + rr * rr > 4 * max_norm && rr > 0) --rr;
            while (3 * u * u + (rr + 1) * (rr + 1) <= 4 * max_norm) ++rr;
            auto floordiv2 = [](long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
            auto ceildiv2 = [](long long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); };
            for (long long v = ceildiv2(u - rr); v <= floordiv2(u + rr); ++v) {
                long long nrm = u * u - u * v + v * v;
                if (nrm == 0 || nrm > max_norm) continue;
                ++r.total;
                ThetaIndex nu{EisensteinInt(u, v)};
                auto dec = tau_decompose(nu);
                if (!dec) continue;
                ++r.nonzero;
                double t2 = tau_abs_squared(*dec);
                r.sum.add(t2 * std::pow(static_cast<double>(nrm) / 27.0, -s));
            }
        }
    };

    if (threads == 1) {
        for (long long ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
    } else {
        std::atomic<long long> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    long long ci = next.fetch_add(1);
                    if (ci >= n_chunks) return;
                    run_chunk(ci);
                }
            });
        for (auto& th : pool) th.join();
    }
    KahanSum total;
    for (auto& r : results) {
        total.add(r.sum.value());
        out.terms_total += r.total;
        out.terms_nonzero += r.nonzero;
    }
    out.value = total.value();
    return out;
}

double hjl_tail_majorant(double s, double R) {
    // |tau(nu)|^2 <= 3^7 |nu|^{2/3} and at most 22 q + O(sqrt q) indices with
    // |nu|^2 in [q, q+1); summing shells out to infinity:
    // tail(R) <= 3^7 * 25 * sum_{q >= R^2} q^{1/3 + 1 - s} <= C R^{2(4/3 - s) + 2}/(...)
    double expo = 4.0 / 3.0 - s;  // per-|nu|^2 power after the |tau|^2 bound
    if (expo + 1.0 >= 0.0) return std::numeric_limits<double>::infinity();
    double q0 = R * R;
    return 2187.0 * 25.0 * std::pow(q0, expo + 1.0) / (-(expo + 1.0));
}

double ld_tail_majorant(int d, double s_re, double R) {
    // |tau(nu) tau(1+d nu)| <= 3^7 (|nu| |1+d nu|)^{1/3} and
    // |1+d nu| >= d|nu| - 1 >= |nu| for |nu| >= 2/(d-1) <= 2
    double expo = 2.0 * (1.0 / 3.0 - s_re);  // power of |nu| per term
    if (expo + 2.0 >= 0.0) return std::numeric_limits<double>::infinity();
    (void)d;
    double c = 2187.0 * 25.0;
    return c * std::pow(R, expo + 2.0) / (-(expo + 2.0) / 2.0);
}

} // namespace cpell
