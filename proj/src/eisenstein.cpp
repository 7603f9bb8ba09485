#include "cpell/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace cpell {

namespace {
constexpr double kSqrt3Over2 = 0.8660254037844386467637231707529362;
} // namespace

double to_double(const BigInt& x) { return x.convert_to<double>(); }

std::complex<double> EisensteinInt::to_complex() const {
    // w = -1/2 + i sqrt(3)/2
    double uu = to_double(u_), vv = to_double(v_);
    return {uu - 0.5 * vv, kSqrt3Over2 * vv};
}

BigInt norm(const EisensteinInt& z) { return z.u() * z.u() - z.u() * z.v() + z.v() * z.v(); }

EisensteinInt conj(const EisensteinInt& z) { return {z.u() - z.v(), -z.v()}; }

const EisensteinInt& unit_by_index(int idx) {
    static const EisensteinInt units[6] = {
        {1, 0}, {0, 1}, {-1, -1}, {-1, 0}, {0, -1}, {1, 1}};
    if (idx < 0 || idx > 5) throw std::domain_error("unit index out of range");
    return units[idx];
}

int unit_index_of(const EisensteinInt& z) {
    for (int i = 0; i < 6; ++i)
        if (unit_by_index(i) == z) return i;
    return -1;
}

std::optional<EisensteinInt> exact_div(const EisensteinInt& a, const EisensteinInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Z[w]");
    BigInt nb = norm(b);
    EisensteinInt t = a * conj(b);
    if (t.u() % nb != 0 || t.v() % nb != 0) return std::nullopt;
    return EisensteinInt(t.u() / nb, t.v() / nb);
}

std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& a, const EisensteinInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Z[w]");
    BigInt nb = norm(b);
    EisensteinInt t = a * conj(b);
    // round t.u/nb and t.v/nb to nearest integers
    auto round_div = [](const BigInt& p, const BigInt& q) {
        // q > 0; nearest integer to p/q
        BigInt r = (2 * p + q) / (2 * q);
        if (2 * p + q < 0 && (2 * p + q) % (2 * q) != 0) r -= 1;
        return r;
    };
    EisensteinInt q(round_div(t.u(), nb), round_div(t.v(), nb));
    EisensteinInt r = a - b * q;
    // Nearest rounding already gives norm(r) <= (3/4) norm(b); adjust by a
    // unit shift of the quotient if rounding on both coordinates conspired.
    if (norm(r) >= nb) {
        for (int i = 0; i < 6; ++i) {
            EisensteinInt q2 = q + unit_by_index(i);
            EisensteinInt r2 = a - b * q2;
            if (norm(r2) < nb) return {q2, r2};
        }
        throw std::logic_error("euclidean step failed");
    }
    return {q, r};
}

EisensteinInt gcd(EisensteinInt a, EisensteinInt b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
    }
    return a;
}

std::pair<int, EisensteinInt> lambda_valuation(const EisensteinInt& z) {
    if (z.is_zero()) throw std::domain_error("lambda_valuation of zero");
    int e = 0;
    EisensteinInt cur = z;
    for (;;) {
        auto d = exact_div(cur, lambda());
        if (!d) return {e, cur};
        cur = *d;
        ++e;
    }
}

bool is_primary(const EisensteinInt& m) {
    return (m.u() - 1) % 3 == 0 && m.v() % 3 == 0;
}

std::pair<int, EisensteinInt> unit_normalize(const EisensteinInt& m) {
    if (m.is_zero() || norm(m) % 3 == 0)
        throw std::domain_error("unit_normalize requires gcd(m, lambda) = 1");
    for (int i = 0; i < 6; ++i) {
        auto p = exact_div(m, unit_by_index(i));
        if (p && is_primary(*p)) return {i, *p};
    }
    throw std::logic_error("no primary associate found");
}

// ---- rational-prime machinery ------------------------------------------

namespace {

// Smallest-prime-factor table, grown on demand.  Shared, guarded.
class SpfTable {
public:
    void ensure(std::uint64_t n) {
        std::lock_guard<std::mutex> lk(mu_);
        if (n < 2 || n < spf_.size()) return;
        std::size_t m = std::max<std::size_t>(static_cast<std::size_t>(n) + 1, 1 << 16);
        spf_.assign(m, 0);
        for (std::size_t i = 2; i < m; ++i) {
            if (spf_[i] == 0)
                for (std::size_t j = i; j < m; j += i)
                    if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
    // valid only after ensure(n)
    std::uint32_t spf(std::uint64_t n) const { return spf_[static_cast<std::size_t>(n)]; }
    std::uint64_t size() const { return spf_.size(); }

private:
    std::mutex mu_;
    std::vector<std::uint32_t> spf_;
};

SpfTable& spf_table() {
    static SpfTable t;
    return t;
}

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    auto& tab = spf_table();
    if (n < (1ull << 26)) {
        tab.ensure(n);
        while (n > 1) {
            std::uint64_t p = tab.spf(n);
            int k = 0;
            while (n % p == 0) { n /= p; ++k; }
            out.emplace_back(p, k);
        }
        return out;
    }
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int k = 0;
            while (n % d == 0) { n /= d; ++k; }
            out.emplace_back(d, k);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Primary prime above split p = 1 (mod 3), memoized.
const EisensteinInt& split_prime_above(std::uint64_t p) {
    static std::mutex mu;
    static std::map<std::uint64_t, EisensteinInt> memo;
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    // solve u^2 - uv + v^2 = p by scanning u
    long long pl = static_cast<long long>(p);
    for (long long u = 0;; ++u) {
        long long disc = 4 * pl - 3 * u * u;
        if (disc < 0) break;
        long long r = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
        while (r * r > disc) --r;
        while ((r + 1) * (r + 1) <= disc) ++r;
        if (r * r != disc) continue;
        for (long long uu : {u, -u}) {
            for (long long vv : {(uu + r) / 2, (uu - r) / 2}) {
                EisensteinInt z(uu, vv);
                if (norm(z) == p) {
                    auto [idx, prim] = unit_normalize(z);
                    (void)idx;
                    return memo.emplace(p, prim).first->second;
                }
            }
        }
    }
    throw std::logic_error("no Eisenstein prime above split p");
}

} // namespace

Factorization factor(const EisensteinInt& m) {
    if (m.is_zero()) throw std::domain_error("factor(0)");
    Factorization f;
    auto [e, rest] = lambda_valuation(m);
    f.lambda_exp = e;
    BigInt n = norm(rest);
    if (n == 1) {
        f.unit = rest;
        return f;
    }
    std::uint64_t n64 = n.convert_to<std::uint64_t>();
    EisensteinInt cur = rest;
    for (auto [p, k] : factor_u64(n64)) {
        if (p % 3 == 2) {
            // inert; -p is the primary associate of p (p = 2 mod 3)
            EisensteinInt q(-static_cast<long long>(p), 0);
            int kk = k / 2;
            f.primes.emplace_back(q, kk);
            for (int i = 0; i < kk; ++i) cur = *exact_div(cur, q);
        } else {
            // split; decide exponents of pi and conj(pi) by exact division
            const EisensteinInt& pi = split_prime_above(p);
            EisensteinInt pib = unit_normalize(conj(pi)).second;
            for (const EisensteinInt& pr : {pi, pib}) {
                int kk = 0;
                for (;;) {
                    auto d = exact_div(cur, pr);
                    if (!d) break;
                    cur = *d;
                    ++kk;
                }
                if (kk > 0) f.primes.emplace_back(pr, kk);
            }
        }
    }
    if (norm(cur) != 1) throw std::logic_error("factor: nonunit cofactor");
    f.unit = cur;
    return f;
}

bool is_squarefree(const EisensteinInt& m) {
    Factorization f = factor(m);
    if (f.lambda_exp > 1) return false;
    for (auto& [p, k] : f.primes)
        if (k > 1) return false;
    return true;
}

std::optional<std::pair<EisensteinInt, EisensteinInt>> cube_split(const EisensteinInt& m1) {
    if (m1.is_zero() || norm(m1) % 3 == 0 || !is_primary(m1))
        throw std::domain_error("cube_split requires m1 primary and coprime to lambda");
    Factorization f = factor(m1);
    EisensteinInt a(1, 0), b(1, 0);
    for (auto& [pi, k] : f.primes) {
        int r = k % 3;
        if (r == 2) return std::nullopt;
        if (r == 1) a = a * pi;
        for (int i = 0; i < k / 3; ++i) b = b * pi;
    }
    return std::make_pair(a, b);
}

void for_each_in_disc(long long max_norm,
                      const std::function<void(long long, long long, long long)>& f) {
    if (max_norm < 1) return;
    // u^2 - uv + v^2 <= N  =>  |u| <= 2 sqrt(N/3), v in [(u - r)/2, (u + r)/2]
    long long U = static_cast<long long>(std::floor(2.0 * std::sqrt(max_norm / 3.0))) + 2;
    for (long long u = -U; u <= U; ++u) {
        double disc = 4.0 * max_norm - 3.0 * static_cast<double>(u) * u;
        if (disc < 0) continue;
        long long r = static_cast<long long>(std::sqrt(disc));
        while (3 * u * u + r * r > 4 * max_norm && r > 0) --r;
        while (3 * u * u + (r + 1) * (r + 1) <= 4 * max_norm) ++r;
        auto floordiv2 = [](long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); };
        auto ceildiv2 = [](long long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); };
        long long vlo = ceildiv2(u - r);
        long long vhi = floordiv2(u + r);
        for (long long v = vlo; v <= vhi; ++v) {
            long long nrm = u * u - u * v + v * v;
            if (nrm == 0 || nrm > max_norm) continue;
            f(u, v, nrm);
        }
    }
}

std::vector<EisensteinInt> enumerate_disc(double R) {
    if (R < 1.0) throw std::domain_error("enumerate_disc requires R >= 1");
    long long max_norm = static_cast<long long>(std::floor(R * R * (1 + 1e-12)));
    std::vector<std::tuple<long long, double, long long, long long>> pts;
    for_each_in_disc(max_norm, [&](long long u, long long v, long long nrm) {
        double ang = std::atan2(kSqrt3Over2 * v, u - 0.5 * v);
        if (ang < 0) ang += 2 * 3.14159265358979323846;
        pts.emplace_back(nrm, ang, u, v);
    });
    std::sort(pts.begin(), pts.end());
    std::vector<EisensteinInt> out;
    out.reserve(pts.size());
    for (auto& [n, a, u, v] : pts) out.emplace_back(u, v);
    return out;
}

// ---- KRational -----------------------------------------------------------

KRational::KRational(EisensteinInt num, EisensteinInt den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("KRational with zero denominator");
    reduce();
}

void KRational::reduce() {
    EisensteinInt g = gcd(num_, den_);
    if (!g.is_zero() && norm(g) > 1) {
        num_ = *exact_div(num_, g);
        den_ = *exact_div(den_, g);
    }
    // normalize denominator: primary when possible, else positive lambda-power form
    if (num_.is_zero()) { den_ = EisensteinInt(1, 0); return; }
    auto [e, rest] = lambda_valuation(den_);
    auto [idx, prim] = unit_normalize(rest);
    (void)prim;
    if (idx != 0) {
        // multiply num and den by unit^{-1}: den becomes lambda^e * primary
        const EisensteinInt& u = unit_by_index(idx);
        // u^{-1} = conj within units: find index j with u*units[j] = 1
        for (int j = 0; j < 6; ++j) {
            if ((u * unit_by_index(j)) == EisensteinInt(1, 0)) {
                num_ = num_ * unit_by_index(j);
                den_ = den_ * unit_by_index(j);
                break;
            }
        }
    }
}

KRational KRational::operator+(const KRational& o) const {
    return KRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
KRational KRational::operator-(const KRational& o) const {
    return KRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
KRational KRational::operator*(const KRational& o) const {
    return KRational(num_ * o.num_, den_ * o.den_);
}
KRational KRational::operator/(const KRational& o) const {
    if (o.num_.is_zero()) throw std::domain_error("division by zero in K");
    return KRational(num_ * o.den_, den_ * o.num_);
}
bool KRational::operator==(const KRational& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

std::pair<BigInt, BigInt> KRational::re_exact() const {
    // Re(num/den) = Re(num * conj(den)) / norm(den); Re(a+bw) = a - b/2
    EisensteinInt t = num_ * conj(den_);
    BigInt p = 2 * t.u() - t.v();  // 2*Re
    BigInt q = 2 * norm(den_);
    BigInt g = boost::multiprecision::gcd(p < 0 ? BigInt(-p) : p, q);
    if (g > 1) { p /= g; q /= g; }
    return {p, q};
}

std::complex<double> KRational::to_complex() const {
    return num_.to_complex() / den_.to_complex();
}

// ---- ThetaIndex ----------------------------------------------------------

double ThetaIndex::abs() const {
    return std::sqrt(to_double(norm(num_)) / 27.0);
}

KRational ThetaIndex::to_krational() const {
    const EisensteinInt l3 = lambda() * lambda() * lambda();
    return KRational(num_, l3);
}

} // namespace cpell
