#include "cpell/gauss_sums.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

namespace cpell {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_modulus(const EisensteinInt& a) {
    if (a.is_zero() || !is_primary(a) || norm(a) % 3 == 0)
        throw std::domain_error("gauss_sum modulus must be primary and coprime to lambda");
    if (!is_squarefree(a)) throw std::domain_error("gauss_sum modulus must be squarefree");
}

long long mulmod(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long powmod(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// symbol tables per prime: value 255 = numerator shares the prime,
// otherwise the omega-power 0/1/2
struct SplitTable {
    long long p;
    long long omega_image;  // image of w in F_p picked by the chosen prime
    std::vector<unsigned char> val;  // indexed by the F_p class
};

struct InertTable {
    long long q;
    std::vector<unsigned char> val;  // indexed by x + q*y, x,y in [0,q)
};

struct PrimeSymbol {
    bool inert;
    SplitTable split;
    InertTable in;
};

// one table per primary prime, cached process-wide
class SymbolTables {
public:
    const PrimeSymbol& get(const EisensteinInt& pi) {
        std::string key = pi.u().str() + "|" + pi.v().str();
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, build(pi)).first->second;
    }

private:
    static PrimeSymbol build(const EisensteinInt& pi) {
        PrimeSymbol ps;
        ps.inert = (pi.v() == 0);
        if (!ps.inert) {
            long long p = norm(pi).convert_to<long long>();
            long long u = pi.u().convert_to<long long>() % p;
            long long v = pi.v().convert_to<long long>() % p;
            if (u < 0) u += p;
            if (v < 0) v += p;
            // w = -u / v in F_p
            long long vin = powmod(v, p - 2, p);
            long long w = mulmod(p - u, vin, p);
            SplitTable t;
            t.p = p;
            t.omega_image = w;
            t.val.assign(static_cast<std::size_t>(p), 0);
            long long w2 = mulmod(w, w, p);
            long long e = (p - 1) / 3;
            t.val[0] = 255;
            for (long long j = 1; j < p; ++j) {
                long long r = powmod(j, e, p);
                if (r == 1) t.val[static_cast<std::size_t>(j)] = 0;
                else if (r == w) t.val[static_cast<std::size_t>(j)] = 1;
                else if (r == w2) t.val[static_cast<std::size_t>(j)] = 2;
                else throw std::logic_error("cubic character value out of range");
            }
            ps.split = std::move(t);
        } else {
            long long q = -pi.u().convert_to<long long>();
            InertTable t;
            t.q = q;
            t.val.assign(static_cast<std::size_t>(q * q), 255);
            // modexp in F_{q^2} = {x + y w}, exponent (q^2-1)/3
            long long e = (q * q - 1) / 3;
            auto mul = [q](std::pair<long long, long long> a, std::pair<long long, long long> b) {
                long long bd = a.second * b.second % q;
                long long x = (a.first * b.first - bd % q + q * q) % q;
                long long y = (a.first * b.second + a.second * b.first - bd % q + 2 * q * q) % q;
                return std::pair<long long, long long>{x, y};
            };
            // images of 1, w, w^2 in the indexing
            auto idx = [q](std::pair<long long, long long> z) {
                return static_cast<std::size_t>(z.first + q * z.second);
            };
            for (long long x = 0; x < q; ++x) {
                for (long long y = 0; y < q; ++y) {
                    if (x == 0 && y == 0) continue;
                    std::pair<long long, long long> base{x, y}, r{1, 0};
                    long long ee = e;
                    while (ee > 0) {
                        if (ee & 1) r = mul(r, base);
                        base = mul(base, base);
                        ee >>= 1;
                    }
                    unsigned char v;
                    if (r == std::pair<long long, long long>{1, 0}) v = 0;
                    else if (r == std::pair<long long, long long>{0, 1}) v = 1;
                    else if (r == std::pair<long long, long long>{q - 1, q - 1}) v = 2;
                    else throw std::logic_error("cubic character value out of range");
                    t.val[idx({x, y})] = v;
                }
            }
            ps.in = std::move(t);
        }
        return ps;
    }

    std::mutex mu_;
    std::map<std::string, PrimeSymbol> cache_;
};

SymbolTables& symbol_tables() {
    static SymbolTables t;
    return t;
}

// residue transversal of a as the box {x + y w : 0 <= x < d1, 0 <= y < d2}
// from the Hermite form of the lattice spanned by a and a*w
std::pair<long long, long long> residue_box(long long u, long long v, long long na) {
    long long d2 = std::gcd(std::llabs(v), std::llabs(u - v));
    if (d2 == 0) d2 = 1;
    return {na / d2, d2};
}

std::complex<double> gauss_sum_fast(const EisensteinInt& mu, const EisensteinInt& a) {
    long long na = norm(a).convert_to<long long>();
    long long au = a.u().convert_to<long long>();
    long long av = a.v().convert_to<long long>();

    struct LocalPrime {
        bool inert;
        long long p;            // split: p; inert: q
        long long omega_image;  // split only
        const unsigned char* table;
    };
    std::vector<LocalPrime> primes;
    for (auto& [pi, k] : factor(a).primes) {
        (void)k;
        const PrimeSymbol& ps = symbol_tables().get(pi);
        LocalPrime lp;
        lp.inert = ps.inert;
        if (ps.inert) {
            lp.p = ps.in.q;
            lp.omega_image = 0;
            lp.table = ps.in.val.data();
        } else {
            lp.p = ps.split.p;
            lp.omega_image = ps.split.omega_image;
            lp.table = ps.split.val.data();
        }
        primes.push_back(lp);
    }

    // phase data: e(mu beta / a) = exp(2 pi i * (2 Re(mu beta conj(a))) / na)
    EisensteinInt t = mu * conj(a);
    long long tu = t.u().convert_to<long long>();
    long long tv = t.v().convert_to<long long>();

    auto [d1, d2] = residue_box(au, av, na);

    const std::complex<double> omega_pow[3] = {
        {1.0, 0.0},
        {-0.5, 0.8660254037844386467637231707529362},
        {-0.5, -0.8660254037844386467637231707529362}};

    std::complex<double> acc{0.0, 0.0};
    for (long long y = 0; y < d2; ++y) {
        for (long long x = 0; x < d1; ++x) {
            // symbol of beta = x + y w
            int wpow = 0;
            bool zero = false;
            for (const LocalPrime& lp : primes) {
                if (!lp.inert) {
                    long long j = (x + y % lp.p * lp.omega_image) % lp.p;
                    unsigned char s = lp.table[static_cast<std::size_t>(j)];
                    if (s == 255) { zero = true; break; }
                    wpow += s;
                } else {
                    long long xx = x % lp.p, yy = y % lp.p;
                    unsigned char s = lp.table[static_cast<std::size_t>(xx + lp.p * yy)];
                    if (s == 255) { zero = true; break; }
                    wpow += s;
                }
            }
            if (zero) continue;
            // 2 Re(t * beta) for beta = x + y w:
            // t*beta = (tu x - tv y) + (tu y + tv x - tv y) w
            long long wu = tu * x - tv * y;
            long long wv = tu * y + tv * x - tv * y;
            long long num = (2 * wu - wv) % na;
            if (num < 0) num += na;
            acc += omega_pow[wpow % 3] * std::polar(1.0, kTwoPi * static_cast<double>(num) /
                                                             static_cast<double>(na));
        }
    }
    return acc;
}

} // namespace

std::complex<double> gauss_sum(const EisensteinInt& mu, const EisensteinInt& a) {
    check_modulus(a);
    if (norm(a) == 1) return {1.0, 0.0};
    // int64 fast path covers every desk-scale modulus; the coordinate
    // products stay far below the overflow line for norm(a) <= 5e7
    if (norm(a) <= 50000000 && norm(mu) <= 10000) return gauss_sum_fast(mu, a);
    std::complex<double> acc{0.0, 0.0};
    for (const EisensteinInt& beta : residues_mod(a)) {
        CubicSymbolValue chi = cubic_symbol(beta, a);
        if (chi.zero) continue;
        acc += chi.to_complex() * e_char(KRational(mu * beta, a));
    }
    return acc;
}

std::complex<double> gauss_sum_general(const ThetaIndex& mu, const EisensteinInt& a) {
    check_modulus(a);
    if (norm(a) == 1) return {1.0, 0.0};
    // 3 mu = num * 3 / lambda^3 = num * lambda / 3   (3/lambda^3 = lambda/3)
    const EisensteinInt& num = mu.numerator();
    const EisensteinInt three(3, 0);
    std::complex<double> acc{0.0, 0.0};
    for (const EisensteinInt& beta : residues_mod(a)) {
        CubicSymbolValue chi = cubic_symbol(three * beta, a);
        if (chi.zero) continue;
        KRational phase(num * lambda() * beta, three * a);
        acc += chi.to_complex() * e_char(phase);
    }
    return acc;
}

} // namespace cpell
