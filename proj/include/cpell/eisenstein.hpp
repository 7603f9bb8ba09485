// eisenstein.hpp - exact arithmetic in Z[w], w = exp(2*pi*i/3), and in
// K = Q(sqrt(-3)).  Everything here is integer-exact; doubles appear only
// in the |.| helpers that feed the analytic layers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cpell {

using BigInt = boost::multiprecision::cpp_int;

// u + v*w with w^2 + w + 1 = 0.  norm(u+vw) = u^2 - uv + v^2 >= 0.
// lambda = 1 + 2w satisfies lambda^2 = -3 and generates the ramified prime.
class EisensteinInt {
public:
    EisensteinInt() : u_(0), v_(0) {}
    EisensteinInt(BigInt u, BigInt v) : u_(std::move(u)), v_(std::move(v)) {}
    EisensteinInt(long long u, long long v) : u_(u), v_(v) {}
    explicit EisensteinInt(long long u) : u_(u), v_(0) {}

    const BigInt& u() const { return u_; }
    const BigInt& v() const { return v_; }

    bool is_zero() const { return u_ == 0 && v_ == 0; }
    bool operator==(const EisensteinInt& o) const { return u_ == o.u_ && v_ == o.v_; }
    bool operator!=(const EisensteinInt& o) const { return !(*this == o); }

    EisensteinInt operator+(const EisensteinInt& o) const { return {u_ + o.u_, v_ + o.v_}; }
    EisensteinInt operator-(const EisensteinInt& o) const { return {u_ - o.u_, v_ - o.v_}; }
    EisensteinInt operator-() const { return {-u_, -v_}; }
    // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
    EisensteinInt operator*(const EisensteinInt& o) const {
        BigInt bd = v_ * o.v_;
        return {u_ * o.u_ - bd, u_ * o.v_ + v_ * o.u_ - bd};
    }

    std::complex<double> to_complex() const;

private:
    BigInt u_, v_;
};

inline const EisensteinInt& omega() {
    static const EisensteinInt w(0, 1);
    return w;
}
inline const EisensteinInt& lambda() {
    static const EisensteinInt l(1, 2);
    return l;
}
inline const EisensteinInt& one() {
    static const EisensteinInt o(1, 0);
    return o;
}

BigInt norm(const EisensteinInt& z);
EisensteinInt conj(const EisensteinInt& z);

// The six units 1, w, w^2, -1, -w, -w^2 in that index order.
const EisensteinInt& unit_by_index(int idx);
// Inverse lookup; -1 when z is not a unit.
int unit_index_of(const EisensteinInt& z);

// a/b when b | a exactly, otherwise empty.
std::optional<EisensteinInt> exact_div(const EisensteinInt& a, const EisensteinInt& b);

// Euclidean division with nearest-lattice-point quotient; |rem| < |b| always
// holds because Z[w] is norm-Euclidean.
std::pair<EisensteinInt, EisensteinInt> divmod(const EisensteinInt& a, const EisensteinInt& b);

EisensteinInt gcd(EisensteinInt a, EisensteinInt b);

// z = lambda^e * rest with lambda not dividing rest.  z must be nonzero.
std::pair<int, EisensteinInt> lambda_valuation(const EisensteinInt& z);

// m == 1 (mod 3), i.e. the distinguished associate class used throughout.
bool is_primary(const EisensteinInt& m);

// m coprime to lambda -> (unit_index, primary) with m = unit * primary.
// Exactly one associate of m is primary, so the pair is unique.
std::pair<int, EisensteinInt> unit_normalize(const EisensteinInt& m);

struct Factorization {
    EisensteinInt unit;    // one of the six units
    int lambda_exp = 0;
    std::vector<std::pair<EisensteinInt, int>> primes;  // primary, pairwise non-associate
};

// Factor m != 0 as unit * lambda^e * prod primes_i^{k_i}.  Implemented by
// factoring norm(m) over Z (smallest-prime-factor sieve / trial division)
// and lifting each rational prime: p = 1 (mod 3) splits as pi*conj(pi),
// p = 2 (mod 3) stays inert, 3 ramifies into lambda^2.
Factorization factor(const EisensteinInt& m);

bool is_squarefree(const EisensteinInt& m);

// m1 primary and coprime to lambda.  If every prime exponent k in m1 has
// k mod 3 in {0,1}: returns (a, b) primary with m1 = a*b^3 exactly and a
// squarefree.  Otherwise empty (the theta coefficient vanishes there).
std::optional<std::pair<EisensteinInt, EisensteinInt>> cube_split(const EisensteinInt& m1);

// All nonzero z with norm(z) <= R^2, each exactly once, ordered by
// (norm, angle).  count ~ (2*pi/sqrt(3)) * R^2.
std::vector<EisensteinInt> enumerate_disc(double R);

// Visit every (u,v) != (0,0) with u^2-uv+v^2 <= max_norm, unordered fast
// path for the truncated-series drivers.  f(u, v, norm_uv).
void for_each_in_disc(long long max_norm,
                      const std::function<void(long long, long long, long long)>& f);

// num / den in K with den != 0, kept reduced (gcd(num, den) a unit) and
// with a primary-or-unit denominator so equality is plain field equality.
class KRational {
public:
    KRational() : num_(0, 0), den_(1, 0) {}
    KRational(EisensteinInt num, EisensteinInt den);
    explicit KRational(EisensteinInt num) : num_(std::move(num)), den_(1, 0) {}

    const EisensteinInt& num() const { return num_; }
    const EisensteinInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    KRational operator+(const KRational& o) const;
    KRational operator-(const KRational& o) const;
    KRational operator*(const KRational& o) const;
    KRational operator/(const KRational& o) const;
    KRational operator-() const { return KRational(-num_, den_); }
    bool operator==(const KRational& o) const;

    // (q + conj(q))/2 as an exact rational p/q over Z, reduced, q > 0.
    std::pair<BigInt, BigInt> re_exact() const;

    std::complex<double> to_complex() const;

private:
    void reduce();
    EisensteinInt num_, den_;
};

// nu = num * lambda^{-3}; the index set of the theta Fourier coefficients.
class ThetaIndex {
public:
    ThetaIndex() : num_(0, 0) {}
    explicit ThetaIndex(EisensteinInt num) : num_(std::move(num)) {}

    const EisensteinInt& numerator() const { return num_; }
    bool is_zero() const { return num_.is_zero(); }

    // |nu| = norm(num)^{1/2} / 3^{3/2}
    double abs() const;
    BigInt norm_of_numerator() const { return norm(num_); }
    KRational to_krational() const;

    bool operator==(const ThetaIndex& o) const { return num_ == o.num_; }

private:
    EisensteinInt num_;
};

double to_double(const BigInt& x);

} // namespace cpell
