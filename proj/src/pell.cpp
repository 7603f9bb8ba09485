#include "cpell/pell.hpp"

#include "cpell/lfunctions.hpp"

#include <cmath>

namespace cpell {

namespace {

EisensteinInt pow_ei(const EisensteinInt& b, int k) {
    EisensteinInt r(1, 0);
    for (int i = 0; i < k; ++i) r = r * b;
    return r;
}

// lambda^k as an exact K-rational for any integer k
KRational lambda_pow(int k) {
    if (k >= 0) return KRational(pow_ei(lambda(), k));
    return KRational(EisensteinInt(1, 0), pow_ei(lambda(), -k));
}

// (m, x) with index = m x^3 for a single decomposition
std::pair<KRational, KRational> unfold(const TauDecomposition& dec) {
    EisensteinInt sign_unit = dec.sign > 0 ? EisensteinInt(1, 0) : EisensteinInt(-1, 0);
    if (dec.form == TauForm::F4) {
        // index = +- lambda^{3n-3} a b^3 = (+-a) (lambda^{n-1} b)^3
        KRational m(sign_unit * dec.a);
        KRational x = lambda_pow(dec.n - 1) * KRational(dec.b);
        return {m, x};
    }
    // index = +- w^j lambda^{3n-4} a b^3 = (+- w^j lambda^2 a) (lambda^{n-2} b)^3
    int j = dec.form == TauForm::F1 ? 0 : (dec.form == TauForm::F2 ? 1 : 2);
    KRational m(sign_unit * unit_by_index(j) * lambda() * lambda() * dec.a);
    KRational x = lambda_pow(dec.n - 2) * KRational(dec.b);
    return {m, x};
}

bool in_ring(const KRational& q) { return norm(q.den()) == 1; }

} // namespace

PellWitness witness_from_decompositions(int d, const ThetaIndex& nu,
                                        const TauDecomposition& dec_nu,
                                        const TauDecomposition& dec_succ) {
    require_cubefree_d(d);
    PellWitness w;
    w.nu = nu;
    w.dec_nu = dec_nu;
    w.dec_succ = dec_succ;
    auto [m, x] = unfold(dec_nu);
    auto [n, y] = unfold(dec_succ);
    w.m = m;
    w.x = x;
    w.n = n;
    w.y = y;

    KRational nu_q = nu.to_krational();
    KRational succ_q = nu_q * KRational(EisensteinInt(d, 0)) + KRational(EisensteinInt(1, 0));
    KRational x3 = x * x * x;
    KRational y3 = y * y * y;
    if (!(m * x3 == nu_q)) throw std::logic_error("pell witness: nu != m x^3");
    if (!(n * y3 == succ_q)) throw std::logic_error("pell witness: 1 + d nu != n y^3");
    KRational lhs = n * y3 - KRational(EisensteinInt(d, 0)) * m * x3;
    if (!(lhs == KRational(EisensteinInt(1, 0))))
        throw std::logic_error("pell witness: n y^3 - d m x^3 != 1");

    w.pure_integral = dec_nu.form == TauForm::F4 && dec_succ.form == TauForm::F4 &&
                      in_ring(x) && in_ring(y);
    return w;
}

std::vector<PellWitness> find_solutions(int d, double R) {
    require_cubefree_d(d);
    std::vector<PellWitness> out;
    const EisensteinInt l3 = lambda() * lambda() * lambda();
    // enumerate_disc yields (norm, angle)-sorted numerators
    for (const EisensteinInt& num : enumerate_disc(std::sqrt(27.0) * R)) {
        ThetaIndex nu{num};
        auto dec1 = tau_decompose(nu);
        if (!dec1) continue;
        EisensteinInt succ_num = l3 + EisensteinInt(d, 0) * num;
        if (succ_num.is_zero()) continue;
        auto dec2 = tau_decompose(ThetaIndex{succ_num});
        if (!dec2) continue;
        out.push_back(witness_from_decompositions(d, nu, *dec1, *dec2));
    }
    return out;
}

} // namespace cpell
