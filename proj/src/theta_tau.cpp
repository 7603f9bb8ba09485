#include "cpell/theta_tau.hpp"

#include "cpell/gauss_sums.hpp"

#include <cmath>

namespace cpell {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

EisensteinInt pow_ei(const EisensteinInt& b, int k) {
    EisensteinInt r(1, 0);
    for (int i = 0; i < k; ++i) r = r * b;
    return r;
}

} // namespace

double sigma_constant() { return 4.5 * std::sqrt(3.0); }

EisensteinInt TauDecomposition::reconstruct_numerator() const {
    // numerator of nu is nu * lambda^3, so exponent e + 3 of lambda
    int e = (form == TauForm::F4) ? 3 * n - 3 : 3 * n - 4;
    int j = 0;
    if (form == TauForm::F2) j = 1;
    if (form == TauForm::F3) j = 2;
    EisensteinInt r = pow_ei(lambda(), e + 3) * unit_by_index(j) * a * pow_ei(b, 3);
    return sign > 0 ? r : -r;
}

std::optional<TauDecomposition> tau_decompose(const ThetaIndex& nu) {
    if (nu.is_zero()) return std::nullopt;
    auto [E, rest] = lambda_valuation(nu.numerator());
    int e = E - 3;  // lambda-valuation of nu itself; e >= -3
    if (((e % 3) + 3) % 3 == 1) return std::nullopt;
    auto [uidx, m1] = unit_normalize(rest);
    auto ab = cube_split(m1);
    if (!ab) return std::nullopt;
    int j = uidx % 3;          // w-power of the residual unit
    int sign = uidx < 3 ? 1 : -1;
    TauDecomposition dec;
    dec.sign = sign;
    dec.a = ab->first;
    dec.b = ab->second;
    if (((e % 3) + 3) % 3 == 0) {
        // F4 admits only the units +-1
        if (j != 0) return std::nullopt;
        dec.form = TauForm::F4;
        dec.n = (e + 3) / 3;
        if (dec.n < 0) return std::nullopt;
    } else {
        dec.form = j == 0 ? TauForm::F1 : (j == 1 ? TauForm::F2 : TauForm::F3);
        dec.n = (e + 4) / 3;
        if (dec.n < 1) return std::nullopt;
    }
    return dec;
}

std::complex<double> tau(const ThetaIndex& nu) {
    auto dec = tau_decompose(nu);
    if (!dec) return {0.0, 0.0};

    double abs_b_over_a = std::sqrt(to_double(norm(dec->b)) / to_double(norm(dec->a)));
    const EisensteinInt lam2 = lambda() * lambda();
    std::complex<double> g;
    double scale;
    std::complex<double> phase{1.0, 0.0};
    switch (dec->form) {
        case TauForm::F1:
            g = gauss_sum(lam2, dec->a);
            scale = std::pow(3.0, dec->n / 2.0 + 2.0);
            break;
        case TauForm::F2:
            g = gauss_sum(omega() * lam2, dec->a);
            scale = std::pow(3.0, dec->n / 2.0 + 2.0);
            phase = std::polar(1.0, -2.0 * kPi / 9.0);
            break;
        case TauForm::F3:
            g = gauss_sum(omega() * omega() * lam2, dec->a);
            scale = std::pow(3.0, dec->n / 2.0 + 2.0);
            phase = std::polar(1.0, 2.0 * kPi / 9.0);
            break;
        case TauForm::F4:
        default:
            g = gauss_sum(EisensteinInt(1, 0), dec->a);
            scale = std::pow(3.0, (dec->n + 5) / 2.0);
            break;
    }
    return phase * std::conj(g) * abs_b_over_a * scale;
}

double tau_abs_squared(const TauDecomposition& dec) {
    double nb = to_double(norm(dec.b));
    int expo = dec.form == TauForm::F4 ? dec.n + 5 : dec.n + 4;
    return std::pow(3.0, expo) * nb;
}

double tau_abs_squared(const ThetaIndex& nu) {
    auto dec = tau_decompose(nu);
    return dec ? tau_abs_squared(*dec) : 0.0;
}

double tau_bound(const ThetaIndex& nu) {
    auto dec = tau_decompose(nu);
    if (!dec) throw std::domain_error("tau_bound requires a decomposable index");
    return std::pow(3.0, (dec->n + 5) / 2.0) * std::sqrt(to_double(norm(dec->b)));
}

} // namespace cpell
