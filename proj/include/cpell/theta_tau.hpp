// theta_tau.hpp - Fourier coefficients tau of the cubic theta function,
// their decomposition witnesses, and explicit majorants.
//
// tau is supported on indices nu = sign * w^j * lambda^e * a * b^3 with a
// primary squarefree, b primary, and (e, j) restricted to four patterns:
//   F1: e = 3n-4, unit +-1      -> conj(g(lambda^2,  a)) |b/a| 3^{n/2+2}
//   F2: e = 3n-4, unit +-w      -> e^{-2 pi i/9} conj(g(w lambda^2, a)) |b/a| 3^{n/2+2}
//   F3: e = 3n-4, unit +-w^2    -> e^{+2 pi i/9} conj(g(w^2 lambda^2, a)) |b/a| 3^{n/2+2}
//   F4: e = 3n-3, unit +-1      -> conj(g(1, a)) |b/a| 3^{(n+5)/2}
// with n >= 1 for F1..F3 and n >= 0 for F4; anything else gives tau = 0.
#pragma once

#include "cpell/eisenstein.hpp"

#include <complex>
#include <optional>

namespace cpell {

enum class TauForm { F1, F2, F3, F4 };

struct TauDecomposition {
    TauForm form;
    int sign;          // +1 or -1
    int n;             // n >= 1 for F1..F3, n >= 0 for F4
    EisensteinInt a;   // primary, squarefree
    EisensteinInt b;   // primary

    // sign * w^j * lambda^{3n-4} * a * b^3 (j = form index) resp.
    // sign * lambda^{3n-3} * a * b^3, returned as the numerator times
    // lambda^3, i.e. the exact O_K numerator of nu.
    EisensteinInt reconstruct_numerator() const;
};

// sigma = 9 sqrt(3)/2, the constant term of the theta expansion.
double sigma_constant();

// Unique decomposition witness of nu, or empty when tau(nu) = 0.
std::optional<TauDecomposition> tau_decompose(const ThetaIndex& nu);

// tau(nu); zero when no decomposition exists.
std::complex<double> tau(const ThetaIndex& nu);

// |tau(nu)|^2 computed exactly from the decomposition alone:
// 3^{n+4} norm(b) for F1..F3 and 3^{n+5} norm(b) for F4.  This uses
// |g(mu0, a)| = norm(a)^{1/2}, which holds for every squarefree primary a
// coprime to lambda*mu0 (multiplicativity reduces it to the prime case);
// the test suite verifies this against brute-force sums.
double tau_abs_squared(const TauDecomposition& dec);
double tau_abs_squared(const ThetaIndex& nu);

// Explicit majorant 3^{(n+5)/2} * norm(b)^{1/2} >= |tau(nu)|.
double tau_bound(const ThetaIndex& nu);

} // namespace cpell
