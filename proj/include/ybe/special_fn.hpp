#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "ybe/types.hpp"

namespace ybe {

// ---- Euler gamma -----------------------------------------------------------

// log Gamma(z), continued analytically from the positive real axis (the
// loggamma branch of mpmath/scipy). Coincides with the principal log of
// Gamma(z) whenever that has |Im| <= pi; elsewhere it is the branch that keeps
// exp(log_gamma) continuous, which is what the ratio tests need.
// Throws PoleError within 1e-10 of 0, -1, -2, ...
cplx log_gamma(cplx z);
cplx gamma(cplx z);

// exp(sum log_gamma(num) - sum log_gamma(den))
cplx log_gamma_ratio(std::span<const cplx> num, std::span<const cplx> den);
cplx gamma_ratio(std::span<const cplx> num, std::span<const cplx> den);
cplx gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den);

// distance below which an argument counts as sitting on a pole
inline constexpr double kPoleTol = 1e-10;

// ---- q-Pochhammer ----------------------------------------------------------

struct PochhammerResult {
    cplx value;
    cplx log_value;     // some log of value (branch irrelevant, exponentiate only)
    int factors = 0;    // how many factors were multiplied
    double tail_bound = 0.0;  // bound on |log| of the dropped tail
};

// (z;q)_inf, stopping at the first factor with |z q^j| < 1e-16 (at least 8).
// DomainError if |q| >= 1.
PochhammerResult q_pochhammer_detail(cplx z, cplx q);
cplx q_pochhammer(cplx z, cplx q);

// log (e^{logz}; e^{logq})_inf. Works for |e^{logz}| far above 1 without
// overflow; Re(logq) < 0 required.
cplx log_q_pochhammer_exp(cplx logz, cplx logq);

// ---- hyperbolic gamma ------------------------------------------------------

// u^2/(w1 w2) - u/w1 - u/w2 + w1/(6 w2) + w2/(6 w1) + 1/2
cplx bernoulli_b22(cplx u, const Moduli& m);

// Product representation,
//   e^{-pi i B22(u)/2} (e^{2 pi i u/w1} qt; qt) / (e^{2 pi i u/w2}; q),
//   q = e^{2 pi i w1/w2}, qt = e^{-2 pi i w2/w1},
// valid for Im(w1/w2) > 0; the moduli are swapped otherwise (gamma is
// symmetric in them). DomainError when w2/w1 is (numerically) real.
cplx log_hyperbolic_gamma_product(cplx u, const Moduli& m);
cplx hyperbolic_gamma_product(cplx u, const Moduli& m);

// Integral representation
//   log gamma = -int_0^inf [sinh(2vx)/(2 sinh(w1 x) sinh(w2 x)) - v/(w1 w2 x)] dx/x,
//   v = u - eta, valid for |Re v| < Re eta, Re w > 0; extended by the shift
//   gamma(u + w1) = 2 sin(pi u/w2) gamma(u). Moduli are rotated together when
//   needed (gamma(lu; lw1, lw2) = gamma(u; w1, w2)). DomainError if no rotation
//   gives both moduli a positive real part.
cplx log_hyperbolic_gamma_integral(cplx u, const Moduli& m);
cplx hyperbolic_gamma_integral(cplx u, const Moduli& m);

// Picks the product form when both nomes are comfortably inside the unit
// disc, the integral form otherwise.
cplx log_hyperbolic_gamma(cplx u, const Moduli& m);
cplx hyperbolic_gamma(cplx u, const Moduli& m);

// ---- orbifold gamma --------------------------------------------------------

struct OrbifoldParams {
    int r = 1;
    Moduli moduli;
};

// m mod r in {0, ..., r-1}
long residue_mod(long m, int r);

// -(pi i/6r)(2m^3 - 3m^2 r + m r^2)
cplx phi_h(long m, int r);

// gamma^(2)(-iz - i w2 (r - [m]); -i w2 r, -i w1 - i w2)
//   * gamma^(2)(-iz - i w1 [m]; -i w1 r, -i w1 - i w2),   [m] = m mod r
cplx log_gamma_h(cplx z, long m, const OrbifoldParams& p);
cplx gamma_h(cplx z, long m, const OrbifoldParams& p);

// Gamma_h = e^{phi_h([m])} gamma_h
cplx log_orbifold_gamma(cplx z, long m, const OrbifoldParams& p);
cplx orbifold_gamma(cplx z, long m, const OrbifoldParams& p);

// 1 for m = 0, 2 for m > 0; DomainError for m < 0
int epsilon_weight(long m);

}  // namespace ybe
