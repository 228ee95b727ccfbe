// Gamma_h for the S^3_b / Z_r orbifold. Periods w1, w2 are taken in the upper
// half plane so that -i w has positive real part.

#include <string>

#include "ybe/special_fn.hpp"

namespace ybe {

long residue_mod(long m, int r)
{
    if (r < 1) throw DomainError("orbifold order r must be >= 1");
    long k = m % r;
    return k < 0 ? k + r : k;
}

cplx phi_h(long m, int r)
{
    if (r < 1) throw DomainError("phi_h: r must be >= 1");
    double md = double(m), rd = double(r);
    double cubic = 2.0 * md * md * md - 3.0 * md * md * rd + md * rd * rd;
    return cplx(0.0, -kPi / (6.0 * rd) * cubic);
}

cplx log_gamma_h(cplx z, long m, const OrbifoldParams& p)
{
    const int r = p.r;
    long k = residue_mod(m, r);
    const cplx w1 = p.moduli.omega1, w2 = p.moduli.omega2;
    const cplx mi = -kI;
    Moduli first(mi * w2 * double(r), mi * w1 + mi * w2);
    Moduli second(mi * w1 * double(r), mi * w1 + mi * w2);
    cplx a = mi * z + mi * w2 * double(r - k);
    cplx b = mi * z + mi * w1 * double(k);
    return log_hyperbolic_gamma(a, first) + log_hyperbolic_gamma(b, second);
}

cplx gamma_h(cplx z, long m, const OrbifoldParams& p)
{
    return std::exp(log_gamma_h(z, m, p));
}

cplx log_orbifold_gamma(cplx z, long m, const OrbifoldParams& p)
{
    return phi_h(residue_mod(m, p.r), p.r) + log_gamma_h(z, m, p);
}

cplx orbifold_gamma(cplx z, long m, const OrbifoldParams& p)
{
    return std::exp(log_orbifold_gamma(z, m, p));
}

int epsilon_weight(long m)
{
    if (m < 0) throw DomainError("epsilon_weight: m must be >= 0, got " + std::to_string(m));
    return m == 0 ? 1 : 2;
}

}  // namespace ybe
