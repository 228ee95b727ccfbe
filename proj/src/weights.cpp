// Boltzmann weights and one-loop factors.

#include "ybe/weights.hpp"

#include <array>
#include <cmath>
#include <functional>

namespace ybe {

namespace {

cplx lg(cplx z) { return log_gamma(z); }

bool is_pos_inf(cplx z) { return std::isinf(z.real()) && z.real() > 0.0; }

// exp(-log_a - log_b), 0 when either log hit a pole of the gamma function
cplx inverse_pair(const std::function<cplx()>& log_a, const std::function<cplx()>& log_b)
{
    cplx s;
    try {
        s = log_a() + log_b();
    } catch (const PoleError&) {
        return 0.0;
    }
    if (is_pos_inf(s)) return 0.0;
    return std::exp(-s);
}

}  // namespace

// ---- model A ----------------------------------------------------------------

cplx weight_A_vertical(double alpha, Spin x, Spin z)
{
    const cplx ix = kI * x.sigma, iz = kI * z.sigma;
    cplx s = lg(alpha + ix + iz) + lg(alpha + ix - iz) + lg(alpha - ix + iz) + lg(alpha - ix - iz);
    return std::exp(s);
}

cplx weight_A_horizontal(double alpha, Spin x, Spin z)
{
    const cplx ix = kI * x.sigma, iz = kI * z.sigma;
    cplx s = lg(-alpha + ix + iz) + lg(-alpha + ix - iz) - lg(alpha + ix + iz) - lg(alpha + ix - iz);
    return std::exp(s);
}

cplx self_A(Spin z, NormA norm)
{
    if (z.sigma == 0.0) return 0.0;  // 1/Gamma(0)^2
    // 1/(Gamma(2iz) Gamma(-2iz)) = 2z sinh(2 pi z)/pi
    double t = 2.0 * z.sigma;
    cplx s = std::exp(-(lg(cplx(0.0, t)) + lg(cplx(0.0, -t))));
    return norm == NormA::classic ? s : s / (2.0 * kPi);
}

cplx r_factor_A(const SpectralTriple& t, NormA norm)
{
    cplx g = std::exp(lg(2.0 * t.alpha) + lg(2.0 * t.beta) - lg(2.0 * t.gamma));
    return norm == NormA::classic ? 4.0 * kPi * g : 2.0 * g;
}

// ---- model B ----------------------------------------------------------------

cplx log_weight_B(double alpha, double eta, Spin si, Spin sj, WeightBForm form)
{
    const double Np = double(si.m + sj.m), Nm = double(si.m - sj.m);
    const double Sp = si.sigma + sj.sigma, Sm = si.sigma - sj.sigma;

    if (form == WeightBForm::general) {
        const double c = 0.5 * (eta - alpha);
        const std::array<std::array<double, 2>, 4> ns = {{{Np, Sp}, {Nm, Sm}, {-Nm, -Sm}, {-Np, -Sp}}};
        cplx s = 0.0;
        for (const auto& [N, S] : ns) {
            s += lg(cplx(0.5 * N + c, 0.5 * S));
            s -= lg(cplx(1.0 + 0.5 * N - c, -0.5 * S));
        }
        return s;
    }

    if (std::abs(eta - 1.0) > 1e-12)
        throw DomainError("weight_B: the normalized form fixes eta = 1");
    const double lo = 0.5 * (1.0 - alpha), hi = 0.5 * (1.0 + alpha);
    const cplx ap = 0.5 * cplx(-Np, Sp), am = 0.5 * cplx(-Nm, Sm);   // (i S - N)/2
    const cplx bp = 0.5 * cplx(Np, Sp), bm = 0.5 * cplx(Nm, Sm);     // (i S + N)/2
    cplx s = lg(hi) - lg(lo);
    s += lg(lo + ap) + lg(lo - ap) + lg(lo + am) + lg(lo - am);
    s -= lg(hi + bp) + lg(hi - bp) + lg(hi + bm) + lg(hi - bm);
    return s;
}

cplx weight_B(double alpha, double eta, Spin si, Spin sj, WeightBForm form)
{
    return std::exp(log_weight_B(alpha, eta, si, sj, form));
}

double self_B(Spin s)
{
    return (s.sigma * s.sigma + double(s.m) * double(s.m)) / (2.0 * kPi);
}

cplx self_B_gamma_form(Spin s)
{
    const cplx zp(double(s.m), s.sigma), zm(double(s.m), -s.sigma);
    cplx l = lg(zp + 1.0) + lg(zm + 1.0) - lg(zp) - lg(zm);
    return std::exp(l) / (2.0 * kPi);
}

cplx r_factor_B(const SpectralTriple& t)
{
    cplx s = 0.0;
    for (double x : {t.alpha, t.beta, t.gamma}) s += lg(x) - lg(t.eta - x);
    return std::exp(s);
}

// ---- index --------------------------------------------------------------------

cplx index_chiral_factor(const MultipletData& mult, cplx z, long m, cplx q)
{
    if (!(std::abs(q) < 1.0)) throw DomainError("index_chiral_factor: |q| must be < 1");
    const cplx logq = std::log(q);
    const long k = long(mult.gauge_weight) * m + mult.flavor_discrete;
    const double half_abs = 0.5 * double(std::labs(k));
    cplx x = std::exp(0.5 * mult.delta * logq) * mult.flavor_charge * std::pow(z, mult.gauge_weight);
    cplx qa = std::exp(half_abs * logq);
    return q_pochhammer(q * qa / x, q) / q_pochhammer(qa * x, q);
}

cplx index_vector_factor(cplx z, long m, cplx q)
{
    cplx qm = std::pow(q, double(m));
    cplx z2 = z * z;
    return (1.0 - qm * z2) * (1.0 - qm / z2) / (qm * std::pow(z, double(6 * m)));
}

cplx index_vector_pochhammer(cplx z, long m, cplx q)
{
    cplx qa = std::pow(q, double(std::labs(m)));
    return q_pochhammer(qa * z * z, q) * q_pochhammer(qa / (z * z), q);
}

// ---- three-sphere -------------------------------------------------------------

cplx sphere3_chiral_factor(cplx g, cplx z, const Moduli& mod)
{
    return std::exp(log_hyperbolic_gamma(g + kI * z, mod) + log_hyperbolic_gamma(g - kI * z, mod));
}

cplx sphere3_vector_factor(cplx z, const Moduli& mod)
{
    // 1/gamma(x) = gamma(2 eta - x): no pole handling needed away from z = 0
    if (std::abs(z) < kPoleTol) return 0.0;
    const cplx te = mod.two_eta();
    return std::exp(log_hyperbolic_gamma(te - 2.0 * kI * z, mod) +
                    log_hyperbolic_gamma(te + 2.0 * kI * z, mod));
}

// ---- orbifold -----------------------------------------------------------------

cplx orbifold_chiral_factor(cplx g, long n, cplx z, long m, const OrbifoldParams& p)
{
    return std::exp(log_orbifold_gamma(g + z, n + m, p) + log_orbifold_gamma(g - z, n - m, p));
}

cplx orbifold_vector_factor(cplx z, long m, const OrbifoldParams& p)
{
    // Gamma_h(0, m) has its pole when m = 0 mod r; the two factors there give inf - inf
    if (z == 0.0 && residue_mod(2 * m, p.r) == 0) return 0.0;
    return inverse_pair([&] { return log_orbifold_gamma(2.0 * z, 2 * m, p); },
                        [&] { return log_orbifold_gamma(-2.0 * z, -2 * m, p); });
}

// ---- two-sphere ---------------------------------------------------------------

cplx sphere2_chiral_factor(const MultipletData& mult, cplx z, long m)
{
    const double rho = double(mult.gauge_weight);
    const double k = rho * double(m) + double(mult.flavor_discrete);
    cplx a = 0.5 * mult.delta - kI * rho * z - mult.flavor_charge - 0.5 * k;
    cplx b = 1.0 - 0.5 * mult.delta + kI * rho * z + mult.flavor_charge + 0.5 * k;
    return std::exp(lg(a) - lg(b));
}

cplx sphere2_vector_factor(cplx z, long m)
{
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * (double(m) * double(m) + 4.0 * z * z);
}

}  // namespace ybe
