#include "ybe/gamma_integrand.hpp"

#include <cmath>
#include <limits>

#include "ybe/special_fn.hpp"

namespace ybe {

namespace {

constexpr long kMaxPoleScan = 100000;

bool at_nonpositive_integer(cplx w)
{
    double r = std::round(w.real());
    if (r > 0.0) return false;
    double tol = 1e-9 * std::max(1.0, std::abs(w));
    return std::abs(w - r) < tol;
}

cplx arg_of(const GammaFactor& f, cplx z) { return f.a + f.c * kI * z; }

}  // namespace

cplx GammaIntegrand::log_eval(cplx z) const
{
    const cplx neg_inf(-std::numeric_limits<double>::infinity(), 0.0);
    cplx s = log_prefactor;
    for (const auto& f : factors) {
        cplx w = arg_of(f, z);
        if (f.power < 0 && at_nonpositive_integer(w)) return neg_inf;
        s += double(f.power) * log_gamma(w);
    }
    if (extra) {
        cplx e = extra(z);
        if (e == cplx(0.0)) return neg_inf;
        s += std::log(e);
    }
    return s;
}

cplx GammaIntegrand::eval(cplx z) const
{
    cplx l = log_eval(z);
    if (std::isinf(l.real()) && l.real() < 0.0) return 0.0;
    return std::exp(l);
}

PoleAnalysis GammaIntegrand::analyze_poles() const
{
    PoleAnalysis pa;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        if (f.power <= 0) continue;
        if (f.c == 0.0) continue;  // constant factor
        const double ra = f.a.real();
        // scan the crossed poles and the first regular one
        for (long n = 0; n < kMaxPoleScan; ++n) {
            double d = ra + double(n);
            cplx zn = kI * (f.a + double(n)) / f.c;
            int num_hits = 0, den_hits = 0;
            for (std::size_t j = 0; j < factors.size(); ++j) {
                if (j == i) continue;
                if (!at_nonpositive_integer(arg_of(factors[j], zn))) continue;
                if (factors[j].power > 0)
                    ++num_hits;
                else
                    ++den_hits;
            }
            int order = 1 + num_hits - den_hits;
            if (order >= 1) {
                if (order > 1 || num_hits > 0)
                    throw DomainError("contour: higher-order pole at z = (" + std::to_string(zn.real()) +
                                      ", " + std::to_string(zn.imag()) + ")");
                pa.min_distance = std::min(pa.min_distance, std::abs(d) / std::abs(f.c));
                if (d < 0.0) pa.crossed.push_back({zn, i, n, true});
            }
            if (d >= 0.0) break;
            if (n + 1 == kMaxPoleScan) throw DomainError("contour: too many crossed poles");
        }
    }
    return pa;
}

cplx GammaIntegrand::rest_at(const GammaPole& p) const
{
    cplx s = log_prefactor;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (j == p.factor) continue;
        s += double(factors[j].power) * log_gamma(arg_of(factors[j], p.z));
    }
    cplx v = std::exp(s);
    if (extra) v *= extra(p.z);
    return v;
}

cplx GammaIntegrand::residue_correction(const PoleAnalysis& pa) const
{
    cplx total = 0.0;
    for (const auto& p : pa.crossed) {
        const double c = std::abs(factors[p.factor].c);
        double sign = (p.n % 2 == 0) ? 1.0 : -1.0;
        double inv_fact = std::exp(-std::lgamma(double(p.n) + 1.0));
        total += 2.0 * kPi * sign * inv_fact / c * rest_at(p);
    }
    return total;
}

}  // namespace ybe
