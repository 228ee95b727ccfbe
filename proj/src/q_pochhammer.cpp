#include <cmath>

#include "ybe/special_fn.hpp"

namespace ybe {

namespace {
constexpr double kTruncation = 1e-16;
constexpr int kMinFactors = 8;
constexpr int kMaxFactors = 4000000;  // q = 0.99999 needs ~3.7e6

// log(1 - e^y), any branch; stays finite for large Re y
cplx log1m_exp(cplx y)
{
    if (y.real() > 0.0) return y + std::log(std::exp(-y) - 1.0);
    cplx w = -std::exp(y);
    if (std::abs(w) < 1e-5) return w - 0.5 * w * w + w * w * w / 3.0;
    return std::log(1.0 + w);
}
}  // namespace

PochhammerResult q_pochhammer_detail(cplx z, cplx q)
{
    if (!(std::abs(q) < 1.0)) throw DomainError("q_pochhammer: |q| >= 1");
    if (!is_finite(z)) throw DomainError("q_pochhammer: non-finite argument");
    PochhammerResult res;
    cplx prod = 1.0;
    cplx logsum = 0.0;
    cplx t = z;
    int j = 0;
    for (;; ++j) {
        if (j >= kMinFactors && std::abs(t) < kTruncation) break;
        if (j >= kMaxFactors) throw NoConvergence("q_pochhammer: too many factors");
        cplx f = 1.0 - t;
        prod *= f;
        logsum += std::log(f);
        t *= q;
    }
    res.value = prod;
    res.log_value = logsum;
    res.factors = j;
    // |log prod_{k>=j}(1 - t_k)| <= sum |t_k| / (1 - |t_k|) <= 2|t_j|/(1-|q|)
    res.tail_bound = 2.0 * std::abs(t) / (1.0 - std::abs(q));
    return res;
}

cplx q_pochhammer(cplx z, cplx q)
{
    return q_pochhammer_detail(z, q).value;
}

cplx log_q_pochhammer_exp(cplx logz, cplx logq)
{
    if (!(logq.real() < 0.0)) throw DomainError("log_q_pochhammer: |q| >= 1");
    // factors with Re y below this are 1 to double precision
    const double cut = std::log(kTruncation) - 2.0;
    // compensated sum: near q = 1 there are millions of terms
    cplx s = 0.0, comp = 0.0;
    for (int j = 0;; ++j) {
        cplx y = logz + double(j) * logq;
        if (j >= kMinFactors && y.real() < cut) break;
        if (j >= kMaxFactors) throw NoConvergence("log_q_pochhammer: too many factors");
        cplx t = log1m_exp(y);
        cplx u = s + t;
        comp += (std::abs(s.real()) >= std::abs(t.real()) ? cplx((s - u).real() + t.real(), 0.0)
                                                            : cplx((t - u).real() + s.real(), 0.0));
        comp += (std::abs(s.imag()) >= std::abs(t.imag()) ? cplx(0.0, (s - u).imag() + t.imag())
                                                            : cplx(0.0, (t - u).imag() + s.imag()));
        s = u;
    }
    return s + comp;
}

}  // namespace ybe
