// Hyperbolic gamma function gamma^(2)(u; w1, w2).
//
// Product form (Im(w1/w2) > 0):
//   gamma(u) = e^{-pi i B22(u)/2} (e^{2 pi i u/w1} qt; qt)_inf / (e^{2 pi i u/w2}; q)_inf
//   q = e^{2 pi i w1/w2}, qt = e^{-2 pi i w2/w1}
// The denominator exponent goes with w2. Pairing it with w1 (as one sometimes
// sees it printed) breaks gamma(u) gamma(2 eta - u) = 1.
//
// Integral form (Re w1, Re w2 > 0, |Re(u - eta)| < Re eta):
//   log gamma(u) = -int_0^inf [sinh(2vx) / (2 sinh(w1 x) sinh(w2 x)) - v/(w1 w2 x)] dx/x
// with v = u - eta. No Bernoulli phase here.

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "ybe/quadrature.hpp"
#include "ybe/special_fn.hpp"

namespace ybe {

namespace {

// Im(w1/w2) below this fraction of |w1/w2| counts as a real squashing
constexpr double kRealRatioTol = 1e-7;
// the auto dispatcher uses the product while both nomes are at most e^{-2 pi * this}
constexpr double kProductNomeMargin = 0.02;

// (2 - 2^{2k}) B_{2k} / (2k)!, Taylor coefficients of y / sinh(y) in y^2
constexpr std::array<double, 12> kCschCoef = {
    1.0,
    -1.0 / 6.0,
    7.0 / 360.0,
    -31.0 / 15120.0,
    127.0 / 604800.0,
    -73.0 / 3421440.0,
    1414477.0 / 653837184000.0,
    -8191.0 / 37362124800.0,
    16931177.0 / 762187345920000.0,
    -5749691557.0 / 2554547108585472000.0,
    91546277357.0 / 401428831349145600000.0,
    -3324754717.0 / 143888775912161280000.0,
};

// log(2 sin(pi w)), any branch. Returns -inf real part at zeros.
cplx log_two_sin_pi(cplx w)
{
    // reduce the real part, sin(pi(w - n)) = (-1)^n sin(pi w)
    double n = std::round(w.real());
    cplx wr = w - n;
    cplx sign_log = (static_cast<long long>(n) % 2 == 0) ? cplx(0.0) : cplx(0.0, kPi);
    if (wr.imag() >= 0.0) {
        // 2 sin(pi w) = i e^{-i pi w} (1 - e^{2 pi i w})
        return sign_log + cplx(0.0, 0.5 * kPi) - kI * kPi * wr + std::log(1.0 - std::exp(2.0 * kPi * kI * wr));
    }
    // 2 sin(pi w) = -i e^{i pi w} (1 - e^{-2 pi i w})
    return sign_log + cplx(0.0, -0.5 * kPi) + kI * kPi * wr + std::log(1.0 - std::exp(-2.0 * kPi * kI * wr));
}

bool is_neg_inf(cplx z)
{
    return std::isinf(z.real()) && z.real() < 0.0;
}

// integral over [0, x0] of the subtracted integrand, from its Taylor series
cplx small_x_part(cplx v, cplx w1, cplx w2, double x0)
{
    constexpr int K = 12;
    std::array<cplx, K> a{}, b1{}, b2{}, p{};
    cplx four_v2 = 4.0 * v * v;
    cplx w1sq = w1 * w1, w2sq = w2 * w2;
    // a_k = (2v)^{2k}/(2k+1)!
    a[0] = 1.0;
    for (int k = 1; k < K; ++k) a[k] = a[k - 1] * four_v2 / double((2 * k) * (2 * k + 1));
    cplx pw1 = 1.0, pw2 = 1.0;
    for (int k = 0; k < K; ++k) {
        b1[k] = kCschCoef[k] * pw1;
        b2[k] = kCschCoef[k] * pw2;
        pw1 *= w1sq;
        pw2 *= w2sq;
    }
    // p = a * b1 * b2 truncated
    std::array<cplx, K> ab{};
    for (int i = 0; i < K; ++i)
        for (int j = 0; i + j < K; ++j) ab[i + j] += a[i] * b1[j];
    for (int i = 0; i < K; ++i)
        for (int j = 0; i + j < K; ++j) p[i + j] += ab[i] * b2[j];
    // h(x) = v/(w1 w2) * sum_{k>=1} p_k x^{2k-2}
    cplx sum = 0.0;
    double xpow = x0;  // x0^{2k-1}
    for (int k = 1; k < K; ++k) {
        sum += p[k] * xpow / double(2 * k - 1);
        xpow *= x0 * x0;
    }
    return v / (w1 * w2) * sum;
}

// -log gamma for u already inside the strip, Re w > 0
cplx strip_integral(cplx u, cplx w1, cplx w2)
{
    cplx eta = 0.5 * (w1 + w2);
    cplx v = u - eta;
    double decay = 2.0 * (eta.real() - std::abs(v.real()));
    if (!(decay > 0.0)) throw DomainError("hyperbolic_gamma_integral: argument outside the strip");

    double wmax = std::max(std::abs(w1), std::abs(w2));
    double x0 = std::min(0.5 / wmax, 0.5 / std::max(std::abs(v), 1e-300));
    double x_end = x0 + 40.0 / decay;

    cplx c = v / (w1 * w2);
    auto h = [&](double x) -> cplx {
        // sinh(2vx)/(2 sinh(w1x) sinh(w2x)) without overflow
        cplx num = std::exp((2.0 * v - 2.0 * eta) * x) - std::exp((-2.0 * v - 2.0 * eta) * x);
        cplx den = (1.0 - std::exp(-2.0 * w1 * x)) * (1.0 - std::exp(-2.0 * w2 * x));
        return (num / den - c / x) / x;
    };

    Estimate mid = integrate_interval_gk(h, x0, x_end, 1e-15, 1e-14);
    cplx tail = -c / x_end;  // int_{x_end}^inf -v/(w1 w2 x^2) dx
    return small_x_part(v, w1, w2, x0) + mid.value + tail;
}

}  // namespace

cplx bernoulli_b22(cplx u, const Moduli& m)
{
    const cplx w1 = m.omega1, w2 = m.omega2;
    return u * u / (w1 * w2) - u / w1 - u / w2 + w1 / (6.0 * w2) + w2 / (6.0 * w1) + 0.5;
}

cplx log_hyperbolic_gamma_product(cplx u, const Moduli& m)
{
    cplx w1 = m.omega1, w2 = m.omega2;
    cplx tau = w1 / w2;
    if (std::abs(tau.imag()) <= kRealRatioTol * std::abs(tau))
        throw DomainError("hyperbolic_gamma_product: w2/w1 is real, use the integral form");
    if (tau.imag() < 0.0) std::swap(w1, w2);

    const cplx two_pi_i = 2.0 * kPi * kI;
    cplx log_q = two_pi_i * w1 / w2;
    cplx log_qt = -two_pi_i * w2 / w1;

    cplx num = log_q_pochhammer_exp(two_pi_i * u / w1 + log_qt, log_qt);
    cplx den = log_q_pochhammer_exp(two_pi_i * u / w2, log_q);
    if (is_neg_inf(den)) throw PoleError("hyperbolic_gamma: pole of the product representation");
    return -kI * kPi * bernoulli_b22(u, Moduli(w1, w2)) / 2.0 + num - den;
}

cplx hyperbolic_gamma_product(cplx u, const Moduli& m)
{
    return std::exp(log_hyperbolic_gamma_product(u, m));
}

cplx log_hyperbolic_gamma_integral(cplx u, const Moduli& m)
{
    cplx w1 = m.omega1, w2 = m.omega2;

    // rotate both moduli (and u) so their bisector lies on the positive axis
    const double min_cos = 0.02;
    if (w1.real() <= min_cos * std::abs(w1) || w2.real() <= min_cos * std::abs(w2)) {
        cplx bis = w1 / std::abs(w1) + w2 / std::abs(w2);
        if (std::abs(bis) < 1e-12) throw DomainError("hyperbolic_gamma_integral: opposite moduli");
        cplx lam = std::conj(bis) / std::abs(bis);
        w1 *= lam;
        w2 *= lam;
        u *= lam;
        if (w1.real() <= min_cos * std::abs(w1) || w2.real() <= min_cos * std::abs(w2))
            throw DomainError("hyperbolic_gamma_integral: moduli too far apart to rotate into Re > 0");
    }
    if (!is_finite(u)) throw DomainError("hyperbolic_gamma_integral: non-finite argument");

    // shift by the modulus with the larger real part
    if (w2.real() > w1.real()) std::swap(w1, w2);
    cplx eta = 0.5 * (w1 + w2);
    double k = std::round((u - eta).real() / w1.real());
    cplx base = u - k * w1;

    // gamma(base + k w1) = prod_{j=0}^{k-1} 2 sin(pi (base + j w1)/w2) * gamma(base)
    cplx shift_log = 0.0;
    long kk = static_cast<long>(k);
    if (kk > 0) {
        for (long j = 0; j < kk; ++j) shift_log += log_two_sin_pi((base + double(j) * w1) / w2);
    } else if (kk < 0) {
        for (long j = 1; j <= -kk; ++j) {
            cplx s = log_two_sin_pi((base - double(j) * w1) / w2);
            if (is_neg_inf(s)) throw PoleError("hyperbolic_gamma_integral: pole");
            shift_log -= s;
        }
    }
    return shift_log - strip_integral(base, w1, w2);
}

cplx hyperbolic_gamma_integral(cplx u, const Moduli& m)
{
    return std::exp(log_hyperbolic_gamma_integral(u, m));
}

cplx log_hyperbolic_gamma(cplx u, const Moduli& m)
{
    cplx tau = m.omega1 / m.omega2;
    double im1 = std::abs(tau.imag());
    double im2 = std::abs((1.0 / tau).imag());
    if (std::min(im1, im2) >= kProductNomeMargin) return log_hyperbolic_gamma_product(u, m);
    return log_hyperbolic_gamma_integral(u, m);
}

cplx hyperbolic_gamma(cplx u, const Moduli& m)
{
    return std::exp(log_hyperbolic_gamma(u, m));
}

}  // namespace ybe
