// Complex log-gamma: Stirling series after an upward shift, reflection for
// the left half plane.

#include <array>
#include <cmath>
#include <string>

#include "ybe/special_fn.hpp"

namespace ybe {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..11
constexpr std::array<double, 11> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kLog2Pi = 1.8378770664093454835606594728112;

// |w| >= 12 keeps the truncation error near 1e-22
constexpr double kStirlingRadius = 12.0;

cplx stirling(cplx w)
{
    cplx inv = 1.0 / w;
    cplx inv2 = inv * inv;
    cplx series = 0.0;
    // Horner in 1/w^2, highest term first
    for (int k = static_cast<int>(kStirling.size()) - 1; k >= 0; --k)
        series = series * inv2 + kStirling[k];
    series *= inv;
    return (w - 0.5) * std::log(w) - w + kHalfLog2Pi + series;
}

// Re z >= 0.5
cplx log_gamma_right(cplx z)
{
    cplx shift = 0.0;
    cplx w = z;
    while (std::abs(w) < kStirlingRadius) {
        shift += std::log(w);
        w += 1.0;
    }
    return stirling(w) - shift;
}

void check_pole(cplx z)
{
    if (z.real() > 0.5) return;
    double n = std::round(z.real());
    if (n <= 0.0 && std::abs(z - cplx(n, 0.0)) < kPoleTol)
        throw PoleError("log_gamma: pole at z = " + std::to_string(n));
}

}  // namespace

cplx log_gamma(cplx z)
{
    if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
    check_pole(z);
    if (z.real() >= 0.5) return log_gamma_right(z);

    // lower half plane by conjugation; keeps the branch cut on the negative axis
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));

    // Im z >= 0:
    //   log Gamma(z) = log 2pi - i pi/2 + i pi z - log(1 - e^{2 pi i z}) - log Gamma(1 - z)
    // e^{2 pi i z} only needs z mod 1, which saves digits for large |Re z|.
    double xr = z.real() - std::round(z.real());
    cplx e = std::exp(cplx(-2.0 * kPi * z.imag(), 2.0 * kPi * xr));
    cplx head = cplx(kLog2Pi, -0.5 * kPi) + kI * kPi * z - std::log(1.0 - e);
    return head - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z)
{
    return std::exp(log_gamma(z));
}

cplx log_gamma_ratio(std::span<const cplx> num, std::span<const cplx> den)
{
    cplx s = 0.0;
    for (cplx a : num) s += log_gamma(a);
    for (cplx b : den) s -= log_gamma(b);
    return s;
}

cplx gamma_ratio(std::span<const cplx> num, std::span<const cplx> den)
{
    return std::exp(log_gamma_ratio(num, den));
}

cplx gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den)
{
    return gamma_ratio(std::span<const cplx>(num.begin(), num.size()),
                       std::span<const cplx>(den.begin(), den.size()));
}

}  // namespace ybe
