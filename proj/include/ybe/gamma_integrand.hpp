#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ybe/types.hpp"

namespace ybe {

// Gamma(a + c i z)^power, power = +1 (numerator) or -1 (denominator).
struct GammaFactor {
    cplx a;
    double c = 1.0;
    int power = 1;
};

// A numerator pole of one factor.
struct GammaPole {
    cplx z;
    std::size_t factor = 0;
    long n = 0;           // Gamma argument equals -n there
    bool crossed = false; // lies on the wrong side of the real line
};

struct PoleAnalysis {
    std::vector<GammaPole> crossed;  // uncancelled poles on the wrong side
    double min_distance = 1e300;     // smallest |Im z| over uncancelled poles
};

// prod of gamma factors times exp(log_prefactor) times extra(z).
// The intended contour separates the poles of a numerator Gamma(a + c i z)
// as if Re a > 0: sequences with c > 0 above, c < 0 below.
class GammaIntegrand {
public:
    std::vector<GammaFactor> factors;
    cplx log_prefactor{0.0, 0.0};
    std::function<cplx(cplx)> extra;  // entire multiplier, may be empty

    void add(cplx a, double c, int power) { factors.push_back({a, c, power}); }

    // log of the product; -inf real part when a denominator sits on a pole.
    // PoleError if a numerator does.
    cplx log_eval(cplx z) const;
    cplx eval(cplx z) const;

    PoleAnalysis analyze_poles() const;

    // int_C - int_R, sum over crossed poles of 2 pi (-1)^n / (n! |c|) rest(z_n).
    // DomainError on a double pole.
    cplx residue_correction(const PoleAnalysis& pa) const;

private:
    cplx rest_at(const GammaPole& p) const;
};

}  // namespace ybe
