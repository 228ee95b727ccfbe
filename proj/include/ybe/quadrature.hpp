#pragma once

#include <functional>
#include <optional>

#include "ybe/types.hpp"

namespace ybe {

struct QuadratureSpec {
    double abs_tol = 1e-14;
    double rel_tol = 1e-11;
    int max_refinements = 12;
    double cutoff = 60.0;  // starting half-width of the real-line window

    void validate() const;
};

struct SumSpec {
    int initial_halfwidth = 4;
    double tail_tol = 1e-11;
    int max_halfwidth = 4000;

    void validate() const;
};

struct QuadResult {
    cplx value{0.0, 0.0};
    double err = 0.0;       // refinement difference + tail bound
    double tail = 0.0;      // bound on what lies outside the window
    double window = 0.0;    // final half-width actually used
    int nodes = 0;
    int levels = 0;
};

struct SumResult {
    cplx value{0.0, 0.0};
    double err = 0.0;          // truncation estimate + sum of term errors
    double tail_estimate = 0.0;
    double last_shell = 0.0;
    double term_err = 0.0;
    long halfwidth = 0;
};

using RealIntegrand = std::function<cplx(double)>;
using ContourIntegrand = std::function<cplx(cplx)>;
using SumTerm = std::function<Estimate(long)>;

// int_{-inf}^{inf} f(x) dx.
// x = sinh((pi/2) sinh t) on a window |x| <= L, nested trapezoid in t.
// L starts at spec.cutoff and is doubled (up to 2^12 times) until
// L*(|f(L)| + |f(-L)|) is below the target; TailTooFat if it never is.
// NoConvergence if max_refinements halvings do not settle.
QuadResult integrate_real_line(const RealIntegrand& f, const QuadratureSpec& spec);

// (1/2 pi i) \oint f(z) dz/z over |z| = 1, i.e. the mean of f on the circle.
// Nested trapezoid, N = 16, 32, ... doubling.
QuadResult integrate_unit_circle(const ContourIntegrand& f, const QuadratureSpec& spec);

// Adaptive Gauss-Kronrod (7/15) on [a, b]; used internally.
Estimate integrate_interval_gk(const RealIntegrand& f, double a, double b, double abs_tol,
                               double rel_tol, int max_intervals = 2000);

// sum over all integers m of term(m). Shells term(M) + term(-M) are added
// until the geometric tail estimate from the last two shells is below
// tail_tol * |partial sum|.
SumResult bilateral_sum(const SumTerm& term, const SumSpec& spec);
SumResult bilateral_sum(const std::function<cplx(long)>& term, const SumSpec& spec);

// sum_{m >= 0} weight(m) term(m); with a cap the sum is finite (0..cap).
SumResult half_line_weighted_sum(const SumTerm& term, const std::function<int(long)>& weight,
                                 const SumSpec& spec, std::optional<long> cap = std::nullopt);
SumResult half_line_weighted_sum(const std::function<cplx(long)>& term,
                                 const std::function<int(long)>& weight, const SumSpec& spec,
                                 std::optional<long> cap = std::nullopt);

}  // namespace ybe
