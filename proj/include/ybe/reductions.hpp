#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ybe/special_fn.hpp"

namespace ybe {

enum class LimitKind { omega2_to_inf, q_to_one, r_to_inf, asymptotic_behaviour };

std::string to_string(LimitKind k);
LimitKind limit_kind_from_string(std::string_view s);  // DomainError if unknown

// One limiting procedure sampled along a ladder of scale values.
//   omega2_to_inf        scale = |w2|, w2 = scale e^{i omega2_arg}; target gamma(z; w1, w2)
//   q_to_one             scale = q; target (q^a;q)/(q^b;q) (1-q)^{a-b} -> Gamma(b)/Gamma(a)
//   r_to_inf             scale = r; target gamma_h(z, m; w, w)
//   asymptotic_behaviour scale = t, z = t e^{i ray_arg}; target e^{sign pi i B22/2} gamma(z) -> 1
struct LimitExperiment {
    LimitKind kind = LimitKind::omega2_to_inf;
    std::vector<double> ladder;

    cplx z{0.4, 0.0};
    cplx omega1{1.0, 0.0};
    double omega2_arg = 1.5707963267948966;
    double a = 0.3, b = 0.7;
    long m = 0;
    double omega = 1.0;
    Moduli moduli{cplx(1.0, 0.0), std::polar(1.0, 3.14159265358979323846 / 5.0)};
    double ray_arg = 1.5707963267948966;
    int sign = +1;

    double threshold = 1e-4;
    // r_to_inf: use the (r/2 pi) prefactor as printed instead of (r/4 pi)
    bool printed_prefactor = false;

    void validate() const;  // DomainError: < 4 rungs, not strictly increasing, bad q, ...
};

struct ConvergenceRow {
    double scale = 0.0;
    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    double deviation = 0.0;
};

struct ConvergenceTable {
    LimitKind kind = LimitKind::omega2_to_inf;
    std::vector<ConvergenceRow> rows;
    std::vector<double> orders;  // log(d_i/d_{i+1}) / log(s_{i+1}/s_i)
    bool monotone = false;
    double final_deviation = 0.0;
    double threshold = 0.0;
    bool converged = false;  // monotone and final below threshold
    double slope = 0.0;      // r_to_inf: fitted growth exponent of |gamma_h|
    double expected_slope = 0.0;
    std::vector<std::string> notes;
};

// deviations below this are roundoff and count as converged
inline constexpr double kDeviationFloor = 1e-13;

ConvergenceTable check_omega_limit(const LimitExperiment& e);
ConvergenceTable check_q_limit(const LimitExperiment& e);
ConvergenceTable check_r_limit(const LimitExperiment& e);
ConvergenceTable check_asymptotic_behaviour(const LimitExperiment& e);
ConvergenceTable run_limit(const LimitExperiment& e);

// The default ladder and base point for each kind (thresholds 1e-4, 1e-4, 1e-3, 1e-6).
LimitExperiment default_experiment(LimitKind k);
// A ray inside the cone of the periods, where neither limit holds.
LimitExperiment asymptotic_negative_control();

// monotone after the first rung, treating sub-floor values as equal
bool monotone_after_first(const std::vector<double>& dev);

}  // namespace ybe
