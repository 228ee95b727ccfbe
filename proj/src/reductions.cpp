#include "ybe/reductions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ybe {

std::string to_string(LimitKind k)
{
    switch (k) {
    case LimitKind::omega2_to_inf: return "omega2_to_inf";
    case LimitKind::q_to_one: return "q_to_one";
    case LimitKind::r_to_inf: return "r_to_inf";
    case LimitKind::asymptotic_behaviour: return "asymptotic_behaviour";
    }
    return "?";
}

LimitKind limit_kind_from_string(std::string_view s)
{
    for (LimitKind k : {LimitKind::omega2_to_inf, LimitKind::q_to_one, LimitKind::r_to_inf,
                        LimitKind::asymptotic_behaviour})
        if (to_string(k) == s) return k;
    throw DomainError("unknown limit kind '" + std::string(s) + "'");
}

void LimitExperiment::validate() const
{
    if (ladder.size() < 4) throw DomainError(to_string(kind) + ": ladder needs at least 4 rungs");
    for (std::size_t i = 1; i < ladder.size(); ++i)
        if (!(ladder[i] > ladder[i - 1]))
            throw DomainError(to_string(kind) + ": ladder must be strictly increasing");
    if (!(threshold > 0.0)) throw DomainError(to_string(kind) + ": threshold must be positive");
    switch (kind) {
    case LimitKind::omega2_to_inf:
        if (ladder.front() <= 0.0) throw DomainError("omega2_to_inf: |w2| must be positive");
        if (std::abs(std::sin(omega2_arg - std::arg(omega1))) < 1e-6)
            throw DomainError("omega2_to_inf: w2/w1 must not be real");
        break;
    case LimitKind::q_to_one:
        if (ladder.front() <= 0.0 || ladder.back() >= 1.0)
            throw DomainError("q_to_one: q must lie in (0, 1)");
        for (double x : {a, b})
            if (x <= 0.0 && std::abs(x - std::round(x)) < kPoleTol)
                throw DomainError("q_to_one: a and b must avoid the non-positive integers");
        break;
    case LimitKind::r_to_inf:
        for (double r : ladder)
            if (r < 1.0 || r != std::floor(r)) throw DomainError("r_to_inf: r must be a positive integer");
        if (!(omega > 0.0)) throw DomainError("r_to_inf: omega must be positive");
        break;
    case LimitKind::asymptotic_behaviour:
        if (ladder.front() <= 0.0) throw DomainError("asymptotic_behaviour: t must be positive");
        if (sign != 1 && sign != -1) throw DomainError("asymptotic_behaviour: sign must be +1 or -1");
        break;
    }
}

bool monotone_after_first(const std::vector<double>& dev)
{
    for (std::size_t i = 2; i < dev.size(); ++i) {
        double prev = std::max(dev[i - 1], kDeviationFloor);
        double cur = std::max(dev[i], kDeviationFloor);
        if (cur > prev) return false;
    }
    return true;
}

namespace {

double rel_dev(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::abs(rhs); }

void finish(ConvergenceTable& t, double threshold)
{
    std::vector<double> d;
    for (const auto& r : t.rows) d.push_back(r.deviation);
    t.threshold = threshold;
    t.monotone = monotone_after_first(d);
    t.final_deviation = d.empty() ? std::numeric_limits<double>::infinity() : d.back();
    t.converged = t.monotone && t.final_deviation < threshold;
    for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
        double d0 = std::max(d[i], kDeviationFloor), d1 = std::max(d[i + 1], kDeviationFloor);
        t.orders.push_back(std::log(d0 / d1) / std::log(t.rows[i + 1].scale / t.rows[i].scale));
    }
}

}  // namespace

ConvergenceTable check_omega_limit(const LimitExperiment& e)
{
    e.validate();
    ConvergenceTable t;
    t.kind = e.kind;
    const cplx w1 = e.omega1;
    const cplx lg_z = log_gamma(e.z / w1);
    for (double s : e.ladder) {
        const cplx w2 = std::polar(s, e.omega2_arg);
        ConvergenceRow row;
        row.scale = s;
        row.lhs = hyperbolic_gamma(e.z, Moduli(w1, w2));
        row.rhs = std::exp((0.5 - e.z / w1) * std::log(w2 / (2.0 * kPi * w1)) + lg_z - 0.5 * std::log(2.0 * kPi));
        row.deviation = rel_dev(row.lhs, row.rhs);
        t.rows.push_back(row);
    }
    finish(t, e.threshold);
    return t;
}

ConvergenceTable check_q_limit(const LimitExperiment& e)
{
    e.validate();
    ConvergenceTable t;
    t.kind = e.kind;
    const cplx target = std::exp(log_gamma(e.b) - log_gamma(e.a));
    for (double q : e.ladder) {
        const double lq = std::log(q);
        ConvergenceRow row;
        row.scale = q;
        row.lhs = std::exp(log_q_pochhammer_exp(e.a * lq, lq) - log_q_pochhammer_exp(e.b * lq, lq) +
                           (e.a - e.b) * std::log1p(-q));
        row.rhs = target;
        row.deviation = rel_dev(row.lhs, row.rhs);
        t.rows.push_back(row);
    }
    finish(t, e.threshold);
    return t;
}

ConvergenceTable check_r_limit(const LimitExperiment& e)
{
    e.validate();
    ConvergenceTable t;
    t.kind = e.kind;
    const cplx x = e.z / e.omega;
    const cplx lg_ratio = log_gamma(x / 2.0 + double(e.m) / 2.0) - log_gamma(1.0 - x / 2.0 + double(e.m) / 2.0);
    const double pref = e.printed_prefactor ? 2.0 * kPi : 4.0 * kPi;

    std::vector<double> lx, ly;
    for (double r : e.ladder) {
        OrbifoldParams p{int(r), Moduli(e.omega, e.omega)};
        ConvergenceRow row;
        row.scale = r;
        const cplx llhs = log_gamma_h(e.z, e.m, p);
        row.lhs = std::exp(llhs);
        row.rhs = std::exp((1.0 - x) * std::log(r / pref) + lg_ratio);
        row.deviation = rel_dev(row.lhs, row.rhs);
        t.rows.push_back(row);
        lx.push_back(std::log(r));
        ly.push_back((llhs - lg_ratio).real());
    }
    // least squares slope of log|gamma_h / Gamma ratio| against log r
    const double n = double(lx.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i] / n, my += ly[i] / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    t.slope = sxy / sxx;
    t.expected_slope = (1.0 - x).real();
    finish(t, e.threshold);
    if (e.printed_prefactor) t.notes.push_back("printed (r/2pi) prefactor; a constant offset is expected");
    return t;
}

ConvergenceTable check_asymptotic_behaviour(const LimitExperiment& e)
{
    e.validate();
    ConvergenceTable t;
    t.kind = e.kind;
    for (double s : e.ladder) {
        const cplx z = std::polar(s, e.ray_arg);
        ConvergenceRow row;
        row.scale = s;
        const cplx l = double(e.sign) * kI * kPi * bernoulli_b22(z, e.moduli) / 2.0 +
                       log_hyperbolic_gamma(z, e.moduli);
        row.lhs = std::exp(l);
        row.rhs = 1.0;
        row.deviation = std::abs(row.lhs - 1.0);
        t.rows.push_back(row);
    }
    finish(t, e.threshold);
    const double a1 = std::arg(e.moduli.omega1), a2 = std::arg(e.moduli.omega2);
    const double lo = std::min(a1, a2), hi = std::max(a1, a2);
    const bool in_sector = e.sign > 0 ? (hi < e.ray_arg && e.ray_arg < lo + kPi)
                                      : (hi - kPi < e.ray_arg && e.ray_arg < lo);
    if (!in_sector) t.notes.push_back("ray lies outside the sector where this limit holds");
    return t;
}

ConvergenceTable run_limit(const LimitExperiment& e)
{
    switch (e.kind) {
    case LimitKind::omega2_to_inf: return check_omega_limit(e);
    case LimitKind::q_to_one: return check_q_limit(e);
    case LimitKind::r_to_inf: return check_r_limit(e);
    case LimitKind::asymptotic_behaviour: return check_asymptotic_behaviour(e);
    }
    throw DomainError("run_limit: bad kind");
}

LimitExperiment default_experiment(LimitKind k)
{
    LimitExperiment e;
    e.kind = k;
    switch (k) {
    case LimitKind::omega2_to_inf:
        e.ladder = {5, 10, 20, 40};
        e.threshold = 1e-4;
        break;
    case LimitKind::q_to_one:
        e.ladder = {0.9, 0.99, 0.999, 0.9999};
        e.threshold = 1e-4;
        break;
    case LimitKind::r_to_inf:
        e.ladder = {4, 8, 16, 32, 64};
        e.z = 0.5;
        e.threshold = 1e-3;
        break;
    case LimitKind::asymptotic_behaviour:
        e.ladder = {1, 2, 3, 4, 5};
        e.threshold = 1e-6;
        break;
    }
    return e;
}

LimitExperiment asymptotic_negative_control()
{
    LimitExperiment e = default_experiment(LimitKind::asymptotic_behaviour);
    e.ray_arg = 0.3;
    return e;
}

}  // namespace ybe
