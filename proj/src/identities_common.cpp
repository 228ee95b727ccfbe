// Catalog, validation, verdict and dispatch shared by all verifiers.

#include <cmath>
#include <numeric>
#include <sstream>

#include "ybe/identities.hpp"

namespace ybe {

const std::vector<IdentityInfo>& identity_catalog()
{
    static const std::vector<IdentityInfo> cat = {
        {IdentityKind::hyperbolic_3_2, "hyperbolic_3_2",
         "squashed-sphere integral of hyperbolic gammas vs 2 sqrt(w1 w2) prod gamma(g_j+g_k)",
         "sum g = w1 + w2"},
        {IdentityKind::index_3_1, "index_3_1",
         "superconformal index: sum over m of a unit-circle integral of q-Pochhammer ratios",
         "prod g = q, sum n = 0"},
        {IdentityKind::orbifold_3_3, "orbifold_3_3",
         "lens-space (Z_r orbifold) sum over holonomy sectors of Gamma_h integrals",
         "sum g = w1 + w2, sum n = 0 mod r"},
        {IdentityKind::gamma_int_4_6, "gamma_int_4_6",
         "Euler-gamma integral with five parameters, sixth eliminated", "none (g6 = -sum g)"},
        {IdentityKind::gamma_int_4_8, "gamma_int_4_8",
         "Euler-gamma integral with Gamma(-g6 +- iz) in the denominator", "sum g = 0"},
        {IdentityKind::gamma_multline_4_12, "gamma_multline_4_12",
         "asymmetric Euler-gamma integral behind the second star-triangle relation", "sum g = 0"},
        {IdentityKind::kels_4_16, "kels_4_16",
         "two-sphere sum/integral with m^2 + 4z^2 measure (model B source identity)",
         "sum g = 1, sum n = 0"},
        {IdentityKind::orbifold_limit_4_22, "orbifold_limit_4_22",
         "epsilon-weighted half-line version of kels_4_16 from the r -> infinity orbifold limit",
         "sum g = 1, sum n = 0"},
        {IdentityKind::str_A_first, "str_A_first",
         "first non-symmetric star-triangle relation of model A", "gamma = alpha + beta"},
        {IdentityKind::str_A_second, "str_A_second",
         "second non-symmetric star-triangle relation of model A", "gamma = alpha + beta"},
        {IdentityKind::str_B, "str_B",
         "star-triangle relation of model B with normalized weights",
         "eta = alpha + beta + gamma = 1"},
        {IdentityKind::appendixA_equiv, "appendixA_equiv",
         "term-level and truncated-sum equivalence of the half-line and bilateral model-B sums",
         "sum g = 1, sum n = 0"},
    };
    return cat;
}

std::string to_string(IdentityKind k)
{
    for (const auto& e : identity_catalog())
        if (e.kind == k) return e.name;
    return "unknown";
}

IdentityKind identity_kind_from_string(std::string_view s)
{
    for (const auto& e : identity_catalog())
        if (e.name == s) return e.kind;
    throw DomainError("unknown identity kind '" + std::string(s) + "'");
}

bool verdict(cplx ratio, double abs_gap, double est_err, double tol)
{
    if (!is_finite(ratio) || !std::isfinite(abs_gap)) return false;
    return std::abs(ratio - 1.0) < tol && std::abs(std::arg(ratio)) < tol &&
           abs_gap < kVerdictMargin * est_err;
}

void finalize_report(VerificationReport& rep, const Estimate& lhs, cplx rhs, double rhs_err)
{
    rep.lhs = lhs.value;
    rep.rhs = rhs;
    rep.ratio = lhs.value / rhs;
    rep.abs_gap = std::abs(lhs.value - rhs);
    rep.est_err = lhs.err + rhs_err + kRoundoffFloor * std::max(std::abs(lhs.value), std::abs(rhs));
    rep.diagnostics["lhs_err"] = lhs.err;
    rep.pass = verdict(rep.ratio, rep.abs_gap, rep.est_err, rep.tol);
}

namespace {

std::string fmt(cplx z)
{
    std::ostringstream os;
    os.precision(10);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

void need_size(const std::vector<cplx>& g, std::size_t k, const char* kind)
{
    if (g.size() != k)
        throw DomainError(std::string(kind) + ": expected " + std::to_string(k) + " fugacities, got " +
                          std::to_string(g.size()));
}

void need_n(const std::vector<long>& n, std::size_t k, const char* kind)
{
    if (n.size() != k)
        throw DomainError(std::string(kind) + ": expected " + std::to_string(k) + " discrete charges, got " +
                          std::to_string(n.size()));
}

void need_sum(const std::vector<cplx>& g, cplx target, const char* what)
{
    cplx s = std::accumulate(g.begin(), g.end(), cplx(0.0));
    if (std::abs(s - target) > 1e-10 * (1.0 + std::abs(target)))
        throw DomainError(std::string("balancing condition ") + what + " violated: sum g = " + fmt(s));
}

long sum_n(const std::vector<long>& n) { return std::accumulate(n.begin(), n.end(), 0L); }

void validate_model_b(const IdentityCase& c, const char* kind)
{
    need_size(c.g, 6, kind);
    need_n(c.n, 6, kind);
    need_sum(c.g, 1.0, "sum g = 1");
    if (sum_n(c.n) != 0) throw DomainError(std::string(kind) + ": charge condition sum n = 0 violated");
    for (const auto& gj : c.g)
        if (gj.real() < c.pole_margin)
            throw DomainError(std::string(kind) + ": Re g = " + std::to_string(gj.real()) +
                              " puts a pole within the margin of the contour");
}

}  // namespace

IdentityCase with_derived_fugacities(const IdentityCase& c)
{
    const bool model_b = c.kind == IdentityKind::kels_4_16 || c.kind == IdentityKind::orbifold_limit_4_22 ||
                         c.kind == IdentityKind::appendixA_equiv;
    if (!model_b || !c.g.empty()) return c;
    IdentityCase out = c;
    const auto& t = c.triple;
    const auto& s = c.spins;
    out.g = {cplx(t.alpha, s[0].sigma) / 2.0, cplx(t.beta, s[1].sigma) / 2.0, cplx(t.gamma, s[2].sigma) / 2.0,
             cplx(t.alpha, -s[0].sigma) / 2.0, cplx(t.beta, -s[1].sigma) / 2.0, cplx(t.gamma, -s[2].sigma) / 2.0};
    out.n = {s[0].m, s[1].m, s[2].m, -s[0].m, -s[1].m, -s[2].m};
    return out;
}

void validate_case(const IdentityCase& c0)
{
    const IdentityCase c = with_derived_fugacities(c0);
    if (!(c.tol > 0.0)) throw DomainError("tolerance must be positive");
    if (!(c.pole_margin >= 0.0)) throw DomainError("pole_margin must be >= 0");
    c.quad.validate();
    c.sums.validate();

    switch (c.kind) {
    case IdentityKind::hyperbolic_3_2: {
        need_size(c.g, 6, "hyperbolic_3_2");
        need_sum(c.g, c.moduli.two_eta(), "sum g = w1 + w2");
        if (c.moduli.omega1.real() <= 0.0 || c.moduli.omega2.real() <= 0.0)
            throw DomainError("hyperbolic_3_2: moduli need Re w > 0 for the real-line contour");
        for (const auto& gj : c.g)
            if (gj.real() < c.pole_margin)
                throw DomainError("hyperbolic_3_2: Re g = " + std::to_string(gj.real()) +
                                  " puts a pole within the margin of the contour");
        break;
    }
    case IdentityKind::index_3_1: {
        need_size(c.g, 6, "index_3_1");
        need_n(c.n, 6, "index_3_1");
        if (!(c.p > 0.0 && c.p < 1.0)) throw DomainError("index_3_1: need 0 < p < 1 (q = p^2)");
        cplx prod = 1.0;
        for (const auto& gj : c.g) prod *= gj;
        const double q = c.p * c.p;
        if (std::abs(prod - q) > 1e-10 * q)
            throw DomainError("balancing condition prod g = q violated: prod g = " + fmt(prod));
        if (sum_n(c.n) != 0) throw DomainError("index_3_1: charge condition sum n = 0 violated");
        for (const auto& gj : c.g)
            if (!(std::abs(gj) < std::exp(-c.pole_margin)))
                throw DomainError("index_3_1: |g| = " + std::to_string(std::abs(gj)) +
                                  " puts a pole within the margin of the unit circle");
        break;
    }
    case IdentityKind::orbifold_3_3: {
        need_size(c.g, 6, "orbifold_3_3");
        need_n(c.n, 6, "orbifold_3_3");
        if (c.r < 1) throw DomainError("orbifold_3_3: r must be >= 1");
        need_sum(c.g, c.moduli.two_eta(), "sum g = w1 + w2");
        if (residue_mod(sum_n(c.n), c.r) != 0)
            throw DomainError("orbifold_3_3: charge condition sum n = 0 mod r violated");
        if (c.moduli.omega1.imag() <= 0.0 || c.moduli.omega2.imag() <= 0.0)
            throw DomainError("orbifold_3_3: periods must lie in the upper half plane");
        for (const auto& gj : c.g)
            if (gj.imag() < c.pole_margin)
                throw DomainError("orbifold_3_3: Im g = " + std::to_string(gj.imag()) +
                                  " puts a pole within the margin of the contour");
        break;
    }
    case IdentityKind::gamma_int_4_6:
        need_size(c.g, 5, "gamma_int_4_6");
        if (!(c.omega1 > 0.0)) throw DomainError("gamma_int_4_6: omega1 must be > 0");
        break;
    case IdentityKind::gamma_int_4_8:
    case IdentityKind::gamma_multline_4_12:
        need_size(c.g, 6, to_string(c.kind).c_str());
        need_sum(c.g, 0.0, "sum g = 0");
        if (!(c.omega1 > 0.0)) throw DomainError(to_string(c.kind) + ": omega1 must be > 0");
        break;
    case IdentityKind::kels_4_16:
    case IdentityKind::orbifold_limit_4_22:
        validate_model_b(c, to_string(c.kind).c_str());
        break;
    case IdentityKind::appendixA_equiv:
        validate_model_b(c, "appendixA_equiv");
        if (c.halfwidth < 0) throw DomainError("appendixA_equiv: halfwidth must be >= 0");
        break;
    case IdentityKind::str_A_first:
    case IdentityKind::str_A_second: {
        const auto& t = c.triple;
        if (!(t.alpha > 0.0 && t.beta > 0.0))
            throw DomainError("str_A: spectral parameters alpha, beta must be > 0");
        if (std::abs(t.gamma - t.alpha - t.beta) > 1e-12)
            throw DomainError("balancing condition gamma = alpha + beta violated");
        double frac = t.gamma - std::floor(t.gamma);
        if (std::min(frac, 1.0 - frac) < c.pole_margin)
            throw DomainError("str_A: gamma within the margin of an integer puts a pole on the contour");
        break;
    }
    case IdentityKind::str_B: {
        const auto& t = c.triple;
        if (!(t.alpha > 0.0 && t.beta > 0.0 && t.gamma > 0.0))
            throw DomainError("str_B: spectral parameters must be > 0");
        if (std::abs(t.alpha + t.beta + t.gamma - t.eta) > 1e-12)
            throw DomainError("balancing condition eta = alpha + beta + gamma violated");
        if (std::abs(t.eta - 1.0) > 1e-12) throw DomainError("str_B: normalized weights need eta = 1");
        break;
    }
    }
}

VerificationReport verify(const IdentityCase& c)
{
    switch (c.kind) {
    case IdentityKind::hyperbolic_3_2: return verify_hyperbolic(c);
    case IdentityKind::index_3_1: return verify_index(c);
    case IdentityKind::orbifold_3_3: return verify_orbifold(c);
    case IdentityKind::gamma_int_4_6:
    case IdentityKind::gamma_int_4_8: return verify_gamma_reduced(c);
    case IdentityKind::gamma_multline_4_12: return verify_gamma_second(c);
    case IdentityKind::kels_4_16: return verify_kels(c);
    case IdentityKind::orbifold_limit_4_22: return verify_orbifold_limit_identity(c);
    case IdentityKind::str_A_first: return verify_str_A(c, StrWhich::first);
    case IdentityKind::str_A_second: return verify_str_A(c, StrWhich::second);
    case IdentityKind::str_B: return verify_str_B(c);
    case IdentityKind::appendixA_equiv: return verify_appendixA(c);
    }
    throw DomainError("verify: unhandled kind");
}

}  // namespace ybe
