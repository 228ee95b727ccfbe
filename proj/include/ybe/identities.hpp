#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ybe/quadrature.hpp"
#include "ybe/weights.hpp"

namespace ybe {

enum class IdentityKind {
    hyperbolic_3_2,
    index_3_1,
    orbifold_3_3,
    gamma_int_4_6,
    gamma_int_4_8,
    gamma_multline_4_12,
    kels_4_16,
    orbifold_limit_4_22,
    str_A_first,
    str_A_second,
    str_B,
    appendixA_equiv,
};

struct IdentityInfo {
    IdentityKind kind;
    std::string name;
    std::string summary;
    std::string balancing;
};

const std::vector<IdentityInfo>& identity_catalog();
std::string to_string(IdentityKind k);
// DomainError for an unknown name
IdentityKind identity_kind_from_string(std::string_view s);

// Parameters for one verification. Which fields matter depends on the kind:
//   hyperbolic_3_2     g[6], moduli                     sum g = w1 + w2
//   index_3_1          g[6] (multiplicative), n[6], p    prod g = q = p^2, sum n = 0
//   orbifold_3_3       g[6], n[6], moduli, r             sum g = w1 + w2, sum n = 0 mod r
//   gamma_int_4_6      g[5], omega1
//   gamma_int_4_8      g[6], omega1                      sum g = 0
//   gamma_multline_4_12 g[6], omega1                     sum g = 0
//   kels_4_16, orbifold_limit_4_22, appendixA_equiv
//                      g[6], n[6]                        sum g = 1, sum n = 0
//                      (or triple + spins when g is empty)
//   str_A_first/second triple (gamma = alpha + beta), spins
//   str_B              triple (eta = alpha + beta + gamma = 1), spins with m
struct IdentityCase {
    IdentityKind kind = IdentityKind::hyperbolic_3_2;
    std::string id;
    std::uint64_t seed = 0;

    std::vector<cplx> g;
    std::vector<long> n;
    Moduli moduli{cplx(1.0, 0.0), cplx(1.0, 0.0)};
    double omega1 = 1.0;  // gamma-level kinds
    double p = 0.5;       // index: q = p^2
    int r = 1;
    SpectralTriple triple;
    std::array<Spin, 3> spins{};  // sigma_i, sigma_j, sigma_k
    long halfwidth = 5;           // appendixA truncation

    QuadratureSpec quad;
    SumSpec sums;
    double tol = 1e-6;
    double pole_margin = 0.05;
};

struct VerificationReport {
    std::string id;
    IdentityKind kind = IdentityKind::hyperbolic_3_2;
    std::uint64_t seed = 0;
    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    cplx ratio{0.0, 0.0};
    double abs_gap = 0.0;
    double est_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::map<std::string, double> diagnostics;
    std::vector<std::string> notes;
    IdentityCase params;
};

inline constexpr double kVerdictMargin = 10.0;
inline constexpr double kRoundoffFloor = 1e-12;

// Fills ratio, abs_gap, est_err (with the roundoff floor) and the verdict.
void finalize_report(VerificationReport& rep, const Estimate& lhs, cplx rhs, double rhs_err = 0.0);
bool verdict(cplx ratio, double abs_gap, double est_err, double tol);

// Balancing and pole-distance checks. DomainError naming the violated condition.
void validate_case(const IdentityCase& c);

// Fill g and n from triple + spins for the model-B kinds when g is empty.
IdentityCase with_derived_fugacities(const IdentityCase& c);

VerificationReport verify_hyperbolic(const IdentityCase& c);
VerificationReport verify_index(const IdentityCase& c);
VerificationReport verify_orbifold(const IdentityCase& c);
VerificationReport verify_gamma_reduced(const IdentityCase& c);  // 4_6 and 4_8
VerificationReport verify_gamma_second(const IdentityCase& c);
enum class StrWhich { first, second };
VerificationReport verify_str_A(const IdentityCase& c, StrWhich which);
VerificationReport verify_kels(const IdentityCase& c);
VerificationReport verify_str_B(const IdentityCase& c);
VerificationReport verify_orbifold_limit_identity(const IdentityCase& c);
VerificationReport verify_appendixA(const IdentityCase& c);

// dispatch on c.kind
VerificationReport verify(const IdentityCase& c);

// LHS integrand of the model-B identities at (m, z): the raw form summed over
// all m, and the epsilon-weighted form summed over m >= 0.
cplx kels_integrand(const std::vector<cplx>& g, const std::vector<long>& n, long m, cplx z);
cplx orbifold_limit_integrand(const std::vector<cplx>& g, const std::vector<long>& n, long m, cplx z);

}  // namespace ybe
