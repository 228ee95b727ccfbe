#pragma once

#include "ybe/special_fn.hpp"

namespace ybe {

// Lattice spin: continuous part sigma, discrete part m (0 for continuous models).
struct Spin {
    double sigma = 0.0;
    long m = 0;
};

// Spectral parameters. Model A wants alpha + beta = gamma, model B
// eta = alpha + beta + gamma.
struct SpectralTriple {
    double alpha = 0.25;
    double beta = 0.25;
    double gamma = 0.5;
    double eta = 1.0;
};

// One chiral multiplet of the rank-1 theory.
//   delta           Weyl weight
//   gauge_weight    rho on the Cartan, in {-2..2}
//   flavor_charge   flavor chemical potential (additive for S^2, multiplicative fugacity for the index)
//   flavor_discrete flavor flux n
struct MultipletData {
    double delta = 0.0;
    int gauge_weight = 1;
    cplx flavor_charge{0.0, 0.0};
    long flavor_discrete = 0;
};

// ---- model A (continuous spins) ----------------------------------------------

// Gamma(alpha +- i x +- i z), four factors
cplx weight_A_vertical(double alpha, Spin x, Spin z);
// Gamma(-alpha + i x +- i z) / Gamma(alpha + i x +- i z)
cplx weight_A_horizontal(double alpha, Spin x, Spin z);

// Two normalizations of S and R that give the same relation:
//   classic:  S = 1/Gamma(+-2iz),          R = 4 pi Gamma(2a)Gamma(2b)/Gamma(2c)
//   reduced:  S = 1/(2 pi Gamma(+-2iz)),   R = 2 w1 Gamma(2a)Gamma(2b)/Gamma(2c), w1 = 1
enum class NormA { classic, reduced };

cplx self_A(Spin z, NormA norm = NormA::reduced);
cplx r_factor_A(const SpectralTriple& t, NormA norm = NormA::reduced);

// ---- model B (continuous + discrete spins) ---------------------------------

enum class WeightBForm {
    general,     // crossing parameter eta kept, four gamma ratios
    normalized,  // eta = 1 with the Gamma((1+a)/2)/Gamma((1-a)/2) prefactor
};

// general form, with (N, S) running over
// (mi+mj, si+sj), (mi-mj, si-sj), (mj-mi, sj-si), (-mi-mj, -si-sj):
//   prod Gamma(N/2 + (eta-alpha)/2 + iS/2) / Gamma(1 + N/2 - (eta-alpha)/2 - iS/2)
cplx weight_B(double alpha, double eta, Spin si, Spin sj, WeightBForm form = WeightBForm::general);
cplx log_weight_B(double alpha, double eta, Spin si, Spin sj, WeightBForm form = WeightBForm::general);

// (sigma^2 + m^2) / 2 pi
double self_B(Spin s);
// (1/2 pi) Gamma(m +- i sigma + 1)/Gamma(m +- i sigma); equal to self_B off poles
cplx self_B_gamma_form(Spin s);

// prod_{x in a,b,c} Gamma(x)/Gamma(eta - x)
cplx r_factor_B(const SpectralTriple& t);

// ---- superconformal index --------------------------------------------------

// (q^{1 + |k|/2} / x; q) / (q^{|k|/2} x; q) with x = q^{delta/2} g z^rho,
// k = rho m + n. Here g = mult.flavor_charge is a multiplicative fugacity.
cplx index_chiral_factor(const MultipletData& mult, cplx z, long m, cplx q);

// SU(2) vector multiplet with Vandermonde, as it enters the index integrand:
//   (1 - q^m z^2)(1 - q^m z^-2) / (q^m z^{6m})
cplx index_vector_factor(cplx z, long m, cplx q);
// the generic form (q^{|2m|/2} z^2; q)(q^{|2m|/2} z^-2; q)
cplx index_vector_pochhammer(cplx z, long m, cplx q);

// ---- squashed three-sphere -------------------------------------------------

// gamma(g + iz) gamma(g - iz), the SU(2) doublet
cplx sphere3_chiral_factor(cplx g, cplx z, const Moduli& mod);
// 1 / (gamma(2iz) gamma(-2iz)); 0 at z = 0
cplx sphere3_vector_factor(cplx z, const Moduli& mod);

// ---- orbifold ----------------------------------------------------------------

// Gamma_h(g + z, n + m) Gamma_h(g - z, n - m)
cplx orbifold_chiral_factor(cplx g, long n, cplx z, long m, const OrbifoldParams& p);
// 1 / (Gamma_h(2z, 2m) Gamma_h(-2z, -2m)); 0 where Gamma_h has its pole
cplx orbifold_vector_factor(cplx z, long m, const OrbifoldParams& p);

// ---- two-sphere --------------------------------------------------------------

// Gamma(D/2 - i rho z - phi - k/2) / Gamma(1 - D/2 + i rho z + phi + k/2),
// k = rho m + n, phi = mult.flavor_charge (additive)
cplx sphere2_chiral_factor(const MultipletData& mult, cplx z, long m);
// (-1)^m (alpha(m)^2/4 + alpha(z)^2) with alpha(m) = 2m, alpha(z) = 2z
cplx sphere2_vector_factor(cplx z, long m);

}  // namespace ybe
