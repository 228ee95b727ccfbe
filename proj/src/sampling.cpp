#include "ybe/sampling.hpp"

#include <cmath>
#include <numeric>

namespace ybe {

long Rng::integer(long lo, long hi)
{
    if (hi < lo) throw DomainError("Rng::integer: empty range");
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    // rejection keeps it exactly uniform
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return lo + long(x % span);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
{
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

// k positive numbers in [lo, hi] * (something), normalized to sum 1
std::vector<double> simplex(Rng& rng, int k, double lo = 0.7, double hi = 1.3)
{
    std::vector<double> w(k);
    for (auto& x : w) x = rng.uniform(lo, hi);
    double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= s;
    return w;
}

// k offsets in [-h, h] shifted to mean zero
std::vector<double> zero_mean(Rng& rng, int k, double h)
{
    std::vector<double> d(k);
    for (auto& x : d) x = rng.uniform(-h, h);
    double mean = std::accumulate(d.begin(), d.end(), 0.0) / k;
    for (auto& x : d) x -= mean;
    return d;
}

std::vector<long> charges(Rng& rng, long bound)
{
    for (;;) {
        std::vector<long> n(6);
        long s = 0;
        for (int j = 0; j < 5; ++j) {
            n[j] = rng.integer(-bound, bound);
            s += n[j];
        }
        n[5] = -s;
        if (std::labs(n[5]) <= bound) return n;
    }
}

SpectralTriple unit_triple(Rng& rng)
{
    auto w = simplex(rng, 3);
    return SpectralTriple{w[0], w[1], w[2], 1.0};
}

std::array<Spin, 3> spins(Rng& rng, bool discrete)
{
    std::array<Spin, 3> s{};
    for (auto& x : s) {
        x.sigma = rng.uniform(-0.8, 0.8);
        x.m = discrete ? rng.integer(-1, 1) : 0;
    }
    return s;
}

void fill(IdentityKind kind, Rng& rng, IdentityCase& c)
{
    switch (kind) {
    case IdentityKind::hyperbolic_3_2: {
        const double rho = rng.uniform(0.8, 1.25), th = rng.uniform(0.25, 1.0);
        c.moduli = Moduli(1.0, std::polar(rho, th));
        const cplx te = c.moduli.two_eta();
        auto w = simplex(rng, 6);
        auto d = zero_mean(rng, 6, 0.15);
        c.g.resize(6);
        for (int j = 0; j < 6; ++j) c.g[j] = cplx(te.real() * w[j], te.imag() / 6.0 + d[j]);
        c.g[5] = te - (c.g[0] + c.g[1] + c.g[2] + c.g[3] + c.g[4]);  // exact balancing
        break;
    }
    case IdentityKind::index_3_1: {
        c.p = rng.uniform(0.3, 0.6);
        const double q = c.p * c.p;
        auto w = simplex(rng, 6, 0.8, 1.2);
        auto ph = zero_mean(rng, 6, 0.5);
        c.g.resize(6);
        for (int j = 0; j < 6; ++j) c.g[j] = std::polar(std::pow(q, w[j]), ph[j]);
        c.n = charges(rng, 2);
        break;
    }
    case IdentityKind::orbifold_3_3: {
        c.r = int(rng.integer(1, 4));
        const double rho = rng.uniform(0.8, 1.3);
        double th = rng.uniform(0.15, 0.5);
        if (rng.uniform() < 0.5) th = -th;
        c.moduli = Moduli(kI, kI * std::polar(rho, th));
        const cplx te = c.moduli.two_eta();
        auto w = simplex(rng, 6);
        auto d = zero_mean(rng, 6, 0.1);
        c.g.resize(6);
        for (int j = 0; j < 6; ++j) c.g[j] = cplx(te.real() / 6.0 + d[j], te.imag() * w[j]);
        c.g[5] = te - (c.g[0] + c.g[1] + c.g[2] + c.g[3] + c.g[4]);
        c.n = charges(rng, 1);
        break;
    }
    case IdentityKind::gamma_int_4_6:
    case IdentityKind::gamma_int_4_8:
    case IdentityKind::gamma_multline_4_12: {
        c.omega1 = 1.0;
        c.g.resize(5);
        for (auto& x : c.g) x = cplx(rng.uniform(0.1, 0.45), rng.uniform(-0.4, 0.4));
        if (kind != IdentityKind::gamma_int_4_6) {
            c.g.push_back(-(c.g[0] + c.g[1] + c.g[2] + c.g[3] + c.g[4]));
        }
        break;
    }
    case IdentityKind::kels_4_16:
    case IdentityKind::orbifold_limit_4_22:
    case IdentityKind::appendixA_equiv:
        c.triple = unit_triple(rng);
        c.spins = spins(rng, true);
        c.sums.tail_tol = 1e-9;
        if (kind == IdentityKind::appendixA_equiv) {
            c.halfwidth = 5;
            c.tol = 1e-12;
        }
        break;
    case IdentityKind::str_A_first:
    case IdentityKind::str_A_second: {
        const double a = rng.uniform(0.1, 0.4), b = rng.uniform(0.1, 0.4);
        c.triple = SpectralTriple{a, b, a + b, 1.0};
        c.spins = spins(rng, false);
        break;
    }
    case IdentityKind::str_B:
        c.triple = unit_triple(rng);
        c.spins = spins(rng, true);
        c.sums.tail_tol = 1e-9;
        break;
    }
}

}  // namespace

IdentityCase sample_case(IdentityKind kind, std::uint64_t seed)
{
    for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
        Rng rng(derive_seed(seed, attempt));
        IdentityCase c;
        c.kind = kind;
        c.seed = seed;
        c.id = to_string(kind) + "-" + std::to_string(seed);
        fill(kind, rng, c);
        try {
            validate_case(c);
        } catch (const DomainError&) {
            continue;
        }
        if (kind == IdentityKind::gamma_int_4_8 || kind == IdentityKind::gamma_multline_4_12) {
            // keep Re g6 away from the integers so its crossed poles stay off the line
            double x = c.g[5].real();
            if (std::abs(x - std::round(x)) < 0.1) continue;
        }
        return c;
    }
    throw DomainError("sample_case: no admissible sample found for " + to_string(kind));
}

}  // namespace ybe
