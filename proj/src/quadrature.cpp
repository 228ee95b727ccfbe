#include "ybe/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace ybe {

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadratureSpec: tolerances must be > 0");
    if (!(cutoff > 0.0)) throw DomainError("QuadratureSpec: cutoff must be > 0");
    if (max_refinements < 1) throw DomainError("QuadratureSpec: max_refinements must be >= 1");
}

void SumSpec::validate() const
{
    if (initial_halfwidth < 1) throw DomainError("SumSpec: initial_halfwidth must be >= 1");
    if (!(tail_tol > 0.0)) throw DomainError("SumSpec: tail_tol must be > 0");
    if (max_halfwidth < initial_halfwidth) throw DomainError("SumSpec: max_halfwidth < initial_halfwidth");
}

namespace {

constexpr double kHalfPi = 0.5 * kPi;

cplx checked(cplx v, double x)
{
    if (!is_finite(v)) throw DomainError("integrand is not finite at x = " + std::to_string(x));
    return v;
}

// sinh-sinh map pieces
double de_x(double t) { return std::sinh(kHalfPi * std::sinh(t)); }
double de_w(double t) { return kHalfPi * std::cosh(t) * std::cosh(kHalfPi * std::sinh(t)); }

}  // namespace

QuadResult integrate_real_line(const RealIntegrand& f, const QuadratureSpec& spec)
{
    spec.validate();

    // rough scale of the integrand near the origin
    double peak = 0.0;
    for (double x : {0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0})
        peak = std::max(peak, std::abs(checked(f(x), x)));

    // decay probing: grow the window until the edge contribution is negligible
    const double edge_target = 0.1 * std::max(spec.abs_tol, spec.rel_tol * peak);
    double L = spec.cutoff;
    auto tail_at = [&](double l) { return l * (std::abs(checked(f(l), l)) + std::abs(checked(f(-l), -l))); };
    double tail = tail_at(L);
    int grow = 0;
    while (tail > edge_target && grow < 12) {
        L *= 2.0;
        tail = tail_at(L);
        ++grow;
    }
    if (tail > edge_target)
        throw TailTooFat("integrate_real_line: integrand not decaying by |x| = " + std::to_string(L));

    const double T = std::asinh(std::asinh(L) / kHalfPi);
    const int n0 = 8;
    double h = T / n0;
    auto g = [&](double t) { double x = de_x(t); return checked(f(x), x) * de_w(t); };

    cplx sum = g(0.0);
    for (int k = 1; k <= n0; ++k) sum += g(k * h) + g(-k * h);
    cplx S = h * sum;
    int nodes = 2 * n0 + 1;

    QuadResult res;
    res.window = L;
    res.tail = tail;
    const int min_levels = std::min(3, spec.max_refinements);
    for (int level = 1; level <= spec.max_refinements; ++level) {
        h *= 0.5;
        long half = static_cast<long>(n0) << level;  // nodes at k*h, |k| <= half
        cplx odd = 0.0;
        for (long k = 1; k <= half; k += 2) odd += g(k * h) + g(-k * h);
        nodes += static_cast<int>(half);
        cplx S_new = 0.5 * S + h * odd;
        double diff = std::abs(S_new - S);
        S = S_new;
        if (level >= min_levels && diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(S))) {
            res.value = S;
            res.err = diff + tail;
            res.nodes = nodes;
            res.levels = level;
            return res;
        }
    }
    throw NoConvergence("integrate_real_line: no convergence after " + std::to_string(spec.max_refinements) +
                        " refinements");
}

QuadResult integrate_unit_circle(const ContourIntegrand& f, const QuadratureSpec& spec)
{
    spec.validate();
    auto node = [](long k, long N) {
        double th = 2.0 * kPi * double(k) / double(N);
        return cplx(std::cos(th), std::sin(th));
    };
    long N = 16;
    cplx sum = 0.0;
    for (long k = 0; k < N; ++k) {
        cplx z = node(k, N);
        cplx v = f(z);
        if (!is_finite(v)) throw DomainError("integrate_unit_circle: integrand not finite");
        sum += v;
    }
    cplx S = sum / double(N);
    QuadResult res;
    for (int level = 1; level <= spec.max_refinements; ++level) {
        long N2 = 2 * N;
        cplx odd = 0.0;
        for (long k = 1; k < N2; k += 2) {
            cplx v = f(node(k, N2));
            if (!is_finite(v)) throw DomainError("integrate_unit_circle: integrand not finite");
            odd += v;
        }
        cplx S_new = 0.5 * S + odd / double(N2);
        double diff = std::abs(S_new - S);
        S = S_new;
        N = N2;
        if (level >= 1 && diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(S))) {
            res.value = S;
            res.err = diff;
            res.nodes = static_cast<int>(N);
            res.levels = level;
            return res;
        }
    }
    throw NoConvergence("integrate_unit_circle: no convergence with " + std::to_string(N) + " nodes");
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
    double a, b;
    cplx value;
    double err;
    bool operator<(const Piece& o) const { return err < o.err; }
};

Piece gk15(const RealIntegrand& f, double a, double b)
{
    double c = 0.5 * (a + b), hl = 0.5 * (b - a);
    cplx fc = f(c);
    cplx rk = fc * kWgk[7];
    cplx rg = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        double dx = hl * kXgk[j];
        cplx s = f(c - dx) + f(c + dx);
        rk += kWgk[j] * s;
        if (j % 2 == 1) rg += kWg[j / 2] * s;
    }
    cplx val = rk * hl;
    double err = std::abs((rk - rg) * hl);
    return {a, b, val, err};
}

}  // namespace

Estimate integrate_interval_gk(const RealIntegrand& f, double a, double b, double abs_tol, double rel_tol,
                               int max_intervals)
{
    // start from a few pieces so oscillatory integrands get a fair first look
    const int start = 8;
    std::priority_queue<Piece> heap;
    cplx total = 0.0;
    double err = 0.0;
    for (int i = 0; i < start; ++i) {
        double lo = a + (b - a) * i / start, hi = a + (b - a) * (i + 1) / start;
        Piece p = gk15(f, lo, hi);
        total += p.value;
        err += p.err;
        heap.push(p);
    }
    int count = start;
    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (count >= max_intervals) throw NoConvergence("integrate_interval_gk: interval budget exhausted");
        Piece worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Piece l = gk15(f, worst.a, mid), r = gk15(f, mid, worst.b);
        total += l.value + r.value - worst.value;
        err += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        ++count;
    }
    // recompute the total in a fixed order so roundoff does not depend on history
    std::vector<Piece> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Piece& p, const Piece& q) { return p.a < q.a; });
    Estimate out;
    for (const Piece& p : all) {
        out.value += p.value;
        out.err += p.err;
    }
    return out;
}

namespace {

double shell_ratio(double a, double b)
{
    if (a == 0.0) return 0.0;
    if (b == 0.0) return std::numeric_limits<double>::infinity();
    return a / b;
}

// geometric tail bound from recent shells (newest last); 2x safety
double tail_from_shells(const std::vector<double>& shells)
{
    std::size_t n = shells.size();
    if (n < 3) return std::numeric_limits<double>::infinity();
    double rho = 0.0;
    for (std::size_t i = n - 1; i >= 1 && i + 3 >= n; --i) rho = std::max(rho, shell_ratio(shells[i], shells[i - 1]));
    if (shells.back() == 0.0 && rho == 0.0) return 0.0;
    if (!(rho < 1.0)) return std::numeric_limits<double>::infinity();
    return 2.0 * shells.back() * rho / (1.0 - rho);
}

}  // namespace

SumResult bilateral_sum(const SumTerm& term, const SumSpec& spec)
{
    spec.validate();
    SumResult res;
    Estimate t0 = term(0);
    cplx S = t0.value;
    double terr = t0.err;
    std::vector<double> shells{std::abs(t0.value)};
    for (long M = 1;; ++M) {
        Estimate a = term(M), b = term(-M);
        cplx shell = a.value + b.value;
        S += shell;
        terr += a.err + b.err;
        shells.push_back(std::abs(shell));
        if (M >= spec.initial_halfwidth) {
            double tail = tail_from_shells(shells);
            if (tail <= spec.tail_tol * std::abs(S)) {
                res.value = S;
                res.tail_estimate = tail;
                res.term_err = terr;
                res.err = tail + terr;
                res.last_shell = shells.back();
                res.halfwidth = M;
                return res;
            }
        }
        if (M >= spec.max_halfwidth)
            throw NoConvergence("bilateral_sum: tail still fat at halfwidth " + std::to_string(M));
    }
}

SumResult bilateral_sum(const std::function<cplx(long)>& term, const SumSpec& spec)
{
    return bilateral_sum(SumTerm([&](long m) { return Estimate{term(m), 0.0}; }), spec);
}

SumResult half_line_weighted_sum(const SumTerm& term, const std::function<int(long)>& weight,
                                 const SumSpec& spec, std::optional<long> cap)
{
    SumResult res;
    if (cap) {
        if (*cap < 0) throw DomainError("half_line_weighted_sum: negative cap");
        cplx S = 0.0;
        double terr = 0.0;
        for (long m = 0; m <= *cap; ++m) {
            Estimate t = term(m);
            double w = weight(m);
            S += w * t.value;
            terr += w * t.err;
        }
        res.value = S;
        res.term_err = terr;
        res.err = terr;
        res.halfwidth = *cap;
        return res;
    }
    spec.validate();
    cplx S = 0.0;
    double terr = 0.0;
    std::vector<double> shells;
    for (long m = 0;; ++m) {
        Estimate t = term(m);
        double w = weight(m);
        cplx shell = w * t.value;
        S += shell;
        terr += w * t.err;
        shells.push_back(std::abs(shell));
        if (m >= spec.initial_halfwidth) {
            double tail = tail_from_shells(shells);
            if (tail <= spec.tail_tol * std::abs(S)) {
                res.value = S;
                res.tail_estimate = tail;
                res.term_err = terr;
                res.err = tail + terr;
                res.last_shell = shells.back();
                res.halfwidth = m;
                return res;
            }
        }
        if (m >= spec.max_halfwidth)
            throw NoConvergence("half_line_weighted_sum: tail still fat at m = " + std::to_string(m));
    }
}

SumResult half_line_weighted_sum(const std::function<cplx(long)>& term, const std::function<int(long)>& weight,
                                 const SumSpec& spec, std::optional<long> cap)
{
    return half_line_weighted_sum(SumTerm([&](long m) { return Estimate{term(m), 0.0}; }), weight, spec, cap);
}

}  // namespace ybe
