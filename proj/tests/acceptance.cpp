// Acceptance run: one PASS/FAIL line per criterion, with details underneath.
//
//   acceptance [--expect-fail 3,...]
//
// Exit status is 0 when the failing criteria are exactly the ones listed
// (known, documented failures), 1 otherwise. The PASS/FAIL lines themselves
// never take the list into account.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "oracles/oracles.hpp"
#include "ybe/campaign.hpp"
#include "ybe/sampling.hpp"

using namespace ybe;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what)
    {
        pass = pass && ok;
        lines.push_back(std::string(ok ? "  ok    " : "  FAIL  ") + what);
    }
};

std::string fmt(const char* f, auto... a)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

// ---- 1: special functions against the mpmath oracles ------------------------------

template <class Rows, class F>
void oracle_block(Outcome& o, const char* name, const Rows& rows, F&& value)
{
    double worst = 0;
    std::size_t n = 0;
    for (const auto& r : rows) {
        double e;
        try {
            e = value(r);
        } catch (const std::exception&) {
            e = 1.0;
        }
        worst = std::max(worst, e);
        ++n;
    }
    o.check(n >= 200 && worst < 1e-10, fmt("%-18s %zu points, max rel err %.2e", name, n, worst));
}

Outcome criterion1()
{
    Outcome o;
    auto t0 = Clock::now();
    oracle_block(o, "log_gamma", oracle::kLogGamma, [](const auto& r) {
        // error in log Gamma is the relative error of Gamma
        return std::abs(log_gamma(r.z) - r.value) / std::max(1.0, 1e-3 * std::abs(r.value));
    });
    oracle_block(o, "q_pochhammer", oracle::kQPoch, [](const auto& r) { return rel(q_pochhammer(r.z, r.q), r.value); });
    oracle_block(o, "bernoulli_b22", oracle::kB22,
                 [](const auto& r) { return rel(bernoulli_b22(r.u, Moduli(r.w1, r.w2)), r.value); });
    oracle_block(o, "hyperbolic_gamma", oracle::kHypGamma,
                 [](const auto& r) { return rel(hyperbolic_gamma(r.u, Moduli(r.w1, r.w2)), r.value); });
    oracle_block(o, "gamma_h", oracle::kGammaH, [](const auto& r) {
        return rel(gamma_h(r.z, long(r.m.real()), OrbifoldParams{int(r.r.real()), Moduli(r.w1, r.w2)}), r.value);
    });
    double t = seconds_since(t0);
    o.check(t < 10.0, fmt("runtime %.2f s (< 10 s)", t));
    return o;
}

// ---- 2: product versus integral representation --------------------------------------

Outcome criterion2()
{
    Outcome o;
    auto t0 = Clock::now();
    Rng rng(2024);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        Moduli m(1.0, std::polar(rng.uniform(0.7, 1.5), rng.uniform(0.4, 1.3)));
        cplx x = m.eta() + cplx(rng.uniform(-0.4, 0.4), rng.uniform(-0.6, 0.6));
        worst = std::max(worst, rel(hyperbolic_gamma_integral(x, m), hyperbolic_gamma_product(x, m)));
    }
    o.check(worst < 1e-9, fmt("50 points, max rel difference %.2e (< 1e-9)", worst));
    double t = seconds_since(t0);
    o.check(t < 30.0, fmt("runtime %.2f s (< 30 s)", t));
    return o;
}

// ---- 3: identity suite ----------------------------------------------------------------

void suite(Outcome& o, const std::string& label, IdentityKind kind, int samples,
           const std::function<void(IdentityCase&)>& tweak = {})
{
    int ok = 0;
    double worst = 0;
    std::string first_bad;
    for (int s = 0; s < samples; ++s) {
        IdentityCase c = sample_case(kind, derive_seed(42, std::uint64_t(s)));
        if (tweak) tweak(c);
        VerificationReport r;
        try {
            r = verify(c);
        } catch (const std::exception& e) {
            r.pass = false;
            r.ratio = 0.0;
            if (first_bad.empty()) first_bad = e.what();
        }
        double d = std::abs(r.ratio - 1.0);
        worst = std::max(worst, d);
        if (r.pass && d < 1e-6) ++ok;
        else if (first_bad.empty()) first_bad = fmt("ratio %.6f%+.6fi", r.ratio.real(), r.ratio.imag());
    }
    std::string msg = fmt("%-26s %2d/%d pass, max |ratio-1| %.2e", label.c_str(), ok, samples, worst);
    if (ok != samples) msg += "  (" + first_bad + ")";
    o.check(ok == samples, msg);
}

Outcome criterion3()
{
    Outcome o;
    auto t0 = Clock::now();
    const int N = 10;
    suite(o, "hyperbolic_3_2", IdentityKind::hyperbolic_3_2, N);
    suite(o, "index_3_1", IdentityKind::index_3_1, N);
    for (int r : {1, 2, 3}) suite(o, "orbifold_3_3 r=" + std::to_string(r), IdentityKind::orbifold_3_3, N, [r](IdentityCase& c) { c.r = r; });
    suite(o, "gamma_int_4_6", IdentityKind::gamma_int_4_6, N);
    suite(o, "gamma_int_4_8", IdentityKind::gamma_int_4_8, N);
    suite(o, "gamma_multline_4_12", IdentityKind::gamma_multline_4_12, N);
    suite(o, "str_A_first", IdentityKind::str_A_first, N);
    suite(o, "str_A_second", IdentityKind::str_A_second, N);
    suite(o, "kels_4_16", IdentityKind::kels_4_16, N);
    suite(o, "orbifold_limit_4_22", IdentityKind::orbifold_limit_4_22, N);
    suite(o, "str_B", IdentityKind::str_B, N);
    double t = seconds_since(t0);
    o.check(t < 900.0, fmt("runtime %.1f s (< 15 min)", t));
    return o;
}

// ---- 4: consistency triangle ---------------------------------------------------------

Outcome criterion4()
{
    Outcome o;
    // orbifold at r = 1 against the hyperbolic identity with periods -i w, fugacities -i g
    double worst_l = 0, worst_r = 0;
    for (int s = 0; s < 10; ++s) {
        IdentityCase c = sample_case(IdentityKind::orbifold_3_3, derive_seed(4, std::uint64_t(s)));
        c.r = 1;
        IdentityCase h = c;
        h.kind = IdentityKind::hyperbolic_3_2;
        h.moduli = Moduli(-kI * c.moduli.omega1, -kI * c.moduli.omega2);
        for (auto& g : h.g) g = -kI * g;
        h.n.clear();
        VerificationReport a = verify(c), b = verify(h);
        // the orbifold normalization carries 1/(2 sqrt(w1' w2')) on the left
        cplx norm = 2.0 * std::sqrt(h.moduli.omega1 * h.moduli.omega2);
        worst_l = std::max(worst_l, rel(a.lhs * norm, b.lhs));
        worst_r = std::max(worst_r, std::abs(a.ratio - b.ratio));
    }
    o.check(worst_l < 1e-8 && worst_r < 1e-8,
            fmt("orbifold r=1 vs hyperbolic, 10 samples: lhs %.2e, ratio %.2e", worst_l, worst_r));

    // the epsilon-weighted half-line form against the bilateral form
    double worst_k = 0, worst_rhs = 0;
    for (int s = 0; s < 10; ++s) {
        IdentityCase k = sample_case(IdentityKind::kels_4_16, derive_seed(5, std::uint64_t(s)));
        IdentityCase h = k;
        h.kind = IdentityKind::orbifold_limit_4_22;
        VerificationReport a = verify(k), b = verify(h);
        worst_k = std::max(worst_k, rel(b.lhs, a.lhs));
        worst_rhs = std::max(worst_rhs, rel(b.rhs, a.rhs));
    }
    o.check(worst_k < 1e-8 && worst_rhs < 1e-8,
            fmt("half-line vs bilateral model-B sum, 10 samples: lhs %.2e, rhs %.2e", worst_k, worst_rhs));
    return o;
}

// ---- 5: appendix structure -------------------------------------------------------------

Outcome criterion5()
{
    Outcome o;
    double sym = 0, meas = 0, gap = 0;
    int ok = 0;
    for (int s = 0; s < 10; ++s) {
        VerificationReport r = verify(sample_case(IdentityKind::appendixA_equiv, derive_seed(6, std::uint64_t(s))));
        sym = std::max(sym, r.diagnostics.at("term_reflection_max_rel"));
        meas = std::max(meas, r.diagnostics.at("measure_forms_max_rel"));
        gap = std::max(gap, std::abs(r.ratio - 1.0));
        ok += r.pass;
    }
    o.check(sym < 1e-12, fmt("term reflection f(m,z) = f(-m,-z): max rel %.2e", sym));
    o.check(meas < 1e-12, fmt("two measure forms agree: max rel %.2e", meas));
    o.check(gap < 1e-12 && ok == 10, fmt("truncated sums equal: max |ratio-1| %.2e, %d/10 pass", gap, ok));
    return o;
}

// ---- 6: limits -------------------------------------------------------------------------

Outcome criterion6()
{
    Outcome o;
    auto show = [&](const std::string& name, const LimitExperiment& e, bool want) {
        ConvergenceTable t = run_limit(e);
        o.check(t.converged == want,
                fmt("%-34s final %.2e, threshold %.0e, monotone %s, expect %s", name.c_str(), t.final_deviation,
                    t.threshold, t.monotone ? "yes" : "no", want ? "converge" : "no convergence"));
    };
    show("omega2 -> inf", default_experiment(LimitKind::omega2_to_inf), true);
    show("q -> 1", default_experiment(LimitKind::q_to_one), true);
    show("r -> inf, m = 0", default_experiment(LimitKind::r_to_inf), true);
    LimitExperiment r1 = default_experiment(LimitKind::r_to_inf);
    r1.m = 1;
    show("r -> inf, m = 1", r1, true);
    show("asymptotic, + sector", default_experiment(LimitKind::asymptotic_behaviour), true);
    LimitExperiment minus = default_experiment(LimitKind::asymptotic_behaviour);
    minus.sign = -1;
    minus.ray_arg = -kPi / 2;
    show("asymptotic, - sector", minus, true);
    show("control: ray inside the cone (+)", asymptotic_negative_control(), false);
    LimitExperiment cone = asymptotic_negative_control();
    cone.sign = -1;
    show("control: ray inside the cone (-)", cone, false);
    LimitExperiment wrong = default_experiment(LimitKind::asymptotic_behaviour);
    wrong.sign = -1;
    show("control: wrong sign for the sector", wrong, false);
    return o;
}

// ---- 7: determinism and exit codes ---------------------------------------------------------

int run_cli(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " " + YBECHECK_PATH + " " + args + " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

Outcome criterion7()
{
    Outcome o;
    fs::path d = fs::temp_directory_path() / ("ybe_accept_" + std::to_string(::getpid()));
    fs::create_directories(d);
    auto put = [&](const char* name, const char* text) {
        std::ofstream(d / name) << text;
        return (d / name).string();
    };
    const std::string ok = put("ok.json", R"({"seed": 42, "samples": 3, "threads": 4,
        "cases": [{"kind": "hyperbolic_3_2"}, {"kind": "kels_4_16"}, {"kind": "str_A_first"}],
        "limits": [{"kind": "q_to_one"}]})");
    const std::string bad = put("bad.json", R"({"seed": 42, "cases": [{"kind": "hyperbolic_3_2", "smaples": 2}]})");
    const std::string red = put("red.json", R"({"seed": 42, "samples": 1, "cases": [{"kind": "gamma_multline_4_12"}]})");

    const std::string a = (d / "a.json").string(), b = (d / "b.json").string();
    int ea = run_cli("verify --config " + ok + " --out " + a);
    int eb = run_cli("verify --config " + ok + " --out " + b + " --threads 1");
    bool same = false, round = false;
    try {
        json ja = json::parse(read_file(a)), jb = json::parse(read_file(b));
        ja.erase("timing");
        jb.erase("timing");
        // thread count is echoed from the config and identical here; everything numeric must match
        same = ja.dump() == jb.dump();
        json full = json::parse(read_file(a));
        round = to_json(result_from_json(full)).dump() == full.dump();
    } catch (const std::exception&) {
    }
    o.check(ea == 0 && eb == 0, fmt("all-pass config exits 0 (got %d, %d)", ea, eb));
    o.check(same, "rerun with the same config and seed is bit-for-bit identical (timing block excluded)");
    o.check(round, "result file round-trips through the reader");
    int e1 = run_cli("verify --config " + red);
    o.check(e1 == 1, fmt("failing verification exits 1 (got %d)", e1));
    int e2 = run_cli("verify --config " + bad);
    o.check(e2 == 2, fmt("unknown config key exits 2 (got %d)", e2));
    int e3 = run_cli("verify --config " + ok, "YBE_TOLERANCE=garbage");
    o.check(e3 == 2, fmt("bad YBE_TOLERANCE exits 2 (got %d)", e3));
    fs::remove_all(d);
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    std::set<int> expected_fail;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            for (std::string tok; std::getline(ss, tok, ',');) expected_fail.insert(std::stoi(tok));
        }
    }

    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"special-function oracles", criterion1},   {"product vs integral form", criterion2},
        {"identity suite", criterion3},             {"consistency triangle", criterion4},
        {"appendix structure", criterion5},         {"limit suite", criterion6},
        {"determinism and exit codes", criterion7},
    };
    std::set<int> failed;
    for (int i = 0; i < 7; ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.check(false, std::string("exception: ") + e.what());
        }
        std::printf("criterion %d: %s  %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first);
        for (const auto& l : o.lines) std::printf("%s\n", l.c_str());
        std::fflush(stdout);
        if (!o.pass) failed.insert(i + 1);
    }
    if (failed == expected_fail) {
        if (!failed.empty()) std::printf("failing criteria match the documented known failures\n");
        return 0;
    }
    std::printf("failing criteria differ from the documented known failures\n");
    return 1;
}
