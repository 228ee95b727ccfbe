// ybecheck: run verification campaigns, list identity kinds, explain reports.
// Exit codes: 0 all pass, 1 some verification failed, 2 configuration or usage error.

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "ybe/campaign.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int cmd_verify(const std::string& config_path, std::optional<std::uint64_t> seed, std::optional<int> samples,
               std::optional<std::string> out, std::optional<std::string> csv, std::optional<int> threads)
{
    using namespace ybe;
    CampaignConfig cfg;
    double tol = 0;
    try {
        cfg = load_config(config_path);
        if (seed) {
            cfg.seed = *seed;
            cfg.echo["seed"] = *seed;
        }
        if (samples) {
            if (*samples < 1) throw ConfigError("--samples", "must be >= 1");
            cfg.samples = *samples;
            for (auto& c : cfg.cases)
                if (!c.fixed) c.samples = *samples;
            cfg.echo["samples"] = *samples;
        }
        if (out) cfg.output = *out;
        if (csv) cfg.csv = *csv;
        if (threads) cfg.threads = *threads;
        tol = resolve_tolerance(cfg.tolerance, std::getenv(kToleranceEnv));
    } catch (const ConfigError& e) {
        std::cerr << "ybecheck: " << e.what() << "\n";
        return kExitConfig;
    }

    CampaignResult res = run_campaign(cfg, tol);

    for (const auto& r : res.reports) {
        std::printf("%s  %-34s |ratio-1| = %.3e  gap = %.3e  err = %.3e\n", r.pass ? "PASS" : "FAIL",
                    r.id.c_str(), std::abs(r.ratio - 1.0), r.abs_gap, r.est_err);
        for (const auto& n : r.notes)
            if (n.rfind("error:", 0) == 0) std::printf("      %s\n", n.c_str());
    }
    for (const auto& l : res.limits) {
        std::printf("%s  %-34s final = %.3e  threshold = %.1e  monotone = %s  expect %s\n",
                    l.pass ? "PASS" : "FAIL", l.id.c_str(), l.table.final_deviation, l.table.threshold,
                    l.table.monotone ? "yes" : "no", l.expect_converge ? "converge" : "diverge");
        if (!l.error.empty()) std::printf("      error: %s\n", l.error.c_str());
    }
    std::printf("%d passed, %d failed, tolerance %.1e, seed %llu, %.2f s\n", res.passed, res.failed, res.tolerance,
                (unsigned long long)res.seed, res.seconds_total);

    try {
        if (!cfg.output.empty()) atomic_write(cfg.output, write_result(res));
        if (!cfg.csv.empty()) atomic_write(cfg.csv, result_csv(res));
    } catch (const ybe::Error& e) {
        std::cerr << "ybecheck: " << e.what() << "\n";
        return kExitConfig;
    }
    return res.all_pass() ? kExitPass : kExitFail;
}

int cmd_list()
{
    for (const auto& e : ybe::identity_catalog())
        std::printf("%-22s %s\n%-22s balancing: %s\n", e.name.c_str(), e.summary.c_str(), "", e.balancing.c_str());
    return kExitPass;
}

int cmd_explain(const std::string& report_path, const std::string& case_id)
{
    using namespace ybe;
    CampaignResult res;
    try {
        res = result_from_json(json::parse(read_file(report_path)));
    } catch (const std::exception& e) {
        std::cerr << "ybecheck: cannot read report " << report_path << ": " << e.what() << "\n";
        return kExitConfig;
    }
    for (const auto& r : res.reports)
        if (r.id == case_id) {
            std::cout << explain(r);
            return r.pass ? kExitPass : kExitFail;
        }
    for (const auto& l : res.limits)
        if (l.id == case_id) {
            std::cout << "limit    " << l.id << " (" << to_string(l.experiment.kind) << ", expect "
                      << (l.expect_converge ? "converge" : "diverge") << ")\n";
            std::cout << to_json(l.table).dump(2) << "\n";
            return l.pass ? kExitPass : kExitFail;
        }
    std::cerr << "ybecheck: no case '" << case_id << "' in " << report_path << "\n";
    return kExitConfig;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Numerical verification of hyperbolic-gamma integral identities and star-triangle relations"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a campaign from a JSON config");
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples, threads;
    std::optional<std::string> out, csv;
    verify->add_option("--config", config_path, "campaign config (JSON)")->required();
    verify->add_option("--seed", seed, "override the campaign seed");
    verify->add_option("--samples", samples, "override samples per sampled case");
    verify->add_option("--out", out, "result file (JSON), written atomically");
    verify->add_option("--csv", csv, "optional CSV table (case, ratio, gap, verdict)");
    verify->add_option("--threads", threads, "worker threads (0: all cores)");

    auto* list = app.add_subcommand("list", "print the identity kinds");

    auto* expl = app.add_subcommand("explain", "show one case of a result file");
    std::string report_path, case_id;
    expl->add_option("report", report_path, "result file")->required();
    expl->add_option("case", case_id, "case id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    if (*verify) return cmd_verify(config_path, seed, samples, out, csv, threads);
    if (*list) return cmd_list();
    if (*expl) return cmd_explain(report_path, case_id);
    return kExitConfig;
}
