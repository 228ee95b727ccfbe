#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "ybe/campaign.hpp"

using namespace ybe;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir()
{
    fs::path d = fs::temp_directory_path() / ("ybe_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

void write(const fs::path& p, const std::string& s)
{
    std::ofstream f(p);
    f << s;
}

int run_cli(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + " " + YBECHECK_PATH + " " + args + " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

json without_timing(json j)
{
    j.erase("timing");
    return j;
}

const char* kSmall = R"({
  "seed": 42,
  "samples": 2,
  "cases": [
    {"kind": "hyperbolic_3_2"},
    {"kind": "gamma_int_4_6", "samples": 1}
  ],
  "limits": [
    {"kind": "q_to_one"},
    {"kind": "asymptotic_behaviour", "id": "cone", "ray_arg": 0.3, "expect": "diverge"}
  ]
})";

}  // namespace

TEST(Config, Parses)
{
    CampaignConfig c = parse_config(kSmall);
    EXPECT_EQ(c.seed, 42u);
    EXPECT_EQ(c.samples, 2);
    ASSERT_EQ(c.cases.size(), 2u);
    EXPECT_EQ(c.cases[1].samples.value(), 1);
    ASSERT_EQ(c.limits.size(), 2u);
    EXPECT_FALSE(c.limits[1].expect_converge);
    EXPECT_EQ(c.limits[1].id, "cone");
}

TEST(Config, UnknownKeyHasLineAndField)
{
    const std::string text = "{\n  \"seed\": 1,\n  \"cases\": [\n    {\"kind\": \"str_B\",\n     \"sampels\": 3}\n  ]\n}\n";
    try {
        parse_config(text);
        FAIL() << "expected ConfigError";
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.line(), 5);
        EXPECT_EQ(e.field(), "/cases/0/sampels");
        EXPECT_NE(std::string(e.what()).find("unknown key"), std::string::npos);
    }
    EXPECT_THROW(parse_config(R"({"seeed": 1})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"limits": [{"kind": "q_to_one", "ray_arg": 1}]})"), ConfigError);
}

TEST(Config, MalformedJsonHasLine)
{
    try {
        parse_config("{\n\"seed\": 1,\n\"samples\": ,\n}");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.line(), 3);
    }
}

TEST(Config, BalancingViolationIsConfigError)
{
    const std::string text = R"({
  "cases": [
    {"kind": "hyperbolic_3_2",
     "params": {"g": [[0.3, 0.1], [0.3, 0.1], [0.3, 0.1], [0.3, 0.1], [0.3, 0.1], [0.3, 0.1]],
                "moduli": {"omega1": 1, "omega2": [0.5, 0.8]}}}
  ]
})";
    try {
        parse_config(text);
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_NE(std::string(e.what()).find("balancing condition"), std::string::npos) << e.what();
        EXPECT_EQ(e.field(), "/cases/0/params");
        EXPECT_EQ(e.line(), 4);
    }
}

TEST(Config, ValueChecks)
{
    EXPECT_THROW(parse_config(R"({"samples": 0})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"tolerance": -1})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"cases": [{"kind": "nope"}]})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"limits": [{"kind": "q_to_one", "ladder": [0.9, 0.99]}]})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"seed": "x"})"), ConfigError);
}

TEST(Tolerance, Precedence)
{
    EXPECT_EQ(resolve_tolerance(std::nullopt, nullptr), 1e-6);
    EXPECT_EQ(resolve_tolerance(std::nullopt, "1e-8"), 1e-8);
    EXPECT_EQ(resolve_tolerance(1e-5, "1e-8"), 1e-5);
    EXPECT_THROW(resolve_tolerance(std::nullopt, "abc"), ConfigError);
    EXPECT_THROW(resolve_tolerance(std::nullopt, "-1"), ConfigError);
}

TEST(Campaign, EmptyCaseList)
{
    CampaignResult r = run_campaign(parse_config("{}"), 1e-6);
    EXPECT_TRUE(r.reports.empty());
    EXPECT_TRUE(r.all_pass());
    EXPECT_EQ(r.passed + r.failed, 0);
}

TEST(Campaign, RunsAndCounts)
{
    CampaignResult r = run_campaign(parse_config(kSmall), 1e-6);
    ASSERT_EQ(r.reports.size(), 3u);
    ASSERT_EQ(r.limits.size(), 2u);
    EXPECT_EQ(r.passed + r.failed, 5);
    EXPECT_TRUE(r.all_pass());
    for (const auto& x : r.reports) EXPECT_EQ(x.tol, 1e-6);
}

TEST(Campaign, DeterministicAcrossThreadCounts)
{
    CampaignConfig c = parse_config(kSmall);
    c.threads = 1;
    json a = without_timing(to_json(run_campaign(c, 1e-6)));
    c.threads = 4;
    json b = without_timing(to_json(run_campaign(c, 1e-6)));
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(Campaign, RoundTrip)
{
    CampaignResult r = run_campaign(parse_config(kSmall), 1e-6);
    json j = to_json(r);
    CampaignResult back = result_from_json(json::parse(write_result(r)));
    EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Campaign, PerCaseErrorsRecorded)
{
    // passes parsing, but the quadrature budget is too small to converge
    const std::string text = R"({"cases": [{"kind": "hyperbolic_3_2", "samples": 1},
        {"kind": "kels_4_16", "params": {"triple": {"alpha": 0.3, "beta": 0.3, "gamma": 0.4, "eta": 1},
         "spins": [{"sigma": 0.2, "m": 0}, {"sigma": 0.1, "m": 1}, {"sigma": -0.3, "m": 0}],
         "sums": {"initial_halfwidth": 1, "max_halfwidth": 2, "tail_tol": 1e-15}}}]})";
    CampaignResult r = run_campaign(parse_config(text), 1e-6);
    ASSERT_EQ(r.reports.size(), 2u);
    EXPECT_TRUE(r.reports[0].pass);
    EXPECT_FALSE(r.reports[1].pass);
    EXPECT_EQ(r.failed, 1);
}

TEST(Files, AtomicWriteReplaces)
{
    fs::path d = scratch_dir();
    fs::path p = d / "out.json";
    atomic_write(p.string(), "one");
    atomic_write(p.string(), "two");
    EXPECT_EQ(read_file(p.string()), "two");
    for (const auto& e : fs::directory_iterator(d)) EXPECT_EQ(e.path().filename(), "out.json");
    EXPECT_THROW(atomic_write((d / "missing" / "x.json").string(), "x"), Error);
    fs::remove_all(d);
}

TEST(Files, KeyLines)
{
    LineMap m = json_key_lines("{\n \"a\": {\n  \"b\": [1,\n {\"c\": 2}]\n }\n}");
    EXPECT_EQ(m.at("/a"), 2);
    EXPECT_EQ(m.at("/a/b"), 3);
    EXPECT_EQ(m.at("/a/b/1/c"), 4);
    EXPECT_EQ(line_of(m, "/a/b/1/c/zzz"), 4);
    // array elements have no key line of their own; the enclosing key is used
    EXPECT_EQ(line_of(m, "/a/b/0"), 3);
}

// ---- the binary -------------------------------------------------------------------

TEST(Cli, ExitCodesAndBitForBit)
{
    fs::path d = scratch_dir();
    write(d / "ok.json", kSmall);
    write(d / "bad.json", R"({"seed": 1, "bogus": true})");
    write(d / "red.json", R"({"samples": 1, "cases": [{"kind": "str_A_second"}]})");

    const std::string ok = "verify --config " + (d / "ok.json").string();
    EXPECT_EQ(run_cli(ok + " --out " + (d / "a.json").string() + " --csv " + (d / "a.csv").string()), 0);
    EXPECT_EQ(run_cli(ok + " --out " + (d / "b.json").string()), 0);
    json a = json::parse(read_file((d / "a.json").string())), b = json::parse(read_file((d / "b.json").string()));
    EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump());
    EXPECT_NE(read_file((d / "a.csv").string()).find("case,kind,ratio_re,ratio_im,abs_gap,verdict"),
              std::string::npos);

    // a different seed changes the samples
    EXPECT_EQ(run_cli(ok + " --seed 7 --out " + (d / "c.json").string()), 0);
    json c = json::parse(read_file((d / "c.json").string()));
    EXPECT_EQ(c["seed"], 7);
    EXPECT_NE(c["reports"][0]["lhs"], a["reports"][0]["lhs"]);

    EXPECT_EQ(run_cli("verify --config " + (d / "bad.json").string()), 2);
    EXPECT_EQ(run_cli("verify --config " + (d / "nonexistent.json").string()), 2);
    EXPECT_EQ(run_cli("verify --config " + (d / "red.json").string()), 1);
    EXPECT_EQ(run_cli(ok, "YBE_TOLERANCE=nonsense"), 2);
    EXPECT_EQ(run_cli("list"), 0);
    EXPECT_EQ(run_cli("explain " + (d / "a.json").string() + " hyperbolic_3_2-0-0"), 0);
    EXPECT_EQ(run_cli("explain " + (d / "a.json").string() + " no-such-case"), 2);
    EXPECT_EQ(run_cli("frobnicate"), 2);
    fs::remove_all(d);
}

TEST(Cli, EnvToleranceUsedWhenConfigSilent)
{
    fs::path d = scratch_dir();
    write(d / "t.json", R"({"samples": 1, "cases": [{"kind": "hyperbolic_3_2"}]})");
    write(d / "u.json", R"({"samples": 1, "tolerance": 1e-4, "cases": [{"kind": "hyperbolic_3_2"}]})");
    EXPECT_EQ(run_cli("verify --config " + (d / "t.json").string() + " --out " + (d / "t.out").string(),
                      "YBE_TOLERANCE=1e-9"), 0);
    EXPECT_EQ(json::parse(read_file((d / "t.out").string()))["tolerance"], 1e-9);
    EXPECT_EQ(run_cli("verify --config " + (d / "u.json").string() + " --out " + (d / "u.out").string(),
                      "YBE_TOLERANCE=1e-9"), 0);
    EXPECT_EQ(json::parse(read_file((d / "u.out").string()))["tolerance"], 1e-4);
    fs::remove_all(d);
}
