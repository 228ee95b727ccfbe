#include "ybe/report.hpp"

#include "json_reader.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <unistd.h>

namespace ybe {

namespace {

using namespace detail;

json quad_to_json(const QuadratureSpec& q)
{
    return json{{"abs_tol", q.abs_tol}, {"rel_tol", q.rel_tol}, {"max_refinements", q.max_refinements},
                {"cutoff", q.cutoff}};
}

json sums_to_json(const SumSpec& s)
{
    return json{{"initial_halfwidth", s.initial_halfwidth}, {"tail_tol", s.tail_tol},
                {"max_halfwidth", s.max_halfwidth}};
}

json triple_to_json(const SpectralTriple& t)
{
    return json{{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma}, {"eta", t.eta}};
}

json double_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double double_from(const json& v, const std::string& ptr, const LineMap& lines)
{
    if (v.is_null()) return std::numeric_limits<double>::infinity();
    if (!v.is_number()) fail(lines, ptr, "expected a number");
    return v.get<double>();
}

}  // namespace

json cplx_to_json(cplx z) { return json::array({double_or_null(z.real()), double_or_null(z.imag())}); }

cplx cplx_from_json(const json& j, const std::string& field)
{
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx(j[0].get<double>(), j[1].get<double>());
    throw ConfigError(field, "expected a number or [re, im]");
}

// ---- cases -------------------------------------------------------------------

json to_json(const IdentityCase& c)
{
    json j;
    j["kind"] = to_string(c.kind);
    j["id"] = c.id;
    j["seed"] = c.seed;
    json g = json::array();
    for (cplx x : c.g) g.push_back(cplx_to_json(x));
    j["g"] = g;
    j["n"] = c.n;
    j["moduli"] = json{{"omega1", cplx_to_json(c.moduli.omega1)}, {"omega2", cplx_to_json(c.moduli.omega2)}};
    j["omega1"] = c.omega1;
    j["p"] = c.p;
    j["r"] = c.r;
    j["triple"] = triple_to_json(c.triple);
    json sp = json::array();
    for (const auto& s : c.spins) sp.push_back(json{{"sigma", s.sigma}, {"m", s.m}});
    j["spins"] = sp;
    j["halfwidth"] = c.halfwidth;
    j["quad"] = quad_to_json(c.quad);
    j["sums"] = sums_to_json(c.sums);
    j["tol"] = c.tol;
    j["pole_margin"] = c.pole_margin;
    return j;
}

IdentityCase case_from_json(const json& j, const std::string& path, const LineMap& lines, IdentityCase c)
{
    Obj o(j, path, lines);
    if (auto* v = o.get("kind")) {
        if (!v->is_string()) fail(lines, o.at("kind"), "expected a string");
        try {
            c.kind = identity_kind_from_string(v->get<std::string>());
        } catch (const DomainError& e) {
            fail(lines, o.at("kind"), e.what());
        }
    }
    o.str("id", c.id);
    o.integer("seed", c.seed);
    if (auto* v = o.get("g")) {
        need_array(*v, o.at("g"), lines);
        c.g.clear();
        for (std::size_t i = 0; i < v->size(); ++i) c.g.push_back(read_cplx((*v)[i], child(o.at("g"), i), lines));
    }
    if (auto* v = o.get("n")) {
        need_array(*v, o.at("n"), lines);
        c.n.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            if (!(*v)[i].is_number_integer()) fail(lines, child(o.at("n"), i), "expected an integer");
            c.n.push_back((*v)[i].get<long>());
        }
    }
    if (auto* v = o.get("moduli")) {
        Obj m(*v, o.at("moduli"), lines);
        cplx w1 = c.moduli.omega1, w2 = c.moduli.omega2;
        m.complex("omega1", w1);
        m.complex("omega2", w2);
        m.finish();
        try {
            c.moduli = Moduli(w1, w2);
        } catch (const DomainError& e) {
            fail(lines, o.at("moduli"), e.what());
        }
    }
    o.num("omega1", c.omega1);
    o.num("p", c.p);
    o.integer("r", c.r);
    if (auto* v = o.get("triple")) {
        Obj t(*v, o.at("triple"), lines);
        t.num("alpha", c.triple.alpha);
        t.num("beta", c.triple.beta);
        t.num("gamma", c.triple.gamma);
        t.num("eta", c.triple.eta);
        t.finish();
    }
    if (auto* v = o.get("spins")) {
        need_array(*v, o.at("spins"), lines);
        if (v->size() != 3) fail(lines, o.at("spins"), "expected three spins");
        for (std::size_t i = 0; i < 3; ++i) {
            Obj s((*v)[i], child(o.at("spins"), i), lines);
            s.num("sigma", c.spins[i].sigma);
            s.integer("m", c.spins[i].m);
            s.finish();
        }
    }
    o.integer("halfwidth", c.halfwidth);
    if (auto* v = o.get("quad")) {
        Obj q(*v, o.at("quad"), lines);
        q.num("abs_tol", c.quad.abs_tol);
        q.num("rel_tol", c.quad.rel_tol);
        q.integer("max_refinements", c.quad.max_refinements);
        q.num("cutoff", c.quad.cutoff);
        q.finish();
    }
    if (auto* v = o.get("sums")) {
        Obj s(*v, o.at("sums"), lines);
        s.integer("initial_halfwidth", c.sums.initial_halfwidth);
        s.num("tail_tol", c.sums.tail_tol);
        s.integer("max_halfwidth", c.sums.max_halfwidth);
        s.finish();
    }
    o.num("tol", c.tol);
    o.num("pole_margin", c.pole_margin);
    o.finish();
    return c;
}

// ---- reports -------------------------------------------------------------------

json to_json(const VerificationReport& r)
{
    json j;
    j["id"] = r.id;
    j["kind"] = to_string(r.kind);
    j["seed"] = r.seed;
    j["pass"] = r.pass;
    j["lhs"] = cplx_to_json(r.lhs);
    j["rhs"] = cplx_to_json(r.rhs);
    j["ratio"] = cplx_to_json(r.ratio);
    j["abs_gap"] = double_or_null(r.abs_gap);
    j["est_err"] = double_or_null(r.est_err);
    j["tol"] = r.tol;
    json d = json::object();
    for (const auto& [k, v] : r.diagnostics) d[k] = double_or_null(v);
    j["diagnostics"] = d;
    j["notes"] = r.notes;
    j["params"] = to_json(r.params);
    return j;
}

VerificationReport report_from_json(const json& j, const std::string& path, const LineMap& lines)
{
    VerificationReport r;
    Obj o(j, path, lines);
    o.str("id", r.id);
    std::string kind;
    o.str("kind", kind);
    try {
        r.kind = identity_kind_from_string(kind);
    } catch (const DomainError& e) {
        fail(lines, o.at("kind"), e.what());
    }
    o.integer("seed", r.seed);
    o.boolean("pass", r.pass);
    for (auto [k, dst] : {std::pair{"lhs", &r.lhs}, std::pair{"rhs", &r.rhs}, std::pair{"ratio", &r.ratio}})
        if (auto* v = o.get(k)) *dst = read_cplx(*v, o.at(k), lines);
    for (auto [k, dst] : {std::pair{"abs_gap", &r.abs_gap}, std::pair{"est_err", &r.est_err}})
        if (auto* v = o.get(k)) *dst = double_from(*v, o.at(k), lines);
    o.num("tol", r.tol);
    if (auto* v = o.get("diagnostics")) {
        if (!v->is_object()) fail(lines, o.at("diagnostics"), "expected an object");
        for (auto it = v->begin(); it != v->end(); ++it)
            r.diagnostics[it.key()] = double_from(it.value(), child(o.at("diagnostics"), it.key()), lines);
    }
    if (auto* v = o.get("notes")) {
        need_array(*v, o.at("notes"), lines);
        for (const auto& s : *v) r.notes.push_back(s.get<std::string>());
    }
    if (auto* v = o.get("params")) r.params = case_from_json(*v, o.at("params"), lines);
    o.finish();
    return r;
}

// ---- limits --------------------------------------------------------------------

json to_json(const LimitExperiment& e)
{
    json j;
    j["kind"] = to_string(e.kind);
    j["ladder"] = e.ladder;
    j["threshold"] = e.threshold;
    switch (e.kind) {
    case LimitKind::omega2_to_inf:
        j["z"] = cplx_to_json(e.z);
        j["omega1"] = cplx_to_json(e.omega1);
        j["omega2_arg"] = e.omega2_arg;
        break;
    case LimitKind::q_to_one:
        j["a"] = e.a;
        j["b"] = e.b;
        break;
    case LimitKind::r_to_inf:
        j["z"] = cplx_to_json(e.z);
        j["m"] = e.m;
        j["omega"] = e.omega;
        j["printed_prefactor"] = e.printed_prefactor;
        break;
    case LimitKind::asymptotic_behaviour:
        j["moduli"] = json{{"omega1", cplx_to_json(e.moduli.omega1)}, {"omega2", cplx_to_json(e.moduli.omega2)}};
        j["ray_arg"] = e.ray_arg;
        j["sign"] = e.sign;
        break;
    }
    return j;
}

LimitExperiment limit_from_json(const json& j, const std::string& path, const LineMap& lines, LimitExperiment e)
{
    Obj o(j, path, lines);
    if (auto* v = o.get("ladder")) {
        need_array(*v, o.at("ladder"), lines);
        e.ladder.clear();
        for (std::size_t i = 0; i < v->size(); ++i) {
            if (!(*v)[i].is_number()) fail(lines, child(o.at("ladder"), i), "expected a number");
            e.ladder.push_back((*v)[i].get<double>());
        }
    }
    o.num("threshold", e.threshold);
    // only the base-point fields of this kind are accepted
    switch (e.kind) {
    case LimitKind::omega2_to_inf:
        o.complex("z", e.z);
        o.complex("omega1", e.omega1);
        o.num("omega2_arg", e.omega2_arg);
        break;
    case LimitKind::q_to_one:
        o.num("a", e.a);
        o.num("b", e.b);
        break;
    case LimitKind::r_to_inf:
        o.complex("z", e.z);
        o.integer("m", e.m);
        o.num("omega", e.omega);
        o.boolean("printed_prefactor", e.printed_prefactor);
        break;
    case LimitKind::asymptotic_behaviour:
        if (auto* v = o.get("moduli")) {
            Obj m(*v, o.at("moduli"), lines);
            cplx w1 = e.moduli.omega1, w2 = e.moduli.omega2;
            m.complex("omega1", w1);
            m.complex("omega2", w2);
            m.finish();
            try {
                e.moduli = Moduli(w1, w2);
            } catch (const DomainError& err) {
                fail(lines, o.at("moduli"), err.what());
            }
        }
        o.num("ray_arg", e.ray_arg);
        o.integer("sign", e.sign);
        break;
    }
    o.get("kind");  // read by the caller
    o.finish();
    return e;
}

json to_json(const ConvergenceTable& t)
{
    json j;
    j["kind"] = to_string(t.kind);
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back(json{{"scale", r.scale},
                            {"lhs", cplx_to_json(r.lhs)},
                            {"rhs", cplx_to_json(r.rhs)},
                            {"deviation", double_or_null(r.deviation)}});
    j["rows"] = rows;
    json orders = json::array();
    for (double x : t.orders) orders.push_back(double_or_null(x));
    j["orders"] = orders;
    j["monotone"] = t.monotone;
    j["final_deviation"] = double_or_null(t.final_deviation);
    j["threshold"] = t.threshold;
    j["converged"] = t.converged;
    j["slope"] = t.slope;
    j["expected_slope"] = t.expected_slope;
    j["notes"] = t.notes;
    return j;
}

ConvergenceTable table_from_json(const json& j, const std::string& path, const LineMap& lines)
{
    ConvergenceTable t;
    Obj o(j, path, lines);
    std::string kind;
    o.str("kind", kind);
    try {
        t.kind = limit_kind_from_string(kind);
    } catch (const DomainError& e) {
        fail(lines, o.at("kind"), e.what());
    }
    if (auto* v = o.get("rows")) {
        need_array(*v, o.at("rows"), lines);
        for (std::size_t i = 0; i < v->size(); ++i) {
            Obj r((*v)[i], child(o.at("rows"), i), lines);
            ConvergenceRow row;
            r.num("scale", row.scale);
            r.complex("lhs", row.lhs);
            r.complex("rhs", row.rhs);
            if (auto* d = r.get("deviation")) row.deviation = double_from(*d, r.at("deviation"), lines);
            r.finish();
            t.rows.push_back(row);
        }
    }
    if (auto* v = o.get("orders")) {
        need_array(*v, o.at("orders"), lines);
        for (std::size_t i = 0; i < v->size(); ++i)
            t.orders.push_back(double_from((*v)[i], child(o.at("orders"), i), lines));
    }
    o.boolean("monotone", t.monotone);
    if (auto* v = o.get("final_deviation")) t.final_deviation = double_from(*v, o.at("final_deviation"), lines);
    o.num("threshold", t.threshold);
    o.boolean("converged", t.converged);
    o.num("slope", t.slope);
    o.num("expected_slope", t.expected_slope);
    if (auto* v = o.get("notes")) {
        need_array(*v, o.at("notes"), lines);
        for (const auto& s : *v) t.notes.push_back(s.get<std::string>());
    }
    o.finish();
    return t;
}

// ---- key lines -----------------------------------------------------------------

LineMap json_key_lines(std::string_view s)
{
    struct Frame {
        bool object;
        std::size_t index;
        std::string key;
        std::string path;
    };
    LineMap out;
    std::vector<Frame> st;
    int line = 1;
    bool expect_key = false;

    auto current_path = [&]() -> std::string {
        if (st.empty()) return "";
        const Frame& f = st.back();
        return f.object ? child(f.path, f.key) : child(f.path, f.index);
    };

    for (std::size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '\n') {
            ++line;
        } else if (ch == '"') {
            std::string buf;
            int start = line;
            for (++i; i < s.size() && s[i] != '"'; ++i) {
                if (s[i] == '\\' && i + 1 < s.size()) {
                    ++i;
                    // escapes other than these only matter for exotic keys
                    switch (s[i]) {
                    case 'n': buf += '\n'; break;
                    case 't': buf += '\t'; break;
                    default: buf += s[i];
                    }
                } else {
                    if (s[i] == '\n') ++line;
                    buf += s[i];
                }
            }
            if (expect_key && !st.empty() && st.back().object) {
                st.back().key = buf;
                out.emplace(child(st.back().path, buf), start);
                expect_key = false;
            }
        } else if (ch == '{' || ch == '[') {
            std::string p = current_path();
            st.push_back(Frame{ch == '{', 0, "", p});
            expect_key = ch == '{';
        } else if (ch == '}' || ch == ']') {
            if (!st.empty()) st.pop_back();
            expect_key = false;
        } else if (ch == ',') {
            if (!st.empty()) {
                if (st.back().object) expect_key = true;
                else ++st.back().index;
            }
        }
    }
    return out;
}

int line_of(const LineMap& lines, const std::string& pointer)
{
    std::string p = pointer;
    while (!p.empty()) {
        auto it = lines.find(p);
        if (it != lines.end()) return it->second;
        auto cut = p.rfind('/');
        if (cut == std::string::npos) break;
        p.resize(cut);
    }
    return 0;
}

// ---- files ---------------------------------------------------------------------

void atomic_write(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path dir = target.parent_path();
    if (dir.empty()) dir = ".";
    fs::path tmp = dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp.string() + " for writing");
        f << content;
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error("cannot rename onto " + path);
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

// ---- explain -------------------------------------------------------------------

std::string explain(const VerificationReport& r)
{
    std::ostringstream os;
    os << std::setprecision(15);
    auto c = [](cplx z) {
        std::ostringstream s;
        s << std::setprecision(15) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
        return s.str();
    };
    os << "case     " << r.id << "\n";
    os << "kind     " << to_string(r.kind) << "\n";
    os << "seed     " << r.seed << "\n";
    os << "verdict  " << (r.pass ? "PASS" : "FAIL") << "\n";
    os << "lhs      " << c(r.lhs) << "\n";
    os << "rhs      " << c(r.rhs) << "\n";
    os << "ratio    " << c(r.ratio) << "\n";
    os << std::setprecision(3) << std::scientific;
    os << "|ratio-1| " << std::abs(r.ratio - 1.0) << "  (tol " << r.tol << ")\n";
    os << "abs_gap  " << r.abs_gap << "  est_err " << r.est_err << "\n";
    if (!r.diagnostics.empty()) {
        os << "diagnostics\n";
        for (const auto& [k, v] : r.diagnostics) os << "  " << k << " = " << v << "\n";
    }
    if (!r.notes.empty()) {
        os << "notes\n";
        for (const auto& n : r.notes) os << "  " << n << "\n";
    }
    os << "parameters\n" << to_json(r.params).dump(2) << "\n";
    return os.str();
}

}  // namespace ybe
