// Command-line front end: evaluate I_{n,k}(s,t) by any of the three
// engines, run the identity verification suite, or tabulate values.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical inconsistency.

#include "lagint/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

using json = nlohmann::json;
using namespace lagint;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kSchemaVersion = 1;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// "a..b" inclusive
std::pair<int, int> parse_range(const std::string& text) {
    auto pos = text.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("range", "expected a..b, got '" + text + "'");
    try {
        int lo = std::stoi(text.substr(0, pos));
        int hi = std::stoi(text.substr(pos + 2));
        if (lo > hi) throw CLI::ValidationError("range", "empty range '" + text + "'");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("range", "malformed range '" + text + "'");
    }
}

// "s1,t1;s2,t2;..."
std::vector<std::pair<double, double>> parse_grid(const std::string& text) {
    std::vector<std::pair<double, double>> pts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto semi = text.find(';', pos);
        std::string pair = text.substr(pos, semi == std::string::npos ? semi : semi - pos);
        auto comma = pair.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("grid", "expected s,t pairs separated by ';'");
        pts.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return pts;
}

json params_json(const RelationCheck& c) {
    json p = json::object();
    for (const auto& [name, value] : c.params) p[name] = value;
    return p;
}

json check_json(const RelationCheck& c) {
    return json{{"relation_id", to_string(c.id)}, {"params", params_json(c)},
                {"lhs", c.lhs},                  {"rhs", c.rhs},
                {"abs_err", c.abs_err},          {"rel_err", c.rel_err},
                {"exact", c.exact},              {"inconclusive", c.inconclusive},
                {"pass", c.pass}};
}

json config_json(const SuiteConfig& cfg) {
    json grid = json::array();
    for (const auto& [s, t] : cfg.grid) grid.push_back({s, t});
    return json{{"n_max", cfg.n_max},     {"k_min", cfg.k_min},
                {"k_max", cfg.k_max},     {"grid", grid},
                {"seed", cfg.seed},       {"random_points", cfg.random_points},
                {"rel_tol", cfg.rel_tol}, {"abs_tol", cfg.abs_tol},
                {"workers", cfg.workers}};
}

json report_json(const VerificationReport& rep, const SuiteConfig& cfg) {
    json relations = json::array();
    for (const auto& c : rep.checks) relations.push_back(check_json(c));
    return json{{"schema_version", kSchemaVersion},
                {"config", config_json(cfg)},
                {"relations", relations},
                {"summary",
                 {{"attempted", rep.attempted},
                  {"passed", rep.passed},
                  {"failed", rep.failed},
                  {"worst_abs_err", rep.worst_abs},
                  {"worst_rel_err", rep.worst_rel},
                  {"duration_ms", rep.duration_ms}}}};
}

int env_workers() {
    if (const char* v = std::getenv("LAGUERRE_THREADS")) {
        const int n = std::atoi(v);
        if (n > 0) return n;
    }
    return 0;
}

int cmd_eval(int n, int k, const std::string& s_text, const std::string& t_text,
             const std::string& method, int alpha, int nodes, bool as_json) {
    if (method == "closed" && alpha != 0) {
        std::cerr << "eval: --method closed requires --alpha 0\n";
        return kExitUsage;
    }

    json record{{"n", n}, {"k", k}, {"method", method}, {"alpha", alpha}};
    std::string printed;

    if (method == "residue") {
        // exactness demands exact inputs: fractions only on this path
        const Rational s = parse_rational(s_text);
        const Rational t = parse_rational(t_text);
        const Rational v = residue_exact(n, k, alpha, s, t);
        printed = rational_str(v);
        record["s"] = rational_str(s);
        record["t"] = rational_str(t);
        record["value"] = printed;
        record["value_double"] = to_double(v);
    } else {
        const double s = std::stod(s_text);
        const double t = std::stod(t_text);
        record["s"] = s;
        record["t"] = t;
        if (method == "closed") {
            const double v = closed_form({n, k, s, t, 0});
            printed = fmt17(v);
            record["value"] = v;
        } else { // quadrature
            IntegralParams p{n, k, s, t, alpha};
            QuadratureConfig cfg{nodes > 0 ? nodes : default_node_count(p)};
            const auto v = quadrature_integral(p, cfg);
            printed = fmt17(v.real());
            record["value"] = v.real();
            record["imag"] = v.imag();
            record["nodes"] = cfg.nodes;
        }
    }

    if (as_json)
        std::cout << record.dump() << "\n";
    else
        std::cout << printed << "\n";
    return kExitOk;
}

int cmd_verify(SuiteConfig cfg, bool as_json) {
    const VerificationReport rep = run_suite(cfg);

    if (as_json) {
        // line-delimited records first, full schema report last
        for (const auto& c : rep.checks) std::cout << check_json(c).dump() << "\n";
        std::cout << report_json(rep, cfg).dump() << "\n";
    } else {
        std::printf("%-14s %9s %9s %9s %12s %12s\n", "relation", "attempted", "passed",
                    "failed", "worst_abs", "worst_rel");
        for (RelationId id : kAllRelations) {
            auto it = rep.per_relation.find(id);
            if (it == rep.per_relation.end()) continue;
            const auto& st = it->second;
            std::printf("%-14s %9ld %9ld %9ld %12.3e %12.3e\n", to_string(id),
                        st.attempted, st.passed, st.failed, st.worst_abs, st.worst_rel);
        }
        std::printf("total: %ld attempted, %ld passed, %ld failed (%.0f ms)\n",
                    rep.attempted, rep.passed, rep.failed, rep.duration_ms);
        for (const auto& f : rep.failures) {
            std::printf("FAIL %s", to_string(f.id));
            for (const auto& [name, v] : f.params) std::printf(" %s=%g", name.c_str(), v);
            std::printf("  lhs=%.17g rhs=%.17g abs_err=%.3e%s\n", f.lhs, f.rhs, f.abs_err,
                        f.inconclusive ? " (inconclusive)" : "");
        }
    }
    return rep.failed == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_table(std::pair<int, int> n_range, std::pair<int, int> k_range, double s, double t,
              const std::string& format) {
    if (format == "csv") {
        std::cout << "n,k,s,t,value\n";
        for (int n = n_range.first; n <= n_range.second; ++n)
            for (int k = k_range.first; k <= k_range.second; ++k)
                std::cout << n << "," << k << "," << fmt17(s) << "," << fmt17(t) << ","
                          << fmt17(closed_form({n, k, s, t, 0})) << "\n";
    } else {
        json rows = json::array();
        for (int n = n_range.first; n <= n_range.second; ++n)
            for (int k = k_range.first; k <= k_range.second; ++k)
                rows.push_back({{"n", n},
                                {"k", k},
                                {"s", s},
                                {"t", t},
                                {"value", closed_form({n, k, s, t, 0})}});
        std::cout << json{{"schema_version", kSchemaVersion}, {"rows", rows}}.dump()
                  << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre integral evaluation and identity verification"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate I_{n,k}(s,t) with one engine");
    int n = 0, k = 0, alpha = 0, nodes = 0;
    std::string s_text, t_text, method = "closed";
    bool eval_json = false;
    eval->add_option("--n", n, "degree n")->required();
    eval->add_option("--k", k, "Fourier index k")->required();
    eval->add_option("--s", s_text, "s (decimal; fraction p/q for --method residue)")
        ->required();
    eval->add_option("--t", t_text, "t (decimal; fraction p/q for --method residue)")
        ->required();
    eval->add_option("--method", method, "closed | quadrature | residue")
        ->check(CLI::IsMember({"closed", "quadrature", "residue"}));
    eval->add_option("--alpha", alpha, "integrand superscript, 0 or 1")
        ->check(CLI::Range(0, 1));
    eval->add_option("--nodes", nodes, "quadrature node count (even, >= 16)");
    eval->add_flag("--json", eval_json, "emit a JSON record");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
    SuiteConfig cfg = SuiteConfig::defaults();
    std::string k_range_text, grid_text;
    double tol = -1.0;
    bool verify_json = false;
    verify->add_option("--n-max", cfg.n_max, "max degree n");
    verify->add_option("--k-range", k_range_text, "k range a..b");
    verify->add_option("--grid", grid_text, "(s,t) grid: 's1,t1;s2,t2;...'");
    verify->add_option("--seed", cfg.seed, "seed for extra random sample points");
    verify->add_option("--random-points", cfg.random_points,
                       "number of extra seeded points");
    verify->add_option("--tol", tol, "override both tolerances (rel and abs)");
    verify->add_flag("--json", verify_json, "line-delimited JSON records + report");
    verify->add_flag("--fail-fast", cfg.fail_fast, "stop after the first failure");

    // table
    auto* table = app.add_subcommand("table", "Tabulate closed-form values");
    std::string n_range_text = "0..2", k_range_table = "0..2", format = "csv";
    double ts = 1.0, tt = 1.0;
    table->add_option("--n", n_range_text, "n range a..b")->required();
    table->add_option("--k", k_range_table, "k range a..b")->required();
    table->add_option("--s", ts, "s")->required();
    table->add_option("--t", tt, "t")->required();
    table->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* version = app.add_subcommand("version", "Print version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval->parsed())
            return cmd_eval(n, k, s_text, t_text, method, alpha, nodes, eval_json);
        if (verify->parsed()) {
            if (!k_range_text.empty())
                std::tie(cfg.k_min, cfg.k_max) = parse_range(k_range_text);
            if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
            if (tol >= 0.0) cfg.rel_tol = cfg.abs_tol = tol;
            cfg.workers = env_workers();
            return cmd_verify(cfg, verify_json);
        }
        if (table->parsed())
            return cmd_table(parse_range(n_range_text), parse_range(k_range_table), ts, tt,
                             format);
        if (version->parsed()) {
            std::cout << "lagint " << kVersion << "\n";
            return kExitOk;
        }
    } catch (const NumericalInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.get_name() << ": usage\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
