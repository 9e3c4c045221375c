#include "cli.h"

#include "bpu/arith.h"
#include "bpu/invariants.h"
#include "bpu/spectral.h"
#include "bpu/symfun.h"
#include "bpu/topology.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>

namespace bpu::cli {

namespace {

struct Options {
    std::int64_t p = 3;
    int n = 0;
    int blocks = 0;
    int max_degree = 0;
    int imax = 0;
    int kmax = 0;
    int up_to = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string format = "json";

    std::map<std::string, const CLI::Option*> given;

    bool has(const std::string& name) const
    {
        auto it = given.find(name);
        return it != given.end() && it->second->count() > 0;
    }
};

using Reports = std::vector<VerdictReport>;
using Runner = std::function<void(const Options&, Reports&)>;

VerdictReport timed(const std::function<VerdictReport()>& f)
{
    auto start = std::chrono::steady_clock::now();
    VerdictReport r = f();
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

template <class F>
void add(Reports& out, F&& f)
{
    out.push_back(timed(std::forward<F>(f)));
}

std::vector<int> n_values(const Options& o, std::vector<int> p3, std::vector<int> other)
{
    if (o.has("n"))
        return {o.n};
    return o.p == 3 ? p3 : other;
}

void run_mui(const Options& o, Reports& out)
{
    int d = o.has("max-degree") ? o.max_degree : 40;
    add(out, [&] { return verify_mui_presentation(o.p, d); });
    add(out, [&] { return verify_equivariance(o.p, o.seed, o.has("samples") ? o.samples : 50); });
}

void run_vistoli(const Options& o, Reports& out)
{
    int d = o.has("max-degree") ? o.max_degree : 24;
    add(out, [&] { return verify_vistoli_integral(o.p, d); });
}

void run_prop_s(const Options& o, Reports& out)
{
    add(out, [&] { return verify_prop_s(o.p); });
}

void run_main(const Options& o, Reports& out)
{
    std::vector<int> blocks{1};
    if (o.has("blocks"))
        blocks = {o.blocks};
    else if (o.p == 3)
        blocks = {1, 2};
    for (int b : blocks)
        add(out, [&] { return verify_main(o.p, b); });
}

void run_yagita(const Options& o, Reports& out)
{
    int imax = o.has("imax") ? o.imax : (o.p == 3 ? 3 : 2);
    int blocks = o.has("blocks") ? o.blocks : 1;
    int samples = o.has("samples") ? o.samples : 20;
    add(out, [&] { return verify_yagita(o.p, imax, blocks, o.seed, samples); });
}

void run_lambda(const Options& o, Reports& out)
{
    int imax = o.has("imax") ? o.imax : 3;
    add(out, [&] { return verify_lambda_formula(o.p, imax); });
}

void run_theta(const Options& o, Reports& out)
{
    add(out, [&] { return verify_theta(o.p); });
}

void run_delta(const Options& o, Reports& out)
{
    for (int n : n_values(o, {9, 18, 27}, {static_cast<int>(o.p * o.p)})) {
        int up_to = o.up_to;
        if (!o.has("up-to")) {
            std::int64_t m = o.p > 0 && n % o.p == 0 ? n / o.p : 1;
            up_to = static_cast<int>(2 * p_primary_part(std::max<std::int64_t>(m, 1), o.p));
        }
        add(out, [&] { return check_delta_lemma(o.p, n, up_to); });
    }
}

void run_ln(const Options& o, Reports& out)
{
    for (int n : n_values(o, {3, 9, 18}, {static_cast<int>(o.p)}))
        add(out, [&] { return check_Ln_lemma(o.p, n); });
}

void run_nabla_onto(const Options& o, Reports& out)
{
    for (int n : n_values(o, {3, 9, 18, 27}, {static_cast<int>(o.p), static_cast<int>(2 * o.p)}))
        add(out, [&] { return check_nabla_onto_2p(o.p, n); });
}

void run_e4(const Options& o, Reports& out)
{
    int kmax = o.has("kmax") ? o.kmax : 10;
    for (int n : n_values(o, {3, 9}, {static_cast<int>(o.p)}))
        add(out, [&] { return verify_e4_identities(o.p, n, kmax); });
}

const std::vector<std::pair<std::string, Runner>>& commands()
{
    static const std::vector<std::pair<std::string, Runner>> table{
        {"verify-mui", run_mui},         {"verify-vistoli", run_vistoli},
        {"verify-prop-s", run_prop_s},   {"verify-main", run_main},
        {"verify-yagita", run_yagita},   {"verify-lambda", run_lambda},
        {"verify-theta", run_theta},     {"verify-delta", run_delta},
        {"verify-ln", run_ln},           {"verify-nabla-onto", run_nabla_onto},
        {"verify-e4", run_e4},
    };
    return table;
}

std::string text_line(const VerdictReport& r)
{
    std::string line = to_string(r.status) + "  " + r.check + "  " + r.params.dump();
    char ms[32];
    std::snprintf(ms, sizeof ms, "  %.1f ms", r.elapsed_ms);
    line += ms;
    if (r.counterexample)
        line += "\n    counterexample: " + r.counterexample->dump();
    return line;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of cohomology computations for BPU(n)", "bpu-verify"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_flags = [&](CLI::App* sub) {
        o.given["p"] = sub->add_option("--p", o.p, "odd prime (default 3)");
        o.given["n"] = sub->add_option("--n", o.n, "rank n; defaults depend on the check");
        o.given["blocks"] = sub->add_option("--blocks", o.blocks, "number of Gamma blocks");
        o.given["max-degree"] = sub->add_option("--max-degree", o.max_degree, "degree bound");
        o.given["imax"] = sub->add_option("--imax", o.imax, "largest Milnor operation index");
        o.given["kmax"] = sub->add_option("--kmax", o.kmax, "largest half-degree for E4 checks");
        o.given["up-to"] = sub->add_option("--up-to", o.up_to, "largest component for the Delta* check");
        o.given["samples"] = sub->add_option("--samples", o.samples, "number of sampled cases");
        o.given["seed"] = sub->add_option("--seed", o.seed, "seed for sampled cases");
        o.given["format"] =
            sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    std::vector<std::pair<CLI::App*, const Runner*>> subs;
    for (const auto& [name, runner] : commands()) {
        auto* sub = app.add_subcommand(name, "");
        add_flags(sub);
        subs.emplace_back(sub, &runner);
    }
    auto* all = app.add_subcommand("verify-all", "every check with default parameters");
    add_flags(all);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError& e) {
        err << "bpu-verify: " << e.what() << "\n";
        return 2;
    }
    // every subcommand registered its own flags; use the parsed one's
    CLI::App* chosen = app.get_subcommands().front();
    for (auto& [name, opt] : o.given)
        opt = chosen->get_option("--" + name);

    if (!is_odd_prime(o.p)) {
        err << "bpu-verify: --p must be an odd prime, got " << o.p << "\n";
        return 2;
    }
    if (o.has("blocks") && o.blocks < 1) {
        err << "bpu-verify: --blocks must be positive\n";
        return 2;
    }
    if (o.has("n") && o.n < 1) {
        err << "bpu-verify: --n must be positive\n";
        return 2;
    }
    for (const char* name : {"max-degree", "imax", "kmax", "up-to", "samples"}) {
        int v = name == std::string("max-degree") ? o.max_degree
                : name == std::string("imax")     ? o.imax
                : name == std::string("kmax")     ? o.kmax
                : name == std::string("up-to")    ? o.up_to
                                                  : o.samples;
        if (o.has(name) && v < 0) {
            err << "bpu-verify: --" << name << " must be non-negative\n";
            return 2;
        }
    }

    Reports reports;
    try {
        if (chosen == all) {
            for (const auto& [name, runner] : commands())
                runner(o, reports);
        }
        else {
            for (const auto& [sub, runner] : subs)
                if (sub == chosen)
                    (*runner)(o, reports);
        }
    }
    catch (const PreconditionError& e) {
        err << "bpu-verify: " << e.what() << "\n";
        return 2;
    }

    std::stable_sort(reports.begin(), reports.end(), [](const VerdictReport& a, const VerdictReport& b) {
        if (a.check != b.check)
            return a.check < b.check;
        return a.params.dump() < b.params.dump();
    });

    int code = 0;
    for (const auto& r : reports) {
        if (r.status == Status::PreconditionError)
            code = 2;
        else if (r.status == Status::Fail && code == 0)
            code = 1;
    }

    if (o.format == "text") {
        for (const auto& r : reports)
            out << text_line(r) << "\n";
    }
    else {
        nlohmann::json doc{{"schema", 1}, {"reports", nlohmann::json::array()}};
        for (const auto& r : reports)
            doc["reports"].push_back(to_json(r));
        out << doc.dump(2) << "\n";
    }
    return code;
}

}  // namespace bpu::cli
