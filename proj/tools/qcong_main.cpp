// qcong — exact verification of q-supercongruences, series identities, and
// p-adic supercongruences from a bundled claim corpus.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "qcong/engine.hpp"
#include "qcong/report.hpp"
#include "qcong/runner.hpp"
#include "qcong/version.hpp"

using namespace qcong;

namespace {

bool glob_match(const std::string& pat, const std::string& s, size_t pi = 0, size_t si = 0) {
    while (pi < pat.size()) {
        char c = pat[pi];
        if (c == '*') {
            for (size_t skip = 0; si + skip <= s.size(); ++skip)
                if (glob_match(pat, s, pi + 1, si + skip)) return true;
            return false;
        }
        if (si >= s.size()) return false;
        if (c != '?' && c != s[si]) return false;
        ++pi;
        ++si;
    }
    return si == s.size();
}

std::string claims_dir_default() {
    if (const char* env = std::getenv("QCONG_CLAIMS")) return env;
    return "claims";
}

struct CommonOpts {
    std::string claims_dir = claims_dir_default();
    std::string filter = "*";
    std::vector<std::string> sets;
    int parallel = 1;
    long seed = kDefaultSeed;
    int truncation = kDefaultTruncation;
    std::string format = "text";
    std::string out;
    std::string dump_remainder;
    double budget = 0.0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--claims", o.claims_dir, "claim corpus directory");
    cmd->add_option("--filter", o.filter, "claim name glob");
    cmd->add_option("--set", o.sets, "assignment NAME=V[,V...] or NAME=LO..HI");
    cmd->add_option("--parallel", o.parallel, "worker threads");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--truncation", o.truncation, "series truncation degree");
    cmd->add_option("--format", o.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "report output path");
    cmd->add_option("--dump-remainder", o.dump_remainder, "write failing remainders to a file");
    cmd->add_option("--budget", o.budget, "per-instance budget in seconds");
}

// "--set n=3,7,11" or "--set n=3..25" -> list of values
std::map<std::string, std::vector<long>> parse_sets(const std::vector<std::string>& sets) {
    std::map<std::string, std::vector<long>> out;
    for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw Error("--set expects NAME=V[,V...], got '" + s + "'");
        std::string name = s.substr(0, eq);
        std::string rest = s.substr(eq + 1);
        auto dots = rest.find("..");
        if (dots != std::string::npos) {
            long lo = std::stol(rest.substr(0, dots));
            long hi = std::stol(rest.substr(dots + 2));
            for (long v = lo; v <= hi; ++v) out[name].push_back(v);
            continue;
        }
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) out[name].push_back(std::stol(item));
    }
    return out;
}

// Cartesian product of per-symbol value lists restricted to a claim's needs.
std::vector<Assignment> enumerate_assignments(const Claim& claim,
                                              const std::map<std::string, std::vector<long>>& sets) {
    std::vector<std::string> syms = free_symbols(claim);
    std::vector<Assignment> result{{}};
    for (const auto& sym : syms) {
        auto it = sets.find(sym);
        if (it == sets.end()) throw UnresolvedSymbol(sym);
        std::vector<Assignment> next;
        for (const auto& base : result)
            for (long v : it->second) {
                Assignment a = base;
                a[sym] = v;
                next.push_back(std::move(a));
            }
        result = std::move(next);
    }
    return result;
}

int finalize(const RunReport& report, const CommonOpts& o) {
    std::string json = report_to_json(report);
    std::string out_path = o.out.empty() ? "qcong_report.json" : o.out;
    {
        std::ofstream f(out_path);
        f << json << "\n";
    }
    if (o.format == "json")
        std::cout << json << "\n";
    else
        std::cout << report_to_text(report);
    if (!o.dump_remainder.empty()) {
        std::ofstream f(o.dump_remainder);
        for (const auto& r : report.results)
            if (!r.holds && r.remainder_degree >= 0)
                f << r.claim_name << ": " << r.remainder.str() << "\n";
    }
    return report.healthy() ? 0 : 1;
}

// Seeded parameter substitutions for series claims with free symbols
// (Rahman's transformation). A draw is accepted once a cheap low-order
// truncation runs without hitting a pole or a degenerate product.
std::vector<Assignment> seeded_series_substitutions(const Claim& claim, long seed, int count) {
    std::vector<std::string> syms = free_symbols(claim);
    std::vector<Assignment> out;
    if (syms.empty()) {
        out.push_back({});
        return out;
    }
    std::mt19937_64 rng(static_cast<unsigned long long>(seed));
    std::uniform_int_distribution<long> dist(1, 4);
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts < 500) {
        ++attempts;
        Assignment a;
        for (const auto& s : syms) a[s] = dist(rng);
        try {
            ConcreteClaim cc = instantiate(claim, a);
            EngineOptions probe;
            probe.truncation = 2;
            (void)series_identity_check(cc, 2, probe);
        } catch (const Error&) {
            continue;
        }
        if (std::find_if(out.begin(), out.end(), [&](const Assignment& b) { return b == a; }) ==
            out.end())
            out.push_back(std::move(a));
    }
    if (static_cast<int>(out.size()) < count)
        throw Error(claim.name + ": could not find " + std::to_string(count) +
                    " admissible parameter substitutions");
    return out;
}

int cmd_verify(const CommonOpts& o, bool explicit_selection, const std::string& plan_path) {
    std::vector<Claim> claims = registry_load(o.claims_dir);
    std::vector<Task> tasks;
    if (!explicit_selection) {
        // default run reproduces the acceptance plan
        tasks = load_plan(plan_path.empty() ? o.claims_dir + "/acceptance.plan" : plan_path,
                          claims);
    } else {
        auto sets = parse_sets(o.sets);
        for (const auto& c : claims) {
            if (!glob_match(o.filter, c.name)) continue;
            for (const auto& asg : enumerate_assignments(c, sets)) {
                Task t;
                t.cc = instantiate(c, asg);
                t.truncation = o.truncation;
                t.budget_seconds = o.budget;
                tasks.push_back(std::move(t));
            }
        }
        if (tasks.empty()) throw Error("no claims match filter '" + o.filter + "'");
    }
    RunReport report = run_tasks(std::move(tasks), o.parallel, o.seed);
    return finalize(report, o);
}

int cmd_scan(const CommonOpts& o) {
    std::vector<Claim> claims = registry_load(o.claims_dir);
    auto sets = parse_sets(o.sets);
    std::vector<Task> tasks;
    for (const auto& c : claims) {
        if (!glob_match(o.filter, c.name)) continue;
        std::vector<Assignment> assignments;
        try {
            assignments = enumerate_assignments(c, sets);
        } catch (const UnresolvedSymbol&) {
            continue; // scan ranges do not cover this claim's symbols
        }
        for (const auto& asg : assignments) {
            try {
                Task t;
                t.cc = instantiate(c, asg);
                t.truncation = o.truncation;
                t.budget_seconds = o.budget;
                tasks.push_back(std::move(t));
            } catch (const Error&) {
                // inadmissible point in the range; skip silently
            }
        }
    }
    RunReport report = run_tasks(std::move(tasks), o.parallel, o.seed);
    return finalize(report, o);
}

int cmd_series(const CommonOpts& o) {
    std::vector<Claim> claims = registry_load(o.claims_dir);
    std::vector<Task> tasks;
    for (const auto& c : claims) {
        if (c.kind != ClaimKind::SeriesIdentity) continue;
        if (!glob_match(o.filter, c.name)) continue;
        for (const auto& asg : seeded_series_substitutions(c, o.seed, 3)) {
            Task t;
            t.cc = instantiate(c, asg);
            t.truncation = o.truncation;
            t.budget_seconds = o.budget;
            tasks.push_back(std::move(t));
        }
    }
    if (tasks.empty()) throw Error("no series claims match filter '" + o.filter + "'");
    RunReport report = run_tasks(std::move(tasks), o.parallel, o.seed);
    return finalize(report, o);
}

int cmd_padic(const CommonOpts& o, const std::string& plan_path) {
    std::vector<Claim> claims = registry_load(o.claims_dir);
    std::vector<Task> tasks;
    if (o.sets.empty()) {
        auto all = load_plan(plan_path.empty() ? o.claims_dir + "/acceptance.plan" : plan_path,
                             claims);
        for (auto& t : all)
            if (t.cc.claim->kind == ClaimKind::PadicCongruence &&
                glob_match(o.filter, t.cc.claim->name))
                tasks.push_back(std::move(t));
    } else {
        auto sets = parse_sets(o.sets);
        for (const auto& c : claims) {
            if (c.kind != ClaimKind::PadicCongruence) continue;
            if (!glob_match(o.filter, c.name)) continue;
            for (const auto& asg : enumerate_assignments(c, sets)) {
                Task t;
                t.cc = instantiate(c, asg);
                t.budget_seconds = o.budget;
                tasks.push_back(std::move(t));
            }
        }
    }
    if (tasks.empty()) throw Error("no p-adic claims selected");
    RunReport report = run_tasks(std::move(tasks), o.parallel, o.seed);
    return finalize(report, o);
}

int cmd_report(const std::string& from, const std::string& format, const std::string& out) {
    std::ifstream in(from);
    if (!in) throw Error("cannot open report: " + from);
    std::stringstream buf;
    buf << in.rdbuf();
    RunReport report = report_from_json(buf.str());
    std::string rendered = format == "json" ? report_to_json(report) : report_to_text(report);
    if (out.empty()) {
        std::cout << rendered;
        if (format == "json") std::cout << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw Error("cannot write: " + out);
        f << rendered;
        if (format == "json") f << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-supercongruence verification engine"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    CommonOpts vo, so, eo, po;
    std::string plan_path, report_from = "qcong_report.json", report_format = "text",
                report_out;

    CLI::App* verify = app.add_subcommand("verify", "verify claims against assignments");
    add_common(verify, vo);
    verify->add_option("--plan", plan_path, "plan file (default: <claims>/acceptance.plan)");

    CLI::App* scan = app.add_subcommand("scan", "scan conjectures over parameter ranges");
    add_common(scan, so);

    CLI::App* series = app.add_subcommand("series", "check series identities by truncation");
    add_common(series, eo);

    CLI::App* padic = app.add_subcommand("padic", "run p-adic supercongruence checks");
    add_common(padic, po);

    CLI::App* report = app.add_subcommand("report", "re-render a saved run report");
    report->add_option("--from", report_from, "input JSON report");
    report->add_option("--format", report_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    report->add_option("--out", report_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(vo, !vo.sets.empty() || vo.filter != "*", plan_path);
        if (scan->parsed()) return cmd_scan(so);
        if (series->parsed()) return cmd_series(eo);
        if (padic->parsed()) return cmd_padic(po, plan_path);
        if (report->parsed()) return cmd_report(report_from, report_format, report_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
