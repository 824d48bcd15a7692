#include "qcong/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "qcong/version.hpp"

namespace qcong {

namespace {

std::string task_sort_key(const Task& t) {
    std::ostringstream os;
    os << t.cc.claim->name;
    for (const auto& [k, v] : t.cc.assignments) os << "|" << k << "=" << v;
    return os.str();
}

CheckResult run_one(const Task& t) {
    EngineOptions opt;
    opt.truncation = t.truncation;
    if (t.budget_seconds > 0)
        opt.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(t.budget_seconds));
    try {
        return run_claim(t.cc, opt);
    } catch (const BudgetExceeded&) {
        CheckResult res;
        res.claim_name = t.cc.claim->name;
        res.kind = t.cc.claim->kind;
        res.assignments = t.cc.assignments;
        res.status = RunStatus::Skipped;
        res.note = "budget of " + std::to_string(t.budget_seconds) + "s exceeded";
        return res;
    } catch (const Error& e) {
        CheckResult res;
        res.claim_name = t.cc.claim->name;
        res.kind = t.cc.claim->kind;
        res.assignments = t.cc.assignments;
        res.status = RunStatus::TheoremFailed;
        res.note = std::string("error: ") + e.what();
        return res;
    }
}

} // namespace

RunReport run_tasks(std::vector<Task> tasks, int parallel_jobs, long seed) {
    auto started = std::chrono::steady_clock::now();
    std::stable_sort(tasks.begin(), tasks.end(), [](const Task& x, const Task& y) {
        return task_sort_key(x) < task_sort_key(y);
    });
    std::vector<CheckResult> results(tasks.size());
    if (parallel_jobs <= 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = run_one(tasks[i]);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                results[i] = run_one(tasks[i]);
            }
        };
        size_t nthreads = std::min<size_t>(static_cast<size_t>(parallel_jobs), tasks.size());
        std::vector<std::thread> pool;
        for (size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    RunReport report;
    report.tool_version = kToolVersion;
    report.seed = seed;
    report.results = std::move(results);
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

std::vector<Task> load_plan(const std::string& path, const std::vector<Claim>& claims) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open plan file: " + path);
    std::vector<Task> tasks;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word != "run")
            throw Error(path + ":" + std::to_string(lineno) + ": expected 'run <claim> ...'");
        std::string name;
        ls >> name;
        const Claim* claim = nullptr;
        for (const auto& c : claims)
            if (c.name == name) claim = &c;
        if (!claim)
            throw Error(path + ":" + std::to_string(lineno) + ": unknown claim '" + name + "'");
        Task t;
        t.truncation = kDefaultTruncation;
        Assignment asg;
        std::string kv;
        while (ls >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw Error(path + ":" + std::to_string(lineno) + ": expected sym=value, got '" +
                            kv + "'");
            std::string key = kv.substr(0, eq);
            long value = std::stol(kv.substr(eq + 1));
            if (key == "N")
                t.truncation = static_cast<int>(value);
            else
                asg[key] = value;
        }
        t.cc = instantiate(*claim, asg);
        tasks.push_back(std::move(t));
    }
    return tasks;
}

} // namespace qcong
