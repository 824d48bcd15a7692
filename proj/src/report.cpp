#include "qcong/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace qcong {

using nlohmann::json;

std::map<std::string, int> RunReport::totals() const {
    std::map<std::string, int> t;
    for (const auto& r : results) ++t[to_string(r.status)];
    return t;
}

bool RunReport::healthy() const {
    for (const auto& r : results)
        if (r.status == RunStatus::TheoremFailed || r.status == RunStatus::ConjectureCounterexample)
            return false;
    return true;
}

namespace {

std::string assignments_str(const Assignment& asg) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : asg) {
        if (!first) os << " ";
        first = false;
        os << k << "=" << v;
    }
    return os.str();
}

} // namespace

std::string report_to_json(const RunReport& r) {
    json out;
    out["version"] = r.tool_version;
    out["seed"] = r.seed;
    out["results"] = json::array();
    for (const auto& res : r.results) {
        json j;
        j["claim"] = res.claim_name;
        j["kind"] = to_string(res.kind);
        j["status"] = to_string(res.status);
        j["assignments"] = json::object();
        for (const auto& [k, v] : res.assignments) j["assignments"][k] = v;
        j["holds"] = res.holds;
        j["remainder_degree"] = res.remainder_degree;
        j["remainder_hash"] = res.remainder_hash;
        j["modulus"] = res.modulus;
        j["denominator_coprime_to_modulus"] = res.denominator_coprime_to_modulus;
        j["elapsed_ms"] = res.elapsed_seconds * 1000.0;
        j["note"] = res.note;
        out["results"].push_back(std::move(j));
    }
    out["totals"] = json::object();
    for (const auto& [k, v] : r.totals()) out["totals"][k] = v;
    out["wall_time_ms"] = r.wall_time_seconds * 1000.0;
    return out.dump(2);
}

std::string report_to_text(const RunReport& r) {
    std::ostringstream os;
    os << "qcong " << r.tool_version << " (seed " << r.seed << ")\n";
    for (const auto& res : r.results) {
        os << std::left << std::setw(28) << res.claim_name << " "
           << std::setw(26) << to_string(res.status) << " " << assignments_str(res.assignments);
        if (!res.modulus.empty()) os << "  mod " << res.modulus;
        if (!res.holds && res.remainder_degree >= 0)
            os << "  [remainder degree " << res.remainder_degree << "]";
        if (!res.note.empty()) os << "  (" << res.note << ")";
        os << "\n";
    }
    os << "totals:";
    for (const auto& [k, v] : r.totals()) os << " " << k << "=" << v;
    os << "\nwall time: " << std::fixed << std::setprecision(1) << r.wall_time_seconds * 1000.0
       << " ms\n";
    return os.str();
}

RunReport report_from_json(const std::string& json_text) {
    json in = json::parse(json_text);
    RunReport r;
    r.tool_version = in.value("version", "");
    r.seed = in.value("seed", 0L);
    r.wall_time_seconds = in.value("wall_time_ms", 0.0) / 1000.0;
    for (const auto& j : in.at("results")) {
        CheckResult res;
        res.claim_name = j.value("claim", "");
        std::string kind = j.value("kind", "congruence");
        res.kind = kind == "series" ? ClaimKind::SeriesIdentity
                   : kind == "padic" ? ClaimKind::PadicCongruence
                                     : ClaimKind::Congruence;
        std::string status = j.value("status", "");
        for (RunStatus s : {RunStatus::TheoremVerified, RunStatus::TheoremFailed,
                            RunStatus::ConjectureSupported, RunStatus::ConjectureCounterexample,
                            RunStatus::ExpectedFailureConfirmed, RunStatus::Skipped})
            if (to_string(s) == status) res.status = s;
        if (j.contains("assignments"))
            for (auto it = j["assignments"].begin(); it != j["assignments"].end(); ++it)
                res.assignments[it.key()] = it.value().get<long>();
        res.holds = j.value("holds", false);
        res.remainder_degree = j.value("remainder_degree", -1);
        res.remainder_hash = j.value("remainder_hash", "");
        res.denominator_coprime_to_modulus = j.value("denominator_coprime_to_modulus", true);
        res.modulus = j.value("modulus", "");
        res.note = j.value("note", "");
        res.elapsed_seconds = j.value("elapsed_ms", 0.0) / 1000.0;
        r.results.push_back(std::move(res));
    }
    return r;
}

} // namespace qcong
