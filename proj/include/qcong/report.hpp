#pragma once

#include <map>
#include <string>
#include <vector>

#include "qcong/engine.hpp"

namespace qcong {

struct RunReport {
    std::string tool_version;
    long seed = 42;
    std::vector<CheckResult> results;
    double wall_time_seconds = 0.0;

    std::map<std::string, int> totals() const;
    bool healthy() const; // no THEOREM_FAILED / CONJECTURE_COUNTEREXAMPLE
};

// Stable JSON schema:
// { "version": str, "seed": int, "results": [ { "claim": str, "kind": str,
//   "status": str, "assignments": {sym: int}, "holds": bool,
//   "remainder_degree": int, "remainder_hash": str, "modulus": str,
//   "denominator_coprime_to_modulus": bool, "elapsed_ms": num, "note": str } ],
//   "totals": {status: int}, "wall_time_ms": num }
std::string report_to_json(const RunReport& r);
std::string report_to_text(const RunReport& r);

// Re-read a JSON report written by report_to_json (for the `report` command).
RunReport report_from_json(const std::string& json_text);

} // namespace qcong
