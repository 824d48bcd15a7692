#pragma once

#include <string>
#include <vector>

#include "qcong/claims.hpp"
#include "qcong/report.hpp"

namespace qcong {

// One verification job: an instantiated claim plus run options.
struct Task {
    ConcreteClaim cc;
    int truncation = 40;
    double budget_seconds = 0.0; // 0 = no budget
};

// Execute tasks (optionally in parallel). Results come back ordered by
// (claim name, assignments) regardless of scheduling. A task over budget is
// reported SKIPPED; any internal error is folded into a THEOREM_FAILED result
// with the message in `note`.
RunReport run_tasks(std::vector<Task> tasks, int parallel_jobs, long seed);

// Parse a plan file: one `run <claim> [sym=int ...] [N=<truncation>]` per
// line, '#' comments. Claims are looked up by name in the registry.
std::vector<Task> load_plan(const std::string& path, const std::vector<Claim>& claims);

} // namespace qcong
