#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "qcong/claims.hpp"
#include "qcong/factored.hpp"
#include "qcong/series.hpp"

namespace qcong {

enum class RunStatus {
    TheoremVerified,
    TheoremFailed,
    ConjectureSupported,
    ConjectureCounterexample,
    ExpectedFailureConfirmed,
    Skipped,
};

std::string to_string(RunStatus s);

struct CheckResult {
    std::string claim_name;
    ClaimKind kind = ClaimKind::Congruence;
    Assignment assignments;
    bool holds = false;
    QPoly remainder;           // zero iff holds (congruence claims)
    int remainder_degree = -1; // kept alongside for reports
    std::string remainder_hash;
    bool denominator_coprime_to_modulus = true;
    double elapsed_seconds = 0.0;
    RunStatus status = RunStatus::TheoremVerified;
    std::string modulus;
    std::string note; // mismatch degree, valuations, skip reason
};

struct EngineOptions {
    int truncation = 40;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Raised by the cooperative budget check.
struct BudgetExceeded : Error {
    BudgetExceeded() : Error("budget exceeded") {}
};

// LHS summand of an instantiated claim as a qseries template.
SummandTemplate build_template(const Term& term);

// Exact sum of the claim's left-hand side over k = 0 .. upper (factored form).
FactoredQ sum_claim_factored(const ConcreteClaim& cc, const EngineOptions& opt = {});
// Same, reduced to a single rational function.
RatQ sum_claim(const ConcreteClaim& cc);

// Evaluate a k-free closed-form term (congruence right-hand sides).
FactoredQ eval_closed_term(const Term& term, const Assignment& asg, const EngineOptions& opt = {});

// Translate a claim-level modulus into a polyq modulus.
Modulus to_modulus(const std::vector<ModFactor>& mods);

// Divisibility of the reduced numerator of lhs_minus_rhs by the expanded
// modulus, over the coefficient field. The coprimality of the reduced
// denominator with the modulus is reported as a diagnostic and does not
// affect `holds`.
CheckResult check_congruence(const RatQ& lhs_minus_rhs, const Modulus& m, const Assignment& asg);
CheckResult check_congruence_factored(const FactoredQ& lhs_minus_rhs, const Modulus& m,
                                      const Assignment& asg);

// Truncated power-series comparison of a series-identity claim.
CheckResult series_identity_check(const ConcreteClaim& cc, int N,
                                  const EngineOptions& opt = {});

// Sum a (possibly infinite) SumSpec into a truncated series.
TruncSeries sum_series(const SumSpec& spec, const Assignment& asg, long upper, int N,
                       const EngineOptions& opt = {});

// Exact p-adic check: valuation of the sum (rhs absent) or residue equality
// modulo p^r (rhs present, e.g. a p-adic Gamma quotient).
CheckResult padic_sum_check(const ConcreteClaim& cc);

// Dispatch on a claim's kind; fills status from the claim's declared status.
CheckResult run_claim(const ConcreteClaim& cc, const EngineOptions& opt = {});

} // namespace qcong
