#include "qcong/engine.hpp"

#include <chrono>
#include <sstream>

#include "qcong/padic.hpp"

namespace qcong {

std::string to_string(RunStatus s) {
    switch (s) {
        case RunStatus::TheoremVerified: return "THEOREM_VERIFIED";
        case RunStatus::TheoremFailed: return "THEOREM_FAILED";
        case RunStatus::ConjectureSupported: return "CONJECTURE_SUPPORTED";
        case RunStatus::ConjectureCounterexample: return "CONJECTURE_COUNTEREXAMPLE";
        case RunStatus::ExpectedFailureConfirmed: return "EXPECTED_FAILURE_CONFIRMED";
        case RunStatus::Skipped: return "SKIPPED";
    }
    return "?";
}

namespace {

void check_deadline(const EngineOptions& opt) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) throw BudgetExceeded();
}

} // namespace

SummandTemplate build_template(const Term& term) {
    SummandTemplate t;
    for (const auto& tf : term) {
        const Factor& f = tf.factor;
        switch (f.kind) {
            case Factor::Kind::Bracket: {
                BracketSpec b;
                b.form = f.form;
                b.base_exp = f.bqexp;
                b.inverted = tf.inverted;
                t.brackets.push_back(std::move(b));
                break;
            }
            case Factor::Kind::Poch: {
                PochSpec p;
                p.base = f.bases.empty() ? Mono{} : f.bases[0];
                p.step = f.step;
                p.length = f.length;
                p.power = f.power;
                for (const auto& base : f.bases) {
                    PochSpec copy = p;
                    copy.base = base;
                    (tf.inverted ? t.poch_den : t.poch_num).push_back(std::move(copy));
                }
                break;
            }
            case Factor::Kind::QPow:
                t.qpow = tf.inverted ? Expr::sub(t.qpow, f.form) : Expr::add(t.qpow, f.form);
                break;
            case Factor::Kind::Const:
                t.const_coef = tf.inverted ? t.const_coef / f.value : t.const_coef * f.value;
                break;
            default:
                throw ValidationError("factor kind not usable in a q-series summand");
        }
    }
    return t;
}

FactoredQ sum_claim_factored(const ConcreteClaim& cc, const EngineOptions& opt) {
    if (cc.upper < 0) throw Error("sum_claim needs a finite upper bound");
    SummandTemplate tmpl = build_template(cc.claim->lhs.term);
    FactoredQ acc = FactoredQ::zero();
    for (long k = 0; k <= cc.upper; ++k) {
        check_deadline(opt);
        acc.add(summand_eval_factored(tmpl, cc.assignments, k));
    }
    return acc;
}

RatQ sum_claim(const ConcreteClaim& cc) { return sum_claim_factored(cc).to_ratq(); }

// ---------------------------------------------------------------------------
// Closed-form terms (congruence RHS, Dwork prefactors, nested sums)
// ---------------------------------------------------------------------------

namespace {

FactoredQ sum_spec_factored(const SumSpec& spec, const Assignment& asg, long upper,
                            const EngineOptions& opt) {
    SummandTemplate tmpl = build_template(spec.term);
    FactoredQ acc = FactoredQ::zero();
    for (long k = 0; k <= upper; ++k) {
        check_deadline(opt);
        acc.add(summand_eval_factored(tmpl, asg, k));
    }
    return acc;
}

ParamRat param_pow(char which, long e) {
    ParamPoly var = which == 'a' ? ParamPoly::var_a() : ParamPoly::var_e();
    return ParamRat(var).pow(e);
}

// c * a^i * e^j * q^E as (unit, exponent) with the unit in the field.
std::pair<ParamRat, long> mono_value(const Mono& m, const Assignment& asg) {
    return {mono_unit(m), m.q_exp.eval_int(asg)};
}

} // namespace

FactoredQ eval_closed_term(const Term& term, const Assignment& asg, const EngineOptions& opt) {
    FactoredQ acc = FactoredQ::one();
    for (const auto& tf : term) {
        const Factor& f = tf.factor;
        bool inv = tf.inverted;
        switch (f.kind) {
            case Factor::Kind::Const:
                acc.mul_scalar(inv ? ParamRat(f.value).inv() : ParamRat(f.value));
                break;
            case Factor::Kind::SymVal: {
                auto it = asg.find(f.sym);
                if (it == asg.end()) throw UnresolvedSymbol(f.sym);
                ParamRat v{BigRat(it->second)};
                acc.mul_scalar(inv ? v.inv() : v);
                break;
            }
            case Factor::Kind::QPow: {
                long e = f.form.eval_int(asg);
                acc.mul_qpow(inv ? -static_cast<int>(e) : static_cast<int>(e));
                break;
            }
            case Factor::Kind::ParamPow: {
                long e = f.form.eval_int(asg);
                acc.mul_scalar(param_pow(f.param, inv ? -e : e));
                break;
            }
            case Factor::Kind::NegOnePow: {
                long e = f.form.eval_int(asg);
                if (e % 2 != 0) acc.negate();
                break;
            }
            case Factor::Kind::Bracket: {
                BracketSpec b;
                b.form = f.form;
                b.base_exp = f.bqexp;
                b.inverted = inv;
                bracket_eval_into(acc, b, asg);
                break;
            }
            case Factor::Kind::Poch: {
                PochSpec p;
                p.step = f.step;
                p.length = f.length;
                p.power = f.power;
                for (const auto& base : f.bases) {
                    p.base = base;
                    poch_eval_into(acc, p, asg, inv);
                }
                break;
            }
            case Factor::Kind::Binomial: {
                auto [ul, el] = mono_value(f.bases[0], asg);
                auto [ur, er] = mono_value(f.bases[1], asg);
                long shift = std::min({el, er, 0L});
                QPoly poly = QPoly::monomial(ul, static_cast<int>(el - shift)) -
                             QPoly::monomial(ur, static_cast<int>(er - shift));
                acc.mul_qpow(static_cast<int>(shift));
                if (inv)
                    acc.mul_den(poly);
                else
                    acc.mul_num(poly);
                break;
            }
            case Factor::Kind::Nested: {
                const SumSpec& inner = *f.nested;
                if (inner.infinite)
                    throw ValidationError("infinite sums cannot appear in closed forms");
                long upper = inner.upper.eval_int(asg);
                if (upper < 0) throw NonIntegralBound("nested sum upper bound is negative");
                FactoredQ s = sum_spec_factored(inner, asg, upper, opt);
                if (!inv) {
                    acc *= s;
                } else {
                    if (s.is_zero()) throw DenominatorIdenticallyZero("division by a zero sum");
                    acc.mul_scalar(s.scalar().inv());
                    acc.mul_qpow(-s.qpow());
                    acc.mul_den(s.num());
                    for (const auto& d : s.den()) acc.mul_num(d);
                }
                break;
            }
            default:
                throw ValidationError("factor kind not usable in a closed form");
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Congruence checking
// ---------------------------------------------------------------------------

Modulus to_modulus(const std::vector<ModFactor>& mods) {
    Modulus m;
    for (const auto& mf : mods) {
        Modulus::Factor f;
        switch (mf.kind) {
            case ModFactor::Kind::Phi: f.kind = Modulus::Kind::Cyclotomic; break;
            case ModFactor::Kind::QInt: f.kind = Modulus::Kind::QInt; break;
            case ModFactor::Kind::OneMinusAQn: f.kind = Modulus::Kind::OneMinusAQn; break;
            case ModFactor::Kind::AMinusQn: f.kind = Modulus::Kind::AMinusQn; break;
            case ModFactor::Kind::PPow:
                throw ValidationError("p^r modulus has no q-polynomial expansion");
        }
        f.arg = mf.arg;
        f.mult = mf.mult;
        m.add(std::move(f));
    }
    return m;
}

CheckResult check_congruence_factored(const FactoredQ& lhs_minus_rhs, const Modulus& m,
                                      const Assignment& asg) {
    CheckResult res;
    res.assignments = asg;
    res.modulus = m.str();
    FactoredQ diff = lhs_minus_rhs;
    diff.reduce();

    QPoly modulus = m.expand(asg).monic();
    if (diff.is_zero()) {
        res.holds = true;
        return res;
    }
    auto [quot, rem] = QPoly::divrem(diff.num(), modulus);
    (void)quot;
    res.holds = rem.is_zero();
    res.remainder = std::move(rem);
    res.remainder_degree = res.remainder.degree();
    std::ostringstream hash;
    hash << std::hex << res.remainder.hash();
    res.remainder_hash = hash.str();

    res.denominator_coprime_to_modulus = true;
    for (const auto& f : diff.den()) {
        if (QPoly::gcd(f, modulus).degree() > 0) {
            res.denominator_coprime_to_modulus = false;
            break;
        }
    }
    return res;
}

CheckResult check_congruence(const RatQ& lhs_minus_rhs, const Modulus& m, const Assignment& asg) {
    FactoredQ f = FactoredQ::of_poly(lhs_minus_rhs.num());
    if (!lhs_minus_rhs.den().is_one()) f.mul_den(lhs_minus_rhs.den());
    return check_congruence_factored(f, m, asg);
}

// ---------------------------------------------------------------------------
// Series identities
// ---------------------------------------------------------------------------

TruncSeries sum_series(const SumSpec& spec, const Assignment& asg, long upper, int N,
                       const EngineOptions& opt) {
    SummandTemplate tmpl = build_template(spec.term);
    TruncSeries acc = TruncSeries::zero(N);
    const long cap = upper >= 0 ? upper : 4L * N + 64;
    for (long k = 0; k <= cap; ++k) {
        check_deadline(opt);
        FactoredQ term = summand_eval_factored(tmpl, asg, k);
        if (term.is_zero()) {
            if (upper < 0) break; // factorial vanished; every later term vanishes too
            continue;
        }
        int val = term.qpow() + term.num().valuation();
        if (upper < 0 && val > N) break; // minimal degree grows with k
        acc.add(expand_factored(term, N));
    }
    return acc;
}

namespace {

TruncSeries term_series(const Term& term, const Assignment& asg, int N,
                        const EngineOptions& opt) {
    TruncSeries acc = TruncSeries::one(N);
    for (const auto& tf : term) {
        const Factor& f = tf.factor;
        if (f.kind == Factor::Kind::PochInf) {
            for (int rep = 0; rep < f.power; ++rep) {
                long step = f.step.eval_int(asg);
                if (step < 1) throw NonTruncatable("infinite product step must be >= 1");
                for (const auto& base : f.bases) {
                    long a = base.q_exp.eval_int(asg);
                    BigRat c = base.coef;
                    for (long mdeg = a; mdeg <= N; mdeg += step) {
                        if (mdeg >= 1) {
                            if (tf.inverted)
                                acc.div_one_minus(c, static_cast<int>(mdeg));
                            else
                                acc.mul_one_minus(c, static_cast<int>(mdeg));
                        } else if (mdeg == 0) {
                            // (1 - c): a scalar, or a degenerate zero factor
                            if (c.is_one())
                                throw NonTruncatable("infinite product hits a zero factor");
                            BigRat s = BigRat(1) - c;
                            acc.mul_scalar(tf.inverted ? s.inv() : s);
                        } else {
                            // finitely many Laurent factors:
                            // 1 - c q^m = -c q^m (1 - c^-1 q^-m) for m < 0
                            if (c.is_zero()) continue;
                            if (tf.inverted) {
                                acc.mul_qpow(static_cast<int>(-mdeg));
                                acc.mul_scalar((-c).inv());
                                acc.div_one_minus(c.inv(), static_cast<int>(-mdeg));
                            } else {
                                acc.mul_qpow(static_cast<int>(mdeg));
                                acc.mul_scalar(-c);
                                acc.mul_one_minus(c.inv(), static_cast<int>(-mdeg));
                            }
                        }
                    }
                }
            }
        } else if (f.kind == Factor::Kind::Nested) {
            const SumSpec& inner = *f.nested;
            long upper = inner.infinite ? -1 : inner.upper.eval_int(asg);
            TruncSeries s = sum_series(inner, asg, upper, N, opt);
            if (tf.inverted) throw ValidationError("division by an infinite sum");
            acc.mul(s);
        } else {
            Term single{{f, tf.inverted}};
            FactoredQ v = eval_closed_term(single, asg, opt);
            acc.mul(expand_factored(v, N));
        }
    }
    return acc;
}

} // namespace

CheckResult series_identity_check(const ConcreteClaim& cc, int N, const EngineOptions& opt) {
    CheckResult res;
    res.claim_name = cc.claim->name;
    res.kind = cc.claim->kind;
    res.assignments = cc.assignments;
    long upper = cc.claim->lhs.infinite ? -1 : cc.upper;
    TruncSeries lhs = sum_series(cc.claim->lhs, cc.assignments, upper, N, opt);
    TruncSeries rhs = term_series(*cc.claim->rhs, cc.assignments, N, opt);
    int mismatch = TruncSeries::first_mismatch(lhs, rhs);
    res.holds = mismatch > N;
    res.note = res.holds ? "coefficients agree through q^" + std::to_string(N)
                         : "first mismatch at q^" + std::to_string(mismatch);
    return res;
}

// ---------------------------------------------------------------------------
// p-adic checks
// ---------------------------------------------------------------------------

namespace {

BigRat padic_term(const Term& term, const Assignment& asg, long k) {
    Assignment local = asg;
    local["k"] = k;
    BigRat acc(1);
    for (const auto& tf : term) {
        const Factor& f = tf.factor;
        BigRat v(1);
        switch (f.kind) {
            case Factor::Kind::Bracket: v = f.form.eval(local); break;
            case Factor::Kind::RPoch:
                v = poch_rational(f.form.eval(asg), k);
                for (int i = 1; i < f.power; ++i) v *= poch_rational(f.form.eval(asg), k);
                break;
            case Factor::Kind::ExpK: v = f.value.pow(k); break;
            case Factor::Kind::Const: v = f.value; break;
            default: throw ValidationError("factor kind not usable in a p-adic sum");
        }
        if (tf.inverted) {
            if (v.is_zero()) throw DenominatorIdenticallyZero("p-adic term divides by zero");
            acc /= v;
        } else {
            acc *= v;
        }
    }
    return acc;
}

unsigned long mulmod(unsigned long x, unsigned long y, unsigned long m) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(x) * y) % m);
}

unsigned long invmod(unsigned long x, unsigned long m) {
    mpz_t a, mm, r;
    mpz_inits(a, mm, r, nullptr);
    mpz_set_ui(a, x);
    mpz_set_ui(mm, m);
    if (mpz_invert(r, a, mm) == 0) {
        mpz_clears(a, mm, r, nullptr);
        throw NotPadicInteger("no modular inverse");
    }
    unsigned long out = mpz_get_ui(r);
    mpz_clears(a, mm, r, nullptr);
    return out;
}

} // namespace

CheckResult padic_sum_check(const ConcreteClaim& cc) {
    const Claim& c = *cc.claim;
    CheckResult res;
    res.claim_name = c.name;
    res.kind = c.kind;
    res.assignments = cc.assignments;
    auto itp = cc.assignments.find("p");
    if (itp == cc.assignments.end()) throw UnresolvedSymbol("p");
    long p = itp->second;
    if (!is_prime(p)) throw PrimeConditionViolated(std::to_string(p) + " is not prime");
    int r = 0;
    for (const auto& m : c.modulus)
        if (m.kind == ModFactor::Kind::PPow) r += m.mult;
    res.modulus = "p^" + std::to_string(r);

    BigRat sum(0);
    for (long k = 0; k <= cc.upper; ++k) sum += padic_term(c.lhs.term, cc.assignments, k);

    if (!c.rhs) {
        long v = vp(sum, p);
        res.holds = v >= r;
        res.note = "v_p(sum) = " + (v == kValuationInfinity ? std::string("inf") : std::to_string(v)) +
                   ", needs >= " + std::to_string(r);
        return res;
    }

    // Residue comparison modulo p^r (p-adic Gamma right-hand sides).
    unsigned long mod = 1;
    for (int i = 0; i < r; ++i) mod *= static_cast<unsigned long>(p);
    unsigned long lhs_res = mod_prime_power(sum, p, r);
    unsigned long rhs_res = 1;
    for (const auto& tf : *c.rhs) {
        const Factor& f = tf.factor;
        unsigned long v = 1;
        switch (f.kind) {
            case Factor::Kind::GammaP: v = padic_gamma(p, f.form.eval(cc.assignments), r); break;
            case Factor::Kind::SymVal: {
                auto it = cc.assignments.find(f.sym);
                if (it == cc.assignments.end()) throw UnresolvedSymbol(f.sym);
                v = mod_prime_power(BigRat(it->second), p, r);
                break;
            }
            case Factor::Kind::Const: v = mod_prime_power(f.value, p, r); break;
            default: throw ValidationError("factor kind not usable in a p-adic right-hand side");
        }
        rhs_res = mulmod(rhs_res, tf.inverted ? invmod(v, mod) : v, mod);
    }
    res.holds = lhs_res == rhs_res;
    res.note = "lhs = " + std::to_string(lhs_res) + ", rhs = " + std::to_string(rhs_res) +
               " (mod " + std::to_string(mod) + ")";
    return res;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

CheckResult run_claim(const ConcreteClaim& cc, const EngineOptions& opt) {
    const Claim& c = *cc.claim;
    auto started = std::chrono::steady_clock::now();
    CheckResult res;
    switch (c.kind) {
        case ClaimKind::Congruence: {
            FactoredQ diff = sum_claim_factored(cc, opt);
            if (c.rhs) {
                FactoredQ rhs = eval_closed_term(*c.rhs, cc.assignments, opt);
                rhs.negate();
                diff.add(rhs);
            }
            res = check_congruence_factored(diff, to_modulus(c.modulus), cc.assignments);
            break;
        }
        case ClaimKind::SeriesIdentity:
            res = series_identity_check(cc, opt.truncation, opt);
            break;
        case ClaimKind::PadicCongruence:
            res = padic_sum_check(cc);
            break;
    }
    res.claim_name = c.name;
    res.kind = c.kind;
    res.assignments = cc.assignments;
    switch (c.status) {
        case ClaimStatus::Theorem:
            res.status = res.holds ? RunStatus::TheoremVerified : RunStatus::TheoremFailed;
            break;
        case ClaimStatus::Conjecture:
            res.status =
                res.holds ? RunStatus::ConjectureSupported : RunStatus::ConjectureCounterexample;
            break;
        case ClaimStatus::ExpectedFailure:
            res.status =
                res.holds ? RunStatus::TheoremFailed : RunStatus::ExpectedFailureConfirmed;
            if (!res.holds && res.note.empty())
                res.note = "failure confirmed; remainder degree " +
                           std::to_string(res.remainder.degree());
            break;
    }
    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return res;
}

} // namespace qcong
