#include "qcong/qseries.hpp"

#include "qcong/errors.hpp"

namespace qcong {

ParamRat mono_unit(const Mono& m, const Assignment& asg) {
    ParamRat u(m.coef);
    long ae = m.a_exp.eval_int(asg);
    long ee = m.e_exp.eval_int(asg);
    if (ae != 0) u = u * ParamRat(ParamPoly::var_a()).pow(ae);
    if (ee != 0) u = u * ParamRat(ParamPoly::var_e()).pow(ee);
    return u;
}

void poch_eval_into(FactoredQ& acc, const PochSpec& spec, const Assignment& asg,
                    bool denominator) {
    long len = spec.length.eval_int(asg);
    if (len < 0) throw NonIntegral("negative q-shifted factorial length " + std::to_string(len));
    if (len == 0 || spec.power == 0) return;
    long step = spec.step.eval_int(asg);
    if (step <= 0) throw NonIntegral("q-shifted factorial step must be positive, got " +
                                     std::to_string(step));
    long base_exp = spec.base.q_exp.eval_int(asg);
    ParamRat unit = mono_unit(spec.base);
    bool den_side = denominator ? (spec.power > 0) : (spec.power < 0);
    int reps = spec.power > 0 ? spec.power : -spec.power;
    for (long j = 0; j < len; ++j) {
        long m = base_exp + step * j;
        for (int t = 0; t < reps; ++t) acc.mul_one_minus(unit, m, den_side);
    }
}

void bracket_eval_into(FactoredQ& acc, const BracketSpec& spec, const Assignment& asg) {
    long m = spec.form.eval_int(asg);
    long b = spec.base_exp.eval_int(asg);
    if (b <= 0) throw NonIntegral("bracket base exponent must be positive");
    // [m]_{q^b} = (1 - q^(b m)) / (1 - q^b); the helper handles negative b*m.
    if (m == 0) {
        if (spec.inverted) throw DenominatorIdenticallyZero("division by [0]");
        acc.mul_num(QPoly());
        return;
    }
    acc.mul_one_minus(ParamRat(1L), b * m, spec.inverted);
    acc.mul_one_minus(ParamRat(1L), b, !spec.inverted);
}

FactoredQ summand_eval_factored(const SummandTemplate& t, const Assignment& asg, long k) {
    Assignment local = asg;
    local["k"] = k;
    FactoredQ acc = FactoredQ::one();
    acc.mul_scalar(ParamRat(t.const_coef));
    for (const auto& br : t.brackets) {
        bracket_eval_into(acc, br, local);
        if (acc.is_zero()) return FactoredQ::zero();
    }
    for (const auto& ps : t.poch_den) poch_eval_into(acc, ps, local, true);
    for (const auto& ps : t.poch_num) {
        poch_eval_into(acc, ps, local, false);
        if (acc.is_zero()) return FactoredQ::zero();
    }
    acc.mul_qpow(static_cast<int>(t.qpow.eval_int(local)));
    return acc;
}

RatQ summand_eval(const SummandTemplate& t, Assignment asg, long k) {
    return summand_eval_factored(t, asg, k).to_ratq();
}

RatQ poch_eval(const PochSpec& spec, Assignment asg, long k) {
    PochSpec s = spec;
    s.length = Expr::constant(k);
    FactoredQ acc = FactoredQ::one();
    poch_eval_into(acc, s, asg, false);
    return acc.to_ratq();
}

RatQ bracket_eval(long c1, long c0, long d, long k) {
    BracketSpec spec;
    spec.form = Expr::constant(c1 * d * k + c0);
    FactoredQ acc = FactoredQ::one();
    bracket_eval_into(acc, spec, {});
    return acc.to_ratq();
}

} // namespace qcong
