#pragma once

#include <optional>
#include <vector>

#include "qcong/expr.hpp"
#include "qcong/factored.hpp"

namespace qcong {

// Symbolic monomial c * a^i * e^j * q^m: the base of a q-shifted factorial or
// one side of a binomial. The exponents may involve the claim symbols
// (n, d, ...) but not the summation index.
struct Mono {
    BigRat coef{1};
    Expr a_exp = Expr::constant(0L);
    Expr e_exp = Expr::constant(0L);
    Expr q_exp = Expr::constant(0L);
};

// (base; q^step)_length ^ power — the q-shifted factorial
// prod_{j=0}^{length-1} (1 - base * q^(step*j)).
struct PochSpec {
    Mono base;
    Expr step;   // positive integer once resolved
    Expr length; // usually the symbol k
    int power = 1;
};

// [form]_{q^base_exp}, the q-integer bracket (1 - q^(b*m)) / (1 - q^b).
struct BracketSpec {
    Expr form;
    Expr base_exp = Expr::constant(1L);
    bool inverted = false;
};

// One summand of a truncated sum: constant * brackets * poch_num / poch_den * q^(qpow(k)).
struct SummandTemplate {
    BigRat const_coef{1};
    std::vector<BracketSpec> brackets;
    std::vector<PochSpec> poch_num;
    std::vector<PochSpec> poch_den;
    Expr qpow = Expr::constant(0L);
};

// The parameter monomial as a coefficient-field unit (c a^i e^j).
ParamRat mono_unit(const Mono& m, const Assignment& asg);

// Multiply `acc` by (base; q^step)_length evaluated at the assignment, on the
// numerator or denominator side. Throws UnresolvedSymbol / NonIntegral /
// DenominatorIdenticallyZero.
void poch_eval_into(FactoredQ& acc, const PochSpec& spec, const Assignment& asg,
                    bool denominator);

// Multiply `acc` by [m]_{q^b} (or its inverse), m = form(asg), b = base_exp(asg).
void bracket_eval_into(FactoredQ& acc, const BracketSpec& spec, const Assignment& asg);

// The q-shifted factorial as a reduced rational function; k overrides the
// spec's symbolic length.
RatQ poch_eval(const PochSpec& spec, Assignment asg, long k);

// [c1*d*k + c0] over base q, as a reduced rational function (negative
// arguments produce an explicit q-power denominator).
RatQ bracket_eval(long c1, long c0, long d, long k);

// Full summand at index k, as a single reduced rational function.
RatQ summand_eval(const SummandTemplate& t, Assignment asg, long k);

// Same, in factored form (the engine's summation path).
FactoredQ summand_eval_factored(const SummandTemplate& t, const Assignment& asg, long k);

} // namespace qcong
