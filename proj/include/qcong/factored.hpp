#pragma once

#include <vector>

#include "qcong/qpoly.hpp"

namespace qcong {

// Rational function in q held with a factored denominator:
//
//     value = scalar * q^qpow * num / prod(den[i])
//
// scalar is a unit of the coefficient field Q(a, e); every den factor has
// constant term 1 (its q-valuation and leading unit are pulled into qpow and
// scalar when it is installed). Keeping denominators as the original
// Pochhammer-style factors makes fraction addition an LCM merge and makes
// reduction a sequence of cheap exact-division peels instead of one gcd of
// huge polynomials.
class FactoredQ {
public:
    FactoredQ() : scalar_(1L) {} // zero: num_ = 0
    static FactoredQ zero() { return FactoredQ(); }
    static FactoredQ one();
    static FactoredQ of_poly(QPoly p);
    static FactoredQ of_scalar(ParamRat s);

    bool is_zero() const { return num_.is_zero() || scalar_.is_zero(); }

    const ParamRat& scalar() const { return scalar_; }
    const QPoly& num() const { return num_; }
    int qpow() const { return qpow_; }
    const std::vector<QPoly>& den() const { return den_; }

    // Multiply in a numerator polynomial (need not be a unit).
    void mul_num(const QPoly& p);
    // Divide by a nonzero polynomial; it is canonicalized (valuation to qpow_,
    // unit constant to scalar_) and appended to the factor list.
    // Throws DenominatorIdenticallyZero on a zero polynomial.
    void mul_den(const QPoly& p);
    void mul_scalar(const ParamRat& s);
    void mul_qpow(int e) { qpow_ += e; }
    // Multiply by (1 - c q^m) on the chosen side; m may be negative, in which
    // case the factor is rewritten as q^m (q^|m| - c) with a polynomial part.
    void mul_one_minus(const ParamRat& c, long m, bool denominator);

    FactoredQ& operator*=(const FactoredQ& o);
    void negate() { scalar_ = -scalar_; }

    // this += o, followed by reduce().
    void add(const FactoredQ& o);

    // Pull every common divisor of num and the den factors out, move the
    // numerator's q-valuation into qpow_, drop trivial factors. Afterwards
    // gcd(num, den factor) = 1 for every factor.
    void reduce();

    QPoly expanded_den() const; // product of den factors (constant term 1)

    // Reduced num/den as a RatQ (den made monic); requires reduce() semantics,
    // which this method applies itself.
    RatQ to_ratq() const;

    std::string str() const;

private:
    ParamRat scalar_;
    QPoly num_; // zero value <=> num_ zero
    int qpow_ = 0;
    std::vector<QPoly> den_;
};

} // namespace qcong
