#pragma once

#include <string>
#include <vector>

#include "qcong/bigrat.hpp"

namespace qcong {

// Sparse bivariate polynomial in the parameters a and e over BigRat.
// Terms are kept sorted in graded lexicographic order with a > e
// (ascending; the leading term is the last entry), with no zero
// coefficients stored, so equality is structural.
class ParamPoly {
public:
    struct Term {
        int da = 0, de = 0;
        BigRat c;
    };

    ParamPoly() = default; // zero
    static ParamPoly constant(BigRat c);
    static ParamPoly constant(long c) { return constant(BigRat(c)); }
    static ParamPoly monomial(BigRat c, int da, int de);
    static ParamPoly var_a() { return monomial(BigRat(1), 1, 0); }
    static ParamPoly var_e() { return monomial(BigRat(1), 0, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_const() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].da == 0 && terms_[0].de == 0); }
    bool is_one() const;
    // The constant value; requires is_const().
    BigRat const_value() const;
    bool is_monomial() const { return terms_.size() == 1; }

    int deg_a() const;
    int deg_e() const;
    const Term& leading() const { return terms_.back(); } // requires nonzero
    const std::vector<Term>& terms() const { return terms_; }

    friend ParamPoly operator+(const ParamPoly& x, const ParamPoly& y);
    friend ParamPoly operator-(const ParamPoly& x, const ParamPoly& y);
    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);
    ParamPoly operator-() const;
    friend bool operator==(const ParamPoly& x, const ParamPoly& y);
    friend bool operator!=(const ParamPoly& x, const ParamPoly& y) { return !(x == y); }

    ParamPoly scaled(const BigRat& c) const;

    // Exact quotient; throws NotDivisible when y does not divide x.
    static ParamPoly divexact(const ParamPoly& x, const ParamPoly& y);

    // GCD normalized to integer-primitive with positive leading coefficient.
    // Subresultant PRS on the recursive representation (polynomials in a
    // over Q[e]) with content extraction. gcd(0, 0) is an error.
    static ParamPoly gcd(const ParamPoly& x, const ParamPoly& y);

    // Rational content: the value c with x = c * primitive_part(x), where the
    // primitive part has coprime integer coefficients and positive leading
    // coefficient. content(0) = 0.
    BigRat content() const;
    ParamPoly primitive_part() const;

    BigRat eval(const BigRat& a0, const BigRat& e0) const;

    std::string str() const;

private:
    std::vector<Term> terms_;
    void normalize(); // sort + combine + drop zeros
    friend class ParamPolyBuilder;
};

std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

} // namespace qcong
