#pragma once

#include <string>

#include "qcong/parampoly.hpp"

namespace qcong {

// Element of the field Q(a, e), stored as a reduced fraction:
// gcd(num, den) = 1, den integer-primitive with positive leading coefficient.
class ParamRat {
public:
    ParamRat() : num_(), den_(ParamPoly::constant(1)) {} // zero
    ParamRat(BigRat c) // NOLINT(google-explicit-constructor)
        : num_(ParamPoly::constant(std::move(c))), den_(ParamPoly::constant(1)) {}
    ParamRat(long c) : ParamRat(BigRat(c)) {} // NOLINT(google-explicit-constructor)
    explicit ParamRat(ParamPoly p) : num_(std::move(p)), den_(ParamPoly::constant(1)) {}

    // Reduce num/den to the invariant form; throws ZeroDenominator.
    static ParamRat normalized(ParamPoly num, ParamPoly den);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_const() const { return num_.is_const() && den_.is_const(); }
    BigRat const_value() const { return num_.const_value() / den_.const_value(); }

    friend ParamRat operator+(const ParamRat& x, const ParamRat& y);
    friend ParamRat operator-(const ParamRat& x, const ParamRat& y);
    friend ParamRat operator*(const ParamRat& x, const ParamRat& y);
    friend ParamRat operator/(const ParamRat& x, const ParamRat& y);
    ParamRat operator-() const;
    ParamRat inv() const;
    ParamRat pow(long e) const;

    friend bool operator==(const ParamRat& x, const ParamRat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const ParamRat& x, const ParamRat& y) { return !(x == y); }

    // Exact evaluation at a = a0, e = e0; throws PoleAtPoint.
    BigRat eval(const BigRat& a0, const BigRat& e0) const;

    std::string str() const;

private:
    ParamPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const ParamRat& x);

} // namespace qcong
