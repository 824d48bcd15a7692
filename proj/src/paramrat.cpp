#include "qcong/paramrat.hpp"

#include <ostream>

#include "qcong/errors.hpp"

namespace qcong {

ParamRat ParamRat::normalized(ParamPoly num, ParamPoly den) {
    if (den.is_zero()) throw ZeroDenominator("ParamRat with zero denominator");
    ParamRat r;
    if (num.is_zero()) return r; // 0/1
    if (!den.is_const()) {
        ParamPoly g = ParamPoly::gcd(num, den);
        if (!g.is_one()) {
            num = ParamPoly::divexact(num, g);
            den = ParamPoly::divexact(den, g);
        }
    }
    // den integer-primitive, positive leading; scale carried by num
    BigRat c = den.content();
    r.num_ = num.scaled(c.inv());
    r.den_ = den.scaled(c.inv());
    return r;
}

ParamRat operator+(const ParamRat& x, const ParamRat& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.is_const() && y.is_const()) return ParamRat(x.const_value() + y.const_value());
    if (x.den_ == y.den_) return ParamRat::normalized(x.num_ + y.num_, x.den_);
    return ParamRat::normalized(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

ParamRat operator-(const ParamRat& x, const ParamRat& y) { return x + (-y); }

ParamRat operator*(const ParamRat& x, const ParamRat& y) {
    if (x.is_zero() || y.is_zero()) return ParamRat();
    if (x.is_const() && y.is_const()) return ParamRat(x.const_value() * y.const_value());
    if (x.is_const()) {
        ParamRat r;
        BigRat c = x.const_value();
        r.num_ = y.num_.scaled(c);
        r.den_ = y.den_;
        return r;
    }
    if (y.is_const()) return y * x;
    return ParamRat::normalized(x.num_ * y.num_, x.den_ * y.den_);
}

ParamRat operator/(const ParamRat& x, const ParamRat& y) {
    if (y.is_zero()) throw ZeroDenominator("ParamRat division by zero");
    return x * y.inv();
}

ParamRat ParamRat::operator-() const {
    ParamRat r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamRat ParamRat::inv() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero ParamRat");
    return normalized(den_, num_);
}

ParamRat ParamRat::pow(long e) const {
    if (e == 0) return ParamRat(BigRat(1));
    ParamRat base = e < 0 ? inv() : *this;
    unsigned long ue = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    ParamRat acc(BigRat(1));
    while (ue) {
        if (ue & 1) acc = acc * base;
        base = base * base;
        ue >>= 1;
    }
    return acc;
}

BigRat ParamRat::eval(const BigRat& a0, const BigRat& e0) const {
    BigRat d = den_.eval(a0, e0);
    if (d.is_zero()) throw PoleAtPoint("ParamRat pole at a=" + a0.str() + ", e=" + e0.str());
    return num_.eval(a0, e0) / d;
}

std::string ParamRat::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const ParamRat& x) { return os << x.str(); }

} // namespace qcong
