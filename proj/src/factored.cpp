#include "qcong/factored.hpp"

#include <algorithm>
#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

FactoredQ FactoredQ::one() {
    FactoredQ f;
    f.num_ = QPoly::constant(1L);
    return f;
}

FactoredQ FactoredQ::of_poly(QPoly p) {
    FactoredQ f;
    f.num_ = std::move(p);
    return f;
}

FactoredQ FactoredQ::of_scalar(ParamRat s) {
    FactoredQ f;
    f.num_ = QPoly::constant(1L);
    f.scalar_ = std::move(s);
    return f;
}

void FactoredQ::mul_num(const QPoly& p) { num_ = num_ * p; }

void FactoredQ::mul_den(const QPoly& p) {
    if (p.is_zero()) throw DenominatorIdenticallyZero();
    QPoly f = p;
    int v = f.valuation();
    if (v > 0) {
        f = f.unshifted(v);
        qpow_ -= v;
    }
    const ParamRat& c0 = f.coeff(0);
    if (!c0.is_one()) {
        scalar_ = scalar_ / c0;
        f = f.scaled(c0.inv());
    }
    if (!f.is_one()) den_.push_back(std::move(f));
}

void FactoredQ::mul_scalar(const ParamRat& s) { scalar_ = scalar_ * s; }

void FactoredQ::mul_one_minus(const ParamRat& c, long m, bool denominator) {
    // 1 - c q^m; for m < 0 this is q^m (q^|m| - c).
    QPoly f;
    int shift = 0;
    if (m >= 0) {
        f = QPoly::one_minus(c, static_cast<int>(m));
    } else {
        std::vector<ParamRat> v(static_cast<size_t>(-m) + 1);
        v[0] = -c;
        v.back() = ParamRat(1L);
        f = QPoly::from_coeffs(std::move(v));
        shift = static_cast<int>(m);
    }
    if (denominator) {
        qpow_ -= shift;
        mul_den(f);
    } else {
        qpow_ += shift;
        if (f.is_zero()) { // c = 1, m = 0
            num_ = QPoly();
            return;
        }
        mul_num(f);
    }
}

FactoredQ& FactoredQ::operator*=(const FactoredQ& o) {
    scalar_ = scalar_ * o.scalar_;
    num_ = num_ * o.num_;
    qpow_ += o.qpow_;
    den_.insert(den_.end(), o.den_.begin(), o.den_.end());
    return *this;
}

void FactoredQ::add(const FactoredQ& o) {
    if (o.is_zero()) return;
    if (is_zero()) {
        *this = o;
        reduce();
        return;
    }
    // LCM of the two factor multisets.
    std::vector<QPoly> lcm = den_;
    std::vector<QPoly> missing_mine; // lcm / den_
    {
        // count copies of each distinct factor on my side
        std::vector<QPoly> mine = den_;
        for (const auto& f : o.den_) {
            auto it = std::find(mine.begin(), mine.end(), f);
            if (it != mine.end()) {
                mine.erase(it); // matched an existing copy
            } else {
                lcm.push_back(f);
                missing_mine.push_back(f);
            }
        }
    }
    std::vector<QPoly> missing_other; // lcm / o.den_
    {
        std::vector<QPoly> other = o.den_;
        for (const auto& f : lcm) {
            auto it = std::find(other.begin(), other.end(), f);
            if (it != other.end())
                other.erase(it);
            else
                missing_other.push_back(f);
        }
    }

    QPoly mynum = num_.scaled(scalar_);
    for (const auto& f : missing_mine) mynum = mynum * f;
    QPoly onum = o.num_.scaled(o.scalar_);
    for (const auto& f : missing_other) onum = onum * f;

    int qmin = std::min(qpow_, o.qpow_);
    if (qpow_ > qmin) mynum = mynum.shifted(qpow_ - qmin);
    if (o.qpow_ > qmin) onum = onum.shifted(o.qpow_ - qmin);

    scalar_ = ParamRat(1L);
    num_ = mynum + onum;
    qpow_ = qmin;
    den_ = std::move(lcm);
    reduce();
}

void FactoredQ::reduce() {
    if (is_zero()) {
        *this = FactoredQ();
        return;
    }
    int v = num_.valuation();
    if (v > 0) {
        num_ = num_.unshifted(v);
        qpow_ += v;
    }
    std::vector<QPoly> kept;
    kept.reserve(den_.size());
    for (size_t i = 0; i < den_.size(); ++i) {
        QPoly f = den_[i];
        // Cancel this copy against the numerator as far as possible.
        while (!f.is_const()) {
            auto [quot, rem] = QPoly::divrem(num_, f);
            if (rem.is_zero()) {
                num_ = std::move(quot); // the whole copy cancels
                f = QPoly::constant(1L);
                break;
            }
            // gcd(num, f) = gcd(f, num mod f); the right-hand pair is small
            QPoly g = QPoly::gcd(f, rem);
            if (g.degree() == 0) break; // coprime, keep the factor
            num_ = QPoly::divexact(num_, g);
            QPoly remnant = QPoly::divexact(f, g);
            // re-canonicalize the remnant (constant term back to 1)
            const ParamRat& c0 = remnant.coeff(0);
            if (!c0.is_one()) {
                scalar_ = scalar_ / c0;
                remnant = remnant.scaled(c0.inv());
            }
            f = std::move(remnant);
        }
        if (!f.is_const()) kept.push_back(std::move(f));
    }
    den_ = std::move(kept);
}

QPoly FactoredQ::expanded_den() const {
    QPoly d = QPoly::constant(1L);
    for (const auto& f : den_) d = d * f;
    return d;
}

RatQ FactoredQ::to_ratq() const {
    FactoredQ r = *this;
    r.reduce();
    if (r.is_zero()) return RatQ();
    QPoly num = r.num_.scaled(r.scalar_);
    QPoly den = r.expanded_den();
    if (r.qpow_ >= 0)
        num = num.shifted(r.qpow_);
    else
        den = den.shifted(-r.qpow_);
    // coprime by reduce(); monic normalization only
    return RatQ::reduced_unchecked(std::move(num), std::move(den));
}

std::string FactoredQ::str() const {
    std::ostringstream os;
    os << "(" << scalar_.str() << ") * q^" << qpow_ << " * (" << num_.str() << ")";
    for (const auto& f : den_) os << " / (" << f.str() << ")";
    return os.str();
}

} // namespace qcong
