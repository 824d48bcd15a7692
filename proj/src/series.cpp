#include "qcong/series.hpp"

#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

TruncSeries TruncSeries::one(int N) {
    TruncSeries s(N);
    s.c_.assign(1, BigRat(1));
    return s;
}

TruncSeries TruncSeries::from_coeffs(int N, int offset, std::vector<BigRat> coeffs) {
    TruncSeries s(N);
    s.offset_ = offset;
    s.c_ = std::move(coeffs);
    s.clamp();
    return s;
}

void TruncSeries::clamp() {
    long keep = static_cast<long>(N_) - offset_ + 1;
    if (keep < 0) keep = 0;
    if (static_cast<long>(c_.size()) > keep) c_.resize(static_cast<size_t>(keep));
}

BigRat TruncSeries::coef(int d) const {
    long i = static_cast<long>(d) - offset_;
    if (i < 0 || i >= static_cast<long>(c_.size())) return BigRat(0);
    return c_[static_cast<size_t>(i)];
}

bool TruncSeries::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

int TruncSeries::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return offset_ + static_cast<int>(i);
    return N_ + 1;
}

void TruncSeries::add(const TruncSeries& o) {
    int lo = std::min(offset_, o.offset_);
    int hi = std::min(N_, std::max(offset_ + static_cast<int>(c_.size()),
                                   o.offset_ + static_cast<int>(o.c_.size())) - 1);
    std::vector<BigRat> out;
    if (hi >= lo) {
        out.resize(static_cast<size_t>(hi - lo + 1));
        for (int d = lo; d <= hi; ++d) out[static_cast<size_t>(d - lo)] = coef(d) + o.coef(d);
    }
    offset_ = lo;
    c_ = std::move(out);
    clamp();
}

void TruncSeries::mul(const TruncSeries& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        offset_ += o.offset_;
        clamp();
        return;
    }
    int out_off = offset_ + o.offset_;
    long keep = static_cast<long>(N_) - out_off + 1;
    if (keep < 0) keep = 0;
    std::vector<BigRat> out(std::min<long>(keep, static_cast<long>(c_.size() + o.c_.size()) - 1));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size() && i + j < out.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            out[i + j] += c_[i] * o.c_[j];
        }
    }
    offset_ = out_off;
    c_ = std::move(out);
    clamp();
}

void TruncSeries::mul_scalar(const BigRat& s) {
    for (auto& v : c_) v *= s;
}

void TruncSeries::mul_one_minus(const BigRat& cc, int m) {
    // (sum c_i q^i) * (1 - cc q^m)
    long keep = static_cast<long>(N_) - offset_ + 1;
    if (keep < 0) keep = 0;
    std::vector<BigRat> out = c_;
    out.resize(std::min<long>(keep, static_cast<long>(c_.size()) + m));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        size_t t = i + static_cast<size_t>(m);
        if (t < out.size()) out[t] -= cc * c_[i];
    }
    c_ = std::move(out);
    clamp();
}

void TruncSeries::div_one_minus(const BigRat& cc, int m) {
    // multiply by sum_j cc^j q^(m j): b_i = c_i + cc * b_(i-m)
    long keep = static_cast<long>(N_) - offset_ + 1;
    if (keep < 0) keep = 0;
    std::vector<BigRat> out = c_;
    out.resize(static_cast<size_t>(keep));
    for (size_t i = static_cast<size_t>(m); i < out.size(); ++i) {
        BigRat prev = out[i - static_cast<size_t>(m)];
        if (!prev.is_zero()) out[i] += cc * prev;
    }
    c_ = std::move(out);
    clamp();
}

void TruncSeries::div_poly(const std::vector<BigRat>& a, int valuation_shift) {
    if (a.empty() || a[0].is_zero())
        throw Error("div_poly requires a unit constant term after the shift");
    offset_ -= valuation_shift;
    long keep = static_cast<long>(N_) - offset_ + 1;
    if (keep < 0) keep = 0;
    std::vector<BigRat> out(static_cast<size_t>(keep));
    BigRat inv0 = a[0].inv();
    for (size_t n = 0; n < out.size(); ++n) {
        BigRat acc = n < c_.size() ? c_[n] : BigRat(0);
        size_t jmax = std::min(n, a.size() - 1);
        for (size_t j = 1; j <= jmax; ++j) {
            if (a[j].is_zero() || out[n - j].is_zero()) continue;
            acc -= a[j] * out[n - j];
        }
        out[n] = acc * inv0;
    }
    c_ = std::move(out);
    clamp();
}

int TruncSeries::first_mismatch(const TruncSeries& x, const TruncSeries& y) {
    int N = std::min(x.N_, y.N_);
    int lo = std::min(x.offset_, y.offset_);
    for (int d = lo; d <= N; ++d)
        if (x.coef(d) != y.coef(d)) return d;
    return N + 1;
}

std::string TruncSeries::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (int d = offset_; d <= N_ && shown < max_terms; ++d) {
        BigRat v = coef(d);
        if (v.is_zero()) continue;
        if (shown) os << " + ";
        os << "(" << v.str() << ")q^" << d;
        ++shown;
    }
    if (!shown) os << "0";
    os << " + O(q^" << (N_ + 1) << ")";
    return os.str();
}

TruncSeries expand_factored(const FactoredQ& f, int N) {
    if (f.is_zero()) return TruncSeries::zero(N);
    if (!f.scalar().is_const())
        throw Error("series expansion requires resolved parameters (scalar " +
                    f.scalar().str() + ")");
    const QPoly& num = f.num();
    std::vector<BigRat> nc(static_cast<size_t>(num.degree()) + 1);
    for (int i = 0; i <= num.degree(); ++i) {
        const ParamRat& c = num.coeff(i);
        if (!c.is_const()) throw Error("series expansion requires resolved parameters");
        nc[static_cast<size_t>(i)] = c.const_value();
    }
    TruncSeries s = TruncSeries::from_coeffs(N, f.qpow(), std::move(nc));
    s.mul_scalar(f.scalar().const_value());
    for (const QPoly& d : f.den()) {
        // canonical factors have constant term 1
        if (!d.is_pure_rational())
            throw Error("series expansion requires resolved parameters");
        if (d.nonzero_count() == 2 && d.coeff(0).is_one()) {
            // binomial 1 - c q^m: geometric-series division
            int m = d.degree();
            s.div_one_minus(-d.coeff(m).const_value(), m);
        } else {
            std::vector<BigRat> dc(static_cast<size_t>(d.degree()) + 1);
            for (int i = 0; i <= d.degree(); ++i) dc[static_cast<size_t>(i)] = d.coeff(i).const_value();
            s.div_poly(dc, 0);
        }
    }
    return s;
}

QPoly product_truncate(const SeriesProductSpec& spec, int N) {
    if (N < 0) throw Error("product_truncate needs N >= 0");
    TruncSeries s = TruncSeries::one(N);
    for (const auto& f : spec.factors) {
        if (f.a <= 0)
            throw NonTruncatable("(q^" + std::to_string(f.a) + "; q^" + std::to_string(f.b) +
                                 ")_inf is not truncation-stable");
        if (f.b < 1) throw NonTruncatable("infinite product step must be >= 1");
        for (int rep = 0; rep < f.power; ++rep) {
            for (long m = f.a; m <= N; m += f.b) {
                if (f.denominator)
                    s.div_one_minus(BigRat(1), static_cast<int>(m));
                else
                    s.mul_one_minus(BigRat(1), static_cast<int>(m));
            }
        }
    }
    std::vector<ParamRat> coeffs(static_cast<size_t>(N) + 1);
    for (int d = 0; d <= N; ++d) coeffs[static_cast<size_t>(d)] = ParamRat(s.coef(d));
    return QPoly::from_coeffs(std::move(coeffs));
}

} // namespace qcong
