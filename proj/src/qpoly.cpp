#include "qcong/qpoly.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

namespace {
const ParamRat kZero{};
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly QPoly::constant(ParamRat c) {
    QPoly p;
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
}

QPoly QPoly::monomial(ParamRat c, int deg) {
    QPoly p;
    if (!c.is_zero()) {
        p.coeffs_.resize(static_cast<size_t>(deg) + 1);
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

QPoly QPoly::one_minus(ParamRat c, int m) {
    QPoly p;
    if (m == 0) return constant(ParamRat(1L) - c);
    p.coeffs_.resize(static_cast<size_t>(m) + 1);
    p.coeffs_[0] = ParamRat(1L);
    p.coeffs_.back() = -c;
    p.trim(); // c could be zero
    return p;
}

QPoly QPoly::from_coeffs(std::vector<ParamRat> coeffs) {
    QPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

const ParamRat& QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

int QPoly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

bool QPoly::is_pure_rational() const {
    for (const auto& c : coeffs_)
        if (!c.is_const()) return false;
    return true;
}

int QPoly::nonzero_count() const {
    int n = 0;
    for (const auto& c : coeffs_)
        if (!c.is_zero()) ++n;
    return n;
}

QPoly operator+(const QPoly& x, const QPoly& y) {
    QPoly r;
    r.coeffs_.resize(std::max(x.coeffs_.size(), y.coeffs_.size()));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < x.coeffs_.size() && i < y.coeffs_.size())
            r.coeffs_[i] = x.coeffs_[i] + y.coeffs_[i];
        else if (i < x.coeffs_.size())
            r.coeffs_[i] = x.coeffs_[i];
        else
            r.coeffs_[i] = y.coeffs_[i];
    }
    r.trim();
    return r;
}

QPoly operator-(const QPoly& x, const QPoly& y) { return x + (-y); }

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_)
        if (!c.is_zero()) c = -c;
    return r;
}

QPoly operator*(const QPoly& x, const QPoly& y) {
    if (x.is_zero() || y.is_zero()) return QPoly();
    // Iterate the sparser side's nonzero coefficients on the outside; the
    // Pochhammer factors this engine lives on are two-term binomials.
    const QPoly& outer = x.nonzero_count() <= y.nonzero_count() ? x : y;
    const QPoly& inner = x.nonzero_count() <= y.nonzero_count() ? y : x;
    QPoly r;
    r.coeffs_.resize(x.coeffs_.size() + y.coeffs_.size() - 1);
    for (size_t i = 0; i < outer.coeffs_.size(); ++i) {
        const ParamRat& ci = outer.coeffs_[i];
        if (ci.is_zero()) continue;
        for (size_t j = 0; j < inner.coeffs_.size(); ++j) {
            const ParamRat& cj = inner.coeffs_[j];
            if (cj.is_zero()) continue;
            r.coeffs_[i + j] = r.coeffs_[i + j] + ci * cj;
        }
    }
    r.trim();
    return r;
}

QPoly QPoly::scaled(const ParamRat& c) const {
    if (c.is_zero()) return QPoly();
    QPoly r = *this;
    for (auto& v : r.coeffs_)
        if (!v.is_zero()) v = v * c;
    return r;
}

QPoly QPoly::shifted(int m) const {
    if (is_zero() || m == 0) return *this;
    QPoly r;
    r.coeffs_.resize(coeffs_.size() + static_cast<size_t>(m));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + static_cast<size_t>(m)] = coeffs_[i];
    return r;
}

QPoly QPoly::unshifted(int m) const {
    if (m == 0) return *this;
    if (valuation() < m) throw NotDivisible("q^" + std::to_string(m) + " does not divide");
    QPoly r;
    r.coeffs_.assign(coeffs_.begin() + m, coeffs_.end());
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    if (leading().is_one()) return *this;
    return scaled(leading().inv());
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return QPoly();
    QPoly r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = coeffs_[i] * ParamRat(static_cast<long>(i));
    r.trim();
    return r;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& x, const QPoly& y) {
    if (y.is_zero()) throw DivideByZeroPoly();
    if (x.degree() < y.degree()) return {QPoly(), x};
    ParamRat ylead_inv = y.leading().inv();
    QPoly rem = x;
    QPoly quot;
    quot.coeffs_.resize(static_cast<size_t>(x.degree() - y.degree()) + 1);
    int ynz = y.nonzero_count();
    (void)ynz;
    while (!rem.is_zero() && rem.degree() >= y.degree()) {
        int shift = rem.degree() - y.degree();
        ParamRat c = rem.leading() * ylead_inv;
        quot.coeffs_[static_cast<size_t>(shift)] = c;
        // rem -= c * q^shift * y, written in place
        rem.coeffs_.pop_back(); // leading cancels by construction
        for (int i = 0; i < y.degree(); ++i) {
            const ParamRat& yc = y.coeffs_[static_cast<size_t>(i)];
            if (yc.is_zero()) continue;
            auto& rc = rem.coeffs_[static_cast<size_t>(i + shift)];
            rc = rc - c * yc;
        }
        rem.trim();
    }
    quot.trim();
    return {std::move(quot), std::move(rem)};
}

QPoly QPoly::divexact(const QPoly& x, const QPoly& y) {
    auto [q, r] = divrem(x, y);
    if (!r.is_zero()) throw NotDivisible("QPoly divexact has remainder");
    return q;
}

bool QPoly::try_divexact(const QPoly& x, const QPoly& y, QPoly* quot) {
    auto [q, r] = divrem(x, y);
    if (!r.is_zero()) return false;
    if (quot) *quot = std::move(q);
    return true;
}

namespace {

// gcd over Q[q] for pure-rational inputs, via monic Euclid on BigRat vectors.
std::vector<BigRat> to_rational_vec(const QPoly& p) {
    std::vector<BigRat> v(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i)] = p.coeff(i).const_value();
    return v;
}

void rtrim(std::vector<BigRat>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

std::vector<BigRat> rational_gcd(std::vector<BigRat> x, std::vector<BigRat> y) {
    rtrim(x);
    rtrim(y);
    while (!y.empty()) {
        // monic-normalize y, then reduce x mod y
        BigRat inv = y.back().inv();
        for (auto& c : y) c *= inv;
        while (x.size() >= y.size()) {
            BigRat c = x.back();
            size_t shift = x.size() - y.size();
            if (!c.is_zero())
                for (size_t i = 0; i < y.size(); ++i) x[i + shift] -= c * y[i];
            x.pop_back();
            rtrim(x);
            if (x.empty()) break;
        }
        std::swap(x, y);
    }
    rtrim(x);
    if (!x.empty()) {
        BigRat inv = x.back().inv();
        for (auto& c : x) c *= inv;
    }
    return x;
}

QPoly from_rational_vec(const std::vector<BigRat>& v) {
    std::vector<ParamRat> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = ParamRat(v[i]);
    return QPoly::from_coeffs(std::move(c));
}

// Specialization points for the parametric-gcd shortcut; generic small
// rationals, nothing special about them.
const BigRat kA0(3, 2), kE0(5, 7);
const BigRat kA1(-7, 3), kE1(11, 4);

bool specialize(const QPoly& p, const BigRat& a0, const BigRat& e0, std::vector<BigRat>* out) {
    std::vector<BigRat> v(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        const ParamRat& c = p.coeff(i);
        if (c.den().eval(a0, e0).is_zero()) return false;
        v[static_cast<size_t>(i)] = c.eval(a0, e0);
    }
    *out = std::move(v);
    return true;
}

} // namespace

QPoly QPoly::gcd(const QPoly& x, const QPoly& y) {
    if (x.is_zero() && y.is_zero()) throw Error("QPoly gcd(0, 0) undefined");
    if (x.is_zero()) return y.monic();
    if (y.is_zero()) return x.monic();
    if (x.is_const() || y.is_const()) return constant(1L);

    if (x.is_pure_rational() && y.is_pure_rational())
        return from_rational_vec(rational_gcd(to_rational_vec(x), to_rational_vec(y)));

    // Parametric inputs: a trivial gcd at a specialization point (with both
    // leading coefficients surviving) certifies a trivial gcd generically,
    // since specialization can only grow the gcd degree.
    for (const auto& [a0, e0] : {std::make_pair(kA0, kE0), std::make_pair(kA1, kE1)}) {
        std::vector<BigRat> xs, ys;
        if (!specialize(x, a0, e0, &xs) || !specialize(y, a0, e0, &ys)) continue;
        if (xs.empty() || ys.empty() || xs.back().is_zero() || ys.back().is_zero()) continue;
        if (rational_gcd(std::move(xs), std::move(ys)).size() == 1) return constant(1L);
        break;
    }

    // Full Euclid over Q(a, e); inputs reaching this path are small.
    QPoly u = x, v = y;
    while (!v.is_zero()) {
        auto [q, r] = divrem(u, v);
        (void)q;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

ParamRat QPoly::eval_coef(const ParamRat& q0) const {
    ParamRat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
    return acc;
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const ParamRat& c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << "(" << c.str() << ")*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::size_t QPoly::hash() const {
    // FNV-1a over a stable textual expansion of the coefficients.
    std::size_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    for (int i = 0; i <= degree(); ++i) {
        mix(std::to_string(i));
        mix(":");
        mix(coeff(i).str());
        mix(";");
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Cyclotomic polynomials and q-integers.
// ---------------------------------------------------------------------------

namespace {
std::mutex cyclo_mutex;
std::map<int, QPoly> cyclo_cache;
} // namespace

QPoly cyclotomic(int n) {
    if (n < 1) throw Error("cyclotomic(n) needs n >= 1");
    {
        std::lock_guard<std::mutex> lock(cyclo_mutex);
        auto it = cyclo_cache.find(n);
        if (it != cyclo_cache.end()) return it->second;
    }
    // Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d
    QPoly result;
    if (n == 1) {
        result = QPoly::from_coeffs({ParamRat(-1L), ParamRat(1L)});
    } else {
        QPoly num = QPoly::one_minus(ParamRat(1L), n) * QPoly::constant(ParamRat(-1L)); // q^n - 1
        QPoly den = QPoly::constant(1L);
        for (int d = 1; d < n; ++d)
            if (n % d == 0) den = den * cyclotomic(d);
        result = QPoly::divexact(num, den);
    }
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto [it, inserted] = cyclo_cache.emplace(n, std::move(result));
    (void)inserted;
    return it->second;
}

QPoly qint(int n) {
    if (n < 1) throw Error("qint(n) needs n >= 1");
    std::vector<ParamRat> c(static_cast<size_t>(n), ParamRat(1L));
    return QPoly::from_coeffs(std::move(c));
}

// ---------------------------------------------------------------------------
// RatQ
// ---------------------------------------------------------------------------

RatQ RatQ::normalized(QPoly num, QPoly den) {
    if (den.is_zero()) throw ZeroDenominator("RatQ with zero denominator");
    RatQ r;
    if (num.is_zero()) return r;
    QPoly g = QPoly::gcd(num, den);
    if (g.degree() > 0) {
        num = QPoly::divexact(num, g);
        den = QPoly::divexact(den, g);
    }
    ParamRat lead_inv = den.leading().inv();
    r.num_ = num.scaled(lead_inv);
    r.den_ = den.scaled(lead_inv);
    return r;
}

RatQ RatQ::of(QPoly p) {
    RatQ r;
    r.num_ = std::move(p);
    return r;
}

RatQ RatQ::reduced_unchecked(QPoly num, QPoly den) {
    if (den.is_zero()) throw ZeroDenominator("RatQ with zero denominator");
    RatQ r;
    if (num.is_zero()) return r;
    ParamRat lead_inv = den.leading().inv();
    r.num_ = num.scaled(lead_inv);
    r.den_ = den.scaled(lead_inv);
    return r;
}

RatQ operator+(const RatQ& x, const RatQ& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    return RatQ::normalized(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatQ operator-(const RatQ& x, const RatQ& y) { return x + (-y); }

RatQ operator*(const RatQ& x, const RatQ& y) {
    if (x.is_zero() || y.is_zero()) return RatQ();
    return RatQ::normalized(x.num_ * y.num_, x.den_ * y.den_);
}

RatQ RatQ::operator-() const {
    RatQ r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatQ::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Modulus
// ---------------------------------------------------------------------------

namespace {
ParamRat param_a() { return ParamRat(ParamPoly::var_a()); }
} // namespace

std::vector<QPoly> Modulus::expanded_factors(const Assignment& asg) const {
    std::vector<QPoly> out;
    for (const auto& f : factors_) {
        long arg = f.arg.eval_int(asg);
        QPoly base;
        switch (f.kind) {
            case Kind::Cyclotomic:
                base = cyclotomic(static_cast<int>(arg));
                break;
            case Kind::QInt: {
                // expose the cyclotomic structure of [n]
                base = QPoly::constant(1L);
                for (int d = 2; d <= arg; ++d)
                    if (arg % d == 0) base = base * cyclotomic(d);
                break;
            }
            case Kind::OneMinusAQn:
                base = QPoly::one_minus(param_a(), static_cast<int>(arg));
                break;
            case Kind::AMinusQn: {
                std::vector<ParamRat> c(static_cast<size_t>(arg) + 1);
                c[0] = param_a();
                c.back() = ParamRat(-1L);
                base = QPoly::from_coeffs(std::move(c));
                break;
            }
        }
        for (int i = 0; i < f.mult; ++i) out.push_back(base);
    }
    return out;
}

QPoly Modulus::expand(const Assignment& asg) const {
    QPoly prod = QPoly::constant(1L);
    for (const auto& f : expanded_factors(asg)) prod = prod * f;
    if (prod.is_zero()) throw Error("modulus expanded to zero");
    return prod;
}

std::string Modulus::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors_) {
        if (!first) os << "*";
        first = false;
        switch (f.kind) {
            case Kind::Cyclotomic: os << "Phi(" << f.arg.str() << ")"; break;
            case Kind::QInt: os << "[" << f.arg.str() << "]"; break;
            case Kind::OneMinusAQn: os << "(1-a*q^" << f.arg.str() << ")"; break;
            case Kind::AMinusQn: os << "(a-q^" << f.arg.str() << ")"; break;
        }
        if (f.mult != 1) os << "^" << f.mult;
    }
    return os.str();
}

} // namespace qcong
