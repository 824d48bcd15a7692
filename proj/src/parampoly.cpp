#include "qcong/parampoly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "qcong/errors.hpp"

namespace qcong {

namespace {

// Graded lex with a > e, ascending.
inline bool term_less(int da1, int de1, int da2, int de2) {
    int t1 = da1 + de1, t2 = da2 + de2;
    if (t1 != t2) return t1 < t2;
    return da1 < da2;
}

} // namespace

void ParamPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& s, const Term& t) {
        return term_less(s.da, s.de, t.da, t.de);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().da == t.da && out.back().de == t.de) {
            out.back().c += t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

ParamPoly ParamPoly::constant(BigRat c) {
    ParamPoly p;
    if (!c.is_zero()) p.terms_.push_back({0, 0, std::move(c)});
    return p;
}

ParamPoly ParamPoly::monomial(BigRat c, int da, int de) {
    ParamPoly p;
    if (!c.is_zero()) p.terms_.push_back({da, de, std::move(c)});
    return p;
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].da == 0 && terms_[0].de == 0 && terms_[0].c.is_one();
}

BigRat ParamPoly::const_value() const {
    if (is_zero()) return BigRat(0);
    if (!is_const()) throw Error("ParamPoly::const_value on non-constant " + str());
    return terms_[0].c;
}

int ParamPoly::deg_a() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.da);
    return d;
}

int ParamPoly::deg_e() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.de);
    return d;
}

ParamPoly operator+(const ParamPoly& x, const ParamPoly& y) {
    ParamPoly r;
    r.terms_.reserve(x.terms_.size() + y.terms_.size());
    auto i = x.terms_.begin(), j = y.terms_.begin();
    while (i != x.terms_.end() && j != y.terms_.end()) {
        if (i->da == j->da && i->de == j->de) {
            BigRat c = i->c + j->c;
            if (!c.is_zero()) r.terms_.push_back({i->da, i->de, std::move(c)});
            ++i;
            ++j;
        } else if (term_less(i->da, i->de, j->da, j->de)) {
            r.terms_.push_back(*i++);
        } else {
            r.terms_.push_back(*j++);
        }
    }
    r.terms_.insert(r.terms_.end(), i, x.terms_.end());
    r.terms_.insert(r.terms_.end(), j, y.terms_.end());
    return r;
}

ParamPoly operator-(const ParamPoly& x, const ParamPoly& y) { return x + (-y); }

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    if (x.is_zero() || y.is_zero()) return ParamPoly();
    // Fast path: monomial scaling keeps the sorted order.
    if (x.terms_.size() == 1 || y.terms_.size() == 1) {
        const ParamPoly& mono = x.terms_.size() == 1 ? x : y;
        const ParamPoly& poly = x.terms_.size() == 1 ? y : x;
        const auto& m = mono.terms_[0];
        ParamPoly r;
        r.terms_.reserve(poly.terms_.size());
        for (const auto& t : poly.terms_)
            r.terms_.push_back({t.da + m.da, t.de + m.de, t.c * m.c});
        return r;
    }
    std::map<std::pair<int, int>, BigRat> acc;
    for (const auto& s : x.terms_)
        for (const auto& t : y.terms_) {
            auto key = std::make_pair(s.da + t.da, s.de + t.de);
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, s.c * t.c);
            else
                it->second += s.c * t.c;
        }
    ParamPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [key, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({key.first, key.second, std::move(c)});
    r.normalize();
    return r;
}

bool operator==(const ParamPoly& x, const ParamPoly& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (size_t i = 0; i < x.terms_.size(); ++i)
        if (x.terms_[i].da != y.terms_[i].da || x.terms_[i].de != y.terms_[i].de ||
            x.terms_[i].c != y.terms_[i].c)
            return false;
    return true;
}

ParamPoly ParamPoly::scaled(const BigRat& c) const {
    if (c.is_zero()) return ParamPoly();
    ParamPoly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

ParamPoly ParamPoly::divexact(const ParamPoly& x, const ParamPoly& y) {
    if (y.is_zero()) throw ZeroDenominator("ParamPoly division by zero");
    if (x.is_zero()) return ParamPoly();
    if (y.is_const()) return x.scaled(y.const_value().inv());
    // Leading-term cancellation in the monomial order; fails iff y does not
    // divide x (single divisor over a field).
    ParamPoly rem = x;
    std::vector<Term> quot;
    const Term& ylt = y.leading();
    while (!rem.is_zero()) {
        const Term& rlt = rem.leading();
        if (rlt.da < ylt.da || rlt.de < ylt.de)
            throw NotDivisible("(" + y.str() + ") does not divide (" + x.str() + ")");
        Term t{rlt.da - ylt.da, rlt.de - ylt.de, rlt.c / ylt.c};
        rem = rem - y * monomial(t.c, t.da, t.de);
        quot.push_back(std::move(t));
    }
    ParamPoly q;
    q.terms_ = std::move(quot);
    q.normalize();
    return q;
}

BigRat ParamPoly::content() const {
    if (is_zero()) return BigRat(0);
    // gcd of numerators over lcm of denominators, signed by the leading term.
    BigRat g(0), l(1);
    for (const auto& t : terms_) {
        g = BigRat::int_gcd(g, BigRat::from_mpz(t.c.num_ref()));
        l = BigRat::int_lcm(l, BigRat::from_mpz(t.c.den_ref()));
    }
    BigRat c = g.abs() / l;
    if (leading().c.is_negative()) c = -c;
    return c;
}

ParamPoly ParamPoly::primitive_part() const {
    if (is_zero()) return ParamPoly();
    return scaled(content().inv());
}

BigRat ParamPoly::eval(const BigRat& a0, const BigRat& e0) const {
    BigRat acc(0);
    for (const auto& t : terms_) acc += t.c * a0.pow(t.da) * e0.pow(t.de);
    return acc;
}

std::string ParamPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& t = *it;
        if (!first) os << " + ";
        first = false;
        bool unit = t.c.is_one() && (t.da || t.de);
        if (!unit) os << t.c.str();
        if (t.da) os << (unit ? "" : "*") << "a" << (t.da > 1 ? "^" + std::to_string(t.da) : "");
        if (t.de) os << ((unit && !t.da) ? "" : "*") << "e"
                     << (t.de > 1 ? "^" + std::to_string(t.de) : "");
        unit = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// GCD: subresultant PRS on the recursive representation.
// ---------------------------------------------------------------------------

namespace {

// Dense univariate polynomial in e over Q; coefficient vector, highest last.
using EPoly = std::vector<BigRat>;

void etrim(EPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool ezero(const EPoly& p) { return p.empty(); }
int edeg(const EPoly& p) { return static_cast<int>(p.size()) - 1; }

EPoly eadd(const EPoly& x, const EPoly& y) {
    EPoly r(std::max(x.size(), y.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < x.size()) r[i] += x[i];
        if (i < y.size()) r[i] += y[i];
    }
    etrim(r);
    return r;
}

EPoly eneg(EPoly x) {
    for (auto& c : x) c = -c;
    return x;
}

EPoly emul(const EPoly& x, const EPoly& y) {
    if (ezero(x) || ezero(y)) return {};
    EPoly r(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    }
    etrim(r);
    return r;
}

EPoly escale(EPoly x, const BigRat& c) {
    for (auto& v : x) v *= c;
    etrim(x);
    return x;
}

// Exact division; the callers only divide when divisibility is guaranteed.
EPoly edivexact(const EPoly& x, const EPoly& y) {
    if (ezero(y)) throw ZeroDenominator("EPoly division by zero");
    if (ezero(x)) return {};
    EPoly rem = x, q(x.size() - y.size() + 1);
    while (!ezero(rem) && edeg(rem) >= edeg(y)) {
        BigRat c = rem.back() / y.back();
        int shift = edeg(rem) - edeg(y);
        q[shift] = c;
        for (size_t i = 0; i < y.size(); ++i) rem[i + shift] -= c * y[i];
        etrim(rem);
    }
    if (!ezero(rem)) throw NotDivisible("EPoly divexact has remainder");
    etrim(q);
    return q;
}

// Monic Euclid over Q, then integer-primitive positive-leading normalization.
EPoly egcd(EPoly x, EPoly y) {
    etrim(x);
    etrim(y);
    while (!ezero(y)) {
        // remainder of x by y
        EPoly rem = x;
        while (!ezero(rem) && edeg(rem) >= edeg(y)) {
            BigRat c = rem.back() / y.back();
            int shift = edeg(rem) - edeg(y);
            for (size_t i = 0; i < y.size(); ++i) rem[i + shift] -= c * y[i];
            etrim(rem);
        }
        x = std::move(y);
        y = std::move(rem);
    }
    if (ezero(x)) return x;
    // normalize: integer primitive, positive leading
    BigRat g(0), l(1);
    for (const auto& c : x) {
        if (c.is_zero()) continue;
        g = BigRat::int_gcd(g, BigRat::from_mpz(c.num_ref()));
        l = BigRat::int_lcm(l, BigRat::from_mpz(c.den_ref()));
    }
    BigRat scale = l / g.abs();
    if (x.back().is_negative()) scale = -scale;
    return escale(std::move(x), scale);
}

// Recursive view: polynomial in a whose coefficients are EPolys.
using APoly = std::vector<EPoly>;

void atrim(APoly& p) {
    while (!p.empty() && ezero(p.back())) p.pop_back();
}
int adeg(const APoly& p) { return static_cast<int>(p.size()) - 1; }

APoly to_recursive(const ParamPoly& p) {
    APoly r(static_cast<size_t>(p.deg_a()) + 1);
    for (const auto& t : p.terms()) {
        auto& coef = r[static_cast<size_t>(t.da)];
        if (edeg(coef) < t.de) coef.resize(static_cast<size_t>(t.de) + 1);
        coef[static_cast<size_t>(t.de)] = t.c;
    }
    for (auto& coef : r) etrim(coef);
    atrim(r);
    return r;
}

ParamPoly from_recursive(const APoly& p) {
    ParamPoly out;
    for (size_t da = 0; da < p.size(); ++da)
        for (size_t de = 0; de < p[da].size(); ++de)
            if (!p[da][de].is_zero())
                out = out + ParamPoly::monomial(p[da][de], static_cast<int>(da), static_cast<int>(de));
    return out;
}

// Content of an APoly in Q[e].
EPoly acontent(const APoly& p) {
    EPoly g;
    for (const auto& c : p) {
        if (ezero(c)) continue;
        g = egcd(g, c);
        if (edeg(g) == 0) break;
    }
    return g;
}

APoly adiv_coeffwise(const APoly& p, const EPoly& c) {
    APoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        if (!ezero(p[i])) r[i] = edivexact(p[i], c);
    return r;
}

APoly ascale_coeffwise(const APoly& p, const EPoly& c) {
    APoly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = emul(p[i], c);
    return r;
}

APoly asub(const APoly& x, const APoly& y) {
    APoly r(std::max(x.size(), y.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        EPoly xi = i < x.size() ? x[i] : EPoly{};
        EPoly yi = i < y.size() ? y[i] : EPoly{};
        r[i] = eadd(xi, eneg(std::move(yi)));
    }
    atrim(r);
    return r;
}

// Pseudo-remainder: lc(y)^(deg x - deg y + 1) * x = q*y + r with deg r < deg y.
APoly aprem(APoly x, const APoly& y) {
    int dy = adeg(y);
    const EPoly& ly = y.back();
    int steps_needed = adeg(x) - dy + 1;
    int steps = 0;
    while (adeg(x) >= dy) {
        int shift = adeg(x) - dy;
        EPoly lx = x.back();
        // x = ly*x - lx * a^shift * y
        x = ascale_coeffwise(x, ly);
        APoly sub(static_cast<size_t>(shift) + y.size());
        for (size_t i = 0; i < y.size(); ++i) sub[i + static_cast<size_t>(shift)] = emul(y[i], lx);
        x = asub(x, sub);
        if (adeg(x) == dy + shift) // leading terms must cancel
            throw Error("pseudo-remainder failed to reduce degree");
        ++steps;
    }
    // Degree can drop by more than one per step; pad the power of lc(y) so the
    // result is exactly lc(y)^(delta+1) * x mod y, as the subresultant
    // divisions require.
    for (; steps < steps_needed; ++steps) x = ascale_coeffwise(x, ly);
    return x;
}

} // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& x, const ParamPoly& y) {
    if (x.is_zero() && y.is_zero()) throw Error("gcd(0, 0) undefined");
    if (x.is_zero()) return y.primitive_part();
    if (y.is_zero()) return x.primitive_part();
    if (x.is_const() || y.is_const()) return constant(1);

    if (x.deg_a() == 0 && y.deg_a() == 0) {
        // univariate in e
        APoly rx = to_recursive(x), ry = to_recursive(y);
        EPoly g = egcd(rx[0], ry[0]);
        APoly res{g};
        return from_recursive(res);
    }

    // One input free of a: gcd is gcd(it, content_a of the other) in Q[e].
    if (x.deg_a() == 0 || y.deg_a() == 0) {
        const ParamPoly& uni = x.deg_a() == 0 ? x : y;
        const ParamPoly& biv = x.deg_a() == 0 ? y : x;
        EPoly cu = to_recursive(uni)[0];
        EPoly cb = acontent(to_recursive(biv));
        APoly res{egcd(cu, cb)};
        return from_recursive(res);
    }

    APoly A = to_recursive(x), B = to_recursive(y);
    EPoly ca = acontent(A), cb = acontent(B);
    A = adiv_coeffwise(A, ca);
    B = adiv_coeffwise(B, cb);
    EPoly cg = egcd(ca, cb);
    if (adeg(A) < adeg(B)) std::swap(A, B);

    // Subresultant PRS.
    EPoly g{BigRat(1)}, h{BigRat(1)};
    while (true) {
        int delta = adeg(A) - adeg(B);
        APoly R = aprem(A, B);
        if (R.empty()) break;
        if (adeg(R) == 0) {
            // gcd in a is trivial; result is the e-content gcd
            APoly res{cg};
            ParamPoly out = from_recursive(res);
            return out.primitive_part();
        }
        // divisor g * h^delta
        EPoly div = g;
        for (int i = 0; i < delta; ++i) div = emul(div, h);
        A = std::move(B);
        B = adiv_coeffwise(R, div);
        g = A.back();
        // h = g^delta * h^(1-delta)
        if (delta == 0) {
            // h unchanged
        } else {
            EPoly gp{BigRat(1)};
            for (int i = 0; i < delta; ++i) gp = emul(gp, g);
            if (delta == 1) {
                h = gp;
            } else {
                EPoly hp{BigRat(1)};
                for (int i = 0; i < delta - 1; ++i) hp = emul(hp, h);
                h = edivexact(gp, hp);
            }
        }
    }
    // primitive part of B in a, times the content gcd
    EPoly cB = acontent(B);
    B = adiv_coeffwise(B, cB);
    B = ascale_coeffwise(B, cg);
    ParamPoly out = from_recursive(B);
    return out.primitive_part();
}

} // namespace qcong
