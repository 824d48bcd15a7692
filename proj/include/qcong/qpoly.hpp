#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qcong/expr.hpp"
#include "qcong/paramrat.hpp"

namespace qcong {

// Dense polynomial in q over the coefficient field Q(a, e).
// coeffs_[i] is the coefficient of q^i; the highest entry is nonzero.
class QPoly {
public:
    QPoly() = default; // zero
    static QPoly constant(ParamRat c);
    static QPoly constant(long c) { return constant(ParamRat(c)); }
    static QPoly monomial(ParamRat c, int deg);
    static QPoly var_q() { return monomial(ParamRat(1L), 1); }
    // 1 - c * q^m (m >= 0); the workhorse factor shape of every q-shifted factorial.
    static QPoly one_minus(ParamRat c, int m);
    static QPoly from_coeffs(std::vector<ParamRat> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_const() const { return coeffs_.size() <= 1; }
    const ParamRat& coeff(int i) const;
    const ParamRat& leading() const { return coeffs_.back(); } // requires nonzero
    const std::vector<ParamRat>& coeffs() const { return coeffs_; }
    // Lowest exponent with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;
    bool is_pure_rational() const; // every coefficient constant
    int nonzero_count() const;

    friend QPoly operator+(const QPoly& x, const QPoly& y);
    friend QPoly operator-(const QPoly& x, const QPoly& y);
    friend QPoly operator*(const QPoly& x, const QPoly& y);
    QPoly operator-() const;
    friend bool operator==(const QPoly& x, const QPoly& y) { return x.coeffs_ == y.coeffs_; }
    friend bool operator!=(const QPoly& x, const QPoly& y) { return !(x == y); }

    QPoly scaled(const ParamRat& c) const;
    QPoly shifted(int m) const; // * q^m, m >= 0
    QPoly monic() const;        // divided by the leading coefficient
    QPoly derivative() const;

    // Exact division by q^m; requires valuation() >= m.
    QPoly unshifted(int m) const;

    // Division with remainder over the field: x = quot*y + rem, deg rem < deg y.
    // Throws DivideByZeroPoly when y = 0.
    static std::pair<QPoly, QPoly> divrem(const QPoly& x, const QPoly& y);
    // Exact quotient; throws NotDivisible.
    static QPoly divexact(const QPoly& x, const QPoly& y);
    // True iff y divides x; on success *quot receives the quotient.
    static bool try_divexact(const QPoly& x, const QPoly& y, QPoly* quot);

    // Monic gcd over Q(a, e). gcd(x, 0) = monic x.
    static QPoly gcd(const QPoly& x, const QPoly& y);

    ParamRat eval_coef(const ParamRat& q0) const; // symbolic Horner (q0 in Q)

    std::string str() const;
    std::size_t hash() const;

private:
    std::vector<ParamRat> coeffs_;
    void trim();
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

// Cyclotomic polynomial Phi_n(q), monic, integer coefficients, degree phi(n).
// Memoized globally; safe for concurrent use.
QPoly cyclotomic(int n);

// q-integer [n] = 1 + q + ... + q^(n-1), n >= 1.
QPoly qint(int n);

// Reduced rational function in q: gcd(num, den) = 1 over Q(a, e), den monic.
class RatQ {
public:
    RatQ() : num_(), den_(QPoly::constant(1L)) {} // zero
    static RatQ normalized(QPoly num, QPoly den); // throws ZeroDenominator
    static RatQ of(QPoly p);
    // Caller guarantees gcd(num, den) = 1; only monic normalization applied.
    static RatQ reduced_unchecked(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatQ operator+(const RatQ& x, const RatQ& y);
    friend RatQ operator-(const RatQ& x, const RatQ& y);
    friend RatQ operator*(const RatQ& x, const RatQ& y);
    RatQ operator-() const;
    friend bool operator==(const RatQ& x, const RatQ& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const RatQ& x, const RatQ& y) { return !(x == y); }

    std::string str() const;

private:
    QPoly num_, den_;
};

// A modulus as a product of named factors. Sizes may stay symbolic until
// expansion (e.g. Phi(n)^3 with n from the assignment).
class Modulus {
public:
    enum class Kind { Cyclotomic, QInt, OneMinusAQn, AMinusQn };
    struct Factor {
        Kind kind = Kind::Cyclotomic;
        // Cyclotomic/QInt order, or the exponent n of q in the parametric
        // factors. Either a concrete value or a symbolic expression.
        Expr arg;
        int mult = 1;
    };

    Modulus() = default;
    explicit Modulus(std::vector<Factor> f) : factors_(std::move(f)) {}
    const std::vector<Factor>& factors() const { return factors_; }
    void add(Factor f) { factors_.push_back(std::move(f)); }
    bool empty() const { return factors_.empty(); }

    // Expanded product. QInt(n) expands as prod_{d | n, d > 1} Phi_d to expose
    // the cyclotomic structure. Throws UnresolvedSymbol.
    QPoly expand(const Assignment& asg) const;

    // Same product with every factor listed separately (for diagnostics).
    std::vector<QPoly> expanded_factors(const Assignment& asg) const;

    std::string str() const;

private:
    std::vector<Factor> factors_;
};

} // namespace qcong
