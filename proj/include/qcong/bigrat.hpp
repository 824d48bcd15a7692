#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "qcong/errors.hpp"

namespace qcong {

// Arbitrary-precision rational in canonical form:
// gcd(|num|, den) = 1, den >= 1, zero stored as 0/1.
class BigRat {
public:
    BigRat() { mpq_init(v_); }
    BigRat(long n) { // NOLINT(google-explicit-constructor) — rationals embed integers
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    BigRat(long num, long den);
    explicit BigRat(const std::string& s); // "num", "num/den", decimal digits only

    BigRat(const BigRat& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRat(BigRat&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRat& operator=(const BigRat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRat& operator=(BigRat&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRat() { mpq_clear(v_); }

    friend BigRat operator+(const BigRat& x, const BigRat& y) {
        BigRat r;
        mpq_add(r.v_, x.v_, y.v_);
        return r;
    }
    friend BigRat operator-(const BigRat& x, const BigRat& y) {
        BigRat r;
        mpq_sub(r.v_, x.v_, y.v_);
        return r;
    }
    friend BigRat operator*(const BigRat& x, const BigRat& y) {
        BigRat r;
        mpq_mul(r.v_, x.v_, y.v_);
        return r;
    }
    friend BigRat operator/(const BigRat& x, const BigRat& y) {
        if (y.is_zero()) throw ZeroDenominator("BigRat division by zero");
        BigRat r;
        mpq_div(r.v_, x.v_, y.v_);
        return r;
    }
    BigRat operator-() const {
        BigRat r;
        mpq_neg(r.v_, v_);
        return r;
    }
    BigRat& operator+=(const BigRat& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    BigRat& operator-=(const BigRat& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    BigRat& operator*=(const BigRat& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw ZeroDenominator("BigRat division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const BigRat& x, const BigRat& y) { return mpq_equal(x.v_, y.v_) != 0; }
    friend bool operator!=(const BigRat& x, const BigRat& y) { return !(x == y); }
    friend bool operator<(const BigRat& x, const BigRat& y) { return mpq_cmp(x.v_, y.v_) < 0; }
    friend bool operator<=(const BigRat& x, const BigRat& y) { return mpq_cmp(x.v_, y.v_) <= 0; }
    friend bool operator>(const BigRat& x, const BigRat& y) { return mpq_cmp(x.v_, y.v_) > 0; }
    friend bool operator>=(const BigRat& x, const BigRat& y) { return mpq_cmp(x.v_, y.v_) >= 0; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
    bool is_negative() const { return mpq_sgn(v_) < 0; }
    int sign() const { return mpq_sgn(v_); }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    BigRat abs() const {
        BigRat r;
        mpq_abs(r.v_, v_);
        return r;
    }
    BigRat inv() const {
        if (is_zero()) throw ZeroDenominator("inverse of zero");
        BigRat r;
        mpq_inv(r.v_, v_);
        return r;
    }
    // x^e, with negative e allowed for nonzero x.
    BigRat pow(long e) const;

    // Requires is_integer() and fit in long.
    long to_long() const;
    double to_double() const { return mpq_get_d(v_); }

    std::string str() const;

    mpq_srcptr raw() const { return v_; }
    mpz_srcptr num_ref() const { return mpq_numref(v_); }
    mpz_srcptr den_ref() const { return mpq_denref(v_); }

    static BigRat from_mpz(mpz_srcptr z) {
        BigRat r;
        mpq_set_z(r.v_, z);
        return r;
    }

    // Integer gcd/lcm helpers used for polynomial content extraction.
    static BigRat int_gcd(const BigRat& x, const BigRat& y); // gcd of integers
    static BigRat int_lcm(const BigRat& x, const BigRat& y);

    std::size_t hash() const;

private:
    mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& x);

} // namespace qcong
