#pragma once

#include <mpfr.h>

#include <string>

#include "qcong/bigrat.hpp"
#include "qcong/qpoly.hpp"

namespace qcong {

// High-precision real backed by MPFR. Default 256 bits covers the 50-digit
// oracles with headroom.
class Mpf {
public:
    static constexpr mpfr_prec_t kPrec = 256;

    Mpf() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    Mpf(long n) : Mpf() { mpfr_set_si(v_, n, MPFR_RNDN); } // NOLINT
    explicit Mpf(const BigRat& r) : Mpf() { mpfr_set_q(v_, r.raw(), MPFR_RNDN); }
    Mpf(const Mpf& o) : Mpf() { mpfr_set(v_, o.v_, MPFR_RNDN); }
    Mpf(Mpf&& o) noexcept : Mpf() { mpfr_swap(v_, o.v_); }
    Mpf& operator=(const Mpf& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Mpf& operator=(Mpf&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpf() { mpfr_clear(v_); }

    friend Mpf operator+(const Mpf& x, const Mpf& y) { Mpf r; mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN); return r; }
    friend Mpf operator-(const Mpf& x, const Mpf& y) { Mpf r; mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN); return r; }
    friend Mpf operator*(const Mpf& x, const Mpf& y) { Mpf r; mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN); return r; }
    friend Mpf operator/(const Mpf& x, const Mpf& y) { Mpf r; mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN); return r; }
    Mpf operator-() const { Mpf r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    Mpf& operator+=(const Mpf& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Mpf& operator-=(const Mpf& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Mpf& operator*=(const Mpf& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    Mpf abs() const { Mpf r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    Mpf sqrt() const { Mpf r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    Mpf pow_si(long e) const { Mpf r; mpfr_pow_si(r.v_, v_, e, MPFR_RNDN); return r; }
    bool less_than(const Mpf& o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool is_zero() const { return mpfr_zero_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    static Mpf pi() { Mpf r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Mpf cos(const Mpf& x) { Mpf r; mpfr_cos(r.v_, x.v_, MPFR_RNDN); return r; }
    static Mpf sin(const Mpf& x) { Mpf r; mpfr_sin(r.v_, x.v_, MPFR_RNDN); return r; }
    // 10^e for tolerance thresholds, e may be negative.
    static Mpf pow10(long e) { return Mpf(10L).pow_si(e); }

    std::string str(int digits = 20) const;

private:
    mpfr_t v_;
};

struct MpfComplex {
    Mpf re, im;

    MpfComplex() = default;
    MpfComplex(Mpf r, Mpf i) : re(std::move(r)), im(std::move(i)) {}
    explicit MpfComplex(const BigRat& r) : re(Mpf(r)), im(0L) {}

    friend MpfComplex operator+(const MpfComplex& x, const MpfComplex& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend MpfComplex operator-(const MpfComplex& x, const MpfComplex& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend MpfComplex operator*(const MpfComplex& x, const MpfComplex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    Mpf abs2() const { return re * re + im * im; }
    Mpf abs() const;
};

// Primitive n-th root of unity exp(2*pi*i*j/n) at working precision.
MpfComplex root_of_unity(int n, int j = 1);

// Horner evaluation of a QPoly at a complex point, with the parameters fixed
// at exact rationals (a0, e0). Throws PoleAtPoint when a coefficient
// denominator vanishes there.
MpfComplex qp_eval(const QPoly& p, const MpfComplex& q0, const BigRat& a0, const BigRat& e0);

} // namespace qcong
