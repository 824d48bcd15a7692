#include "qcong/padic.hpp"

#include <gmp.h>

#include "qcong/errors.hpp"

namespace qcong {

BigRat poch_rational(const BigRat& x, long k) {
    BigRat acc(1);
    BigRat cur = x;
    for (long j = 0; j < k; ++j) {
        acc *= cur;
        cur += BigRat(1);
    }
    return acc;
}

long vp(const BigRat& x, long p) {
    if (p < 2) throw Error("vp needs p >= 2");
    if (x.is_zero()) return kValuationInfinity;
    mpz_t t;
    mpz_init(t);
    long v = 0;
    // numerator valuation
    mpz_set(t, x.num_ref());
    while (mpz_divisible_ui_p(t, static_cast<unsigned long>(p))) {
        mpz_divexact_ui(t, t, static_cast<unsigned long>(p));
        ++v;
    }
    // denominator valuation (num and den are coprime, at most one side counts)
    mpz_set(t, x.den_ref());
    while (mpz_divisible_ui_p(t, static_cast<unsigned long>(p))) {
        mpz_divexact_ui(t, t, static_cast<unsigned long>(p));
        --v;
    }
    mpz_clear(t);
    return v;
}

unsigned long mod_prime_power(const BigRat& x, long p, int r) {
    mpz_t mod, num, den, inv;
    mpz_inits(mod, num, den, inv, nullptr);
    mpz_ui_pow_ui(mod, static_cast<unsigned long>(p), static_cast<unsigned long>(r));
    mpz_mod(num, x.num_ref(), mod);
    mpz_mod(den, x.den_ref(), mod);
    if (mpz_invert(inv, den, mod) == 0) {
        mpz_clears(mod, num, den, inv, nullptr);
        throw NotPadicInteger(x.str() + " has denominator divisible by " + std::to_string(p));
    }
    mpz_mul(num, num, inv);
    mpz_mod(num, num, mod);
    unsigned long out = mpz_get_ui(num);
    mpz_clears(mod, num, den, inv, nullptr);
    return out;
}

namespace {

unsigned long padic_gamma_at_precision(long p, const BigRat& x, int r) {
    mpz_t mod, m, acc, j;
    mpz_inits(mod, m, acc, j, nullptr);
    mpz_ui_pow_ui(mod, static_cast<unsigned long>(p), static_cast<unsigned long>(r));
    // m = the integer in [0, p^r) congruent to x
    {
        mpz_t num, den, inv;
        mpz_inits(num, den, inv, nullptr);
        mpz_mod(num, x.num_ref(), mod);
        mpz_mod(den, x.den_ref(), mod);
        if (mpz_invert(inv, den, mod) == 0) {
            mpz_clears(num, den, inv, mod, m, acc, j, nullptr);
            throw NotPadicInteger("Gamma_p argument " + x.str() + " is not a p-adic integer");
        }
        mpz_mul(m, num, inv);
        mpz_mod(m, m, mod);
        mpz_clears(num, den, inv, nullptr);
    }
    // acc = prod_{0 < j < m, p !| j} j  (mod p^r)
    mpz_set_ui(acc, 1);
    for (mpz_set_ui(j, 1); mpz_cmp(j, m) < 0; mpz_add_ui(j, j, 1)) {
        if (mpz_divisible_ui_p(j, static_cast<unsigned long>(p))) continue;
        mpz_mul(acc, acc, j);
        mpz_mod(acc, acc, mod);
    }
    if (mpz_odd_p(m)) { // sign (-1)^m
        mpz_neg(acc, acc);
        mpz_mod(acc, acc, mod);
    }
    unsigned long out = mpz_get_ui(acc);
    mpz_clears(mod, m, acc, j, nullptr);
    return out;
}

} // namespace

unsigned long padic_gamma(long p, const BigRat& x, int r) {
    if (r < 1) throw Error("padic_gamma needs precision r >= 1");
    if (p < 3 || !is_prime(p)) throw Error("padic_gamma needs an odd prime");
    unsigned long v1 = padic_gamma_at_precision(p, x, r);
    unsigned long v2 = padic_gamma_at_precision(p, x, r + 1);
    unsigned long pr = 1;
    for (int i = 0; i < r; ++i) pr *= static_cast<unsigned long>(p);
    if (v2 % pr != v1)
        throw Error("padic_gamma consistency check failed at p=" + std::to_string(p));
    return v1;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace qcong
