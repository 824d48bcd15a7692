#include "qcong/bigrat.hpp"

#include <ostream>
#include <vector>

namespace qcong {

BigRat::BigRat(long num, long den) {
    mpq_init(v_);
    if (den == 0) throw ZeroDenominator("BigRat(num, 0)");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpq_set_si(v_, num, static_cast<unsigned long>(den));
    mpq_canonicalize(v_);
}

BigRat::BigRat(const std::string& s) {
    mpq_init(v_);
    if (mpq_set_str(v_, s.c_str(), 10) != 0) {
        mpq_clear(v_);
        mpq_init(v_);
        throw Error("BigRat: cannot parse '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(v_)) == 0) throw ZeroDenominator("BigRat: '" + s + "'");
    mpq_canonicalize(v_);
}

BigRat BigRat::pow(long e) const {
    if (e == 0) return BigRat(1);
    bool invert = e < 0;
    unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw ZeroDenominator("0 to a negative power");
    BigRat r;
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_), ue);
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_), ue);
    // num/den already coprime, so the powers are coprime too
    if (invert) mpq_inv(r.v_, r.v_);
    return r;
}

long BigRat::to_long() const {
    if (!is_integer()) throw NonIntegral("BigRat::to_long on non-integer " + str());
    if (!mpz_fits_slong_p(mpq_numref(v_))) throw Error("BigRat::to_long overflow: " + str());
    return mpz_get_si(mpq_numref(v_));
}

std::string BigRat::str() const {
    char* c = mpq_get_str(nullptr, 10, v_);
    std::string s(c);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(c, s.size() + 1);
    return s;
}

BigRat BigRat::int_gcd(const BigRat& x, const BigRat& y) {
    BigRat r;
    mpz_gcd(mpq_numref(r.v_), mpq_numref(x.v_), mpq_numref(y.v_));
    return r;
}

BigRat BigRat::int_lcm(const BigRat& x, const BigRat& y) {
    BigRat r;
    mpz_lcm(mpq_numref(r.v_), mpq_numref(x.v_), mpq_numref(y.v_));
    return r;
}

std::size_t BigRat::hash() const {
    // Stable across runs: residues modulo two fixed primes.
    unsigned long hn = mpz_fdiv_ui(mpq_numref(v_), 1000000007UL);
    unsigned long hd = mpz_fdiv_ui(mpq_denref(v_), 998244353UL);
    return hn * 1315423911UL + hd;
}

std::ostream& operator<<(std::ostream& os, const BigRat& x) { return os << x.str(); }

} // namespace qcong
