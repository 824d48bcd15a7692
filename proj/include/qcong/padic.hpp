#pragma once

#include <cstdint>
#include <limits>

#include "qcong/bigrat.hpp"

namespace qcong {

// Sentinel for v_p(0).
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

// Rising factorial (x)_k = x (x+1) ... (x+k-1), exact.
BigRat poch_rational(const BigRat& x, long k);

// p-adic valuation of a nonzero rational; v_p(0) = kValuationInfinity.
long vp(const BigRat& x, long p);

// Residue of a p-adic integer rational modulo p^r (denominator must be
// coprime to p). Throws NotPadicInteger.
unsigned long mod_prime_power(const BigRat& x, long p, int r);

// Morita's p-adic Gamma at a rational p-adic integer x, modulo p^r:
// Gamma_p(m) = (-1)^m * prod_{0 < j < m, p !| j} j for the unique integer
// m in [0, p^r) congruent to x mod p^r; continuity (|Gamma_p(x) - Gamma_p(y)|_p
// <= |x - y|_p) makes this exact to precision r. Computed at precisions r and
// r+1 and cross-checked, guarding the continuity argument.
// Conventions differ in the literature for small arguments; this is the
// standard normalization with Gamma_p(0) = 1, Gamma_p(1) = -1, Gamma_p(2) = 1.
unsigned long padic_gamma(long p, const BigRat& x, int r);

bool is_prime(long n);

} // namespace qcong
