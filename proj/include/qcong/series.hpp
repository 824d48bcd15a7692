#pragma once

#include <vector>

#include "qcong/bigrat.hpp"
#include "qcong/factored.hpp"

namespace qcong {

// Formal Laurent series with exact rational coefficients, truncated after
// q-degree N: coef(d) is exact for all d <= N and unspecified above.
class TruncSeries {
public:
    explicit TruncSeries(int N) : N_(N), offset_(0) {}
    static TruncSeries zero(int N) { return TruncSeries(N); }
    static TruncSeries one(int N);
    static TruncSeries from_coeffs(int N, int offset, std::vector<BigRat> coeffs);

    int trunc() const { return N_; }
    // Coefficient of q^d (exact for d <= trunc()).
    BigRat coef(int d) const;
    bool is_zero() const;
    // Smallest degree with nonzero coefficient, or N+1 when none survive.
    int valuation() const;

    void add(const TruncSeries& o);
    void mul(const TruncSeries& o);
    void mul_scalar(const BigRat& c);
    void mul_qpow(int m) { offset_ += m; }
    // Multiply by 1 - c q^m (m >= 1).
    void mul_one_minus(const BigRat& c, int m);
    // Divide by 1 - c q^m (m >= 1): multiply by the geometric series.
    void div_one_minus(const BigRat& c, int m);
    // Divide by a polynomial with nonzero lowest coefficient (generic
    // power-series inversion of the unit part plus an offset shift).
    void div_poly(const std::vector<BigRat>& coeffs, int valuation_shift);

    // First degree in [lo, N] where the two series differ; N+1 when equal.
    static int first_mismatch(const TruncSeries& x, const TruncSeries& y);

    std::string str(int max_terms = 12) const;

private:
    int N_;
    int offset_;                // series = q^offset * sum c_[i] q^i
    std::vector<BigRat> c_;    // kept to length <= N_ - offset_ + 1
    void clamp();
};

// Expansion of an exact factored rational function into a truncated Laurent
// series. Requires pure-rational coefficients (all claim parameters resolved).
TruncSeries expand_factored(const FactoredQ& f, int N);

// One (q^a; q^b)_infinity factor of an infinite product.
struct InfProductFactor {
    int a = 1;          // base exponent
    int b = 1;          // step, >= 1
    bool denominator = false;
    int power = 1;
};

struct SeriesProductSpec {
    std::vector<InfProductFactor> factors;
};

// Formal power-series expansion of the product, exact coefficients through
// degree N. Throws NonTruncatable when some factor has a <= 0.
QPoly product_truncate(const SeriesProductSpec& spec, int N);

} // namespace qcong
