#include "qcong/numeric.hpp"

#include <cstdio>

#include "qcong/errors.hpp"

namespace qcong {

std::string Mpf::str(int digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, v_);
    return buf;
}

Mpf MpfComplex::abs() const { return abs2().sqrt(); }

MpfComplex root_of_unity(int n, int j) {
    Mpf angle = Mpf(2L * j) * Mpf::pi() / Mpf(static_cast<long>(n));
    return {Mpf::cos(angle), Mpf::sin(angle)};
}

MpfComplex qp_eval(const QPoly& p, const MpfComplex& q0, const BigRat& a0, const BigRat& e0) {
    MpfComplex acc;
    for (int i = p.degree(); i >= 0; --i) {
        const ParamRat& c = p.coeff(i);
        MpfComplex cv;
        if (!c.is_zero()) {
            if (c.den().eval(a0, e0).is_zero())
                throw PoleAtPoint("coefficient pole at a=" + a0.str() + ", e=" + e0.str());
            cv = MpfComplex(c.eval(a0, e0));
        }
        acc = acc * q0 + cv;
    }
    return acc;
}

} // namespace qcong
