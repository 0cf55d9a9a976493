#include "realforms/gaussian.hpp"

#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

GaussianRational GaussianRational::of(long rn, long rd, long in, long id) {
    if (rd == 0 || id == 0) fail("Singular", "zero denominator in Gaussian rational");
    mpq_class r(rn, rd), i(in, id);
    r.canonicalize();
    i.canonicalize();
    return {r, i};
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero()) fail("Singular", "division by zero in Q(i)");
    mpq_class n = o.norm();
    GaussianRational num = *this * o.conj();
    return {num.re / n, num.im / n};
}

std::string GaussianRational::str() const {
    std::ostringstream os;
    if (im == 0) {
        os << re;
    } else if (re == 0) {
        os << im << "i";
    } else {
        os << re << (im > 0 ? "+" : "") << im << "i";
    }
    return os.str();
}

}  // namespace realforms
