#include "realforms/matrix.hpp"

#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

ExactMatrix ExactMatrix::identity(int k) {
    ExactMatrix m(k);
    for (int i = 0; i < k; ++i) m.at(i, i) = GaussianRational::integer(1);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& d) {
    ExactMatrix m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (k_ != o.k_) fail("Singular", "dimension mismatch in matrix product");
    ExactMatrix out(k_);
    for (int r = 0; r < k_; ++r)
        for (int c = 0; c < k_; ++c) {
            GaussianRational acc;
            for (int t = 0; t < k_; ++t) acc = acc + at(r, t) * o.at(t, c);
            out.at(r, c) = acc;
        }
    return out;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix out(k_);
    for (int r = 0; r < k_; ++r)
        for (int c = 0; c < k_; ++c) out.at(r, c) = at(r, c).conj();
    return out;
}

GaussianRational ExactMatrix::determinant() const {
    if (k_ == 0) return GaussianRational::integer(1);
    if (k_ == 1) return at(0, 0);
    if (k_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    // exact elimination; row swaps flip the sign
    ExactMatrix m = *this;
    GaussianRational det = GaussianRational::integer(1);
    for (int col = 0; col < k_; ++col) {
        int pivot = -1;
        for (int r = col; r < k_; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return GaussianRational();
        if (pivot != col) {
            for (int c = 0; c < k_; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det = det * m.at(col, col);
        for (int r = col + 1; r < k_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col) / m.at(col, col);
            for (int c = col; c < k_; ++c) m.at(r, c) = m.at(r, c) - f * m.at(col, c);
        }
    }
    return det;
}

ExactMatrix ExactMatrix::inverse() const {
    if (k_ == 2) {
        GaussianRational det = determinant();
        if (det.is_zero()) fail("Singular", "matrix is singular");
        ExactMatrix out(2);
        out.at(0, 0) = at(1, 1) / det;
        out.at(0, 1) = -at(0, 1) / det;
        out.at(1, 0) = -at(1, 0) / det;
        out.at(1, 1) = at(0, 0) / det;
        return out;
    }
    // Gauss-Jordan on [M | I]
    ExactMatrix m = *this;
    ExactMatrix out = identity(k_);
    for (int col = 0; col < k_; ++col) {
        int pivot = -1;
        for (int r = col; r < k_; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) fail("Singular", "matrix is singular");
        if (pivot != col)
            for (int c = 0; c < k_; ++c) {
                std::swap(m.at(pivot, c), m.at(col, c));
                std::swap(out.at(pivot, c), out.at(col, c));
            }
        GaussianRational p = m.at(col, col);
        for (int c = 0; c < k_; ++c) {
            m.at(col, c) = m.at(col, c) / p;
            out.at(col, c) = out.at(col, c) / p;
        }
        for (int r = 0; r < k_; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            GaussianRational f = m.at(r, col);
            for (int c = 0; c < k_; ++c) {
                m.at(r, c) = m.at(r, c) - f * m.at(col, c);
                out.at(r, c) = out.at(r, c) - f * out.at(col, c);
            }
        }
    }
    return out;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < k_; ++r) {
        os << (r ? "; " : "");
        for (int c = 0; c < k_; ++c) os << (c ? " " : "") << at(r, c).str();
    }
    os << "]";
    return os.str();
}

void InvolutionSpec::validate(int dim) const {
    if (mode == Mode::Conjugate) return;
    if (!j) fail("Singular", "conjugate-by-J involution needs a matrix J");
    if (j->dim() != dim) fail("Singular", "J has the wrong dimension");
    if (!j->invertible()) fail("Singular", "J is singular");
    if (*j * j->conj() != ExactMatrix::identity(dim))
        fail("NotAnInvolution", "J conj(J) != 1, so the twisted conjugation is not an involution");
}

ExactMatrix InvolutionSpec::apply(const ExactMatrix& m) const {
    if (mode == Mode::Conjugate) return m.conj();
    validate(m.dim());
    return *j * m.conj() * j->inverse();
}

bool is_cocycle(const ExactMatrix& m, const InvolutionSpec& inv) {
    if (!m.invertible()) fail("Singular", "cocycle test requires an invertible matrix");
    return m * inv.apply(m) == ExactMatrix::identity(m.dim());
}

bool connects(const ExactMatrix& h, const ExactMatrix& g, const ExactMatrix& g_prime,
              const InvolutionSpec& inv) {
    if (!h.invertible()) fail("Singular", "connecting element must be invertible");
    return inv.apply(h) * g * h.inverse() == g_prime;
}

bool in_twisted_stabilizer(const ExactMatrix& h, const ExactMatrix& g, const InvolutionSpec& inv) {
    if (!h.invertible()) fail("Singular", "stabilizer test requires an invertible matrix");
    return inv.apply(h) * g == g * h;
}

}  // namespace realforms
