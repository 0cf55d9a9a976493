#ifndef REALFORMS_MATRIX_HPP
#define REALFORMS_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "realforms/gaussian.hpp"

namespace realforms {

// Square matrix over Q(i), exact throughout. 2x2 inverses go through the
// adjugate; larger sizes use Gauss-Jordan elimination with exact pivoting.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int k) : k_(k), a_(static_cast<size_t>(k) * k) {}
    static ExactMatrix identity(int k);
    static ExactMatrix diagonal(const std::vector<GaussianRational>& d);

    int dim() const { return k_; }
    GaussianRational& at(int r, int c) { return a_[static_cast<size_t>(r) * k_ + c]; }
    const GaussianRational& at(int r, int c) const { return a_[static_cast<size_t>(r) * k_ + c]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const { return k_ == o.k_ && a_ == o.a_; }
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix conj() const;  // entrywise conjugation
    GaussianRational determinant() const;
    bool invertible() const { return !determinant().is_zero(); }
    ExactMatrix inverse() const;  // error: Singular

    std::string str() const;

private:
    int k_ = 0;
    std::vector<GaussianRational> a_;
};

// Antiholomorphic involution on matrices: either entrywise conjugation or
// conjugation by J composed with it, where J conj(J) = 1.
struct InvolutionSpec {
    enum class Mode { Conjugate, ConjugateByJ };
    Mode mode = Mode::Conjugate;
    std::optional<ExactMatrix> j;

    ExactMatrix apply(const ExactMatrix& m) const;
    void validate(int dim) const;  // checks J conj(J) = 1
};

// g sigma(g) = 1, exactly. Error: Singular.
bool is_cocycle(const ExactMatrix& m, const InvolutionSpec& inv);

// g' = sigma(h) g h^-1, exactly. Error: Singular.
bool connects(const ExactMatrix& h, const ExactMatrix& g, const ExactMatrix& g_prime,
              const InvolutionSpec& inv);

// sigma(h) g = g h, exactly. Error: Singular.
bool in_twisted_stabilizer(const ExactMatrix& h, const ExactMatrix& g, const InvolutionSpec& inv);

}  // namespace realforms

#endif
