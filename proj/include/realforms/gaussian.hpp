#ifndef REALFORMS_GAUSSIAN_HPP
#define REALFORMS_GAUSSIAN_HPP

#include <gmpxx.h>

#include <string>

namespace realforms {

// Exact element of Q(i). All arithmetic is rational; no rounding anywhere.
struct GaussianRational {
    mpq_class re;
    mpq_class im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    static GaussianRational integer(long v) { return {mpq_class(v), mpq_class(0)}; }
    static GaussianRational of(long rn, long rd, long in = 0, long id = 1);

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    mpq_class norm() const { return re * re + im * im; }  // |z|^2

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const;
    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const;
};

}  // namespace realforms

#endif
