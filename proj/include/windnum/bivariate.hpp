#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "windnum/poly.hpp"
#include "windnum/rational.hpp"

namespace windnum {

/// Dense polynomial in two real variables X, Y with Gaussian rational
/// coefficients; coeff(j, k) multiplies X^j Y^k. All-zero outer rows and
/// columns are trimmed.
class BivarComplexPoly {
public:
    BivarComplexPoly() = default;
    explicit BivarComplexPoly(std::vector<std::vector<GaussianRational>> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in X, or kZeroDegree.
    int degree_x() const;
    /// Degree in Y, or kZeroDegree.
    int degree_y() const;
    GaussianRational coeff(std::size_t jx, std::size_t ky) const;
    const std::vector<std::vector<GaussianRational>>& coefficients() const { return coeffs_; }

    GaussianRational operator()(const GaussianRational& x, const GaussianRational& y) const;

    /// Restriction to Y = y, as a polynomial in T = X.
    ComplexPoly restrict_y(const Rational& y) const;
    /// Restriction to X = x, as a polynomial in T = Y.
    ComplexPoly restrict_x(const Rational& x) const;

    /// Coefficientwise conjugate; equals conj(F(X, Y)) for real X, Y.
    BivarComplexPoly conj_coefficients() const;

    BivarComplexPoly& operator+=(const BivarComplexPoly& rhs);
    friend BivarComplexPoly operator+(BivarComplexPoly l, const BivarComplexPoly& r) { return l += r; }
    friend BivarComplexPoly operator*(const BivarComplexPoly& l, const BivarComplexPoly& r);
    friend BivarComplexPoly operator*(BivarComplexPoly p, const GaussianRational& c);
    friend bool operator==(const BivarComplexPoly&, const BivarComplexPoly&) = default;

private:
    void trim();

    // coeffs_[j][k] for X^j Y^k; every row has the same length.
    std::vector<std::vector<GaussianRational>> coeffs_;
};

/// Image of f under C[Z] -> C[X, Y], Z = X + iY.
BivarComplexPoly embed_bivariate(const ComplexPoly& f);

/// (F_re, F_im) as bivariate polynomials with real coefficients.
std::pair<BivarComplexPoly, BivarComplexPoly> split_re_im_bivar(const BivarComplexPoly& f);

} // namespace windnum
