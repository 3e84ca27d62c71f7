#pragma once

#include <array>
#include <string>

#include "windnum/bivariate.hpp"
#include "windnum/cauchy_index.hpp"
#include "windnum/fractional.hpp"
#include "windnum/poly.hpp"
#include "windnum/rational.hpp"

namespace windnum {

/// Closed axis-aligned rectangle [x0, x1] x [y0, y1] with x0 < x1, y0 < y1.
class Rectangle {
public:
    Rectangle(Rational x0, Rational x1, Rational y0, Rational y1);

    const Rational& x0() const { return x0_; }
    const Rational& x1() const { return x1_; }
    const Rational& y0() const { return y0_; }
    const Rational& y1() const { return y1_; }
    Rational width() const { return x1_ - x0_; }
    Rational height() const { return y1_ - y0_; }

    /// Corners counterclockwise from (x0, y0).
    std::array<GaussianRational, 4> vertices() const;

    std::string to_string() const;
    friend bool operator==(const Rectangle&, const Rectangle&) = default;

private:
    Rational x0_, x1_, y0_, y1_;
};

/// F/G in Q(i)(Z), stored coprime with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(ComplexPoly numerator); // NOLINT(google-explicit-constructor)
    RationalFunction(ComplexPoly numerator, ComplexPoly denominator);

    const ComplexPoly& numerator() const { return num_; }
    const ComplexPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    GaussianRational operator()(const GaussianRational& z) const;

    RationalFunction reciprocal() const;
    RationalFunction scaled(const GaussianRational& gamma) const;

    friend RationalFunction operator+(const RationalFunction& l, const RationalFunction& r);
    friend RationalFunction operator-(const RationalFunction& l, const RationalFunction& r);
    friend RationalFunction operator*(const RationalFunction& l, const RationalFunction& r);
    friend RationalFunction operator/(const RationalFunction& l, const RationalFunction& r);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string() const;

private:
    ComplexPoly num_;
    ComplexPoly den_;
};

RationalFunction pow(const RationalFunction& base, unsigned exponent);

enum class EdgeName { Bottom = 0, Right = 1, Top = 2, Left = 3 };

const char* edge_label(EdgeName e);

/// Restriction of (F conj G)_re, (F conj G)_im to one edge, with the
/// traversal direction of the counterclockwise boundary: the Cauchy index
/// is taken from `from` to `to`.
struct EdgeRestriction {
    PolyPair pair;
    Rational from;
    Rational to;
};

/// Bottom (T, y0), right (x1, T), top (T, y1), left (x0, T).
struct EdgeRestrictions {
    std::array<EdgeRestriction, 4> edges;

    const EdgeRestriction& operator[](EdgeName e) const { return edges[static_cast<int>(e)]; }
    /// Restrictions of i times the same function: (P, Q) -> (-Q, P).
    EdgeRestrictions rotated() const;
};

EdgeRestrictions edge_restrictions(const RationalFunction& f, const Rectangle& rect);
EdgeRestrictions edge_restrictions(const BivarComplexPoly& f, const Rectangle& rect);

/// F * conj(G) as a polynomial in X, Y. Its edge restrictions agree with the
/// rational-function route.
BivarComplexPoly to_bivariate(const RationalFunction& f);

struct EdgeIndices {
    /// Oriented Cauchy index on each edge, indexed by EdgeName.
    std::array<HalfInt, 4> edge;
    QuarterInt total;
};

EdgeIndices wind_w_raw_sum(const EdgeRestrictions& restrictions);
EdgeIndices wind_w_raw_sum(const RationalFunction& f, const Rectangle& rect);
EdgeIndices wind_w_raw_sum(const BivarComplexPoly& f, const Rectangle& rect);

/// w: half the sum of the oriented edge Cauchy indices of (re, im).
QuarterInt wind_w(const RationalFunction& f, const Rectangle& rect);
QuarterInt wind_w(const BivarComplexPoly& f, const Rectangle& rect);

/// W = (w(f) + w(i f)) / 2.
QuarterInt wind_W(const RationalFunction& f, const Rectangle& rect);

/// W for an arbitrary bivariate polynomial; without analyticity the value
/// is only guaranteed to be a multiple of 1/8.
Fractional<8> wind_W(const BivarComplexPoly& f, const Rectangle& rect);

} // namespace windnum
