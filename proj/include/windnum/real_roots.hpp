#pragma once

#include <vector>

#include "windnum/poly.hpp"
#include "windnum/rational.hpp"

namespace windnum {

/// A positive multiple of a real polynomial with coprime integer
/// coefficients. Shares every sign of the original, and its signs at
/// rational points are read off without rational arithmetic.
class IntegerPoly {
public:
    explicit IntegerPoly(const RealPoly& p);

    /// sign(p(x)).
    int sign_at(const Rational& x) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    RealPoly to_real() const;

private:
    std::vector<mpz_class> coeffs_;
};

/// Signed remainder chain p, p', -rem(p, p'), ... of a square-free polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const RealPoly& squarefree);

    const RealPoly& base() const { return base_; }
    /// Sign changes of the chain at x, zeros skipped.
    int variations(const Rational& x) const;
    /// Number of distinct roots in the half-open interval (lo, hi].
    int count_half_open(const Rational& lo, const Rational& hi) const;
    /// Number of distinct roots in the open interval (lo, hi).
    int count_open(const Rational& lo, const Rational& hi) const;

private:
    RealPoly base_;
    std::vector<IntegerPoly> chain_;
};

/// A real algebraic number: the unique root of a square-free polynomial in
/// an isolating interval. Rational roots are kept as a degenerate interval.
class AlgebraicRoot {
public:
    /// Exact rational root of `defining`.
    AlgebraicRoot(RealPoly defining, Rational exact);
    /// Root strictly inside (lo, hi); defining(lo) and defining(hi) nonzero.
    AlgebraicRoot(RealPoly defining, Rational lo, Rational hi);

    const RealPoly& defining() const { return defining_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_exact() const { return lo_ == hi_; }
    Rational width() const { return hi_ - lo_; }
    /// Midpoint of the interval (the root itself when exact).
    Rational approx() const { return (lo_ + hi_) / Rational(2); }

    friend bool operator==(const AlgebraicRoot&, const AlgebraicRoot&) = default;

private:
    RealPoly defining_;
    Rational lo_;
    Rational hi_;
};

/// Roots of p in the open interval (a, b), ascending, each reported once with
/// an isolating interval (open intervals pairwise disjoint) strictly inside (a, b).
std::vector<AlgebraicRoot> isolate_real_roots(const RealPoly& p, const Rational& a, const Rational& b);
/// Same, reusing the Sturm sequence of an already square-free polynomial.
std::vector<AlgebraicRoot> isolate_real_roots(const SturmSequence& sturm, const Rational& a, const Rational& b);

/// Halves the isolating interval, collapsing to the exact root if the
/// midpoint is a root.
AlgebraicRoot refine(const AlgebraicRoot& r);

/// sign(p(root)).
int sign_at(const RealPoly& p, const AlgebraicRoot& root);

/// Multiplicity of root as a root of p (0 if not a root).
unsigned multiplicity_at(const RealPoly& p, const AlgebraicRoot& root);

} // namespace windnum
