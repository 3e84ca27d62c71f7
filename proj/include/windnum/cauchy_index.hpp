#pragma once

#include "windnum/fractional.hpp"
#include "windnum/poly.hpp"
#include "windnum/rational.hpp"

namespace windnum {

/// A pair (P, Q) standing for P/Q. Q = 0 is allowed on purpose: the
/// restriction of a real polynomial to an edge has zero imaginary part.
struct PolyPair {
    RealPoly p;
    RealPoly q;

    friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

enum class Side { Plus, Minus };

/// Sign(P, Q, x): sign of P_x(x) Q_x(x) when P, Q != 0 and val_x(P/Q) = 0,
/// otherwise 0.
int sign_at(const PolyPair& pair, const Rational& x);

/// Var_x(P, Q) = 1/2 - Sign(P, Q, x) / 2.
HalfInt var_at(const PolyPair& pair, const Rational& x);

/// Var_a^b(P, Q) = Var_a(P, Q) - Var_b(P, Q).
HalfInt var_ab(const PolyPair& pair, const Rational& a, const Rational& b);

/// One-sided index: half the sign of P/Q just to the given side of x when x
/// is a pole of P/Q, 0 otherwise.
HalfInt ind_point(const PolyPair& pair, const Rational& x, Side side);

/// Ind_x = Ind_x^+ - Ind_x^-.
HalfInt ind_point_full(const PolyPair& pair, const Rational& x);

/// Ind_a^b(P, Q): inward half-branches at the endpoints plus the jumps at
/// the poles strictly between them. Antisymmetric in (a, b).
HalfInt ind_interval(const PolyPair& pair, const Rational& a, const Rational& b);

/// Ind_a^b(P, Q) + Ind_a^b(Q, P) - Var_a^b(P, Q); always zero.
HalfInt inversion_residual(const PolyPair& pair, const Rational& a, const Rational& b);

} // namespace windnum
