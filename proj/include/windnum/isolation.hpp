#pragma once

#include <vector>

#include "windnum/poly.hpp"
#include "windnum/rational.hpp"
#include "windnum/root_count.hpp"
#include "windnum/winding.hpp"

namespace windnum {

/// A rectangle with root-free boundary holding exactly `count` roots
/// (with multiplicity).
struct IsolatingBox {
    Rectangle box;
    unsigned count;
};

/// 1 + max_j |a_j| / |a_n| with |a_j| <= |re| + |im| above and
/// |a_n| >= max(|re|, |im|) below; every root has modulus < the bound.
Rational root_bound(const ComplexPoly& f);

/// True if f has a root on the segment {x} x [y_lo, y_hi].
bool has_root_on_vertical(const ComplexPoly& f, const Rational& x, const Rational& y_lo,
                          const Rational& y_hi);
/// True if f has a root on the segment [x_lo, x_hi] x {y}.
bool has_root_on_horizontal(const ComplexPoly& f, const Rational& y, const Rational& x_lo,
                            const Rational& x_hi);

/// Isolates every root of f into boxes narrower and shorter than eps by
/// repeated four-way subdivision counted with W. Cut lines that hit a root
/// are moved through mid + span/(3*2^k), mid - span/(3*2^k), k = 1, 2, ...
/// Leaves are finally shrunk inward so the closed boxes are pairwise
/// disjoint. Output is sorted by (x0, y0).
std::vector<IsolatingBox> isolate(const ComplexPoly& f, const Rational& eps);

/// count_weighted for a polynomial.
WeightedCount count_in(const ComplexPoly& f, const Rectangle& rect);

} // namespace windnum
