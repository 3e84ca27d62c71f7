#pragma once

#include <optional>
#include <string>

#include "windnum/cauchy_index.hpp"
#include "windnum/fractional.hpp"
#include "windnum/poly.hpp"
#include "windnum/valuation.hpp"

namespace windnum {

/// Valuations deciding whether c is a bad number for P, Q, R, S. A
/// valuation is empty when its denominator is the zero polynomial.
struct BadNumberReport {
    bool is_bad = false;
    std::optional<Valuation> val_pq;
    std::optional<Valuation> val_rs;
    /// val_c((PS + QR) / QS).
    std::optional<Valuation> val_cross;
};

/// c is bad iff Q, S != 0, val_c(P/Q) = val_c(R/S) < 0 and
/// val_c((PS + QR)/QS) = 0.
BadNumberReport bad_number_report(const RealPoly& p, const RealPoly& q, const RealPoly& r,
                                  const RealPoly& s, const Rational& c);

enum class ProductVariant { NeitherBad, ABad, BBad, BothBad };

const char* variant_tag(ProductVariant v);

struct ProductSides {
    /// Ind_a^b(PR - QS, PS + QR).
    HalfInt lhs;
    /// Ind_a^b(P, Q) + Ind_a^b(R, S) plus the correction for `variant`.
    HalfInt rhs;
    ProductVariant variant = ProductVariant::NeitherBad;
};

/// Both sides of the product formula for (P + iQ)(R + iS) on [a, b].
/// Correction term by endpoint badness:
///   neither: -Var_a^b(PS + QR, QS)
///   a bad:   -Sign(PS + QR, QS, b) / 2
///   b bad:   +Sign(PS + QR, QS, a) / 2
///   both:    none
/// Requires a < b and neither (P, Q) nor (R, S) identically zero.
ProductSides aux_product_sides(const RealPoly& p, const RealPoly& q, const RealPoly& r,
                               const RealPoly& s, const Rational& a, const Rational& b);

} // namespace windnum
