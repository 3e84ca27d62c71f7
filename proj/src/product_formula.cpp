#include "windnum/product_formula.hpp"

#include "windnum/error.hpp"

namespace windnum {

BadNumberReport bad_number_report(const RealPoly& p, const RealPoly& q, const RealPoly& r,
                                  const RealPoly& s, const Rational& c) {
    BadNumberReport out;
    if (!q.is_zero()) out.val_pq = val(p, q, c);
    if (!s.is_zero()) out.val_rs = val(r, s, c);
    const RealPoly qs = q * s;
    if (!qs.is_zero()) out.val_cross = val(p * s + q * r, qs, c);
    out.is_bad = out.val_pq && out.val_rs && out.val_cross && *out.val_pq == *out.val_rs &&
                 out.val_pq->is_negative() && *out.val_cross == Valuation(0);
    return out;
}

const char* variant_tag(ProductVariant v) {
    switch (v) {
        case ProductVariant::NeitherBad: return "neither-bad";
        case ProductVariant::ABad: return "a-bad";
        case ProductVariant::BBad: return "b-bad";
        case ProductVariant::BothBad: return "both-bad";
    }
    return "?";
}

ProductSides aux_product_sides(const RealPoly& p, const RealPoly& q, const RealPoly& r,
                               const RealPoly& s, const Rational& a, const Rational& b) {
    if (!(a < b)) throw PreconditionViolated("aux_product_sides: need a < b");
    if (p.is_zero() && q.is_zero()) throw PreconditionViolated("aux_product_sides: P = Q = 0");
    if (r.is_zero() && s.is_zero()) throw PreconditionViolated("aux_product_sides: R = S = 0");

    const bool a_bad = bad_number_report(p, q, r, s, a).is_bad;
    const bool b_bad = bad_number_report(p, q, r, s, b).is_bad;

    const PolyPair product{p * r - q * s, p * s + q * r};
    const PolyPair cross{p * s + q * r, q * s};

    ProductSides out;
    out.lhs = ind_interval(product, a, b);
    const HalfInt base = ind_interval(PolyPair{p, q}, a, b) + ind_interval(PolyPair{r, s}, a, b);
    if (!a_bad && !b_bad) {
        out.variant = ProductVariant::NeitherBad;
        out.rhs = base - var_ab(cross, a, b);
    } else if (a_bad && !b_bad) {
        out.variant = ProductVariant::ABad;
        out.rhs = base - half_steps(sign_at(cross, b));
    } else if (!a_bad && b_bad) {
        out.variant = ProductVariant::BBad;
        out.rhs = base + half_steps(sign_at(cross, a));
    } else {
        out.variant = ProductVariant::BothBad;
        out.rhs = base;
    }
    return out;
}

} // namespace windnum
