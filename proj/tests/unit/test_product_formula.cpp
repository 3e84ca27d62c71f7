#include <doctest.h>

#include <set>

#include "quadruples.hpp"
#include "windnum/cauchy_index.hpp"
#include "windnum/error.hpp"
#include "windnum/product_formula.hpp"

using namespace windnum;

namespace {

const RealPoly X = RealPoly::variable();
const RealPoly ONE(1);

ProductSides sides(const testing::Quadruple& t) { return aux_product_sides(t.p, t.q, t.r, t.s, t.a, t.b); }

} // namespace

TEST_CASE("bad numbers of the worked quadruple") {
    const auto at0 = bad_number_report(ONE, X, X - ONE, X, 0);
    CHECK(at0.is_bad);
    CHECK(*at0.val_pq == Valuation(-1));
    CHECK(*at0.val_rs == Valuation(-1));
    CHECK(*at0.val_cross == Valuation(0));
    CHECK_FALSE(bad_number_report(ONE, X, X - ONE, X, 1).is_bad);
    const auto no_q = bad_number_report(X, RealPoly(), X, X, 0);
    CHECK_FALSE(no_q.is_bad);
    CHECK_FALSE(no_q.val_pq.has_value());
}

TEST_CASE("worked quadruple on [0, 1]") {
    const RealPoly p = ONE, q = X, r = X - ONE, s = X;
    CHECK(ind_interval({p, q}, 0, 1) == HalfInt(Rational(1, 2)));
    CHECK(ind_interval({r, s}, 0, 1) == HalfInt(Rational(-1, 2)));
    CHECK(ind_interval({p * r - q * s, p * s + q * r}, 0, 1) == HalfInt(Rational(-1, 2)));
    CHECK(var_ab({p * s + q * r, q * s}, 0, 1) == HalfInt(0));
    const auto out = aux_product_sides(p, q, r, s, 0, 1);
    CHECK(out.variant == ProductVariant::ABad);
    CHECK(out.lhs == HalfInt(Rational(-1, 2)));
    CHECK(out.rhs == HalfInt(Rational(-1, 2)));
    // the uncorrected identity is off by one half here
    const HalfInt plain = ind_interval({p, q}, 0, 1) + ind_interval({r, s}, 0, 1) - var_ab({p * s + q * r, q * s}, 0, 1);
    CHECK(plain != out.lhs);
}

TEST_CASE("worked quadruple on a symmetric interval") {
    const auto out = aux_product_sides(ONE, X, X - ONE, X, -1, Rational(1, 2));
    CHECK(out.variant == ProductVariant::NeitherBad);
    CHECK(out.lhs == out.rhs);
}

TEST_CASE("P = 0") {
    const RealPoly r = X * X - ONE, s = X + RealPoly(2);
    const auto out = aux_product_sides(RealPoly(), ONE, r, s, -3, 3);
    CHECK(out.lhs == ind_interval({-s, r}, -3, 3));
    CHECK(out.lhs == out.rhs);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(aux_product_sides(ONE, X, ONE, X, 1, 1), PreconditionViolated);
    CHECK_THROWS_AS(aux_product_sides(ONE, X, ONE, X, 2, 1), PreconditionViolated);
    CHECK_THROWS_AS(aux_product_sides(RealPoly(), RealPoly(), ONE, X, 0, 1), PreconditionViolated);
    CHECK(std::string(variant_tag(ProductVariant::BothBad)) == "both-bad");
}

TEST_CASE("constructed bad numbers are detected") {
    testing::Rng rng(61);
    for (int k = 0; k < 100; ++k) {
        const auto [a, b] = testing::random_interval(rng);
        const auto t = testing::with_bad_numbers(rng, {a, b}, a, b);
        CHECK(bad_number_report(t.p, t.q, t.r, t.s, a).is_bad);
        CHECK(bad_number_report(t.p, t.q, t.r, t.s, b).is_bad);
        CHECK(sides(t).variant == ProductVariant::BothBad);
    }
}

TEST_CASE("product formula on targeted quadruples") {
    testing::Rng rng(62);
    std::set<ProductVariant> seen;
    for (int k = 0; k < 240; ++k) {
        const auto t = testing::targeted_quadruple(rng, k);
        const auto out = sides(t);
        seen.insert(out.variant);
        CHECK_MESSAGE(out.lhs == out.rhs, "P=" << t.p << " Q=" << t.q << " R=" << t.r << " S=" << t.s << " on ["
                                                << t.a << ", " << t.b << "] " << variant_tag(out.variant));
    }
    CHECK(seen.size() == 4);
}
