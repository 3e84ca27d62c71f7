#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "windnum/error.hpp"
#include "windnum/oracle.hpp"
#include "windnum/root_count.hpp"

using namespace windnum;
using oracle::RootKind;
using oracle::RootSpec;

namespace {

const ComplexPoly Z = ComplexPoly::variable();
const Rectangle UNIT = testing::unit_square();
const GaussianRational CENTER(Rational(1, 2), Rational(1, 2));

} // namespace

TEST_CASE("build_function") {
    CHECK(oracle::build_function({{0, 1, RootKind::Zero}}) == RationalFunction(Z));
    const GaussianRational i = GaussianRational::i();
    CHECK(oracle::build_function({{i, 2, RootKind::Zero}, {1, 1, RootKind::Pole}}) ==
          RationalFunction(pow(Z - ComplexPoly(i), 2), Z - ComplexPoly(1)));
    CHECK(oracle::build_function({}) == RationalFunction(ComplexPoly(1)));
    CHECK_THROWS_AS(oracle::build_function({{i, 1, RootKind::Zero}, {i, 2, RootKind::Pole}}), OverlappingSpecs);
}

TEST_CASE("expected_weighted_count") {
    CHECK(oracle::expected_weighted_count({{0, 1, RootKind::Zero}}, UNIT) == QuarterInt(Rational(1, 4)));
    CHECK(oracle::expected_weighted_count({{Rational(1, 2), 1, RootKind::Zero}, {CENTER, 1, RootKind::Pole}}, UNIT) ==
          QuarterInt(Rational(-1, 2)));
    CHECK(oracle::expected_weighted_count({{5, 3, RootKind::Zero}}, UNIT) == QuarterInt(0));
    CHECK_THROWS_AS(oracle::expected_weighted_count({{0, 1, RootKind::Zero}, {0, 1, RootKind::Pole}}, UNIT),
                    OverlappingSpecs);
}

TEST_CASE("numeric_winding on single roots") {
    const RationalFunction root(ComplexPoly::linear_factor(CENTER));
    CHECK(std::abs(oracle::numeric_winding(root, UNIT) - 1.0) < 1e-6);
    CHECK(std::abs(oracle::numeric_winding(root.reciprocal(), UNIT) + 1.0) < 1e-6);
    CHECK(std::abs(oracle::numeric_winding(RationalFunction(Z - ComplexPoly(5)), UNIT)) < 1e-6);
    CHECK_THROWS_AS(oracle::numeric_winding(RationalFunction(Z), UNIT), BoundaryZeroDetected);
    CHECK_THROWS_AS(oracle::numeric_winding(root, UNIT, 10), PreconditionViolated);
}

TEST_CASE("oracle agreement off and on the boundary") {
    testing::Rng rng(91);
    for (int k = 0; k < 60; ++k) {
        const Rectangle rect = testing::random_rectangle(rng);
        const bool boundary = k % 2 == 1;
        const auto specs = testing::random_specs(rng, rect, 6, 3, boundary);
        const RationalFunction f = oracle::build_function(specs);
        const QuarterInt expected = oracle::expected_weighted_count(specs, rect);
        CHECK(count_weighted(f, rect).value == expected);
        if (!boundary) {
            CHECK(std::lround(oracle::numeric_winding(f, rect)) == expected.value().numerator().get_si());
        }
    }
}
