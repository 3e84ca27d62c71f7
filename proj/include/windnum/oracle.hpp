#pragma once

#include <vector>

#include "windnum/error.hpp"
#include "windnum/fractional.hpp"
#include "windnum/rational.hpp"
#include "windnum/winding.hpp"

namespace windnum::oracle {

enum class RootKind { Zero, Pole };

struct RootSpec {
    GaussianRational location;
    unsigned multiplicity = 1;
    RootKind kind = RootKind::Zero;
};

/// prod (Z - z)^m over zeros divided by prod (Z - w)^n over poles.
RationalFunction build_function(const std::vector<RootSpec>& specs);

/// sum of +-multiplicity * weight, weight 1 / 1/2 / 1/4 / 0 for interior /
/// edge / vertex / exterior.
QuarterInt expected_weighted_count(const std::vector<RootSpec>& specs, const Rectangle& rect);

/// Accumulated change of argument of f along the counterclockwise boundary,
/// divided by 2*pi. Each step's phase change is taken in (-pi, pi]; the
/// sampling density doubles until the total is within 1e-3 of an integer.
/// Floating point throughout; used only to corroborate exact results.
double numeric_winding(const RationalFunction& f, const Rectangle& rect, int samples_per_edge = 256);

} // namespace windnum::oracle
