#pragma once

#include <array>
#include <string>

#include "windnum/error.hpp"
#include "windnum/fractional.hpp"
#include "windnum/valuation.hpp"
#include "windnum/winding.hpp"

namespace windnum {

enum class PointClass { Interior, Edge, Vertex, Exterior };

const char* point_class_name(PointClass c);

PointClass classify_point(const GaussianRational& z, const Rectangle& rect);

/// Zeros minus poles, weighted 1 inside, 1/2 on edges, 1/4 on vertices.
struct WeightedCount {
    QuarterInt value;
    friend bool operator==(const WeightedCount&, const WeightedCount&) = default;
};

/// Raised by count_weighted_even when f has odd valuation at a corner.
class OddVertexValuation : public Error {
public:
    OddVertexValuation(int vertex, GaussianRational where, Valuation v);

    /// Index into Rectangle::vertices().
    int vertex() const { return vertex_; }
    const GaussianRational& where() const { return where_; }
    Valuation valuation() const { return valuation_; }

private:
    int vertex_;
    GaussianRational where_;
    Valuation valuation_;
};

/// val_z(f) at the corners, in Rectangle::vertices() order.
std::array<Valuation, 4> vertex_valuations(const RationalFunction& f, const Rectangle& rect);

/// Weighted zero-minus-pole count via W; valid for every nonzero f.
WeightedCount count_weighted(const RationalFunction& f, const Rectangle& rect);

/// Weighted count via w. Refuses with OddVertexValuation unless every corner
/// valuation is even.
WeightedCount count_weighted_even(const RationalFunction& f, const Rectangle& rect);

} // namespace windnum
