#include "windnum/root_count.hpp"

namespace windnum {

const char* point_class_name(PointClass c) {
    switch (c) {
        case PointClass::Interior: return "interior";
        case PointClass::Edge: return "edge";
        case PointClass::Vertex: return "vertex";
        case PointClass::Exterior: return "exterior";
    }
    return "?";
}

PointClass classify_point(const GaussianRational& z, const Rectangle& rect) {
    const Rational& x = z.re();
    const Rational& y = z.im();
    if (x < rect.x0() || x > rect.x1() || y < rect.y0() || y > rect.y1()) return PointClass::Exterior;
    const bool on_x = x == rect.x0() || x == rect.x1();
    const bool on_y = y == rect.y0() || y == rect.y1();
    if (on_x && on_y) return PointClass::Vertex;
    if (on_x || on_y) return PointClass::Edge;
    return PointClass::Interior;
}

OddVertexValuation::OddVertexValuation(int vertex, GaussianRational where, Valuation v)
    : Error("odd valuation " + v.to_string() + " at vertex (" + where.re().to_string() + ", " +
            where.im().to_string() + ")" +
            "; use the W method instead"),
      vertex_(vertex),
      where_(std::move(where)),
      valuation_(v) {}

std::array<Valuation, 4> vertex_valuations(const RationalFunction& f, const Rectangle& rect) {
    if (f.is_zero()) throw ZeroFunction("vertex_valuations");
    std::array<Valuation, 4> out;
    const auto corners = rect.vertices();
    for (std::size_t k = 0; k < 4; ++k) out[k] = val(f.numerator(), f.denominator(), corners[k]);
    return out;
}

WeightedCount count_weighted(const RationalFunction& f, const Rectangle& rect) {
    if (f.is_zero()) throw ZeroFunction("count_weighted");
    return {wind_W(f, rect)};
}

WeightedCount count_weighted_even(const RationalFunction& f, const Rectangle& rect) {
    const auto vals = vertex_valuations(f, rect);
    const auto corners = rect.vertices();
    for (std::size_t k = 0; k < 4; ++k) {
        if (!vals[k].is_even()) throw OddVertexValuation(static_cast<int>(k), corners[k], vals[k]);
    }
    return {wind_w(f, rect)};
}

} // namespace windnum
