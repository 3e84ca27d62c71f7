#include "windnum/winding.hpp"

#include "windnum/error.hpp"

namespace windnum {

Rectangle::Rectangle(Rational x0, Rational x1, Rational y0, Rational y1)
    : x0_(std::move(x0)), x1_(std::move(x1)), y0_(std::move(y0)), y1_(std::move(y1)) {
    if (!(x0_ < x1_) || !(y0_ < y1_)) {
        throw PreconditionViolated("rectangle needs x0 < x1 and y0 < y1, got " + to_string());
    }
}

std::array<GaussianRational, 4> Rectangle::vertices() const {
    return {GaussianRational(x0_, y0_), GaussianRational(x1_, y0_), GaussianRational(x1_, y1_),
            GaussianRational(x0_, y1_)};
}

std::string Rectangle::to_string() const {
    return "[" + x0_.to_string() + ", " + x1_.to_string() + "] x [" + y0_.to_string() + ", " +
           y1_.to_string() + "]";
}

RationalFunction::RationalFunction(ComplexPoly numerator) : num_(std::move(numerator)), den_(1) {}

RationalFunction::RationalFunction(ComplexPoly numerator, ComplexPoly denominator) {
    if (denominator.is_zero()) throw ZeroDenominator("RationalFunction");
    if (numerator.is_zero()) {
        den_ = ComplexPoly(1);
        return;
    }
    const ComplexPoly g = gcd(numerator, denominator);
    num_ = exact_quotient(numerator, g);
    den_ = exact_quotient(denominator, g);
    const GaussianRational lead = den_.leading();
    if (!(lead == GaussianRational(1))) {
        const GaussianRational inv = lead.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

GaussianRational RationalFunction::operator()(const GaussianRational& z) const {
    return num_(z) / den_(z);
}

RationalFunction RationalFunction::reciprocal() const {
    if (num_.is_zero()) throw DivisionByZero();
    return {den_, num_};
}

RationalFunction RationalFunction::scaled(const GaussianRational& gamma) const {
    return {num_ * gamma, den_};
}

RationalFunction operator+(const RationalFunction& l, const RationalFunction& r) {
    return {l.num_ * r.den_ + r.num_ * l.den_, l.den_ * r.den_};
}

RationalFunction operator-(const RationalFunction& l, const RationalFunction& r) {
    return {l.num_ * r.den_ - r.num_ * l.den_, l.den_ * r.den_};
}

RationalFunction operator*(const RationalFunction& l, const RationalFunction& r) {
    return {l.num_ * r.num_, l.den_ * r.den_};
}

RationalFunction operator/(const RationalFunction& l, const RationalFunction& r) {
    if (r.is_zero()) throw DivisionByZero();
    return {l.num_ * r.den_, l.den_ * r.num_};
}

std::string RationalFunction::to_string() const {
    if (den_ == ComplexPoly(1)) return num_.to_string("Z");
    return "(" + num_.to_string("Z") + ")/(" + den_.to_string("Z") + ")";
}

RationalFunction pow(const RationalFunction& base, unsigned exponent) {
    return {pow(base.numerator(), exponent), pow(base.denominator(), exponent)};
}

const char* edge_label(EdgeName e) {
    switch (e) {
        case EdgeName::Bottom: return "bottom";
        case EdgeName::Right: return "right";
        case EdgeName::Top: return "top";
        case EdgeName::Left: return "left";
    }
    return "?";
}

EdgeRestrictions EdgeRestrictions::rotated() const {
    EdgeRestrictions out = *this;
    for (auto& e : out.edges) e.pair = PolyPair{-e.pair.q, e.pair.p};
    return out;
}

namespace {

EdgeRestriction make_edge(const ComplexPoly& h, Rational from, Rational to) {
    auto [re, im] = split_re_im(h);
    return {PolyPair{std::move(re), std::move(im)}, std::move(from), std::move(to)};
}

} // namespace

EdgeRestrictions edge_restrictions(const RationalFunction& f, const Rectangle& rect) {
    const ComplexPoly g_bar = conj_poly(f.denominator());
    const bool polynomial = f.denominator() == ComplexPoly(1);
    // z(T) = a + bT on each edge; conj(G) is evaluated at conj(z(T)).
    auto restrict = [&](const GaussianRational& a, const GaussianRational& b) {
        ComplexPoly h = subst_linear(f.numerator(), a, b);
        if (!polynomial) h *= subst_linear(g_bar, a.conj(), b.conj());
        return h;
    };
    const GaussianRational one(1);
    const GaussianRational i = GaussianRational::i();
    EdgeRestrictions out;
    out.edges[0] = make_edge(restrict(GaussianRational(0, rect.y0()), one), rect.x0(), rect.x1());
    out.edges[1] = make_edge(restrict(GaussianRational(rect.x1()), i), rect.y0(), rect.y1());
    out.edges[2] = make_edge(restrict(GaussianRational(0, rect.y1()), one), rect.x1(), rect.x0());
    out.edges[3] = make_edge(restrict(GaussianRational(rect.x0()), i), rect.y1(), rect.y0());
    return out;
}

EdgeRestrictions edge_restrictions(const BivarComplexPoly& f, const Rectangle& rect) {
    EdgeRestrictions out;
    out.edges[0] = make_edge(f.restrict_y(rect.y0()), rect.x0(), rect.x1());
    out.edges[1] = make_edge(f.restrict_x(rect.x1()), rect.y0(), rect.y1());
    out.edges[2] = make_edge(f.restrict_y(rect.y1()), rect.x1(), rect.x0());
    out.edges[3] = make_edge(f.restrict_x(rect.x0()), rect.y1(), rect.y0());
    return out;
}

BivarComplexPoly to_bivariate(const RationalFunction& f) {
    return embed_bivariate(f.numerator()) * embed_bivariate(f.denominator()).conj_coefficients();
}

EdgeIndices wind_w_raw_sum(const EdgeRestrictions& restrictions) {
    EdgeIndices out;
    HalfInt sum;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto& e = restrictions.edges[k];
        out.edge[k] = ind_interval(e.pair, e.from, e.to);
        sum += out.edge[k];
    }
    out.total = halve(sum);
    return out;
}

EdgeIndices wind_w_raw_sum(const RationalFunction& f, const Rectangle& rect) {
    if (f.is_zero()) throw ZeroFunction("wind_w");
    return wind_w_raw_sum(edge_restrictions(f, rect));
}

EdgeIndices wind_w_raw_sum(const BivarComplexPoly& f, const Rectangle& rect) {
    if (f.is_zero()) throw ZeroFunction("wind_w");
    return wind_w_raw_sum(edge_restrictions(f, rect));
}

QuarterInt wind_w(const RationalFunction& f, const Rectangle& rect) { return wind_w_raw_sum(f, rect).total; }

QuarterInt wind_w(const BivarComplexPoly& f, const Rectangle& rect) { return wind_w_raw_sum(f, rect).total; }

namespace {

Rational big_w(const EdgeRestrictions& r) {
    return (wind_w_raw_sum(r).total.value() + wind_w_raw_sum(r.rotated()).total.value()) / Rational(2);
}

} // namespace

QuarterInt wind_W(const RationalFunction& f, const Rectangle& rect) {
    if (f.is_zero()) throw ZeroFunction("wind_W");
    // Weighted zero/pole counts are multiples of 1/4; anything else is a bug.
    return QuarterInt(big_w(edge_restrictions(f, rect)));
}

Fractional<8> wind_W(const BivarComplexPoly& f, const Rectangle& rect) {
    if (f.is_zero()) throw ZeroFunction("wind_W");
    return Fractional<8>(big_w(edge_restrictions(f, rect)));
}

} // namespace windnum
