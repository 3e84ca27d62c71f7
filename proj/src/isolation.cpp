#include "windnum/isolation.hpp"

#include <algorithm>
#include <queue>

#include "windnum/error.hpp"
#include "windnum/real_roots.hpp"

namespace windnum {

Rational root_bound(const ComplexPoly& f) {
    if (f.degree() < 1) throw ConstantPolynomial("root_bound");
    const Rational lead = f.leading().modulus_lower();
    Rational best;
    const auto& c = f.coefficients();
    for (std::size_t j = 0; j + 1 < c.size(); ++j) {
        best = std::max(best, c[j].modulus_upper() / lead);
    }
    return Rational(1) + best;
}

namespace {

bool restriction_has_root(const ComplexPoly& h, const Rational& lo, const Rational& hi) {
    auto [p, q] = split_re_im(h);
    if (p.is_zero() && q.is_zero()) return true;
    const RealPoly g = gcd(p, q);
    if (g.is_constant()) return false;
    if (g(lo).is_zero() || g(hi).is_zero()) return true;
    return SturmSequence(squarefree_part(g)).count_open(lo, hi) > 0;
}

/// Cut schedule: mid, then mid +- span/(3*2^k).
class CutSchedule {
public:
    CutSchedule(const Rational& lo, const Rational& hi) : mid_((lo + hi) / Rational(2)), step_((hi - lo) / Rational(6)) {}

    Rational next() {
        Rational out;
        if (attempt_ == 0) {
            out = mid_;
        } else if (attempt_ % 2 == 1) {
            out = mid_ + step_;
        } else {
            out = mid_ - step_;
            step_ /= Rational(2);
        }
        ++attempt_;
        return out;
    }

private:
    Rational mid_;
    Rational step_;
    unsigned attempt_ = 0;
};

struct Work {
    Rectangle box;
    long count;
};

struct LargerFirst {
    bool operator()(const Work& l, const Work& r) const {
        const Rational la = l.box.width() * l.box.height();
        const Rational ra = r.box.width() * r.box.height();
        if (la != ra) return la < ra;
        if (l.box.x0() != r.box.x0()) return l.box.x0() > r.box.x0();
        return l.box.y0() > r.box.y0();
    }
};

// Every box handed in here has a root-free boundary, so all corner
// valuations are 0 and w already equals W; that halves the work.
long integer_count(const ComplexPoly& f, const Rectangle& box) {
    const QuarterInt w = wind_w(RationalFunction(f), box);
    if (!w.is_integer() || w.value().sign() < 0) {
        throw Error("isolate: non-integral count " + w.to_string() + " on " + box.to_string());
    }
    return w.value().numerator().get_si();
}

bool boundary_root_free(const ComplexPoly& f, const Rectangle& b) {
    return !has_root_on_horizontal(f, b.y0(), b.x0(), b.x1()) && !has_root_on_horizontal(f, b.y1(), b.x0(), b.x1()) &&
           !has_root_on_vertical(f, b.x0(), b.y0(), b.y1()) && !has_root_on_vertical(f, b.x1(), b.y0(), b.y1());
}

/// Pulls every side of a leaf inward so that neighbouring leaves, which
/// share cut lines, end up disjoint as closed sets. The roots sit strictly
/// inside, so a small enough margin always keeps the count.
Rectangle shrink_leaf(const ComplexPoly& f, const Rectangle& b, long count) {
    Rational margin = std::min(b.width(), b.height()) / Rational(8);
    for (;;) {
        const Rectangle inner(b.x0() + margin, b.x1() - margin, b.y0() + margin, b.y1() - margin);
        if (boundary_root_free(f, inner) && integer_count(f, inner) == count) return inner;
        margin /= Rational(2);
    }
}

} // namespace

bool has_root_on_vertical(const ComplexPoly& f, const Rational& x, const Rational& y_lo,
                          const Rational& y_hi) {
    return restriction_has_root(subst_linear(f, GaussianRational(x), GaussianRational::i()), y_lo, y_hi);
}

bool has_root_on_horizontal(const ComplexPoly& f, const Rational& y, const Rational& x_lo,
                            const Rational& x_hi) {
    return restriction_has_root(subst_linear(f, GaussianRational(0, y), GaussianRational(1)), x_lo, x_hi);
}

std::vector<IsolatingBox> isolate(const ComplexPoly& f, const Rational& eps) {
    if (f.degree() < 1) throw ConstantPolynomial("isolate");
    if (eps.sign() <= 0) throw PreconditionViolated("isolate: eps must be positive");

    const Rational bound = root_bound(f);
    std::priority_queue<Work, std::vector<Work>, LargerFirst> work;
    work.push({Rectangle(-bound, bound, -bound, bound), f.degree()});

    std::vector<IsolatingBox> out;
    while (!work.empty()) {
        Work item = work.top();
        work.pop();
        const Rectangle& b = item.box;
        if (b.width() < eps && b.height() < eps) {
            out.push_back({shrink_leaf(f, b, item.count), static_cast<unsigned>(item.count)});
            continue;
        }

        CutSchedule xs(b.x0(), b.x1());
        Rational cx = xs.next();
        while (has_root_on_vertical(f, cx, b.y0(), b.y1())) cx = xs.next();
        CutSchedule ys(b.y0(), b.y1());
        Rational cy = ys.next();
        while (has_root_on_horizontal(f, cy, b.x0(), b.x1())) cy = ys.next();

        const std::array<Rectangle, 4> children{
            Rectangle(b.x0(), cx, b.y0(), cy), Rectangle(cx, b.x1(), b.y0(), cy),
            Rectangle(cx, b.x1(), cy, b.y1()), Rectangle(b.x0(), cx, cy, b.y1())};
        // W is additive over the subdivision, so the last count is implied.
        long remaining = item.count;
        std::array<long, 4> counts{};
        for (std::size_t k = 0; k < 3; ++k) {
            counts[k] = integer_count(f, children[k]);
            remaining -= counts[k];
        }
        if (remaining < 0) throw Error("isolate: subdivision counts exceed parent on " + b.to_string());
        counts[3] = remaining;
        for (std::size_t k = 0; k < 4; ++k) {
            if (counts[k] > 0) work.push({children[k], counts[k]});
        }
    }

    std::sort(out.begin(), out.end(), [](const IsolatingBox& l, const IsolatingBox& r) {
        if (l.box.x0() != r.box.x0()) return l.box.x0() < r.box.x0();
        return l.box.y0() < r.box.y0();
    });
    return out;
}

WeightedCount count_in(const ComplexPoly& f, const Rectangle& rect) {
    return count_weighted(RationalFunction(f), rect);
}

} // namespace windnum
