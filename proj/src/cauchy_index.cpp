#include "windnum/cauchy_index.hpp"

#include <optional>

#include "windnum/real_roots.hpp"

namespace windnum {

namespace {

struct LocalForm {
    long order;     // val_x(P/Q)
    int lead_sign;  // sign(P_x(x) Q_x(x))
};

LocalForm local_form(const PolyPair& pair, const Rational& x) {
    const auto dp = mult_at(pair.p, x);
    const auto dq = mult_at(pair.q, x);
    return {static_cast<long>(dp.multiplicity) - static_cast<long>(dq.multiplicity),
            dp.cofactor(x).sign() * dq.cofactor(x).sign()};
}

int sign_product(const RealPoly& p, const RealPoly& q, const Rational& x) {
    return p(x).sign() * q(x).sign();
}

} // namespace

int sign_at(const PolyPair& pair, const Rational& x) {
    if (pair.p.is_zero() || pair.q.is_zero()) return 0;
    const LocalForm f = local_form(pair, x);
    return f.order == 0 ? f.lead_sign : 0;
}

HalfInt var_at(const PolyPair& pair, const Rational& x) { return half_steps(1 - sign_at(pair, x)); }

HalfInt var_ab(const PolyPair& pair, const Rational& a, const Rational& b) {
    return var_at(pair, a) - var_at(pair, b);
}

HalfInt ind_point(const PolyPair& pair, const Rational& x, Side side) {
    if (pair.p.is_zero() || pair.q.is_zero()) return 0;
    const LocalForm f = local_form(pair, x);
    if (f.order >= 0) return 0;
    if (side == Side::Plus) return half_steps(f.lead_sign);
    return half_steps((f.order % 2 == 0) ? f.lead_sign : -f.lead_sign);
}

HalfInt ind_point_full(const PolyPair& pair, const Rational& x) {
    return ind_point(pair, x, Side::Plus) - ind_point(pair, x, Side::Minus);
}

HalfInt ind_interval(const PolyPair& pair, const Rational& a, const Rational& b) {
    if (a == b) return 0;
    if (b < a) return -ind_interval(pair, b, a);
    if (pair.p.is_zero() || pair.q.is_zero()) return 0;

    HalfInt total = ind_point(pair, a, Side::Plus) - ind_point(pair, b, Side::Minus);

    // Common factors change nothing; after reduction the poles are exactly
    // the roots of Q and no root is shared with P.
    const RealPoly g = gcd(pair.p, pair.q);
    const RealPoly p = exact_quotient(pair.p, g);
    const RealPoly q = exact_quotient(pair.q, g);
    if (q.is_constant()) return total;

    const SturmSequence sturm(squarefree_part(q));
    if (sturm.count_open(a, b) == 0) return total;

    // Each pole r contributes (s+ - s-)/2, s+- the sign of P*Q just right and
    // left of r. P(r) != 0, so s+- = sign P(r) * sign Q(r+-).
    auto exact_jump = [&](const Rational& x) {
        const auto d = mult_at(q, x);
        const int right = p(x).sign() * d.cofactor(x).sign();
        return half_steps(d.multiplicity % 2 == 0 ? 0 : 2 * right);
    };
    std::optional<SturmSequence> p_sturm;
    for (AlgebraicRoot r : isolate_real_roots(sturm, a, b)) {
        if (!r.is_exact()) {
            // shrink until P keeps one sign on the interval; Q has no other root there
            if (!p_sturm) p_sturm.emplace(squarefree_part(p));
            while (!r.is_exact() && (p(r.lo()).is_zero() || p(r.hi()).is_zero() ||
                                     p_sturm->count_open(r.lo(), r.hi()) > 0)) {
                r = refine(r);
            }
        }
        total += r.is_exact() ? exact_jump(r.lo())
                              : half_steps(sign_product(p, q, r.hi()) - sign_product(p, q, r.lo()));
    }
    return total;
}

HalfInt inversion_residual(const PolyPair& pair, const Rational& a, const Rational& b) {
    const PolyPair swapped{pair.q, pair.p};
    return ind_interval(pair, a, b) + ind_interval(swapped, a, b) - var_ab(pair, a, b);
}

} // namespace windnum
