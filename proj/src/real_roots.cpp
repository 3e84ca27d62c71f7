#include "windnum/real_roots.hpp"

#include <functional>

#include "windnum/error.hpp"

namespace windnum {

IntegerPoly::IntegerPoly(const RealPoly& p) {
    const RealPoly prim = primitive_part(p);
    coeffs_.reserve(prim.coefficients().size());
    for (const auto& c : prim.coefficients()) coeffs_.push_back(c.numerator());
}

int IntegerPoly::sign_at(const Rational& x) const {
    if (coeffs_.empty()) return 0;
    // den^n * p(num/den) by homogeneous Horner; den > 0 keeps the sign
    const mpz_class num = x.numerator();
    const mpz_class den = x.denominator();
    mpz_class acc = coeffs_.back();
    mpz_class den_pow = den;
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        acc *= num;
        acc += coeffs_[k] * den_pow;
        if (k > 0) den_pow *= den;
    }
    return sgn(acc);
}

RealPoly IntegerPoly::to_real() const {
    std::vector<Rational> c;
    c.reserve(coeffs_.size());
    for (const auto& z : coeffs_) c.emplace_back(z);
    return RealPoly(std::move(c));
}

SturmSequence::SturmSequence(const RealPoly& squarefree) : base_(squarefree) {
    chain_.emplace_back(squarefree);
    if (squarefree.is_constant()) return;
    RealPoly prev = chain_.back().to_real();
    RealPoly cur = IntegerPoly(squarefree.derivative()).to_real();
    chain_.emplace_back(cur);
    while (!cur.is_constant()) {
        RealPoly r = divmod(prev, cur).remainder;
        if (r.is_zero()) break;
        // only signs matter, so a positive integer rescaling keeps the chain small
        IntegerPoly next(-r);
        prev = std::move(cur);
        cur = next.to_real();
        chain_.push_back(std::move(next));
    }
}

int SturmSequence::variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
        const int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count_half_open(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) return 0;
    return variations(lo) - variations(hi);
}

int SturmSequence::count_open(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) return 0;
    return count_half_open(lo, hi) - (chain_.front().sign_at(hi) == 0 ? 1 : 0);
}

AlgebraicRoot::AlgebraicRoot(RealPoly defining, Rational exact)
    : defining_(std::move(defining)), lo_(exact), hi_(std::move(exact)) {}

AlgebraicRoot::AlgebraicRoot(RealPoly defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {}

std::vector<AlgebraicRoot> isolate_real_roots(const RealPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw ZeroPolynomial("isolate_real_roots");
    if (!(a < b) || p.is_constant()) return {};
    return isolate_real_roots(SturmSequence(squarefree_part(p)), a, b);
}

std::vector<AlgebraicRoot> isolate_real_roots(const SturmSequence& sturm, const Rational& a, const Rational& b) {
    std::vector<AlgebraicRoot> out;
    const RealPoly& q = sturm.base();
    if (!(a < b) || q.is_constant()) return out;
    const IntegerPoly qi(q);

    const std::function<void(const Rational&, const Rational&, int)> split =
        [&](const Rational& lo, const Rational& hi, int count) {
            if (count == 0) return;
            const bool inner = lo != a && hi != b && qi.sign_at(lo) != 0 && qi.sign_at(hi) != 0;
            if (count == 1 && inner) {
                out.emplace_back(q, lo, hi);
                return;
            }
            const Rational mid = (lo + hi) / Rational(2);
            const int left = sturm.count_open(lo, mid);
            const bool mid_root = qi.sign_at(mid) == 0;
            split(lo, mid, left);
            if (mid_root) out.emplace_back(q, mid);
            split(mid, hi, count - left - (mid_root ? 1 : 0));
        };
    split(a, b, sturm.count_open(a, b));
    return out;
}

AlgebraicRoot refine(const AlgebraicRoot& r) {
    if (r.is_exact()) return r;
    const RealPoly& q = r.defining();
    const Rational mid = r.approx();
    const int sm = q(mid).sign();
    if (sm == 0) return {q, mid};
    if (q(r.lo()).sign() * sm < 0) return {q, r.lo(), mid};
    return {q, mid, r.hi()};
}

int sign_at(const RealPoly& p, const AlgebraicRoot& root) {
    if (root.is_exact()) return p(root.lo()).sign();
    if (p.is_zero()) return 0;
    // A shared root shows up as a sign change of gcd over the interval.
    const RealPoly g = gcd(p, root.defining());
    if (g.degree() >= 1 && g(root.lo()).sign() * g(root.hi()).sign() < 0) return 0;
    const SturmSequence sturm(squarefree_part(p));
    AlgebraicRoot r = root;
    while (!r.is_exact()) {
        if (sturm.count_half_open(r.lo(), r.hi()) == 0 && !p(r.lo()).is_zero()) return p(r.lo()).sign();
        r = refine(r);
    }
    return p(r.lo()).sign();
}

unsigned multiplicity_at(const RealPoly& p, const AlgebraicRoot& root) {
    if (p.is_zero()) throw ZeroPolynomial("multiplicity_at");
    unsigned m = 0;
    RealPoly d = p;
    while (!d.is_zero() && sign_at(d, root) == 0) {
        ++m;
        d = d.derivative();
    }
    return m;
}

} // namespace windnum
