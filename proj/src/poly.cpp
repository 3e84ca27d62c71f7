#include "windnum/poly.hpp"

namespace windnum {

RealPoly primitive_part(const RealPoly& p) {
    mpz_class den = 1;
    for (const auto& c : p.coefficients()) den = lcm(den, c.denominator());
    mpz_class content = 0;
    std::vector<mpz_class> ints;
    ints.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        ints.push_back(c.numerator() * (den / c.denominator()));
        content = gcd(content, ints.back());
    }
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (auto& z : ints) {
        if (content > 1) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
        out.emplace_back(z);
    }
    return RealPoly(std::move(out));
}

ComplexPoly to_complex(const RealPoly& p) {
    std::vector<GaussianRational> c;
    c.reserve(p.coefficients().size());
    for (const auto& x : p.coefficients()) c.emplace_back(x);
    return ComplexPoly(std::move(c));
}

ComplexPoly conj_poly(const ComplexPoly& g) {
    std::vector<GaussianRational> c;
    c.reserve(g.coefficients().size());
    for (const auto& x : g.coefficients()) c.push_back(x.conj());
    return ComplexPoly(std::move(c));
}

std::pair<RealPoly, RealPoly> split_re_im(const ComplexPoly& f) {
    std::vector<Rational> re;
    std::vector<Rational> im;
    re.reserve(f.coefficients().size());
    im.reserve(f.coefficients().size());
    for (const auto& x : f.coefficients()) {
        re.push_back(x.re());
        im.push_back(x.im());
    }
    return {RealPoly(std::move(re)), RealPoly(std::move(im))};
}

ComplexPoly subst_linear(const ComplexPoly& f, const GaussianRational& a, const GaussianRational& b) {
    const ComplexPoly z(std::vector<GaussianRational>{a, b});
    ComplexPoly acc;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z + ComplexPoly(*it);
    }
    return acc;
}

ComplexPoly times_i(const ComplexPoly& f) { return f * GaussianRational::i(); }

} // namespace windnum
