#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "windnum/error.hpp"
#include "windnum/rational.hpp"
#include "windnum/valuation.hpp"

namespace windnum {

/// Degree reported for the zero polynomial; compares below every real degree.
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial over an exact field. Coefficient k multiplies
/// X^k; the highest stored coefficient is never zero.
template <class T>
class Poly {
public:
    using Scalar = T;

    Poly() = default;
    Poly(T constant) { // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    Poly(long constant) : Poly(T(constant)) {} // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(T c, std::size_t k) {
        if (c.is_zero()) return {};
        std::vector<T> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(T(1), 1); }
    /// X - root.
    static Poly linear_factor(const T& root) { return Poly(std::vector<T>{-root, T(1)}); }

    int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<T>& coefficients() const { return coeffs_; }

    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(); }
    const T& leading() const {
        if (coeffs_.empty()) throw ZeroPolynomial("leading");
        return coeffs_.back();
    }

    /// Horner evaluation.
    T operator()(const T& x) const {
        T acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
        return Poly(std::move(d));
    }

    Poly monic() const {
        if (coeffs_.empty()) return {};
        return *this * (T(1) / coeffs_.back());
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    friend Poly operator+(Poly l, const Poly& r) { return l += r; }
    friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
    friend Poly operator*(const Poly& l, const Poly& r) {
        if (l.is_zero() || r.is_zero()) return {};
        std::vector<T> out(l.coeffs_.size() + r.coeffs_.size() - 1);
        for (std::size_t a = 0; a < l.coeffs_.size(); ++a) {
            if (l.coeffs_[a].is_zero()) continue;
            for (std::size_t b = 0; b < r.coeffs_.size(); ++b) out[a + b] += l.coeffs_[a] * r.coeffs_[b];
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(Poly p, const T& c) {
        if (c.is_zero()) return {};
        for (auto& x : p.coeffs_) x *= c;
        return p;
    }
    friend Poly operator*(const T& c, Poly p) { return std::move(p) * c; }

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string(const std::string& var = "X") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            const T& c = coeffs_[k];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            const std::string cs = c.to_string();
            const bool wrap = cs.find_first_of("+-/", 1) != std::string::npos;
            if (k == 0) {
                out += wrap ? "(" + cs + ")" : cs;
            } else {
                if (!(c == T(1))) out += (wrap ? "(" + cs + ")" : cs) + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using RealPoly = Poly<Rational>;
using ComplexPoly = Poly<GaussianRational>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& p) {
    return os << p.to_string();
}

template <class T>
struct DivMod {
    Poly<T> quotient;
    Poly<T> remainder;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
template <class T>
DivMod<T> divmod(const Poly<T>& num, const Poly<T>& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.degree() < den.degree()) return {Poly<T>(), num};
    std::vector<T> rem = num.coefficients();
    const std::size_t dn = den.coefficients().size();
    const T inv_lead = T(1) / den.leading();
    std::vector<T> quot(rem.size() - dn + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        T c = rem[k + dn - 1] * inv_lead;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= c * den.coefficients()[j];
        quot[k] = std::move(c);
    }
    rem.resize(dn - 1);
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

/// Quotient of an exact division; throws if the remainder is nonzero.
template <class T>
Poly<T> exact_quotient(const Poly<T>& num, const Poly<T>& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw Error("exact_quotient: nonzero remainder");
    return q;
}

/// Monic greatest common divisor.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    while (!b.is_zero()) {
        Poly<T> r = divmod(a, b).remainder.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned exponent) {
    Poly<T> result(T(1));
    Poly<T> b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

/// p / gcd(p, p'), monic; zero stays zero.
template <class T>
Poly<T> squarefree_part(const Poly<T>& p) {
    if (p.is_constant()) return p.monic();
    return exact_quotient(p, gcd(p, p.derivative())).monic();
}

template <class T>
struct Deflation {
    unsigned multiplicity = 0;
    /// p / (X - x)^multiplicity, nonzero at x.
    Poly<T> cofactor;
};

/// Writes p = (X - x)^m * p_x with p_x(x) != 0.
template <class T>
Deflation<T> mult_at(const Poly<T>& p, const T& x) {
    if (p.is_zero()) throw ZeroPolynomial("mult_at");
    Deflation<T> out{0, p};
    while (out.cofactor.degree() >= 1) {
        // synthetic division by (X - x)
        const auto& c = out.cofactor.coefficients();
        std::vector<T> q(c.size() - 1);
        T acc = c.back();
        for (std::size_t k = c.size() - 1; k-- > 0;) {
            q[k] = acc;
            acc = acc * x + c[k];
        }
        if (!acc.is_zero()) break;
        out.cofactor = Poly<T>(std::move(q));
        ++out.multiplicity;
    }
    return out;
}

/// val_x(p/q) = mult_x(p) - mult_x(q), or +infinity when p = 0.
template <class T>
Valuation val(const Poly<T>& p, const Poly<T>& q, const T& x) {
    if (q.is_zero()) throw ZeroDenominator("val");
    if (p.is_zero()) return Valuation::infinity();
    return Valuation(static_cast<long>(mult_at(p, x).multiplicity) -
                     static_cast<long>(mult_at(q, x).multiplicity));
}

/// Positive rational multiple with coprime integer coefficients.
RealPoly primitive_part(const RealPoly& p);

/// Embeds a real polynomial into Q(i)[Z].
ComplexPoly to_complex(const RealPoly& p);

/// Coefficientwise complex conjugate. The result is meant to be evaluated at
/// conj(z) to produce conj(g(z)).
ComplexPoly conj_poly(const ComplexPoly& g);

/// Real and imaginary coefficient parts: f = P + iQ.
std::pair<RealPoly, RealPoly> split_re_im(const ComplexPoly& f);

/// f(a + b*T) as a polynomial in T.
ComplexPoly subst_linear(const ComplexPoly& f, const GaussianRational& a, const GaussianRational& b);

/// Multiplies every coefficient by i.
ComplexPoly times_i(const ComplexPoly& f);

} // namespace windnum
