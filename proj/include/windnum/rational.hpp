#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace windnum {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& value) : value_(value) {}
    explicit Rational(const mpq_class& value);

    /// Parses `p` or `p/q` with an optional leading sign.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    double to_double() const { return value_.get_d(); }

    /// `p` for integers, `p/q` otherwise.
    std::string to_string() const;
    /// Always `p/q`, including `/1` for integers.
    std::string to_fraction_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

/// sign(x) in {-1, 0, 1}.
inline int sign(const Rational& x) { return x.sign(); }

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Rational + i * Rational, i.e. an element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(long re) : re_(re) {}                // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |re|^2 + |im|^2.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// |re| + |im|, an upper bound on the modulus.
    Rational modulus_upper() const { return re_.abs() + im_.abs(); }
    /// max(|re|, |im|), a lower bound on the modulus.
    Rational modulus_lower() const;
    GaussianRational inverse() const;

    /// `a`, `bi`, `a+bi` or `a-bi`.
    std::string to_string() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational l, const GaussianRational& r) { return l += r; }
    friend GaussianRational operator-(GaussianRational l, const GaussianRational& r) { return l -= r; }
    friend GaussianRational operator*(GaussianRational l, const GaussianRational& r) { return l *= r; }
    friend GaussianRational operator/(GaussianRational l, const GaussianRational& r) { return l /= r; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

} // namespace windnum
