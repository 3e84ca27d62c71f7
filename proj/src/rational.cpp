#include "windnum/rational.hpp"

#include <cctype>
#include <ostream>

#include "windnum/error.hpp"

namespace windnum {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
    if (value_.get_den() == 0) throw DivisionByZero();
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& part, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
        if (start >= part.size()) return false;
        for (std::size_t k = start; k < part.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
        }
        return true;
    };
    auto to_mpz = [](std::string part) {
        if (!part.empty() && part[0] == '+') part.erase(0, 1);
        return mpz_class(part, 10);
    };
    if (slash == std::string::npos) {
        if (!valid_int(s, true)) throw Error("invalid rational literal '" + s + "'");
        return Rational(to_mpz(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw Error("invalid rational literal '" + s + "'");
    }
    return Rational(to_mpz(num), to_mpz(den));
}

Rational Rational::abs() const {
    Rational r;
    r.value_ = ::abs(value_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational r;
    r.value_ = 1 / value_;
    return r;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_fraction_string() const {
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational GaussianRational::modulus_lower() const {
    Rational a = re_.abs();
    Rational b = im_.abs();
    return a < b ? b : a;
}

GaussianRational GaussianRational::inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw DivisionByZero();
    return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    if (im_ == Rational(1)) {
        imag = "i";
    } else if (im_ == Rational(-1)) {
        imag = "-i";
    } else {
        imag = im_.to_string() + "i";
    }
    if (re_.is_zero()) return imag;
    return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    if (im_.is_zero() && rhs.im_.is_zero()) {
        re_ *= rhs.re_;
        return *this;
    }
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    if (rhs.im_.is_zero()) {
        re_ /= rhs.re_;
        im_ /= rhs.re_;
        return *this;
    }
    return *this *= rhs.inverse();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value) {
    return os << value.to_string();
}

} // namespace windnum
