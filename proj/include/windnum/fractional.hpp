#pragma once

#include <ostream>
#include <string>

#include "windnum/error.hpp"
#include "windnum/rational.hpp"

namespace windnum {

/// A rational constrained to integer multiples of 1/Denom.
template <int Denom>
class Fractional {
public:
    Fractional() = default;
    explicit Fractional(Rational value) : value_(std::move(value)) {
        if (!(value_ * Rational(Denom)).is_integer()) {
            throw Error("value " + value_.to_string() + " is not a multiple of 1/" +
                        std::to_string(Denom));
        }
    }
    Fractional(long value) : value_(value) {} // NOLINT(google-explicit-constructor)

    /// Widening conversion from a coarser grid.
    template <int Other>
        requires(Denom % Other == 0 && Other != Denom)
    Fractional(const Fractional<Other>& other) : value_(other.value()) {} // NOLINT

    const Rational& value() const { return value_; }
    bool is_integer() const { return value_.is_integer(); }
    /// Denom * value, an exact integer.
    long steps() const { return (value_ * Rational(Denom)).numerator().get_si(); }

    std::string to_string() const { return value_.to_string(); }

    Fractional operator-() const { return Fractional(-value_); }
    Fractional& operator+=(const Fractional& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Fractional& operator-=(const Fractional& rhs) {
        value_ -= rhs.value_;
        return *this;
    }
    friend Fractional operator+(Fractional l, const Fractional& r) { return l += r; }
    friend Fractional operator-(Fractional l, const Fractional& r) { return l -= r; }
    friend bool operator==(const Fractional&, const Fractional&) = default;
    friend auto operator<=>(const Fractional& l, const Fractional& r) { return l.value_ <=> r.value_; }

private:
    Rational value_;
};

/// Cauchy indices, Sign/Var values.
using HalfInt = Fractional<2>;
/// Winding numbers and weighted counts.
using QuarterInt = Fractional<4>;

inline QuarterInt halve(const HalfInt& x) { return QuarterInt(x.value() / Rational(2)); }
inline HalfInt half_steps(long x) { return HalfInt(Rational(x, 2)); }

template <int D>
std::ostream& operator<<(std::ostream& os, const Fractional<D>& x) {
    return os << x.value();
}

} // namespace windnum
