#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace windnum {

/// Order of a rational function at a point: an integer or +infinity (for 0).
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(long order) : order_(order) {}

    static constexpr Valuation infinity() {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    /// Only meaningful when finite.
    constexpr long order() const { return order_; }
    constexpr bool is_negative() const { return !infinite_ && order_ < 0; }
    constexpr bool is_even() const { return !infinite_ && order_ % 2 == 0; }

    std::string to_string() const { return infinite_ ? "+inf" : std::to_string(order_); }

    friend constexpr bool operator==(const Valuation& l, const Valuation& r) {
        return l.infinite_ == r.infinite_ && (l.infinite_ || l.order_ == r.order_);
    }
    friend constexpr std::strong_ordering operator<=>(const Valuation& l, const Valuation& r) {
        if (l.infinite_ || r.infinite_) return l.infinite_ <=> r.infinite_;
        return l.order_ <=> r.order_;
    }

private:
    long order_ = 0;
    bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

} // namespace windnum
