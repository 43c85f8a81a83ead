#pragma once

#include <compare>
#include <limits>
#include <stdexcept>

namespace evodp {

/// Expected-time value measured in iterations: a finite nonnegative real
/// or +infinity. Addition and positive scaling absorb infinity; scaling
/// by zero yields zero even for infinite values, so weighted sums over
/// distributions never produce NaN.
class ExtendedTime {
  public:
    constexpr ExtendedTime() = default;

    explicit ExtendedTime(double v) : v_(v) {
        if (!(v >= 0.0)) {  // rejects negatives and NaN
            throw std::invalid_argument("ExtendedTime: value must be >= 0");
        }
    }

    static constexpr ExtendedTime infinity() {
        ExtendedTime t;
        t.v_ = std::numeric_limits<double>::infinity();
        return t;
    }

    constexpr double value() const { return v_; }
    constexpr bool finite() const {
        return v_ != std::numeric_limits<double>::infinity();
    }

    ExtendedTime& operator+=(ExtendedTime other) {
        v_ += other.v_;
        return *this;
    }
    friend ExtendedTime operator+(ExtendedTime a, ExtendedTime b) {
        return a += b;
    }

    // Scale by a nonnegative weight; 0 * inf == 0.
    ExtendedTime scaled_by(double w) const {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("ExtendedTime: weight must be >= 0");
        }
        if (w == 0.0) return ExtendedTime{};
        ExtendedTime t;
        t.v_ = v_ * w;
        return t;
    }

    friend constexpr auto operator<=>(ExtendedTime a, ExtendedTime b) {
        return a.v_ <=> b.v_;
    }
    friend constexpr bool operator==(ExtendedTime, ExtendedTime) = default;

  private:
    double v_ = 0.0;
};

}  // namespace evodp
