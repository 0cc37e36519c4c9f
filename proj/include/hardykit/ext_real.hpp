#pragma once

#include <cmath>
#include <limits>
#include <ostream>

namespace hardykit {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Non-negative extended real in [0, +inf].
///
/// Arithmetic follows the measure-theoretic conventions used throughout the
/// library: 0 * inf = 0, inf / inf = 0, 0 / 0 = 0.  Division by zero of a
/// positive value yields +inf.  Values never become NaN.
class ExtReal {
public:
    constexpr ExtReal() : v_(0.0) {}
    constexpr ExtReal(double v) : v_(v < 0.0 ? 0.0 : v) {}

    static constexpr ExtReal inf() { return ExtReal(kInf); }

    constexpr double get() const { return v_; }
    constexpr bool is_inf() const { return v_ == kInf; }
    constexpr bool is_zero() const { return v_ == 0.0; }
    constexpr bool finite() const { return v_ != kInf; }

    friend ExtReal operator+(ExtReal a, ExtReal b) { return ExtReal(a.v_ + b.v_); }

    friend ExtReal operator*(ExtReal a, ExtReal b) {
        if (a.v_ == 0.0 || b.v_ == 0.0) return ExtReal(0.0);
        return ExtReal(a.v_ * b.v_);
    }

    friend ExtReal operator/(ExtReal a, ExtReal b) {
        if (a.v_ == 0.0) return ExtReal(0.0);          // 0/x = 0, including 0/0
        if (a.is_inf() && b.is_inf()) return ExtReal(0.0);
        if (b.v_ == 0.0) return ExtReal(kInf);         // x/0 = inf for x > 0
        return ExtReal(a.v_ / b.v_);
    }

    ExtReal& operator+=(ExtReal b) { *this = *this + b; return *this; }
    ExtReal& operator*=(ExtReal b) { *this = *this * b; return *this; }

    friend constexpr bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
    friend constexpr bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
    friend constexpr bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
    friend constexpr bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

    friend ExtReal max(ExtReal a, ExtReal b) { return a.v_ < b.v_ ? b : a; }
    friend ExtReal min(ExtReal a, ExtReal b) { return a.v_ < b.v_ ? a : b; }

    friend std::ostream& operator<<(std::ostream& os, ExtReal a) {
        if (a.is_inf()) return os << "inf";
        return os << a.v_;
    }

private:
    double v_;
};

// x^s on [0,inf] with 0^0 = 1, inf^0 = 1, 0^s = inf for s < 0.
inline ExtReal xpow(ExtReal x, double s) {
    if (s == 0.0) return ExtReal(1.0);
    if (x.is_zero()) return s > 0.0 ? ExtReal(0.0) : ExtReal::inf();
    if (x.is_inf()) return s > 0.0 ? ExtReal::inf() : ExtReal(0.0);
    return ExtReal(std::pow(x.get(), s));
}

// Raw-double helpers for hot loops; same conventions, no wrapping.
inline double xmul(double a, double b) { return (a == 0.0 || b == 0.0) ? 0.0 : a * b; }

inline double xdiv(double a, double b) {
    if (a == 0.0) return 0.0;
    if (a == kInf && b == kInf) return 0.0;
    if (b == 0.0) return kInf;
    return a / b;
}

} // namespace hardykit
