#pragma once

#include <cmath>

#include "hardykit/ext_real.hpp"

namespace hardykit {

enum class End { Zero, Inf };

/// Leading-order behaviour c * t^e * log^L of a quantity near one endpoint of
/// (0, inf).  Near zero the log factor means ln(1/t), near infinity ln(t), so
/// the factor always tends to +inf when L > 0.  coef == 0 encodes the zero
/// function, coef == inf an identically divergent quantity.
struct PowerTerm {
    double coef = 0.0;
    double expo = 0.0;
    double logpow = 0.0;

    static constexpr PowerTerm zero() { return {0.0, 0.0, 0.0}; }
    static constexpr PowerTerm constant(double c) { return {c, 0.0, 0.0}; }
    static constexpr PowerTerm infinite() { return {kInf, 0.0, 0.0}; }

    bool is_zero() const { return coef == 0.0; }
    bool is_infinite() const { return coef == kInf; }

    friend PowerTerm operator*(PowerTerm a, PowerTerm b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return {xmul(a.coef, b.coef), a.expo + b.expo, a.logpow + b.logpow};
    }

    PowerTerm pow(double s) const {
        if (s == 0.0) return constant(1.0);
        if (is_zero()) return s > 0.0 ? zero() : infinite();
        double c = coef == kInf ? (s > 0.0 ? kInf : 0.0) : std::pow(coef, s);
        return {c, expo * s, logpow * s};
    }

    // Pointwise value at t, interpreting the log factor for the given end.
    double value_at(double t, End end) const {
        if (coef == 0.0) return 0.0;
        double lg = end == End::Zero ? std::log(1.0 / t) : std::log(t);
        if (lg <= 0.0) lg = 1e-300;   // outside the asymptotic regime; degrade gracefully
        double v = xmul(coef, std::pow(t, expo));
        if (logpow != 0.0) v = xmul(v, std::pow(lg, logpow));
        return v;
    }
};

/// Limit of the described quantity at its endpoint.
inline ExtReal tail_limit(PowerTerm p, End end) {
    if (p.is_zero()) return ExtReal(0.0);
    double e = end == End::Inf ? p.expo : -p.expo;
    if (e > 0.0 || (e == 0.0 && p.logpow > 0.0)) return ExtReal::inf();
    if (e == 0.0 && p.logpow == 0.0) return ExtReal(p.coef);
    return ExtReal(0.0);
}

/// Whether the integral of c t^e log^L dt over a neighbourhood of the
/// endpoint diverges.  At zero this is e < -1, or e == -1 with L >= -1; at
/// infinity e > -1, or e == -1 with L >= -1.
inline bool tail_integral_diverges(PowerTerm p, End end) {
    if (p.is_zero()) return false;
    if (p.is_infinite()) return true;
    if (p.expo == -1.0) return p.logpow >= -1.0;
    return end == End::Inf ? p.expo > -1.0 : p.expo < -1.0;
}

/// Remainder integral over (0,x) (End::Zero) or (x,inf) (End::Inf) when it
/// converges; +inf otherwise.  The log factor is treated as locally constant,
/// which is the correct leading order away from the critical exponent.
inline ExtReal tail_integral_value(PowerTerm p, End end, double x) {
    if (p.is_zero()) return ExtReal(0.0);
    if (tail_integral_diverges(p, end)) return ExtReal::inf();
    double lead = p.value_at(x, end);           // c x^e log^L
    // |∫| ~ x * lead / |e+1| toward the convergent side
    return ExtReal(lead * x / std::abs(p.expo + 1.0));
}

/// Growth of the prefix integral t -> ∫_0^t near infinity, assuming the full
/// integral diverges there (density tail p at End::Inf).
inline PowerTerm prefix_growth_at_inf(PowerTerm p) {
    if (p.is_zero()) return PowerTerm::zero();
    if (p.expo > -1.0) return {p.coef / (p.expo + 1.0), p.expo + 1.0, p.logpow};
    // e == -1: ∫ t^{-1} ln^L t dt = ln^{L+1} t / (L+1)
    return {p.coef / (p.logpow + 1.0), 0.0, p.logpow + 1.0};
}

/// Growth of the suffix integral t -> ∫_t^a near zero, assuming divergence
/// there (density tail p at End::Zero).
inline PowerTerm suffix_growth_at_zero(PowerTerm p) {
    if (p.is_zero()) return PowerTerm::zero();
    if (p.expo < -1.0) return {p.coef / (-p.expo - 1.0), p.expo + 1.0, p.logpow};
    // e == -1: ∫_t s^{-1} ln(1/s)^L ds = ln(1/t)^{L+1} / (L+1)
    return {p.coef / (p.logpow + 1.0), 0.0, p.logpow + 1.0};
}

/// Leading behaviour of |f'| for monotone f with tail p.
inline PowerTerm tail_derivative_abs(PowerTerm p, End end) {
    if (p.is_zero() || p.is_infinite()) return PowerTerm::zero();
    if (p.expo != 0.0) return {std::abs(p.coef * p.expo), p.expo - 1.0, p.logpow};
    if (p.logpow != 0.0) return {std::abs(p.coef * p.logpow), -1.0, p.logpow - 1.0};
    return PowerTerm::zero();   // constant tail: no variation
}

} // namespace hardykit
