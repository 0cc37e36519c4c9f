#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "hardykit/ext_real.hpp"

namespace hardykit {

/// Conjugate exponent: 1/p + 1/p' = 1.  p = 1 -> inf, p = inf -> 1.
inline double conjugate(double p) {
    if (p == 1.0) return kInf;
    if (p == kInf) return 1.0;
    return p / (p - 1.0);
}

inline double inv(double p) { return p == kInf ? 0.0 : 1.0 / p; }

/// Exponent tuple of a scenario with every derived quantity populated where
/// defined.  p1, p2, theta live in [1,inf]; q in (0,inf].
struct Exponents {
    int n = 1;
    double p1 = 2.0, p2 = 2.0, q = 2.0, theta = 2.0;

    double p1c = 2.0, p2c = 2.0, thetac = 2.0;   // conjugates

    std::optional<double> r1;    // 1/r1 = 1/q - 1/p1, defined iff q < p1
    std::optional<double> r2;    // 1/r2 = 1/q - 1/p2, defined iff q < p2
    double rho = kInf;           // 1/rho = (1/q - 1/theta)_+
    std::optional<double> r;     // 1/r = 1/p1 - 1/theta, defined iff p1 < theta
    std::optional<double> l;     // 1/l = 1/r1 - 1/p2, defined iff p2 > r1
};

inline Exponents derive_exponents(int n, double p1, double p2, double q, double theta) {
    if (n < 1) throw std::domain_error("exponents: dimension must be >= 1");
    if (!(q > 0.0)) throw std::domain_error("exponents: q must be positive");
    if (!(p1 >= 1.0) || !(p2 >= 1.0) || !(theta >= 1.0))
        throw std::domain_error("exponents: p1, p2, theta must lie in [1,inf]");

    Exponents e;
    e.n = n; e.p1 = p1; e.p2 = p2; e.q = q; e.theta = theta;
    e.p1c = conjugate(p1); e.p2c = conjugate(p2); e.thetac = conjugate(theta);

    if (q < p1) e.r1 = 1.0 / (inv(q) - inv(p1));
    if (q < p2) e.r2 = 1.0 / (inv(q) - inv(p2));
    double drho = inv(q) - inv(theta);
    e.rho = drho > 0.0 ? 1.0 / drho : kInf;
    if (p1 < theta) e.r = 1.0 / (inv(p1) - inv(theta));
    if (e.r1 && p2 > *e.r1) e.l = 1.0 / (1.0 / *e.r1 - inv(p2));
    return e;
}

/// Theorem case of a bilinear scenario.  Dispatch precedence: q = inf first,
/// then p1 = inf, then p1 <= q, then q < p1 < inf.  The letter/index inside
/// each family follows the p2 range of the corresponding theorem clause.
enum class CaseTag {
    T52a, T52b, T52c,                  // p1 <= q < inf
    T53i, T53ii, T53iii, T53iv,        // q < p1 < inf
    T54i, T54ii, T54iii,               // p1 = inf, q < inf
    T55a, T55b, T55c,                  // q = inf
};

inline CaseTag classify_case(const Exponents& e) {
    if (e.q == kInf) {
        if (e.p1 < kInf && e.p2 < kInf) return CaseTag::T55a;
        if (e.p1 == kInf && e.p2 == kInf) return CaseTag::T55c;
        return CaseTag::T55b;          // exactly one of p1, p2 infinite
    }
    if (e.p1 == kInf) {
        if (e.p2 <= e.q) return CaseTag::T54i;
        if (e.p2 < kInf) return CaseTag::T54ii;
        return CaseTag::T54iii;
    }
    if (e.p1 <= e.q) {
        if (e.p2 <= e.q) return CaseTag::T52a;
        if (e.p2 < kInf) return CaseTag::T52b;
        return CaseTag::T52c;
    }
    // q < p1 < inf: r1 defined
    double r1 = *e.r1;
    if (e.p2 <= e.q) return CaseTag::T53i;
    if (e.p2 <= r1) return CaseTag::T53ii;
    if (e.p2 < kInf) return CaseTag::T53iii;
    return CaseTag::T53iv;
}

inline const char* case_name(CaseTag t) {
    switch (t) {
        case CaseTag::T52a: return "T52a";
        case CaseTag::T52b: return "T52b";
        case CaseTag::T52c: return "T52c";
        case CaseTag::T53i: return "T53i";
        case CaseTag::T53ii: return "T53ii";
        case CaseTag::T53iii: return "T53iii";
        case CaseTag::T53iv: return "T53iv";
        case CaseTag::T54i: return "T54i";
        case CaseTag::T54ii: return "T54ii";
        case CaseTag::T54iii: return "T54iii";
        case CaseTag::T55a: return "T55a";
        case CaseTag::T55b: return "T55b";
        case CaseTag::T55c: return "T55c";
    }
    return "?";
}

} // namespace hardykit
