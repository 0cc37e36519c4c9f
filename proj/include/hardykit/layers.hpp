#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>
#include <vector>

#include "hardykit/envelopes.hpp"
#include "hardykit/stieltjes.hpp"

namespace hardykit {

/// Which of two power-term behaviours dominates (grows faster / decays
/// slower) toward the given end.
inline PowerTerm dominant(PowerTerm a, PowerTerm b, End end) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    double ea = end == End::Inf ? a.expo : -a.expo;
    double eb = end == End::Inf ? b.expo : -b.expo;
    if (ea != eb) return ea > eb ? a : b;
    if (a.logpow != b.logpow) return a.logpow > b.logpow ? a : b;
    return a.coef >= b.coef ? a : b;
}

/// One multiplicative factor of a condition: values on the grid, tail
/// behaviours, and an exact global power law when the factor is a pure power
/// (single-segment weights, no restriction).
struct Layer {
    std::shared_ptr<const LogGrid> grid;
    std::vector<double> vals;
    PowerTerm tail0, tailinf;
    std::optional<PowerTerm> global;

    bool identically_infinite() const {
        return tail0.is_infinite() || tailinf.is_infinite();
    }
};

inline double layer_value_at(const Layer& l, double t) {
    const auto& p = l.grid->pts();
    if (t <= p.front()) {
        ExtReal lim = tail_limit(l.tail0, End::Zero);
        if (lim.is_inf() || l.tail0.is_zero()) return lim.get();
        double v = l.tail0.value_at(t, End::Zero);
        return std::isfinite(v) ? v : l.vals.front();
    }
    if (t >= p.back()) {
        ExtReal lim = tail_limit(l.tailinf, End::Inf);
        if (lim.is_inf() || l.tailinf.is_zero()) return lim.get();
        double v = l.tailinf.value_at(t, End::Inf);
        return std::isfinite(v) ? v : l.vals.back();
    }
    auto it = std::lower_bound(p.begin(), p.end(), t);
    size_t i = it - p.begin();
    if (p[i] == t) return l.vals[i];
    double v0 = l.vals[i - 1], v1 = l.vals[i];
    if (v0 == kInf || v1 == kInf) return kInf;
    if (v0 <= 0.0 || v1 <= 0.0)
        return v0 + (v1 - v0) * (t - p[i - 1]) / (p[i] - p[i - 1]);
    double w = std::log(t / p[i - 1]) / std::log(p[i] / p[i - 1]);
    return std::exp(std::log(v0) * (1.0 - w) + std::log(v1) * w);
}

inline Layer make_layer(const Envelope& e, std::shared_ptr<const LogGrid> grid,
                        bool allow_global = true) {
    Layer l;
    l.grid = std::move(grid);
    const auto& pts = l.grid->pts();
    l.vals.resize(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) l.vals[i] = e.value(pts[i]).get();
    l.tail0 = e.tail0();
    l.tailinf = e.tailinf();
    if (allow_global) l.global = e.global_power();
    if (e.identically_infinite()) { l.tail0 = PowerTerm::infinite(); l.tailinf = PowerTerm::infinite(); }
    return l;
}

inline Layer make_const_layer(double c, std::shared_ptr<const LogGrid> grid) {
    Layer l;
    l.grid = std::move(grid);
    l.vals.assign(l.grid->size(), c);
    l.tail0 = l.tailinf = PowerTerm::constant(c);
    l.global = PowerTerm::constant(c);
    return l;
}

inline Layer lmul(const Layer& a, const Layer& b) {
    Layer l;
    l.grid = a.grid;
    l.vals.resize(a.vals.size());
    for (size_t i = 0; i < a.vals.size(); ++i) l.vals[i] = xmul(a.vals[i], b.vals[i]);
    l.tail0 = a.tail0 * b.tail0;
    l.tailinf = a.tailinf * b.tailinf;
    if (a.global && b.global) l.global = *a.global * *b.global;
    return l;
}

inline Layer lpow(const Layer& a, double s) {
    Layer l;
    l.grid = a.grid;
    l.vals.resize(a.vals.size());
    for (size_t i = 0; i < a.vals.size(); ++i) l.vals[i] = xpow(ExtReal(a.vals[i]), s).get();
    l.tail0 = a.tail0.pow(s);
    l.tailinf = a.tailinf.pow(s);
    if (a.global) l.global = a.global->pow(s);
    return l;
}

/// sup over (0,inf): exact for global power laws (finite only on exponent
/// balance), otherwise grid max with one Newton-style log-log refinement plus
/// the symbolic tail limits.
inline ExtReal lsup(const Layer& a) {
    if (a.global) {
        const PowerTerm& g = *a.global;
        if (g.is_zero()) return ExtReal(0.0);
        if (g.expo == 0.0 && g.logpow == 0.0) return ExtReal(g.coef);
        return ExtReal::inf();
    }
    ExtReal best(0.0);
    size_t arg = 0;
    for (size_t i = 0; i < a.vals.size(); ++i)
        if (a.vals[i] > best.get()) { best = ExtReal(a.vals[i]); arg = i; }

    if (!best.is_inf() && arg > 0 && arg + 1 < a.vals.size()) {
        double v0 = a.vals[arg - 1], v1 = a.vals[arg], v2 = a.vals[arg + 1];
        if (v0 > 0.0 && v1 > 0.0 && v2 > 0.0 && std::isfinite(v0 + v1 + v2)) {
            const auto& p = a.grid->pts();
            double x0 = std::log(p[arg - 1]), x1 = std::log(p[arg]), x2 = std::log(p[arg + 1]);
            double y0 = std::log(v0), y1 = std::log(v1), y2 = std::log(v2);
            double d1 = (y1 - y0) / (x1 - x0), d2 = (y2 - y1) / (x2 - x1);
            double curv = (d2 - d1) / (0.5 * (x2 - x0));
            if (curv < 0.0) {
                double slope = 0.5 * (d1 + d2);
                double xs = x1 - slope / curv;
                if (xs > x0 && xs < x2) {
                    double ys = y1 + slope * (xs - x1) + 0.5 * curv * (xs - x1) * (xs - x1);
                    best = max(best, ExtReal(std::exp(ys)));
                }
            }
        }
    }

    best = max(best, tail_limit(a.tail0, End::Zero));
    best = max(best, tail_limit(a.tailinf, End::Inf));
    return best;
}

/// ∫_0^inf layer dt: trapezoid in log coordinates on the sampled values plus
/// symbolic tails.  A nonzero global power law is never integrable on all of
/// (0,inf).
inline ExtReal lintegral(const Layer& a) {
    if (a.global) {
        if (a.global->is_zero()) return ExtReal(0.0);
        return ExtReal::inf();
    }
    if (tail_integral_diverges(a.tail0, End::Zero) || tail_integral_diverges(a.tailinf, End::Inf))
        return ExtReal::inf();
    const auto& p = a.grid->pts();
    double acc = 0.0;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        double g0 = a.vals[i] * p[i], g1 = a.vals[i + 1] * p[i + 1];
        if (!std::isfinite(g0) || !std::isfinite(g1)) return ExtReal::inf();
        acc += 0.5 * (g0 + g1) * std::log(p[i + 1] / p[i]);
    }
    acc += tail_integral_value(a.tail0, End::Zero, p.front()).get();
    acc += tail_integral_value(a.tailinf, End::Inf, p.back()).get();
    return ExtReal(acc);
}

/// Integral of the layer against measure nodes and tails.
inline ExtReal lint_measure(const Layer& a, const GridMeasure& gm) {
    double acc = 0.0;
    if (gm.atom_at_zero > 0.0)
        acc += xmul(tail_limit(a.tail0, End::Zero).get(), gm.atom_at_zero);
    for (size_t j = 0; j < gm.t.size(); ++j) {
        acc += xmul(layer_value_at(a, gm.t[j]), gm.m[j]);
        if (acc == kInf) return ExtReal::inf();
    }
    for (const PowerTerm& p : gm.tail0) {
        PowerTerm q = p * a.tail0;
        if (tail_integral_diverges(q, End::Zero)) return ExtReal::inf();
        acc += tail_integral_value(q, End::Zero, gm.lo).get();
    }
    for (const PowerTerm& p : gm.tailinf) {
        PowerTerm q = p * a.tailinf;
        if (tail_integral_diverges(q, End::Inf)) return ExtReal::inf();
        acc += tail_integral_value(q, End::Inf, gm.hi).get();
    }
    return ExtReal(acc);
}

namespace detail {

inline void fit_layer_tails(Layer& l, PowerTerm cand0, PowerTerm candinf) {
    const auto& pts = l.grid->pts();
    if (!cand0.is_infinite() && !cand0.is_zero())
        cand0.coef = fit_coef(cand0, pts.front(), l.vals.front(), End::Zero);
    if (!candinf.is_infinite() && !candinf.is_zero())
        candinf.coef = fit_coef(candinf, pts.back(), l.vals.back(), End::Inf);
    l.tail0 = cand0;
    l.tailinf = candinf;
}

} // namespace detail

/// W(x) = sup_t K(t,x)^a E(t) with K(t,x) = U(t) / (U(t) + U(x)).
/// If U^a E blows up at t -> 0 the sup is +inf for every x.  Tail exponents
/// of W are symbolic (dominance of the escape routes), coefficients are
/// matched to the computed edge samples.
inline Layer kernel_sup_layer(const Envelope& U, double a, const Envelope& E,
                              std::shared_ptr<const LogGrid> grid) {
    Layer l;
    l.grid = grid;
    const auto& pts = grid->pts();
    size_t n = pts.size();

    PowerTerm ue0 = U.tail0().pow(a) * E.tail0();
    if (tail_limit(ue0, End::Zero).is_inf() || E.identically_infinite() ||
        U.identically_infinite()) {
        l.vals.assign(n, kInf);
        l.tail0 = l.tailinf = PowerTerm::infinite();
        return l;
    }
    double esc0 = tail_limit(ue0, End::Zero).get();   // lim U^a E at 0, finite here

    std::vector<double> ut(n), et(n);
    for (size_t i = 0; i < n; ++i) {
        ut[i] = U.value(pts[i]).get();
        et[i] = E.value(pts[i]).get();
    }
    double e_at_inf = tail_limit(E.tailinf(), End::Inf).get();
    double e_at_zero = tail_limit(E.tail0(), End::Zero).get();
    double u_at_inf = tail_limit(U.tailinf(), End::Inf).get();

    l.vals.resize(n);
    for (size_t j = 0; j < n; ++j) {
        double ux = ut[j];
        double best = 0.0;
        for (size_t i = 0; i < n; ++i) {
            double k = cal_kernel(ut[i], ux);
            double f = xmul(a == 1.0 ? k : std::pow(k, a), et[i]);
            if (f > best) best = f;
        }
        // escape candidates: t -> inf (K -> 1 when U(inf)=inf) and t -> 0
        best = std::max(best, xmul(std::pow(cal_kernel(u_at_inf, ux), a), e_at_inf));
        if (esc0 > 0.0 && ux > 0.0) best = std::max(best, esc0 * std::pow(ux, -a));
        l.vals[j] = best;
    }

    // x -> 0: K(t,x) -> 1, so W tends to sup E = E(0+); if infinite the
    // blow-up follows E near zero.
    PowerTerm cand0 = std::isfinite(e_at_zero)
                          ? PowerTerm::constant(std::max(e_at_zero, l.vals.front()))
                          : E.tail0();
    // x -> inf: freeze t in the bulk (W ~ C U(x)^{-a}) or run t ~ x (W ~ E(x)).
    PowerTerm candinf = dominant(U.tailinf().pow(-a), E.tailinf(), End::Inf);
    if (u_at_inf < kInf) candinf = PowerTerm::constant(l.vals.back());
    detail::fit_layer_tails(l, cand0, candinf);
    return l;
}

/// T(x) = ( ∫ K(t,x)^a dLambda(t) )^{1/root} for a Borel measure Lambda.
/// Used for the Stieltjes-type inner factors built from d(-V(t-)^r).
inline Layer kernel_int_layer(const Envelope& U, double a, const BorelMeasure& lam,
                              double root, std::shared_ptr<const LogGrid> grid,
                              const GridConfig& cfg) {
    GridMeasure gm = build_grid_measure(lam, *grid, cfg, cfg.kernel_sub);
    Layer l;
    l.grid = grid;
    const auto& pts = grid->pts();
    size_t n = pts.size(), k = gm.t.size();

    std::vector<double> un(k);
    for (size_t j = 0; j < k; ++j) un[j] = U.value(gm.t[j]).get();
    PowerTerm u0 = U.tail0(), ui = U.tailinf();
    ExtReal uinf_lim = tail_limit(ui, End::Inf);

    // ∫_0 U(t)^a dLambda or infinite mass at infinity makes T infinite everywhere
    bool ident_inf = U.identically_infinite();
    for (const PowerTerm& p : gm.tail0)
        if (tail_integral_diverges(p * u0.pow(a), End::Zero)) ident_inf = true;
    for (const PowerTerm& p : gm.tailinf)
        if (tail_integral_diverges(p, End::Inf)) ident_inf = true;
    if (ident_inf) {
        l.vals.assign(n, kInf);
        l.tail0 = l.tailinf = PowerTerm::infinite();
        return l;
    }

    l.vals.resize(n);
    for (size_t j = 0; j < n; ++j) {
        double ux = U.value(pts[j]).get();
        double acc = 0.0;
        for (size_t i = 0; i < k; ++i) {
            double kk = cal_kernel(un[i], ux);
            acc += xmul(a == 1.0 ? kk : std::pow(kk, a), gm.m[i]);
        }
        // node-range tails: near zero K ~ (U(t)/U(x))^a, near inf K -> K(U(inf),x)
        PowerTerm k0 = ux == 0.0 ? PowerTerm::constant(1.0)
                                 : u0.pow(a) * PowerTerm::constant(std::pow(ux, -a));
        for (const PowerTerm& p : gm.tail0)
            acc += tail_integral_value(p * k0, End::Zero, gm.lo).get();
        double kinf = uinf_lim.is_inf() ? 1.0 : cal_kernel(uinf_lim.get(), ux);
        for (const PowerTerm& p : gm.tailinf)
            acc += tail_integral_value(p * PowerTerm::constant(std::pow(kinf, a)), End::Inf, gm.hi)
                       .get();
        l.vals[j] = xpow(ExtReal(acc), 1.0 / root).get();
    }

    // symbolic tail exponents: at 0 the surviving mass Lambda((x,inf)) vs the
    // total; at inf the frozen bulk U(x)^{-a} vs the remaining mass.
    PowerTerm mass0 = PowerTerm::zero();
    for (const PowerTerm& p : gm.tail0)
        if (tail_integral_diverges(p, End::Zero))
            mass0 = dominant(mass0, suffix_growth_at_zero(p), End::Zero);
    PowerTerm cand0 =
        mass0.is_zero() ? PowerTerm::constant(l.vals.front()) : mass0.pow(1.0 / root);

    PowerTerm massinf = PowerTerm::zero();
    for (const PowerTerm& p : gm.tailinf) {
        PowerTerm s{p.coef / std::max(1e-300, -p.expo - 1.0), p.expo + 1.0, p.logpow};
        massinf = dominant(massinf, s, End::Inf);
    }
    PowerTerm candinf = dominant(ui.pow(-a), massinf, End::Inf).pow(1.0 / root);
    detail::fit_layer_tails(l, cand0, candinf);
    return l;
}

} // namespace hardykit
