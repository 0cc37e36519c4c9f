#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hardykit/envelopes.hpp"
#include "hardykit/ext_real.hpp"
#include "hardykit/grid.hpp"
#include "hardykit/power_law.hpp"
#include "hardykit/weights.hpp"

namespace hardykit {

struct Atom {
    double loc;
    double mass;
};

/// Non-negative Borel measure on [0,inf): point masses, an absolutely
/// continuous part, and a Lebesgue-Stieltjes part m(t) d(-G(t-)^r) generated
/// by a nonincreasing envelope G (with an optional multiplier density m).
class BorelMeasure {
public:
    struct StieltjesPart {
        std::shared_ptr<const Envelope> G;            // nonincreasing
        double r = 1.0;
        std::shared_ptr<const Envelope> multiplier;   // optional density against d(-G^r)
    };

    BorelMeasure() = default;

    static BorelMeasure zero() { return {}; }

    static BorelMeasure from_density(RadialWeight w) {
        BorelMeasure m;
        m.density_ = std::move(w);
        return m;
    }

    static BorelMeasure from_atoms(std::vector<Atom> atoms) {
        BorelMeasure m;
        m.atoms_ = std::move(atoms);
        return m;
    }

    static BorelMeasure from_stieltjes(std::shared_ptr<const Envelope> G, double r,
                                       std::shared_ptr<const Envelope> multiplier = nullptr) {
        BorelMeasure m;
        m.stj_ = StieltjesPart{std::move(G), r, std::move(multiplier)};
        return m;
    }

    BorelMeasure& add_atom(double loc, double mass) {
        if (loc < 0.0 || mass <= 0.0)
            throw std::domain_error("measure: atoms need loc >= 0 and mass > 0");
        atoms_.push_back({loc, mass});
        return *this;
    }

    BorelMeasure& set_density(RadialWeight w) { density_ = std::move(w); return *this; }

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::optional<RadialWeight>& density() const { return density_; }
    const std::optional<StieltjesPart>& stieltjes() const { return stj_; }

    bool empty() const { return atoms_.empty() && !density_ && !stj_; }

    /// Density-equivalent tail behaviours of each continuous part.
    std::vector<PowerTerm> tail_parts(End end) const {
        std::vector<PowerTerm> parts;
        if (density_) parts.push_back(density_->transformed_tail(1.0, 0.0, end));
        if (stj_) {
            PowerTerm g = end == End::Zero ? stj_->G->tail0() : stj_->G->tailinf();
            PowerTerm d = tail_derivative_abs(g.pow(stj_->r), end);
            if (stj_->multiplier) {
                PowerTerm m = end == End::Zero ? stj_->multiplier->tail0()
                                               : stj_->multiplier->tailinf();
                d = d * m;
            }
            parts.push_back(d);
        }
        return parts;
    }

    bool tail_mass_diverges(End end) const {
        for (const PowerTerm& p : tail_parts(end))
            if (tail_integral_diverges(p, end)) return true;
        return false;
    }

    /// Grid snap points: atom locations, density breakpoints, jump points of G.
    std::vector<double> snap_points() const {
        std::vector<double> s;
        for (const Atom& a : atoms_)
            if (a.loc > 0.0) s.push_back(a.loc);
        if (density_)
            for (double b : density_->breakpoints()) s.push_back(b);
        if (stj_)
            for (double b : stj_->G->jumps()) s.push_back(b);
        return s;
    }

private:
    std::vector<Atom> atoms_;
    std::optional<RadialWeight> density_;
    std::optional<StieltjesPart> stj_;
};

/// Measure discretized to quadrature nodes over the grid range, with the
/// remaining mass described by tail power terms.  Nodes are exact for atoms;
/// densities use Gauss-Legendre per cell and Stieltjes parts midpoint sums on
/// subdivided cells with exact jump masses at envelope jump points.
struct GridMeasure {
    std::vector<double> t;
    std::vector<double> m;
    std::vector<PowerTerm> tail0, tailinf;
    double lo = 0.0, hi = kInf;     // nodes cover [lo, hi)
    double atom_at_zero = 0.0;
};

inline GridMeasure build_grid_measure(const BorelMeasure& mu, const LogGrid& grid,
                                      const GridConfig& cfg, int sub) {
    GridMeasure gm;
    gm.lo = grid.front();
    gm.hi = grid.back();
    gm.tail0 = mu.tail_parts(End::Zero);
    gm.tailinf = mu.tail_parts(End::Inf);

    std::vector<std::pair<double, double>> nodes;
    const auto& pts = grid.pts();

    if (mu.density()) {
        const RadialWeight& w = *mu.density();
        auto xs = gl_nodes(cfg.gl_order);
        auto ws = gl_weights(cfg.gl_order);
        for (size_t c = 0; c + 1 < pts.size(); ++c) {
            double la = std::log(pts[c]), lb = std::log(pts[c + 1]);
            double h = lb - la, mid = 0.5 * (la + lb);
            for (size_t j = 0; j < xs.size(); ++j) {
                double tt = std::exp(mid + 0.5 * h * xs[j]);
                double mass = ws[j] * 0.5 * h * w.value(tt) * tt;
                if (mass > 0.0) nodes.emplace_back(tt, mass);
            }
        }
    }

    if (mu.stieltjes()) {
        const auto& sp = *mu.stieltjes();
        const Envelope& G = *sp.G;
        double r = sp.r;
        auto mult = [&](double tt) {
            return sp.multiplier ? sp.multiplier->value(tt).get() : 1.0;
        };
        for (size_t c = 0; c + 1 < pts.size(); ++c) {
            double la = std::log(pts[c]), lb = std::log(pts[c + 1]);
            double h = (lb - la) / sub;
            for (int j = 0; j < sub; ++j) {
                double a = std::exp(la + h * j);
                double b = j + 1 == sub ? pts[c + 1] : std::exp(la + h * (j + 1));
                double ga = G.value(a).get(), gb = G.left_value(b).get();
                // jump mass at the left edge (left limit vs value)
                double gal = G.left_value(a).get();
                if (gal > ga) {
                    double jm = xmul(mult(a), xpow(ExtReal(gal), r).get() -
                                                  xpow(ExtReal(ga), r).get());
                    if (jm > 0.0 && std::isfinite(jm)) nodes.emplace_back(a, jm);
                }
                if (!(ga > gb)) continue;
                double dg = xpow(ExtReal(ga), r).get() - xpow(ExtReal(gb), r).get();
                if (!(dg > 0.0) || !std::isfinite(dg)) continue;
                double tm = std::exp(0.5 * (std::log(a) + std::log(b)));
                double mass = xmul(mult(tm), dg);
                if (mass > 0.0) nodes.emplace_back(tm, mass);
            }
        }
    }

    for (const Atom& a : mu.atoms()) {
        if (a.loc == 0.0) gm.atom_at_zero += a.mass;
        else nodes.emplace_back(a.loc, a.mass);
    }

    std::sort(nodes.begin(), nodes.end());
    gm.t.reserve(nodes.size());
    gm.m.reserve(nodes.size());
    for (auto& [tt, mm] : nodes) {
        gm.t.push_back(tt);
        gm.m.push_back(mm);
    }
    return gm;
}

/// Integrand with tail descriptions for improper endpoints.
struct Integrand {
    std::function<double(double)> f;
    PowerTerm tail0 = PowerTerm::zero();
    PowerTerm tailinf = PowerTerm::zero();
    double at_zero = 0.0;   // value used for an atom sitting exactly at 0
};

struct StieltjesResult {
    ExtReal value;
    bool diverges_at_zero = false;
    bool diverges_at_inf = false;
};

/// ∫_{[a,b)} F dmu with atoms at a included and at b excluded; a = 0 and
/// b = inf use the closed-form tail descriptions.
inline StieltjesResult stieltjes_integral_full(const Integrand& F, const BorelMeasure& mu,
                                               double a, double b, const LogGrid& grid,
                                               const GridConfig& cfg) {
    GridMeasure gm = build_grid_measure(mu, grid, cfg, cfg.stieltjes_sub);
    StieltjesResult res;
    double acc = 0.0;

    auto lo_it = std::lower_bound(gm.t.begin(), gm.t.end(), a);
    for (size_t i = lo_it - gm.t.begin(); i < gm.t.size() && gm.t[i] < b; ++i)
        acc += xmul(F.f(gm.t[i]), gm.m[i]);

    if (a == 0.0) {
        if (gm.atom_at_zero > 0.0) acc += xmul(F.at_zero, gm.atom_at_zero);
        for (const PowerTerm& p : gm.tail0) {
            PowerTerm q = p * F.tail0;
            if (tail_integral_diverges(q, End::Zero)) res.diverges_at_zero = true;
            else acc += tail_integral_value(q, End::Zero, gm.lo).get();
        }
    }
    if (b == kInf) {
        for (const PowerTerm& p : gm.tailinf) {
            PowerTerm q = p * F.tailinf;
            if (tail_integral_diverges(q, End::Inf)) res.diverges_at_inf = true;
            else acc += tail_integral_value(q, End::Inf, gm.hi).get();
        }
    }

    res.value = (res.diverges_at_zero || res.diverges_at_inf) ? ExtReal::inf() : ExtReal(acc);
    return res;
}

inline ExtReal stieltjes_integral(const Integrand& F, const BorelMeasure& mu, double a, double b,
                                  const LogGrid& grid, const GridConfig& cfg) {
    return stieltjes_integral_full(F, mu, a, b, grid, cfg).value;
}

enum class NondegVerdict { Ok, FailsFiniteness, FailsZeroTail, FailsInfinityTail };

inline const char* nondeg_name(NondegVerdict v) {
    switch (v) {
        case NondegVerdict::Ok: return "ok";
        case NondegVerdict::FailsFiniteness: return "fails_finiteness";
        case NondegVerdict::FailsZeroTail: return "fails_zero_tail";
        case NondegVerdict::FailsInfinityTail: return "fails_infinity_tail";
    }
    return "?";
}

/// Non-degeneracy of mu with respect to U^s: the smoothing integrals
/// ∫ dmu / (U(t)^s + U(x)^s) must be finite while ∫_{[0,1]} dmu / U^s and
/// ∫_{[1,inf)} dmu are infinite.  All divergence decisions come from the
/// declared tail exponents, never from truncated quadrature.
inline NondegVerdict check_nondegenerate(const BorelMeasure& mu, const Envelope& U, double s) {
    PowerTerm u0 = U.tail0(), ui = U.tailinf();

    // finiteness: mass near zero finite, and dmu / U^s integrable at infinity
    if (mu.tail_mass_diverges(End::Zero)) return NondegVerdict::FailsFiniteness;
    for (const PowerTerm& p : mu.tail_parts(End::Inf))
        if (tail_integral_diverges(p * ui.pow(-s), End::Inf))
            return NondegVerdict::FailsFiniteness;

    // ∫_{[0,1]} dmu / U^s = inf: an atom at 0 (U(0) = 0) does it, otherwise
    // the zero tail of dmu / U^s must diverge
    bool zero_ok = false;
    for (const Atom& a : mu.atoms())
        if (a.loc == 0.0) zero_ok = true;
    for (const PowerTerm& p : mu.tail_parts(End::Zero))
        if (tail_integral_diverges(p * u0.pow(-s), End::Zero)) zero_ok = true;
    if (!zero_ok) return NondegVerdict::FailsZeroTail;

    if (!mu.tail_mass_diverges(End::Inf)) return NondegVerdict::FailsInfinityTail;
    return NondegVerdict::Ok;
}

/// phi(x) = ∫_{[0,inf)} (U(x) / (U(y) + U(x)))^s dmu(y): the fundamental
/// function of mu with respect to U^s, evaluated pointwise.
inline ExtReal fundamental_value(const Envelope& U, double s, const BorelMeasure& mu, double x,
                                 const LogGrid& grid, const GridConfig& cfg) {
    double ux = U.value(x).get();
    Integrand F;
    F.f = [&U, ux, s](double y) {
        return std::pow(cal_kernel(ux, U.value(y).get()), s);
    };
    double lim0 = tail_limit(U.tail0(), End::Zero).get();
    F.tail0 = PowerTerm::constant(std::pow(cal_kernel(ux, lim0), s));
    F.at_zero = std::pow(cal_kernel(ux, 0.0), s);
    ExtReal uinf = tail_limit(U.tailinf(), End::Inf);
    if (uinf.is_inf())
        F.tailinf = U.tailinf().pow(-s) * PowerTerm::constant(std::pow(ux, s));
    else
        F.tailinf = PowerTerm::constant(std::pow(cal_kernel(ux, uinf.get()), s));
    return stieltjes_integral(F, mu, 0.0, kInf, grid, cfg);
}

inline double fit_coef(const PowerTerm& shape, double t, double val, End end) {
    if (!std::isfinite(val) || val <= 0.0) return val == kInf ? kInf : 0.0;
    PowerTerm unit{1.0, shape.expo, shape.logpow};
    double base = unit.value_at(t, end);
    return base > 0.0 && std::isfinite(base) ? val / base : val;
}

/// phi sampled on the whole grid as a SampledEnvelope, sharing one node set.
/// Tail exponents are symbolic; tail coefficients are matched to the edge
/// samples for continuity.
inline std::shared_ptr<SampledEnvelope> fundamental_envelope(
    const Envelope& U, double s, const BorelMeasure& mu,
    std::shared_ptr<const LogGrid> grid, const GridConfig& cfg) {
    GridMeasure gm = build_grid_measure(mu, *grid, cfg, cfg.kernel_sub);
    const auto& pts = grid->pts();
    size_t n = pts.size(), k = gm.t.size();

    std::vector<double> unode(k);
    for (size_t j = 0; j < k; ++j) unode[j] = U.value(gm.t[j]).get();

    PowerTerm ui = U.tailinf();
    ExtReal uinf_lim = tail_limit(ui, End::Inf);
    double u0_lim = tail_limit(U.tail0(), End::Zero).get();

    std::vector<double> vals(n);
    for (size_t i = 0; i < n; ++i) {
        double ux = U.value(pts[i]).get();
        double acc = xmul(gm.atom_at_zero, std::pow(cal_kernel(ux, 0.0), s));
        if (s == 1.0) {
            for (size_t j = 0; j < k; ++j) acc += gm.m[j] * cal_kernel(ux, unode[j]);
        } else {
            for (size_t j = 0; j < k; ++j)
                acc += gm.m[j] * std::pow(cal_kernel(ux, unode[j]), s);
        }
        // tail mass beyond the node range
        double k0 = std::pow(cal_kernel(ux, u0_lim), s);
        for (const PowerTerm& p : gm.tail0)
            acc += tail_integral_value(p * PowerTerm::constant(k0), End::Zero, gm.lo).get();
        if (uinf_lim.is_inf()) {
            PowerTerm kin = ui.pow(-s) * PowerTerm::constant(std::pow(ux, s));
            for (const PowerTerm& p : gm.tailinf)
                acc += tail_integral_value(p * kin, End::Inf, gm.hi).get();
        } else {
            double ki = std::pow(cal_kernel(ux, uinf_lim.get()), s);
            for (const PowerTerm& p : gm.tailinf)
                acc += tail_integral_value(p * PowerTerm::constant(ki), End::Inf, gm.hi).get();
        }
        vals[i] = acc;
    }

    // phi tails: near zero phi ~ U^s * ∫_x U^{-s} dmu, near infinity the
    // accumulated mass function; exponents are symbolic, coefficients matched
    // at the grid edges.
    PowerTerm t0;
    {
        PowerTerm u0 = U.tail0();
        PowerTerm acc0 = PowerTerm::zero();
        for (const PowerTerm& p : gm.tail0) {
            PowerTerm q = p * u0.pow(-s);
            if (tail_integral_diverges(q, End::Zero)) {
                PowerTerm g = suffix_growth_at_zero(q);
                PowerTerm cand = u0.pow(s) * g;
                if (cand.expo < acc0.expo || acc0.is_zero()) acc0 = cand;
            }
        }
        t0 = acc0.is_zero() ? u0.pow(s) : acc0;
        t0.coef = fit_coef(t0, pts.front(), vals.front(), End::Zero);
    }
    PowerTerm ti;
    {
        PowerTerm growth = PowerTerm::zero();
        for (const PowerTerm& p : gm.tailinf)
            if (tail_integral_diverges(p, End::Inf)) {
                PowerTerm g = prefix_growth_at_inf(p);
                if (g.expo > growth.expo || growth.is_zero()) growth = g;
            }
        ti = growth.is_zero() ? PowerTerm::constant(vals.back()) : growth;
        ti.coef = fit_coef(ti, pts.back(), vals.back(), End::Inf);
    }

    return std::make_shared<SampledEnvelope>(std::move(grid), std::move(vals), t0, ti, +1);
}

} // namespace hardykit
