#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hardykit/exponents.hpp"
#include "hardykit/ext_real.hpp"
#include "hardykit/grid.hpp"
#include "hardykit/power_law.hpp"
#include "hardykit/special.hpp"
#include "hardykit/weights.hpp"

namespace hardykit {

/// Monotone function on (0,inf) with closed-form tail descriptions and a
/// left-limit accessor.  Concrete envelopes are the primitive U, tail norms
/// V_theta, prefix integrals, powers of envelopes, and sampled profiles such
/// as fundamental functions.
class Envelope {
public:
    virtual ~Envelope() = default;

    virtual ExtReal value(double t) const = 0;
    virtual ExtReal left_value(double t) const { return value(t); }
    virtual PowerTerm tail0() const = 0;
    virtual PowerTerm tailinf() const = 0;

    /// +1 nondecreasing, -1 nonincreasing, 0 unknown.
    virtual int direction() const { return 0; }

    /// Locations where the envelope may jump (left limit != value).
    virtual std::vector<double> jumps() const { return {}; }

    /// Exact c * t^e representation valid on all of (0,inf), when available.
    virtual std::optional<PowerTerm> global_power() const { return std::nullopt; }

    virtual bool identically_infinite() const { return false; }
};

/// U(t) = ∫_{lo}^{min(t,hi)} u(s) ds for a 1-D weight u, nondecreasing.
class PrimitiveU final : public Envelope {
public:
    explicit PrimitiveU(RadialWeight u, double lo = 0.0, double hi = kInf)
        : u_(std::move(u)), lo_(lo), hi_(hi) {
        diverges_ = u_.transformed_integral(1.0, 0.0, lo_, std::min(lo_ + 1.0, hi_)).is_inf();
        total_ = diverges_ ? ExtReal::inf() : u_.transformed_integral(1.0, 0.0, lo_, hi_);
    }

    const RadialWeight& weight() const { return u_; }
    double restrict_lo() const { return lo_; }
    double restrict_hi() const { return hi_; }

    ExtReal value(double t) const override {
        if (diverges_) return ExtReal::inf();
        if (t <= lo_) return ExtReal(0.0);
        return u_.transformed_integral(1.0, 0.0, lo_, std::min(t, hi_));
    }

    PowerTerm tail0() const override {
        if (diverges_) return PowerTerm::infinite();
        if (lo_ > 0.0) return PowerTerm::zero();
        PowerTerm d = u_.transformed_tail(1.0, 0.0, End::Zero);
        if (d.is_zero()) return PowerTerm::zero();
        return {d.coef / (d.expo + 1.0), d.expo + 1.0, 0.0};
    }

    PowerTerm tailinf() const override {
        if (diverges_) return PowerTerm::infinite();
        if (total_.finite()) return PowerTerm::constant(total_.get());
        return prefix_growth_at_inf(u_.transformed_tail(1.0, 0.0, End::Inf));
    }

    int direction() const override { return +1; }

    std::optional<PowerTerm> global_power() const override {
        if (diverges_ || lo_ != 0.0 || hi_ != kInf || !u_.is_pure_power()) return std::nullopt;
        const PowerSegment& s = u_.segments().front();
        if (s.coef == 0.0) return PowerTerm::zero();
        return PowerTerm{s.coef / (s.expo + 1.0), s.expo + 1.0, 0.0};
    }

    bool identically_infinite() const override { return diverges_; }

private:
    RadialWeight u_;
    double lo_, hi_;
    bool diverges_;
    ExtReal total_;
};

/// V_theta(t): the theta'-norm of v^{-1/theta} over the dual ball of radius t
/// (restricted to the shell S[lo,hi) when given), reduced to one dimension by
/// radial symmetry.  theta = 1 uses the ess-sup branch, theta = inf the
/// integral of v^{-1}.  Nonincreasing in t.
class TailNorm final : public Envelope {
public:
    TailNorm(RadialWeight v, double theta, double lo = 0.0, double hi = kInf)
        : v_(std::move(v)), theta_(theta), lo_(lo), hi_(hi) {
        sigma_ = sphere_surface(v_.dim());
        if (theta_ == kInf) { g_ = -1.0; p_ = 1.0; }
        else if (theta_ == 1.0) { g_ = -1.0; p_ = kInf; }
        else { p_ = conjugate(theta_); g_ = -p_ / theta_; }
        inf_tail_diverges_ = compute_inf_divergence();
    }

    double theta() const { return theta_; }

    ExtReal value(double t) const override { return value_impl(t); }

    ExtReal left_value(double t) const override {
        if (theta_ != 1.0) return value(t);
        // ess-sup branch can jump at weight breakpoints; approach from the left
        ExtReal right = value(t);
        if (t <= std::max(lo_, 0.0) || t > hi_) return right;
        for (const PowerSegment& s : v_.segments()) {
            if (s.hi == t) {
                double c = s.coef == 0.0 ? kInf : (s.coef == kInf ? 0.0 : std::pow(s.coef, -1.0));
                return max(right, ExtReal(xmul(c, std::pow(t, -s.expo))));
            }
        }
        return right;
    }

    std::vector<double> jumps() const override {
        if (theta_ != 1.0) return {};
        return v_.breakpoints();
    }

    PowerTerm tail0() const override {
        if (inf_tail_diverges_) return PowerTerm::infinite();
        if (lo_ > 0.0) return const_or_inf(value_impl(0.0));
        if (p_ == kInf) {
            const PowerSegment& s = v_.segments().front();
            if (s.coef == 0.0) return PowerTerm::infinite();
            if (s.coef != kInf && s.expo > 0.0) return {std::pow(s.coef, -1.0), -s.expo, 0.0};
            return const_or_inf(value_impl(0.0));
        }
        PowerTerm d = v_.transformed_tail(g_, v_.dim() - 1.0, End::Zero);
        if (!tail_integral_diverges(d, End::Zero)) return const_or_inf(value_impl(0.0));
        PowerTerm w = suffix_growth_at_zero(d);
        w.coef *= sigma_;
        return theta_ == kInf ? w : w.pow(1.0 / p_);
    }

    PowerTerm tailinf() const override {
        if (inf_tail_diverges_) return PowerTerm::infinite();
        if (hi_ < kInf) return PowerTerm::zero();
        if (p_ == kInf) {
            const PowerSegment& s = v_.segments().back();
            if (s.coef == kInf) return PowerTerm::zero();
            if (s.expo > 0.0) return {std::pow(s.coef, -1.0), -s.expo, 0.0};
            return PowerTerm::constant(std::pow(s.coef, -1.0));   // expo == 0
        }
        PowerTerm d = v_.transformed_tail(g_, v_.dim() - 1.0, End::Inf);
        if (d.is_zero()) return PowerTerm::zero();
        PowerTerm w{sigma_ * d.coef / (-d.expo - 1.0), d.expo + 1.0, 0.0};
        return theta_ == kInf ? w : w.pow(1.0 / p_);
    }

    int direction() const override { return -1; }

    std::optional<PowerTerm> global_power() const override {
        if (inf_tail_diverges_ || lo_ != 0.0 || hi_ != kInf || !v_.is_pure_power())
            return std::nullopt;
        const PowerSegment& s = v_.segments().front();
        if (s.coef == kInf) return PowerTerm::zero();
        if (p_ == kInf) {
            if (s.coef == 0.0) return PowerTerm::infinite();
            return PowerTerm{std::pow(s.coef, -1.0), -s.expo, 0.0};   // expo >= 0 here
        }
        // pure power integrand: the suffix integral has one closed form for all t
        PowerTerm d = v_.transformed_tail(g_, v_.dim() - 1.0, End::Inf);
        if (d.is_zero()) return PowerTerm::zero();
        PowerTerm w{sigma_ * d.coef / (-d.expo - 1.0), d.expo + 1.0, 0.0};
        return theta_ == kInf ? w : w.pow(1.0 / p_);
    }

    bool identically_infinite() const override { return inf_tail_diverges_; }

private:
    static PowerTerm const_or_inf(ExtReal v) {
        return v.is_inf() ? PowerTerm::infinite() : PowerTerm::constant(v.get());
    }

    bool compute_inf_divergence() const {
        if (hi_ < kInf || v_.is_infinite()) return false;
        const PowerSegment& s = v_.segments().back();
        if (p_ == kInf) return s.coef == 0.0 || s.expo < 0.0;
        return tail_integral_diverges(v_.transformed_tail(g_, v_.dim() - 1.0, End::Inf), End::Inf);
    }

    ExtReal value_impl(double t) const {
        double a = std::max(t, lo_);
        if (a >= hi_) return ExtReal(0.0);
        if (p_ == kInf) return v_.esssup_pow(-1.0, a, hi_);
        ExtReal w = v_.transformed_integral(g_, v_.dim() - 1.0, a, hi_);
        if (theta_ == kInf) return ExtReal(sigma_) * w;
        return xpow(ExtReal(sigma_) * w, 1.0 / p_);
    }

    RadialWeight v_;
    double theta_, lo_, hi_;
    double sigma_, g_, p_;   // p_ = theta' (norm exponent), g_ = power applied to v
    bool inf_tail_diverges_ = false;
};

/// base(t)^s as an envelope.
class PowEnvelope final : public Envelope {
public:
    PowEnvelope(std::shared_ptr<const Envelope> base, double s) : base_(std::move(base)), s_(s) {}

    ExtReal value(double t) const override { return xpow(base_->value(t), s_); }
    ExtReal left_value(double t) const override { return xpow(base_->left_value(t), s_); }
    PowerTerm tail0() const override { return base_->tail0().pow(s_); }
    PowerTerm tailinf() const override { return base_->tailinf().pow(s_); }
    int direction() const override { return s_ >= 0.0 ? base_->direction() : -base_->direction(); }
    std::vector<double> jumps() const override { return base_->jumps(); }
    std::optional<PowerTerm> global_power() const override {
        auto g = base_->global_power();
        if (!g) return std::nullopt;
        return g->pow(s_);
    }
    bool identically_infinite() const override {
        return s_ > 0.0 && base_->identically_infinite();
    }

private:
    std::shared_ptr<const Envelope> base_;
    double s_;
};

/// Monotone profile sampled on a log grid, with declared tails.  Off-grid
/// values interpolate linearly in log-log coordinates.
class SampledEnvelope final : public Envelope {
public:
    SampledEnvelope(std::shared_ptr<const LogGrid> grid, std::vector<double> vals,
                    PowerTerm t0, PowerTerm ti, int dir)
        : grid_(std::move(grid)), vals_(std::move(vals)), t0_(t0), ti_(ti), dir_(dir) {
        if (vals_.size() != grid_->size())
            throw std::invalid_argument("SampledEnvelope: size mismatch");
    }

    ExtReal value(double t) const override {
        const auto& p = grid_->pts();
        if (t <= p.front()) return tail_value(t0_, End::Zero, t, vals_.front());
        if (t >= p.back()) return tail_value(ti_, End::Inf, t, vals_.back());
        auto it = std::lower_bound(p.begin(), p.end(), t);
        size_t i = it - p.begin();
        if (p[i] == t) return ExtReal(vals_[i]);
        double v0 = vals_[i - 1], v1 = vals_[i];
        if (v0 == kInf || v1 == kInf) return ExtReal(kInf);
        if (v0 <= 0.0 || v1 <= 0.0) {
            double w = (t - p[i - 1]) / (p[i] - p[i - 1]);
            return ExtReal(v0 + (v1 - v0) * w);
        }
        double w = std::log(t / p[i - 1]) / std::log(p[i] / p[i - 1]);
        return ExtReal(std::exp(std::log(v0) * (1.0 - w) + std::log(v1) * w));
    }

    PowerTerm tail0() const override { return t0_; }
    PowerTerm tailinf() const override { return ti_; }
    int direction() const override { return dir_; }
    const std::vector<double>& samples() const { return vals_; }
    const LogGrid& grid() const { return *grid_; }

private:
    static ExtReal tail_value(PowerTerm p, End end, double t, double edge) {
        ExtReal lim = tail_limit(p, end);
        if (lim.is_inf()) return lim;
        if (p.is_zero()) return ExtReal(0.0);
        double v = p.value_at(t, end);
        // keep continuity with the sampled edge when the leading constant is off
        return ExtReal(std::isfinite(v) ? v : edge);
    }

    std::shared_ptr<const LogGrid> grid_;
    std::vector<double> vals_;
    PowerTerm t0_, ti_;
    int dir_;
};

/// Envelope from an arbitrary callable plus declared tails (test fixtures and
/// the injection point for user-supplied tail-norm profiles of non-radial
/// weights).
class FuncEnvelope final : public Envelope {
public:
    FuncEnvelope(std::function<double(double)> f, PowerTerm t0, PowerTerm ti, int dir)
        : f_(std::move(f)), t0_(t0), ti_(ti), dir_(dir) {}

    ExtReal value(double t) const override { return ExtReal(f_(t)); }
    PowerTerm tail0() const override { return t0_; }
    PowerTerm tailinf() const override { return ti_; }
    int direction() const override { return dir_; }

private:
    std::function<double(double)> f_;
    PowerTerm t0_, ti_;
    int dir_;
};

/// The quasiconcave kernel U(x) / (U(t) + U(x)), guarded so that the
/// complementary identity cal_kernel(a,b) + cal_kernel(b,a) == 1 holds
/// exactly in floating point whenever both values are finite and positive.
inline double cal_kernel(double ux, double ut) {
    if (ux == 0.0 && ut == 0.0) return 0.0;          // 0/0 convention
    if (ux == kInf) return ut == kInf ? 0.5 : 1.0;
    if (ut == kInf) return 0.0;
    double d = ux + ut;
    if (ux <= ut) return ux / d;
    return 1.0 - ut / d;
}

inline double calU(const Envelope& bigU, double x, double t) {
    return cal_kernel(bigU.value(x).get(), bigU.value(t).get());
}

/// sup_t F(t) G(t) computed through the monotone rearrangement identities:
/// for nonincreasing F the inner sup of G runs over (0,t), for nondecreasing
/// F over (t,inf).  Evaluated on the grid plus closed-form tail analysis.
inline ExtReal sup_product(const Envelope& F, const Envelope& G, const LogGrid& grid) {
    const auto& pts = grid.pts();
    size_t n = pts.size();
    std::vector<double> g(n);
    for (size_t i = 0; i < n; ++i) g[i] = G.value(pts[i]).get();

    // running sup of G in the direction dictated by F's monotonicity
    if (F.direction() <= 0) {
        double run = tail_limit(G.tail0(), End::Zero).get();
        for (size_t i = 0; i < n; ++i) { run = std::max(run, g[i]); g[i] = run; }
    } else {
        double run = tail_limit(G.tailinf(), End::Inf).get();
        for (size_t i = n; i-- > 0;) { run = std::max(run, g[i]); g[i] = run; }
    }

    ExtReal best(0.0);
    for (size_t i = 0; i < n; ++i) {
        double f = F.value(pts[i]).get();
        best = max(best, ExtReal(xmul(f, g[i])));
        if (best.is_inf()) return best;
    }
    best = max(best, tail_limit(F.tail0() * G.tail0(), End::Zero));
    best = max(best, tail_limit(F.tailinf() * G.tailinf(), End::Inf));
    return best;
}

} // namespace hardykit
