#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hardykit/ext_real.hpp"
#include "hardykit/power_law.hpp"

namespace hardykit {

/// ∫_a^b c s^e ds with 0 <= a < b <= inf, handling improper endpoints.
inline ExtReal power_integral(double c, double e, double a, double b) {
    if (c == 0.0 || a >= b) return ExtReal(0.0);
    if (e == -1.0) {
        if (a == 0.0 || b == kInf) return ExtReal::inf();
        return ExtReal(c * std::log(b / a));
    }
    double g = e + 1.0;
    if (b == kInf) {
        if (g > 0.0) return ExtReal::inf();
        return ExtReal(-c * std::pow(a, g) / g);
    }
    if (a == 0.0) {
        if (g < 0.0) return ExtReal::inf();
        return ExtReal(c * std::pow(b, g) / g);
    }
    // difference of like powers; stable enough for the grid scales used here
    return ExtReal(c * (std::pow(b, g) - std::pow(a, g)) / g);
}

struct PowerSegment {
    double lo = 0.0, hi = kInf;   // [lo, hi)
    double coef = 1.0, expo = 0.0;
};

/// Weight on (0,inf) (interval weight) or a radial weight on R^n, stored as a
/// finite list of power segments covering (0,inf).  Tabulated data becomes
/// piecewise power via log-log interpolation; declared tail exponents extend
/// the first and last samples to 0 and inf.  A weight can also be the
/// improper "identically infinite" weight, which makes every inverse-power
/// tail norm vanish.
class RadialWeight {
public:
    RadialWeight() = default;

    static RadialWeight power(double c, double alpha, int dim = 1) {
        if (c < 0.0) throw std::domain_error("weight: negative coefficient");
        RadialWeight w;
        w.dim_ = dim;
        w.segs_ = {{0.0, kInf, c, alpha}};
        return w;
    }

    /// Segments from an interleaved list: c0 a0 [b1 c1 a1] [b2 c2 a2] ...
    static RadialWeight piecewise(std::vector<PowerSegment> segs, int dim = 1) {
        if (segs.empty()) throw std::domain_error("weight: empty segment list");
        if (segs.front().lo != 0.0 || segs.back().hi != kInf)
            throw std::domain_error("weight: segments must cover (0,inf)");
        for (size_t i = 0; i + 1 < segs.size(); ++i) {
            if (segs[i].hi != segs[i + 1].lo || !(segs[i].lo < segs[i].hi))
                throw std::domain_error("weight: segments must be contiguous");
            if (segs[i].coef < 0.0) throw std::domain_error("weight: negative coefficient");
        }
        RadialWeight w;
        w.dim_ = dim;
        w.segs_ = std::move(segs);
        return w;
    }

    static RadialWeight tabulated(const std::vector<double>& radii,
                                  const std::vector<double>& values,
                                  double tail0, double tailinf, int dim = 1) {
        if (radii.size() != values.size() || radii.size() < 2)
            throw std::domain_error("weight: tabulated needs >= 2 samples");
        std::vector<PowerSegment> segs;
        for (size_t i = 0; i + 1 < radii.size(); ++i) {
            if (!(radii[i] > 0.0) || !(radii[i + 1] > radii[i]))
                throw std::domain_error("weight: radii must be positive increasing");
            if (!(values[i] > 0.0) || !(values[i + 1] > 0.0))
                throw std::domain_error("weight: tabulated values must be positive");
            double e = std::log(values[i + 1] / values[i]) / std::log(radii[i + 1] / radii[i]);
            double c = values[i] / std::pow(radii[i], e);
            segs.push_back({radii[i], radii[i + 1], c, e});
        }
        // extend with the declared tail exponents
        double c0 = values.front() / std::pow(radii.front(), tail0);
        double ci = values.back() / std::pow(radii.back(), tailinf);
        segs.insert(segs.begin(), {0.0, radii.front(), c0, tail0});
        segs.push_back({radii.back(), kInf, ci, tailinf});
        return piecewise(std::move(segs), dim);
    }

    /// The improper weight that is +inf everywhere (infimum-weight flag).
    static RadialWeight infinite(int dim = 1) {
        RadialWeight w;
        w.dim_ = dim;
        w.infinite_ = true;
        w.segs_ = {{0.0, kInf, kInf, 0.0}};
        return w;
    }

    int dim() const { return dim_; }
    bool is_infinite() const { return infinite_; }
    const std::vector<PowerSegment>& segments() const { return segs_; }

    double value(double s) const {
        if (infinite_) return kInf;
        const PowerSegment& seg = locate(s);
        return xmul(seg.coef, std::pow(s, seg.expo));
    }

    /// Interior breakpoints (candidates for grid snapping / jump handling).
    std::vector<double> breakpoints() const {
        std::vector<double> b;
        for (size_t i = 0; i + 1 < segs_.size(); ++i) b.push_back(segs_[i].hi);
        return b;
    }

    /// ∫_a^b w(s)^g s^m ds in closed form.  For the infinite weight the
    /// integrand is 0 when g < 0 and inf when g > 0.
    ExtReal transformed_integral(double g, double m, double a, double b) const {
        a = std::max(a, 0.0);
        if (!(a < b)) return ExtReal(0.0);
        if (infinite_) return g < 0.0 ? ExtReal(0.0) : ExtReal::inf();
        ExtReal total(0.0);
        for (const PowerSegment& s : segs_) {
            double lo = std::max(a, s.lo), hi = std::min(b, s.hi);
            if (!(lo < hi)) continue;
            double c = s.coef == 0.0 ? (g < 0.0 ? kInf : 0.0)
                                     : (s.coef == kInf ? (g < 0.0 ? 0.0 : kInf)
                                                       : std::pow(s.coef, g));
            if (c == kInf) return ExtReal::inf();
            total += power_integral(c, s.expo * g + m, lo, hi);
            if (total.is_inf()) return total;
        }
        return total;
    }

    /// ess sup of w(s)^g over (a,b).
    ExtReal esssup_pow(double g, double a, double b) const {
        a = std::max(a, 0.0);
        if (!(a < b)) return ExtReal(0.0);
        if (infinite_) return g < 0.0 ? ExtReal(0.0) : ExtReal::inf();
        ExtReal best(0.0);
        for (const PowerSegment& s : segs_) {
            double lo = std::max(a, s.lo), hi = std::min(b, s.hi);
            if (!(lo < hi)) continue;
            double e = s.expo * g;
            double c = s.coef == 0.0 ? (g < 0.0 ? kInf : 0.0)
                                     : (s.coef == kInf ? (g < 0.0 ? 0.0 : kInf)
                                                       : std::pow(s.coef, g));
            if (c == 0.0) continue;
            if (c == kInf) return ExtReal::inf();
            ExtReal seg_sup;
            if (e == 0.0) seg_sup = ExtReal(c);
            else if (e > 0.0) seg_sup = hi == kInf ? ExtReal::inf() : ExtReal(c * std::pow(hi, e));
            else seg_sup = lo == 0.0 ? ExtReal::inf() : ExtReal(c * std::pow(lo, e));
            best = max(best, seg_sup);
        }
        return best;
    }

    /// Behaviour of w(s)^g s^m near an endpoint, as a PowerTerm.
    PowerTerm transformed_tail(double g, double m, End end) const {
        if (infinite_) return g < 0.0 ? PowerTerm::zero() : PowerTerm::infinite();
        const PowerSegment& s = end == End::Zero ? segs_.front() : segs_.back();
        if (s.coef == 0.0) return g < 0.0 ? PowerTerm::infinite() : PowerTerm::zero();
        if (s.coef == kInf) return g < 0.0 ? PowerTerm::zero() : PowerTerm::infinite();
        return {std::pow(s.coef, g), s.expo * g + m, 0.0};
    }

    /// True when the weight is a single power segment (exact symbolic route).
    bool is_pure_power() const { return !infinite_ && segs_.size() == 1; }

    RadialWeight scaled(double c) const {
        RadialWeight w = *this;
        if (w.infinite_) return w;
        for (PowerSegment& s : w.segs_) s.coef *= c;
        return w;
    }

private:
    const PowerSegment& locate(double s) const {
        for (const PowerSegment& seg : segs_)
            if (s < seg.hi) return seg;
        return segs_.back();
    }

    std::vector<PowerSegment> segs_;
    int dim_ = 1;
    bool infinite_ = false;
};

} // namespace hardykit
