#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

namespace hardykit {

/// Numerical knobs shared by envelope sampling, quadrature and condition
/// evaluation.  The core range is covered by `points` log-spaced samples;
/// quadrature and measure nodes extend `ext_factor` beyond it on both sides
/// at the same log density, with the remaining mass handled by declared tail
/// exponents in closed form.
struct GridConfig {
    double tmin = 1e-6;
    double tmax = 1e6;
    int points = 2048;
    double ext_factor = 1e3;
    int gl_order = 4;          // Gauss-Legendre nodes per cell (densities)
    int stieltjes_sub = 32;    // subcells per cell for Stieltjes sums
    int kernel_sub = 2;        // node budget per cell for measure kernels
    bool force_quadrature = false;   // disable exact symbolic shortcuts

    GridConfig refined(int factor = 2) const {
        GridConfig c = *this;
        c.points *= factor;
        return c;
    }
};

inline std::span<const double> gl_nodes(int order);
inline std::span<const double> gl_weights(int order);

/// Ascending log-spaced evaluation points over the extended range, with 1.0
/// and any requested snap points (weight breakpoints, atom locations) merged
/// in.  Cells are the consecutive pairs.
class LogGrid {
public:
    LogGrid() = default;

    static LogGrid make(const GridConfig& cfg, std::vector<double> snap = {}) {
        double lo = cfg.tmin / cfg.ext_factor;
        double hi = cfg.tmax * cfg.ext_factor;
        for (double s : snap) {
            if (s > 0.0 && std::isfinite(s)) {
                lo = std::min(lo, s / 2.0);
                hi = std::max(hi, s * 2.0);
            }
        }
        double span_dec = std::log10(hi / lo);
        double core_dec = std::log10(cfg.tmax / cfg.tmin);
        int n = std::max(16, (int)std::lround(cfg.points * span_dec / core_dec));

        LogGrid g;
        g.pts_.reserve(n + snap.size() + 1);
        double llo = std::log(lo), lhi = std::log(hi);
        for (int i = 0; i <= n; ++i)
            g.pts_.push_back(std::exp(llo + (lhi - llo) * i / n));
        g.pts_.push_back(1.0);
        for (double s : snap)
            if (s > 0.0 && std::isfinite(s)) g.pts_.push_back(s);
        std::sort(g.pts_.begin(), g.pts_.end());
        g.pts_.erase(std::unique(g.pts_.begin(), g.pts_.end(),
                                 [](double a, double b) { return std::abs(a - b) <= 1e-14 * b; }),
                     g.pts_.end());
        return g;
    }

    const std::vector<double>& pts() const { return pts_; }
    size_t size() const { return pts_.size(); }
    size_t cells() const { return pts_.size() - 1; }
    double front() const { return pts_.front(); }
    double back() const { return pts_.back(); }

    size_t index_near(double t) const {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), t);
        if (it == pts_.end()) return pts_.size() - 1;
        if (it == pts_.begin()) return 0;
        size_t i = it - pts_.begin();
        return (t / pts_[i - 1] < pts_[i] / t) ? i - 1 : i;
    }

private:
    std::vector<double> pts_;
};

namespace detail {
inline constexpr std::array<double, 2> kGL2x = {-0.5773502691896257, 0.5773502691896257};
inline constexpr std::array<double, 2> kGL2w = {1.0, 1.0};
inline constexpr std::array<double, 4> kGL4x = {-0.8611363115940526, -0.3399810435848563,
                                                0.3399810435848563, 0.8611363115940526};
inline constexpr std::array<double, 4> kGL4w = {0.3478548451374538, 0.6521451548625461,
                                                0.6521451548625461, 0.3478548451374538};
inline constexpr std::array<double, 8> kGL8x = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
inline constexpr std::array<double, 8> kGL8w = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
} // namespace detail

inline std::span<const double> gl_nodes(int order) {
    switch (order) {
        case 2: return detail::kGL2x;
        case 4: return detail::kGL4x;
        case 8: return detail::kGL8x;
        default: throw std::domain_error("gl_nodes: supported orders are 2, 4, 8");
    }
}

inline std::span<const double> gl_weights(int order) {
    switch (order) {
        case 2: return detail::kGL2w;
        case 4: return detail::kGL4w;
        case 8: return detail::kGL8w;
        default: throw std::domain_error("gl_weights: supported orders are 2, 4, 8");
    }
}

/// ∫_a^b f(t) dt by Gauss-Legendre in log coordinates, cell by cell.
/// Integrable endpoint singularities of power type are handled well because
/// the substitution t = e^tau absorbs one power of t.
template <class F>
double gl_integrate_log(F&& f, double a, double b, int cells, int order) {
    if (!(a < b) || a <= 0.0) return 0.0;
    auto xs = gl_nodes(order);
    auto ws = gl_weights(order);
    double la = std::log(a), lb = std::log(b);
    double h = (lb - la) / cells;
    double total = 0.0;
    for (int c = 0; c < cells; ++c) {
        double mid = la + h * (c + 0.5);
        double acc = 0.0;
        for (size_t j = 0; j < xs.size(); ++j) {
            double t = std::exp(mid + 0.5 * h * xs[j]);
            acc += ws[j] * f(t) * t;
        }
        total += acc * 0.5 * h;
    }
    return total;
}

inline int env_grid_points_default() {
    if (const char* s = std::getenv("HARDYKIT_GRID_DEFAULT")) {
        int v = std::atoi(s);
        if (v >= 16) return v;
    }
    return 0;
}

} // namespace hardykit
