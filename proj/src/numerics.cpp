#include "fbmcalc/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace fbmcalc {

namespace {

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set). Relative error of the
// resulting Gamma is below 1e-14 over the positive axis.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_series(double y) {
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (y - 1.0 + i);
    return a;
}

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

}  // namespace

double log_gamma(double y) {
    if (!(y > 0.0))
        throw std::domain_error("log_gamma: requires y > 0");
    // Reflection is not needed for y > 0; use the series directly. For
    // y < 0.5 go through Gamma(y) = Gamma(y+1)/y to keep the series argument
    // comfortably inside its sweet spot.
    if (y < 0.5) return log_gamma(y + 1.0) - std::log(y);
    const double t = y - 0.5 + kLanczosG;
    return kHalfLog2Pi + (y - 0.5) * std::log(t) - t + std::log(lanczos_series(y));
}

double gamma_function(double y) {
    if (!(y > 0.0))
        throw std::domain_error("gamma_function: requires y > 0");
    if (y < 0.5) return gamma_function(y + 1.0) / y;
    const double t = y - 0.5 + kLanczosG;
    return std::sqrt(2.0 * M_PI) * std::pow(t, y - 0.5) * std::exp(-t) * lanczos_series(y);
}

double log_gamma_tail_integral(double log_x, double xi) {
    if (!(log_x < 0.0))
        throw std::domain_error("gamma_tail_integral: requires x in (0,1)");
    if (!(xi > 0.0))
        throw std::domain_error("gamma_tail_integral: requires xi > 0");
    const double inv = 1.0 / xi;
    return log_gamma(inv) - std::log(xi) - inv * std::log(-log_x);
}

double gamma_tail_integral(double x, double xi) {
    if (!(x > 0.0 && x < 1.0))
        throw std::domain_error("gamma_tail_integral: requires x in (0,1)");
    return std::exp(log_gamma_tail_integral(std::log(x), xi));
}

double gaussian_ccdf(double x) {
    return 0.5 * std::erfc(x * M_SQRT1_2);
}

double lambert_w0(double z) {
    constexpr double kNegInvE = -0.36787944117144233;  // -1/e
    if (z < kNegInvE) {
        if (z > kNegInvE - 1e-15) z = kNegInvE;  // absorb rounding at the branch point
        else throw std::domain_error("lambert_w0: requires z >= -1/e");
    }
    if (z == 0.0) return 0.0;

    // Initial guess.
    double w;
    if (z < -0.25) {
        // Series around the branch point in p = sqrt(2(1+e z)).
        const double p = std::sqrt(2.0 * (1.0 + M_E * z));
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    } else if (z < 1.0) {
        w = z * (1.0 - z + 1.5 * z * z);  // Taylor at 0
    } else {
        const double l1 = std::log(z), l2 = std::log(std::log(z));
        w = l1 - l2 + l2 / l1;
    }

    // Halley iteration.
    for (int i = 0; i < 64; ++i) {
        const double e = std::exp(w);
        const double r = w * e - z;
        if (std::abs(r) <= 1e-14 * std::max(1.0, std::abs(z))) break;
        const double denom = e * (w + 1.0) - (w + 2.0) * r / (2.0 * w + 2.0);
        w -= r / denom;
    }
    return w;
}

double log_sum_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

namespace detail {

namespace {
double guarded(double (*f)(double, void*), void* ctx, double x) {
    const double v = f(x, ctx);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}
}  // namespace

MinimizeResult minimize_scan_golden(double (*f)(double, void*), void* ctx,
                                    const Interval& domain,
                                    const MinimizeOptions& opt) {
    const double lo = domain.clamped_lo();
    const double hi = domain.clamped_hi();
    const int n = std::max(3, opt.scan_points);

    const bool log_spaced = lo > 0.0;
    std::vector<double> xs(static_cast<std::size_t>(n));
    if (log_spaced) {
        const double llo = std::log(lo), lhi = std::log(hi);
        for (int i = 0; i < n; ++i)
            xs[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    } else {
        for (int i = 0; i < n; ++i)
            xs[i] = lo + (hi - lo) * i / (n - 1);
    }
    xs.front() = lo;
    xs.back() = hi;

    int best = -1;
    double best_v = std::numeric_limits<double>::infinity();
    std::vector<double> vs(xs.size());
    for (int i = 0; i < n; ++i) {
        vs[i] = guarded(f, ctx, xs[i]);
        if (vs[i] < best_v) { best_v = vs[i]; best = i; }
    }
    if (best < 0 || !std::isfinite(best_v))
        throw std::runtime_error("minimize_scalar: objective is non-finite everywhere on the domain");

    // Golden-section refinement inside the bracketing triple.
    double a = xs[std::max(best - 1, 0)];
    double b = xs[std::min(best + 1, n - 1)];
    constexpr double kInvPhi = 0.61803398874989485;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = guarded(f, ctx, x1);
    double f2 = guarded(f, ctx, x2);
    double arg_best = xs[best];
    for (int it = 0; it < opt.max_golden_iters; ++it) {
        if (b - a <= opt.x_tol * std::max(1.0, std::abs(arg_best))) break;
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = guarded(f, ctx, x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = guarded(f, ctx, x2);
        }
        if (f1 < best_v) { best_v = f1; arg_best = x1; }
        if (f2 < best_v) { best_v = f2; arg_best = x2; }
    }
    return {arg_best, best_v};
}

}  // namespace detail

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit: needs two equally sized samples of length >= 2");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) { sx += x[i]; sy += y[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

}  // namespace fbmcalc
