// numerics.hpp - Special functions and scalar optimization shared by the
// analytical modules: Gamma function, the Gamma tail integral
// int_0^inf x^(t^xi) dt, Gaussian ccdf, Lambert W (principal branch), a
// deterministic scan+golden-section minimizer, and small helpers for
// log-domain probability arithmetic and least-squares fits.
//
// Everything here is pure and thread-safe.

#ifndef FBMCALC_NUMERICS_HPP
#define FBMCALC_NUMERICS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fbmcalc {

// Open interval (lo, hi). Evaluation points are clamped to stay strictly
// inside by a margin relative to the interval width; the bound formulas
// diverge at the boundary, so callers never evaluate there.
struct Interval {
    double lo;
    double hi;
    double open_margin = 1e-9;

    Interval(double lo_, double hi_, double margin = 1e-9)
        : lo(lo_), hi(hi_), open_margin(margin) {
        if (!(lo < hi))
            throw std::domain_error("Interval: requires lo < hi");
    }

    double clamped_lo() const { return lo + open_margin * (hi - lo); }
    double clamped_hi() const { return hi - open_margin * (hi - lo); }
    double clamp(double x) const {
        if (x < clamped_lo()) return clamped_lo();
        if (x > clamped_hi()) return clamped_hi();
        return x;
    }
};

// Gamma(y) for y > 0, accurate to ~1e-14 relative.
double gamma_function(double y);

// log Gamma(y) for y > 0. Same approximation as gamma_function, evaluated in
// the log domain so it does not overflow for large y.
double log_gamma(double y);

// Gamma(1/xi) / (xi * (-log x)^(1/xi)), the closed form of
// int_0^inf x^(t^xi) dt for x in (0,1), xi > 0.
double gamma_tail_integral(double x, double xi);
// Log-domain variant; takes log(x) (< 0) directly so that x may underflow.
double log_gamma_tail_integral(double log_x, double xi);

// P[N(0,1) > x].
double gaussian_ccdf(double x);

// Principal branch W0 of the Lambert W function, z >= -1/e.
// Satisfies W exp(W) = z to ~1e-14 relative.
double lambert_w0(double z);

// log(exp(a) + exp(b)) without overflow; either argument may be -inf.
double log_sum_exp(double a, double b);

struct MinimizeOptions {
    int scan_points = 256;   // coarse bracketing scan
    double x_tol = 1e-10;    // relative tolerance on the argmin
    int max_golden_iters = 200;
};

struct MinimizeResult {
    double argmin;
    double min;
};

namespace detail {
MinimizeResult minimize_scan_golden(double (*f)(double, void*), void* ctx,
                                    const Interval& domain,
                                    const MinimizeOptions& opt);
}

// Deterministic 1-D minimizer: log-spaced coarse scan (uniform when the
// clamped domain is not strictly positive) followed by golden-section
// refinement of the bracketing triple. Non-finite objective values are
// treated as +inf; if every scan point is non-finite this throws.
// Never evaluates f outside the clamped open interval.
template <class F>
MinimizeResult minimize_scalar(F&& f, const Interval& domain,
                               const MinimizeOptions& opt = {}) {
    auto thunk = [](double x, void* ctx) -> double {
        return (*static_cast<std::remove_reference_t<F>*>(ctx))(x);
    };
    return detail::minimize_scan_golden(thunk, const_cast<void*>(static_cast<const void*>(&f)),
                                        domain, opt);
}

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares y ~ slope*x + intercept.
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

}  // namespace fbmcalc

#endif
