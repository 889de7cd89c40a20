#include "fbmcalc/traffic.hpp"

#include <cmath>

namespace fbmcalc {

double fbm_effective_bandwidth(const FbmTraffic& t, double theta, double horizon) {
    if (!(theta > 0.0))
        throw std::domain_error("fbm_effective_bandwidth: requires theta > 0");
    if (!(horizon >= 1.0))
        throw std::domain_error("fbm_effective_bandwidth: requires horizon >= 1");
    return t.lambda + 0.5 * theta * t.sigma * t.sigma * std::pow(horizon, 2.0 * t.hurst - 1.0);
}

double fgn_autocovariance(const FbmTraffic& t, std::int64_t lag) {
    if (lag < 0)
        throw std::domain_error("fgn_autocovariance: requires lag >= 0");
    const double k = static_cast<double>(lag);
    const double h2 = 2.0 * t.hurst;
    return 0.5 * t.sigma * t.sigma *
           (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) + std::pow(std::abs(k - 1.0), h2));
}

EbbOnOffAggregate ebb_from_mean_and_burstiness(int m, double mean_per_source,
                                               double peak, double T) {
    if (!(mean_per_source > 0.0 && mean_per_source < peak))
        throw std::domain_error("ebb_from_mean_and_burstiness: requires 0 < mean < peak");
    if (!(T > 0.0))
        throw std::domain_error("ebb_from_mean_and_burstiness: requires T > 0");
    const double p_on = mean_per_source / peak;
    const double p12 = 1.0 / (T * (1.0 - p_on));
    const double p21 = 1.0 / (T * p_on);
    if (p12 > 1.0 || p21 > 1.0)
        throw std::invalid_argument(
            "ebb_from_mean_and_burstiness: T too small to admit transition probabilities <= 1");
    return EbbOnOffAggregate(m, peak, p12, p21);
}

double ebb_envelope_rate(const EbbOnOffAggregate& a, double theta) {
    if (!(theta > 0.0))
        throw std::domain_error("ebb_envelope_rate: requires theta > 0");
    const double p11 = 1.0 - a.p12;
    const double p22 = 1.0 - a.p21;
    // Largest root of z^2 - (p11 + p22 e^G) z + (p11 + p22 - 1) e^G with
    // G = theta*P, computed with e^G factored out so large G cannot overflow:
    // rho = P + log((u + sqrt(u^2 - 4(p11+p22-1) e^{-G})) / 2) / theta,
    // u = p22 + p11 e^{-G}.
    const double G = theta * a.peak;
    const double eg = std::exp(-G);
    const double u = p22 + p11 * eg;
    double disc = u * u - 4.0 * (p11 + p22 - 1.0) * eg;
    if (disc < 0.0) disc = 0.0;  // rounding; roots are real
    return a.peak + std::log(0.5 * (u + std::sqrt(disc))) / theta;
}

}  // namespace fbmcalc
