// traffic.hpp - Traffic model types and their moment / effective-bandwidth
// descriptors: aggregate fBm traffic, aggregates of two-state Markov on-off
// sources (EBB traffic), and constant bit rate traffic.
//
// All rates are in bits per time slot; the slot duration is configuration
// metadata (see config.hpp). Types are immutable values, operations pure.

#ifndef FBMCALC_TRAFFIC_HPP
#define FBMCALC_TRAFFIC_HPP

#include <cstdint>
#include <stdexcept>

namespace fbmcalc {

// Aggregate fBm traffic A(t) = lambda*t + Z(t) with E[Z(t)^2] = sigma^2 t^(2H).
struct FbmTraffic {
    double lambda;  // mean rate, bits per slot
    double sigma;   // standard deviation at t = 1, bits
    double hurst;

    FbmTraffic(double lambda_, double sigma_, double hurst_)
        : lambda(lambda_), sigma(sigma_), hurst(hurst_) {
        if (!(lambda >= 0.0))
            throw std::domain_error("FbmTraffic: requires lambda >= 0");
        if (!(sigma > 0.0))
            throw std::domain_error("FbmTraffic: requires sigma > 0");
        if (!(hurst > 0.0 && hurst < 1.0))
            throw std::domain_error("FbmTraffic: requires 0 < H < 1");
    }
};

// Aggregate of m independent two-state Markov on-off sources. State 1 is
// off, state 2 emits at peak rate P. p12/p21 are the off->on / on->off
// transition probabilities per slot.
struct EbbOnOffAggregate {
    int m;
    double peak;  // per-source peak rate, bits per slot
    double p12;
    double p21;

    EbbOnOffAggregate(int m_, double peak_, double p12_, double p21_)
        : m(m_), peak(peak_), p12(p12_), p21(p21_) {
        if (m < 1) throw std::domain_error("EbbOnOffAggregate: requires m >= 1");
        if (!(peak > 0.0)) throw std::domain_error("EbbOnOffAggregate: requires peak > 0");
        if (!(p12 > 0.0 && p12 <= 1.0 && p21 > 0.0 && p21 <= 1.0))
            throw std::domain_error("EbbOnOffAggregate: requires p12, p21 in (0,1]");
    }

    double p_on() const { return p12 / (p12 + p21); }
    double mean_rate_per_source() const { return p_on() * peak; }
    double mean_rate() const { return m * mean_rate_per_source(); }
    // Average time for two state changes, the burstiness time scale.
    double burstiness() const { return 1.0 / p12 + 1.0 / p21; }
};

struct CbrTraffic {
    double lambda;  // constant rate, bits per slot

    explicit CbrTraffic(double lambda_) : lambda(lambda_) {
        if (!(lambda >= 0.0))
            throw std::domain_error("CbrTraffic: requires lambda >= 0");
    }
};

// Effective bandwidth alpha(theta, t) = lambda + theta*sigma^2*t^(2H-1)/2.
double fbm_effective_bandwidth(const FbmTraffic& t, double theta, double horizon);

// Autocovariance of the fGn increment process,
// v(k) = (sigma^2/2) (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}).
double fgn_autocovariance(const FbmTraffic& t, std::int64_t lag);

// The unique (p12, p21) with p_on = mean/peak and burstiness T, i.e.
// p12 = 1/(T (1 - p_on)), p21 = 1/(T p_on). Throws when T is too small to
// admit transition probabilities <= 1.
EbbOnOffAggregate ebb_from_mean_and_burstiness(int m, double mean_per_source,
                                               double peak, double T);

// Per-source envelope rate rho(theta) of a discrete-time on-off source, the
// log of the largest eigenvalue of the exponentially tilted transition
// matrix divided by theta. Ranges between the mean and the peak rate;
// evaluated in a form that is stable for large theta*P. The aggregate
// envelope rate is m * rho(theta).
double ebb_envelope_rate(const EbbOnOffAggregate& a, double theta);

}  // namespace fbmcalc

#endif
