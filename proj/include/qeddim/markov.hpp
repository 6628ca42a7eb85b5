#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "qeddim/policy.hpp"

namespace qeddim {

// A concrete birth-death system: s servers, arrival rate lambda = s - gamma*sqrt(s),
// unit-mean exponential service, admission policy applied to waiting arrivals.
struct SystemConfig {
    std::int64_t s = 1;
    double gamma = 0.0;
    AdmissionPolicy policy = AdmissionPolicy::threshold(
        std::numeric_limits<double>::infinity());

    double lambda() const { return static_cast<double>(s) - gamma * std::sqrt(static_cast<double>(s)); }
    double rho() const { return lambda() / static_cast<double>(s); }
    void validate() const;
};

struct StationaryDistribution {
    std::vector<double> probs;   // probs[k] for k = 0..k_max
    std::int64_t k_max = 0;
    double tail_mass_bound = 0.0;  // certified bound on truncated mass
};

struct PerformanceMetrics {
    double delay_prob = 0.0;      // P(all servers busy)
    double rejection_prob = 0.0;  // P(arrival rejected)
    double mean_queue = 0.0;      // E[(X - s)+]
    double mean_idle = 0.0;       // E[(s - X)+]
    double expected_wait = 0.0;   // E[wait of an arriving customer]
    double revenue_rate = 0.0;    // sum_k r_s(k) pi(k)
};

// Stationary distribution of the birth-death chain, evaluated in log-scaled
// form anchored at k = s (no factorials, no intermediate over/underflow up to
// s ~ 1e6). Infinite-support policies are truncated where a certified
// geometric tail bound drops below 1e-14.
StationaryDistribution stationary_distribution(const SystemConfig& config);

// Erlang B blocking probability B_s(rho) via the stable recursion
// B(k) = A B(k-1) / (k + A B(k-1)), A = s*rho.
double erlang_b(std::int64_t s, double rho);

PerformanceMetrics performance_metrics(const SystemConfig& config,
                                       const RevenueStructure& revenue);

// Centered and scaled revenue rate (R_s - a s)/sqrt(s) for the economic
// scenario, computed as d*gamma - (a+d) I_s/sqrt(s) - b Q_s/sqrt(s).
double revenue_rate_hat(const SystemConfig& config, const Economic& econ);

}  // namespace qeddim
