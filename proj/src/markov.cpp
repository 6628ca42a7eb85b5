#include "qeddim/markov.hpp"

#include <algorithm>
#include <cmath>

#include "qeddim/errors.hpp"

namespace qeddim {

namespace {

constexpr double kTailTarget = 1e-14;   // certified truncated mass
constexpr std::int64_t kQueueCap = 20'000'000;

// Compensated accumulator for long chains of log ratios.
struct KahanSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

void SystemConfig::validate() const {
    if (s < 1) throw validation_error("s must be a positive integer");
    if (!(lambda() > 0.0)) {
        throw validation_error("lambda must be positive (requires gamma < sqrt(s))");
    }
}

double erlang_b(std::int64_t s, double rho) {
    if (s < 1) throw validation_error("erlang_b: s must be >= 1");
    if (!(rho > 0.0)) throw validation_error("erlang_b: rho must be positive");
    const double a = static_cast<double>(s) * rho;
    double b = 1.0;
    for (std::int64_t k = 1; k <= s; ++k) {
        b = a * b / (static_cast<double>(k) + a * b);
    }
    return b;
}

StationaryDistribution stationary_distribution(const SystemConfig& config) {
    config.validate();
    const std::int64_t s = config.s;
    const double lam = config.lambda();
    const double rho = config.rho();
    const double log_rho = std::log(rho);

    // Log weights relative to pi(s). Below s the ratio recursion is
    // pi(k-1)/pi(k) = k/lambda; above s it is rho * p(k-s).
    std::vector<double> lw(static_cast<std::size_t>(s) + 1);
    lw[static_cast<std::size_t>(s)] = 0.0;
    {
        KahanSum acc;
        for (std::int64_t k = s; k >= 1; --k) {
            acc.add(std::log(static_cast<double>(k) / lam));
            lw[static_cast<std::size_t>(k - 1)] = acc.sum;
        }
    }
    double lmax = *std::max_element(lw.begin(), lw.end());

    double tail_bound_rel = 0.0;  // relative to exp(lmax)
    {
        const std::int64_t kq = config.policy.max_queue(s);
        KahanSum lq;
        // For rho >= 1 the geometric tail is certified by the largest of the
        // last kWindow one-step ratios, which bounds all future ratios as long
        // as the join probabilities are nonincreasing (condition on f).
        constexpr int kWindow = 32;
        double recent[kWindow];
        std::int64_t n_recent = 0;
        std::int64_t nondecaying_run = 0;
        for (std::int64_t i = 0;; ++i) {
            if (kq >= 0 && i >= kq) break;  // threshold support ends at s + kq
            if (i >= kQueueCap) {
                throw numeric_error(
                    "stationary distribution truncation cap exceeded; F_s appears to "
                    "diverge for policy [" + config.policy.describe() + "]");
            }
            const double p = config.policy.join_prob(s, i);
            if (p <= 0.0) break;
            const double ratio = rho * p;
            lq.add(log_rho + std::log(p));
            lw.push_back(lq.sum);
            lmax = std::max(lmax, lq.sum);

            recent[n_recent++ % kWindow] = ratio;
            if (ratio >= 1.0 - 1e-12 && lq.sum >= 0.0) {
                if (++nondecaying_run > 200'000) {
                    throw numeric_error(
                        "stationary distribution diverges (F_s infinite) for policy [" +
                        config.policy.describe() + "]");
                }
            } else {
                nondecaying_run = 0;
            }

            double q = -1.0;  // certified bound on all future one-step ratios
            if (rho < 1.0) {
                q = rho;
            } else if (n_recent >= kWindow) {
                q = *std::max_element(recent, recent + kWindow);
            }
            if (q >= 0.0 && q < 1.0) {
                const double rel = std::exp(lq.sum - lmax) * q / (1.0 - q);
                if (rel < 0.1 * kTailTarget) {
                    tail_bound_rel = rel;
                    break;
                }
            }
        }
    }

    StationaryDistribution dist;
    dist.k_max = static_cast<std::int64_t>(lw.size()) - 1;
    dist.probs.resize(lw.size());
    long double total = 0.0L;
    for (std::size_t k = 0; k < lw.size(); ++k) {
        const double w = std::exp(lw[k] - lmax);
        dist.probs[k] = w;
        total += w;
    }
    const double inv = static_cast<double>(1.0L / total);
    for (double& p : dist.probs) p *= inv;
    // the tail bound was taken relative to exp(lmax) <= total mass
    dist.tail_mass_bound = tail_bound_rel / static_cast<double>(total);
    return dist;
}

PerformanceMetrics performance_metrics(const SystemConfig& config,
                                       const RevenueStructure& revenue) {
    const StationaryDistribution dist = stationary_distribution(config);
    const std::int64_t s = config.s;
    const auto rates = revenue.rates(s, config.gamma);

    long double delay = 0.0L, reject = 0.0L, queue = 0.0L, idle = 0.0L,
                wait = 0.0L, rev = 0.0L;
    for (std::int64_t k = 0; k <= dist.k_max; ++k) {
        const double pk = dist.probs[static_cast<std::size_t>(k)];
        rev += static_cast<long double>(rates(k)) * pk;
        if (k < s) {
            idle += static_cast<long double>(s - k) * pk;
        } else {
            const double p = config.policy.join_prob(s, k - s);
            delay += pk;
            reject += (1.0 - p) * pk;
            queue += static_cast<long double>(k - s) * pk;
            wait += (static_cast<long double>(k - s + 1) / static_cast<long double>(s)) * p * pk;
        }
    }
    PerformanceMetrics m;
    m.delay_prob = static_cast<double>(delay);
    m.rejection_prob = static_cast<double>(reject);
    m.mean_queue = static_cast<double>(queue);
    m.mean_idle = static_cast<double>(idle);
    m.expected_wait = static_cast<double>(wait);
    m.revenue_rate = static_cast<double>(rev);
    return m;
}

double revenue_rate_hat(const SystemConfig& config, const Economic& econ) {
    econ.validate();
    const StationaryDistribution dist = stationary_distribution(config);
    const std::int64_t s = config.s;
    long double queue = 0.0L, idle = 0.0L;
    for (std::int64_t k = 0; k <= dist.k_max; ++k) {
        const double pk = dist.probs[static_cast<std::size_t>(k)];
        if (k < s) {
            idle += static_cast<long double>(s - k) * pk;
        } else {
            queue += static_cast<long double>(k - s) * pk;
        }
    }
    const double sq = std::sqrt(static_cast<double>(s));
    return econ.d * config.gamma -
           (econ.a + econ.d) * static_cast<double>(idle) / sq -
           econ.b * static_cast<double>(queue) / sq;
}

}  // namespace qeddim
