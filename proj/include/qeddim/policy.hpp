#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>

namespace qeddim {

// State-dependent admission control: an arrival that finds all servers busy
// and i customers waiting joins with probability p(i).
//
// Three representations:
//   ExactSequence   p(i) given directly (e.g. 1/(1+(i+1)*theta/s) for M/M/s+M);
//   ScaledThreshold the scaled profile f(x) = 1{x <= eta}; at system size s an
//                   arrival joins iff fewer than K = floor(eta*sqrt(s)) are
//                   waiting, so cumulative join products equal f((n+1)/sqrt(s))
//                   exactly and the queue never exceeds K;
//   ScaledProfile   a general nonincreasing f: R+ -> [0,1]; the finite-s
//                   sequence is derived from the cumulative-product rule
//                   p(n) = f((n+1)/sqrt(s)) / f(n/sqrt(s)).
class AdmissionPolicy {
public:
    enum class Kind { ExactSequence, ScaledThreshold, ScaledProfile };

    static AdmissionPolicy exact_sequence(std::function<double(std::int64_t)> join_prob,
                                          std::string label = "exact sequence");
    // eta may be +infinity (every customer joins; the M/M/s case).
    static AdmissionPolicy threshold(double eta);
    // tail_bound(x): certified nonincreasing upper bound on f on [x, inf);
    // defaults to f itself (valid since f is nonincreasing).
    // gamma_min: infimum of gamma for which integral f(x) e^{-gamma x} dx < inf.
    static AdmissionPolicy profile(std::function<double(double)> f,
                                   std::function<double(double)> tail_bound = {},
                                   double gamma_min = -std::numeric_limits<double>::infinity(),
                                   std::string label = "scaled profile");

    Kind kind() const { return kind_; }
    bool is_scaled() const { return kind_ != Kind::ExactSequence; }

    double eta() const;                // ScaledThreshold only
    double f(double x) const;          // scaled kinds only
    double f0() const { return f(0.0); }
    double tail_bound(double x) const; // scaled kinds only
    double gamma_min() const;          // scaled kinds only

    // Exact join probability at system size s for an arrival finding
    // `waiting` customers in queue.
    double join_prob(std::int64_t s, std::int64_t waiting) const;

    // Largest possible queue length at size s, or -1 if unbounded.
    std::int64_t max_queue(std::int64_t s) const;

    const std::string& describe() const { return label_; }

private:
    AdmissionPolicy() = default;

    Kind kind_ = Kind::ScaledThreshold;
    double eta_ = std::numeric_limits<double>::infinity();
    std::function<double(std::int64_t)> p_;
    std::function<double(double)> f_;
    std::function<double(double)> tail_bound_;
    double gamma_min_ = -std::numeric_limits<double>::infinity();
    std::string label_;
};

// Queue-length threshold at size s: K = floor(eta*sqrt(s)), with a tiny nudge
// so that exactly-integer eta*sqrt(s) is not pushed down by rounding.
std::int64_t threshold_level(double eta, std::int64_t s);

// Economic revenue scenario: fee a > 0 per served customer, waiting cost
// b > 0 per customer per unit time, rejection penalty d >= 0.
struct Economic {
    double a = 0.1;
    double b = 1.0;
    double d = 0.0;

    void validate() const;
};

// State-dependent revenue rates r_s(k). Either given exactly, induced by a
// scaled profile (r_s(k) = n(s) + q(s) * r((k-s)/sqrt(s))), or the economic
// scenario, whose exact rates are
//   r_s(k) = a k + d gamma sqrt(s) - d (s - k)        k < s,
//   r_s(k) = a s + d gamma sqrt(s) - b (k - s)        k >= s,
// with centering n(s) = a s and scale q(s) = sqrt(s).
class RevenueStructure {
public:
    enum class Kind { ExactRates, ScaledProfile, Economic };

    static RevenueStructure exact_rates(std::function<double(std::int64_t)> r);
    static RevenueStructure scaled(std::function<double(std::int64_t)> centering,
                                   std::function<double(std::int64_t)> scale,
                                   std::function<double(double)> r);
    static RevenueStructure economic(const Economic& econ);

    Kind kind() const { return kind_; }
    const Economic& econ() const;

    // Exact rate sequence for a concrete system (gamma matters only for the
    // economic scenario).
    std::function<double(std::int64_t)> rates(std::int64_t s, double gamma) const;

    double centering(std::int64_t s) const;
    double scale(std::int64_t s) const;

private:
    RevenueStructure() = default;

    Kind kind_ = Kind::Economic;
    std::function<double(std::int64_t)> r_exact_;
    std::function<double(std::int64_t)> n_s_;
    std::function<double(std::int64_t)> q_s_;
    std::function<double(double)> r_profile_;
    Economic econ_{};
};

}  // namespace qeddim
