#include "qeddim/policy.hpp"

#include <cmath>

#include "qeddim/errors.hpp"

namespace qeddim {

AdmissionPolicy AdmissionPolicy::exact_sequence(std::function<double(std::int64_t)> join_prob,
                                                std::string label) {
    if (!join_prob) throw validation_error("exact_sequence: null join probability");
    AdmissionPolicy p;
    p.kind_ = Kind::ExactSequence;
    p.p_ = std::move(join_prob);
    p.label_ = std::move(label);
    return p;
}

AdmissionPolicy AdmissionPolicy::threshold(double eta) {
    if (!(eta >= 0.0)) throw validation_error("threshold: eta must be >= 0");
    AdmissionPolicy p;
    p.kind_ = Kind::ScaledThreshold;
    p.eta_ = eta;
    p.gamma_min_ = std::isinf(eta) ? 0.0 : -std::numeric_limits<double>::infinity();
    p.label_ = std::isinf(eta) ? "threshold eta=inf (admit all)"
                               : "threshold eta=" + std::to_string(eta);
    return p;
}

AdmissionPolicy AdmissionPolicy::profile(std::function<double(double)> f,
                                         std::function<double(double)> tail_bound,
                                         double gamma_min, std::string label) {
    if (!f) throw validation_error("profile: null f");
    AdmissionPolicy p;
    p.kind_ = Kind::ScaledProfile;
    p.f_ = std::move(f);
    p.tail_bound_ = std::move(tail_bound);
    p.gamma_min_ = gamma_min;
    p.label_ = std::move(label);
    return p;
}

double AdmissionPolicy::eta() const {
    if (kind_ != Kind::ScaledThreshold) {
        throw validation_error("eta(): policy is not a scaled threshold");
    }
    return eta_;
}

double AdmissionPolicy::f(double x) const {
    switch (kind_) {
        case Kind::ScaledThreshold:
            return x <= eta_ ? 1.0 : 0.0;
        case Kind::ScaledProfile:
            return f_(x);
        default:
            throw validation_error("f(): exact-sequence policy has no scaled profile");
    }
}

double AdmissionPolicy::tail_bound(double x) const {
    if (kind_ == Kind::ScaledThreshold) return x <= eta_ ? 1.0 : 0.0;
    if (kind_ == Kind::ScaledProfile) return tail_bound_ ? tail_bound_(x) : f_(x);
    throw validation_error("tail_bound(): exact-sequence policy has no scaled profile");
}

double AdmissionPolicy::gamma_min() const {
    if (!is_scaled()) {
        throw validation_error("gamma_min(): exact-sequence policy has no scaled profile");
    }
    return gamma_min_;
}

std::int64_t threshold_level(double eta, std::int64_t s) {
    if (std::isinf(eta)) return -1;
    return static_cast<std::int64_t>(std::floor(eta * std::sqrt(static_cast<double>(s)) + 1e-9));
}

double AdmissionPolicy::join_prob(std::int64_t s, std::int64_t waiting) const {
    switch (kind_) {
        case Kind::ExactSequence: {
            const double v = p_(waiting);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw validation_error("join probability outside [0,1] at i=" +
                                       std::to_string(waiting));
            }
            return v;
        }
        case Kind::ScaledThreshold: {
            const std::int64_t k = threshold_level(eta_, s);
            if (k < 0) return 1.0;
            return waiting < k ? 1.0 : 0.0;
        }
        case Kind::ScaledProfile: {
            const double sq = std::sqrt(static_cast<double>(s));
            const double denom = f_(static_cast<double>(waiting) / sq);
            if (denom <= 0.0) return 0.0;
            const double num = f_(static_cast<double>(waiting + 1) / sq);
            const double v = num / denom;
            if (v > 1.0 + 1e-12) {
                throw validation_error("scaled profile is not nonincreasing near x=" +
                                       std::to_string(static_cast<double>(waiting) / sq));
            }
            return std::min(v, 1.0);
        }
    }
    return 0.0;
}

std::int64_t AdmissionPolicy::max_queue(std::int64_t s) const {
    if (kind_ == Kind::ScaledThreshold) return threshold_level(eta_, s);
    return -1;
}

void Economic::validate() const {
    if (!(a > 0.0)) throw validation_error("economic: fee a must be positive");
    if (!(b >= 0.0)) throw validation_error("economic: waiting cost b must be >= 0");
    if (!(d >= 0.0)) throw validation_error("economic: rejection penalty d must be >= 0");
}

RevenueStructure RevenueStructure::exact_rates(std::function<double(std::int64_t)> r) {
    if (!r) throw validation_error("exact_rates: null rate function");
    RevenueStructure rs;
    rs.kind_ = Kind::ExactRates;
    rs.r_exact_ = std::move(r);
    return rs;
}

RevenueStructure RevenueStructure::scaled(std::function<double(std::int64_t)> centering,
                                          std::function<double(std::int64_t)> scale,
                                          std::function<double(double)> r) {
    if (!centering || !scale || !r) throw validation_error("scaled: null component");
    RevenueStructure rs;
    rs.kind_ = Kind::ScaledProfile;
    rs.n_s_ = std::move(centering);
    rs.q_s_ = std::move(scale);
    rs.r_profile_ = std::move(r);
    return rs;
}

RevenueStructure RevenueStructure::economic(const Economic& econ) {
    econ.validate();
    RevenueStructure rs;
    rs.kind_ = Kind::Economic;
    rs.econ_ = econ;
    return rs;
}

const Economic& RevenueStructure::econ() const {
    if (kind_ != Kind::Economic) {
        throw validation_error("econ(): revenue structure is not economic");
    }
    return econ_;
}

std::function<double(std::int64_t)> RevenueStructure::rates(std::int64_t s,
                                                            double gamma) const {
    switch (kind_) {
        case Kind::ExactRates:
            return r_exact_;
        case Kind::ScaledProfile: {
            const double n = n_s_(s), q = q_s_(s);
            if (!(q > 0.0)) throw validation_error("scaled revenue: scale q_s must be positive");
            auto r = r_profile_;
            const double sq = std::sqrt(static_cast<double>(s));
            return [n, q, r, s, sq](std::int64_t k) {
                return n + q * r(static_cast<double>(k - s) / sq);
            };
        }
        case Kind::Economic: {
            const Economic e = econ_;
            const double sq = std::sqrt(static_cast<double>(s));
            const double hedge_term = e.d * gamma * sq;
            return [e, s, hedge_term](std::int64_t k) {
                if (k < s) {
                    return e.a * static_cast<double>(k) + hedge_term -
                           e.d * static_cast<double>(s - k);
                }
                return e.a * static_cast<double>(s) + hedge_term -
                       e.b * static_cast<double>(k - s);
            };
        }
    }
    throw validation_error("rates(): bad revenue structure");
}

double RevenueStructure::centering(std::int64_t s) const {
    switch (kind_) {
        case Kind::ExactRates:
            return 0.0;
        case Kind::ScaledProfile:
            return n_s_(s);
        case Kind::Economic:
            return econ_.a * static_cast<double>(s);
    }
    return 0.0;
}

double RevenueStructure::scale(std::int64_t s) const {
    switch (kind_) {
        case Kind::ExactRates:
            return 1.0;
        case Kind::ScaledProfile:
            return q_s_(s);
        case Kind::Economic:
            return std::sqrt(static_cast<double>(s));
    }
    return 1.0;
}

}  // namespace qeddim
