#include "qeddim/transform.hpp"

#include <cmath>

#include "qeddim/errors.hpp"
#include "qeddim/quadrature.hpp"

namespace qeddim {

namespace {

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

// Series form eta^{m+1} sum_j (-gamma eta)^j / (j! (m+j+1)), used where the
// closed forms lose digits to cancellation.
double exp_moment_series(int m, double gamma, double eta) {
    const double x = gamma * eta;
    double term = 1.0;
    double sum = 1.0 / (m + 1);
    for (int j = 1; j <= 24; ++j) {
        term *= -x / j;
        sum += term / (m + j + 1);
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::pow(eta, m + 1) * sum;
}

}  // namespace

double exp_moment(int m, double gamma, double eta) {
    if (m < 0 || m > 5) throw validation_error("exp_moment: m out of range");
    if (!(eta >= 0.0)) throw validation_error("exp_moment: eta must be >= 0");
    if (std::isinf(eta)) {
        if (!(gamma > 0.0)) {
            throw numeric_error("exp_moment diverges: eta = inf requires gamma > 0");
        }
        return factorial(m) / std::pow(gamma, m + 1);
    }
    if (eta == 0.0) return 0.0;
    const double x = gamma * eta;
    if (std::abs(x) < 0.5) return exp_moment_series(m, gamma, eta);
    // upward recursion T_m = (m T_{m-1} - eta^m e^{-x}) / gamma
    const double ex = std::exp(-x);
    double t = (1.0 - ex) / gamma;
    double eta_pow = 1.0;
    for (int i = 1; i <= m; ++i) {
        eta_pow *= eta;
        t = (i * t - eta_pow * ex) / gamma;
    }
    return t;
}

double profile_moment(int m, const AdmissionPolicy& policy, double gamma,
                      double tol) {
    if (!policy.is_scaled()) {
        throw validation_error("profile_moment: policy has no scaled profile");
    }
    if (policy.kind() == AdmissionPolicy::Kind::ScaledThreshold &&
        !std::isinf(policy.eta())) {
        // integrand vanishes past eta; integrate the smooth part directly
        auto f = [&](double x) { return std::pow(x, m) * std::exp(-gamma * x); };
        return integrate(f, 0.0, policy.eta(), tol);
    }
    auto integrand = [&, m, gamma](double x) {
        return std::pow(x, m) * policy.f(x) * std::exp(-gamma * x);
    };
    auto envelope = [&, m, gamma](double x) {
        return std::pow(x, m) * policy.tail_bound(x) * std::exp(-gamma * x);
    };
    try {
        return integrate_upper(integrand, 0.0, envelope, tol);
    } catch (const numeric_error&) {
        throw numeric_error(
            "profile transform diverges at gamma=" + std::to_string(gamma) +
            " for policy [" + policy.describe() + "] (gamma <= gamma_min?)");
    }
}

PolicyTransform policy_transform(const AdmissionPolicy& policy, double gamma) {
    if (!policy.is_scaled()) {
        throw validation_error("policy_transform: exact sequences have no scaled profile");
    }
    PolicyTransform t;
    t.f0 = policy.f0();
    t.gamma_min = policy.gamma_min();
    if (!(gamma > t.gamma_min)) {
        throw numeric_error("policy transform diverges: gamma=" + std::to_string(gamma) +
                            " <= gamma_min=" + std::to_string(t.gamma_min));
    }
    if (policy.kind() == AdmissionPolicy::Kind::ScaledThreshold) {
        const double eta = policy.eta();
        t.L = exp_moment(0, gamma, eta);
        t.Lp = -exp_moment(1, gamma, eta);
        t.Lpp = exp_moment(2, gamma, eta);
        return t;
    }
    // derivatives via differentiation under the integral, never by finite
    // differences of L
    t.L = profile_moment(0, policy, gamma);
    t.Lp = -profile_moment(1, policy, gamma);
    t.Lpp = profile_moment(2, policy, gamma);
    return t;
}

}  // namespace qeddim
