#include "qeddim/expansion.hpp"

#include <cmath>

#include "qeddim/errors.hpp"
#include "qeddim/quadrature.hpp"
#include "qeddim/special.hpp"

namespace qeddim {

namespace {

double poly_eval(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

double poly_at_zero(const std::vector<double>& c) { return c.empty() ? 0.0 : c[0]; }

// sum_i c_i * moment(i + shift)
double combine(const std::vector<double>& c, const std::vector<double>& m, int shift) {
    double v = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * m[i + shift];
    return v;
}

}  // namespace

RevenueProfile RevenueProfile::piecewise_linear(double left_slope, double right_slope,
                                                double value_at_zero) {
    RevenueProfile r;
    r.left = {value_at_zero, left_slope};
    r.right = {value_at_zero, right_slope};
    return r;
}

RevenueProfile RevenueProfile::indicator_right() {
    RevenueProfile r;
    r.right = {1.0};
    return r;
}

RevenueProfile RevenueProfile::ramp_right() {
    RevenueProfile r;
    r.right = {0.0, 1.0};
    return r;
}

RevenueProfile RevenueProfile::economic(const Economic& econ, double gamma) {
    econ.validate();
    return piecewise_linear(econ.a + econ.d, -econ.b, econ.d * gamma);
}

RevenueProfile RevenueProfile::general(std::function<double(double)> r) {
    if (!r) throw validation_error("general revenue profile: null function");
    RevenueProfile p;
    p.fn = std::move(r);
    return p;
}

std::vector<double> gaussian_left_moments(double gamma, int n_max) {
    std::vector<double> m(static_cast<std::size_t>(n_max) + 1);
    m[0] = mills_ratio(gamma);
    if (n_max >= 1) m[1] = -1.0 - gamma * m[0];
    for (int n = 2; n <= n_max; ++n) {
        m[static_cast<std::size_t>(n)] =
            -gamma * m[static_cast<std::size_t>(n - 1)] +
            (n - 1) * m[static_cast<std::size_t>(n - 2)];
    }
    return m;
}

ExpansionCoefficients expansion_coeffs(const RevenueProfile& profile,
                                       const AdmissionPolicy& policy, double gamma) {
    if (!policy.is_scaled()) {
        throw validation_error("expansion_coeffs: policy has no scaled profile");
    }
    const PolicyTransform pt = policy_transform(policy, gamma);

    ExpansionCoefficients c;
    c.B0 = mills_ratio(gamma);
    c.B1 = (2.0 + gamma * gamma + gamma * gamma * gamma * c.B0) / 3.0;
    c.F0 = pt.L;
    c.F1 = 0.5 * gamma * gamma * pt.Lp - 0.5 * pt.f0;

    double r_left0, r_right0;
    if (profile.fn) {
        // general continuous profile: both sides by quadrature
        const auto& r = profile.fn;
        r_left0 = r_right0 = r(0.0);
        const double cut = std::abs(gamma) + 13.0;  // weight below ~1e-18 past here
        auto wleft = [&](double x) { return std::exp(-0.5 * x * x - gamma * x); };
        c.W0L = integrate([&](double x) { return r(x) * wleft(x); }, -cut, 0.0, 1e-11);
        c.W1L = 0.5 * integrate(
                    [&](double x) {
                        return (x * x * x / 3.0 - (1.0 + gamma * gamma) * x) * r(x) * wleft(x);
                    },
                    -cut, 0.0, 1e-11);
        const bool finite_threshold =
            policy.kind() == AdmissionPolicy::Kind::ScaledThreshold && !std::isinf(policy.eta());
        auto envelope = [&](double x) {
            return (std::abs(r(x)) + 1.0) * (1.0 + x) * policy.tail_bound(x) *
                   std::exp(-gamma * x);
        };
        auto right0 = [&](double x) { return r(x) * policy.f(x) * std::exp(-gamma * x); };
        auto right1 = [&](double x) { return x * r(x) * policy.f(x) * std::exp(-gamma * x); };
        if (finite_threshold) {
            c.W0R = integrate(right0, 0.0, policy.eta(), 1e-11);
            c.W1R = -0.5 * gamma * gamma * integrate(right1, 0.0, policy.eta(), 1e-11);
        } else {
            c.W0R = integrate_upper(right0, 0.0, envelope, 1e-11);
            c.W1R = -0.5 * gamma * gamma * integrate_upper(right1, 0.0, envelope, 1e-11);
        }
    } else {
        if (profile.left.size() > 4 || profile.right.size() > 4) {
            throw validation_error("expansion_coeffs: polynomial degree above 3");
        }
        r_left0 = poly_at_zero(profile.left);
        r_right0 = poly_at_zero(profile.right);
        const std::vector<double> m = gaussian_left_moments(gamma, 6);
        c.W0L = combine(profile.left, m, 0);
        // (x^3/3 - (1+gamma^2) x) against each left monomial
        double w1l = 0.0;
        for (std::size_t i = 0; i < profile.left.size(); ++i) {
            w1l += profile.left[i] *
                   (m[i + 3] / 3.0 - (1.0 + gamma * gamma) * m[i + 1]);
        }
        c.W1L = 0.5 * w1l;
        std::vector<double> t(6);
        if (policy.kind() == AdmissionPolicy::Kind::ScaledThreshold) {
            for (int i = 0; i < 6; ++i) t[i] = exp_moment(i, gamma, policy.eta());
        } else {
            for (int i = 0; i < 6; ++i) t[i] = profile_moment(i, policy, gamma);
        }
        c.W0R = combine(profile.right, t, 0);
        c.W1R = -0.5 * gamma * gamma * combine(profile.right, t, 1);
    }

    // Boundary bookkeeping of the state k = s (value r_right0) and the two
    // half-weight endpoint corrections of the left and right sums.
    c.W1L += r_right0 - 0.5 * r_left0;
    c.W1R += -0.5 * r_right0 * pt.f0;

    const double den = c.B0 + c.F0;
    const double w0 = c.W0L + c.W0R;
    const double w1 = c.W1L + c.W1R;
    c.R0 = w0 / den;
    c.R1 = w1 / den - w0 * (c.B1 + c.F1) / (den * den);
    return c;
}

std::array<double, 2> delay_coeffs(double gamma, const AdmissionPolicy& policy) {
    const ExpansionCoefficients c =
        expansion_coeffs(RevenueProfile::indicator_right(), policy, gamma);
    return {c.R0, c.R1};
}

std::array<double, 2> queue_coeffs(double gamma, const AdmissionPolicy& policy) {
    const ExpansionCoefficients c =
        expansion_coeffs(RevenueProfile::ramp_right(), policy, gamma);
    return {c.R0, c.R1};
}

std::array<double, 2> rhat_coeffs(const Economic& econ, double gamma, double eta) {
    const ExpansionCoefficients c = expansion_coeffs(
        RevenueProfile::economic(econ, gamma), AdmissionPolicy::threshold(eta), gamma);
    return {c.R0, c.R1};
}

double rhat0_closed_form(const Economic& econ, double gamma, double eta) {
    econ.validate();
    const double m = mills_ratio(gamma);
    const double L = exp_moment(0, gamma, eta);
    const double t1 = exp_moment(1, gamma, eta);
    return econ.d * gamma -
           ((econ.a + econ.d) * (1.0 + gamma * m) + econ.b * t1) / (m + L);
}

}  // namespace qeddim
