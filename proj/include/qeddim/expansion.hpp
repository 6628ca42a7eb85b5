#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qeddim/policy.hpp"
#include "qeddim/transform.hpp"

namespace qeddim {

// Coefficients of the expansion (R_s - n_s)/q_s = R0 + R1/sqrt(s) + O(1/s),
// with the numerator/denominator building blocks exposed:
//   R0 = (W0L + W0R)/(B0 + F0),
//   R1 = (W1L + W1R)/(B0 + F0) - (W0L + W0R)(B1 + F1)/(B0 + F0)^2.
struct ExpansionCoefficients {
    double R0 = 0.0, R1 = 0.0;
    double W0L = 0.0, W1L = 0.0, W0R = 0.0, W1R = 0.0;
    double B0 = 0.0, B1 = 0.0, F0 = 0.0, F1 = 0.0;
};

// Scaled revenue profile r(x), given as one polynomial per side of 0
// (degree <= 3 each; coefficient i multiplies x^i). The value attached to the
// boundary state k = s is the right polynomial at 0. A profile may instead be
// a general continuous function, handled by quadrature.
struct RevenueProfile {
    std::vector<double> left;    // r(x) for x < 0
    std::vector<double> right;   // r(x) for x >= 0
    std::function<double(double)> fn;  // set => general profile (continuous)

    static RevenueProfile piecewise_linear(double left_slope, double right_slope,
                                           double value_at_zero);
    static RevenueProfile indicator_right();  // r(x) = 1{x >= 0}
    static RevenueProfile ramp_right();       // r(x) = x 1{x >= 0}
    static RevenueProfile economic(const Economic& econ, double gamma);
    static RevenueProfile general(std::function<double(double)> r);
};

// Moments M_n = integral_{-inf}^0 x^n e^{-x^2/2 - gamma x} dx via the
// recursion M0 = Phi/phi, M1 = -1 - gamma M0, Mn = -gamma M_{n-1} + (n-1) M_{n-2}.
std::vector<double> gaussian_left_moments(double gamma, int n_max);

// Theorem-style first two expansion coefficients for revenue profile r and
// scaled admission policy f at hedge gamma.
ExpansionCoefficients expansion_coeffs(const RevenueProfile& profile,
                                       const AdmissionPolicy& policy, double gamma);

// Delay probability: D_s = D0 + D1/sqrt(s) + O(1/s); r(x) = 1{x >= 0}.
std::array<double, 2> delay_coeffs(double gamma, const AdmissionPolicy& policy);

// Mean queue length: Q_s/sqrt(s) = Q0 + Q1/sqrt(s) + O(1/s); r(x) = x 1{x >= 0}.
std::array<double, 2> queue_coeffs(double gamma, const AdmissionPolicy& policy);

// Centered economic revenue: Rhat_s = Rhat0 + Rhat1/sqrt(s) + O(1/s) under a
// threshold policy (eta may be +infinity when gamma > 0).
std::array<double, 2> rhat_coeffs(const Economic& econ, double gamma, double eta);

// Closed form of the limit Rhat0 (threshold policy), useful as an identity
// check against the block assembly.
double rhat0_closed_form(const Economic& econ, double gamma, double eta);

}  // namespace qeddim
