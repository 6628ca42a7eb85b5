#pragma once

#include <cstdint>

#include "qeddim/policy.hpp"

namespace qeddim {

struct GammaInterval {
    double lo = -2.0;
    double hi = 3.0;
    void validate() const;
};

// Result of a scalar optimization over gamma. order: -1 for the exact
// finite-s objective, otherwise the expansion order j of the objective.
struct OptimResult {
    double gamma_star = 0.0;
    double value = 0.0;
    int order = -1;
    int iterations = 0;
    double bracket_width = 0.0;
    bool at_boundary = false;  // optimizer pinned at an interval endpoint
};

// gamma*_s = argmax over Gamma of Rhat_s(gamma) at fixed s (64-point scan to
// select the bracket, golden-section to width 1e-8).
OptimResult maximize_exact(std::int64_t s, const Economic& econ, double eta,
                           const GammaInterval& interval);

// gamma_{j,s} = argmax of Rhat0 (j = 0; independent of s) or
// Rhat0 + Rhat1/sqrt(s) (j = 1).
OptimResult maximize_asymptotic(int order, std::int64_t s, const Economic& econ,
                                double eta, const GammaInterval& interval);

// Root of D(gamma) = epsilon where D is the exact finite-s delay probability
// (order = -1), D0 (order = 0, s ignored), or D0 + D1/sqrt(s) (order = 1).
// Bisection plus secant polish to |D - epsilon| <= 1e-10.
double delay_staffing(double epsilon, int order, std::int64_t s,
                      const AdmissionPolicy& policy, const GammaInterval& interval);

struct JointOptimum {
    double gamma = 0.0;
    double eta = 0.0;
    double value = 0.0;
    bool at_boundary = false;
};

struct EtaInterval {
    double lo = 0.0;
    double hi = 20.0;
};

// (gamma_opt, eta_opt) maximizing Rhat0(gamma, eta): 64x64 grid scan followed
// by coordinate-wise golden-section polish to 1e-6 per coordinate. Grid ties
// break toward the smallest gamma, then the smallest eta.
JointOptimum joint_optimum(const Economic& econ,
                           const GammaInterval& gamma_box = {-5.0, 5.0},
                           const EtaInterval& eta_box = {0.0, 20.0});

struct JointImprovement {
    double gamma_ratio = 0.0;      // gamma_opt / gamma_opt_inf
    double pct_improvement = 0.0;  // 100 (Ropt - Ropt_inf)/|Ropt_inf|
    JointOptimum joint;
    double gamma_inf = 0.0;
    double value_inf = 0.0;
};

// Joint optimization versus the classical eta = inf baseline
// gamma_opt_inf = argmax_{gamma > 0} Rhat0(gamma, inf).
JointImprovement joint_improvement(const Economic& econ);

// Refined dimensioning for the delay constraint D = epsilon: gamma_{1,s}
// represented as gamma_0 plus a correction series in the auxiliary functions
// A(g) = D0(g + gamma_0) - epsilon and E(g) = D1(g + gamma_0)/sqrt(s).
// n_max = 1 returns the two-term closed form gamma_0 - D1(gamma_0)/(sqrt(s) D0'(gamma_0));
// n_max >= 2 evaluates the series terms by Richardson-extrapolated central
// differences (step 1e-4); terms beyond n = 3 are O(s^-2) and not evaluated.
// If the terms stop contracting the result falls back to the two-term form
// and *fell_back (when given) is set.
double refined_gamma(double epsilon, std::int64_t s, const AdmissionPolicy& policy,
                     int n_max, bool* fell_back = nullptr);

// Scalar golden-section maximizer (scan + golden section), shared by the
// optimization entry points; exposed for reuse in sweeps and tests.
OptimResult golden_max(const std::function<double(double)>& f, double lo, double hi,
                       double tol = 1e-8, int scan_points = 64);

}  // namespace qeddim
