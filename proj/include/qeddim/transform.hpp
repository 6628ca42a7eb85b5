#pragma once

#include "qeddim/policy.hpp"

namespace qeddim {

// Laplace-type transform of a scaled admission profile:
//   L   = integral_0^inf f(x) e^{-gamma x} dx,
//   Lp  = dL/dgamma  = -integral x f e^{-gamma x},
//   Lpp = d^2L/dgamma^2 = integral x^2 f e^{-gamma x}.
// For the threshold profile these are closed forms; general profiles use
// adaptive quadrature with differentiation under the integral sign.
struct PolicyTransform {
    double L = 0.0;
    double Lp = 0.0;
    double Lpp = 0.0;
    double f0 = 1.0;
    double gamma_min = 0.0;
};

PolicyTransform policy_transform(const AdmissionPolicy& policy, double gamma);

// integral_0^eta x^m e^{-gamma x} dx for m <= 5; eta may be +infinity when
// gamma > 0. Series evaluation near gamma*eta = 0 avoids cancellation.
double exp_moment(int m, double gamma, double eta);

// integral_0^inf x^m f(x) e^{-gamma x} dx by certified adaptive quadrature.
double profile_moment(int m, const AdmissionPolicy& policy, double gamma,
                      double tol = 1e-11);

}  // namespace qeddim
