#pragma once

#include <functional>

namespace qeddim {

// Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b] to absolute
// tolerance tol. Throws numeric_error if the error estimate cannot be met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

// Integral of f over [a, inf) for integrands with a certified decaying
// envelope: |f(x)| <= envelope(x) for x >= a, and envelope has a finite,
// eventually geometric-in-doubling tail. Truncates where the envelope bound
// on the remaining mass drops below tol, then integrates adaptively.
// Throws numeric_error if no such truncation point is found (divergence).
double integrate_upper(const std::function<double(double)>& f, double a,
                       const std::function<double(double)>& envelope,
                       double tol = 1e-12);

}  // namespace qeddim
