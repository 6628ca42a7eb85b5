#pragma once

namespace qeddim {

// Scaled complementary error function erfcx(x) = exp(x^2) * erfc(x).
double erfcx(double x);

// Standard normal density and distribution function.
double normal_pdf(double x);
double normal_cdf(double x);

// Mills ratio Phi(gamma)/phi(gamma), stable for large negative gamma.
// Relative error below 1e-13 for |gamma| <= 8.
double mills_ratio(double gamma);

// Two-sided p quantile of Student's t with nu degrees of freedom
// (Cornish-Fisher expansion; intended for CI construction, nu >= 5).
double student_t_quantile(double p, int nu);

}  // namespace qeddim
