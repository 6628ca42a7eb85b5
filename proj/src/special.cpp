#include "qeddim/special.hpp"

#include <cmath>
#include <limits>

namespace qeddim {

namespace {

constexpr double kSqrtPiOver2 = 1.2533141373155002512078826424;  // sqrt(pi/2)
constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599;   // 1/sqrt(2*pi)
constexpr double kInvSqrtPi = 0.5641895835477562869480794516;    // 1/sqrt(pi)
constexpr double kInvSqrt2 = 0.7071067811865475244008443621;     // 1/sqrt(2)

// Asymptotic series erfcx(x) ~ 1/(x sqrt(pi)) * sum (-1)^n (2n-1)!!/(2x^2)^n.
// For x >= 15 twelve terms give relative error below 1e-17.
double erfcx_asymptotic(double x) {
    const double ix2 = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= 12; ++n) {
        term *= -(2 * n - 1) * ix2;
        sum += term;
    }
    return kInvSqrtPi / x * sum;
}

}  // namespace

double erfcx(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) {
        // erfc(x) = 2 - erfc(-x); exp(x^2) overflows past x ~ -26.6, where the
        // true value is beyond double range anyway.
        return 2.0 * std::exp(x * x) - erfcx(-x);
    }
    if (x >= 15.0) return erfcx_asymptotic(x);
    // erfc(x) stays normal up to x ~ 26.5 and exp(x^2) < DBL_MAX here, so the
    // direct product is accurate to a few ulps times x^2*eps.
    return std::exp(x * x) * std::erfc(x);
}

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double mills_ratio(double gamma) {
    // Phi(g)/phi(g) = sqrt(pi/2) * erfcx(-g/sqrt(2)); no cancellation for g << 0.
    return kSqrtPiOver2 * erfcx(-gamma * kInvSqrt2);
}

double student_t_quantile(double p, int nu) {
    // Inverse normal for the central two-sided quantile, then Cornish-Fisher
    // correction in powers of 1/nu (Abramowitz & Stegun 26.7.5).
    const double q = 0.5 + 0.5 * p;
    // Acklam-style rational inverse normal is overkill here; Newton on the cdf
    // from a crude seed converges in a handful of steps.
    double z = 0.0;
    {
        double lo = 0.0, hi = 10.0;
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (lo + hi);
            (normal_cdf(mid) < q ? lo : hi) = mid;
        }
        z = 0.5 * (lo + hi);
    }
    const double z2 = z * z, z3 = z2 * z, z5 = z3 * z2, z7 = z5 * z2, z9 = z7 * z2;
    const double n = nu;
    double t = z;
    t += (z3 + z) / (4.0 * n);
    t += (5.0 * z5 + 16.0 * z3 + 3.0 * z) / (96.0 * n * n);
    t += (3.0 * z7 + 19.0 * z5 + 17.0 * z3 - 15.0 * z) / (384.0 * n * n * n);
    t += (79.0 * z9 + 776.0 * z7 + 1482.0 * z5 - 1920.0 * z3 - 945.0 * z) /
         (92160.0 * n * n * n * n);
    return t;
}

}  // namespace qeddim
