#include "qeddim/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "qeddim/errors.hpp"

namespace qeddim {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double gauss = fc * kWg[3];
    double kron = fc * kWgk[7];
    for (int i = 0; i < 7; ++i) {
        const double x = h * kXgk[i];
        const double fsum = f(c - x) + f(c + x);
        kron += fsum * kWgk[i];
        if (i % 2 == 1) gauss += fsum * kWg[i / 2];
    }
    return {kron * h, std::abs(kron - gauss) * h};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth) {
    const PanelResult r = gk15(f, a, b);
    if (r.error <= tol || b - a < 1e-14 * (std::abs(a) + std::abs(b) + 1.0)) {
        return r.integral;
    }
    if (depth > 60) {
        throw numeric_error("adaptive quadrature failed to converge");
    }
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth + 1) +
           adapt(f, c, b, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(a <= b)) throw validation_error("integrate: bad interval");
    if (a == b) return 0.0;
    return adapt(f, a, b, tol, 0);
}

double integrate_upper(const std::function<double(double)>& f, double a,
                       const std::function<double(double)>& envelope,
                       double tol) {
    // Find a cut X where the (nonincreasing) envelope certifies a tail mass
    // below tol: blocks [X, 2X] are bounded by envelope(X)*X, and we require
    // the bound to halve per doubling so the geometric total stays under
    // 2*envelope(X)*X.
    double x = std::max(std::abs(a), 1.0);
    for (int i = 0; i < 80; ++i) {
        // crude 3-point sup over [x, 2x] tolerates an interior bump
        const double sup =
            std::max({envelope(x), envelope(1.5 * x), envelope(2.0 * x)});
        const double bound = sup * x;
        if (bound >= 0.0 && bound < 0.25 * tol &&
            envelope(2.0 * x) * 2.0 * x <= 0.5 * bound + 0.25 * tol) {
            return integrate(f, a, 2.0 * x, 0.5 * tol);
        }
        x *= 2.0;
        if (!std::isfinite(x) || !std::isfinite(envelope(x))) break;
    }
    throw numeric_error("integrate_upper: tail does not decay (divergent integral)");
}

}  // namespace qeddim
