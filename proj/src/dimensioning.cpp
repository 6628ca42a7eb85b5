#include "qeddim/dimensioning.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "qeddim/errors.hpp"
#include "qeddim/expansion.hpp"
#include "qeddim/markov.hpp"

namespace qeddim {

namespace {

constexpr double kGolden = 0.6180339887498948482;  // (sqrt(5)-1)/2

double rhat_exact(std::int64_t s, double gamma, const Economic& econ, double eta) {
    SystemConfig cfg{s, gamma, AdmissionPolicy::threshold(eta)};
    return revenue_rate_hat(cfg, econ);
}

// D0'(gamma) by Richardson central differences on the closed form.
double d0_derivative(const AdmissionPolicy& policy, double gamma, double h = 1e-4) {
    auto d0 = [&](double g) { return delay_coeffs(g, policy)[0]; };
    const double d1 = (d0(gamma + h) - d0(gamma - h)) / (2.0 * h);
    const double d2 = (d0(gamma + 2.0 * h) - d0(gamma - 2.0 * h)) / (4.0 * h);
    return (4.0 * d1 - d2) / 3.0;
}

}  // namespace

void GammaInterval::validate() const {
    if (!(lo < hi)) throw validation_error("gamma interval: lo must be below hi");
}

OptimResult golden_max(const std::function<double(double)>& f, double lo, double hi,
                       double tol, int scan_points) {
    if (!(lo < hi)) throw validation_error("golden_max: empty interval");
    // Coarse scan guards against non-unimodal objectives before the golden
    // section narrows in.
    int best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    std::vector<double> xs(static_cast<std::size_t>(scan_points));
    for (int i = 0; i < scan_points; ++i) {
        const double x = lo + (hi - lo) * i / (scan_points - 1);
        xs[static_cast<std::size_t>(i)] = x;
        const double v = f(x);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    double a = xs[static_cast<std::size_t>(std::max(best - 1, 0))];
    double b = xs[static_cast<std::size_t>(std::min(best + 1, scan_points - 1))];

    int iters = 0;
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGolden * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGolden * (b - a);
            fd = f(d);
        }
        ++iters;
    }
    OptimResult r;
    r.gamma_star = 0.5 * (a + b);
    r.value = f(r.gamma_star);
    r.iterations = iters;
    r.bracket_width = b - a;
    r.at_boundary = (best == 0 && r.gamma_star < xs[0] + tol * 2.0) ||
                    (best == scan_points - 1 &&
                     r.gamma_star > xs[static_cast<std::size_t>(scan_points - 1)] - tol * 2.0);
    return r;
}

OptimResult maximize_exact(std::int64_t s, const Economic& econ, double eta,
                           const GammaInterval& interval) {
    interval.validate();
    econ.validate();
    if (!(interval.hi < std::sqrt(static_cast<double>(s)))) {
        throw validation_error("maximize_exact: interval must satisfy hi < sqrt(s)");
    }
    OptimResult r = golden_max(
        [&](double g) { return rhat_exact(s, g, econ, eta); }, interval.lo, interval.hi);
    r.order = -1;
    return r;
}

OptimResult maximize_asymptotic(int order, std::int64_t s, const Economic& econ,
                                double eta, const GammaInterval& interval) {
    interval.validate();
    econ.validate();
    if (order != 0 && order != 1) {
        throw validation_error("maximize_asymptotic: order must be 0 or 1");
    }
    if (order == 1 && s < 1) {
        throw validation_error("maximize_asymptotic: order 1 needs s >= 1");
    }
    const double sq = order == 1 ? std::sqrt(static_cast<double>(s)) : 1.0;
    OptimResult r = golden_max(
        [&](double g) {
            const auto c = rhat_coeffs(econ, g, eta);
            return order == 0 ? c[0] : c[0] + c[1] / sq;
        },
        interval.lo, interval.hi);
    r.order = order;
    return r;
}

double delay_staffing(double epsilon, int order, std::int64_t s,
                      const AdmissionPolicy& policy, const GammaInterval& interval) {
    interval.validate();
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw validation_error("delay_staffing: epsilon must lie in (0,1)");
    }
    if (order != -1 && order != 0 && order != 1) {
        throw validation_error("delay_staffing: order must be -1 (exact), 0 or 1");
    }
    std::function<double(double)> dfun;
    if (order == -1) {
        dfun = [&policy, s](double g) {
            SystemConfig cfg{s, g, policy};
            return performance_metrics(cfg, RevenueStructure::exact_rates(
                                                [s](std::int64_t k) { return k >= s ? 1.0 : 0.0; }))
                .delay_prob;
        };
    } else if (order == 0) {
        dfun = [&policy](double g) { return delay_coeffs(g, policy)[0]; };
    } else {
        const double sq = std::sqrt(static_cast<double>(s));
        dfun = [&policy, sq](double g) {
            const auto c = delay_coeffs(g, policy);
            return c[0] + c[1] / sq;
        };
    }
    double lo = interval.lo, hi = interval.hi;
    double flo = dfun(lo) - epsilon, fhi = dfun(hi) - epsilon;
    if (!(flo > 0.0 && fhi < 0.0)) {
        throw numeric_error("delay_staffing: no sign change on interval: D(lo)-eps=" +
                            std::to_string(flo) + ", D(hi)-eps=" + std::to_string(fhi));
    }
    // bisection to a narrow bracket, then secant polish
    for (int i = 0; i < 80 && hi - lo > 1e-6; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = dfun(mid) - epsilon;
        if (fm > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
    for (int i = 0; i < 60; ++i) {
        if (std::abs(f1) <= 1e-10) return x1;
        const double denom = f1 - f0;
        double x2;
        if (denom == 0.0) {
            x2 = 0.5 * (lo + hi);
        } else {
            x2 = x1 - f1 * (x1 - x0) / denom;
            if (!(x2 > lo && x2 < hi)) x2 = 0.5 * (lo + hi);
        }
        const double f2 = dfun(x2) - epsilon;
        if (f2 > 0.0) lo = x2; else hi = x2;
        x0 = x1; f0 = f1;
        x1 = x2; f1 = f2;
    }
    if (std::abs(f1) > 1e-10) {
        throw numeric_error("delay_staffing: root polish failed to reach 1e-10");
    }
    return x1;
}

JointOptimum joint_optimum(const Economic& econ, const GammaInterval& gamma_box,
                           const EtaInterval& eta_box) {
    econ.validate();
    gamma_box.validate();
    if (!(eta_box.lo >= 0.0 && eta_box.lo < eta_box.hi)) {
        throw validation_error("joint_optimum: bad eta interval");
    }
    auto obj = [&](double g, double e) { return rhat0_closed_form(econ, g, e); };

    constexpr int n = 64;
    double bg = gamma_box.lo, be = eta_box.lo;
    double bv = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double g = gamma_box.lo + (gamma_box.hi - gamma_box.lo) * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double e = eta_box.lo + (eta_box.hi - eta_box.lo) * j / (n - 1);
            const double v = obj(g, e);
            if (v > bv) {  // strictly greater: ties keep smallest gamma, then eta
                bv = v;
                bg = g;
                be = e;
            }
        }
    }
    const double dg = (gamma_box.hi - gamma_box.lo) / (n - 1);
    const double de = (eta_box.hi - eta_box.lo) / (n - 1);
    for (int round = 0; round < 60; ++round) {
        const double g_prev = bg, e_prev = be;
        const double glo = std::max(gamma_box.lo, bg - 1.5 * dg);
        const double ghi = std::min(gamma_box.hi, bg + 1.5 * dg);
        bg = golden_max([&](double g) { return obj(g, be); }, glo, ghi, 1e-7, 9).gamma_star;
        const double elo = std::max(eta_box.lo, be - 1.5 * de);
        const double ehi = std::min(eta_box.hi, be + 1.5 * de);
        be = golden_max([&](double e) { return obj(bg, e); }, elo, ehi, 1e-7, 9).gamma_star;
        if (std::abs(bg - g_prev) < 1e-6 && std::abs(be - e_prev) < 1e-6) break;
    }
    JointOptimum out;
    out.gamma = bg;
    out.eta = be;
    out.value = obj(bg, be);
    out.at_boundary = bg < gamma_box.lo + 1e-5 || bg > gamma_box.hi - 1e-5 ||
                      be > eta_box.hi - 1e-5;
    return out;
}

JointImprovement joint_improvement(const Economic& econ) {
    econ.validate();
    JointImprovement out;
    out.joint = joint_optimum(econ);
    // eta = inf baseline needs gamma > 0 (L = 1/gamma)
    const OptimResult base = golden_max(
        [&](double g) {
            return rhat0_closed_form(econ, g, std::numeric_limits<double>::infinity());
        },
        1e-6, 8.0, 1e-9);
    if (base.gamma_star < 1e-4) {
        throw numeric_error("joint_improvement: eta=inf baseline degenerates (optimum at gamma->0)");
    }
    out.gamma_inf = base.gamma_star;
    out.value_inf = base.value;
    out.gamma_ratio = out.joint.gamma / base.gamma_star;
    out.pct_improvement = 100.0 * (out.joint.value - base.value) / std::abs(base.value);
    return out;
}

double refined_gamma(double epsilon, std::int64_t s, const AdmissionPolicy& policy,
                     int n_max, bool* fell_back) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw validation_error("refined_gamma: epsilon must lie in (0,1)");
    }
    if (n_max < 1) throw validation_error("refined_gamma: n_max must be >= 1");
    if (fell_back) *fell_back = false;

    const double glo = std::max(-3.0, policy.gamma_min() + 1e-6);
    const double gamma0 = delay_staffing(epsilon, 0, s, policy, {glo, 6.0});
    const double sq = std::sqrt(static_cast<double>(s));
    const double d0p = d0_derivative(policy, gamma0);
    if (std::abs(d0p) < 1e-12) {
        throw numeric_error("refined_gamma: D0'(gamma0) vanishes");
    }
    const double two_term = gamma0 - delay_coeffs(gamma0, policy)[1] / (sq * d0p);
    if (n_max == 1) return two_term;

    auto afun = [&](double x) { return delay_coeffs(gamma0 + x, policy)[0] - epsilon; };
    auto efun = [&](double x) { return delay_coeffs(gamma0 + x, policy)[1] / sq; };
    const double h = 1e-4;
    auto deriv = [h](const std::function<double(double)>& f, double x) {
        const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
        const double d2 = (f(x + 2.0 * h) - f(x - 2.0 * h)) / (4.0 * h);
        return (4.0 * d1 - d2) / 3.0;
    };
    // g_n(x) = (A'(x) + E'(x)) (x/A(x))^{n+1} E(x)^n, smooth through 0
    auto gfun = [&](int nn, double x) {
        return (deriv(afun, x) + deriv(efun, x)) *
               std::pow(x / afun(x), nn + 1) * std::pow(efun(x), nn);
    };
    const double hd = 5e-3;  // differentiation step for the series bracket
    auto g_at_zero = [&](int nn) {
        auto even = [&](double t) { return 0.5 * (gfun(nn, t) + gfun(nn, -t)); };
        return (4.0 * even(hd) - even(2.0 * hd)) / 3.0;
    };

    double gamma_bar = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int nn = 1; nn <= n_max; ++nn) {
        double term;
        if (nn == 1) {
            term = -g_at_zero(1);
        } else if (nn == 2) {
            const double d1 = (gfun(2, hd) - gfun(2, -hd)) / (2.0 * hd);
            const double d2 = (gfun(2, 2.0 * hd) - gfun(2, -2.0 * hd)) / (4.0 * hd);
            term = (4.0 * d1 - d2) / 3.0;
        } else if (nn == 3) {
            const double g0 = g_at_zero(3);
            term = -0.5 * (gfun(3, hd) - 2.0 * g0 + gfun(3, -hd)) / (hd * hd);
        } else {
            // derivatives beyond order 2 of the bracket are numerically
            // fragile; contributions are O(s^-2) and below
            break;
        }
        const double mag = std::abs(term);
        if (nn >= 2 && mag > prev_mag) {
            if (fell_back) *fell_back = true;
            return two_term;
        }
        prev_mag = mag;
        gamma_bar += term;
    }
    return gamma0 + gamma_bar;
}

}  // namespace qeddim
