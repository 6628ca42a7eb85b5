#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qeddim/dimensioning.hpp"
#include "qeddim/policy.hpp"

namespace qeddim {

// One system size of the gap sweep: the expansion error at gamma_eval and the
// four optimality gaps against the exact optimizer gamma*_s.
struct GapRow {
    std::int64_t s = 0;
    double err_expansion = 0.0;  // |Rhat_s - Rhat0 - Rhat1/sqrt(s)| at gamma_eval
    double gap_gamma_0 = 0.0;    // |gamma_0 - gamma*_s|
    double gap_gamma_1 = 0.0;    // |gamma_{1,s} - gamma*_s|
    double gap_value_0 = 0.0;    // Rhat_s(gamma*_s) - Rhat_s(gamma_0)
    double gap_value_1 = 0.0;    // Rhat_s(gamma*_s) - Rhat_s(gamma_{1,s})
};

struct GapReport {
    Economic econ;
    double eta = 2.0;
    double gamma_eval = 2.0;
    double gamma0 = 0.0;  // s-independent order-0 optimizer
    std::vector<GapRow> rows;
};

// Sweep parallelism cap: QED_DIM_THREADS (>=1), defaulting to the hardware
// concurrency.
int sweep_threads();

GapReport gap_sweep(const Economic& econ, double eta, double gamma_eval,
                    std::int64_t s_lo, std::int64_t s_hi,
                    const GammaInterval& interval = {-2.0, 3.0});

enum class DecayModel {
    FreeExponent,  // c1 + c2 / s^c3
    InvSqrt,       // c1 + c2 / sqrt(s)
    InvLinear,     // c1 + c2 / s
};

struct FitResult {
    DecayModel model = DecayModel::FreeExponent;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;  // meaningful only for FreeExponent
    double rss = 0.0;
    int iterations = 0;
};

// Least-squares fit of a decay law e(s). Fixed-exponent models solve the
// linear normal equations; the free-exponent model is seeded by log-log
// regression and refined by damped Gauss-Newton.
FitResult fit_decay(const std::vector<double>& s, const std::vector<double>& e,
                    DecayModel model);

// Joint staffing-and-admission tables over the ratio grids r1 = a/(a+d),
// r2 = (a+d)/b. Economics are reconstructed as a = r1, a+d = 1, b = 1/r2.
struct JointTableCell {
    double r1 = 0.0, r2 = 0.0;
    double gamma = 0.0, eta = 0.0;       // optimal pair (Table 1)
    double gamma_ratio = 0.0;            // Table 2 entries
    double pct_improvement = 0.0;
};

struct JointTables {
    std::vector<double> r1_grid, r2_grid;
    std::vector<JointTableCell> cells;  // row-major over (r1, r2)
};

JointTables joint_tables(const std::vector<double>& r1_grid,
                         const std::vector<double>& r2_grid);
JointTables joint_tables();  // the default 9x9 grid

// Round half away from zero to the given number of decimals.
double round_half_away(double x, int decimals);

// CSV with header: s,err_expansion,gap_gamma_0,gap_gamma_1,gap_value_0,gap_value_1
std::string to_csv(const GapReport& report);
std::string to_json(const GapReport& report);

}  // namespace qeddim
