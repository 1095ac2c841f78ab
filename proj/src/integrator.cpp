#include "memsim/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "memsim/errors.hpp"

namespace memsim {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b_hat, the embedded 4th-order error weights.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kMinShrink = 0.2;
constexpr double kMaxGrow = 5.0;

}  // namespace

AdaptiveStepper::AdaptiveStepper(std::size_t n, Options options, Projection projection)
    : n_(n),
      options_(options),
      projection_(std::move(projection)),
      k_(7, std::vector<double>(n, 0.0)),
      y_stage_(n, 0.0),
      y_new_(n, 0.0),
      err_(n, 0.0) {}

void AdaptiveStepper::prime(const Rhs& f, double t, std::span<const double> y) {
    f(t, y, k_[0]);
    have_k1_ = true;
}

AdaptiveStepper::Result AdaptiveStepper::step(const Rhs& f, double& t, std::vector<double>& y,
                                              double dt) {
    if (!have_k1_) prime(f, t, y);
    Result result;
    auto& k1 = k_[0];
    auto& k2 = k_[1];
    auto& k3 = k_[2];
    auto& k4 = k_[3];
    auto& k5 = k_[4];
    auto& k6 = k_[5];
    auto& k7 = k_[6];

    for (;;) {
        const double h = dt;
        for (std::size_t j = 0; j < n_; ++j) y_stage_[j] = y[j] + h * a21 * k1[j];
        f(t + c2 * h, y_stage_, k2);
        for (std::size_t j = 0; j < n_; ++j) y_stage_[j] = y[j] + h * (a31 * k1[j] + a32 * k2[j]);
        f(t + c3 * h, y_stage_, k3);
        for (std::size_t j = 0; j < n_; ++j)
            y_stage_[j] = y[j] + h * (a41 * k1[j] + a42 * k2[j] + a43 * k3[j]);
        f(t + c4 * h, y_stage_, k4);
        for (std::size_t j = 0; j < n_; ++j)
            y_stage_[j] = y[j] + h * (a51 * k1[j] + a52 * k2[j] + a53 * k3[j] + a54 * k4[j]);
        f(t + c5 * h, y_stage_, k5);
        for (std::size_t j = 0; j < n_; ++j)
            y_stage_[j] =
                y[j] + h * (a61 * k1[j] + a62 * k2[j] + a63 * k3[j] + a64 * k4[j] + a65 * k5[j]);
        f(t + h, y_stage_, k6);
        for (std::size_t j = 0; j < n_; ++j)
            y_new_[j] = y[j] + h * (b1 * k1[j] + b3 * k3[j] + b4 * k4[j] + b5 * k5[j] + b6 * k6[j]);
        f(t + h, y_new_, k7);

        double err = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            const double e = h * (e1 * k1[j] + e3 * k3[j] + e4 * k4[j] + e5 * k5[j] + e6 * k6[j] +
                                  e7 * k7[j]);
            const double scale =
                options_.abs_tol + options_.rel_tol * std::max(std::fabs(y[j]), std::fabs(y_new_[j]));
            const double r = std::fabs(e) / scale;
            err = std::isnan(r) ? r : std::max(err, r);
            if (std::isnan(err)) break;
        }
        for (std::size_t j = 0; std::isfinite(err) && j < n_; ++j)
            if (!std::isfinite(y_new_[j])) err = std::numeric_limits<double>::infinity();

        if (std::isfinite(err) && err <= 1.0) {
            t += h;
            y.swap(y_new_);
            std::swap(k1, k7);
            if (projection_ && projection_(y)) f(t, y, k1);
            result.dt_used = h;
            result.error = err;
            const double grow =
                err == 0.0 ? kMaxGrow : std::clamp(kSafety * std::pow(err, -0.2), kMinShrink, kMaxGrow);
            result.dt_next = std::clamp(h * grow, options_.dt_min, options_.dt_max);
            return result;
        }

        ++result.rejected;
        const double shrink = std::isfinite(err)
                                  ? std::clamp(kSafety * std::pow(err, -0.2), kMinShrink, 0.5)
                                  : 0.5;
        dt = h * shrink;
        if (dt < options_.dt_min)
            throw StiffnessError(t, "step size fell below dt_min at t=" + std::to_string(t) +
                                        "; consider enabling smoothing of the step functions");
    }
}

}  // namespace memsim
