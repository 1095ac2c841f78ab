#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace memsim {

// Embedded Dormand-Prince 5(4) pair with error-per-step control and
// first-same-as-last reuse of the final stage.
class AdaptiveStepper {
public:
    using Rhs = std::function<void(double t, std::span<const double> y, std::span<double> dy)>;
    // Called on every accepted state; returns true if it modified y.
    using Projection = std::function<bool(std::span<double> y)>;

    struct Options {
        double dt_min = 1e-12;
        double dt_max = 1e-5;
        double rel_tol = 1e-6;
        double abs_tol = 1e-9;
    };

    struct Result {
        double dt_used = 0.0;
        double dt_next = 0.0;
        double error = 0.0;   // normalized error of the accepted step (<= 1)
        int rejected = 0;     // attempts thrown away before acceptance
    };

    AdaptiveStepper(std::size_t n, Options options, Projection projection = {});

    // Advances (t, y) by one accepted step of length at most dt. Rejected
    // attempts (error above tolerance or a non-finite result) halve or shrink
    // the step. Throws StiffnessError once the step would fall below dt_min.
    Result step(const Rhs& f, double& t, std::vector<double>& y, double dt);

    // Forget the cached derivative, e.g. after y or the RHS changed outside step().
    void invalidate() { have_k1_ = false; }

    // Derivative at the current (t, y), valid after a step or after prime().
    std::span<const double> derivative() const { return k_[0]; }
    void prime(const Rhs& f, double t, std::span<const double> y);

    const Options& options() const { return options_; }

private:
    std::size_t n_;
    Options options_;
    Projection projection_;
    std::vector<std::vector<double>> k_;
    std::vector<double> y_stage_;
    std::vector<double> y_new_;
    std::vector<double> err_;
    bool have_k1_ = false;
};

}  // namespace memsim
