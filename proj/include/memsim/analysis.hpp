#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "memsim/gates.hpp"
#include "memsim/params.hpp"
#include "memsim/trajectory.hpp"

namespace memsim {

struct EquilibriumCriterion {
    double v_band = 0.1;      // V around +-v_c
    double deriv_band = 1.0;  // V/s
    double hold = 0.05;       // s
};

struct Equilibrium {
    double t_star = 0.0;
    std::vector<int> bits;  // per free node, 1 for +v_c and 0 for -v_c
};

// Incremental form of detect_equilibrium, fed one sample at a time.
class EquilibriumTracker {
public:
    EquilibriumTracker(const EquilibriumCriterion& criterion, double v_c);

    // Returns true once the free voltages have sat at one logic pattern,
    // with small derivatives, for the hold time.
    bool push(double t, std::span<const double> v_free, double max_dvdt);
    void reset();

    bool settled() const { return settled_; }
    double t_star() const { return start_; }
    const std::vector<int>& bits() const { return bits_; }

private:
    EquilibriumCriterion criterion_;
    double v_c_;
    bool running_ = false;
    bool settled_ = false;
    double start_ = 0.0;
    std::vector<int> bits_;
    std::vector<int> scratch_;
};

// Earliest t* such that every free-node voltage stays within v_band of a
// fixed logic pattern and max |dv/dt| < deriv_band for all samples in
// [t*, t* + hold]. Only samples with t_from <= t < t_to are considered.
std::optional<Equilibrium> detect_equilibrium(const Trajectory& trajectory,
                                              const EquilibriumCriterion& criterion,
                                              double v_c = 1.0, double t_from = -1e300,
                                              double t_to = 1e300);

// Sustained oscillation in the trailing 2*window of the free-node voltages:
// some node swings by more than v_band and its autocorrelation has a
// nonzero-lag peak of at least 0.9.
bool detect_limit_cycle(const Trajectory& trajectory, double window, double v_band = 0.1);

// Autocorrelation peak beyond the first zero crossing of a uniformly sampled
// signal, comparing the first half of the record with lagged copies.
double autocorrelation_peak(std::span<const double> signal);

bool validate_truth_table(GateKind kind, const std::array<int, 3>& levels);

struct IvSample {
    double t = 0.0;
    double v = 0.0;        // drive voltage, V
    double i_mem = 0.0;    // memristive port current, A
    double i_total = 0.0;  // including the parasitic capacitor, A
    double x = 0.0;
};

// Standalone memristive element with its parasitic capacitor driven by
// amplitude * sin(2 pi f t), sampled samples_per_cycle times per period.
std::vector<IvSample> iv_sweep(const MemristorParams& p, double amplitude, double frequency,
                               double cycles, double x0 = 0.2, int samples_per_cycle = 400);

// Sum of the two lobe areas of a pinched loop, each |integral of i dv| over
// the samples where v keeps one sign.
double pinched_loop_area(std::span<const IvSample> samples);

enum class CurrentRegime { AllBelowMin, Between, AboveMax };

// Roots of f_s for s in [-1, 2], located by sign changes on a uniform grid
// and refined by bisection.
std::vector<double> fs_root_profile(const SBlockParams& p, CurrentRegime regime, int grid = 3000);

}  // namespace memsim
