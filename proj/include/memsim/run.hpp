#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "memsim/analysis.hpp"
#include "memsim/solver.hpp"
#include "memsim/trajectory.hpp"

namespace memsim {

enum class Outcome { Converged, MaxTimeReached, NumericalFailure };

std::string_view to_string(Outcome outcome);

struct RunOptions {
    double output_stride = 1e-3;  // seconds between samples; 0 records every step
    bool stop_on_equilibrium = true;
    EquilibriumCriterion criterion;
    const ClampSchedule* schedule = nullptr;
    // Called after every accepted step.
    std::function<void(const SimState&)> on_step;
};

struct RunDiagnostics {
    double max_abs_i = 0.0;
    double s_min = 0.0;
    double s_max = 0.0;
    int reset_count = 0;  // times s dropped below 1/2
    std::size_t steps = 0;
    std::size_t rejected = 0;
};

struct RunResult {
    Outcome outcome = Outcome::MaxTimeReached;
    double t_star = 0.0;  // equilibrium time, for Converged
    std::vector<int> bits;
    std::string message;  // failure description, for NumericalFailure
    SimState final_state;
    Trajectory trajectory;
    RunDiagnostics diagnostics;
};

// Integrates from initial_state(sys, config) to config.t_max, or until the
// free voltages settle at logic levels (when stop_on_equilibrium is set and
// no clamp changes are pending). Deterministic for a given seed.
RunResult run(const CompiledSystem& sys, const SolverConfig& config, const RunOptions& options = {});
RunResult run(const CompiledSystem& sys, const SolverConfig& config, SimState initial,
              const RunOptions& options);

// Outcome class of a finished run, as reported to users.
struct RunVerdict {
    enum class Kind { Solved, NonConvergent, Failed };
    Kind kind = Kind::Failed;
    double t_star = 0.0;
    bool oscillatory = false;
    std::vector<std::pair<std::string, int>> probe_bits;  // for Solved
    std::string message;
    RunDiagnostics diagnostics;
};

std::string_view to_string(RunVerdict::Kind kind);

// Reads probe bits from the final sample of a converged run, or runs limit
// cycle detection over limit_window for one that hit t_max.
RunVerdict make_verdict(const RunResult& result, const CompiledSystem& sys,
                        const std::vector<std::string>& probes, double limit_window = 0.5);

}  // namespace memsim
