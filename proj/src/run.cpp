#include "memsim/run.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "memsim/errors.hpp"
#include "memsim/integrator.hpp"

namespace memsim {

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Converged: return "converged";
        case Outcome::MaxTimeReached: return "max_time_reached";
        case Outcome::NumericalFailure: return "numerical_failure";
    }
    return "?";
}

std::string_view to_string(RunVerdict::Kind kind) {
    switch (kind) {
        case RunVerdict::Kind::Solved: return "solved";
        case RunVerdict::Kind::NonConvergent: return "nonconvergent";
        case RunVerdict::Kind::Failed: return "failed";
    }
    return "?";
}

RunResult run(const CompiledSystem& sys, const SolverConfig& config, const RunOptions& options) {
    return run(sys, config, initial_state(sys, config), options);
}

RunResult run(const CompiledSystem& sys, const SolverConfig& config, SimState state,
              const RunOptions& options) {
    config.validate();
    const StateLayout& layout = sys.layout();
    if (state.y.size() != layout.size()) throw UsageError("run: initial state has the wrong size");

    RunResult result;
    result.trajectory = Trajectory(layout, sys.circuit().nodes.size());
    auto& diag = result.diagnostics;
    diag.s_min = diag.s_max = state.s();

    const ClampSchedule* schedule = options.schedule;
    Workspace ws = sys.make_workspace();
    sys.load_clamps(ws, state.t, schedule);

    const std::size_t n_v = layout.n_v;
    const std::size_t x_off = layout.x_offset();
    const std::size_t x_end = x_off + layout.n_x;
    const std::size_t i_off = layout.i_offset();

    AdaptiveStepper::Options opt{config.dt_min, config.dt_max, config.rel_tol, config.abs_tol};
    AdaptiveStepper stepper(layout.size(), opt, [x_off, x_end](std::span<double> y) {
        bool changed = false;
        for (std::size_t k = x_off; k < x_end; ++k) {
            const double c = std::clamp(y[k], 0.0, 1.0);
            if (c != y[k]) {
                y[k] = c;
                changed = true;
            }
        }
        return changed;
    });
    const AdaptiveStepper::Rhs f = [&sys, &ws](double, std::span<const double> y, std::span<double> dy) {
        sys.derivative(y, dy, ws);
    };

    EquilibriumTracker tracker(options.criterion, sys.params().dcg.v_c);
    auto max_dvdt = [&] {
        const auto d = stepper.derivative();
        double m = 0.0;
        for (std::size_t k = 0; k < n_v; ++k) m = std::max(m, std::fabs(d[k]));
        return m;
    };

    if (config.t_max <= state.t) {
        result.outcome = Outcome::MaxTimeReached;
        result.final_state = std::move(state);
        return result;
    }

    stepper.prime(f, state.t, state.y);
    auto record = [&] {
        sys.scatter_voltages(state.y, ws);
        const double dv = max_dvdt();
        result.trajectory.push(state.t, state.y, ws.node_v, dv);
        return dv;
    };
    {
        const double dv = record();
        tracker.push(state.t, state.v(), dv);
    }
    double next_sample = state.t + options.output_stride;

    double dt = config.dt_init;
    double next_change = schedule ? schedule->next_change(state.t) : std::numeric_limits<double>::infinity();
    bool below_half = state.s() < 0.5;

    try {
        while (state.t < config.t_max) {
            const double seg_end = std::min(config.t_max, next_change);
            const double remaining = seg_end - state.t;
            const bool to_end = dt >= remaining;
            const auto r = stepper.step(f, state.t, state.y, to_end ? remaining : dt);
            if (to_end && r.rejected == 0)
                state.t = seg_end;
            else
                dt = r.dt_next;
            ++diag.steps;
            diag.rejected += static_cast<std::size_t>(r.rejected);

            for (std::size_t k = 0; k < layout.n_i; ++k)
                diag.max_abs_i = std::max(diag.max_abs_i, std::fabs(state.y[i_off + k]));
            const double s = state.s();
            diag.s_min = std::min(diag.s_min, s);
            diag.s_max = std::max(diag.s_max, s);
            if (!below_half && s < 0.5) ++diag.reset_count;
            below_half = s < 0.5;

            if (options.on_step) options.on_step(state);

            bool clamps_changed = false;
            if (state.t >= next_change) {
                sys.load_clamps(ws, state.t, schedule);
                next_change = schedule->next_change(state.t);
                stepper.prime(f, state.t, state.y);
                tracker.reset();
                clamps_changed = true;
            }

            const bool at_end = state.t >= config.t_max;
            if (state.t >= next_sample || at_end || clamps_changed) {
                const double dv = record();
                next_sample = state.t + options.output_stride;
                if (tracker.push(state.t, state.v(), dv) && options.stop_on_equilibrium &&
                    std::isinf(next_change)) {
                    result.outcome = Outcome::Converged;
                    result.t_star = tracker.t_star();
                    result.bits = tracker.bits();
                    result.final_state = std::move(state);
                    return result;
                }
            }
        }
        result.outcome = Outcome::MaxTimeReached;
        if (tracker.settled()) {
            result.t_star = tracker.t_star();
            result.bits = tracker.bits();
        }
    } catch (const NumericalError& e) {
        result.outcome = Outcome::NumericalFailure;
        result.message = e.what();
        record();
    }
    result.final_state = std::move(state);
    return result;
}

RunVerdict make_verdict(const RunResult& result, const CompiledSystem& sys,
                        const std::vector<std::string>& probes, double limit_window) {
    RunVerdict v;
    v.diagnostics = result.diagnostics;
    switch (result.outcome) {
        case Outcome::Converged: {
            v.kind = RunVerdict::Kind::Solved;
            v.t_star = result.t_star;
            const auto& traj = result.trajectory;
            const auto node_v = traj.node_voltages(traj.size() - 1);
            for (const auto& name : probes) {
                const std::size_t n = sys.circuit().node_index(name);
                v.probe_bits.emplace_back(name, node_v[n] > 0.0 ? 1 : 0);
            }
            break;
        }
        case Outcome::MaxTimeReached:
            v.kind = RunVerdict::Kind::NonConvergent;
            v.oscillatory = detect_limit_cycle(result.trajectory, limit_window,
                                               0.1 * sys.params().dcg.v_c);
            break;
        case Outcome::NumericalFailure:
            v.kind = RunVerdict::Kind::Failed;
            v.message = result.message;
            break;
    }
    return v;
}

}  // namespace memsim
