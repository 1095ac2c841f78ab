#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "memsim/circuit.hpp"

namespace memsim {

// Position of each state group inside the flat state vector
// [v (free nodes) | x (memristors) | i (generators) | s].
struct StateLayout {
    std::size_t n_v = 0;
    std::size_t n_x = 0;
    std::size_t n_i = 0;

    std::size_t x_offset() const { return n_v; }
    std::size_t i_offset() const { return n_v + n_x; }
    std::size_t s_offset() const { return n_v + n_x + n_i; }
    std::size_t size() const { return n_v + n_x + n_i + 1; }
};

struct SimState {
    double t = 0.0;
    StateLayout layout;
    std::vector<double> y;

    SimState() = default;
    explicit SimState(const StateLayout& l) : layout(l), y(l.size(), 0.0) {}

    std::span<double> v() { return {y.data(), layout.n_v}; }
    std::span<double> x() { return {y.data() + layout.x_offset(), layout.n_x}; }
    std::span<double> i() { return {y.data() + layout.i_offset(), layout.n_i}; }
    double& s() { return y[layout.s_offset()]; }

    std::span<const double> v() const { return {y.data(), layout.n_v}; }
    std::span<const double> x() const { return {y.data() + layout.x_offset(), layout.n_x}; }
    std::span<const double> i() const { return {y.data() + layout.i_offset(), layout.n_i}; }
    double s() const { return y[layout.s_offset()]; }
};

struct SolverConfig {
    double dt_init = 1e-7;
    double dt_min = 1e-12;
    double dt_max = 1e-5;
    double rel_tol = 1e-6;
    double abs_tol = 1e-9;
    double t_max = 3.0;
    std::uint64_t seed = 1;
    double x_init_lo = 0.18;
    double x_init_hi = 0.22;
    std::optional<double> smoothing_eps;
    double s_init = 0.75;

    void validate() const;
};

// Precomputed branch data, referring to circuit node indices.
struct MemristorStamp {
    std::size_t node = 0;              // gate terminal the element hangs on
    std::array<std::size_t, 3> ctrl{};  // gate terminals driving the generator
    std::array<double, 3> coef{};
    double dc = 0.0;
    double sign = 1.0;  // +1: positive end on the terminal, -1: on the generator
    std::size_t x_slot = 0;
};

struct ResistorStamp {
    std::size_t node = 0;
    std::array<std::size_t, 3> ctrl{};
    std::array<double, 3> coef{};
    double dc = 0.0;
    double g = 1.0;
};

struct PairStamp {
    std::size_t a = 0;
    std::size_t b = 0;
    double g = 1.0;
};

// Per-run scratch buffers, so a CompiledSystem can be shared read-only.
struct Workspace {
    std::vector<double> node_v;   // every node; clamped entries hold the current levels
    std::vector<double> node_i;   // net resistive + generator current into each node
    std::vector<double> free_i;
};

class CompiledSystem {
public:
    const Circuit& circuit() const { return *circuit_; }
    const StateLayout& layout() const { return layout_; }
    const Eigen::MatrixXd& capacitance() const { return c_mat_; }

    const std::vector<std::size_t>& free_nodes() const { return free_nodes_; }
    // Column of a node in the capacitance matrix, or -1 for clamped nodes.
    int column(std::size_t node) const { return column_[node]; }

    const std::vector<MemristorStamp>& memristors() const { return mems_; }
    const std::vector<ResistorStamp>& resistors() const { return res_; }
    const std::vector<PairStamp>& pairs() const { return pairs_; }

    const DeviceParams& params() const { return circuit_->params; }
    double smoothing_eps() const { return eps_; }

    Workspace make_workspace() const;

    // Loads clamp levels valid at time t into the workspace.
    void load_clamps(Workspace& ws, double t, const ClampSchedule* schedule) const;

    // Time derivative of the flat state. Memristor states are read clamped to
    // [0, 1]. Clamp levels are taken from ws.node_v. Non-finite values are
    // propagated, not reported.
    void derivative(std::span<const double> y, std::span<double> dy, Workspace& ws) const;

    // Memristive voltage and current of every element, for inspection.
    struct PortSample {
        double v_m = 0.0;
        double i_m = 0.0;
    };
    std::vector<PortSample> ports(std::span<const double> y, Workspace& ws) const;

    // Fills node_v for the free nodes from y.
    void scatter_voltages(std::span<const double> y, Workspace& ws) const;

private:
    friend CompiledSystem compile(const Circuit& circuit, std::optional<double> smoothing_eps);

    std::shared_ptr<const Circuit> circuit_;
    StateLayout layout_;
    std::vector<std::size_t> free_nodes_;
    std::vector<int> column_;
    std::vector<MemristorStamp> mems_;
    std::vector<ResistorStamp> res_;
    std::vector<PairStamp> pairs_;
    Eigen::MatrixXd c_mat_;
    Eigen::MatrixXd c_inv_;
    double eps_ = 0.0;
};

// Builds the capacitance-matrix form C dv/dt = I(v, x, i). Throws
// StructuralError for an invalid circuit and Error naming a node when the
// capacitance matrix is singular.
CompiledSystem compile(const Circuit& circuit, std::optional<double> smoothing_eps = std::nullopt);

// Derivative of a state at its own time. Throws NumericalError if any
// component is non-finite.
std::vector<double> rhs(const CompiledSystem& sys, const SimState& state,
                        const ClampSchedule* schedule = nullptr);

// v = 0, i = 0, s = s_init and x drawn uniformly from [x_init_lo, x_init_hi]
// by a generator seeded with config.seed.
SimState initial_state(const CompiledSystem& sys, const SolverConfig& config);

}  // namespace memsim
