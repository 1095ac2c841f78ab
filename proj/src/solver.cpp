#include "memsim/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "memsim/devices.hpp"
#include "memsim/errors.hpp"

namespace memsim {

void SolverConfig::validate() const {
    if (!(0.0 < dt_min && dt_min <= dt_init && dt_init <= dt_max))
        throw UsageError("solver config: need 0 < dt_min <= dt_init <= dt_max");
    if (!(rel_tol > 0.0 && abs_tol > 0.0)) throw UsageError("solver config: tolerances must be > 0");
    if (!(t_max >= 0.0)) throw UsageError("solver config: t_max must be >= 0");
    if (!(0.0 <= x_init_lo && x_init_lo <= x_init_hi && x_init_hi <= 1.0))
        throw UsageError("solver config: need 0 <= x_lo <= x_hi <= 1");
    if (smoothing_eps && !(*smoothing_eps > 0.0))
        throw UsageError("solver config: smoothing eps must be > 0");
}

CompiledSystem compile(const Circuit& circuit, std::optional<double> smoothing_eps) {
    circuit.check();
    CompiledSystem sys;
    sys.circuit_ = std::make_shared<const Circuit>(circuit);
    sys.eps_ = smoothing_eps.value_or(0.0);

    const std::size_t n_nodes = circuit.nodes.size();
    sys.column_.assign(n_nodes, -1);
    for (std::size_t n : circuit.vcdcg_nodes) {
        sys.column_[n] = static_cast<int>(sys.free_nodes_.size());
        sys.free_nodes_.push_back(n);
    }
    const std::size_t n_free = sys.free_nodes_.size();
    sys.layout_ = StateLayout{n_free, circuit.memristor_count, n_free};

    const auto& p = circuit.params;
    sys.c_mat_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_free),
                                       static_cast<Eigen::Index>(n_free));

    for (const auto& inst : circuit.gates) {
        const GateTemplate& gate = *inst.gate;
        for (const auto& b : gate.mem_branches) {
            MemristorStamp m;
            m.node = inst.terminals[b.terminal];
            m.ctrl = inst.terminals;
            m.coef = {b.vcvg.a1, b.vcvg.a2, b.vcvg.ao};
            m.dc = b.vcvg.dc;
            m.sign = b.orientation == Orientation::TerminalPlus ? 1.0 : -1.0;
            m.x_slot = inst.state_offset + b.state_index;
            sys.mems_.push_back(m);

            // Parasitic capacitor between the terminal and an ideal generator
            // whose voltage is a linear function of the terminal voltages.
            const int row = sys.column_[m.node];
            if (row < 0) continue;
            sys.c_mat_(row, row) += p.mem.c_par;
            for (std::size_t k = 0; k < 3; ++k) {
                const int col = sys.column_[m.ctrl[k]];
                if (col >= 0) sys.c_mat_(row, col) -= p.mem.c_par * m.coef[k];
            }
        }
        for (const auto& r : gate.res_branches) {
            ResistorStamp s;
            s.node = inst.terminals[r.terminal];
            s.ctrl = inst.terminals;
            s.coef = {r.vcvg.a1, r.vcvg.a2, r.vcvg.ao};
            s.dc = r.vcvg.dc;
            s.g = 1.0 / r.r;
            sys.res_.push_back(s);
        }
        for (const auto& pr : gate.pair_resistors)
            sys.pairs_.push_back({inst.terminals[pr.terminal], inst.terminals[kTermOut], 1.0 / pr.r});
    }
    for (std::size_t n : circuit.vcdcg_nodes) {
        const int col = sys.column_[n];
        sys.c_mat_(col, col) += p.dcg.c1;
    }

    if (n_free > 0) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(sys.c_mat_);
        if (!lu.isInvertible()) {
            const Eigen::MatrixXd kernel = lu.kernel();
            Eigen::Index worst = 0;
            kernel.col(0).cwiseAbs().maxCoeff(&worst);
            throw Error("singular capacitance matrix at node '" +
                        circuit.nodes[sys.free_nodes_[static_cast<std::size_t>(worst)]].name + "'");
        }
        sys.c_inv_ = lu.inverse();
    } else {
        sys.c_inv_.resize(0, 0);
    }
    return sys;
}

Workspace CompiledSystem::make_workspace() const {
    Workspace ws;
    ws.node_v.assign(circuit_->nodes.size(), 0.0);
    ws.node_i.assign(circuit_->nodes.size(), 0.0);
    ws.free_i.assign(free_nodes_.size(), 0.0);
    load_clamps(ws, 0.0, nullptr);
    return ws;
}

void CompiledSystem::load_clamps(Workspace& ws, double t, const ClampSchedule* schedule) const {
    if (schedule) {
        schedule->apply(*circuit_, t, ws.node_v);
        return;
    }
    for (std::size_t k = 0; k < circuit_->nodes.size(); ++k)
        if (circuit_->nodes[k].kind == NodeKind::Clamped) ws.node_v[k] = circuit_->nodes[k].level;
}

void CompiledSystem::scatter_voltages(std::span<const double> y, Workspace& ws) const {
    for (std::size_t c = 0; c < free_nodes_.size(); ++c) ws.node_v[free_nodes_[c]] = y[c];
}

namespace {

inline double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

inline double control_voltage(const std::vector<double>& node_v, const std::array<std::size_t, 3>& ctrl,
                              const std::array<double, 3>& coef, double dc) {
    return coef[0] * node_v[ctrl[0]] + coef[1] * node_v[ctrl[1]] + coef[2] * node_v[ctrl[2]] + dc;
}

}  // namespace

void CompiledSystem::derivative(std::span<const double> y, std::span<double> dy, Workspace& ws) const {
    const auto& p = circuit_->params;
    const std::size_t n_free = layout_.n_v;
    const std::size_t x_off = layout_.x_offset();
    const std::size_t i_off = layout_.i_offset();
    const double s = y[layout_.s_offset()];

    scatter_voltages(y, ws);
    std::fill(ws.node_i.begin(), ws.node_i.end(), 0.0);
    auto& node_v = ws.node_v;
    auto& node_i = ws.node_i;

    const double r_on = p.mem.r_on;
    const double span_r = p.mem.r_off - p.mem.r_on;
    for (const auto& m : mems_) {
        const double x = clamp01(y[x_off + m.x_slot]);
        const double v_m = m.sign * (node_v[m.node] - control_voltage(node_v, m.ctrl, m.coef, m.dc));
        const double inv_m = 1.0 / (span_r * x + r_on);
        node_i[m.node] -= m.sign * v_m * inv_m;
        double rate = 0.0;
        if (eps_ > 0.0) {
            rate = -p.mem.alpha * window_h(x, v_m, eps_) * v_m * inv_m;
        } else if ((v_m > 0.0 && x > 0.0) || (v_m < 0.0 && x < 1.0)) {
            rate = -p.mem.alpha * v_m * inv_m;
        }
        dy[x_off + m.x_slot] = rate;
    }
    for (const auto& r : res_)
        node_i[r.node] += (control_voltage(node_v, r.ctrl, r.coef, r.dc) - node_v[r.node]) * r.g;
    for (const auto& pr : pairs_) {
        const double i = (node_v[pr.b] - node_v[pr.a]) * pr.g;
        node_i[pr.a] += i;
        node_i[pr.b] -= i;
    }

    // Each generator sinks its current from the node it is attached to.
    for (std::size_t c = 0; c < n_free; ++c) ws.free_i[c] = node_i[free_nodes_[c]] - y[i_off + c];
    for (std::size_t r = 0; r < n_free; ++r) {
        double acc = 0.0;
        for (std::size_t c = 0; c < n_free; ++c)
            acc += c_inv_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * ws.free_i[c];
        dy[r] = acc;
    }

    for (std::size_t c = 0; c < n_free; ++c)
        dy[i_off + c] = vcdcg_rate(y[i_off + c], y[c], s, p.dcg, eps_);

    if (n_free > 0)
        dy[layout_.s_offset()] = f_s(y.subspan(i_off, n_free), s, p.sblock, eps_);
    else
        dy[layout_.s_offset()] = f_s_bracket(-1.0, s, p.sblock);
}

std::vector<CompiledSystem::PortSample> CompiledSystem::ports(std::span<const double> y,
                                                              Workspace& ws) const {
    scatter_voltages(y, ws);
    const auto& p = circuit_->params.mem;
    std::vector<PortSample> out;
    out.reserve(mems_.size());
    for (const auto& m : mems_) {
        const double x = clamp01(y[layout_.x_offset() + m.x_slot]);
        const double v_m =
            m.sign * (ws.node_v[m.node] - control_voltage(ws.node_v, m.ctrl, m.coef, m.dc));
        out.push_back({v_m, v_m / memristance(x, p)});
    }
    return out;
}

std::vector<double> rhs(const CompiledSystem& sys, const SimState& state, const ClampSchedule* schedule) {
    if (state.y.size() != sys.layout().size())
        throw UsageError("rhs: state dimension does not match the compiled system");
    Workspace ws = sys.make_workspace();
    sys.load_clamps(ws, state.t, schedule);
    std::vector<double> dy(state.y.size(), 0.0);
    sys.derivative(state.y, dy, ws);
    for (std::size_t k = 0; k < dy.size(); ++k) {
        if (!std::isfinite(dy[k])) {
            std::ostringstream os;
            os << "non-finite derivative in component " << k << " at t=" << state.t << "; state:";
            for (double v : state.y) os << ' ' << v;
            throw NumericalError(state.t, os.str());
        }
    }
    return dy;
}

SimState initial_state(const CompiledSystem& sys, const SolverConfig& config) {
    SimState st(sys.layout());
    st.t = 0.0;
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> dist(config.x_init_lo, config.x_init_hi);
    for (double& x : st.x()) x = config.x_init_lo == config.x_init_hi ? config.x_init_lo : dist(rng);
    st.s() = config.s_init;
    return st;
}

}  // namespace memsim
