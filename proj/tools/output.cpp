#include "output.hpp"

#include <fstream>

#include "memsim/errors.hpp"
#include "memsim/format.hpp"

namespace memsim::cli {

namespace {

std::string one_line(std::string text) {
    for (char& c : text)
        if (c == '\n' || c == '\r') c = ' ';
    return text;
}

}  // namespace

void Summary::add(const std::string& key, double value) { add(key, format_double(value)); }

std::string Summary::text() const {
    std::string out;
    for (const auto& [k, v] : rows_) out += k + "=" + v + "\n";
    return out;
}

void Summary::write(const std::filesystem::path& path) const { write_text(path, text()); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("write failed: " + path.string());
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& trajectory,
                          const CompiledSystem& sys, const std::vector<std::string>& probes,
                          bool full) {
    const Circuit& c = sys.circuit();
    const StateLayout& L = sys.layout();
    std::string out = "t";
    std::vector<std::size_t> probe_idx;
    if (full) {
        for (std::size_t n : sys.free_nodes()) out += ",v:" + c.nodes[n].name;
        for (std::size_t k = 0; k < L.n_x; ++k) out += ",x:" + std::to_string(k);
        for (std::size_t n : c.vcdcg_nodes) out += ",i:" + c.nodes[n].name;
        out += ",s";
    } else {
        for (const auto& p : probes) {
            probe_idx.push_back(c.node_index(p));
            out += ",v:" + p;
        }
    }
    out += "\n";

    for (std::size_t k = 0; k < trajectory.size(); ++k) {
        out += format_double(trajectory.time(k));
        if (full) {
            for (double y : trajectory.state(k)) {
                out += ',';
                out += format_double(y);
            }
        } else {
            const auto nv = trajectory.node_voltages(k);
            for (std::size_t n : probe_idx) {
                out += ',';
                out += format_double(nv[n]);
            }
        }
        out += '\n';
    }
    write_text(path, out);
}

void write_iv_csv(const std::filesystem::path& path, const std::vector<IvSample>& samples) {
    std::string out = "t,v,i_mem,i_total,x\n";
    for (const auto& s : samples)
        out += format_double(s.t) + "," + format_double(s.v) + "," + format_double(s.i_mem) + "," +
               format_double(s.i_total) + "," + format_double(s.x) + "\n";
    write_text(path, out);
}

void add_verdict(Summary& summary, const RunVerdict& verdict, const RunResult& result) {
    summary.add("outcome", std::string(to_string(verdict.kind)));
    switch (verdict.kind) {
        case RunVerdict::Kind::Solved:
            summary.add("t_star", verdict.t_star);
            for (const auto& [name, bit] : verdict.probe_bits) summary.add("bit." + name, bit);
            break;
        case RunVerdict::Kind::NonConvergent:
            summary.add("oscillatory", verdict.oscillatory);
            break;
        case RunVerdict::Kind::Failed:
            summary.add("failed_at", result.final_state.t);
            summary.add("message", one_line(verdict.message));
            break;
    }
    const auto& d = verdict.diagnostics;
    summary.add("t_end", result.final_state.t);
    summary.add("max_abs_i", d.max_abs_i);
    summary.add("s_min", d.s_min);
    summary.add("s_max", d.s_max);
    summary.add("reset_count", d.reset_count);
    summary.add("steps", d.steps);
    summary.add("rejected_steps", d.rejected);
}

}  // namespace memsim::cli
