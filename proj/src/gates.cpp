#include "memsim/gates.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "memsim/errors.hpp"
#include "memsim/format.hpp"

namespace memsim {

namespace {

// One generator row: L_M index (1..4, or 0 for the L_R resistor generator),
// coefficients on (v1, v2, vo) and the offset in units of v_c.
struct Row {
    int generator;
    double a1, a2, ao, dc_vc;
};

struct Dcm {
    std::vector<Row> mems;
    Row resistor;
};

// Correction modules as wired in the reference LTspice subcircuits.
const std::array<Dcm, 3>& dcms(GateKind kind) {
    static const std::array<Dcm, 3> and_gate = {{
        {{{1, 0, -1, 1, 1}, {3, 0, 0, 1, 0}}, {0, 4, 1, -3, -1}},
        {{{1, -1, 0, 1, 1}, {3, 0, 0, 1, 0}}, {0, 1, 4, -3, -1}},
        {{{1, 1, 0, 0, 0}, {2, 0, 1, 0, 0}, {4, 2, 2, -1, -2}}, {0, -4, -4, 7, 2}},
    }};
    static const std::array<Dcm, 3> or_gate = {{
        {{{1, 0, 0, 1, 0}, {3, 0, -1, 1, -1}}, {0, 4, 1, -3, 1}},
        {{{1, 0, 0, 1, 0}, {3, -1, 0, 1, -1}}, {0, 1, 4, -3, 1}},
        {{{2, 2, 2, -1, 2}, {3, 1, 0, 0, 0}, {4, 0, 1, 0, 0}}, {0, -4, -4, 7, -2}},
    }};
    static const std::array<Dcm, 3> xor_gate = {{
        {{{1, 0, -1, -1, 1}, {2, 0, 1, 1, 1}, {3, 0, -1, 1, -1}, {4, 0, 1, -1, -1}},
         {0, 6, 0, -1, 0}},
        {{{1, -1, 0, -1, 1}, {2, 1, 0, 1, 1}, {3, -1, 0, 1, -1}, {4, 1, 0, -1, -1}},
         {0, 0, 6, -1, 0}},
        {{{1, -1, -1, 0, 1}, {2, 1, 1, 0, 1}, {3, -1, 1, 0, -1}, {4, 1, -1, 0, -1}},
         {0, -1, -1, 7, 0}},
    }};
    switch (kind) {
        case GateKind::And: return and_gate;
        case GateKind::Or: return or_gate;
        case GateKind::Xor: return xor_gate;
    }
    return and_gate;
}

VcvgCoeffs coeffs(const Row& row, double v_c) {
    return {row.a1, row.a2, row.ao, row.dc_vc * v_c};
}

// Netlist node suffix of a generator inside its correction module.
int generator_slot(int generator) {
    switch (generator) {
        case 1: return 1;
        case 2: return 2;
        case 3: return 4;
        case 4: return 5;
        default: return 3;
    }
}

void append_term(std::string& out, double coef, const std::string& symbol) {
    if (coef == 0.0) return;
    if (coef < 0.0)
        out += '-';
    else if (!out.empty())
        out += '+';
    const double mag = std::fabs(coef);
    if (mag != 1.0) out += format_double(mag) + "*";
    out += symbol;
}

std::string expression(const VcvgCoeffs& c, double v_c) {
    std::string out;
    append_term(out, c.a1, "V(1)");
    append_term(out, c.a2, "V(2)");
    append_term(out, c.ao, "V(3)");
    append_term(out, c.dc / v_c, "vc");
    return out.empty() ? "0" : out;
}

}  // namespace

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::And: return "and";
        case GateKind::Or: return "or";
        case GateKind::Xor: return "xor";
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "and") return GateKind::And;
    if (lower == "or") return GateKind::Or;
    if (lower == "xor") return GateKind::Xor;
    throw UsageError("unknown gate kind '" + std::string(text) + "'");
}

std::string_view terminal_name(std::size_t terminal) {
    switch (terminal) {
        case kTerm1: return "1";
        case kTerm2: return "2";
        case kTermOut: return "o";
    }
    return "?";
}

GateTemplate build_gate(GateKind kind, double v_c, double r_off) {
    GateTemplate gate;
    gate.kind = kind;
    const auto& modules = dcms(kind);
    for (std::size_t t = 0; t < 3; ++t) {
        for (const Row& row : modules[t].mems) {
            MemristorBranch b;
            b.terminal = t;
            b.generator = row.generator;
            b.vcvg = coeffs(row, v_c);
            b.orientation = row.generator <= 2 ? Orientation::TerminalPlus : Orientation::SourcePlus;
            b.state_index = gate.mem_branches.size();
            gate.mem_branches.push_back(b);
        }
        gate.res_branches[t] = ResistorBranch{t, coeffs(modules[t].resistor, v_c), r_off};
    }
    gate.pair_resistors = {PairResistor{kTerm1, r_off}, PairResistor{kTerm2, r_off}};
    return gate;
}

bool evaluate_gate(GateKind kind, bool in1, bool in2) {
    switch (kind) {
        case GateKind::And: return in1 && in2;
        case GateKind::Or: return in1 || in2;
        case GateKind::Xor: return in1 != in2;
    }
    return false;
}

std::vector<std::array<int, 3>> consistent_assignments(GateKind kind) {
    std::vector<std::array<int, 3>> rows;
    for (bool a : {false, true})
        for (bool b : {false, true})
            rows.push_back({a ? 1 : -1, b ? 1 : -1, evaluate_gate(kind, a, b) ? 1 : -1});
    return rows;
}

bool is_consistent(GateKind kind, const std::array<int, 3>& levels) {
    const auto rows = consistent_assignments(kind);
    return std::find(rows.begin(), rows.end(), levels) != rows.end();
}

BranchPort memristor_port(const MemristorBranch& branch, const std::array<double, 3>& v,
                          double x, const MemristorParams& p) {
    const double v_gen = vcvg_voltage(branch.vcvg, v[0], v[1], v[2]);
    const double v_term = v[branch.terminal];
    BranchPort port;
    if (branch.orientation == Orientation::TerminalPlus) {
        port.v_m = v_term - v_gen;
        port.i_port = port.v_m / memristance(x, p);
        port.i_out = port.i_port;
    } else {
        port.v_m = v_gen - v_term;
        port.i_port = port.v_m / memristance(x, p);
        port.i_out = -port.i_port;
    }
    return port;
}

std::array<double, 3> terminal_current(const GateTemplate& gate, const std::array<double, 3>& v,
                                       std::span<const double> x, const MemristorParams& p) {
    if (x.size() != gate.mem_branches.size())
        throw UsageError("terminal_current: state count does not match the gate");
    std::array<double, 3> out{};
    for (const auto& b : gate.mem_branches)
        out[b.terminal] += memristor_port(b, v, x[b.state_index], p).i_out;
    for (const auto& r : gate.res_branches) {
        const double v_gen = vcvg_voltage(r.vcvg, v[0], v[1], v[2]);
        out[r.terminal] += (v[r.terminal] - v_gen) / r.r;
    }
    for (const auto& pr : gate.pair_resistors) {
        const double i = (v[pr.terminal] - v[kTermOut]) / pr.r;
        out[pr.terminal] += i;
        out[kTermOut] -= i;
    }
    for (double& i : out) i = -i;
    return out;
}

std::string serialize_gate(const GateTemplate& gate) {
    const double r_off = gate.pair_resistors[0].r;
    // Recover v_c from any generator with a nonzero offset; templates without
    // one print offsets relative to 1 V.
    double v_c = 1.0;
    const auto& modules = dcms(gate.kind);
    for (std::size_t t = 0; t < 3 && v_c == 1.0; ++t)
        if (modules[t].resistor.dc_vc != 0.0)
            v_c = gate.res_branches[t].vcvg.dc / modules[t].resistor.dc_vc;

    std::string name = "S" + std::string(to_string(gate.kind));
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });

    std::ostringstream os;
    os << ".subckt " << name << " 1 2 3\n";
    os << ".param res=" << format_double(r_off) << " vc=" << format_double(v_c) << "\n";
    for (std::size_t t = 0; t < 3; ++t) {
        const int d = static_cast<int>(t) + 1;
        os << "* DCM" << d << "\n";
        for (const auto& b : gate.mem_branches) {
            if (b.terminal != t) continue;
            const std::string node = std::to_string(d) + std::to_string(generator_slot(b.generator));
            os << "EM" << node << " " << node << " 0 value={" << expression(b.vcvg, v_c) << "}\n";
            if (b.orientation == Orientation::TerminalPlus)
                os << "Xmem" << node << " " << d << " " << node << " memR\n";
            else
                os << "Xmem" << node << " " << node << " " << d << " memR\n";
        }
        const auto& r = gate.res_branches[t];
        const std::string node = std::to_string(d) + "3";
        os << "EM" << node << " " << node << " 0 value={" << expression(r.vcvg, v_c) << "}\n";
        os << "R" << d << "1 " << node << " " << d << " {res}\n";
    }
    os << "* resistors\n";
    for (const auto& pr : gate.pair_resistors)
        os << "R" << (pr.terminal + 1) << "o " << (pr.terminal + 1) << " 3 {res}\n";
    os << ".ends " << name << "\n";
    return os.str();
}

}  // namespace memsim
