#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "memsim/devices.hpp"
#include "memsim/params.hpp"

namespace memsim {

enum class GateKind { And, Or, Xor };

std::string_view to_string(GateKind kind);
// Case-insensitive "and" / "or" / "xor". Throws UsageError otherwise.
GateKind parse_gate_kind(std::string_view text);

// Gate terminal slots, in the order (1, 2, o).
inline constexpr std::size_t kTerm1 = 0;
inline constexpr std::size_t kTerm2 = 1;
inline constexpr std::size_t kTermOut = 2;

std::string_view terminal_name(std::size_t terminal);

// Which end of a memristive element is its positive (state-driving) terminal.
enum class Orientation {
    TerminalPlus,  // positive end on the gate terminal, negative end on the generator
    SourcePlus,    // positive end on the generator, negative end on the gate terminal
};

struct MemristorBranch {
    std::size_t terminal = 0;   // kTerm1, kTerm2 or kTermOut
    int generator = 0;          // 1..4, the L_M generator feeding this element
    VcvgCoeffs vcvg;
    Orientation orientation = Orientation::TerminalPlus;
    std::size_t state_index = 0;  // position within the gate's memristor states
};

struct ResistorBranch {
    std::size_t terminal = 0;
    VcvgCoeffs vcvg;  // the L_R generator
    double r = 1.0;
};

// Resistor between an input terminal and the output terminal.
struct PairResistor {
    std::size_t terminal = 0;  // kTerm1 or kTerm2; the other end is kTermOut
    double r = 1.0;
};

struct GateTemplate {
    GateKind kind = GateKind::And;
    std::vector<MemristorBranch> mem_branches;
    std::array<ResistorBranch, 3> res_branches;
    std::array<PairResistor, 2> pair_resistors;
};

// Builds the self-organizing gate with generator offsets scaled by v_c and
// all fixed resistors equal to r_off. Memristive elements whose voltage is
// identically zero are not part of the AND and OR templates.
GateTemplate build_gate(GateKind kind, double v_c = 1.0, double r_off = 1.0);

// Classical Boolean function of the gate.
bool evaluate_gate(GateKind kind, bool in1, bool in2);

// The four truth-table rows as (+1/-1) level triples (1, 2, o).
std::vector<std::array<int, 3>> consistent_assignments(GateKind kind);

bool is_consistent(GateKind kind, const std::array<int, 3>& levels);

struct BranchPort {
    double v_m = 0.0;     // voltage across the element, positive end minus negative end
    double i_port = 0.0;  // memristive current, positive end to negative end
    double i_out = 0.0;   // the same current seen as leaving the gate terminal
};

BranchPort memristor_port(const MemristorBranch& branch, const std::array<double, 3>& v,
                          double x, const MemristorParams& p);

// Resistive current the gate delivers through each terminal into the attached
// node, capacitive currents excluded. Positive when it would charge the node.
// x holds one state per memristor branch.
std::array<double, 3> terminal_current(const GateTemplate& gate, const std::array<double, 3>& v,
                                       std::span<const double> x, const MemristorParams& p);

// SPICE-style listing of the template: one generator + element line pair per
// branch, grouped by correction module, with coefficients in canonical form.
std::string serialize_gate(const GateTemplate& gate);

}  // namespace memsim
