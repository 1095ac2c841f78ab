#pragma once

// Line-oriented netlist text:
//
//   # comment
//   param <name> <float>
//   in <node> <0|1>
//   and|or|xor <n1> <n2> <no>
//   probe <node>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "memsim/circuit.hpp"

namespace memsim {

struct NetlistGate {
    GateSpec spec;
    std::size_t line = 0;
};

struct NetlistClamp {
    ClampSpec clamp;
    std::size_t line = 0;
};

struct NetlistParam {
    std::string name;
    double value = 0.0;
    std::size_t line = 0;
};

struct NetlistProbe {
    std::string node;
    std::size_t line = 0;
};

struct Netlist {
    std::vector<NetlistGate> gates;
    std::vector<NetlistClamp> clamps;
    std::vector<NetlistProbe> probes;
    std::vector<NetlistParam> params;

    // Structural equality, ignoring source line numbers.
    bool same_as(const Netlist& other) const;
};

// Throws ParseError carrying the 1-based line and column of the offending token.
Netlist parse_netlist(std::string_view text);

// Canonical text: params, gates, clamps, probes, one per line.
std::string to_text(const Netlist& netlist);

// Applies the netlist's parameter overrides on top of base.
DeviceParams resolve_params(const Netlist& netlist, DeviceParams base = {});

// Assembles the circuit with resolved parameters. Unknown probe or clamp
// nodes raise StructuralError.
Circuit assemble(const Netlist& netlist, const DeviceParams& params);

// Probe node names, defaulting to every node of the circuit.
std::vector<std::string> probe_names(const Netlist& netlist, const Circuit& circuit);

}  // namespace memsim
