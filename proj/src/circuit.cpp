#include "memsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "memsim/errors.hpp"

namespace memsim {

std::optional<std::size_t> Circuit::find_node(std::string_view name) const {
    for (std::size_t k = 0; k < nodes.size(); ++k)
        if (nodes[k].name == name) return k;
    return std::nullopt;
}

std::size_t Circuit::node_index(std::string_view name) const {
    if (auto k = find_node(name)) return *k;
    throw StructuralError("unknown node '" + std::string(name) + "'");
}

void Circuit::check() const {
    std::vector<int> owner(nodes.size(), 0);
    for (std::size_t n : vcdcg_nodes) {
        if (n >= nodes.size()) throw StructuralError("generator attached to a missing node");
        if (nodes[n].kind != NodeKind::Free)
            throw StructuralError("generator attached to clamped node '" + nodes[n].name + "'");
        if (++owner[n] > 1)
            throw StructuralError("node '" + nodes[n].name + "' has more than one generator");
    }
    for (std::size_t n = 0; n < nodes.size(); ++n)
        if (nodes[n].kind == NodeKind::Free && owner[n] != 1)
            throw StructuralError("free node '" + nodes[n].name + "' has no generator");
    std::size_t next = 0;
    for (const auto& g : gates) {
        if (g.state_offset != next) throw StructuralError("memristor states are not contiguous");
        next += g.gate->mem_branches.size();
        for (std::size_t n : g.terminals)
            if (n >= nodes.size()) throw StructuralError("gate terminal on a missing node");
    }
    if (next != memristor_count) throw StructuralError("memristor count mismatch");
}

Circuit assemble(std::span<const GateSpec> gates, std::span<const ClampSpec> clamps,
                 const DeviceParams& params) {
    params.validate();
    Circuit c;
    c.params = params;

    std::map<GateKind, std::shared_ptr<const GateTemplate>> templates;
    auto node_for = [&c](const std::string& name) {
        if (auto k = c.find_node(name)) return *k;
        c.nodes.push_back(Node{name, NodeKind::Free, 0.0});
        return c.nodes.size() - 1;
    };

    for (const auto& spec : gates) {
        const auto& n = spec.nodes;
        for (const auto& name : n)
            if (name.empty()) throw StructuralError("gate with an empty node name");
        if (n[0] == n[1] || n[0] == n[2] || n[1] == n[2])
            throw StructuralError("gate " + std::string(to_string(spec.kind)) +
                                  " has a repeated terminal node");
        auto& tmpl = templates[spec.kind];
        if (!tmpl)
            tmpl = std::make_shared<const GateTemplate>(
                build_gate(spec.kind, params.dcg.v_c, params.mem.r_off));
        GateInstance inst;
        inst.gate = tmpl;
        for (std::size_t t = 0; t < 3; ++t) inst.terminals[t] = node_for(n[t]);
        inst.state_offset = c.memristor_count;
        c.memristor_count += tmpl->mem_branches.size();
        c.gates.push_back(std::move(inst));
    }

    for (const auto& clamp : clamps) {
        auto k = c.find_node(clamp.node);
        if (!k) throw StructuralError("clamp on unknown node '" + clamp.node + "'");
        const double level = clamp.value ? params.dcg.v_c : -params.dcg.v_c;
        Node& node = c.nodes[*k];
        if (node.kind == NodeKind::Clamped && node.level != level)
            throw StructuralError("node '" + clamp.node + "' clamped to conflicting levels");
        node.kind = NodeKind::Clamped;
        node.level = level;
    }

    for (std::size_t k = 0; k < c.nodes.size(); ++k)
        if (c.nodes[k].kind == NodeKind::Free) c.vcdcg_nodes.push_back(k);
    return c;
}

std::vector<GateSpec> multiplier_gates() {
    return {
        {GateKind::And, {"A0", "B0", "P0"}},
        {GateKind::And, {"A1", "B0", "A1B0"}},
        {GateKind::And, {"A0", "B1", "A0B1"}},
        {GateKind::And, {"A1", "B1", "A1B1"}},
        // half adder on the middle column
        {GateKind::Xor, {"A1B0", "A0B1", "P1"}},
        {GateKind::And, {"A1B0", "A0B1", "C1"}},
        // half adder on the top column
        {GateKind::Xor, {"A1B1", "C1", "P2"}},
        {GateKind::And, {"A1B1", "C1", "P3"}},
    };
}

Circuit build_multiplier(const std::array<bool, 4>& product_bits, const DeviceParams& params) {
    const auto gates = multiplier_gates();
    const std::vector<ClampSpec> clamps = {
        {"P3", product_bits[0]},
        {"P2", product_bits[1]},
        {"P1", product_bits[2]},
        {"P0", product_bits[3]},
    };
    return assemble(gates, clamps, params);
}

Circuit build_multiplier(int product, const DeviceParams& params) {
    if (product < 0 || product > 15)
        throw UsageError("product must fit in four bits: " + std::to_string(product));
    return build_multiplier(
        {(product & 8) != 0, (product & 4) != 0, (product & 2) != 0, (product & 1) != 0}, params);
}

std::pair<int, int> decode_factors(const std::array<double, 4>& v, double v_c, double tol) {
    std::array<int, 4> bits{};
    for (std::size_t k = 0; k < 4; ++k) {
        if (!(std::fabs(std::fabs(v[k]) - v_c) <= tol))
            throw NotConverged(std::string("probe ") + kMultiplierProbes[k] +
                               " is not at a logic level");
        bits[k] = v[k] > 0.0 ? 1 : 0;
    }
    return {2 * bits[0] + bits[1], 2 * bits[2] + bits[3]};
}

ClampSchedule::ClampSchedule(std::vector<ClampEvent> events) : events_(std::move(events)) {
    std::stable_sort(events_.begin(), events_.end(),
                     [](const ClampEvent& a, const ClampEvent& b) { return a.t < b.t; });
}

double ClampSchedule::next_change(double t) const {
    for (const auto& e : events_)
        if (e.t > t) return e.t;
    return std::numeric_limits<double>::infinity();
}

void ClampSchedule::apply(const Circuit& circuit, double t, std::span<double> node_v) const {
    for (std::size_t k = 0; k < circuit.nodes.size(); ++k)
        if (circuit.nodes[k].kind == NodeKind::Clamped) node_v[k] = circuit.nodes[k].level;
    for (const auto& e : events_) {
        if (e.t > t) break;
        if (e.node >= circuit.nodes.size() || circuit.nodes[e.node].kind != NodeKind::Clamped)
            throw StructuralError("clamp schedule refers to a node that is not clamped");
        node_v[e.node] = e.level;
    }
}

}  // namespace memsim
