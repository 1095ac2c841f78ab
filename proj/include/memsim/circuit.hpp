#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "memsim/gates.hpp"
#include "memsim/params.hpp"

namespace memsim {

enum class NodeKind { Free, Clamped };

struct Node {
    std::string name;
    NodeKind kind = NodeKind::Free;
    double level = 0.0;  // clamp voltage, +v_c or -v_c; unused for free nodes
};

struct GateInstance {
    std::shared_ptr<const GateTemplate> gate;
    std::array<std::size_t, 3> terminals{};  // node indices for (1, 2, o)
    std::size_t state_offset = 0;            // first memristor state of this gate
};

struct GateSpec {
    GateKind kind = GateKind::And;
    std::array<std::string, 3> nodes;
};

struct ClampSpec {
    std::string node;
    bool value = false;
};

class Circuit {
public:
    std::vector<Node> nodes;
    std::vector<GateInstance> gates;
    std::vector<std::size_t> vcdcg_nodes;  // one generator per free node, in node order
    DeviceParams params;
    std::size_t memristor_count = 0;

    std::optional<std::size_t> find_node(std::string_view name) const;
    std::size_t node_index(std::string_view name) const;  // throws StructuralError

    std::size_t free_node_count() const { return vcdcg_nodes.size(); }

    // Throws StructuralError when a generator/free-node bijection or the
    // memristor state numbering is broken.
    void check() const;
};

// Boolean-to-self-organizing transformation: every gate becomes its
// self-organizing counterpart, clamped nodes become constant sources at
// +-v_c, and every remaining node gets a differential current generator.
// Nodes are numbered by first appearance in the gate list.
Circuit assemble(std::span<const GateSpec> gates, std::span<const ClampSpec> clamps,
                 const DeviceParams& params = {});

// Two-bit by two-bit array multiplier with the product bits (P3, P2, P1, P0)
// clamped and the operand bits A1, A0, B1, B0 left free.
Circuit build_multiplier(const std::array<bool, 4>& product_bits, const DeviceParams& params = {});
Circuit build_multiplier(int product, const DeviceParams& params = {});

// The gate list of the multiplier, also used for its Boolean abstraction.
std::vector<GateSpec> multiplier_gates();

inline constexpr std::array<const char*, 4> kMultiplierProbes = {"A1", "A0", "B1", "B0"};

// Reads the factors from final voltages at (A1, A0, B1, B0). Throws
// NotConverged when any voltage is farther than tol from +-v_c.
std::pair<int, int> decode_factors(const std::array<double, 4>& v, double v_c = 1.0,
                                   double tol = 0.1);

// Piecewise-constant levels for clamped nodes. Each event sets a clamped
// node to a new level from its time onwards.
struct ClampEvent {
    double t = 0.0;
    std::size_t node = 0;
    double level = 0.0;
};

class ClampSchedule {
public:
    ClampSchedule() = default;
    explicit ClampSchedule(std::vector<ClampEvent> events);

    const std::vector<ClampEvent>& events() const { return events_; }
    bool empty() const { return events_.empty(); }

    // Time of the first event strictly after t, or +inf.
    double next_change(double t) const;

    // Writes the level of every clamped node at time t into node_v (sized to
    // the circuit's node count). Free entries are left untouched.
    void apply(const Circuit& circuit, double t, std::span<double> node_v) const;

private:
    std::vector<ClampEvent> events_;
};

}  // namespace memsim
