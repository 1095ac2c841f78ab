#include <algorithm>
#include <random>
#include <string>

#include "doctest.h"
#include "memsim/errors.hpp"
#include "memsim/netlist.hpp"

using namespace memsim;

namespace {

void check_error(const std::string& text, std::size_t line, std::size_t column) {
    try {
        parse_netlist(text);
        FAIL("expected a parse error for: " << text);
    } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
    }
}

std::string random_netlist(std::mt19937& rng) {
    std::uniform_int_distribution<int> count(0, 5), node(0, 9), kind(0, 2), coin(0, 1);
    std::uniform_int_distribution<std::size_t> pick(0, DeviceParams::names.size() - 1);
    std::uniform_real_distribution<double> value(-1e3, 1e3);
    std::string out;
    const char* kinds[] = {"and", "or", "xor"};
    std::vector<std::size_t> used_params;
    for (int k = count(rng); k > 0; --k) {
        const std::size_t p = pick(rng);
        if (std::find(used_params.begin(), used_params.end(), p) != used_params.end()) continue;
        used_params.push_back(p);
        out += "param " + std::string(DeviceParams::names[p]) + " " + std::to_string(value(rng)) + "\n";
    }
    for (int k = count(rng); k > 0; --k) {
        int a = node(rng), b = node(rng), c = node(rng);
        if (a == b || b == c || a == c) continue;
        out += std::string(kinds[kind(rng)]) + "  n" + std::to_string(a) + "\tn" + std::to_string(b) + " n" +
               std::to_string(c) + (coin(rng) ? "  # trailing\n" : "\n");
    }
    std::vector<int> clamped;
    for (int k = count(rng); k > 0; --k) {
        const int n = node(rng);
        if (std::find(clamped.begin(), clamped.end(), n) != clamped.end()) continue;
        clamped.push_back(n);
        out += "in n" + std::to_string(n) + " " + std::to_string(coin(rng)) + "\n";
    }
    std::vector<int> probed;
    for (int k = count(rng); k > 0; --k) {
        const int n = node(rng);
        if (std::find(probed.begin(), probed.end(), n) != probed.end()) continue;
        probed.push_back(n);
        out += "probe n" + std::to_string(n) + "\n";
    }
    if (coin(rng)) out = "# generated\n\n" + out;
    return out;
}

}  // namespace

TEST_CASE("parse basic netlists") {
    const auto n = parse_netlist("or a b y\nin a 1\nin b 0");
    REQUIRE(n.gates.size() == 1);
    CHECK(n.gates[0].spec.kind == GateKind::Or);
    CHECK(n.gates[0].spec.nodes == std::array<std::string, 3>{"a", "b", "y"});
    REQUIRE(n.clamps.size() == 2);
    CHECK(n.clamps[0].clamp.value);
    CHECK_FALSE(n.clamps[1].clamp.value);
    CHECK(n.clamps[1].line == 3);

    const auto p = parse_netlist("param r_on 0.05\n");
    REQUIRE(p.params.size() == 1);
    CHECK(p.params[0].name == "r_on");
    CHECK(p.params[0].value == 0.05);
    CHECK(resolve_params(parse_netlist("param alpha 30")).mem.alpha == 30.0);

    const auto c = parse_netlist("# header\n\n  xor p q r   # tail\nprobe r\n");
    CHECK(c.gates.size() == 1);
    CHECK(c.probes.size() == 1);
    CHECK(c.probes[0].line == 4);
}

TEST_CASE("parse errors carry locations") {
    check_error("and x x y", 1, 7);
    check_error("andd a b c", 1, 1);
    check_error("or a b y\nor a b", 2, 6);
    check_error("or a b y z", 1, 10);
    check_error("in a 2", 1, 6);
    check_error("param r_on 0.05\nparam r_on 0.1", 2, 7);
    check_error("param nope 1", 1, 7);
    check_error("param q abc", 1, 9);
    check_error("probe a\nprobe a", 2, 7);
    check_error("or a b y\nin a 1\nin a 0", 3, 6);
}

TEST_CASE("netlist assembly") {
    const auto n = parse_netlist("param v_c 2\nor a b y\nin a 1\nprobe y\n");
    const auto params = resolve_params(n);
    const auto c = assemble(n, params);
    CHECK(c.nodes[c.node_index("a")].level == 2.0);
    CHECK(c.free_node_count() == 2);
    CHECK(probe_names(n, c) == std::vector<std::string>{"y"});
    CHECK(probe_names(parse_netlist("or a b y"), c).size() == 3);
    CHECK_THROWS_AS(assemble(parse_netlist("or a b y\nprobe z"), DeviceParams{}), StructuralError);
    CHECK_THROWS_AS(assemble(parse_netlist("or a b y\nin z 1"), DeviceParams{}), StructuralError);
}

TEST_CASE("print then parse is a fixed point") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        const std::string src = random_netlist(rng);
        const auto first = parse_netlist(src);
        const std::string text = to_text(first);
        const auto second = parse_netlist(text);
        CHECK(first.same_as(second));
        CHECK(to_text(second) == text);
    }
}
