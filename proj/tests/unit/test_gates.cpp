#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "memsim/errors.hpp"
#include "memsim/gates.hpp"

using namespace memsim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

using RowKey = std::tuple<std::string, std::string, std::string>;

std::map<RowKey, VcvgCoeffs> load_table() {
    std::map<RowKey, VcvgCoeffs> rows;
    std::istringstream in(slurp(MEMSIM_DATA_DIR "/table_a1.csv"));
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(cell);
        REQUIRE(f.size() == 7);
        rows[{f[0], f[1], f[2]}] = {std::stod(f[3]), std::stod(f[4]), std::stod(f[5]), std::stod(f[6])};
    }
    return rows;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace

TEST_CASE("branch counts") {
    for (auto kind : {GateKind::And, GateKind::Or})
        CHECK(build_gate(kind).mem_branches.size() == 7);
    const auto x = build_gate(GateKind::Xor);
    CHECK(x.mem_branches.size() == 12);
    for (std::size_t t = 0; t < 3; ++t)
        CHECK(std::count_if(x.mem_branches.begin(), x.mem_branches.end(),
                            [t](const MemristorBranch& b) { return b.terminal == t; }) == 4);

    const auto a = build_gate(GateKind::And);
    CHECK(std::count_if(a.mem_branches.begin(), a.mem_branches.end(),
                        [](const MemristorBranch& b) { return b.terminal == kTermOut; }) == 3);
    for (const auto& g : {a, x}) {
        CHECK(g.res_branches.size() == 3);
        CHECK(g.pair_resistors[0].terminal == kTerm1);
        CHECK(g.pair_resistors[1].terminal == kTerm2);
        for (std::size_t k = 0; k < g.mem_branches.size(); ++k) CHECK(g.mem_branches[k].state_index == k);
    }
}

TEST_CASE("OR first module holds both orientations") {
    const auto g = build_gate(GateKind::Or);
    bool plain = false, reversed = false;
    for (const auto& b : g.mem_branches) {
        if (b.terminal != kTerm1) continue;
        if (b.vcvg == VcvgCoeffs{0, 0, 1, 0} && b.orientation == Orientation::TerminalPlus) plain = true;
        if (b.vcvg == VcvgCoeffs{0, -1, 1, -1} && b.orientation == Orientation::SourcePlus) reversed = true;
    }
    CHECK(plain);
    CHECK(reversed);
}

TEST_CASE("serialized templates match the checked-in transcription") {
    const std::string expected = slurp(MEMSIM_TEST_DATA_DIR "/gates_golden.txt");
    const std::string actual = serialize_gate(build_gate(GateKind::And)) +
                               serialize_gate(build_gate(GateKind::Xor)) +
                               serialize_gate(build_gate(GateKind::Or));
    CHECK(actual == expected);
}

TEST_CASE("generator rows agree with the reference table") {
    const auto table = load_table();
    for (auto kind : {GateKind::And, GateKind::Or, GateKind::Xor}) {
        const auto g = build_gate(kind);
        const std::string k = lower(to_string(kind));
        for (const auto& b : g.mem_branches) {
            const RowKey key{k, "LM" + std::to_string(b.generator), std::string(terminal_name(b.terminal))};
            REQUIRE(table.count(key) == 1);
            CHECK(table.at(key) == b.vcvg);
            CHECK(b.orientation == (b.generator <= 2 ? Orientation::TerminalPlus : Orientation::SourcePlus));
        }
        for (const auto& r : g.res_branches) {
            const RowKey key{k, "LR", std::string(terminal_name(r.terminal))};
            REQUIRE(table.count(key) == 1);
            CHECK(table.at(key) == r.vcvg);
            CHECK(r.r == 1.0);
        }
    }
}

TEST_CASE("v_c and r_off scale the template") {
    const auto g = build_gate(GateKind::And, 2.0, 3.0);
    for (const auto& r : g.res_branches) CHECK(r.r == 3.0);
    for (const auto& p : g.pair_resistors) CHECK(p.r == 3.0);
    const auto base = build_gate(GateKind::And);
    for (std::size_t k = 0; k < g.mem_branches.size(); ++k)
        CHECK(g.mem_branches[k].vcvg.dc == 2.0 * base.mem_branches[k].vcvg.dc);
}

TEST_CASE("truth tables") {
    using A = std::array<int, 3>;
    const auto and_rows = consistent_assignments(GateKind::And);
    CHECK(and_rows == std::vector<A>{{-1, -1, -1}, {-1, 1, -1}, {1, -1, -1}, {1, 1, 1}});
    const auto xor_rows = consistent_assignments(GateKind::Xor);
    CHECK(xor_rows == std::vector<A>{{-1, -1, -1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}});
    int or_low = 0;
    for (const auto& r : consistent_assignments(GateKind::Or))
        if (r[2] == -1) {
            ++or_low;
            CHECK(r == A{-1, -1, -1});
        }
    CHECK(or_low == 1);

    // is_consistent against the classical function, every triple.
    for (auto kind : {GateKind::And, GateKind::Or, GateKind::Xor})
        for (int m = 0; m < 8; ++m) {
            const bool a = m & 4, b = m & 2, o = m & 1;
            const A lv{a ? 1 : -1, b ? 1 : -1, o ? 1 : -1};
            CHECK(is_consistent(kind, lv) == (evaluate_gate(kind, a, b) == o));
        }
}

TEST_CASE("gate kind names") {
    CHECK(parse_gate_kind("AND") == GateKind::And);
    CHECK(parse_gate_kind("xOr") == GateKind::Xor);
    CHECK_THROWS_AS(parse_gate_kind("nand"), UsageError);
}

TEST_CASE("terminal current of AND at all -1") {
    const auto g = build_gate(GateKind::And);
    MemristorParams p;
    std::size_t m1 = g.mem_branches.size();
    for (std::size_t k = 0; k < g.mem_branches.size(); ++k)
        if (g.mem_branches[k].terminal == kTerm1 && g.mem_branches[k].generator == 1) m1 = k;
    REQUIRE(m1 < g.mem_branches.size());

    std::vector<double> x(g.mem_branches.size(), 0.5);
    const std::array<double, 3> v{-1, -1, -1};
    x[m1] = 1.0;
    CHECK(terminal_current(g, v, x, p)[kTerm1] == doctest::Approx(0.0).scale(1.0));
    x[m1] = 0.0;
    CHECK(terminal_current(g, v, x, p)[kTerm1] == doctest::Approx(2.0 / 0.05 - 2.0));
}

TEST_CASE("terminal current is linear in dc-free rows at zero voltage") {
    auto g = build_gate(GateKind::Xor);
    for (auto& b : g.mem_branches) b.vcvg.dc = 0.0;
    for (auto& r : g.res_branches) r.vcvg.dc = 0.0;
    const std::vector<double> x(g.mem_branches.size(), 0.3);
    const auto i = terminal_current(g, {0, 0, 0}, x, MemristorParams{});
    for (double c : i) CHECK(c == 0.0);
}

TEST_CASE("memristive port current vanishes with its voltage") {
    const auto g = build_gate(GateKind::Or);
    MemristorParams p;
    for (const auto& b : g.mem_branches) {
        // Terminal voltages that put the generator output on the terminal.
        for (int m = 0; m < 8; ++m) {
            std::array<double, 3> v{(m & 4) ? 1.0 : -1.0, (m & 2) ? 1.0 : -1.0, (m & 1) ? 1.0 : -1.0};
            const auto port = memristor_port(b, v, 0.4, p);
            if (port.v_m == 0.0) CHECK(port.i_port == 0.0);
            CHECK(port.i_port * port.v_m >= 0.0);
            CHECK(std::fabs(port.i_out) == std::fabs(port.i_port));
        }
    }
}
