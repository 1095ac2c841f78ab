#include "memsim/netlist.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "memsim/errors.hpp"
#include "memsim/format.hpp"

namespace memsim {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        const char c = line[k];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++k;
            continue;
        }
        const std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r' &&
               line[k] != '#')
            ++k;
        out.push_back({line.substr(start, k - start), start + 1});
    }
    return out;
}

double parse_float(const Token& tok, std::size_t line) {
    double value = 0.0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw ParseError(line, tok.column, "expected a number, got '" + std::string(tok.text) + "'");
    return value;
}

void expect_arity(const std::vector<Token>& toks, std::size_t want, std::size_t line) {
    if (toks.size() == want) return;
    const std::size_t column = toks.size() > want ? toks[want].column : toks.back().column;
    throw ParseError(line, column,
                     "'" + std::string(toks[0].text) + "' takes " + std::to_string(want - 1) +
                         " argument(s), got " + std::to_string(toks.size() - 1));
}

}  // namespace

bool Netlist::same_as(const Netlist& o) const {
    if (gates.size() != o.gates.size() || clamps.size() != o.clamps.size() ||
        probes.size() != o.probes.size() || params.size() != o.params.size())
        return false;
    for (std::size_t k = 0; k < gates.size(); ++k)
        if (gates[k].spec.kind != o.gates[k].spec.kind || gates[k].spec.nodes != o.gates[k].spec.nodes)
            return false;
    for (std::size_t k = 0; k < clamps.size(); ++k)
        if (clamps[k].clamp.node != o.clamps[k].clamp.node ||
            clamps[k].clamp.value != o.clamps[k].clamp.value)
            return false;
    for (std::size_t k = 0; k < probes.size(); ++k)
        if (probes[k].node != o.probes[k].node) return false;
    for (std::size_t k = 0; k < params.size(); ++k)
        if (params[k].name != o.params[k].name || params[k].value != o.params[k].value) return false;
    return true;
}

Netlist parse_netlist(std::string_view text) {
    Netlist out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string_view kw = toks[0].text;

        if (kw == "param") {
            expect_arity(toks, 3, line_no);
            const std::string name(toks[1].text);
            if (!DeviceParams::is_known(name))
                throw ParseError(line_no, toks[1].column, "unknown parameter '" + name + "'");
            for (const auto& p : out.params)
                if (p.name == name)
                    throw ParseError(line_no, toks[1].column,
                                     "duplicate parameter '" + name + "' (first set on line " +
                                         std::to_string(p.line) + ")");
            out.params.push_back({name, parse_float(toks[2], line_no), line_no});
        } else if (kw == "in") {
            expect_arity(toks, 3, line_no);
            const std::string_view lit = toks[2].text;
            if (lit != "0" && lit != "1")
                throw ParseError(line_no, toks[2].column,
                                 "logic literal must be 0 or 1, got '" + std::string(lit) + "'");
            const std::string node(toks[1].text);
            const bool value = lit == "1";
            for (const auto& c : out.clamps)
                if (c.clamp.node == node && c.clamp.value != value)
                    throw ParseError(line_no, toks[2].column,
                                     "node '" + node + "' already clamped to the other level on line " +
                                         std::to_string(c.line));
            out.clamps.push_back({{node, value}, line_no});
        } else if (kw == "and" || kw == "or" || kw == "xor") {
            expect_arity(toks, 4, line_no);
            GateSpec spec;
            spec.kind = parse_gate_kind(kw);
            for (std::size_t t = 0; t < 3; ++t) {
                spec.nodes[t] = std::string(toks[t + 1].text);
                for (std::size_t u = 0; u < t; ++u)
                    if (spec.nodes[u] == spec.nodes[t])
                        throw ParseError(line_no, toks[t + 1].column,
                                         "repeated terminal node '" + spec.nodes[t] + "'");
            }
            out.gates.push_back({std::move(spec), line_no});
        } else if (kw == "probe") {
            expect_arity(toks, 2, line_no);
            const std::string node(toks[1].text);
            for (const auto& p : out.probes)
                if (p.node == node)
                    throw ParseError(line_no, toks[1].column, "duplicate probe '" + node + "'");
            out.probes.push_back({node, line_no});
        } else {
            throw ParseError(line_no, toks[0].column, "unknown keyword '" + std::string(kw) + "'");
        }
    }
    return out;
}

std::string to_text(const Netlist& netlist) {
    std::ostringstream os;
    for (const auto& p : netlist.params) os << "param " << p.name << " " << format_double(p.value) << "\n";
    for (const auto& g : netlist.gates)
        os << to_string(g.spec.kind) << " " << g.spec.nodes[0] << " " << g.spec.nodes[1] << " "
           << g.spec.nodes[2] << "\n";
    for (const auto& c : netlist.clamps) os << "in " << c.clamp.node << " " << (c.clamp.value ? 1 : 0) << "\n";
    for (const auto& p : netlist.probes) os << "probe " << p.node << "\n";
    return os.str();
}

DeviceParams resolve_params(const Netlist& netlist, DeviceParams base) {
    for (const auto& p : netlist.params) base.set(p.name, p.value);
    return base;
}

Circuit assemble(const Netlist& netlist, const DeviceParams& params) {
    std::vector<GateSpec> gates;
    for (const auto& g : netlist.gates) gates.push_back(g.spec);
    std::vector<ClampSpec> clamps;
    for (const auto& c : netlist.clamps) clamps.push_back(c.clamp);
    Circuit c = assemble(gates, clamps, params);
    for (const auto& p : netlist.probes)
        if (!c.find_node(p.node))
            throw StructuralError("probe on unknown node '" + p.node + "' (line " +
                                  std::to_string(p.line) + ")");
    return c;
}

std::vector<std::string> probe_names(const Netlist& netlist, const Circuit& circuit) {
    std::vector<std::string> out;
    if (netlist.probes.empty()) {
        for (const auto& n : circuit.nodes) out.push_back(n.name);
    } else {
        for (const auto& p : netlist.probes) out.push_back(p.node);
    }
    return out;
}

}  // namespace memsim
