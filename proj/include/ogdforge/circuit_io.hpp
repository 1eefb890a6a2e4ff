#pragma once

#include <fstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "circuit.hpp"
#include "error.hpp"

namespace ogdforge {

// {"n":1,"gates":[["in:0","in:0"]],"outputs":["g:0"],"kind":"nand"}
// general kind: gates are ["AND","in:0","g:1"] / ["NOT","in:0"].
using AnyCircuit = std::variant<NandCircuit, GeneralCircuit>;

inline AnyCircuit circuit_from_json(const nlohmann::json& j) {
    try {
        std::string kind = j.value("kind", std::string("nand"));
        std::size_t n = j.at("n").get<std::size_t>();
        std::vector<Src> outs;
        for (const auto& s : j.at("outputs")) outs.push_back(Src::parse(s.get<std::string>()));
        if (kind == "nand") {
            NandCircuit c;
            c.n_inputs = n;
            for (const auto& g : j.at("gates")) {
                if (!g.is_array() || g.size() != 2) throw ValidationError("nand gate needs exactly two sources");
                c.gates.push_back({Src::parse(g[0].get<std::string>()), Src::parse(g[1].get<std::string>())});
            }
            c.outputs = outs;
            c.validate();
            return c;
        }
        if (kind == "general") {
            GeneralCircuit c;
            c.n_inputs = n;
            for (const auto& g : j.at("gates")) {
                if (!g.is_array() || g.empty()) throw ValidationError("general gate must be [OP, src...]");
                GeneralGate gt{parse_gate_op(g[0].get<std::string>()), {}};
                for (std::size_t k = 1; k < g.size(); ++k) gt.in.push_back(Src::parse(g[k].get<std::string>()));
                c.gates.push_back(std::move(gt));
            }
            c.outputs = outs;
            c.validate();
            return c;
        }
        throw ValidationError("unknown circuit kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("circuit json: ") + e.what());
    }
}

inline nlohmann::json circuit_to_json(const NandCircuit& c) {
    nlohmann::json g = nlohmann::json::array(), o = nlohmann::json::array();
    for (const auto& gt : c.gates) g.push_back({gt[0].str(), gt[1].str()});
    for (const auto& s : c.outputs) o.push_back(s.str());
    return {{"n", c.n_inputs}, {"gates", g}, {"outputs", o}, {"kind", "nand"}};
}

inline nlohmann::json circuit_to_json(const GeneralCircuit& c) {
    nlohmann::json g = nlohmann::json::array(), o = nlohmann::json::array();
    for (const auto& gt : c.gates) {
        nlohmann::json row = {std::string(gate_op_name(gt.op))};
        for (const auto& s : gt.in) row.push_back(s.str());
        g.push_back(row);
    }
    for (const auto& s : c.outputs) o.push_back(s.str());
    return {{"n", c.n_inputs}, {"gates", g}, {"outputs", o}, {"kind", "general"}};
}

inline NandCircuit as_nand(const AnyCircuit& c) {
    if (const auto* n = std::get_if<NandCircuit>(&c)) return *n;
    return lower_to_nand(std::get<GeneralCircuit>(c));
}

inline AnyCircuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read circuit file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("circuit file '" + path + "': " + e.what());
    }
    return circuit_from_json(j);
}

} // namespace ogdforge
