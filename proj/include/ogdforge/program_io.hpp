#pragma once

// Compiled-program files: one JSON header line, then one example per line.
//   {"x": {"3": "-2"}, "y": "1", "gadget": "reset", "phase": 4}

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "circuit_io.hpp"
#include "compiler.hpp"
#include "json.hpp"

namespace ogdforge {

using nlohmann::json;

inline json rationals_to_json(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

inline std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected an array of rationals");
    std::vector<Rational> v;
    for (const auto& e : j) {
        if (e.is_number_integer()) v.emplace_back(e.get<long>());
        else v.push_back(Rational::parse(e.get<std::string>()));
    }
    return v;
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ValidationError("expected a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

inline json example_to_json(const Example& ex) {
    json x = json::object();
    for (const auto& [i, v] : ex.x) x[std::to_string(i)] = v.str();
    return {{"x", x}, {"y", ex.y.str()}, {"gadget", ex.gadget}, {"phase", ex.phase}};
}

inline Example example_from_json(const json& j) {
    Example ex;
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) throw ValidationError("example needs x and y");
    for (const auto& [k, v] : j.at("x").items()) {
        std::size_t idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoul(k, &used);
            if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            throw ValidationError("bad coordinate key '" + k + "'");
        }
        ex.x.set(idx, rational_from_json(v));
    }
    ex.y = rational_from_json(j.at("y"));
    ex.gadget = j.value("gadget", std::string());
    ex.phase = j.value("phase", 0);
    return ex;
}

inline json model_to_json(const LossModel& m) {
    if (const auto* h = std::get_if<HingeSvm>(&m)) {
        json j = {{"kind", "hinge"}, {"eta", h->eta.str()}, {"lambda", h->lambda.str()}, {"bias_dims", nullptr}};
        if (h->bias_dims) j["bias_dims"] = {h->bias_dims->first, h->bias_dims->second};
        return j;
    }
    return {{"kind", std::holds_alternative<DenseRelu>(m) ? "dense-relu" : "drd"}};
}

inline LossModel model_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "dense-relu") return DenseRelu{};
    if (kind == "drd") return DenseReluDense{};
    if (kind != "hinge") throw ValidationError("unsupported model kind '" + kind + "'");
    HingeSvm h;
    if (j.contains("eta")) h.eta = rational_from_json(j["eta"]);
    if (j.contains("lambda")) h.lambda = rational_from_json(j["lambda"]);
    if (j.contains("bias_dims") && !j["bias_dims"].is_null())
        h.bias_dims = {j["bias_dims"].at(0).get<std::size_t>(), j["bias_dims"].at(1).get<std::size_t>()};
    validate_model(h);
    return h;
}

inline json state_to_json(const OgdState& s) {
    return {{"w", rationals_to_json(s.w)}, {"v", s.v ? json(s.v->str()) : json(nullptr)}};
}

inline json layout_to_json(const Layout& l) {
    json in = json::array(), gs = json::array();
    for (std::size_t j = 0; j < l.n_inputs; ++j) in.push_back(l.input(j));
    for (std::size_t g = 0; g < l.n_gates; ++g) gs.push_back(l.gate(g));
    json j = {{"family", family_name(l.family)},
              {"bottom", l.bottom},
              {"box", l.box},
              {"diamond", l.diamond},
              {"triangle", l.triangle ? json(*l.triangle) : json(nullptr)},
              {"bowtie", l.bowtie ? json(*l.bowtie) : json(nullptr)},
              {"bias", l.bias ? json({l.bias->first, l.bias->second}) : json(nullptr)},
              {"inputs", in},
              {"gates", gs}};
    return j;
}

inline json program_header(const CompiledProgram& p) {
    json phases = json::array();
    for (int k = 1; k <= 5; ++k)
        phases.push_back({{"phase", k}, {"begin", p.phase_begin(k)}, {"end", p.phase_end[static_cast<std::size_t>(k - 1)]}});
    json h = {{"format", "ogdforge-program"},
              {"version", 1},
              {"model", model_to_json(p.model)},
              {"d", p.dim()},
              {"length", p.sequence.size()},
              {"n_prime", p.n_prime()},
              {"default_max_passes", p.n_prime() < 60 ? json(p.default_max_passes()) : json(nullptr)},
              {"layout", layout_to_json(p.layout)},
              {"phases", phases},
              {"circuit", circuit_to_json(p.circuit)},
              {"target", bits_str(p.target)},
              {"initial_state", state_to_json(p.initial_state)},
              {"alpha", p.alpha ? json(p.alpha->str()) : json(nullptr)}};
    if (p.alpha) {
        h["input_eps"] = rationals_to_json(p.input_eps);
        h["ledger_rounds"] = p.ledger_iterations;
        json led = json::array();
        for (const auto& c : p.calls) {
            json m = json::object();
            for (const auto& mg : c.magnitudes)
                m[std::to_string(mg.coord)] = mg.conditional ? json({{"eps", mg.value.str()}, {"conditional", true}})
                                                             : json(mg.value.str());
            led.push_back({{"gadget", c.gadget}, {"coords", c.coords}, {"end", c.end}, {"eps", m}});
        }
        h["ledger"] = led;
    }
    return h;
}

inline void write_program(std::ostream& os, const CompiledProgram& p) {
    os << program_header(p).dump() << '\n';
    for (const auto& ex : p.sequence) os << example_to_json(ex).dump() << '\n';
}

inline void save_program(const std::string& path, const CompiledProgram& p) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    write_program(out, p);
    if (!out) throw ValidationError("write to '" + path + "' failed");
}

// What the decision procedures need back from a file. Files may be
// hand-written, so everything beyond model/d is optional.
struct LoadedProgram {
    json header;
    LossModel model;
    std::size_t d = 0;
    TrainingSequence sequence;
    OgdState initial_state;
    std::optional<std::size_t> default_max_passes;
};

inline LoadedProgram read_program(std::istream& in) {
    LoadedProgram lp;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    try {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            json j = json::parse(line);
            if (!have_header) {
                lp.header = j;
                lp.model = model_from_json(j.at("model"));
                lp.d = j.at("d").get<std::size_t>();
                have_header = true;
                continue;
            }
            lp.sequence.push_back(example_from_json(j));
        }
    } catch (const json::exception& e) {
        throw ValidationError("program line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError("program line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!have_header) throw ValidationError("program file has no header");
    for (const auto& ex : lp.sequence)
        if (ex.x.extent() > lp.d) throw DimensionError("example exceeds declared dimension " + std::to_string(lp.d));
    lp.initial_state = zero_state(lp.model, lp.d);
    if (lp.header.contains("initial_state")) {
        const json& s = lp.header["initial_state"];
        lp.initial_state.w = rationals_from_json(s.at("w"));
        if (lp.initial_state.w.size() != lp.d) throw DimensionError("initial state has the wrong dimension");
        if (s.contains("v") && !s["v"].is_null()) lp.initial_state.v = rational_from_json(s["v"]);
    }
    if (is_drd(lp.model) && !lp.initial_state.v) lp.initial_state.v = Rational(0);
    if (lp.header.contains("default_max_passes") && lp.header["default_max_passes"].is_number_unsigned())
        lp.default_max_passes = lp.header["default_max_passes"].get<std::size_t>();
    return lp;
}

inline LoadedProgram load_program(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read program file '" + path + "'");
    return read_program(in);
}

} // namespace ogdforge
