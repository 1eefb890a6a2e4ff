#pragma once

// Step traces as JSONL, written as the run goes:
//   {"step": 12, "pass": 1, "gadget": "copy", "w": ["0","-1",...], "v": null}

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ogd.hpp"
#include "program_io.hpp"

namespace ogdforge {

struct TraceRecord {
    std::size_t step = 0, pass = 0;
    std::string gadget;
    std::vector<Rational> w;
    std::optional<Rational> v;
};

inline json trace_record_json(std::size_t step, std::size_t pass, const std::string& gadget, const OgdState& s) {
    return {{"step", step},
            {"pass", pass},
            {"gadget", gadget},
            {"w", rationals_to_json(s.w)},
            {"v", s.v ? json(s.v->str()) : json(nullptr)}};
}

// Observer for the decide_* loops; flushes nothing itself, the stream decides.
inline StepObserver trace_writer(std::ostream& os) {
    return [&os](const StepInfo& i) {
        os << trace_record_json(i.step, i.pass, i.ex.gadget, i.sim.state()).dump() << '\n';
    };
}

inline std::vector<TraceRecord> read_trace(std::istream& in) {
    std::vector<TraceRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            json j = json::parse(line);
            TraceRecord r;
            r.step = j.at("step").get<std::size_t>();
            r.pass = j.at("pass").get<std::size_t>();
            r.gadget = j.value("gadget", std::string());
            r.w = rationals_from_json(j.at("w"));
            if (j.contains("v") && !j["v"].is_null()) r.v = rational_from_json(j["v"]);
            out.push_back(std::move(r));
        } catch (const json::exception& e) {
            throw ValidationError("trace line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

struct ReplayResult {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<std::size_t> first_bad_step;
    std::string message;
};

// Re-simulates the program and compares each recorded state in order.
inline ReplayResult replay_trace(const TrainingSequence& seq, const LossModel& model, const OgdState& init,
                                 const std::vector<TraceRecord>& trace) {
    ReplayResult r;
    if (seq.empty()) {
        r.ok = trace.empty();
        if (!r.ok) r.message = "trace has records but the sequence is empty";
        return r;
    }
    Simulator sim(model, init);
    for (const auto& rec : trace) {
        if (rec.step != sim.steps() + 1) {
            r.ok = false;
            r.first_bad_step = rec.step;
            r.message = "trace skips from step " + std::to_string(sim.steps()) + " to " + std::to_string(rec.step);
            return r;
        }
        const Example& ex = seq[(rec.step - 1) % seq.size()];
        sim.apply(ex);
        OgdState s = sim.state();
        std::size_t pass = (rec.step - 1) / seq.size() + 1;
        if (s.w != rec.w || s.v != rec.v || pass != rec.pass || ex.gadget != rec.gadget) {
            r.ok = false;
            r.first_bad_step = rec.step;
            r.message = "state mismatch at step " + std::to_string(rec.step);
            return r;
        }
        ++r.checked;
    }
    return r;
}

} // namespace ogdforge
