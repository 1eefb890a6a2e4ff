#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace ogdforge {

enum class Bit : std::int8_t { False = -1, True = 1 };

inline Bit nand(Bit a, Bit b) { return (a == Bit::True && b == Bit::True) ? Bit::False : Bit::True; }
inline Bit operator!(Bit a) { return a == Bit::True ? Bit::False : Bit::True; }

using BitVec = std::vector<Bit>;

inline BitVec parse_bits(std::string_view s) {
    BitVec out;
    for (char c : s) {
        if (c == '0') out.push_back(Bit::False);
        else if (c == '1') out.push_back(Bit::True);
        else throw ValidationError("bit string may contain only '0'/'1': '" + std::string(s) + "'");
    }
    return out;
}

inline std::string bits_str(const BitVec& b) {
    std::string s;
    for (Bit x : b) s.push_back(x == Bit::True ? '1' : '0');
    return s;
}

struct Src {
    enum class Kind : std::uint8_t { Input, Gate };
    Kind kind = Kind::Input;
    std::size_t index = 0;

    static Src in(std::size_t k) { return {Kind::Input, k}; }
    static Src gate(std::size_t k) { return {Kind::Gate, k}; }

    bool is_gate() const { return kind == Kind::Gate; }
    friend bool operator==(const Src&, const Src&) = default;

    std::string str() const { return (kind == Kind::Input ? "in:" : "g:") + std::to_string(index); }

    static Src parse(std::string_view s) {
        auto bad = [&] { return ValidationError("bad source '" + std::string(s) + "' (want in:k or g:k)"); };
        std::size_t colon = s.find(':');
        if (colon == std::string_view::npos) throw bad();
        std::string_view head = s.substr(0, colon), tail = s.substr(colon + 1);
        if (tail.empty()) throw bad();
        std::size_t k = 0;
        for (char c : tail) {
            if (c < '0' || c > '9') throw bad();
            k = k * 10 + static_cast<std::size_t>(c - '0');
        }
        if (head == "in") return in(k);
        if (head == "g") return gate(k);
        throw bad();
    }
};

namespace detail {
inline void check_src(const Src& s, std::size_t n_inputs, std::size_t before_gate, const std::string& where) {
    if (s.kind == Src::Kind::Input ? s.index >= n_inputs : s.index >= before_gate)
        throw ValidationError(where + ": source " + s.str() + " is not an input or earlier gate");
}
} // namespace detail

struct NandCircuit {
    std::size_t n_inputs = 0;
    std::vector<std::array<Src, 2>> gates;
    std::vector<Src> outputs;

    void validate() const {
        if (n_inputs == 0) throw ValidationError("circuit needs at least one input");
        if (outputs.size() != n_inputs)
            throw ValidationError("circuit must map n bits to n bits (" + std::to_string(outputs.size()) +
                                  " outputs for " + std::to_string(n_inputs) + " inputs)");
        for (std::size_t g = 0; g < gates.size(); ++g)
            for (const Src& s : gates[g]) detail::check_src(s, n_inputs, g, "gate " + std::to_string(g));
        for (const Src& s : outputs) detail::check_src(s, n_inputs, gates.size(), "output");
    }
};

enum class GateOp : std::uint8_t { And, Or, Not, Nand };

inline std::string_view gate_op_name(GateOp op) {
    switch (op) {
    case GateOp::And: return "AND";
    case GateOp::Or: return "OR";
    case GateOp::Not: return "NOT";
    case GateOp::Nand: return "NAND";
    }
    return "?";
}

inline GateOp parse_gate_op(std::string_view s) {
    if (s == "AND") return GateOp::And;
    if (s == "OR") return GateOp::Or;
    if (s == "NOT") return GateOp::Not;
    if (s == "NAND") return GateOp::Nand;
    throw ValidationError("unknown gate '" + std::string(s) + "'");
}

struct GeneralGate {
    GateOp op;
    std::vector<Src> in;
};

struct GeneralCircuit {
    std::size_t n_inputs = 0;
    std::vector<GeneralGate> gates;
    std::vector<Src> outputs;

    void validate() const {
        if (n_inputs == 0) throw ValidationError("circuit needs at least one input");
        if (outputs.size() != n_inputs) throw ValidationError("circuit must map n bits to n bits");
        for (std::size_t g = 0; g < gates.size(); ++g) {
            std::size_t want = gates[g].op == GateOp::Not ? 1 : 2;
            if (gates[g].in.size() != want)
                throw ValidationError("gate " + std::to_string(g) + " (" + std::string(gate_op_name(gates[g].op)) +
                                      ") needs fan-in " + std::to_string(want));
            for (const Src& s : gates[g].in) detail::check_src(s, n_inputs, g, "gate " + std::to_string(g));
        }
        for (const Src& s : outputs) detail::check_src(s, n_inputs, gates.size(), "output");
    }
};

namespace detail {
template <class GateFn>
BitVec run_circuit(std::size_t n, std::size_t m, const std::vector<Src>& outs, const BitVec& input, GateFn gate) {
    if (input.size() != n) throw ValidationError("input width mismatch");
    BitVec val(m, Bit::False);
    auto get = [&](const Src& s) { return s.kind == Src::Kind::Input ? input[s.index] : val[s.index]; };
    for (std::size_t g = 0; g < m; ++g) val[g] = gate(g, get);
    BitVec out;
    out.reserve(outs.size());
    for (const Src& s : outs) out.push_back(get(s));
    return out;
}
} // namespace detail

inline BitVec eval(const NandCircuit& c, const BitVec& input) {
    return detail::run_circuit(c.n_inputs, c.gates.size(), c.outputs, input,
                               [&](std::size_t g, auto get) { return nand(get(c.gates[g][0]), get(c.gates[g][1])); });
}

inline BitVec eval(const GeneralCircuit& c, const BitVec& input) {
    return detail::run_circuit(c.n_inputs, c.gates.size(), c.outputs, input, [&](std::size_t g, auto get) {
        const auto& gt = c.gates[g];
        switch (gt.op) {
        case GateOp::Not: return !get(gt.in[0]);
        case GateOp::Nand: return nand(get(gt.in[0]), get(gt.in[1]));
        case GateOp::And: return !nand(get(gt.in[0]), get(gt.in[1]));
        case GateOp::Or: return nand(!get(gt.in[0]), !get(gt.in[1]));
        }
        return Bit::False;
    });
}

namespace detail {
struct NandBuilder {
    NandCircuit c;
    Src add(Src a, Src b) {
        c.gates.push_back({a, b});
        return Src::gate(c.gates.size() - 1);
    }
    Src not_(Src a) { return add(a, a); }
    Src and_(Src a, Src b) { return not_(add(a, b)); }
    Src or_(Src a, Src b) { return add(not_(a), not_(b)); }
};
} // namespace detail

// NOT -> 1 NAND, AND -> 2, OR -> 3.
inline NandCircuit lower_to_nand(const GeneralCircuit& gc) {
    gc.validate();
    detail::NandBuilder b;
    b.c.n_inputs = gc.n_inputs;
    std::vector<Src> map(gc.gates.size());
    auto m = [&](const Src& s) { return s.kind == Src::Kind::Input ? s : map[s.index]; };
    for (std::size_t g = 0; g < gc.gates.size(); ++g) {
        const auto& gt = gc.gates[g];
        switch (gt.op) {
        case GateOp::Not: map[g] = b.not_(m(gt.in[0])); break;
        case GateOp::Nand: map[g] = b.add(m(gt.in[0]), m(gt.in[1])); break;
        case GateOp::And: map[g] = b.and_(m(gt.in[0]), m(gt.in[1])); break;
        case GateOp::Or: map[g] = b.or_(m(gt.in[0]), m(gt.in[1])); break;
        }
    }
    for (const Src& s : gc.outputs) b.c.outputs.push_back(m(s));
    b.c.validate();
    return b.c;
}

// C': one extra (ignored) input, one extra output = [outputs == s_star].
// Every output of C' is a gate: outputs wired straight to an input get a
// double-NOT buffer, because phase 4 overwrites inputs in order.
// s_star is a constant, so XNOR(out_i, s_i) is out_i or NOT(out_i); the
// literals are folded by a balanced AND tree.
inline NandCircuit augment_target(const NandCircuit& c, const BitVec& s_star) {
    c.validate();
    if (s_star.size() != c.n_inputs)
        throw ValidationError("target has " + std::to_string(s_star.size()) + " bits, circuit has " +
                              std::to_string(c.n_inputs));
    detail::NandBuilder b;
    b.c = c;
    b.c.n_inputs = c.n_inputs + 1;
    for (Src& s : b.c.outputs)
        if (!s.is_gate()) s = b.not_(b.not_(s));

    std::vector<Src> lits;
    for (std::size_t i = 0; i < c.n_inputs; ++i)
        lits.push_back(s_star[i] == Bit::True ? b.c.outputs[i] : b.not_(b.c.outputs[i]));
    while (lits.size() > 1) {
        std::vector<Src> next;
        for (std::size_t i = 0; i + 1 < lits.size(); i += 2) next.push_back(b.and_(lits[i], lits[i + 1]));
        if (lits.size() % 2) next.push_back(lits.back());
        lits = std::move(next);
    }
    b.c.outputs.push_back(lits[0]);
    b.c.validate();
    return b.c;
}

inline BitVec parse_target(std::string_view s, std::size_t n) {
    BitVec b = parse_bits(s);
    if (b.size() != n)
        throw ValidationError("target '" + std::string(s) + "' has length " + std::to_string(b.size()) +
                              ", expected " + std::to_string(n));
    return b;
}

struct CpathResult {
    bool reachable = false;
    std::optional<std::size_t> hit_iteration;  // 1-based
};

// Iterate s <- C(s) from all-false; iteration 0 (the start) does not count.
inline CpathResult cpath_oracle(const NandCircuit& c, const BitVec& s_star, std::size_t max_iters) {
    if (max_iters < 1) throw ValidationError("max_iters must be >= 1");
    if (s_star.size() != c.n_inputs) throw ValidationError("target width mismatch");
    BitVec s(c.n_inputs, Bit::False);
    for (std::size_t k = 1; k <= max_iters; ++k) {
        s = eval(c, s);
        if (s == s_star) return {true, k};
    }
    return {};
}

} // namespace ogdforge
