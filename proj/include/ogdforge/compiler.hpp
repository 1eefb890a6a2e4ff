#pragma once

// Circuit -> training sequence, five phases per pass:
//   1 initialise inputs, 2 evaluate gates in order, 3 test the check bit
//   into the first coordinate, 4 copy outputs back to inputs, 5 clear gates.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "circuit.hpp"
#include "error.hpp"
#include "gadget.hpp"
#include "gadget_tables.hpp"
#include "ogd.hpp"

namespace ogdforge {

struct Layout {
    Family family = Family::Hinge;
    std::size_t n_inputs = 0, n_gates = 0;
    static constexpr std::size_t bottom = 0, box = 1, diamond = 2;
    std::optional<std::size_t> triangle;  // regularized scratch
    std::optional<std::size_t> bowtie;    // relu-family +1 helper
    std::optional<std::pair<std::size_t, std::size_t>> bias;

    std::size_t first_input() const { return (triangle || bowtie) ? 4 : 3; }
    std::size_t input(std::size_t j) const { return first_input() + j; }
    std::size_t gate(std::size_t g) const { return first_input() + n_inputs + g; }
    std::size_t base_dim() const { return first_input() + n_inputs + n_gates; }
    std::size_t dim() const { return base_dim() + (bias ? 2 : 0); }
    std::size_t coord(const Src& s) const { return s.is_gate() ? gate(s.index) : input(s.index); }

    // ⊥, □, ◇, inputs..., gates... : comparable across families
    std::vector<std::size_t> semantic() const {
        std::vector<std::size_t> v{bottom, box, diamond};
        for (std::size_t j = 0; j < n_inputs; ++j) v.push_back(input(j));
        for (std::size_t g = 0; g < n_gates; ++g) v.push_back(gate(g));
        return v;
    }

    static Layout make(Family f, std::size_t n, std::size_t m) {
        Layout l;
        l.family = f;
        l.n_inputs = n;
        l.n_gates = m;
        if (f == Family::Regularized) l.triangle = 3;
        if (f == Family::DenseRelu || f == Family::DenseReluDense) l.bowtie = 3;
        return l;
    }
};

// Expected magnitude of a coordinate right after a call. `conditional`:
// the coordinate holds either this magnitude or 0 depending on the data.
struct Magnitude {
    std::size_t coord;
    Rational value;
    bool conditional = false;
};

struct GadgetCallRecord {
    std::string gadget;
    std::vector<std::size_t> coords;
    int phase = 0;
    std::size_t begin = 0, end = 0;  // [begin, end) within one pass
    Env params;
    std::vector<Magnitude> magnitudes;  // regularized only
};

struct CompiledProgram {
    TrainingSequence sequence;
    Layout layout;
    LossModel model;
    NandCircuit circuit;  // C'
    BitVec target;
    std::array<std::size_t, 5> phase_end{};  // exclusive end of phase k+1 within a pass
    std::vector<GadgetCallRecord> calls;
    OgdState initial_state;
    std::optional<Rational> alpha;
    std::vector<Rational> input_eps;  // regularized: input magnitudes at pass start
    std::size_t ledger_iterations = 0;

    std::size_t dim() const { return layout.dim(); }
    std::size_t n_prime() const { return circuit.n_inputs; }
    std::size_t check_coord() const { return layout.coord(circuit.outputs.back()); }
    std::size_t default_max_passes() const {
        if (n_prime() >= 60) throw ValidationError("circuit too wide for an exact pass bound");
        return (std::size_t{1} << n_prime()) + 1;
    }
    std::size_t phase_begin(int k) const { return k <= 1 ? 0 : phase_end[static_cast<std::size_t>(k - 2)]; }
};

// Per-coordinate magnitude eps_i, decayed by alpha per emitted example;
// stored lazily as (value, position).
class EpsilonLedger {
public:
    explicit EpsilonLedger(Rational alpha) : alpha_(std::move(alpha)) {}

    void set(std::size_t i, Rational v, std::size_t t) {
        if (v.sign() <= 0) throw ValidationError("ledger magnitude must be positive");
        e_[i] = {std::move(v), t};
    }
    void unset(std::size_t i) { e_.erase(i); }
    bool has(std::size_t i) const { return e_.count(i) != 0; }
    Rational at(std::size_t i, std::size_t t) const {
        auto it = e_.find(i);
        if (it == e_.end()) throw ValidationError("ledger: coordinate " + std::to_string(i) + " is unset");
        return it->second.first * alpha_.pow(static_cast<long>(t - it->second.second));
    }
    std::map<std::size_t, Rational> snapshot(std::size_t t) const {
        std::map<std::size_t, Rational> m;
        for (const auto& [i, ve] : e_) m[i] = at(i, t);
        return m;
    }
    const Rational& alpha() const { return alpha_; }

private:
    Rational alpha_;
    std::map<std::size_t, std::pair<Rational, std::size_t>> e_;
};

namespace detail {

inline OgdState initial_state_for(Family f, const Layout& l) {
    OgdState s;
    s.w.assign(l.dim(), Rational(0));
    // ReLU gadgets need the helper at +1 (and v = +1) before the first call;
    // from an all-zero start every ReLU input would be exactly 0.
    if (l.bowtie) s.w[*l.bowtie] = Rational(1);
    if (f == Family::DenseReluDense) s.v = Rational(1);
    return s;
}

inline LossModel plain_model(Family f) {
    switch (f) {
    case Family::DenseRelu: return DenseRelu{};
    case Family::DenseReluDense: return DenseReluDense{};
    default: return HingeSvm{};
    }
}

class Builder {
public:
    Builder(const Catalog& cat, Family f, CompiledProgram& p) : cat_(cat), fam_(f), p_(p) {}

    void phase(int k) {
        if (cur_ > 0) p_.phase_end[static_cast<std::size_t>(cur_ - 1)] = p_.sequence.size();
        cur_ = k;
    }
    void finish() { phase(0); }

    GadgetCallRecord& call(std::string_view name, const std::vector<std::size_t>& coords, const Env& params = {}) {
        const GadgetSpec& g = find_gadget(cat_, fam_, name);
        GadgetCallRecord rec;
        rec.gadget = g.name;
        rec.coords = coords;
        rec.phase = cur_;
        rec.begin = p_.sequence.size();
        rec.params = params;
        expand_gadget(cat_, g, coords, params, p_.sequence, g.name, cur_);
        rec.end = p_.sequence.size();
        p_.calls.push_back(std::move(rec));
        return p_.calls.back();
    }

    std::size_t pos() const { return p_.sequence.size(); }
    const Catalog& catalog() const { return cat_; }

private:
    const Catalog& cat_;
    Family fam_;
    CompiledProgram& p_;
    int cur_ = 0;
};

inline CompiledProgram prepare(Family f, const NandCircuit& c, const BitVec& s_star) {
    CompiledProgram p;
    p.circuit = augment_target(c, s_star);
    p.target = s_star;
    p.layout = Layout::make(f, p.circuit.n_inputs, p.circuit.gates.size());
    p.model = plain_model(f);
    return p;
}

} // namespace detail

inline CompiledProgram compile_cpath(const NandCircuit& c, const BitVec& s_star,
                                     const Catalog& cat = builtin_catalog()) {
    CompiledProgram p = detail::prepare(Family::Hinge, c, s_star);
    const Layout& L = p.layout;
    const auto& cp = p.circuit;
    detail::Builder b(cat, Family::Hinge, p);
    b.phase(1);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) b.call("input_false", {L.input(j)});
    b.phase(2);
    for (std::size_t g = 0; g < cp.gates.size(); ++g) {
        b.call("copy", {L.coord(cp.gates[g][0]), L.box});
        b.call("copy", {L.coord(cp.gates[g][1]), L.diamond});
        b.call("destructive_nand", {L.box, L.diamond, L.gate(g)});
    }
    b.phase(3);
    b.call("set_if_true", {p.check_coord(), L.bottom});
    b.phase(4);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) {
        b.call("reset", {L.input(j)});
        b.call("copy", {L.coord(cp.outputs[j]), L.input(j)});
    }
    b.phase(5);
    for (std::size_t g = 0; g < cp.gates.size(); ++g) b.call("reset", {L.gate(g)});
    b.finish();
    p.initial_state = detail::initial_state_for(Family::Hinge, L);
    return p;
}

inline CompiledProgram compile_cpath_relu(const NandCircuit& c, const BitVec& s_star,
                                          const Catalog& cat = builtin_catalog()) {
    CompiledProgram p = detail::prepare(Family::DenseRelu, c, s_star);
    const Layout& L = p.layout;
    const auto& cp = p.circuit;
    const std::size_t h = *L.bowtie;
    detail::Builder b(cat, Family::DenseRelu, p);
    b.phase(1);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) b.call("set_false_if_unset", {L.input(j), h});
    b.phase(2);
    for (std::size_t g = 0; g < cp.gates.size(); ++g) {
        b.call("copy", {L.coord(cp.gates[g][0]), L.box});
        b.call("copy", {L.coord(cp.gates[g][1]), L.diamond});
        b.call("destructive_nand", {L.box, L.diamond, L.gate(g), h});
    }
    b.phase(3);
    b.call("set_if_true", {p.check_coord(), L.bottom});
    b.phase(4);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) {
        b.call("reset", {L.input(j)});
        b.call("copy", {L.coord(cp.outputs[j]), L.input(j)});
    }
    b.phase(5);
    for (std::size_t g = 0; g < cp.gates.size(); ++g) b.call("reset", {L.gate(g)});
    b.finish();
    p.initial_state = detail::initial_state_for(Family::DenseRelu, L);
    return p;
}

inline CompiledProgram compile_cpath_drd(const NandCircuit& c, const BitVec& s_star,
                                         const Catalog& cat = builtin_catalog()) {
    CompiledProgram p = detail::prepare(Family::DenseReluDense, c, s_star);
    const Layout& L = p.layout;
    const auto& cp = p.circuit;
    const std::size_t h = *L.bowtie;
    detail::Builder b(cat, Family::DenseReluDense, p);
    b.phase(1);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) b.call("set_false_if_unset", {L.input(j), h});
    b.phase(2);
    for (std::size_t g = 0; g < cp.gates.size(); ++g) {
        b.call("copy", {L.coord(cp.gates[g][0]), L.box, h});
        b.call("copy", {L.coord(cp.gates[g][1]), L.diamond, h});
        b.call("destructive_nand", {L.box, L.diamond, L.gate(g), h});
    }
    b.phase(3);
    b.call("copy_if_true", {p.check_coord(), L.bottom, h});
    b.phase(4);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) {
        b.call("reset", {L.input(j), h});
        b.call("copy", {L.coord(cp.outputs[j]), L.input(j), h});
    }
    b.phase(5);
    for (std::size_t g = 0; g < cp.gates.size(); ++g) b.call("reset", {L.gate(g), h});
    b.finish();
    p.initial_state = detail::initial_state_for(Family::DenseReluDense, L);
    return p;
}

// ---------------------------------------------------------------- regularized

namespace detail {

// Verifies the table branch structure at the concrete (a, e1, e2) a call
// will use; cached because the same magnitudes recur constantly.
class ContractCache {
public:
    explicit ContractCache(const Catalog& cat) : cat_(cat) {}
    void check(const GadgetSpec& g, const Env& env) {
        std::string key = g.name;
        for (const auto& [k, v] : env) key += "|" + k + "=" + v.str();
        if (ok_.count(key)) return;
        TableCheck r = check_table(cat_, g, env);
        if (!r.ok)
            throw ParameterError(g.name + " is not valid at " + key.substr(g.name.size() + 1) + ": " +
                                 r.first->describe(g));
        ok_.insert(std::move(key));
    }

private:
    const Catalog& cat_;
    std::set<std::string> ok_;
};

struct RegOnce {
    CompiledProgram prog;
    std::vector<Rational> end_eps;
};

inline RegOnce compile_regularized_once(const NandCircuit& c, const BitVec& s_star, const Rational& a,
                                        const std::vector<Rational>& start_eps, ContractCache* contracts,
                                        const Catalog& cat) {
    RegOnce out;
    CompiledProgram& p = out.prog;
    p = prepare(Family::Regularized, c, s_star);
    p.alpha = a;
    p.model = HingeSvm{Rational(1), Rational(1) - a, std::nullopt};
    p.input_eps = start_eps;
    const Layout& L = p.layout;
    const auto& cp = p.circuit;
    const std::size_t tri = *L.triangle;
    EpsilonLedger led(a);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) led.set(L.input(j), start_eps.at(j), 0);

    Builder b(cat, Family::Regularized, p);
    // one call: magnitudes in from the ledger, out via the gadget's returns;
    // slots ending at 0 in every case become unset
    auto call = [&](std::string_view name, const std::vector<std::size_t>& coords) {
        const GadgetSpec& g = find_gadget(cat, Family::Regularized, name);
        Env env{{"a", a}};
        for (std::size_t k = 0; k < g.params.size(); ++k) env[g.params[k]] = led.at(coords.at(k), b.pos());
        if (contracts) contracts->check(g, env);
        GadgetCallRecord& rec = b.call(name, coords, env);
        auto post = contract(g, env);
        Env genv = gadget_env(g, env);
        for (std::size_t s = 0; s < g.slots.size(); ++s) {
            bool any = false, all = true;
            for (const auto& [pre, fin] : post) {
                any = any || !fin[s].is_zero();
                all = all && !fin[s].is_zero();
            }
            std::optional<Rational> ret;
            for (const auto& [slot, expr] : g.returns)
                if (slot == g.slots[s]) ret = eval_cell(expr, genv);
            if (!any) {
                led.unset(coords[s]);
            } else {
                if (!ret) throw ValidationError(g.name + ": slot " + g.slots[s] + " ends set but has no return");
                led.set(coords[s], *ret, rec.end);
                rec.magnitudes.push_back({coords[s], *ret, !all});
            }
        }
    };

    b.phase(1);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) call("rinput_false", {L.input(j)});
    b.phase(2);
    for (std::size_t g = 0; g < cp.gates.size(); ++g) {
        std::size_t c1 = L.coord(cp.gates[g][0]), c2 = L.coord(cp.gates[g][1]);
        call("rcopy", {c1, L.box, tri});
        call("rreset", {L.box});
        call("rcopy", {tri, c1, L.box});
        call("rcopy", {c2, L.diamond, tri});
        call("rreset", {L.diamond});
        call("rcopy", {tri, c2, L.diamond});
        call("rdnand", {L.box, L.diamond, L.gate(g)});
    }
    b.phase(3);
    call("rset_if_true", {p.check_coord(), L.bottom});
    b.phase(4);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) {
        std::size_t src = L.coord(cp.outputs[j]);
        call("rreset", {L.input(j)});
        call("rcopy", {src, L.input(j), L.box});
        call("rcopy", {L.box, src, L.diamond});
        call("rreset", {L.diamond});
    }
    b.phase(5);
    for (std::size_t g = 0; g < cp.gates.size(); ++g) call("rreset", {L.gate(g)});
    b.finish();
    p.initial_state = initial_state_for(Family::Regularized, L);
    for (std::size_t j = 0; j < cp.n_inputs; ++j) out.end_eps.push_back(led.at(L.input(j), p.sequence.size()));
    return out;
}

} // namespace detail

// Input magnitudes at pass start depend on the previous pass's phase 4,
// but gadget lengths do not depend on magnitudes: compile once with a
// placeholder, read the end-of-pass magnitudes off the ledger, recompile
// until start == end (two rounds in practice).
inline CompiledProgram compile_cpath_regularized(const NandCircuit& c, const BitVec& s_star, const Rational& alpha,
                                                 const Catalog& cat = builtin_catalog()) {
    validate_model(HingeSvm{Rational(1), Rational(1) - alpha, std::nullopt});
    if (alpha.sign() <= 0 || !(alpha < Rational(1))) throw ParameterError("alpha must lie in (1/sqrt 2, 1)");
    std::size_t n_prime = c.n_inputs + 1;
    std::vector<Rational> eps(n_prime, Rational(1));
    auto first = detail::compile_regularized_once(c, s_star, alpha, eps, nullptr, cat);
    eps = first.end_eps;
    detail::ContractCache contracts(cat);
    for (std::size_t round = 2; round <= 6; ++round) {
        auto r = detail::compile_regularized_once(c, s_star, alpha, eps, &contracts, cat);
        if (r.end_eps == eps) {
            r.prog.ledger_iterations = round;
            return std::move(r.prog);
        }
        eps = r.end_eps;
    }
    throw ValidationError("regularized input magnitudes did not settle");
}

// ---------------------------------------------------------------- transforms

// Two extra coordinates forced to x = -1 everywhere; after every base
// example a two-example correction returns them to 0.
inline CompiledProgram apply_bias_transform(const CompiledProgram& p, const Catalog& cat = builtin_catalog()) {
    const auto* h = std::get_if<HingeSvm>(&p.model);
    if (!h) throw UnsupportedCombination("bias transform needs the hinge model");
    if (h->lambda.sign() != 0) throw UnsupportedCombination("bias transform with regularization is not supported");
    if (h->bias_dims) throw UnsupportedCombination("bias transform already applied");
    if (h->eta != Rational(1)) throw UnsupportedCombination("apply the bias transform before learning-rate scaling");

    CompiledProgram q = p;
    std::size_t b1 = p.layout.dim(), b2 = b1 + 1;
    q.layout.bias = {b1, b2};
    HingeSvm m = *h;
    m.bias_dims = {b1, b2};
    q.model = m;
    TrainingSequence corr = instantiate(cat, find_gadget(cat, Family::Hinge, "bias_correction"), {b1, b2});
    q.sequence.clear();
    q.sequence.reserve(p.sequence.size() * (1 + corr.size()));
    for (const auto& ex : p.sequence) {
        if (ex.y != Rational(1)) throw ValidationError("bias transform expects unit labels on base examples");
        Example e = ex;
        e.x.set(b1, Rational(-1));
        e.x.set(b2, Rational(-1));
        q.sequence.push_back(std::move(e));
        for (auto c : corr) {
            c.phase = ex.phase;
            c.gadget = "bias_correction";
            q.sequence.push_back(std::move(c));
        }
    }
    const std::size_t k = 1 + corr.size();
    for (auto& e : q.phase_end) e *= k;
    for (auto& c : q.calls) {
        c.begin *= k;
        c.end *= k;
    }
    q.initial_state.w.resize(q.layout.dim(), Rational(0));
    return q;
}

// eta = r^2 with every x divided by r: the whole trajectory scales by r.
inline CompiledProgram apply_eta_scaling(const CompiledProgram& p, const Rational& r) {
    if (r.sign() <= 0) throw ParameterError("eta root must be positive, got " + r.str());
    const auto* h = std::get_if<HingeSvm>(&p.model);
    if (!h) throw UnsupportedCombination("learning-rate scaling needs the hinge model");
    if (h->lambda.sign() != 0) throw UnsupportedCombination("learning-rate scaling with regularization is not supported");
    CompiledProgram q = p;
    HingeSvm m = *h;
    m.eta = h->eta * r * r;
    q.model = m;
    Rational inv = r.inverse();
    for (auto& ex : q.sequence) ex.x = ex.x.scaled(inv);
    for (auto& w : q.initial_state.w) w *= r;
    return q;
}

// ---------------------------------------------------------------- front door

struct CompileOptions {
    std::string model = "hinge";  // hinge | hinge-bias | hinge-reg | dense-relu | drd
    std::optional<Rational> alpha;
    std::optional<Rational> eta_root;
};

inline CompiledProgram compile(const NandCircuit& c, const BitVec& s_star, const CompileOptions& o,
                               const Catalog& cat = builtin_catalog()) {
    const std::string& m = o.model;
    if (m != "hinge" && m != "hinge-bias" && m != "hinge-reg" && m != "dense-relu" && m != "drd")
        throw ValidationError("unknown model '" + m + "'");
    if (o.alpha && m != "hinge-reg") throw UnsupportedCombination("--alpha applies only to hinge-reg");
    if (m == "hinge-reg" && !o.alpha) throw ValidationError("hinge-reg needs --alpha");
    if (o.eta_root && m != "hinge" && m != "hinge-bias")
        throw UnsupportedCombination("--eta-root applies only to hinge / hinge-bias");

    CompiledProgram p;
    if (m == "hinge-reg") p = compile_cpath_regularized(c, s_star, *o.alpha, cat);
    else if (m == "dense-relu") p = compile_cpath_relu(c, s_star, cat);
    else if (m == "drd") p = compile_cpath_drd(c, s_star, cat);
    else p = compile_cpath(c, s_star, cat);
    if (m == "hinge-bias") p = apply_bias_transform(p, cat);
    if (o.eta_root) p = apply_eta_scaling(p, *o.eta_root);
    return p;
}

} // namespace ogdforge
