#include <gtest/gtest.h>

#include "ogdforge/compiler.hpp"
#include "ogdforge/verify.hpp"

using namespace ogdforge;

namespace {
NandCircuit not_circuit() {
    NandCircuit c;
    c.n_inputs = 1;
    c.gates.push_back({Src::in(0), Src::in(0)});
    c.outputs = {Src::gate(0)};
    return c;
}
NandCircuit notnot_circuit() {
    NandCircuit c = not_circuit();
    c.gates.push_back({Src::gate(0), Src::gate(0)});
    c.outputs = {Src::gate(1)};
    return c;
}
const Instance& handcrafted(const std::string& name) {
    static const auto all = handcrafted_instances();
    for (const auto& i : all)
        if (i.name == name) return i;
    throw std::runtime_error("no instance " + name);
}
} // namespace

TEST(Layout, Coordinates) {
    Layout h = Layout::make(Family::Hinge, 2, 3);
    EXPECT_EQ(Layout::bottom, 0U);
    EXPECT_EQ(Layout::box, 1U);
    EXPECT_EQ(Layout::diamond, 2U);
    EXPECT_EQ(h.input(0), 3U);
    EXPECT_EQ(h.gate(0), 5U);
    EXPECT_EQ(h.dim(), 8U);
    Layout r = Layout::make(Family::Regularized, 2, 3);
    EXPECT_EQ(*r.triangle, 3U);
    EXPECT_EQ(r.input(0), 4U);
    Layout d = Layout::make(Family::DenseReluDense, 1, 1);
    EXPECT_EQ(*d.bowtie, 3U);
    EXPECT_EQ(d.dim(), 6U);
}

TEST(Compile, NotShape) {
    CompiledProgram p = compile_cpath(not_circuit(), parse_bits("1"));
    EXPECT_EQ(p.n_prime(), 2U);
    EXPECT_EQ(p.dim(), p.n_prime() + p.circuit.gates.size() + 3);
    EXPECT_EQ(p.default_max_passes(), 5U);
    EXPECT_EQ(p.phase_end[4], p.sequence.size());
    for (int k = 1; k <= 5; ++k) {
        EXPECT_LE(p.phase_begin(k), p.phase_end[static_cast<std::size_t>(k - 1)]);
        for (std::size_t i = p.phase_begin(k); i < p.phase_end[static_cast<std::size_t>(k - 1)]; ++i)
            EXPECT_EQ(p.sequence[i].phase, k);
    }
    for (const auto& e : p.sequence) EXPECT_LE(e.x.nnz(), 3U);
    EXPECT_TRUE(p.initial_state.w == std::vector<Rational>(p.dim(), Rational(0)));
}

TEST(Compile, PhaseTwoOrderPerGate) {
    CompiledProgram p = compile_cpath(notnot_circuit(), parse_bits("0"));
    std::vector<std::string> ph2;
    for (const auto& c : p.calls)
        if (c.phase == 2) ph2.push_back(c.gadget);
    ASSERT_EQ(ph2.size(), 3 * p.circuit.gates.size());
    for (std::size_t g = 0; g < p.circuit.gates.size(); ++g) {
        EXPECT_EQ(ph2[3 * g], "copy");
        EXPECT_EQ(ph2[3 * g + 1], "copy");
        EXPECT_EQ(ph2[3 * g + 2], "destructive_nand");
    }
}

TEST(Compile, RejectsBadTarget) {
    EXPECT_THROW(compile_cpath(not_circuit(), parse_bits("01")), ValidationError);
}

// sizes and answers frozen from the brute-force oracle and the compiler
TEST(Compile, HandcraftedFrozen) {
    struct Want {
        const char* name;
        bool reachable;
        std::size_t hit, d, len;
    };
    const Want want[] = {
        {"not/1", true, 1, 6, 49},          {"not/0", true, 2, 7, 68},          {"notnot/1", false, 0, 7, 68},
        {"notnot/0", true, 1, 8, 87},       {"identity/00", true, 1, 14, 195},  {"identity/11", false, 0, 12, 157},
        {"swapnot/11", true, 2, 11, 138},   {"swapnot/01", true, 3, 12, 157},   {"counter2/11", true, 3, 13, 176},
        {"counter2/00", true, 4, 15, 214},  {"counter3/111", true, 7, 22, 341}, {"counter3/000", true, 8, 25, 398},
        {"const/11", true, 1, 10, 119},     {"const/01", false, 0, 11, 138},    {"constmixed/01", true, 1, 12, 157},
        {"constmixed/10", false, 0, 12, 157}, {"johnson3/011", true, 4, 17, 246}, {"johnson3/010", false, 0, 18, 265},
        {"lfsr4/0110", true, 7, 27, 430},   {"general/10", false, 0, 15, 214}};
    for (const auto& w : want) {
        const Instance& in = handcrafted(w.name);
        CompiledProgram p = compile_cpath(in.circuit, in.target);
        EXPECT_EQ(p.dim(), w.d) << w.name;
        EXPECT_EQ(p.sequence.size(), w.len) << w.name;
        Decision d = decide_first_coordinate_positive(p.sequence, p.model, p.default_max_passes(), p.initial_state);
        EXPECT_EQ(d.answer, w.reachable) << w.name;
        EXPECT_EQ(d.pass.value_or(0), w.hit) << w.name;
    }
}

TEST(Compile, PassEndInvariants) {
    for (const char* name : {"counter2/00", "swapnot/01", "general/10"}) {
        const Instance& in = handcrafted(name);
        CompiledProgram p = compile_cpath(in.circuit, in.target);
        Simulator sim(p.model, p.initial_state);
        BitVec state(p.n_prime(), Bit::False);
        for (std::size_t pass = 1; pass <= 3; ++pass) {
            for (const auto& e : p.sequence) sim.apply(e);
            state = eval(p.circuit, state);
            if (state.back() == Bit::True) break;  // check bit set: ⊥ is now on
            for (std::size_t i : {Layout::bottom, Layout::box, Layout::diamond}) EXPECT_TRUE(sim.weight(i).is_zero());
            for (std::size_t g = 0; g < p.circuit.gates.size(); ++g) EXPECT_TRUE(sim.weight(p.layout.gate(g)).is_zero());
            for (std::size_t j = 0; j < p.n_prime(); ++j)
                EXPECT_EQ(sim.weight(p.layout.input(j)), state[j] == Bit::True ? Rational(1) : Rational(-1)) << name;
        }
    }
}

TEST(Compile, ReluFamilies) {
    for (const char* name : {"not/1", "not/0", "notnot/1", "counter2/11"}) {
        const Instance& in = handcrafted(name);
        auto o = cpath_oracle(in.circuit, in.target, std::size_t{1} << (in.circuit.n_inputs + 1));
        for (const char* v : {"dense-relu", "drd"}) {
            CheckResult r = verify_equivalence(in, v);
            EXPECT_TRUE(r.pass) << v << " " << name << " " << (r.cex ? r.cex->where : "");
            EXPECT_EQ(r.boundary_violations, 0U);
        }
        CompiledProgram dr = compile_cpath_relu(in.circuit, in.target);
        EXPECT_EQ(dr.initial_state.w[*dr.layout.bowtie], Rational(1));
        CompiledProgram drd = compile_cpath_drd(in.circuit, in.target);
        EXPECT_EQ(*drd.initial_state.v, Rational(1));
        Decision d = decide_first_coordinate_positive(dr.sequence, dr.model, dr.default_max_passes(), dr.initial_state);
        EXPECT_EQ(d.answer, o.reachable);
        for (const auto& e : drd.sequence) EXPECT_LE(e.x.nnz(), 4U);
    }
}

TEST(Bias, LengthAndInvariance) {
    CompiledProgram p = compile_cpath(not_circuit(), parse_bits("1"));
    CompiledProgram b = apply_bias_transform(p);
    EXPECT_EQ(b.sequence.size(), 3 * p.sequence.size());
    EXPECT_EQ(b.dim(), p.dim() + 2);
    auto [b1, b2] = *b.layout.bias;
    for (std::size_t i = 0; i < b.sequence.size(); ++i) {
        EXPECT_EQ(b.sequence[i].x.get(b1), Rational(-1));
        EXPECT_EQ(b.sequence[i].x.get(b2), Rational(-1));
    }
    EXPECT_EQ(b.phase_end[4], b.sequence.size());
    for (const char* name : {"not/1", "not/0", "notnot/1", "swapnot/01"}) {
        CheckResult r = verify_bias_invariance(handcrafted(name));
        EXPECT_TRUE(r.pass) << name;
    }
}

TEST(Bias, Rejections) {
    CompiledProgram p = compile_cpath(not_circuit(), parse_bits("1"));
    CompiledProgram b = apply_bias_transform(p);
    EXPECT_THROW(apply_bias_transform(b), UnsupportedCombination);
    EXPECT_THROW(apply_bias_transform(apply_eta_scaling(p, Rational(2))), UnsupportedCombination);
    EXPECT_THROW(apply_bias_transform(compile_cpath_relu(not_circuit(), parse_bits("1"))), UnsupportedCombination);
    EXPECT_THROW(apply_bias_transform(compile_cpath_regularized(not_circuit(), parse_bits("1"), Rational(4, 5))),
                 UnsupportedCombination);
}

TEST(Eta, ScalingIsExact) {
    CompiledProgram p = compile_cpath(not_circuit(), parse_bits("0"));
    CompiledProgram one = apply_eta_scaling(p, Rational(1));
    for (std::size_t i = 0; i < p.sequence.size(); ++i) EXPECT_EQ(one.sequence[i].x, p.sequence[i].x);
    CompiledProgram two = apply_eta_scaling(p, Rational(2));
    EXPECT_EQ(std::get<HingeSvm>(two.model).eta, Rational(4));
    auto [s1, t1] = run_sequence(p.initial_state, p.sequence, p.model);
    auto [s2, t2] = run_sequence(two.initial_state, two.sequence, two.model);
    for (std::size_t i = 0; i < t1.size(); ++i) {
        std::vector<Rational> w = t1[i].state.w;
        for (auto& x : w) x *= 2;
        EXPECT_EQ(t2[i].state.w, w);
    }
    for (const Rational& r : {Rational(1, 2), Rational(2), Rational(3)})
        for (const char* name : {"not/0", "counter2/11", "general/10"}) EXPECT_TRUE(verify_eta_scaling(handcrafted(name), r).pass);
    EXPECT_THROW(apply_eta_scaling(p, Rational(0)), ParameterError);
    EXPECT_THROW(apply_eta_scaling(p, Rational(-2)), ParameterError);
    EXPECT_THROW(apply_eta_scaling(compile_cpath_drd(not_circuit(), parse_bits("1")), Rational(2)), UnsupportedCombination);
}

TEST(Regularized, LedgerAndSigns) {
    for (const char* name : {"not/1", "not/0", "notnot/1", "swapnot/11", "counter2/11"}) {
        const Instance& in = handcrafted(name);
        CompiledProgram p = compile_cpath_regularized(in.circuit, in.target, Rational(4, 5));
        EXPECT_EQ(p.ledger_iterations, 2U);
        EXPECT_EQ(p.input_eps.size(), p.n_prime());
        for (const auto& e : p.input_eps) EXPECT_GT(e.sign(), 0);
        for (const auto& e : p.sequence) EXPECT_LE(e.x.nnz(), 3U);
        CheckResult r = verify_regularized_signs(in, Rational(4, 5));
        EXPECT_TRUE(r.pass) << name << " " << (r.cex ? r.cex->where + " " + r.cex->expected + " / " + r.cex->actual : "");
    }
}

TEST(Regularized, AlphaRange) {
    EXPECT_THROW(compile_cpath_regularized(not_circuit(), parse_bits("1"), Rational(1)), ParameterError);
    EXPECT_THROW(compile_cpath_regularized(not_circuit(), parse_bits("1"), Rational(1, 2)), ParameterError);
}

TEST(Ledger, DecaysLazily) {
    EpsilonLedger L(Rational(1, 2));
    L.set(3, Rational(1), 10);
    EXPECT_TRUE(L.has(3));
    EXPECT_EQ(L.at(3, 10), Rational(1));
    EXPECT_EQ(L.at(3, 13), Rational(1, 8));
    auto snap = L.snapshot(12);
    EXPECT_EQ(snap.at(3), Rational(1, 4));
    L.unset(3);
    EXPECT_FALSE(L.has(3));
}

TEST(Options, Combinations) {
    NandCircuit c = not_circuit();
    BitVec t = parse_bits("1");
    EXPECT_THROW(compile(c, t, {"sigmoid", {}, {}}), ValidationError);
    EXPECT_THROW(compile(c, t, {"hinge", Rational(4, 5), {}}), UnsupportedCombination);
    EXPECT_THROW(compile(c, t, {"hinge-reg", {}, {}}), ValidationError);
    EXPECT_THROW(compile(c, t, {"hinge-reg", Rational(4, 5), Rational(2)}), UnsupportedCombination);
    EXPECT_THROW(compile(c, t, {"drd", {}, Rational(2)}), UnsupportedCombination);
    CompiledProgram hb = compile(c, t, {"hinge-bias", {}, Rational(2)});
    EXPECT_EQ(model_name(hb.model), "hinge-bias");
    EXPECT_EQ(std::get<HingeSvm>(hb.model).eta, Rational(4));
    EXPECT_EQ(model_name(compile(c, t, {"hinge-reg", Rational(5, 6), {}}).model), "hinge-reg");
}

TEST(Ledger, RejectsNonPositive) {
    EpsilonLedger L(Rational(4, 5));
    EXPECT_THROW(L.set(0, Rational(0), 0), ValidationError);
    EXPECT_THROW(L.at(0, 0), ValidationError);
}
