#include <gtest/gtest.h>

#include <random>

#include "ogdforge/emitters.hpp"
#include "ogdforge/verify.hpp"

using namespace ogdforge;

namespace {
using W = std::vector<Rational>;

// runs seq from w and returns every intermediate w
std::vector<W> trace(const TrainingSequence& seq, W w, const LossModel& m = HingeSvm{}) {
    OgdState s;
    s.w = std::move(w);
    if (is_drd(m)) s.v = Rational(1);
    std::vector<W> out;
    for (const auto& e : seq) {
        step_inplace(s, e, m);
        out.push_back(s.w);
    }
    return out;
}
W run(const TrainingSequence& seq, W w, const LossModel& m = HingeSvm{}) { return trace(seq, std::move(w), m).back(); }
} // namespace

TEST(HingeGadgets, Reset) {
    auto t = trace(emit_reset(0), {-1});
    EXPECT_EQ(t, (std::vector<W>{{-1}, {0}}));
    t = trace(emit_reset(0), {1});
    EXPECT_EQ(t, (std::vector<W>{{-1}, {0}}));
    EXPECT_EQ(emit_reset(0)[0].x, (SparseVec{{0, -2}}));
}

TEST(HingeGadgets, Not) {
    EXPECT_EQ(trace(emit_not(0), {-1}), (std::vector<W>{{3}, {1}}));
    EXPECT_EQ(trace(emit_not(0), {1}), (std::vector<W>{{1}, {-1}}));
}

TEST(HingeGadgets, Copy) {
    EXPECT_EQ(run(emit_copy(0, 1), {-1, 0}), (W{-1, -1}));
    EXPECT_EQ(run(emit_copy(0, 1), {1, 0}), (W{1, 1}));
    EXPECT_EQ(trace(emit_copy(0, 1), {1, 0}).front(), (W{-3, 2}));
}

TEST(HingeGadgets, DestructiveNand) {
    auto d = emit_destructive_nand(0, 1, 2);
    EXPECT_EQ(run(d, {1, 1, 0}), (W{0, 0, -1}));
    EXPECT_EQ(run(d, {-1, -1, 0}), (W{0, 0, 1}));
    EXPECT_EQ(run(d, {-1, 1, 0}), (W{0, 0, 1}));
    EXPECT_EQ(run(d, {1, -1, 0}), (W{0, 0, 1}));
}

TEST(HingeGadgets, InputFalse) {
    EXPECT_EQ(run(emit_input_false(0), {0}), W{-1});
    EXPECT_EQ(run(emit_input_false(0), {1}), W{1});
    EXPECT_EQ(run(emit_input_false(0), {-1}), W{-1});
}

TEST(HingeGadgets, SetIfTrueLeavesTargetAloneWhenFalse) {
    auto s = emit_set_if_true(0, 1);
    for (const auto& w : trace(s, {-1, 0})) EXPECT_EQ(w[1], Rational(0));
    EXPECT_EQ(run(s, {-1, 0}), (W{-1, 0}));
    EXPECT_EQ(run(s, {1, 0}), (W{1, 1}));
}

TEST(HingeGadgets, BiasCorrection) {
    auto b = emit_bias_correction(0, 1);
    ASSERT_EQ(b.size(), 2U);
    EXPECT_EQ(b[0].y, Rational(1));
    EXPECT_EQ(b[1].y, Rational(-1));
    EXPECT_EQ(trace(b, {0, 0}), (std::vector<W>{{-1, -1}, {0, 0}}));
    EXPECT_EQ(trace(b, {-1, -1}), (std::vector<W>{{-1, -1}, {0, 0}}));
}

TEST(HingeGadgets, Composition) {
    // copy, copy, dnand: computes NAND into coord 4 and leaves the inputs intact
    for (int a : {-1, 1})
        for (int b : {-1, 1}) {
            TrainingSequence s = emit_copy(0, 2);
            auto c2 = emit_copy(1, 3);
            auto dn = emit_destructive_nand(2, 3, 4);
            s.insert(s.end(), c2.begin(), c2.end());
            s.insert(s.end(), dn.begin(), dn.end());
            int want = (a == 1 && b == 1) ? -1 : 1;
            EXPECT_EQ(run(s, {a, b, 0, 0, 0}), (W{a, b, 0, 0, want}));
        }
}

TEST(HingeGadgets, Sparsity) {
    for (const auto& g : builtin_catalog()) {
        if (g.family != Family::Hinge) continue;
        std::vector<std::size_t> coords(g.slots.size());
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = 10 * i + 1;
        for (const auto& e : instantiate(builtin_catalog(), g, coords)) EXPECT_LE(e.x.nnz(), 3U) << g.name;
    }
}

// Every gadget, embedded at scattered coordinates among noise, touches only
// its own slots (beyond uniform decay) and lands on its tabulated postcondition.
TEST(Gadgets, FrameProperty) {
    std::mt19937_64 rng(21);
    const Catalog& cat = builtin_catalog();
    for (const auto& g : cat) {
        Env params = param_grid(g, {Rational(4, 5)}).front();
        Env env = gadget_env(g, params);
        LossModel model = family_model(g.family, env);
        std::size_t k = g.slots.size(), d = 3 * k + 4;
        std::vector<std::size_t> coords;
        for (std::size_t i = 0; i < k; ++i) coords.push_back(3 * i + 2);
        TrainingSequence seq = instantiate(cat, g, coords, params);
        for (const auto& [pre, post] : contract(g, params)) {
            OgdState s;
            for (std::size_t i = 0; i < d; ++i) s.w.push_back(Rational(static_cast<long>(rng() % 7) - 3, 5));
            for (std::size_t i = 0; i < k; ++i) s.w[coords[i]] = pre[i];
            if (g.tracks_v()) s.v = pre.back();
            OgdState start = s;
            // the regularizer shrinks everything, touched or not
            Rational shrink = g.family == Family::Regularized
                                  ? env.at("a").pow(static_cast<long>(seq.size()))
                                  : Rational(1);
            for (const auto& e : seq) step_inplace(s, e, model);
            for (std::size_t i = 0; i < d; ++i) {
                auto it = std::find(coords.begin(), coords.end(), i);
                if (it == coords.end())
                    EXPECT_EQ(s.w[i], start.w[i] * shrink) << family_name(g.family) << "/" << g.name << " coord " << i;
                else
                    EXPECT_EQ(s.w[i], post[static_cast<std::size_t>(it - coords.begin())])
                        << family_name(g.family) << "/" << g.name;
            }
            if (g.tracks_v()) {
                EXPECT_EQ(*s.v, post.back()) << g.name;
            }
        }
    }
}

TEST(RegularizedGadgets, ResetTrace) {
    Rational a(4, 5), e1(1);
    HingeSvm m{Rational(1), Rational(1, 5), std::nullopt};
    auto seq = emit_rreset(0, e1, a);
    ASSERT_EQ(seq.size(), 3U);
    auto t = trace(seq, {-e1}, m);
    EXPECT_EQ(t[0][0], Rational(1) / (Rational(2) * e1 * a * a) - e1 * a);
    EXPECT_EQ(t.back()[0], Rational(0));
    EXPECT_EQ(run(seq, {e1}, m)[0], Rational(0));
}

TEST(RegularizedGadgets, Returns) {
    for (const Rational& a : standard_alphas()) {
        HingeSvm m{Rational(1), Rational(1) - a, std::nullopt};
        Rational e1 = a.pow(4), e2 = Rational(5, 9);
        auto c = emit_rcopy(0, 1, 2, e1, a);
        EXPECT_EQ(c.ret("i2"), a.pow(4));
        EXPECT_EQ(c.ret("i3"), a.pow(4));
        EXPECT_EQ(run(c.seq, {e1, 0, 0}, m), (W{0, a.pow(4), a.pow(4)}));
        EXPECT_EQ(run(c.seq, {-e1, 0, 0}, m), (W{0, -a.pow(4), -a.pow(4)}));

        auto d = emit_rdnand(0, 1, 2, e1, e2, a);
        EXPECT_EQ(d.ret("i3"), a.pow(12));
        EXPECT_EQ(run(d.seq, {e1, e2, 0}, m), (W{0, 0, -a.pow(12)}));
        EXPECT_EQ(run(d.seq, {-e1, e2, 0}, m), (W{0, 0, a.pow(12)}));

        auto f = emit_rinput_false(0, e1, a);
        EXPECT_EQ(f.ret("i1"), e1 * a.pow(3) / Rational(2));
        auto s = emit_rset_if_true(0, 1, e1, a);
        EXPECT_EQ(s.ret("i1"), e1 * a.pow(3) / Rational(2));
        EXPECT_EQ(s.ret("i2"), a.pow(2));
    }
}

TEST(RegularizedGadgets, NormalizedInputFalse) {
    Rational a(4, 5);
    HingeSvm m{Rational(1), Rational(1, 5), std::nullopt};
    auto e = emit_rinput_false_normalized(0, 1, 2, Rational(1, 3), a);
    EXPECT_EQ(e.ret("i1"), a.pow(7));
    EXPECT_EQ(run(e.seq, {0, 0, 0}, m), (W{-a.pow(7), 0, 0}));
    EXPECT_EQ(run(e.seq, {Rational(1, 3), 0, 0}, m), (W{a.pow(7), 0, 0}));
}

TEST(RegularizedGadgets, AlphaRange) {
    EXPECT_THROW(emit_rreset(0, 1, Rational(1)), ParameterError);
    EXPECT_THROW(emit_rreset(0, 1, Rational(7, 10)), ParameterError);  // 2a^2 < 1
    EXPECT_THROW(emit_rcopy(0, 1, 2, Rational(0), Rational(4, 5)), ParameterError);
    EXPECT_NO_THROW(emit_rreset(0, 1, Rational(8, 11)));
}

TEST(ReluGadgets, DenseReluRows) {
    EXPECT_EQ(trace(emit_dr_reset(0), {-1}, DenseRelu{}), (std::vector<W>{{-1}, {0}}));
    EXPECT_EQ(trace(emit_dr_reset(0), {1}, DenseRelu{}), (std::vector<W>{{-1}, {0}}));
    auto r = emit_dr_reset(0);
    EXPECT_EQ(r[0].y, Rational(0));
    EXPECT_EQ(r[1].y, Rational(1, 2));
    EXPECT_EQ(run(emit_dr_copy(0, 1), {-1, 0}, DenseRelu{}), (W{-1, -1}));
    EXPECT_EQ(run(emit_dr_copy(0, 1), {1, 0}, DenseRelu{}), (W{1, 1}));
}

TEST(ReluGadgets, DrdRestoresV) {
    for (int a : {-1, 1}) {
        OgdState s;
        s.w = {a, 0, 1};
        s.v = Rational(1);
        for (const auto& e : emit_drd_copy(0, 1, 2)) step_inplace(s, e, DenseReluDense{});
        EXPECT_EQ(s.w, (W{a, a, 1}));
        EXPECT_EQ(*s.v, Rational(1));
    }
}

TEST(Tables, EveryFamilyVerifies) {
    for (Family f : {Family::Hinge, Family::Regularized, Family::DenseRelu, Family::DenseReluDense}) {
        auto rep = verify_gadget_tables(f);
        EXPECT_TRUE(rep.ok()) << rep.text();
        EXPECT_EQ(rep.boundary_violations(), 0U);
    }
}

TEST(Tables, DiscrepanciesAreNamedAndLive) {
    auto rep = verify_all_gadget_tables();
    std::size_t named = 0;
    for (const auto& c : rep.checks)
        if (c.name.rfind("discrepancy/", 0) == 0) {
            ++named;
            EXPECT_TRUE(c.pass) << c.name;
            EXPECT_FALSE(c.detail.empty());
        }
    EXPECT_EQ(named, 8U);
}

TEST(Tables, CheckerCatchesDuplicatePrecondition) {
    GadgetSpec g = find_gadget(builtin_catalog(), Family::Hinge, "not");
    g.blocks[0].rows[1].before = g.blocks[0].rows[0].before;
    for (auto& b : g.blocks) b.rows[1] = b.rows[0];
    auto tc = check_table(with_gadget(builtin_catalog(), g), g);
    EXPECT_FALSE(tc.ok);
}

// Mutation score: every single-cell edit of the catalog is either caught by
// the table checker or provably invisible.
TEST(Tables, MutantsAreCaught) {
    const Catalog& cat = builtin_catalog();
    std::size_t n = table_cells(cat).size(), equivalent = 0;
    ASSERT_GT(n, 1000U);
    std::vector<std::string> survivors;
    for (std::size_t i = 0; i < n; ++i) {
        Fault f = inject_fault(cat, i);
        bool caught = false;
        for (const auto& g : f.catalog) {
            if (g.family != f.family || caught) continue;
            for (const auto& env : param_grid(g, {Rational(4, 5)}))
                if (!check_table(f.catalog, g, env).ok) {
                    caught = true;
                    break;
                }
        }
        if (caught) continue;
        if (equivalent_mutant(cat, f))
            ++equivalent;
        else
            survivors.push_back(f.gadget + " " + f.where + " " + f.before + "->" + f.after);
    }
    EXPECT_TRUE(survivors.empty()) << survivors.size() << " e.g. " << survivors.front();
    EXPECT_EQ(equivalent, 3U);
}
