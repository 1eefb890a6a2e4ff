#include <gtest/gtest.h>

#include "ogdforge/verify.hpp"

using namespace ogdforge;

TEST(Harness, ParallelMapKeepsOrder) {
    auto v = parallel_map<std::size_t>(50, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], i * i);
    EXPECT_THROW(parallel_map<int>(5, [](std::size_t i) -> int {
                     if (i == 3) throw std::runtime_error("x");
                     return 0;
                 }),
                 std::runtime_error);
}

TEST(Harness, TimedCountsBoundaryViolations) {
    CheckResult r = timed("bv", [](CheckResult&) { throw BoundaryViolation(BoundaryViolation::Kind::Relu, 7); });
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.boundary_violations, 1U);
    ASSERT_TRUE(r.cex);
    EXPECT_EQ(r.cex->step, 7U);
    CheckResult e = timed("err", [](CheckResult&) { throw std::runtime_error("boom"); });
    EXPECT_FALSE(e.pass);
    EXPECT_EQ(e.boundary_violations, 0U);
    CheckResult ok = timed("ok", [](CheckResult& c) { c.detail = "fine"; });
    EXPECT_TRUE(ok.pass);
}

TEST(Harness, ReportRendering) {
    VerificationReport rep;
    rep.suite = "s";
    rep.seed = 9;
    rep.checks.push_back(timed("b", [](CheckResult&) {}));
    rep.checks.push_back(timed("a", [](CheckResult& r) { r.fail("here", "1", "2", 4); }));
    EXPECT_FALSE(rep.ok());
    EXPECT_EQ(rep.failures(), 1U);
    rep.sort_by_name();
    EXPECT_EQ(rep.checks.front().name, "a");
    auto j = rep.to_json();
    EXPECT_EQ(j["seed"], 9);
    EXPECT_EQ(j["failures"], 1);
    EXPECT_EQ(j["checks"][0]["counterexample"]["step"], 4);
    EXPECT_NE(rep.text().find("FAIL a"), std::string::npos);
}

TEST(Faults, MutationOperator) {
    EXPECT_EQ(mutate_expr("0"), "1");
    EXPECT_EQ(mutate_expr(" 0 "), "1");
    EXPECT_EQ(mutate_expr("a^4"), "-(a^4)");
    auto cat = builtin_catalog();
    Fault a = inject_fault(cat, 17), b = inject_fault(cat, 17 + table_cells(cat).size());
    EXPECT_EQ(a.where, b.where);
    EXPECT_NE(a.before, a.after);
}

TEST(Faults, InjectedFaultFailsItsFamily) {
    const Catalog& cat = builtin_catalog();
    Fault f = inject_fault(cat, 0);
    auto rep = verify_gadget_tables(f.family, f.catalog);
    EXPECT_FALSE(rep.ok());
}

// frozen from a reference run of the generator
TEST(Instances, SeededSuiteShape) {
    auto v = random_instances(2024, 200);
    ASSERT_EQ(v.size(), 200U);
    EXPECT_EQ(v[0].circuit.n_inputs, 3U);
    EXPECT_EQ(v[0].circuit.gates.size(), 16U);
    EXPECT_EQ(bits_str(v[0].target), "001");
    EXPECT_EQ(v[1].circuit.n_inputs, 4U);
    EXPECT_EQ(v[1].circuit.gates.size(), 8U);
    EXPECT_EQ(bits_str(v[1].target), "1101");
    EXPECT_EQ(v[2].circuit.n_inputs, 1U);
    EXPECT_EQ(v[2].circuit.gates.size(), 11U);
    std::size_t reachable = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto o = oracle_for(v[i], std::size_t{1} << v[i].circuit.n_inputs);
        reachable += o.reachable;
        if (i % 4 == 3) {
            EXPECT_EQ(o.hit_iteration, 1U);
        }
    }
    EXPECT_EQ(reachable, 105U);
    EXPECT_EQ(equivalence_suite(2024).size(), 220U);
}

TEST(Equivalence, EveryVariantOnASample) {
    auto v = random_instances(5, 12);
    for (const char* variant : {"hinge", "hinge-bias", "dense-relu", "drd"}) {
        auto rep = verify_equivalence_suite(v, variant, 5);
        EXPECT_TRUE(rep.ok()) << rep.text();
        EXPECT_EQ(rep.boundary_violations(), 0U);
    }
    for (const auto& in : v) {
        if (in.circuit.n_inputs > 2) continue;
        CheckResult r = verify_equivalence(in, "hinge-reg");
        EXPECT_TRUE(r.pass) << in.name;
    }
}

TEST(Equivalence, HandcraftedHinge) {
    auto rep = verify_equivalence_suite(handcrafted_instances(), "hinge");
    EXPECT_TRUE(rep.ok()) << rep.text();
    EXPECT_EQ(rep.checks.size(), 20U);
}

// the checker must notice a corrupted program, not just trust the decision
TEST(CheckedRun, DetectsTampering) {
    Instance in = handcrafted_instances()[1];  // not/0
    CompiledProgram p = compile_cpath(in.circuit, in.target);
    CheckResult clean;
    checked_run(p, clean);
    EXPECT_TRUE(clean.pass);

    // drop phase 5 consistently: gates are never reset
    CompiledProgram q = p;
    q.sequence.resize(q.phase_end[3]);
    q.phase_end[4] = q.sequence.size();
    std::erase_if(q.calls, [](const GadgetCallRecord& c) { return c.phase == 5; });
    CheckResult r = timed("tampered", [&](CheckResult& c) { checked_run(q, c); });
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.cex);
    EXPECT_EQ(r.cex->expected, "0 at pass end");

    // bookkeeping that points past the sequence is refused, not followed
    CompiledProgram b = p;
    b.sequence.resize(b.phase_end[3]);
    CheckResult rb = timed("bookkeeping", [&](CheckResult& c) { checked_run(b, c); });
    EXPECT_FALSE(rb.pass);
}

TEST(CheckedRun, RecordsBits) {
    Instance in = handcrafted_instances()[0];
    CompiledProgram p = compile_cpath_regularized(in.circuit, in.target, Rational(4, 5));
    CheckResult r;
    RunObservation o = checked_run(p, r, {std::nullopt, true});
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(o.bits_trace.empty());
    EXPECT_GT(o.max_bits, 0U);
    for (std::size_t i = 1; i < o.bits_trace.size(); ++i) EXPECT_GT(o.bits_trace[i].first, o.bits_trace[i - 1].first);
}
