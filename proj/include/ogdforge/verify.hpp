#pragma once

// Reusable checks: table fidelity, compiled-program equivalence against the
// brute-force oracle, transform invariances, fast-forward vs naive.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "compiler.hpp"
#include "fastforward.hpp"
#include "gadget.hpp"
#include "gadget_tables.hpp"
#include "json.hpp"

namespace ogdforge {

// ---------------------------------------------------------------- reports

struct Counterexample {
    std::string where;
    std::string expected, actual;
    std::optional<std::size_t> step;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
    std::optional<Counterexample> cex;
    std::size_t boundary_violations = 0;
    double seconds = 0;

    void fail(std::string where, std::string expected, std::string actual, std::optional<std::size_t> step = {}) {
        if (pass) cex = Counterexample{std::move(where), std::move(expected), std::move(actual), step};
        pass = false;
    }
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](auto& c) { return !c.pass; }));
    }
    std::size_t boundary_violations() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.boundary_violations;
        return n;
    }
    void append(const VerificationReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
    void sort_by_name() {
        std::stable_sort(checks.begin(), checks.end(), [](auto& a, auto& b) { return a.name < b.name; });
    }

    nlohmann::json to_json() const {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json j = {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail},
                                {"boundary_violations", c.boundary_violations}};
            if (c.cex) {
                j["counterexample"] = {{"where", c.cex->where}, {"expected", c.cex->expected},
                                       {"actual", c.cex->actual},
                                       {"step", c.cex->step ? nlohmann::json(*c.cex->step) : nlohmann::json(nullptr)}};
            }
            cs.push_back(std::move(j));
        }
        return {{"suite", suite}, {"seed", seed}, {"ok", ok()}, {"failures", failures()}, {"checks", cs}};
    }

    std::string text() const {
        std::ostringstream os;
        os << "suite " << suite << " (seed " << seed << "): " << checks.size() - failures() << "/" << checks.size()
           << " passed\n";
        for (const auto& c : checks) {
            os << (c.pass ? "  ok   " : "  FAIL ") << c.name;
            if (!c.detail.empty()) os << "  [" << c.detail << "]";
            os << '\n';
            if (c.cex) {
                os << "       at " << c.cex->where;
                if (c.cex->step) os << " (step " << *c.cex->step << ")";
                os << ": expected " << c.cex->expected << ", got " << c.cex->actual << '\n';
            }
        }
        return os.str();
    }
};

// ---------------------------------------------------------------- threads

inline std::size_t worker_count() {
    std::size_t n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* e = std::getenv("OGD_FORGE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end != e && *end == '\0' && v >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
    }
    return n;
}

// Results land by index, so output order never depends on scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lk(mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    std::size_t k = std::min(worker_count(), n);
    std::vector<std::thread> ts;
    for (std::size_t t = 1; t < k; ++t) ts.emplace_back(work);
    work();
    for (auto& t : ts) t.join();
    if (err) std::rethrow_exception(err);
    return out;
}

template <class F>
CheckResult timed(std::string name, F&& body) {
    CheckResult r;
    r.name = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const BoundaryViolation& e) {
        ++r.boundary_violations;
        r.fail("simulation", "no boundary hit", e.what(), e.step());
    } catch (const std::exception& e) {
        r.fail("exception", "none", e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// ---------------------------------------------------------------- tables

// Magnitudes promised by the regularized API, written independently of the
// catalog so a typo there cannot vouch for itself.
inline std::map<std::string, Rational> regularized_api_returns(const std::string& gadget, const Rational& a,
                                                               const Rational& e1) {
    if (gadget == "rcopy") return {{"i2", a.pow(4)}, {"i3", a.pow(4)}};
    if (gadget == "rdnand") return {{"i3", a.pow(12)}};
    if (gadget == "rinput_false") return {{"i1", e1 * a.pow(3) / Rational(2)}};
    if (gadget == "rset_if_true") return {{"i1", e1 * a.pow(3) / Rational(2)}, {"i2", a.pow(2)}};
    return {};
}

inline const std::vector<Rational>& standard_alphas() {
    static const std::vector<Rational> v{Rational(4, 5), Rational(5, 6), Rational(9, 10)};
    return v;
}

// Parameter points a regularized table is checked at: e's below 1, both
// "typical" (powers of a) and unrelated fractions.
inline std::vector<Env> regularized_param_grid(const GadgetSpec& g, const Rational& a) {
    std::vector<Rational> e1s{a.pow(4), a.pow(12), Rational(1, 2), Rational(3, 7)};
    std::vector<Rational> e2s{a.pow(4), Rational(5, 9)};
    std::vector<Env> out;
    for (const auto& e1 : e1s) {
        Env env{{"a", a}};
        bool two = false;
        for (const auto& p : g.params) {
            if (p == "e1") env["e1"] = e1;
            if (p == "e2") two = true;
        }
        if (!two) {
            out.push_back(env);
            continue;
        }
        for (const auto& e2 : e2s) {
            Env e = env;
            e["e2"] = e2;
            out.push_back(e);
        }
    }
    return out;
}

inline std::vector<Env> param_grid(const GadgetSpec& g, const std::vector<Rational>& alphas) {
    if (g.family != Family::Regularized) return {Env{}};
    std::vector<Env> out;
    for (const auto& a : alphas) {
        auto grid = regularized_param_grid(g, a);
        out.insert(out.end(), grid.begin(), grid.end());
    }
    return out;
}

inline std::string env_str(const Env& env) {
    std::string s;
    for (const auto& [k, v] : env) s += (s.empty() ? "" : ",") + k + "=" + v.str();
    return s;
}

inline Catalog with_gadget(const Catalog& cat, const GadgetSpec& g) {
    Catalog c = cat;
    for (auto& x : c)
        if (x.family == g.family && x.name == g.name) x = g;
    return c;
}

inline std::size_t sparsity_cap(Family f) { return f == Family::DenseReluDense ? 4 : 3; }

// One check per gadget (all parameter points) plus one per erratum replay.
inline VerificationReport verify_gadget_tables(Family fam, const Catalog& cat = builtin_catalog(),
                                               const std::vector<Rational>& alphas = standard_alphas()) {
    VerificationReport rep;
    rep.suite = std::string("gadgets/") + family_name(fam);
    for (const auto& g : cat) {
        if (g.family != fam) continue;
        auto grid = param_grid(g, alphas);
        rep.checks.push_back(timed(std::string(family_name(fam)) + "/" + g.name, [&](CheckResult& r) {
            std::size_t rows = 0, nnz = 0;
            for (const auto& env : grid) {
                TableCheck tc = check_table(cat, g, env);
                rows += tc.rows_checked;
                nnz = std::max(nnz, tc.max_nnz);
                if (!tc.ok) {
                    if (tc.first->stage == "boundary") ++r.boundary_violations;
                    r.fail(tc.first->describe(g) + (env.empty() ? "" : " @" + env_str(env)), tc.first->expected,
                           tc.first->actual);
                    return;
                }
                if (fam == Family::Regularized) {
                    Env genv = gadget_env(g, env);
                    auto api = regularized_api_returns(g.name, env.at("a"), env.count("e1") ? env.at("e1") : Rational(0));
                    std::map<std::string, Rational> declared;
                    for (const auto& [slot, expr] : g.returns) declared[slot] = eval_cell(expr, genv);
                    if (declared != api) {
                        std::string d, e;
                        for (auto& [k, v] : declared) d += k + "=" + v.str() + " ";
                        for (auto& [k, v] : api) e += k + "=" + v.str() + " ";
                        r.fail(g.table + " returns @" + env_str(env), e, d);
                        return;
                    }
                }
            }
            if (nnz > sparsity_cap(fam)) r.fail(g.table + " sparsity", "<= " + std::to_string(sparsity_cap(fam)),
                                                std::to_string(nnz));
            r.detail = std::to_string(grid.size()) + " parameter point(s), " + std::to_string(rows) +
                       " rows, max nnz " + std::to_string(nnz);
        }));
        for (const auto& e : g.errata) {
            rep.checks.push_back(timed("discrepancy/" + e.id, [&](CheckResult& r) {
                GadgetSpec m = g;
                erratum_cell(m, e) = e.verbatim;
                Catalog c2 = with_gadget(cat, m);
                for (const auto& env : grid) {
                    TableCheck tc = check_table(c2, m, env);
                    if (!tc.ok) {
                        r.detail = g.table + ": printed '" + e.verbatim + "' fails (" + tc.first->describe(m) +
                                   "); using '" + e.corrected + "'";
                        return;
                    }
                }
                r.fail(g.table + " erratum " + e.id, "printed value disagrees with simulation",
                       "printed value reproduces the table (stale erratum)");
            }));
        }
    }
    return rep;
}

inline VerificationReport verify_all_gadget_tables(const Catalog& cat = builtin_catalog()) {
    VerificationReport rep;
    rep.suite = "gadgets";
    for (Family f : {Family::Hinge, Family::Regularized, Family::DenseRelu, Family::DenseReluDense})
        rep.append(verify_gadget_tables(f, cat));
    return rep;
}

// ---------------------------------------------------------------- faults

// Every editable cell of every gadget, in a fixed order.
struct CellRef {
    Family family;
    std::string gadget;
    std::string where;
    std::function<std::string&(GadgetSpec&)> get;
};

inline std::vector<CellRef> table_cells(const Catalog& cat) {
    std::vector<CellRef> out;
    for (const auto& g : cat) {
        auto add = [&](std::string where, std::function<std::string&(GadgetSpec&)> f) {
            out.push_back({g.family, g.name, std::move(where), std::move(f)});
        };
        for (std::size_t b = 0; b < g.blocks.size(); ++b) {
            const Block& blk = g.blocks[b];
            std::string B = "block " + std::to_string(b + 1);
            for (std::size_t i = 0; i < blk.x.size(); ++i)
                add(B + " x" + std::to_string(i + 1), [b, i](GadgetSpec& s) -> std::string& { return s.blocks[b].x[i]; });
            if (blk.kind == Block::Kind::Example)
                add(B + " y", [b](GadgetSpec& s) -> std::string& { return s.blocks[b].y; });
            for (std::size_t k = 0; k < blk.call_params.size(); ++k)
                add(B + " param " + std::to_string(k + 1),
                    [b, k](GadgetSpec& s) -> std::string& { return s.blocks[b].call_params[k].second; });
            for (std::size_t c = 0; c < blk.rows.size(); ++c)
                for (std::size_t col = 0; col < blk.rows[c].after.size(); ++col) {
                    std::string C = " case " + std::to_string(c + 1) + " col " + std::to_string(col + 1);
                    if (b == 0)
                        add(B + C + " before",
                            [b, c, col](GadgetSpec& s) -> std::string& { return s.blocks[b].rows[c].before[col]; });
                    add(B + C + " after",
                        [b, c, col](GadgetSpec& s) -> std::string& { return s.blocks[b].rows[c].after[col]; });
                }
        }
        for (std::size_t k = 0; k < g.constants.size(); ++k)
            add("constant " + g.constants[k].first,
                [k](GadgetSpec& s) -> std::string& { return s.constants[k].second; });
    }
    return out;
}

inline std::string mutate_expr(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ') t.push_back(c);
    if (t == "0") return "1";
    return "-(" + s + ")";
}

struct Fault {
    Catalog catalog;
    Family family;
    std::string gadget, where, before, after;
};

// Mutates cell `index` (mod the cell count) of a copy of the catalog.
inline Fault inject_fault(const Catalog& cat, std::size_t index) {
    auto cells = table_cells(cat);
    const CellRef& ref = cells.at(index % cells.size());
    Fault f{cat, ref.family, ref.gadget, ref.where, "", ""};
    for (auto& g : f.catalog)
        if (g.family == ref.family && g.name == ref.gadget) {
            std::string& cell = ref.get(g);
            f.before = cell;
            cell = mutate_expr(cell);
            f.after = cell;
        }
    return f;
}

// A mutant no effect-based check can see: from every tabulated
// precondition, original and mutant produce the same state after every
// single example (e.g. an x entry that only ever multiplies v = 0).
inline bool equivalent_mutant(const Catalog& original, const Fault& f) {
    const GadgetSpec& g0 = find_gadget(original, f.family, f.gadget);
    const GadgetSpec& g1 = find_gadget(f.catalog, f.family, f.gadget);
    for (const auto& env : param_grid(g0, standard_alphas())) {
        Env e0 = gadget_env(g0, env), e1;
        try {
            e1 = gadget_env(g1, env);
        } catch (const std::exception&) {
            return false;
        }
        std::vector<std::size_t> coords(g0.slots.size());
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = i;
        TrainingSequence s0, s1;
        try {
            expand_gadget(original, g0, coords, env, s0, g0.name);
            expand_gadget(f.catalog, g1, coords, env, s1, g1.name);
        } catch (const std::exception&) {
            return false;
        }
        if (s0.size() != s1.size()) return false;
        LossModel model = family_model(f.family, e0);
        for (std::size_t c = 0; c < g0.n_cases(); ++c) {
            if (g0.blocks[0].rows[c].before != g1.blocks[0].rows[c].before) return false;
            auto start = detail::row_values(g0.blocks[0].rows[c].before, e0);
            OgdState a;
            a.w.assign(start.begin(), start.begin() + static_cast<std::ptrdiff_t>(coords.size()));
            if (g0.tracks_v()) a.v = start.back();
            OgdState b = a;
            for (std::size_t t = 0; t < s0.size(); ++t) {
                try {
                    step_inplace(a, s0[t], model);
                    step_inplace(b, s1[t], model);
                } catch (const BoundaryViolation&) {
                    return false;
                }
                if (!(a == b)) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- circuits

// gates draw uniformly from the inputs and earlier gates; outputs from all wires
inline NandCircuit random_nand_circuit(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    NandCircuit c;
    c.n_inputs = n;
    auto pick = [&](std::size_t avail) {
        std::size_t k = std::uniform_int_distribution<std::size_t>(0, avail - 1)(rng);
        return k < n ? Src::in(k) : Src::gate(k - n);
    };
    for (std::size_t g = 0; g < m; ++g) c.gates.push_back({pick(n + g), pick(n + g)});
    for (std::size_t j = 0; j < n; ++j) c.outputs.push_back(pick(n + m));
    c.validate();
    return c;
}

inline BitVec random_bits(std::mt19937_64& rng, std::size_t n) {
    BitVec b;
    for (std::size_t i = 0; i < n; ++i) b.push_back((rng() >> 17U) & 1U ? Bit::True : Bit::False);
    return b;
}

struct Instance {
    std::string name;
    NandCircuit circuit;
    BitVec target;
};

namespace detail {
struct CircuitKit {
    NandBuilder b;
    explicit CircuitKit(std::size_t n) { b.c.n_inputs = n; }
    Src in(std::size_t k) const { return Src::in(k); }
    Src xor_(Src x, Src y) {
        Src t = b.add(x, y);
        return b.add(b.add(x, t), b.add(y, t));
    }
    NandCircuit done(std::vector<Src> outs) {
        b.c.outputs = std::move(outs);
        b.c.validate();
        return b.c;
    }
};

// bit 0 is the least significant
inline NandCircuit counter(std::size_t n) {
    CircuitKit k(n);
    std::vector<Src> outs;
    Src carry = k.in(0);
    outs.push_back(k.b.not_(k.in(0)));
    for (std::size_t i = 1; i < n; ++i) {
        outs.push_back(k.xor_(k.in(i), carry));
        if (i + 1 < n) carry = k.b.and_(k.in(i), carry);
    }
    return k.done(outs);
}
} // namespace detail

// Small circuits with known behaviour: cycles, fixed points, constants,
// pure rewiring (exercises output buffering), lowered general gates.
inline std::vector<Instance> handcrafted_instances() {
    using detail::CircuitKit;
    std::vector<Instance> v;
    auto not1 = [] {
        CircuitKit k(1);
        return k.done({k.b.not_(k.in(0))});
    }();
    auto notnot = [] {
        CircuitKit k(1);
        return k.done({k.b.not_(k.b.not_(k.in(0)))});
    }();
    auto ident2 = [] {
        CircuitKit k(2);
        return k.done({k.in(0), k.in(1)});
    }();
    auto swap_not = [] {
        CircuitKit k(2);
        return k.done({k.b.not_(k.in(1)), k.in(0)});
    }();
    auto const_true = [] {
        CircuitKit k(2);
        Src t = k.b.add(k.in(0), k.b.not_(k.in(0)));
        return k.done({t, t});
    }();
    auto const_mixed = [] {
        CircuitKit k(2);
        Src t = k.b.add(k.in(1), k.b.not_(k.in(1)));
        return k.done({k.b.not_(t), t});
    }();
    auto johnson3 = [] {
        CircuitKit k(3);
        return k.done({k.b.not_(k.in(2)), k.in(0), k.in(1)});
    }();
    auto lfsr4 = [] {
        CircuitKit k(4);
        // shift left, feedback = NOT(x3 XOR x2) so all-false is not stuck
        Src fb = k.b.not_(k.xor_(k.in(3), k.in(2)));
        return k.done({fb, k.in(0), k.in(1), k.in(2)});
    }();
    auto general = [] {
        GeneralCircuit g;
        g.n_inputs = 2;
        g.gates.push_back({GateOp::Not, {Src::in(1)}});
        g.gates.push_back({GateOp::Or, {Src::in(0), Src::gate(0)}});
        g.gates.push_back({GateOp::And, {Src::gate(1), Src::in(1)}});
        g.outputs = {Src::gate(2), Src::gate(1)};
        return lower_to_nand(g);
    }();

    v.push_back({"not/1", not1, parse_bits("1")});
    v.push_back({"not/0", not1, parse_bits("0")});
    v.push_back({"notnot/1", notnot, parse_bits("1")});
    v.push_back({"notnot/0", notnot, parse_bits("0")});
    v.push_back({"identity/00", ident2, parse_bits("00")});
    v.push_back({"identity/11", ident2, parse_bits("11")});
    v.push_back({"swapnot/11", swap_not, parse_bits("11")});
    v.push_back({"swapnot/01", swap_not, parse_bits("01")});
    v.push_back({"counter2/11", detail::counter(2), parse_bits("11")});
    v.push_back({"counter2/00", detail::counter(2), parse_bits("00")});
    v.push_back({"counter3/111", detail::counter(3), parse_bits("111")});
    v.push_back({"counter3/000", detail::counter(3), parse_bits("000")});
    v.push_back({"const/11", const_true, parse_bits("11")});
    v.push_back({"const/01", const_true, parse_bits("01")});
    v.push_back({"constmixed/01", const_mixed, parse_bits("01")});
    v.push_back({"constmixed/10", const_mixed, parse_bits("10")});
    v.push_back({"johnson3/011", johnson3, parse_bits("011")});
    v.push_back({"johnson3/010", johnson3, parse_bits("010")});
    v.push_back({"lfsr4/0110", lfsr4, parse_bits("0110")});
    v.push_back({"general/10", general, parse_bits("10")});
    return v;
}

// Seeded random instances; every fourth one targets C(all-false), the
// adversarial "hit immediately" case.
inline std::vector<Instance> random_instances(std::uint64_t seed, std::size_t count, std::size_t max_n = 4,
                                             std::size_t max_m = 20) {
    std::mt19937_64 rng(seed);
    std::vector<Instance> v;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
        std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
        NandCircuit c = random_nand_circuit(rng, n, m);
        BitVec t = random_bits(rng, n);
        if (i % 4 == 3) t = eval(c, BitVec(n, Bit::False));
        v.push_back({"random/" + std::to_string(seed) + "/" + std::to_string(i), std::move(c), std::move(t)});
    }
    return v;
}

inline std::vector<Instance> equivalence_suite(std::uint64_t seed, std::size_t random_count = 200) {
    auto v = random_instances(seed, random_count);
    auto h = handcrafted_instances();
    v.insert(v.end(), h.begin(), h.end());
    return v;
}

// ---------------------------------------------------------------- programs

// What a checked run of a compiled program observed.
struct RunObservation {
    Decision decision;
    std::vector<std::vector<int>> phase_signs;  // per phase end, signs of the semantic coordinates
    std::size_t steps = 0;
    std::size_t max_bits = 0;
    std::vector<std::pair<std::size_t, std::size_t>> bits_trace;  // (step, max bits) at call ends
};

struct RunOptions {
    std::optional<std::size_t> max_passes;
    bool record_bits = false;
};

// Runs the decision loop while checking, for every pass:
//   - after each call: relu helper == 1 (and v == 1); ledger magnitudes;
//   - ⊥ stays exactly 0 while the check bit is false;
//   - at pass end: inputs encode C'^k(0), every scratch/gate coordinate is 0;
// and compares the decision with the oracle.
inline RunObservation checked_run(const CompiledProgram& p, CheckResult& r, const RunOptions& opt = {}) {
    RunObservation obs;
    const Layout& L = p.layout;
    const std::size_t maxp = opt.max_passes.value_or(p.default_max_passes());
    const std::size_t len = p.sequence.size();
    const auto sem = L.semantic();

    // expected C' states, index k = after k applications
    std::vector<BitVec> states{BitVec(p.n_prime(), Bit::False)};
    for (std::size_t k = 0; k < maxp; ++k) states.push_back(eval(p.circuit, states.back()));

    // a hand-edited program can disagree with its own call records
    for (std::size_t k = 0; k < p.phase_end.size(); ++k)
        if (p.phase_end[k] > len || (k && p.phase_end[k] < p.phase_end[k - 1])) {
            r.fail("phase " + std::to_string(k + 1) + " end", "<= " + std::to_string(len), std::to_string(p.phase_end[k]));
            return obs;
        }
    for (const auto& c : p.calls)
        if (c.begin > c.end || c.end > len) {
            r.fail("call " + c.gadget, "range within " + std::to_string(len), std::to_string(c.end));
            return obs;
        }

    std::vector<std::optional<std::size_t>> call_at(len + 1);
    for (std::size_t c = 0; c < p.calls.size(); ++c)
        if (p.calls[c].end > p.calls[c].begin) call_at[p.calls[c].end] = c;
    std::vector<char> phase_end_at(len + 1, 0);
    for (auto e : p.phase_end) phase_end_at[e] = 1;

    auto where = [&](const StepInfo& i) {
        return "pass " + std::to_string(i.pass) + " example " + std::to_string(i.index) + " (" + i.ex.gadget + ")";
    };
    bool stop = false;
    StepObserver ob = [&](const StepInfo& i) {
        if (stop) return;
        const Simulator& sim = i.sim;
        const std::size_t pos = i.index + 1;
        const bool check_true = states[i.pass].back() == Bit::True;
        if (!check_true && !i.ex.x.get(L.bottom).is_zero() && !sim.weight(L.bottom).is_zero()) {
            r.fail(where(i), "w[⊥] = 0 (check bit false)", sim.weight(L.bottom).str(), i.step);
            stop = true;
            return;
        }
        if (auto c = call_at[pos]) {
            const auto& call = p.calls[*c];
            if (L.bowtie && sim.weight(*L.bowtie) != Rational(1)) {
                r.fail(where(i), "helper = 1 between calls", sim.weight(*L.bowtie).str(), i.step);
                stop = true;
                return;
            }
            if (sim.v() && *sim.v() != Rational(1)) {
                r.fail(where(i), "v = 1 between calls", sim.v()->str(), i.step);
                stop = true;
                return;
            }
            for (const auto& m : call.magnitudes) {
                Rational got = sim.weight(m.coord).abs();
                if (got != m.value && !(m.conditional && got.is_zero())) {
                    r.fail(where(i) + " coord " + std::to_string(m.coord), "|w| = " + m.value.str(), got.str(),
                           i.step);
                    stop = true;
                    return;
                }
            }
            if (opt.record_bits) {
                std::size_t b = sim.max_bits();
                obs.max_bits = std::max(obs.max_bits, b);
                obs.bits_trace.emplace_back(i.step, b);
            }
        }
        if (phase_end_at[pos]) {
            std::vector<int> s;
            for (auto c : sem) s.push_back(sim.sign(c));
            obs.phase_signs.push_back(std::move(s));
        }
        if (pos == len) {
            const BitVec& want = states[i.pass];
            for (std::size_t j = 0; j < L.n_inputs; ++j) {
                int sg = sim.sign(L.input(j));
                int exp = want[j] == Bit::True ? 1 : -1;
                if (sg != exp) {
                    r.fail(where(i) + " input " + std::to_string(j), std::to_string(exp), std::to_string(sg), i.step);
                    stop = true;
                    return;
                }
                if (!p.alpha && sim.weight(L.input(j)).abs() != Rational(1)) {
                    r.fail(where(i) + " input " + std::to_string(j), "|w| = 1", sim.weight(L.input(j)).str(), i.step);
                    stop = true;
                    return;
                }
            }
            std::vector<std::size_t> zeros{L.box, L.diamond};
            if (L.triangle) zeros.push_back(*L.triangle);
            for (std::size_t g = 0; g < L.n_gates; ++g) zeros.push_back(L.gate(g));
            if (L.bias) {
                zeros.push_back(L.bias->first);
                zeros.push_back(L.bias->second);
            }
            for (auto z : zeros)
                if (sim.sign(z) != 0) {
                    r.fail(where(i) + " coord " + std::to_string(z), "0 at pass end", sim.weight(z).str(), i.step);
                    stop = true;
                    return;
                }
        }
    };
    obs.decision = decide_first_coordinate_positive(p.sequence, p.model, maxp, p.initial_state, ob);
    obs.steps = obs.decision.step.value_or(obs.decision.passes_run * len);
    return obs;
}

// Oracle on the original circuit; the extra check bit of C' at iteration k
// is exactly [C^k(0) == s*].
inline CpathResult oracle_for(const Instance& in, std::size_t max_iters) {
    return cpath_oracle(in.circuit, in.target, max_iters);
}

inline void compare_decision(const Decision& d, const CpathResult& o, CheckResult& r) {
    if (!r.pass) return;
    if (d.answer != o.reachable || d.pass != o.hit_iteration) {
        auto fmt = [](bool a, std::optional<std::size_t> k) {
            return std::string(a ? "YES" : "NO") + (k ? " @" + std::to_string(*k) : "");
        };
        r.fail("decision", fmt(o.reachable, o.hit_iteration), fmt(d.answer, d.pass));
    }
}

inline CompiledProgram compile_variant(const Instance& in, const std::string& variant) {
    CompileOptions o;
    o.model = variant;
    if (variant == "hinge-reg") o.alpha = Rational(4, 5);
    return compile(in.circuit, in.target, o);
}

// Decision and pass index against the oracle, for one instance and one model variant.
inline CheckResult verify_equivalence(const Instance& in, const std::string& variant,
                                      std::optional<std::size_t> max_passes = {}) {
    return timed("equivalence/" + variant + "/" + in.name, [&](CheckResult& r) {
        CompiledProgram p = compile_variant(in, variant);
        std::size_t maxp = max_passes.value_or(p.default_max_passes());
        RunObservation ob = checked_run(p, r, {maxp, false});
        compare_decision(ob.decision, oracle_for(in, maxp), r);
        r.detail = std::string(ob.decision.answer ? "YES pass " + std::to_string(*ob.decision.pass) : "NO") +
                   ", d=" + std::to_string(p.dim()) + ", len=" + std::to_string(p.sequence.size());
    });
}

inline VerificationReport verify_equivalence_suite(const std::vector<Instance>& insts, const std::string& variant,
                                                   std::uint64_t seed = 0) {
    VerificationReport rep;
    rep.suite = "equivalence/" + variant;
    rep.seed = seed;
    rep.checks = parallel_map<CheckResult>(insts.size(), [&](std::size_t i) { return verify_equivalence(insts[i], variant); });
    return rep;
}

// ---------------------------------------------------------------- transforms

// bias: same decision, and both bias weights are 0 before every base example
inline CheckResult verify_bias_invariance(const Instance& in) {
    return timed("bias/" + in.name, [&](CheckResult& r) {
        CompiledProgram base = compile_cpath(in.circuit, in.target);
        CompiledProgram biased = apply_bias_transform(base);
        std::size_t maxp = base.default_max_passes();
        auto [b1, b2] = *biased.layout.bias;
        const std::size_t k = biased.sequence.size() / base.sequence.size();
        if (biased.sequence.size() != 3 * base.sequence.size())
            r.fail("length", std::to_string(3 * base.sequence.size()), std::to_string(biased.sequence.size()));
        bool bad = false;
        StepObserver ob = [&](const StepInfo& i) {
            if (bad || (i.index + 1) % k != 0) return;  // next example is a base one
            if (!i.sim.weight(b1).is_zero() || !i.sim.weight(b2).is_zero()) {
                r.fail("pass " + std::to_string(i.pass) + " example " + std::to_string(i.index + 1), "w_b1 = w_b2 = 0",
                       i.sim.weight(b1).str() + "," + i.sim.weight(b2).str(), i.step);
                bad = true;
            }
        };
        Decision d0 = decide_first_coordinate_positive(base.sequence, base.model, maxp, base.initial_state);
        Decision d1 = decide_first_coordinate_positive(biased.sequence, biased.model, maxp, biased.initial_state, ob);
        if (d0.answer != d1.answer || d0.pass != d1.pass)
            r.fail("decision", d0.answer ? "YES" : "NO", d1.answer ? "YES" : "NO");
        compare_decision(d1, oracle_for(in, maxp), r);
    });
}

// eta = r^2: run both in lockstep; every state is r x and every branch equal
inline CheckResult verify_eta_scaling(const Instance& in, const Rational& root) {
    return timed("eta/" + root.str() + "/" + in.name, [&](CheckResult& r) {
        CompiledProgram base = compile_cpath(in.circuit, in.target);
        CompiledProgram sc = apply_eta_scaling(base, root);
        std::size_t maxp = base.default_max_passes();
        Simulator s0(base.model, base.initial_state), s1(sc.model, sc.initial_state);
        const std::size_t len = base.sequence.size();
        std::optional<std::size_t> hit0, hit1;
        for (std::size_t pass = 1; pass <= maxp && !hit0 && !hit1; ++pass)
            for (std::size_t k = 0; k < len; ++k) {
                Branch b0 = s0.apply(base.sequence[k]);
                Branch b1 = s1.apply(sc.sequence[k]);
                if (b0 != b1) {
                    r.fail("branch", b0 == Branch::Update ? "update" : "hold", b1 == Branch::Update ? "update" : "hold",
                           s0.steps());
                    return;
                }
                for (const auto& [i, _] : base.sequence[k].x)
                    if (s1.weight(i) != root * s0.weight(i)) {
                        r.fail("w[" + std::to_string(i) + "]", (root * s0.weight(i)).str(), s1.weight(i).str(), s0.steps());
                        return;
                    }
                if (!hit0 && s0.sign(0) > 0) hit0 = pass;
                if (!hit1 && s1.sign(0) > 0) hit1 = pass;
                if (hit0 || hit1) break;
            }
        OgdState a = s0.state(), b = s1.state();
        for (auto& w : a.w) w *= root;
        if (a.w != b.w) r.fail("final state", "r x base", "differs");
        if (hit0 != hit1) r.fail("decision pass", hit0 ? std::to_string(*hit0) : "-", hit1 ? std::to_string(*hit1) : "-");
        CpathResult o = oracle_for(in, maxp);
        if (hit1 != o.hit_iteration) r.fail("oracle", o.hit_iteration ? std::to_string(*o.hit_iteration) : "-",
                                             hit1 ? std::to_string(*hit1) : "-");
    });
}

// regularized vs plain hinge: identical sign patterns at every phase boundary
inline CheckResult verify_regularized_signs(const Instance& in, const Rational& alpha, RunObservation* keep = nullptr) {
    return timed("regularized/" + alpha.str() + "/" + in.name, [&](CheckResult& r) {
        CompiledProgram base = compile_cpath(in.circuit, in.target);
        CompiledProgram reg = compile_cpath_regularized(in.circuit, in.target, alpha);
        std::size_t maxp = base.default_max_passes();
        CheckResult scratch;
        RunObservation o0 = checked_run(base, scratch, {maxp, false});
        if (!scratch.pass) {
            r.fail("plain run: " + scratch.cex->where, scratch.cex->expected, scratch.cex->actual, scratch.cex->step);
            return;
        }
        RunObservation o1 = checked_run(reg, r, {maxp, keep != nullptr});
        if (!r.pass) return;
        if (o0.phase_signs.size() != o1.phase_signs.size())
            r.fail("phase boundaries", std::to_string(o0.phase_signs.size()), std::to_string(o1.phase_signs.size()));
        for (std::size_t k = 0; r.pass && k < std::min(o0.phase_signs.size(), o1.phase_signs.size()); ++k)
            if (o0.phase_signs[k] != o1.phase_signs[k]) {
                auto fmt = [](const std::vector<int>& v) {
                    std::string s;
                    for (int x : v) s += x > 0 ? '+' : x < 0 ? '-' : '0';
                    return s;
                };
                r.fail("phase boundary " + std::to_string(k + 1), fmt(o0.phase_signs[k]), fmt(o1.phase_signs[k]));
            }
        if (o0.decision.answer != o1.decision.answer || o0.decision.pass != o1.decision.pass)
            r.fail("decision", o0.decision.answer ? "YES" : "NO", o1.decision.answer ? "YES" : "NO");
        compare_decision(o1.decision, oracle_for(in, maxp), r);
        r.detail = std::to_string(o1.phase_signs.size()) + " phase boundaries, ledger rounds " +
                   std::to_string(reg.ledger_iterations);
        if (keep) *keep = std::move(o1);
    });
}

// ---------------------------------------------------------------- fast-forward

struct LsInstance {
    std::vector<LsPoint> points;
    std::vector<Rational> w1;
    Rational eta;
    std::size_t tau = 1;
};

inline LsInstance random_ls_instance(std::mt19937_64& rng, std::size_t max_d = 4, std::size_t max_T = 8,
                                     std::size_t max_tau = 10000) {
    auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    LsInstance li;
    std::size_t d = static_cast<std::size_t>(uni(1, static_cast<long>(max_d)));
    std::size_t T = static_cast<std::size_t>(uni(1, static_cast<long>(max_T)));
    static const long etas[] = {2, 3, 4, 5, 8, 10, 16};
    li.eta = Rational(1, etas[uni(0, 6)]);
    for (std::size_t t = 0; t < T; ++t) {
        LsPoint p;
        for (std::size_t i = 0; i < d; ++i) p.x.emplace_back(uni(-2, 2), uni(1, 2));
        p.y = Rational(uni(-3, 3));
        li.points.push_back(std::move(p));
    }
    for (std::size_t i = 0; i < d; ++i) li.w1.emplace_back(uni(-2, 2));
    li.tau = static_cast<std::size_t>(uni(1, static_cast<long>(max_tau)));
    return li;
}

inline CheckResult verify_fastforward_instance(const LsInstance& li, const std::string& name) {
    return timed(name, [&](CheckResult& r) {
        FfStats st;
        auto terms = terms_of(li.points);
        auto fast = fast_forward(terms, li.w1, li.eta, li.tau, &st);
        auto naive = naive_least_squares(li.points, li.w1, li.eta, li.tau);
        if (fast != naive) r.fail("w^tau", "naive simulation", "fast-forward differs");
        std::size_t budget = matmul_budget(li.points.size(), li.tau);
        if (st.matmuls > budget) r.fail("matmul count", "<= " + std::to_string(budget), std::to_string(st.matmuls));
        const std::uint64_t p = 1000000007ULL;
        auto modv = fast_forward_mod(terms, li.w1, li.eta, li.tau, p);
        if (modv != to_mod(naive, p)) r.fail("mod p", "exact result reduced", "differs");
        r.detail = "d=" + std::to_string(li.w1.size()) + " T=" + std::to_string(li.points.size()) +
                   " tau=" + std::to_string(li.tau) + " matmuls=" + std::to_string(st.matmuls) + "/" +
                   std::to_string(budget);
    });
}

inline VerificationReport verify_fastforward_suite(std::uint64_t seed, std::size_t count = 100) {
    VerificationReport rep;
    rep.suite = "fastforward";
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::vector<LsInstance> insts;
    for (std::size_t i = 0; i < count; ++i) {
        insts.push_back(random_ls_instance(rng));
        // pin the edges: tau = 1, one full pass, the maximum
        if (i == 0) insts.back().tau = 1;
        if (i == 1) insts.back().tau = insts.back().points.size() + 1;
        if (i == 2) insts.back().tau = 10000;
    }
    rep.checks = parallel_map<CheckResult>(insts.size(), [&](std::size_t i) {
        return verify_fastforward_instance(insts[i], "fastforward/" + std::to_string(seed) + "/" + std::to_string(i));
    });
    rep.checks.push_back(timed("fastforward/mod-p/tau=1e9", [&](CheckResult& r) {
        std::mt19937_64 g(seed ^ 0x9e3779b97f4a7c15ULL);
        LsInstance li = random_ls_instance(g, 4, 8);
        while (li.w1.size() < 4 || li.points.size() < 8) li = random_ls_instance(g, 4, 8);
        FfStats st;
        auto t0 = std::chrono::steady_clock::now();
        fast_forward_mod(terms_of(li.points), li.w1, li.eta, 1000000000ULL, 1000000007ULL, &st);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s >= 10) r.fail("runtime", "< 10 s", std::to_string(s) + " s");
        std::size_t budget = matmul_budget(8, 1000000000ULL);
        if (st.matmuls > budget) r.fail("matmul count", "<= " + std::to_string(budget), std::to_string(st.matmuls));
        r.detail = std::to_string(s) + " s, matmuls " + std::to_string(st.matmuls);
    }));
    rep.checks.push_back(timed("fastforward/nand-not-affine", [&](CheckResult& r) {
        AffineWitness w = nand_affine_witness();
        if (w.affine_realizable) r.fail("nand", "infeasible", "affine map found");
        r.detail = "rank " + std::to_string(w.rank_coeff) + " vs augmented " + std::to_string(w.rank_augmented);
    }));
    return rep;
}

} // namespace ogdforge
