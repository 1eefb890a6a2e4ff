// ogdforge: compile circuits to OGD training data, simulate, decide, verify.
//
// exit codes: 0 YES / success, 1 NO / verification failure, 2 invalid input,
// 3 unsupported flag combination, 4 boundary violation, 5 modulus error

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ogdforge/ogdforge.hpp"

using namespace ogdforge;

namespace {

enum Exit : int { kYes = 0, kNo = 1, kInvalid = 2, kUnsupported = 3, kBoundary = 4, kModulus = 5 };

std::optional<Rational> opt_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return Rational::parse(s);
}

std::size_t parse_count(const std::string& s, const char* what) {
    // accepts 1000000000 and 1e9
    std::size_t e = s.find_first_of("eE");
    try {
        if (e == std::string::npos) {
            std::size_t used = 0;
            unsigned long long v = std::stoull(s, &used);
            if (used != s.size() || s[0] == '-') throw std::invalid_argument(s);
            return static_cast<std::size_t>(v);
        }
        std::size_t u1 = 0, u2 = 0;
        unsigned long long m = std::stoull(s.substr(0, e), &u1);
        int x = std::stoi(s.substr(e + 1), &u2);
        if (u1 != e || u2 != s.size() - e - 1 || x < 0 || x > 18) throw std::invalid_argument(s);
        unsigned long long v = m;
        for (int i = 0; i < x; ++i) v *= 10;
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        throw ValidationError(std::string("bad ") + what + " '" + s + "'");
    }
}

void print_vector(const std::vector<Rational>& w) { std::cout << rationals_to_json(w).dump() << '\n'; }

// ---------------------------------------------------------------- compile

struct CompileArgs {
    std::string circuit, target, model = "hinge", alpha, eta_root, out;
};

int cmd_compile(const CompileArgs& a) {
    AnyCircuit c = load_circuit(a.circuit);
    NandCircuit nc = as_nand(c);
    BitVec t = parse_target(a.target, nc.n_inputs);
    CompileOptions o;
    o.model = a.model;
    o.alpha = opt_rational(a.alpha);
    o.eta_root = opt_rational(a.eta_root);
    CompiledProgram p = compile(nc, t, o);
    save_program(a.out, p);
    std::cout << "model " << model_name(p.model) << "\n"
              << "d " << p.dim() << "\n"
              << "length " << p.sequence.size() << "\n"
              << "n_prime " << p.n_prime() << "\n"
              << "default_max_passes " << p.default_max_passes() << "\n";
    for (int k = 1; k <= 5; ++k)
        std::cout << "phase " << k << " [" << p.phase_begin(k) << ", " << p.phase_end[static_cast<std::size_t>(k - 1)]
                  << ")\n";
    if (p.alpha) {
        std::cout << "alpha " << p.alpha->str() << "\ninput_eps";
        for (const auto& e : p.input_eps) std::cout << ' ' << e.str();
        std::cout << '\n';
    }
    return kYes;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string program, points, trace;
    std::string passes = "1", steps;
};

int cmd_simulate(const SimulateArgs& a) {
    if (!a.points.empty()) {
        if (!a.program.empty()) throw UnsupportedCombination("give either --program or --points");
        if (a.steps.empty()) throw ValidationError("--points needs --steps");
        PointsFile pf = load_points(a.points);
        std::size_t steps = parse_count(a.steps, "step count");
        print_vector(naive_least_squares(pf.points, pf.w1, pf.eta, steps + 1));
        return kYes;
    }
    if (a.program.empty()) throw ValidationError("simulate needs --program or --points");
    if (!a.steps.empty()) throw UnsupportedCombination("--steps applies to --points; use --passes");
    LoadedProgram lp = load_program(a.program);
    std::size_t passes = parse_count(a.passes, "pass count");
    std::ofstream tr;
    if (!a.trace.empty()) {
        tr.open(a.trace);
        if (!tr) throw ValidationError("cannot write trace '" + a.trace + "'");
    }
    Simulator sim(lp.model, lp.initial_state);
    for (std::size_t p = 1; p <= passes; ++p)
        for (const auto& ex : lp.sequence) {
            sim.apply(ex);
            if (tr) tr << trace_record_json(sim.steps(), p, ex.gadget, sim.state()).dump() << '\n';
        }
    OgdState s = sim.state();
    std::cout << nlohmann::json{{"steps", s.step}, {"w", rationals_to_json(s.w)},
                                {"v", s.v ? nlohmann::json(s.v->str()) : nlohmann::json(nullptr)}}
                     .dump()
              << '\n';
    return kYes;
}

// ---------------------------------------------------------------- decide

struct DecideArgs {
    std::string program, max_passes, question = "first-coord", trace;
};

int cmd_decide(const DecideArgs& a) {
    LoadedProgram lp = load_program(a.program);
    std::size_t maxp = 0;
    if (!a.max_passes.empty()) maxp = parse_count(a.max_passes, "max passes");
    else if (lp.default_max_passes) maxp = *lp.default_max_passes;
    else throw ValidationError("program has no default pass bound; give --max-passes");
    std::ofstream tr;
    StepObserver ob;
    if (!a.trace.empty()) {
        tr.open(a.trace);
        if (!tr) throw ValidationError("cannot write trace '" + a.trace + "'");
        ob = trace_writer(tr);
    }
    Decision d;
    if (a.question == "first-coord") d = decide_first_coordinate_positive(lp.sequence, lp.model, maxp, lp.initial_state, ob);
    else d = decide_fixed_point(lp.sequence, lp.model, maxp, lp.initial_state, ob);
    if (d.answer) {
        std::cout << "YES pass " << *d.pass;
        if (d.step) std::cout << " step " << *d.step;
        std::cout << '\n';
        return kYes;
    }
    std::cout << "NO after " << d.passes_run << " passes\n";
    return kNo;
}

// ---------------------------------------------------------------- fastforward

struct FfArgs {
    std::string points, tau, mod, eta;
    bool stats = false;
};

int cmd_fastforward(const FfArgs& a) {
    PointsFile pf = load_points(a.points);
    if (auto e = opt_rational(a.eta)) {
        if (e->sign() <= 0) throw ParameterError("eta must be positive");
        pf.eta = *e;
    }
    std::size_t tau = parse_count(a.tau, "tau");
    FfStats st;
    auto terms = terms_of(pf.points);
    if (!a.mod.empty()) {
        std::uint64_t p = parse_count(a.mod, "modulus");
        auto w = fast_forward_mod(terms, pf.w1, pf.eta, tau, p, &st);
        nlohmann::json out = nlohmann::json::array();
        for (auto x : w) out.push_back(std::to_string(x));
        std::cout << out.dump() << '\n';
    } else {
        try {
            print_vector(fast_forward(terms, pf.w1, pf.eta, tau, &st));
        } catch (const PrecisionLimit& e) {
            std::cerr << "ogdforge: " << e.what() << " (try --mod 1000000007)\n";
            return kInvalid;
        }
    }
    if (a.stats)
        std::cerr << "matmuls " << st.matmuls << " (budget " << matmul_budget(pf.points.size(), tau) << "), squarings "
                  << st.squarings << '\n';
    return kYes;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all", format = "text";
    std::uint64_t seed = 7;
    long inject = -1;
};

VerificationReport equivalence_report(std::uint64_t seed) {
    auto insts = equivalence_suite(seed);
    VerificationReport rep;
    rep.suite = "equivalence";
    rep.seed = seed;
    for (const char* v : {"hinge", "dense-relu", "drd"}) rep.append(verify_equivalence_suite(insts, v, seed));
    std::vector<std::function<CheckResult()>> jobs;
    for (const auto& in : insts) {
        jobs.push_back([&in] { return verify_bias_invariance(in); });
        for (auto r : {Rational(1, 2), Rational(2), Rational(3)}) jobs.push_back([&in, r] { return verify_eta_scaling(in, r); });
        if (in.circuit.n_inputs <= 3)
            jobs.push_back([&in] { return verify_regularized_signs(in, Rational(4, 5)); });
    }
    auto more = parallel_map<CheckResult>(jobs.size(), [&](std::size_t i) { return jobs[i](); });
    rep.checks.insert(rep.checks.end(), more.begin(), more.end());
    return rep;
}

int cmd_verify(const VerifyArgs& a) {
    const auto& s = a.suite;
    Catalog cat = builtin_catalog();
    if (a.inject >= 0) {
        Fault f = inject_fault(cat, static_cast<std::size_t>(a.inject));
        std::cerr << "injected fault: " << family_name(f.family) << "/" << f.gadget << " " << f.where << ": '" << f.before
                  << "' -> '" << f.after << "'\n";
        cat = std::move(f.catalog);
    }
    VerificationReport rep;
    rep.suite = s;
    rep.seed = a.seed;
    if (s == "gadgets" || s == "all") rep.append(verify_all_gadget_tables(cat));
    if (s == "equivalence" || s == "all") rep.append(equivalence_report(a.seed));
    if (s == "fastforward" || s == "all") rep.append(verify_fastforward_suite(a.seed));
    if (a.format == "json") std::cout << rep.to_json().dump(2) << '\n';
    else std::cout << rep.text();
    return rep.ok() ? kYes : kNo;
}

// ---------------------------------------------------------------- catalog

nlohmann::json gadget_json(const Catalog& cat, const GadgetSpec& g) {
    using nlohmann::json;
    json blocks = json::array();
    for (const auto& b : g.blocks) {
        json rows = json::array();
        for (const auto& r : b.rows) rows.push_back({{"before", r.before}, {"after", r.after}});
        json jb = {{"rows", rows}};
        if (b.kind == Block::Kind::Example) {
            jb["example"] = {{"x", b.x}, {"y", b.y}};
        } else {
            json params = json::object();
            for (const auto& [k, v] : b.call_params) params[k] = v;
            jb["call"] = {{"gadget", b.callee}, {"slots", b.call_slots}, {"params", params}};
        }
        if (!b.note.empty()) jb["note"] = b.note;
        blocks.push_back(std::move(jb));
    }
    json returns = json::object(), constants = json::object(), errata = json::array();
    for (const auto& [k, v] : g.returns) returns[k] = v;
    for (const auto& [k, v] : g.constants) constants[k] = v;
    for (const auto& e : g.errata)
        errata.push_back({{"id", e.id}, {"printed", e.verbatim}, {"used", e.corrected}, {"note", e.note}});
    json contract = json::array();
    for (std::size_t c = 0; c < g.n_cases(); ++c)
        contract.push_back({{"pre", g.blocks.front().rows[c].before}, {"post", g.blocks.back().rows[c].after}});
    return {{"family", family_name(g.family)}, {"name", g.name},      {"table", g.table},
            {"slots", g.slots},                {"params", g.params},  {"tracked", g.tracked},
            {"constants", constants},          {"returns", returns},  {"examples", example_count(cat, g)},
            {"contract", contract},            {"blocks", blocks},    {"discrepancies", errata}};
}

int cmd_catalog(const std::string& family, const std::string& gadget) {
    const Catalog& cat = builtin_catalog();
    std::optional<Family> f;
    if (!family.empty()) f = parse_family(family);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : cat) {
        if (f && g.family != *f) continue;
        if (!gadget.empty() && g.name != gadget && g.table != gadget) continue;
        out.push_back(gadget_json(cat, g));
    }
    if (out.empty()) throw ValidationError("no gadget matches");
    std::cout << out.dump(2) << '\n';
    return kYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compile circuit reachability into OGD training sequences and check them exactly"};
    app.require_subcommand(1, 1);

    CompileArgs ca;
    auto* c = app.add_subcommand("compile", "compile a circuit and target into a training program");
    c->add_option("--circuit", ca.circuit, "circuit JSON")->required();
    c->add_option("--target", ca.target, "target bit string, e.g. 101")->required();
    c->add_option("--model", ca.model, "hinge | hinge-bias | hinge-reg | dense-relu | drd");
    c->add_option("--alpha", ca.alpha, "decay 1-lambda for hinge-reg, p/q");
    c->add_option("--eta-root", ca.eta_root, "r with eta = r^2 (hinge models)");
    c->add_option("-o,--output", ca.out, "program JSONL")->required();

    SimulateArgs sa;
    auto* s = app.add_subcommand("simulate", "run a program (or least-squares points) and print the final state");
    s->add_option("--program", sa.program);
    s->add_option("--passes", sa.passes, "passes over the program");
    s->add_option("--points", sa.points, "least-squares points JSONL");
    s->add_option("--steps", sa.steps, "steps over the points");
    s->add_option("--trace", sa.trace, "write a JSONL trace");

    DecideArgs da;
    auto* d = app.add_subcommand("decide", "loop a program and answer YES/NO");
    d->add_option("--program", da.program)->required();
    d->add_option("--max-passes", da.max_passes, "pass bound (default from the program header)");
    d->add_option("--question", da.question)->check(CLI::IsMember({"first-coord", "fixed-point"}));
    d->add_option("--trace", da.trace, "write a JSONL trace");

    FfArgs fa;
    auto* f = app.add_subcommand("fastforward", "w^tau for least-squares points by repeated squaring");
    f->add_option("--points", fa.points)->required();
    f->add_option("--tau", fa.tau)->required();
    f->add_option("--mod", fa.mod, "prime modulus");
    f->add_option("--eta", fa.eta, "override eta, p/q");
    f->add_flag("--stats", fa.stats, "product counts on stderr");

    VerifyArgs va;
    auto* v = app.add_subcommand("verify", "run verification suites");
    v->add_option("--suite", va.suite)->check(CLI::IsMember({"gadgets", "equivalence", "fastforward", "all"}));
    v->add_option("--seed", va.seed);
    v->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));
    v->add_option("--inject-fault", va.inject, "mutate table cell N before verifying");

    std::string cat_family, cat_gadget;
    auto* k = app.add_subcommand("catalog", "dump gadget tables as JSON");
    k->add_option("--family", cat_family, "hinge | regularized | dense-relu | drd");
    k->add_option("--gadget", cat_gadget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*c) return cmd_compile(ca);
        if (*s) return cmd_simulate(sa);
        if (*d) return cmd_decide(da);
        if (*f) return cmd_fastforward(fa);
        if (*v) return cmd_verify(va);
        if (*k) return cmd_catalog(cat_family, cat_gadget);
    } catch (const BoundaryViolation& e) {
        std::cerr << "ogdforge: boundary violation: " << e.what() << '\n';
        return kBoundary;
    } catch (const UnsupportedCombination& e) {
        std::cerr << "ogdforge: unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const ModulusError& e) {
        std::cerr << "ogdforge: modulus: " << e.what() << '\n';
        return kModulus;
    } catch (const std::exception& e) {
        std::cerr << "ogdforge: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
