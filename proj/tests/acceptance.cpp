// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "ogdforge/ogdforge.hpp"

using namespace ogdforge;

namespace {

constexpr std::uint64_t kSeed = 2024;

struct Line {
    bool pass = true;
    std::string detail;
    double seconds = 0;
};

int failures = 0;
std::size_t boundary_total = 0;

template <class F>
Line measure(F&& body) {
    Line l;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(l);
    } catch (const std::exception& e) {
        l.pass = false;
        l.detail += std::string(" exception: ") + e.what();
    }
    l.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return l;
}

void report(int n, const std::string& name, const Line& l) {
    if (!l.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", l.pass ? "PASS" : "FAIL", n, name.c_str(), l.detail.c_str(),
                l.seconds);
    std::fflush(stdout);
}

// first failing check, for the detail string
std::string first_failure(const VerificationReport& r) {
    for (const auto& c : r.checks)
        if (!c.pass) {
            std::string s = c.name;
            if (c.cex) s += " @ " + c.cex->where + ": expected " + c.cex->expected + ", got " + c.cex->actual;
            return s;
        }
    return "";
}

void absorb(Line& l, const VerificationReport& r, const std::string& what) {
    boundary_total += r.boundary_violations();
    if (!r.ok()) {
        l.pass = false;
        l.detail += " " + what + " failed " + std::to_string(r.failures()) + " (" + first_failure(r) + ")";
    }
}

VerificationReport collect(const std::string& suite, std::vector<CheckResult> checks) {
    VerificationReport r;
    r.suite = suite;
    r.checks = std::move(checks);
    return r;
}

void time_limit(Line& l, double limit) {
    if (l.seconds >= limit) {
        l.pass = false;
        l.detail += " over the " + std::to_string(static_cast<int>(limit)) + " s limit";
    }
}

} // namespace

int main() {
    std::printf("ogdforge acceptance, seed %llu, %zu worker(s)\n", static_cast<unsigned long long>(kSeed), worker_count());

    // 1
    Line l1 = measure([](Line& l) {
        auto r = verify_gadget_tables(Family::Hinge);
        absorb(l, r, "hinge tables");
        l.detail = std::to_string(r.checks.size()) + " checks" + l.detail;
    });
    time_limit(l1, 1);
    report(1, "hinge gadget tables", l1);

    // 2
    Line l2 = measure([](Line& l) {
        auto r = verify_gadget_tables(Family::Regularized, builtin_catalog(), standard_alphas());
        absorb(l, r, "regularized tables");
        // the API magnitudes, evaluated independently of the catalog
        for (const Rational& a : standard_alphas()) {
            Rational e1 = a.pow(4);
            auto c = emit_rcopy(0, 1, 2, e1, a);
            auto d = emit_rdnand(0, 1, 2, e1, e1, a);
            auto f = emit_rinput_false(0, e1, a);
            auto s = emit_rset_if_true(0, 1, e1, a);
            bool ok = c.ret("i2") == a.pow(4) && c.ret("i3") == a.pow(4) && d.ret("i3") == a.pow(12) &&
                      f.ret("i1") == e1 * a.pow(3) / Rational(2) && s.ret("i1") == e1 * a.pow(3) / Rational(2) &&
                      s.ret("i2") == a.pow(2);
            if (!ok) {
                l.pass = false;
                l.detail += " returns wrong at alpha " + a.str();
            }
        }
        l.detail = std::to_string(r.checks.size()) + " checks at alpha 4/5, 5/6, 9/10; returns a^4 / a^12 / e1 a^3/2 / a^2" +
                   l.detail;
    });
    time_limit(l2, 5);
    report(2, "regularized gadget tables", l2);

    // 3
    Line l3 = measure([](Line& l) {
        auto r = verify_gadget_tables(Family::DenseRelu);
        r.append(verify_gadget_tables(Family::DenseReluDense));
        absorb(l, r, "relu tables");
        std::string named;
        for (const auto& c : r.checks)
            if (c.name.rfind("discrepancy/", 0) == 0) named += (named.empty() ? "" : ", ") + c.name.substr(12);
        l.detail = std::to_string(r.checks.size()) + " checks; discrepancies: " + named + l.detail;
    });
    time_limit(l3, 10);
    report(3, "relu / drd gadget tables", l3);

    // 4
    auto suite = equivalence_suite(kSeed, 200);
    Line l4 = measure([&](Line& l) {
        std::size_t yes = 0;
        for (const char* v : {"hinge", "dense-relu", "drd"}) {
            auto r = verify_equivalence_suite(suite, v, kSeed);
            absorb(l, r, v);
            if (std::string(v) == "hinge")
                for (const auto& c : r.checks) yes += c.detail.rfind("YES", 0) == 0;
        }
        l.detail = std::to_string(suite.size()) + " instances (200 random + 20 handcrafted) x {hinge, dense-relu, drd}, " +
                   std::to_string(yes) + " reachable" + l.detail;
    });
    time_limit(l4, 300);
    report(4, "equivalence with the oracle", l4);

    // 5
    std::vector<RunObservation> reg_runs;
    std::vector<std::size_t> lengths;  // pass length of each regularized run
    Line l5 = measure([&](Line& l) {
        std::vector<CheckResult> bias, eta, reg;
        for (const auto& in : suite) bias.push_back(verify_bias_invariance(in));
        for (const Rational& r : {Rational(1, 2), Rational(2), Rational(3)})
            for (const auto& in : suite) eta.push_back(verify_eta_scaling(in, r));
        for (const auto& in : suite) {
            if (in.circuit.n_inputs > 3) continue;
            RunObservation o;
            reg.push_back(verify_regularized_signs(in, Rational(4, 5), &o));
            reg_runs.push_back(std::move(o));
            lengths.push_back(compile_cpath_regularized(in.circuit, in.target, Rational(4, 5)).sequence.size());
        }
        absorb(l, collect("bias", bias), "(a) bias");
        absorb(l, collect("eta", eta), "(b) eta");
        absorb(l, collect("regularized", reg), "(c) regularized");
        l.detail = "(a) " + std::to_string(bias.size()) + " bias, (b) " + std::to_string(eta.size()) +
                   " eta r in {1/2,2,3}, (c) " + std::to_string(reg.size()) + " regularized n<=3" + l.detail;
    });
    report(5, "invariances", l5);

    // 6
    Line l6;
    l6.pass = boundary_total == 0;
    l6.detail = std::to_string(boundary_total) + " boundary violations across criteria 1-5";
    report(6, "boundary safety", l6);

    // 7
    Line l7 = measure([](Line& l) {
        auto r = verify_fastforward_suite(kSeed, 100);
        absorb(l, r, "fast-forward");
        std::string mod;
        for (const auto& c : r.checks)
            if (c.name == "fastforward/mod-p/tau=1e9") mod = c.detail;
        l.detail = std::to_string(r.checks.size() - 2) + " exact instances vs naive, matmuls <= 2T + 2ceil(log2 tau); mod p tau=1e9: " +
                   mod + "; nand witness checked" + l.detail;
    });
    report(7, "fast-forward", l7);

    // 8
    Line l8 = measure([&](Line& l) {
        std::size_t nnz = 0;
        for (const auto& in : suite) {
            CompiledProgram p = compile_cpath(in.circuit, in.target);
            for (const auto& e : p.sequence) nnz = std::max(nnz, e.x.nnz());
        }
        for (const auto& g : builtin_catalog())
            if (g.family == Family::Hinge)
                for (const auto& e : instantiate(builtin_catalog(), g, [&] {
                         std::vector<std::size_t> c(g.slots.size());
                         for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
                         return c;
                     }()))
                    nnz = std::max(nnz, e.x.nnz());
        if (nnz > 3) {
            l.pass = false;
            l.detail += " plain hinge nnz " + std::to_string(nnz);
        }

        // least-squares fit of max bits against step over every regularized run
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::size_t n = 0, worst_run = 0;
        double worst_ratio = 0;
        for (const auto& o : reg_runs) {
            for (const auto& [t, b] : o.bits_trace) {
                double x = static_cast<double>(t), y = static_cast<double>(b);
                sx += x, sy += y, sxx += x * x, sxy += x * y;
                ++n;
            }
            // doubling on the running maximum, from one pass on: linear growth
            // gives M(2t) <= 2 M(t); quadratic would give ~4x
            const auto& tr = o.bits_trace;
            std::size_t pass_len = lengths[&o - reg_runs.data()];
            std::vector<std::size_t> runmax;
            for (const auto& e : tr) runmax.push_back(std::max(runmax.empty() ? 0 : runmax.back(), e.second));
            for (std::size_t i = 0, j = 0; i < tr.size(); ++i) {
                if (tr[i].first < pass_len) continue;
                while (j < tr.size() && tr[j].first < 2 * tr[i].first) ++j;
                if (j == tr.size()) break;
                double ratio = static_cast<double>(runmax[j]) / static_cast<double>(2 * runmax[i] + 64);
                if (ratio > worst_ratio) worst_ratio = ratio, worst_run = o.steps;
            }
        }
        double slope = n > 1 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0;
        double icpt = n ? (sy - slope * sx) / static_cast<double>(n) : 0;
        if (worst_ratio > 1.0) {
            l.pass = false;
            l.detail += " superlinear bit growth (run of " + std::to_string(worst_run) + " steps)";
        }
        if (reg_runs.empty() || n == 0) {
            l.pass = false;
            l.detail += " no regularized runs recorded";
        }
        std::ostringstream os;
        os.precision(4);
        os << "plain hinge max nnz " << nnz << "; regularized max bits ~ " << slope << " * step + " << icpt << " (LS over "
           << n << " points, " << reg_runs.size() << " runs), worst doubling ratio " << worst_ratio;
        l.detail = os.str() + l.detail;
    });
    report(8, "sparsity and bit growth", l8);

    std::printf("%s: %d criterion failure(s)\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
