#pragma once

// Gadgets as data: per-slot x templates, label, and the per-case
// "before -> after" rows exactly as tabulated. Cells are Expr strings over
// a (decay), e1/e2 (input magnitudes) and named constants.

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "expr.hpp"
#include "ogd.hpp"
#include "rational.hpp"
#include "sparse_vec.hpp"

namespace ogdforge {

enum class Family { Hinge, Regularized, DenseRelu, DenseReluDense };

inline const char* family_name(Family f) {
    switch (f) {
    case Family::Hinge: return "hinge";
    case Family::Regularized: return "regularized";
    case Family::DenseRelu: return "dense-relu";
    case Family::DenseReluDense: return "drd";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    for (Family f : {Family::Hinge, Family::Regularized, Family::DenseRelu, Family::DenseReluDense})
        if (s == family_name(f)) return f;
    throw ValidationError("unknown gadget family '" + std::string(s) + "'");
}

struct Row {
    std::vector<std::string> before, after;
};

struct Block {
    enum class Kind { Example, Call };
    Kind kind = Kind::Example;
    // Example
    std::vector<std::string> x;  // one cell per slot
    std::string y;
    // Call: sub-gadget of the same family, slots named by the caller's slots
    std::string callee;
    std::vector<std::string> call_slots;
    std::vector<std::pair<std::string, std::string>> call_params;
    std::vector<Row> rows;  // one per case
    std::string note;
};

// A cell where the tabulated value is known to be wrong. The catalog holds
// the corrected value; the verifier replays the verbatim one to prove the
// disagreement is real.
struct Erratum {
    enum class Where { X, Y, Before, After, Param, Constant };
    std::string id;
    Where where = Where::X;
    std::size_t block = 0, row = 0, col = 0;
    std::string symbol;  // Param / Constant name
    std::string verbatim, corrected, note;
};

struct GadgetSpec {
    std::string name;   // API name within the family
    std::string table;  // table label
    Family family = Family::Hinge;
    std::vector<std::string> slots;
    std::vector<std::string> params;  // magnitudes supplied by the caller
    std::vector<std::pair<std::string, std::string>> constants;
    std::vector<std::string> tracked;  // slots, plus "v" for drd
    std::vector<Block> blocks;
    std::vector<std::pair<std::string, std::string>> returns;  // slot -> magnitude
    std::vector<Erratum> errata;

    std::size_t n_cases() const { return blocks.empty() ? 0 : blocks.front().rows.size(); }
    bool tracks_v() const { return family == Family::DenseReluDense; }
    std::size_t slot_index(std::string_view s) const {
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (slots[i] == s) return i;
        throw ValidationError(name + ": no slot '" + std::string(s) + "'");
    }
};

using Catalog = std::vector<GadgetSpec>;

const Catalog& builtin_catalog();  // gadget_tables.hpp

inline const GadgetSpec* find_gadget_opt(const Catalog& cat, Family f, std::string_view name) {
    for (const auto& g : cat)
        if (g.family == f && g.name == name) return &g;
    return nullptr;
}

inline const GadgetSpec& find_gadget(const Catalog& cat, Family f, std::string_view name) {
    if (auto* g = find_gadget_opt(cat, f, name)) return *g;
    throw ValidationError(std::string("no gadget '") + std::string(name) + "' in family " + family_name(f));
}

inline std::string& erratum_cell(GadgetSpec& g, const Erratum& e) {
    auto& b = g.blocks.at(e.block);
    switch (e.where) {
    case Erratum::Where::X: return b.x.at(e.col);
    case Erratum::Where::Y: return b.y;
    case Erratum::Where::Before: return b.rows.at(e.row).before.at(e.col);
    case Erratum::Where::After: return b.rows.at(e.row).after.at(e.col);
    case Erratum::Where::Param:
        for (auto& [k, v] : b.call_params)
            if (k == e.symbol) return v;
        break;
    case Erratum::Where::Constant:
        for (auto& [k, v] : g.constants)
            if (k == e.symbol) return v;
        break;
    }
    throw ValidationError(g.name + ": erratum " + e.id + " points nowhere");
}

namespace detail {
// Parsed-expression cache; cells repeat across every instantiation.
inline const Expr& parsed(const std::string& s) {
    static std::mutex mu;
    static std::unordered_map<std::string, Expr> cache;
    std::lock_guard lk(mu);
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, Expr::parse(s)).first;
    return it->second;
}
} // namespace detail

inline Rational eval_cell(const std::string& s, const Env& env) { return detail::parsed(s).eval(env); }

// Environment for one instantiation: caller-supplied params (+ "a" for the
// regularized family) plus the gadget's own constants.
inline Env gadget_env(const GadgetSpec& g, const Env& params) {
    Env env = params;
    for (const auto& p : g.params)
        if (!env.count(p)) throw ParameterError(g.name + ": missing parameter " + p);
    if (g.family == Family::Regularized && !env.count("a")) throw ParameterError(g.name + ": missing alpha");
    for (const auto& [k, v] : g.constants) env[k] = eval_cell(v, env);
    return env;
}

// Appends the gadget's examples with slots bound to `coords`.
inline void expand_gadget(const Catalog& cat, const GadgetSpec& g, const std::vector<std::size_t>& coords,
                          const Env& params, TrainingSequence& out, const std::string& tag, int phase = 0) {
    if (coords.size() != g.slots.size())
        throw ValidationError(g.name + ": expects " + std::to_string(g.slots.size()) + " coordinates");
    Env env = gadget_env(g, params);
    for (const auto& b : g.blocks) {
        if (b.kind == Block::Kind::Example) {
            Example ex;
            for (std::size_t k = 0; k < b.x.size(); ++k) ex.x.set(coords[k], eval_cell(b.x[k], env));
            ex.y = eval_cell(b.y, env);
            ex.gadget = tag;
            ex.phase = phase;
            out.push_back(std::move(ex));
        } else {
            const GadgetSpec& sub = find_gadget(cat, g.family, b.callee);
            std::vector<std::size_t> sc;
            for (const auto& s : b.call_slots) sc.push_back(coords[g.slot_index(s)]);
            Env sp;
            if (auto it = env.find("a"); it != env.end()) sp["a"] = it->second;
            for (const auto& [k, v] : b.call_params) sp[k] = eval_cell(v, env);
            expand_gadget(cat, sub, sc, sp, out, tag + "/" + sub.name, phase);
        }
    }
}

inline TrainingSequence instantiate(const Catalog& cat, const GadgetSpec& g, const std::vector<std::size_t>& coords,
                                    const Env& params = {}, int phase = 0) {
    TrainingSequence out;
    expand_gadget(cat, g, coords, params, out, g.name, phase);
    return out;
}

// Model a gadget family's tables are written against.
inline LossModel family_model(Family f, const Env& env = {}) {
    switch (f) {
    case Family::Hinge: return HingeSvm{};
    case Family::Regularized: {
        auto it = env.find("a");
        if (it == env.end()) throw ParameterError("regularized family needs alpha");
        return HingeSvm{Rational(1), Rational(1) - it->second, std::nullopt};
    }
    case Family::DenseRelu: return DenseRelu{};
    case Family::DenseReluDense: return DenseReluDense{};
    }
    return HingeSvm{};
}

inline std::size_t example_count(const Catalog& cat, const GadgetSpec& g) {
    std::size_t n = 0;
    for (const auto& b : g.blocks)
        n += b.kind == Block::Kind::Example ? 1 : example_count(cat, find_gadget(cat, g.family, b.callee));
    return n;
}

// ---------------------------------------------------------------- verify

struct TableMismatch {
    std::size_t block = 0, case_index = 0, column = 0;
    std::string stage;  // "before", "after", "boundary", "return", ...
    std::string expected, actual;
    std::string describe(const GadgetSpec& g) const {
        std::string col = column < g.tracked.size() ? g.tracked[column] : "-";
        return g.table + " block " + std::to_string(block + 1) + " case " + std::to_string(case_index + 1) + " " +
               stage + " " + col + ": table " + expected + ", simulated " + actual;
    }
};

struct TableCheck {
    bool ok = true;
    std::size_t examples = 0, rows_checked = 0;
    std::optional<TableMismatch> first;
    std::size_t max_nnz = 0;
};

namespace detail {
inline void note_mismatch(TableCheck& r, TableMismatch m) {
    if (r.ok) r.first = std::move(m);
    r.ok = false;
}

inline std::vector<Rational> row_values(const std::vector<std::string>& cells, const Env& env) {
    std::vector<Rational> v;
    v.reserve(cells.size());
    for (const auto& c : cells) v.push_back(eval_cell(c, env));
    return v;
}
} // namespace detail

// Replays every case of the table with exact arithmetic and diffs every
// tabulated column. `params` fixes a (and e1/e2) for the regularized family;
// the slots are laid out at coordinates 0..k-1 with v carried separately.
inline TableCheck check_table(const Catalog& cat, const GadgetSpec& g, const Env& params = {}) {
    TableCheck r;
    Env env;
    try {
        env = gadget_env(g, params);
    } catch (const std::exception& e) {
        detail::note_mismatch(r, {0, 0, 0, "parameters", "", e.what()});
        return r;
    }
    const std::size_t k = g.slots.size();
    const std::size_t cols = g.tracked.size();
    if (g.blocks.empty()) {
        detail::note_mismatch(r, {0, 0, 0, "shape", "blocks", "none"});
        return r;
    }
    for (const auto& b : g.blocks) {
        if (b.rows.size() != g.n_cases()) {
            detail::note_mismatch(r, {0, 0, 0, "shape", std::to_string(g.n_cases()), std::to_string(b.rows.size())});
            return r;
        }
        for (const auto& row : b.rows)
            if (row.before.size() != cols || row.after.size() != cols) {
                detail::note_mismatch(r, {0, 0, 0, "shape", "row width", "mismatch"});
                return r;
            }
    }
    LossModel model = family_model(g.family, env);
    std::vector<std::size_t> coords(k);
    for (std::size_t i = 0; i < k; ++i) coords[i] = i;

    // expand block by block so the per-block comparison points are known
    std::vector<TrainingSequence> per_block;
    for (const auto& b : g.blocks) {
        TrainingSequence seq;
        if (b.kind == Block::Kind::Example) {
            Example ex;
            for (std::size_t i = 0; i < b.x.size(); ++i) ex.x.set(coords[i], eval_cell(b.x[i], env));
            ex.y = eval_cell(b.y, env);
            seq.push_back(std::move(ex));
        } else {
            const GadgetSpec& sub = find_gadget(cat, g.family, b.callee);
            std::vector<std::size_t> sc;
            for (const auto& s : b.call_slots) sc.push_back(coords[g.slot_index(s)]);
            Env sp;
            if (auto it = env.find("a"); it != env.end()) sp["a"] = it->second;
            for (const auto& [name, v] : b.call_params) sp[name] = eval_cell(v, env);
            expand_gadget(cat, sub, sc, sp, seq, sub.name);
        }
        for (const auto& ex : seq) r.max_nnz = std::max(r.max_nnz, ex.x.nnz());
        r.examples += seq.size();
        per_block.push_back(std::move(seq));
    }

    // a duplicated precondition means some admissible state is not covered
    for (std::size_t c = 0; c < g.n_cases(); ++c)
        for (std::size_t c2 = 0; c2 < c; ++c2)
            if (detail::row_values(g.blocks[0].rows[c].before, env) ==
                detail::row_values(g.blocks[0].rows[c2].before, env))
                detail::note_mismatch(r, {0, c, 0, "coverage", "distinct preconditions",
                                          "same as case " + std::to_string(c2 + 1)});

    for (std::size_t c = 0; c < g.n_cases(); ++c) {
        auto start = detail::row_values(g.blocks[0].rows[c].before, env);
        OgdState st;
        st.w.assign(start.begin(), start.begin() + static_cast<std::ptrdiff_t>(k));
        if (g.tracks_v()) st.v = start.back();
        for (std::size_t bi = 0; bi < g.blocks.size(); ++bi) {
            const auto& row = g.blocks[bi].rows[c];
            auto before = detail::row_values(row.before, env);
            auto after = detail::row_values(row.after, env);
            auto cur = [&](std::size_t col) -> const Rational& { return col < k ? st.w[col] : *st.v; };
            for (std::size_t col = 0; col < cols; ++col)
                if (cur(col) != before[col]) {
                    detail::note_mismatch(r, {bi, c, col, "before", before[col].str(), cur(col).str()});
                    break;
                }
            // magnitude arguments e<k> of a call describe the callee's k-th slot
            for (const auto& [name, v] : g.blocks[bi].call_params) {
                if (name.size() < 2 || name[0] != 'e' || name[1] < '1' || name[1] > '9') continue;
                std::size_t slot = static_cast<std::size_t>(name[1] - '1');
                if (slot >= g.blocks[bi].call_slots.size()) continue;
                std::size_t col = g.slot_index(g.blocks[bi].call_slots[slot]);
                Rational want = eval_cell(v, env), got = st.w[col].abs();
                if (want.sign() <= 0 || (!got.is_zero() && got != want))
                    detail::note_mismatch(r, {bi, c, col, "call-param " + name, want.str(), got.str()});
            }
            try {
                for (const auto& ex : per_block[bi]) step_inplace(st, ex, model);
            } catch (const BoundaryViolation& e) {
                detail::note_mismatch(r, {bi, c, 0, "boundary", "strict branch", e.what()});
                break;
            }
            for (std::size_t col = 0; col < cols; ++col)
                if (cur(col) != after[col]) {
                    detail::note_mismatch(r, {bi, c, col, "after", after[col].str(), cur(col).str()});
                    break;
                }
            ++r.rows_checked;
        }
        // declared return magnitudes must match every non-zero final value
        for (const auto& [slot, expr] : g.returns) {
            std::size_t col = g.slot_index(slot);
            Rational want = eval_cell(expr, env);
            Rational got = st.w[col].abs();
            if (!got.is_zero() && got != want)
                detail::note_mismatch(r, {g.blocks.size() - 1, c, col, "return", want.str(), got.str()});
        }
    }
    return r;
}

// Precondition states (first block's "before") and postconditions (last
// block's "after"), instantiated.
inline std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> contract(const GadgetSpec& g,
                                                                                     const Env& params = {}) {
    Env env = gadget_env(g, params);
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> out;
    for (std::size_t c = 0; c < g.n_cases(); ++c)
        out.emplace_back(detail::row_values(g.blocks.front().rows[c].before, env),
                         detail::row_values(g.blocks.back().rows[c].after, env));
    return out;
}

inline std::set<std::string> gadget_symbols(const GadgetSpec& g) {
    std::set<std::string> s;
    auto add = [&](const std::string& c) { detail::parsed(c).collect_symbols(s); };
    for (const auto& b : g.blocks) {
        for (const auto& c : b.x) add(c);
        if (!b.y.empty()) add(b.y);
        for (const auto& [k, v] : b.call_params) add(v);
        for (const auto& row : b.rows) {
            for (const auto& c : row.before) add(c);
            for (const auto& c : row.after) add(c);
        }
    }
    return s;
}

} // namespace ogdforge
