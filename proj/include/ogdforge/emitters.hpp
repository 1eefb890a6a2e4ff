#pragma once

// Typed front doors over the gadget catalog.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "gadget.hpp"
#include "gadget_tables.hpp"

namespace ogdforge {

struct Emitted {
    TrainingSequence seq;
    std::map<std::string, Rational> returns;  // slot -> magnitude at the end of the gadget

    const Rational& ret(const std::string& slot) const {
        auto it = returns.find(slot);
        if (it == returns.end()) throw ValidationError("gadget returns nothing for " + slot);
        return it->second;
    }
};

inline Emitted emit_gadget(Family f, std::string_view name, const std::vector<std::size_t>& coords,
                           const Env& params = {}, const Catalog& cat = builtin_catalog()) {
    const GadgetSpec& g = find_gadget(cat, f, name);
    Emitted e;
    e.seq = instantiate(cat, g, coords, params);
    if (!g.returns.empty()) {
        Env env = gadget_env(g, params);
        for (const auto& [slot, expr] : g.returns) e.returns[slot] = eval_cell(expr, env);
    }
    return e;
}

// ---- plain hinge
inline TrainingSequence emit_reset(std::size_t i1) { return emit_gadget(Family::Hinge, "reset", {i1}).seq; }
inline TrainingSequence emit_not(std::size_t i1) { return emit_gadget(Family::Hinge, "not", {i1}).seq; }
inline TrainingSequence emit_copy(std::size_t i1, std::size_t i2) {
    return emit_gadget(Family::Hinge, "copy", {i1, i2}).seq;
}
inline TrainingSequence emit_destructive_nand(std::size_t i1, std::size_t i2, std::size_t i3) {
    return emit_gadget(Family::Hinge, "destructive_nand", {i1, i2, i3}).seq;
}
inline TrainingSequence emit_input_false(std::size_t i1) {
    return emit_gadget(Family::Hinge, "input_false", {i1}).seq;
}
inline TrainingSequence emit_set_if_true(std::size_t i1, std::size_t target) {
    return emit_gadget(Family::Hinge, "set_if_true", {i1, target}).seq;
}
inline TrainingSequence emit_bias_correction(std::size_t b1, std::size_t b2) {
    return emit_gadget(Family::Hinge, "bias_correction", {b1, b2}).seq;
}

// ---- regularized hinge; alpha range is the model's, not the table's
namespace detail {
inline Env reg_env(const Rational& a, std::initializer_list<std::pair<const char*, Rational>> eps) {
    if (!(Rational(2) * a * a > Rational(1)) || !(a < Rational(1)))
        throw ParameterError("alpha = " + a.str() + " outside (1/sqrt 2, 1)");
    Env env{{"a", a}};
    for (const auto& [k, v] : eps) {
        if (v.sign() <= 0) throw ParameterError(std::string("magnitude ") + k + " must be positive");
        env[k] = v;
    }
    return env;
}
} // namespace detail

inline TrainingSequence emit_rreset(std::size_t i1, const Rational& e1, const Rational& a) {
    return emit_gadget(Family::Regularized, "rreset", {i1}, detail::reg_env(a, {{"e1", e1}})).seq;
}
// returns i2, i3 magnitudes (a^4 each)
inline Emitted emit_rcopy(std::size_t i1, std::size_t i2, std::size_t i3, const Rational& e1, const Rational& a) {
    return emit_gadget(Family::Regularized, "rcopy", {i1, i2, i3}, detail::reg_env(a, {{"e1", e1}}));
}
inline Emitted emit_rdnand(std::size_t i1, std::size_t i2, std::size_t i3, const Rational& e1, const Rational& e2,
                           const Rational& a) {
    return emit_gadget(Family::Regularized, "rdnand", {i1, i2, i3}, detail::reg_env(a, {{"e1", e1}, {"e2", e2}}));
}
inline Emitted emit_rinput_false(std::size_t i1, const Rational& e1, const Rational& a) {
    return emit_gadget(Family::Regularized, "rinput_false", {i1}, detail::reg_env(a, {{"e1", e1}}));
}
inline Emitted emit_rset_if_true(std::size_t i1, std::size_t i2, const Rational& e1, const Rational& a) {
    return emit_gadget(Family::Regularized, "rset_if_true", {i1, i2}, detail::reg_env(a, {{"e1", e1}}));
}

// rinput_false followed by a copy round-trip through two scratch
// coordinates, so the final magnitude of i1 is a power of alpha (a^7)
// instead of e1 a^3 / 2. i2, i3 must be unset and end unset.
inline Emitted emit_rinput_false_normalized(std::size_t i1, std::size_t i2, std::size_t i3, const Rational& e1,
                                            const Rational& a) {
    Emitted out;
    auto append = [&](const TrainingSequence& s) { out.seq.insert(out.seq.end(), s.begin(), s.end()); };
    auto decay = [&](const Rational& e, std::size_t steps) { return e * a.pow(static_cast<long>(steps)); };

    Emitted f = emit_rinput_false(i1, e1, a);
    append(f.seq);
    Emitted c1 = emit_rcopy(i1, i2, i3, f.ret("i1"), a);
    append(c1.seq);
    TrainingSequence r1 = emit_rreset(i3, c1.ret("i3"), a);
    append(r1);
    Emitted c2 = emit_rcopy(i2, i1, i3, decay(c1.ret("i2"), r1.size()), a);
    append(c2.seq);
    TrainingSequence r2 = emit_rreset(i3, c2.ret("i3"), a);
    append(r2);
    out.returns["i1"] = decay(c2.ret("i2"), r2.size());
    for (auto& ex : out.seq) ex.gadget = "rinput_false_normalized/" + ex.gadget;
    return out;
}

// ---- dense-relu (helper coordinate passed explicitly)
inline TrainingSequence emit_dr_reset(std::size_t i1) { return emit_gadget(Family::DenseRelu, "reset", {i1}).seq; }
inline TrainingSequence emit_dr_not(std::size_t i1) { return emit_gadget(Family::DenseRelu, "not", {i1}).seq; }
inline TrainingSequence emit_dr_copy(std::size_t i1, std::size_t i2) {
    return emit_gadget(Family::DenseRelu, "copy", {i1, i2}).seq;
}
inline TrainingSequence emit_dr_destructive_nand(std::size_t i1, std::size_t i2, std::size_t i3, std::size_t i4) {
    return emit_gadget(Family::DenseRelu, "destructive_nand", {i1, i2, i3, i4}).seq;
}
inline TrainingSequence emit_dr_set_false_if_unset(std::size_t i1, std::size_t i2) {
    return emit_gadget(Family::DenseRelu, "set_false_if_unset", {i1, i2}).seq;
}
inline TrainingSequence emit_dr_set_if_true(std::size_t i1, std::size_t i2) {
    return emit_gadget(Family::DenseRelu, "set_if_true", {i1, i2}).seq;
}

// ---- dense-relu-dense (last argument is always the +1 helper)
inline TrainingSequence emit_drd_reset(std::size_t i1, std::size_t h) {
    return emit_gadget(Family::DenseReluDense, "reset", {i1, h}).seq;
}
inline TrainingSequence emit_drd_not(std::size_t i1, std::size_t h) {
    return emit_gadget(Family::DenseReluDense, "not", {i1, h}).seq;
}
inline TrainingSequence emit_drd_copy(std::size_t i1, std::size_t i2, std::size_t h) {
    return emit_gadget(Family::DenseReluDense, "copy", {i1, i2, h}).seq;
}
inline TrainingSequence emit_drd_destructive_nand(std::size_t i1, std::size_t i2, std::size_t i3, std::size_t h) {
    return emit_gadget(Family::DenseReluDense, "destructive_nand", {i1, i2, i3, h}).seq;
}
inline TrainingSequence emit_drd_set_false_if_unset(std::size_t i1, std::size_t h) {
    return emit_gadget(Family::DenseReluDense, "set_false_if_unset", {i1, h}).seq;
}
inline TrainingSequence emit_drd_copy_if_true(std::size_t i1, std::size_t i2, std::size_t h) {
    return emit_gadget(Family::DenseReluDense, "copy_if_true", {i1, i2, h}).seq;
}

} // namespace ogdforge
