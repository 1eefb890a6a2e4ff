#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "sparse_vec.hpp"

namespace ogdforge {

struct Example {
    SparseVec x;
    Rational y;
    std::string gadget;  // provenance tag
    int phase = 0;       // 1..5 for compiled programs, 0 otherwise
};

using TrainingSequence = std::vector<Example>;

struct HingeSvm {
    Rational eta{1};
    Rational lambda{0};
    std::optional<std::pair<std::size_t, std::size_t>> bias_dims;
};
struct DenseRelu {};
struct DenseReluDense {};

using LossModel = std::variant<HingeSvm, DenseRelu, DenseReluDense>;

inline bool is_drd(const LossModel& m) { return std::holds_alternative<DenseReluDense>(m); }

inline std::string model_name(const LossModel& m) {
    if (const auto* h = std::get_if<HingeSvm>(&m)) {
        if (h->lambda.sign() > 0) return "hinge-reg";
        return h->bias_dims ? "hinge-bias" : "hinge";
    }
    return std::holds_alternative<DenseRelu>(m) ? "dense-relu" : "drd";
}

// (1 - lambda*eta); 1 without regularization
inline Rational decay_factor(const HingeSvm& h) { return Rational(1) - h.lambda * h.eta; }

inline void validate_model(const LossModel& m) {
    const auto* h = std::get_if<HingeSvm>(&m);
    if (!h) return;
    if (h->eta.sign() <= 0) throw ParameterError("eta must be positive, got " + h->eta.str());
    if (h->lambda.sign() < 0) throw ParameterError("lambda must be non-negative, got " + h->lambda.str());
    if (h->lambda.sign() > 0) {
        Rational a = decay_factor(*h);
        if (!(Rational(2) * a * a > Rational(1)) || !(a < Rational(1)))
            throw ParameterError("decay alpha = " + a.str() + " outside (1/sqrt 2, 1)");
    }
    if (h->bias_dims && h->bias_dims->first == h->bias_dims->second)
        throw ParameterError("bias dims must be distinct");
}

struct OgdState {
    std::vector<Rational> w;
    std::optional<Rational> v;  // DRD only
    std::size_t step = 0;

    friend bool operator==(const OgdState& a, const OgdState& b) { return a.w == b.w && a.v == b.v; }
};

inline OgdState zero_state(const LossModel& m, std::size_t d) {
    OgdState s;
    s.w.assign(d, Rational(0));
    if (is_drd(m)) s.v = Rational(0);
    return s;
}

// Update = hinge margin < 1 / ReLU active; Hold otherwise.
enum class Branch : std::uint8_t { Update, Hold };

namespace detail {
inline void check_dims(const Example& ex, std::size_t d) {
    if (ex.x.extent() > d)
        throw DimensionError("example touches coordinate " + std::to_string(ex.x.extent() - 1) +
                             " but dimension is " + std::to_string(d));
}
} // namespace detail

// Plain dense update; the reference the lazy Simulator is tested against.
inline Branch step_inplace(OgdState& s, const Example& ex, const LossModel& model) {
    detail::check_dims(ex, s.w.size());
    Rational z = dot(ex.x, s.w);
    Branch br = Branch::Hold;
    if (const auto* h = std::get_if<HingeSvm>(&model)) {
        Rational margin = ex.y * z;
        if (margin == Rational(1)) throw BoundaryViolation(BoundaryViolation::Kind::Hinge, s.step + 1);
        Rational a = decay_factor(*h);
        if (a != Rational(1))
            for (auto& wi : s.w) wi *= a;
        if (margin < Rational(1)) {
            br = Branch::Update;
            Rational c = h->eta * ex.y;
            for (const auto& [i, xi] : ex.x) s.w[i] += c * xi;
        }
    } else if (std::holds_alternative<DenseRelu>(model)) {
        if (z.is_zero()) throw BoundaryViolation(BoundaryViolation::Kind::Relu, s.step + 1);
        if (z.sign() > 0) {
            br = Branch::Update;
            Rational g = Rational(2) * (z - ex.y);
            for (const auto& [i, xi] : ex.x) s.w[i] -= g * xi;
        }
    } else {
        if (!s.v) throw ValidationError("DRD state needs v");
        if (z.is_zero()) throw BoundaryViolation(BoundaryViolation::Kind::Relu, s.step + 1);
        if (z.sign() > 0) {
            br = Branch::Update;
            Rational v = *s.v;
            Rational g = Rational(2) * (v * z - ex.y);
            Rational gw = g * v;
            for (const auto& [i, xi] : ex.x) s.w[i] -= gw * xi;
            *s.v = v - g * z;
        }
    }
    ++s.step;
    return br;
}

inline OgdState step(OgdState s, const Example& ex, const LossModel& model) {
    step_inplace(s, ex, model);
    return s;
}

// Same semantics as step_inplace, but O(nnz(x)) per step under decay:
// each coordinate stores (value, time of last materialization) and the
// pending alpha^gap factor is applied only when the coordinate is read.
class Simulator {
public:
    Simulator(LossModel model, const OgdState& init) : model_(std::move(model)), v_(init.v), t_(init.step) {
        validate_model(model_);
        if (is_drd(model_) && !v_) throw ValidationError("DRD state needs v");
        if (const auto* h = std::get_if<HingeSvm>(&model_)) {
            alpha_ = decay_factor(*h);
            decays_ = alpha_ != Rational(1);
            eta_ = h->eta;
        }
        val_ = init.w;
        stamp_.assign(val_.size(), t_);
        pow_.push_back(Rational(1));
    }

    std::size_t dim() const { return val_.size(); }
    std::size_t steps() const { return t_; }
    const LossModel& model() const { return model_; }
    const std::optional<Rational>& v() const { return v_; }

    Rational weight(std::size_t i) const {
        if (!decays_ || val_[i].is_zero() || stamp_[i] == t_) return val_[i];
        return val_[i] * power(t_ - stamp_[i]);
    }
    int sign(std::size_t i) const { return val_[i].sign(); }

    OgdState state() const {
        OgdState s;
        s.w.reserve(val_.size());
        for (std::size_t i = 0; i < val_.size(); ++i) s.w.push_back(weight(i));
        s.v = v_;
        s.step = t_;
        return s;
    }

    // largest numerator+denominator bit count currently stored
    std::size_t max_bits() const {
        std::size_t b = 0;
        for (std::size_t i = 0; i < val_.size(); ++i) b = std::max(b, weight(i).bit_length());
        if (v_) b = std::max(b, v_->bit_length());
        return b;
    }

    Branch apply(const Example& ex) {
        detail::check_dims(ex, val_.size());
        Rational z;
        for (const auto& [i, xi] : ex.x) {
            materialize(i);
            if (!val_[i].is_zero()) z += xi * val_[i];
        }
        Branch br = Branch::Hold;
        if (std::holds_alternative<HingeSvm>(model_)) {
            Rational margin = ex.y * z;
            int c = cmp(margin.raw(), 1);
            if (c == 0) throw BoundaryViolation(BoundaryViolation::Kind::Hinge, t_ + 1);
            if (c < 0) {
                br = Branch::Update;
                Rational ey = eta_ * ex.y;
                for (const auto& [i, xi] : ex.x) {
                    if (decays_) {
                        val_[i] *= alpha_;
                        stamp_[i] = t_ + 1;
                    }
                    val_[i] += ey * xi;
                }
            }
        } else if (std::holds_alternative<DenseRelu>(model_)) {
            if (z.is_zero()) throw BoundaryViolation(BoundaryViolation::Kind::Relu, t_ + 1);
            if (z.sign() > 0) {
                br = Branch::Update;
                Rational g = Rational(2) * (z - ex.y);
                for (const auto& [i, xi] : ex.x) val_[i] -= g * xi;
            }
        } else {
            if (z.is_zero()) throw BoundaryViolation(BoundaryViolation::Kind::Relu, t_ + 1);
            if (z.sign() > 0) {
                br = Branch::Update;
                Rational v = *v_;
                Rational g = Rational(2) * (v * z - ex.y);
                Rational gw = g * v;
                for (const auto& [i, xi] : ex.x) val_[i] -= gw * xi;
                *v_ = v - g * z;
            }
        }
        ++t_;
        return br;
    }

private:
    void materialize(std::size_t i) {
        if (!decays_ || stamp_[i] == t_) return;
        if (!val_[i].is_zero()) val_[i] *= power(t_ - stamp_[i]);
        stamp_[i] = t_;
    }
    const Rational& power(std::size_t k) const {
        if (k >= pow_.size()) {
            if (k > 65536) {
                scratch_ = alpha_.pow(static_cast<long>(k));
                return scratch_;
            }
            while (pow_.size() <= k) pow_.push_back(pow_.back() * alpha_);
        }
        return pow_[k];
    }

    LossModel model_;
    Rational alpha_{1}, eta_{1};
    bool decays_ = false;
    std::vector<Rational> val_;
    std::vector<std::size_t> stamp_;
    std::optional<Rational> v_;
    std::size_t t_ = 0;
    mutable std::vector<Rational> pow_;
    mutable Rational scratch_;
};

struct TrajectoryEntry {
    std::size_t step;
    OgdState state;
    std::string gadget;
    int phase;
    Branch branch;
};
using Trajectory = std::vector<TrajectoryEntry>;

// Records the state after every step.
inline std::pair<OgdState, Trajectory> run_sequence(const OgdState& init, const TrainingSequence& seq,
                                                    const LossModel& model) {
    Simulator sim(model, init);
    Trajectory tr;
    tr.reserve(seq.size());
    for (const auto& ex : seq) {
        Branch b = sim.apply(ex);
        tr.push_back({sim.steps(), sim.state(), ex.gadget, ex.phase, b});
    }
    return {sim.state(), std::move(tr)};
}

struct StepInfo {
    std::size_t pass;   // 1-based
    std::size_t index;  // position within the pass
    std::size_t step;   // global, 1-based
    const Example& ex;
    Branch branch;
    const Simulator& sim;
};
using StepObserver = std::function<void(const StepInfo&)>;

struct Decision {
    bool answer = false;
    std::optional<std::size_t> pass;
    std::optional<std::size_t> step;  // global 1-based step (first-coordinate question)
    std::size_t passes_run = 0;
};

inline std::size_t sequence_dim(const TrainingSequence& seq) {
    std::size_t d = 1;
    for (const auto& ex : seq) d = std::max(d, ex.x.extent());
    return d;
}

// Loops the sequence; YES at the first step with w[0] > 0.
inline Decision decide_first_coordinate_positive(const TrainingSequence& seq, const LossModel& model,
                                                 std::size_t max_passes, const OgdState& init,
                                                 const StepObserver& obs = {}) {
    if (max_passes < 1) throw ValidationError("max_passes must be >= 1");
    Simulator sim(model, init);
    Decision d;
    for (std::size_t p = 1; p <= max_passes; ++p) {
        d.passes_run = p;
        for (std::size_t k = 0; k < seq.size(); ++k) {
            const Example& ex = seq[k];
            Branch b = sim.apply(ex);
            if (obs) obs({p, k, sim.steps(), ex, b, sim});
            // only x-touched coordinates move, and decay never flips a sign
            if (!ex.x.get(0).is_zero() && sim.sign(0) > 0) {
                d.answer = true;
                d.pass = p;
                d.step = sim.steps();
                return d;
            }
        }
    }
    return d;
}

inline Decision decide_first_coordinate_positive(const TrainingSequence& seq, const LossModel& model,
                                                 std::size_t max_passes) {
    return decide_first_coordinate_positive(seq, model, max_passes, zero_state(model, sequence_dim(seq)));
}

// YES at the first pass whose end state equals its start state.
inline Decision decide_fixed_point(const TrainingSequence& seq, const LossModel& model, std::size_t max_passes,
                                   const OgdState& init, const StepObserver& obs = {}) {
    if (max_passes < 1) throw ValidationError("max_passes must be >= 1");
    Simulator sim(model, init);
    Decision d;
    OgdState start = sim.state();
    for (std::size_t p = 1; p <= max_passes; ++p) {
        d.passes_run = p;
        for (std::size_t k = 0; k < seq.size(); ++k) {
            Branch b = sim.apply(seq[k]);
            if (obs) obs({p, k, sim.steps(), seq[k], b, sim});
        }
        OgdState end = sim.state();
        if (end == start) {
            d.answer = true;
            d.pass = p;
            return d;
        }
        start = std::move(end);
    }
    return d;
}

inline Decision decide_fixed_point(const TrainingSequence& seq, const LossModel& model, std::size_t max_passes) {
    return decide_fixed_point(seq, model, max_passes, zero_state(model, sequence_dim(seq)));
}

} // namespace ogdforge
