#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace ogdforge {

// Ordered map of non-zero entries. Setting a zero erases.
class SparseVec {
public:
    using Map = std::map<std::size_t, Rational>;

    SparseVec() = default;
    SparseVec(std::initializer_list<std::pair<const std::size_t, Rational>> init) {
        for (const auto& [i, v] : init) set(i, v);
    }

    void set(std::size_t i, const Rational& v) {
        if (v.is_zero())
            e_.erase(i);
        else
            e_[i] = v;
    }
    Rational get(std::size_t i) const {
        auto it = e_.find(i);
        return it == e_.end() ? Rational(0) : it->second;
    }

    std::size_t nnz() const { return e_.size(); }
    bool empty() const { return e_.empty(); }
    // one past the largest index; 0 when empty
    std::size_t extent() const { return e_.empty() ? 0 : e_.rbegin()->first + 1; }

    Map::const_iterator begin() const { return e_.begin(); }
    Map::const_iterator end() const { return e_.end(); }

    SparseVec scaled(const Rational& c) const {
        SparseVec r;
        if (c.is_zero()) return r;
        for (const auto& [i, v] : e_) r.e_.emplace(i, v * c);
        return r;
    }

    friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }

private:
    Map e_;
};

inline Rational dot(const SparseVec& x, const std::vector<Rational>& w) {
    Rational s;
    for (const auto& [i, v] : x) {
        if (i >= w.size())
            throw DimensionError("index " + std::to_string(i) + " out of range for dimension " +
                                 std::to_string(w.size()));
        if (!w[i].is_zero()) s += v * w[i];
    }
    return s;
}

} // namespace ogdforge
