#pragma once

// Integer intervals [lo, hi] with an unbounded upper end, used to hold
// partial knowledge of cohomology dimensions. lo is always >= 0.

#include <algorithm>
#include <limits>
#include <string>

namespace fpp {

struct DimInterval {
    static constexpr int unbounded = std::numeric_limits<int>::max();

    int lo = 0;
    int hi = unbounded;

    static DimInterval exactly(int v) { return {v, v}; }
    static DimInterval at_least(int v) { return {v, unbounded}; }
    static DimInterval at_most(int v) { return {0, v}; }
    static DimInterval any() { return {0, unbounded}; }

    bool is_exact() const { return lo == hi; }
    bool has_upper() const { return hi != unbounded; }
    bool is_empty() const { return lo > hi; }
    bool contains(int v) const { return v >= lo && v <= hi; }

    bool operator==(const DimInterval&) const = default;

    std::string to_string() const {
        if (is_exact()) return std::to_string(lo);
        std::string s = "[" + std::to_string(lo) + ",";
        s += has_upper() ? std::to_string(hi) + "]" : "inf)";
        return s;
    }
};

// Intersection; may produce an empty interval (lo > hi), which callers treat
// as a contradiction.
inline DimInterval meet(const DimInterval& a, const DimInterval& b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Saturating arithmetic on upper bounds (unbounded absorbs).
inline int hi_add(int a, int b) {
    if (a == DimInterval::unbounded || b == DimInterval::unbounded)
        return DimInterval::unbounded;
    return a + b;
}

inline int hi_add_const(int a, int c) {
    if (a == DimInterval::unbounded) return DimInterval::unbounded;
    return a + c;
}

}  // namespace fpp
