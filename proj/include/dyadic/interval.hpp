#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dyadic/errors.hpp"

namespace dyadic {

inline double pow2d(int k) { return std::ldexp(1.0, k); }

// 2^{k/2}; exact for even k.
inline double sqrt_pow2d(int k) {
    if (k % 2 == 0) return std::ldexp(1.0, k / 2);
    return std::sqrt(std::ldexp(1.0, k));
}

/// A node of the dyadic tree on [0,1): I = [index*2^-level, (index+1)*2^-level).
struct DyadicInterval {
    int level = 0;
    std::uint64_t index = 0;

    DyadicInterval() = default;
    DyadicInterval(int level_, std::uint64_t index_) : level(level_), index(index_) {
        if (level < 0 || level > 62)
            throw InvalidIntervalError("dyadic level out of range: " + std::to_string(level));
        if (index >= (std::uint64_t{1} << level))
            throw InvalidIntervalError("dyadic index " + std::to_string(index) +
                                       " exceeds 2^level at level " + std::to_string(level));
    }

    double measure() const { return pow2d(-level); } // |I|
    bool is_even() const { return level % 2 == 0; }  // |I| = 2^{-2k}
    bool is_root() const { return level == 0; }

    DyadicInterval parent() const {
        if (level == 0) throw InvalidIntervalError("the root interval has no parent");
        return {level - 1, index >> 1};
    }
    DyadicInterval left_child() const { return {level + 1, 2 * index}; }   // I_+
    DyadicInterval right_child() const { return {level + 1, 2 * index + 1}; } // I_-
    DyadicInterval sibling() const {
        if (level == 0) throw InvalidIntervalError("the root interval has no sibling");
        return {level, index ^ 1};
    }
    bool is_left_child() const {
        if (level == 0) throw InvalidIntervalError("the root interval is not a child");
        return (index & 1) == 0;
    }

    bool contains(const DyadicInterval& other) const {
        return other.level >= level && (other.index >> (other.level - level)) == index;
    }
    bool strictly_contains(const DyadicInterval& other) const {
        return other.level > level && contains(other);
    }

    auto operator<=>(const DyadicInterval&) const = default;
};

struct DyadicRectangle {
    DyadicInterval x, y;
    double measure() const { return x.measure() * y.measure(); }
    auto operator<=>(const DyadicRectangle&) const = default;
};

// s(I, Î): +1 if I is the left child of its parent (our h_I is positive on I_+ = left half).
inline int sign_in_parent(const DyadicInterval& i) { return i.is_left_child() ? +1 : -1; }

// I^{(m)}, the m-fold dyadic ancestor.
inline DyadicInterval ancestor(const DyadicInterval& i, int m) {
    if (m < 0 || m > i.level)
        throw InvalidIntervalError("ancestor of order " + std::to_string(m) +
                                   " escapes the root from level " + std::to_string(i.level));
    return {i.level - m, i.index >> m};
}

// The constant value h_J(I) that h_J takes on a strictly contained I.
inline double haar_value_on(const DyadicInterval& j, const DyadicInterval& i) {
    if (!j.strictly_contains(i))
        throw NotASubintervalError("haar_value_on requires I strictly inside J");
    const DyadicInterval child = ancestor(i, i.level - j.level - 1);
    return (child.index & 1 ? -1.0 : 1.0) * sqrt_pow2d(j.level);
}

// Heap layout for intervals with level < depth: idx = 2^level - 1 + index.
inline std::size_t heap_index(const DyadicInterval& i) {
    return static_cast<std::size_t>(((std::uint64_t{1} << i.level) - 1) + i.index);
}
inline std::size_t interval_count(int depth) { return (std::size_t{1} << depth) - 1; }

inline DyadicInterval interval_at(std::size_t heap) {
    int level = 0;
    std::uint64_t base = 0;
    while (heap - base >= (std::uint64_t{1} << level)) {
        base += std::uint64_t{1} << level;
        ++level;
    }
    return {level, heap - base};
}

// All intervals with representable Haar coefficients (level < depth), heap order.
inline std::vector<DyadicInterval> all_intervals(int depth) {
    std::vector<DyadicInterval> out;
    out.reserve(interval_count(depth));
    for (int k = 0; k < depth; ++k)
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << k); ++j)
            out.emplace_back(k, j);
    return out;
}

} // namespace dyadic
