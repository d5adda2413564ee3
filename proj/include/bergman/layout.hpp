#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "bergman/errors.hpp"

namespace bergman {

/// One block of variables, e.g. the n holomorphic slots of "w" or the n
/// antiholomorphic slots of "wbar". Conjugate blocks come in adjacent
/// (holomorphic, antiholomorphic) pairs of equal size.
struct VarGroup {
    std::string name;
    int size = 0;
    bool antiholomorphic = false;

    friend bool operator==(const VarGroup&, const VarGroup&) = default;
};

class VarLayout {
public:
    VarLayout() = default;

    explicit VarLayout(std::vector<VarGroup> groups) : groups_(std::move(groups)) {
        if (groups_.empty()) throw LayoutMismatch("layout needs at least one group");
        if (groups_.size() % 2 != 0)
            throw LayoutMismatch("conjugate groups must come in (holo, anti) pairs");
        offsets_.resize(groups_.size());
        int off = 0;
        for (std::size_t i = 0; i < groups_.size(); ++i) {
            const VarGroup& g = groups_[i];
            if (g.size <= 0) throw LayoutMismatch("group '" + g.name + "' has non-positive size");
            if (i % 2 == 0) {
                if (g.antiholomorphic)
                    throw LayoutMismatch("group '" + g.name + "' should open a (holo, anti) pair");
            } else {
                const VarGroup& h = groups_[i - 1];
                if (!g.antiholomorphic || g.size != h.size)
                    throw LayoutMismatch("group '" + g.name + "' does not close the pair of '" +
                                         h.name + "'");
            }
            offsets_[i] = off;
            off += g.size;
        }
        total_slots_ = off;
        if (total_slots_ > max_slots)
            throw LayoutMismatch("layout exceeds the supported slot budget");
    }

    static constexpr int max_slots = 16;

    int group_count() const { return static_cast<int>(groups_.size()); }
    const VarGroup& group(int gi) const { return groups_[static_cast<std::size_t>(gi)]; }
    int total_slots() const { return total_slots_; }
    int offset(int gi) const { return offsets_[static_cast<std::size_t>(gi)]; }

    /// Index of the conjugate partner group (pairs are adjacent).
    int conjugate_group(int gi) const { return (gi % 2 == 0) ? gi + 1 : gi - 1; }

    int index_of(std::string_view name) const {
        for (int i = 0; i < group_count(); ++i)
            if (groups_[static_cast<std::size_t>(i)].name == name) return i;
        return -1;
    }

    int require(std::string_view name) const {
        int gi = index_of(name);
        if (gi < 0) throw LayoutMismatch("no group named '" + std::string(name) + "' in layout");
        return gi;
    }

    friend bool operator==(const VarLayout&, const VarLayout&) = default;

private:
    std::vector<VarGroup> groups_;
    std::vector<int> offsets_;
    int total_slots_ = 0;
};

// Standard layouts used across the artifact.
inline VarLayout point_layout(int n) {
    return VarLayout({{"z", n, false}, {"zbar", n, true}});
}
inline VarLayout base_layout(int n) {
    return VarLayout({{"w", n, false}, {"wbar", n, true}});
}
/// Base point plus offset: (w, wbar, u, ubar) with u = y - w.
inline VarLayout offset_layout(int n) {
    return VarLayout({{"w", n, false}, {"wbar", n, true}, {"u", n, false}, {"ubar", n, true}});
}
/// Two independent points (x, xbar, y, ybar).
inline VarLayout pair_layout(int n) {
    return VarLayout({{"x", n, false}, {"xbar", n, true}, {"y", n, false}, {"ybar", n, true}});
}
/// Polarized arguments (x, ybar) treated as independent variables.
inline VarLayout polarized_layout(int n) {
    return VarLayout({{"x", n, false}, {"ybar", n, true}});
}

/// Packed exponent vector; slots beyond the layout's total are zero.
/// Lexicographic array order gives the deterministic term order everywhere.
using ExpKey = std::array<std::uint8_t, VarLayout::max_slots>;

inline ExpKey zero_key() {
    ExpKey k{};
    return k;
}

inline int total_degree(const ExpKey& k, int slots) {
    int d = 0;
    for (int i = 0; i < slots; ++i) d += k[static_cast<std::size_t>(i)];
    return d;
}

inline int group_degree(const ExpKey& k, const VarLayout& layout, int gi) {
    int d = 0;
    const int off = layout.offset(gi);
    for (int i = 0; i < layout.group(gi).size; ++i) d += k[static_cast<std::size_t>(off + i)];
    return d;
}

/// Multi-index over one group: a fixed-length vector of non-negative orders.
using MultiIndex = std::vector<int>;

inline int order_of(const MultiIndex& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

} // namespace bergman
