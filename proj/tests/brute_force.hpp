// Test-only ground truth by edge-subset enumeration. Shares no search code with the
// library: a subset is a cycle iff it is connected and every touched vertex has degree 2.
#pragma once

#include <cstdint>
#include <vector>

#include "sg/core.hpp"

namespace sg::brute {

inline bool subset_is_cycle(const SignedGraph& g, std::uint64_t mask) {
    const std::size_t m = g.edge_count();
    std::vector<int> degree(g.vertex_count(), 0);
    std::size_t count = 0, first = m;
    for (std::size_t i = 0; i < m; ++i) {
        if (!(mask >> i & 1)) continue;
        ++count;
        if (first == m) first = i;
        ++degree[g.edges()[i].u.index];
        ++degree[g.edges()[i].v.index];
    }
    if (count < 2) return false;
    std::size_t touched = 0;
    for (int d : degree) {
        if (d != 0 && d != 2) return false;
        if (d) ++touched;
    }
    if (touched != count) return false;
    // connected: walk from the first edge
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<std::uint32_t> stack{g.edges()[first].u.index};
    seen[stack[0]] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            const Edge& e = g.edges()[i];
            std::uint32_t y;
            if (e.u.index == x) y = e.v.index;
            else if (e.v.index == x) y = e.u.index;
            else continue;
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == touched;
}

inline Sign subset_sign(const SignedGraph& g, std::uint64_t mask) {
    Sign s = Sign::Positive;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (mask >> i & 1) s *= g.edges()[i].sign;
    }
    return s;
}

/// Every cycle as an edge bitmask; requires m <= 24.
inline std::vector<std::uint64_t> all_cycles(const SignedGraph& g) {
    std::vector<std::uint64_t> out;
    const std::size_t m = g.edge_count();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        if (subset_is_cycle(g, mask)) out.push_back(mask);
    }
    return out;
}

struct BruteCount {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t total() const { return positive + negative; }
};

/// Signs of the cycles containing every edge in `required`.
inline BruteCount cycles_through(const SignedGraph& g, std::initializer_list<EdgeId> required) {
    std::uint64_t need = 0;
    for (EdgeId e : required) need |= std::uint64_t{1} << e.index;
    BruteCount c;
    for (std::uint64_t mask : all_cycles(g)) {
        if ((mask & need) != need) continue;
        (subset_sign(g, mask) == Sign::Positive ? c.positive : c.negative)++;
    }
    return c;
}

/// Tied-ness straight from the definition: 0 vacuous, +1/-1 tied with that sign, 2 untied.
inline int brute_tied(const SignedGraph& g, EdgeId e1, EdgeId e2) {
    auto c = cycles_through(g, {e1, e2});
    if (c.total() == 0) return 0;
    if (c.positive && c.negative) return 2;
    return c.positive ? 1 : -1;
}

inline std::uint64_t mask_of(std::span<const EdgeId> edges) {
    std::uint64_t m = 0;
    for (EdgeId e : edges) m |= std::uint64_t{1} << e.index;
    return m;
}

}  // namespace sg::brute
