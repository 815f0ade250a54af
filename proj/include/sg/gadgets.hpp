// The three untied gadget families (hat, target, hedgehog) in canonical signature:
// exactly one negative edge on the distinguished cycle, every other edge positive.
#pragma once

#include <array>

#include "sg/core.hpp"

namespace sg {

struct GadgetInstance {
    SignedGraph graph;
    EdgeId e1;
    EdgeId e2;
    Cycle distinguished_cycle;
};

/// Vertices x1=0, x2=1, y=2. Edges: 0,1 = the x1x2 pair (+,-); 2 = e1 = x1y; 3 = e2 = x2y.
inline GadgetInstance build_hat() {
    SignedGraph g(3);
    const EdgeId c0 = g.add_edge(vid(0), vid(1), Sign::Positive);
    const EdgeId c1 = g.add_edge(vid(0), vid(1), Sign::Negative);
    const EdgeId e1 = g.add_edge(vid(0), vid(2), Sign::Positive);
    const EdgeId e2 = g.add_edge(vid(1), vid(2), Sign::Positive);
    const std::array cyc{c0, c1};
    Cycle c = make_cycle(g, cyc);
    return {std::move(g), e1, e2, std::move(c)};
}

/// Rim x1x2x3x4 on vertices 0..3 (edges 0..3, x1x2 negative); e1 = x1x3 (4), e2 = x2x4 (5).
inline GadgetInstance build_target() {
    SignedGraph g(4);
    std::array<EdgeId, 4> rim{};
    for (std::size_t i = 0; i < 4; ++i) {
        rim[i] = g.add_edge(vid(i), vid((i + 1) % 4), i == 0 ? Sign::Negative : Sign::Positive);
    }
    const EdgeId e1 = g.add_edge(vid(0), vid(2), Sign::Positive);
    const EdgeId e2 = g.add_edge(vid(1), vid(3), Sign::Positive);
    Cycle c = make_cycle(g, rim);
    return {std::move(g), e1, e2, std::move(c)};
}

/// Triangle x1x2x3 on 0..2 (edges 0..2, x1x2 negative); y1 = 3 and y2 = 4 joined to
/// every x_i (edges 3..5 for y1, 6..8 for y2). e1 = x1y1 (3), e2 = x2y2 (7).
inline GadgetInstance build_hedgehog() {
    SignedGraph g(5);
    std::array<EdgeId, 3> tri{};
    for (std::size_t i = 0; i < 3; ++i) {
        tri[i] = g.add_edge(vid(i), vid((i + 1) % 3), i == 0 ? Sign::Negative : Sign::Positive);
    }
    std::array<std::array<EdgeId, 3>, 2> spokes{};
    for (std::size_t y = 0; y < 2; ++y) {
        for (std::size_t x = 0; x < 3; ++x) {
            spokes[y][x] = g.add_edge(vid(x), vid(3 + y), Sign::Positive);
        }
    }
    Cycle c = make_cycle(g, tri);
    return {std::move(g), spokes[0][0], spokes[1][1], std::move(c)};
}

}  // namespace sg
