#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "sg/core.hpp"
#include "sg/gadgets.hpp"
#include "sg/gen.hpp"

using namespace sg;

namespace {

SignedGraph triangle(Sign a = Sign::Positive, Sign b = Sign::Positive, Sign c = Sign::Positive) {
    SignedGraph g(3);
    g.add_edge(vid(0), vid(1), a);
    g.add_edge(vid(1), vid(2), b);
    g.add_edge(vid(2), vid(0), c);
    return g;
}

SignedGraph k4(Sign s = Sign::Positive) {
    SignedGraph g(4);
    for (std::size_t u = 0; u < 4; ++u) {
        for (std::size_t v = u + 1; v < 4; ++v) g.add_edge(vid(u), vid(v), s);
    }
    return g;
}

}  // namespace

TEST(Sign, Arithmetic) {
    EXPECT_EQ(Sign::Negative * Sign::Negative, Sign::Positive);
    EXPECT_EQ(Sign::Positive * Sign::Negative, Sign::Negative);
    EXPECT_EQ(-Sign::Positive, Sign::Negative);
    EXPECT_EQ(to_char(Sign::Negative), '-');
}

TEST(Graph, NewGraph) {
    EXPECT_EQ(new_graph(0).vertex_count(), 0u);
    auto g = new_graph(3);
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 0u);
    auto h = new_graph(5);
    for (std::size_t i = 0; i < 4; ++i) h.add_edge(vid(i), vid(i + 1), Sign::Positive);
    EXPECT_EQ(h.edge_count(), 4u);
    EXPECT_EQ(h.vertex_count(), 5u);
}

TEST(Graph, AddEdge) {
    auto g = new_graph(2);
    EXPECT_EQ(g.add_edge(vid(0), vid(1), Sign::Positive), eid(0));
    EXPECT_EQ(g.add_edge(vid(0), vid(1), Sign::Negative), eid(1));
    EXPECT_EQ(parallel_class(g, eid(0)), (std::vector{eid(0), eid(1)}));
    EXPECT_EQ(parallel_class(g, eid(1)), (std::vector{eid(0), eid(1)}));
    try {
        g.add_edge(vid(0), vid(0), Sign::Positive);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LoopRejected);
    }
    try {
        g.add_edge(vid(0), vid(7), Sign::Positive);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadVertex);
    }
}

TEST(Cycle, Sign) {
    auto hat = build_hat();
    EXPECT_EQ(cycle_sign(hat.graph, hat.distinguished_cycle), Sign::Negative);
    auto t = triangle();
    const std::array all{eid(0), eid(1), eid(2)};
    EXPECT_EQ(cycle_sign(t, make_cycle(t, all)), Sign::Positive);

    SignedGraph c4(4);
    for (std::size_t i = 0; i < 4; ++i) c4.add_edge(vid(i), vid((i + 1) % 4), i < 2 ? Sign::Negative : Sign::Positive);
    const std::array rim{eid(0), eid(1), eid(2), eid(3)};
    EXPECT_EQ(cycle_sign(c4, make_cycle(c4, rim)), Sign::Positive);
}

TEST(Cycle, InvalidRejected) {
    auto t = triangle();
    Cycle bad{{eid(0), eid(1)}, {vid(0), vid(1)}};
    EXPECT_THROW(cycle_sign(t, bad), Error);
    const std::array path{eid(0), eid(1)};
    EXPECT_THROW(make_cycle(t, path), Error);
}

TEST(Cycle, CanonicalOrder) {
    auto t = triangle();
    const std::array scrambled{eid(2), eid(0), eid(1)};
    Cycle c = make_cycle(t, scrambled);
    EXPECT_EQ(c.edges.front(), eid(0));
    EXPECT_TRUE(is_valid_cycle(t, c));
    EXPECT_EQ(c.edges, (std::vector{eid(0), eid(1), eid(2)}));
}

TEST(Switching, EmptyAndInvolution) {
    auto g = k4();
    auto h = switch_signature(g, SwitchSet{});
    EXPECT_EQ(h.signature(), g.signature());
    SwitchSet s({vid(1), vid(3)});
    EXPECT_EQ(switch_signature(switch_signature(g, s), s), g);
}

TEST(Switching, HatAtY) {
    auto hat = build_hat();
    auto h = switch_signature(hat.graph, SwitchSet({vid(2)}));
    EXPECT_NE(h.sign(hat.e1), hat.graph.sign(hat.e1));
    EXPECT_NE(h.sign(hat.e2), hat.graph.sign(hat.e2));
    EXPECT_EQ(h.sign(eid(0)), hat.graph.sign(eid(0)));
    for (std::uint64_t mask : brute::all_cycles(hat.graph)) {
        EXPECT_EQ(brute::subset_sign(h, mask), brute::subset_sign(hat.graph, mask));
    }
}

TEST(Switching, EdgeCut) {
    auto g = k4();
    EXPECT_EQ(edge_cut(g, SwitchSet({vid(0)})), (std::vector{eid(0), eid(1), eid(2)}));
    EXPECT_THROW(switch_signature(g, SwitchSet({vid(9)})), Error);
}

TEST(Minors, DeleteEdge) {
    auto t = triangle();
    auto r = delete_edge(t, eid(1));
    EXPECT_EQ(r.graph.edge_count(), 2u);
    EXPECT_EQ(r.graph.vertex_count(), 3u);
    EXPECT_EQ(r.map.edge[1], std::nullopt);
    EXPECT_EQ(r.map.edge[2], eid(1));
    EXPECT_TRUE(brute::all_cycles(r.graph).empty());
    EXPECT_THROW(delete_edge(t, eid(3)), Error);
}

TEST(Minors, DeleteHubOfWheel) {
    auto w = random_3_connected(6, 0, 0.0, 1);
    auto r = delete_vertex(w, vid(0));
    EXPECT_EQ(r.graph.vertex_count(), 5u);
    EXPECT_EQ(r.graph.edge_count(), 5u);
    EXPECT_EQ(brute::all_cycles(r.graph).size(), 1u);
    EXPECT_EQ(r.map.vertex[0], std::nullopt);
    EXPECT_EQ(r.map.vertex[1], vid(0));
    EXPECT_THROW(delete_vertex(w, vid(6)), Error);
}

TEST(Minors, DeletePreservesSurvivingCycleSigns) {
    auto g = random_signed_graph(5, 9, 0.5, 11);
    auto r = delete_edge(g, eid(4));
    for (std::uint64_t mask : brute::all_cycles(r.graph)) {
        std::uint64_t back = 0;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (auto e = r.map.edge[i]; e && (mask >> e->index & 1)) back |= std::uint64_t{1} << i;
        }
        EXPECT_TRUE(brute::subset_is_cycle(g, back));
        EXPECT_EQ(brute::subset_sign(g, back), brute::subset_sign(r.graph, mask));
    }
}

TEST(Minors, ContractNegativeTriangle) {
    auto t = triangle(Sign::Negative, Sign::Negative, Sign::Negative);
    auto r = contract_edge(t, eid(0));
    EXPECT_EQ(r.graph.vertex_count(), 2u);
    EXPECT_EQ(r.graph.edge_count(), 2u);
    auto cycles = brute::all_cycles(r.graph);
    ASSERT_EQ(cycles.size(), 1u);
    EXPECT_EQ(brute::subset_sign(r.graph, cycles[0]), Sign::Negative);
}

TEST(Minors, ContractPositiveK4) {
    auto r = contract_edge(k4(), eid(0));
    EXPECT_EQ(r.graph.vertex_count(), 3u);
    for (std::uint64_t mask : brute::all_cycles(r.graph)) {
        EXPECT_EQ(brute::subset_sign(r.graph, mask), Sign::Positive);
    }
}

namespace {

std::vector<int> cycle_sign_multiset(const SignedGraph& g) {
    std::vector<int> out;
    for (std::uint64_t mask : brute::all_cycles(g)) out.push_back(to_int(brute::subset_sign(g, mask)));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Minors, ContractNegativeEqualsSwitchThenContract) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_signed_graph(5, 8, 0.5, seed);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (g.sign(eid(i)) != Sign::Negative) continue;
            auto switched = switch_signature(g, SwitchSet({g.edge(eid(i)).u}));
            EXPECT_EQ(cycle_sign_multiset(contract_edge(g, eid(i)).graph),
                      cycle_sign_multiset(contract_edge(switched, eid(i)).graph));
        }
    }
}

TEST(Minors, ContractionLiftsCycles) {
    // Every cycle of g/e is the image of a cycle of g (possibly using e) with the same sign.
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        auto g = random_signed_graph(5, 8, 0.5, 100 + seed);
        const EdgeId e = eid(seed % g.edge_count());
        auto r = contract_edge(g, e);
        for (std::uint64_t mask : brute::all_cycles(r.graph)) {
            std::uint64_t back = 0;
            for (std::size_t i = 0; i < g.edge_count(); ++i) {
                if (auto x = r.map.edge[i]; x && (mask >> x->index & 1)) back |= std::uint64_t{1} << i;
            }
            if (!brute::subset_is_cycle(g, back)) back |= std::uint64_t{1} << e.index;
            ASSERT_TRUE(brute::subset_is_cycle(g, back));
            EXPECT_EQ(brute::subset_sign(g, back), brute::subset_sign(r.graph, mask));
        }
    }
}

TEST(Minors, RelabelingIsBijectionOntoSurvivors) {
    auto g = random_signed_graph(6, 10, 0.3, 5);
    for (const auto& r : {delete_edge(g, eid(3)), delete_vertex(g, vid(2)), contract_edge(g, eid(0))}) {
        std::vector<int> hits(r.graph.edge_count(), 0);
        for (const auto& x : r.map.edge) {
            if (x) hits.at(x->index)++;
        }
        for (int h : hits) EXPECT_EQ(h, 1);
    }
}

TEST(ParallelClass, Examples) {
    auto t = triangle();
    EXPECT_EQ(parallel_class(t, eid(1)), std::vector{eid(1)});
    auto hat = build_hat();
    EXPECT_EQ(parallel_class(hat.graph, eid(1)), (std::vector{eid(0), eid(1)}));
    SignedGraph b(2);
    for (int i = 0; i < 3; ++i) b.add_edge(vid(0), vid(1), Sign::Positive);
    EXPECT_EQ(parallel_class(b, eid(2)).size(), 3u);
    EXPECT_THROW(parallel_class(b, eid(3)), Error);
}

TEST(Gadgets, Shapes) {
    auto hat = build_hat();
    EXPECT_EQ(hat.graph.vertex_count(), 3u);
    EXPECT_EQ(hat.graph.edge_count(), 4u);
    EXPECT_EQ(cycle_sign(hat.graph, hat.distinguished_cycle), Sign::Negative);

    auto target = build_target();
    EXPECT_EQ(target.graph.vertex_count(), 4u);
    EXPECT_EQ(target.graph.edge_count(), 6u);
    const Edge& a = target.graph.edge(target.e1);
    const Edge& b = target.graph.edge(target.e2);
    EXPECT_FALSE(a.touches(b.u) || a.touches(b.v));

    auto hh = build_hedgehog();
    EXPECT_EQ(hh.graph.vertex_count(), 5u);
    EXPECT_EQ(hh.graph.edge_count(), 9u);
    EXPECT_EQ(hh.graph.edge(hh.e1), (Edge{vid(0), vid(3), Sign::Positive}));
    EXPECT_EQ(hh.graph.edge(hh.e2), (Edge{vid(1), vid(4), Sign::Positive}));
}

TEST(Gadgets, DistinguishedCycleInvariants) {
    for (const auto& g : {build_hat(), build_target(), build_hedgehog()}) {
        EXPECT_EQ(cycle_sign(g.graph, g.distinguished_cycle), Sign::Negative);
        EXPECT_FALSE(g.distinguished_cycle.contains(g.e1));
        EXPECT_FALSE(g.distinguished_cycle.contains(g.e2));
        auto through = brute::cycles_through(g.graph, {g.e1, g.e2});
        EXPECT_EQ(through.total() % 2, 0u);
        std::uint64_t sym = 0;
        for (std::uint64_t mask : brute::all_cycles(g.graph)) {
            if ((mask >> g.e1.index & 1) && (mask >> g.e2.index & 1)) sym ^= mask;
        }
        EXPECT_EQ(sym, brute::mask_of(g.distinguished_cycle.edges));
    }
}

TEST(EdgeSubgraph, RenumbersInOrder) {
    auto g = k4();
    const std::array es{eid(5), eid(3)};
    auto s = edge_subgraph(g, es);
    EXPECT_EQ(s.graph.vertex_count(), 3u);
    EXPECT_EQ(s.vertex_origin, (std::vector{vid(1), vid(2), vid(3)}));
    EXPECT_EQ(s.edge_origin, (std::vector{eid(5), eid(3)}));
}
