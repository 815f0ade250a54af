#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "sg/decide.hpp"
#include "sg/gadgets.hpp"
#include "sg/gen.hpp"
#include "sg/verify.hpp"

using namespace sg;

namespace {

constexpr Sign P = Sign::Positive;
constexpr Sign N = Sign::Negative;

SignedGraph k4(std::initializer_list<Sign> signs) {
    SignedGraph g(4);
    auto s = signs.begin();
    for (std::size_t u = 0; u < 4; ++u) {
        for (std::size_t v = u + 1; v < 4; ++v) g.add_edge(vid(u), vid(v), *s++);
    }
    return g;
}

// Hub 0, rim 1..k; spoke to r is edge r-1, rim edges follow.
SignedGraph wheel(std::size_t k, std::optional<std::size_t> negative_spoke) {
    SignedGraph g(k + 1);
    for (std::size_t r = 1; r <= k; ++r) g.add_edge(vid(0), vid(r), negative_spoke == r ? N : P);
    for (std::size_t r = 1; r <= k; ++r) g.add_edge(vid(r), vid(r % k + 1), P);
    return g;
}

// Triangular prism 0-2-3 / 1-4-5 with the 0-1 rung doubled (+, -); e1 = 2-4, e2 = 3-5.
SignedGraph prism_case1() {
    SignedGraph g(6);
    g.add_edge(vid(0), vid(2), P);
    g.add_edge(vid(2), vid(3), P);
    g.add_edge(vid(3), vid(0), P);
    g.add_edge(vid(1), vid(4), P);
    g.add_edge(vid(4), vid(5), N);
    g.add_edge(vid(5), vid(1), N);
    g.add_edge(vid(0), vid(1), P);
    g.add_edge(vid(0), vid(1), N);
    g.add_edge(vid(2), vid(4), P);  // 8 = e1
    g.add_edge(vid(3), vid(5), N);  // 9 = e2
    return g;
}

void expect_matches_oracle(const SignedGraph& g, EdgeId e1, EdgeId e2, const DecideOptions& opts = {}) {
    auto v = decide_tied(g, e1, e2, opts);
    int truth = brute::brute_tied(g, e1, e2);
    switch (truth) {
        case 0: EXPECT_EQ(v.kind, VerdictKind::TiedVacuous); break;
        case 2: EXPECT_EQ(v.kind, VerdictKind::Untied); break;
        default:
            EXPECT_EQ(v.kind, VerdictKind::Tied);
            EXPECT_EQ(v.common_sign, truth == 1 ? P : N);
    }
    auto check = verify_certificate(g, e1, e2, v);
    EXPECT_TRUE(check.ok) << check.reason;
}

}  // namespace

TEST(DecideTied, HatIsUntiedWithBothCycles) {
    auto hat = build_hat();
    auto v = decide_tied(hat.graph, hat.e1, hat.e2);
    ASSERT_EQ(v.kind, VerdictKind::Untied);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->positive.edges, (std::vector{eid(0), eid(2), eid(3)}));
    EXPECT_EQ(v.witness->negative.edges, (std::vector{eid(1), eid(2), eid(3)}));
    EXPECT_EQ(cycle_sign(hat.graph, v.witness->positive), P);
    EXPECT_EQ(cycle_sign(hat.graph, v.witness->negative), N);
}

TEST(DecideTied, WheelCommonVertex) {
    // spoke 3 negative; e1, e2 = spokes 1 and 2
    auto g = wheel(5, 3);
    auto leaf = check_leaf(g, eid(0), eid(1));
    EXPECT_EQ(leaf.kind, LeafCase::CommonVertex);
    auto v = decide_tied(g, eid(0), eid(1));
    EXPECT_EQ(v.kind, VerdictKind::Tied);
    EXPECT_EQ(v.common_sign, P);
    auto rep = enumerate_common_cycles(g, eid(0), eid(1));
    EXPECT_EQ(rep.negative_count, 0u);
    EXPECT_GT(rep.positive_count, 0u);
}

TEST(DecideTied, K4BalancedRemainderNegative) {
    auto g = k4({N, P, P, P, P, P});  // e1 = 01 (edge 0), e2 = 23 (edge 5)
    auto v = decide_tied(g, eid(0), eid(5));
    EXPECT_EQ(v.kind, VerdictKind::Tied);
    EXPECT_EQ(v.common_sign, N);
    auto rep = enumerate_common_cycles(g, eid(0), eid(5));
    EXPECT_EQ(rep.cycles.size(), 2u);
    EXPECT_EQ(rep.negative_count, 2u);

    DecideOptions three;
    three.small_leaf_threshold = 3;
    auto leaf = check_leaf(g, eid(0), eid(5), three);
    EXPECT_EQ(leaf.kind, LeafCase::BalancedRemainder);
    EXPECT_EQ(leaf.sign, N);
    EXPECT_EQ(decide_tied(g, eid(0), eid(5), three).common_sign, N);
}

TEST(DecideTied, K4NegativeRemainderUntied) {
    auto g = k4({P, N, P, P, P, P});  // edge 1 = 02 lies on the 4-cycle G - {01, 23}
    auto v = decide_tied(g, eid(0), eid(5));
    EXPECT_EQ(v.kind, VerdictKind::Untied);
    EXPECT_TRUE(verify_certificate(g, eid(0), eid(5), v).ok);
}

TEST(DecideTied, Errors) {
    auto g = k4({P, P, P, P, P, P});
    try {
        decide_tied(g, eid(1), eid(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SameEdge);
    }
    try {
        decide_tied(g, eid(1), eid(6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadEdge);
    }
    DecideOptions bad;
    bad.small_leaf_threshold = 2;
    EXPECT_THROW(decide_tied(g, eid(0), eid(1), bad), Error);
}

TEST(DecideTied, ParallelAndVacuous) {
    SignedGraph g(3);
    g.add_edge(vid(0), vid(1), N);
    g.add_edge(vid(0), vid(1), P);
    g.add_edge(vid(1), vid(2), P);
    auto par = decide_tied(g, eid(0), eid(1));
    EXPECT_EQ(par.kind, VerdictKind::Tied);
    EXPECT_EQ(par.common_sign, N);
    auto vac = decide_tied(g, eid(0), eid(2));
    EXPECT_EQ(vac.kind, VerdictKind::TiedVacuous);
    EXPECT_FALSE(vac.common_sign);
    EXPECT_TRUE(verify_certificate(g, eid(0), eid(2), vac).ok);
}

TEST(CheckLeaf, HedgehogUntied) {
    auto hh = build_hedgehog();
    auto leaf = check_leaf(hh.graph, hh.e1, hh.e2);
    EXPECT_FALSE(leaf.tied());
}

TEST(CheckLeaf, ParallelCutCase) {
    auto g = prism_case1();
    ASSERT_TRUE(is_3_connected(g));
    auto leaf = check_leaf(g, eid(8), eid(9));
    ASSERT_EQ(leaf.kind, LeafCase::ParallelCut);
    const auto& rec = std::get<ParallelCutRecord>(leaf.record);
    EXPECT_EQ(rec.parallel_class, (std::vector{eid(6), eid(7)}));
    EXPECT_EQ(rec.cut_side, (std::vector{vid(1), vid(4), vid(5)}));
    auto rep = enumerate_common_cycles(g, eid(8), eid(9));
    ASSERT_TRUE(rep.complete);
    EXPECT_TRUE(rep.positive_count == 0 || rep.negative_count == 0);
    EXPECT_EQ(leaf.sign, rep.positive_count ? P : N);
    expect_matches_oracle(g, eid(8), eid(9));
}

TEST(CheckLeaf, Preconditions) {
    SignedGraph c5(5);
    for (std::size_t i = 0; i < 5; ++i) c5.add_edge(vid(i), vid((i + 1) % 5), P);
    try {
        check_leaf(c5, eid(0), eid(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
    }
    auto hat = build_hat();
    EXPECT_THROW(check_leaf(hat.graph, eid(0), eid(2)), Error);  // edge 0 has a parallel twin
}

TEST(Reduce, ThreeConnectedIsSingleLeaf) {
    auto tree = reduce(wheel(5, std::nullopt), eid(0), eid(2));
    EXPECT_TRUE(tree.is_leaf());
    EXPECT_TRUE(tree.children.empty());
}

TEST(Reduce, TwoK4sGluedGivePartOneSplit) {
    // K4 on {0,1,2,3} and K4 on {0,1,4,5} sharing the boundary {0, 1}, edge 01 once
    SignedGraph g(6);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5},
                        {4, 5}}) {
        g.add_edge(vid(u), vid(v), P);
    }
    auto tree = reduce(g, eid(5), eid(10));  // 23 and 45
    ASSERT_TRUE(tree.split);
    EXPECT_EQ(tree.split->part, SplitPart::Separated);
    EXPECT_EQ(tree.split->u, vid(0));
    EXPECT_EQ(tree.split->v, vid(1));
    ASSERT_EQ(tree.children.size(), 2u);
    for (const auto& child : tree.children) {
        EXPECT_TRUE(child.is_leaf());
        EXPECT_EQ(child.graph.vertex_count(), 4u);
        EXPECT_FALSE(child.parent_core_edge[child.second.index].has_value());  // the marker
    }
    expect_matches_oracle(g, eid(5), eid(10));
}

TEST(Reduce, BalancedThetaSideGivesPartTwo) {
    // K4 on {0,1,2,3} with e1 = 02, e2 = 13; theta graph between 0 and 1 through 4, 5, 6
    SignedGraph g(7);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) g.add_edge(vid(u), vid(v), P);
    for (int mid : {4, 5, 6}) {
        g.add_edge(vid(0), vid(mid), N);
        g.add_edge(vid(mid), vid(1), N);
    }
    auto tree = reduce(g, eid(1), eid(4));
    ASSERT_TRUE(tree.split);
    EXPECT_EQ(tree.split->part, SplitPart::BalancedSide);
    ASSERT_EQ(tree.children.size(), 1u);
    auto decided = decide_with_tree(g, eid(1), eid(4));
    EXPECT_EQ(decided.verdict.kind, VerdictKind::Tied);
    expect_matches_oracle(g, eid(1), eid(4));
}

TEST(Reduce, UnbalancedSideGivesPartThree) {
    SignedGraph g(7);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}) g.add_edge(vid(u), vid(v), P);
    for (int mid : {4, 5, 6}) {
        g.add_edge(vid(0), vid(mid), mid == 5 ? N : P);
        g.add_edge(vid(mid), vid(1), P);
    }
    auto tree = reduce(g, eid(1), eid(4));
    ASSERT_TRUE(tree.split);
    EXPECT_EQ(tree.split->part, SplitPart::UnbalancedSide);
    expect_matches_oracle(g, eid(1), eid(4));
}

TEST(LiftWitness, SingleLeafIsIdentity) {
    auto hh = build_hedgehog();
    DecideOptions opts;
    auto tree = reduce(hh.graph, hh.e1, hh.e2, opts);
    ASSERT_TRUE(tree.is_leaf());
    auto truth = oracle_tied(hh.graph, hh.e1, hh.e2);
    auto leaf_w = oracle_tied(tree.normalized.core, tree.normalized.first, tree.normalized.second);
    ASSERT_TRUE(leaf_w.witness);
    auto lifted = lift_witness(tree, {}, *leaf_w.witness);
    EXPECT_EQ(edges_sign(hh.graph, lifted.positive.edges), P);
    EXPECT_EQ(edges_sign(hh.graph, lifted.negative.edges), N);
    EXPECT_TRUE(lifted.positive.contains(hh.e1) && lifted.negative.contains(hh.e2));
    EXPECT_EQ(truth.kind, VerdictKind::Untied);
}

namespace {

// Paths (child indices) to every leaf below `n` whose own problem is untied.
void untied_leaves(const ReductionNode& n, std::vector<std::size_t>& path, std::vector<std::vector<std::size_t>>& out) {
    if (n.is_leaf()) {
        if (n.outcome == VerdictKind::Untied) out.push_back(path);
        return;
    }
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        path.push_back(i);
        untied_leaves(n.children[i], path, out);
        path.pop_back();
    }
}

bool has_part(const ReductionNode& n, SplitPart part) {
    if (n.split && n.split->part == part) return true;
    for (const auto& c : n.children) {
        if (has_part(c, part)) return true;
    }
    return false;
}

}  // namespace

TEST(LiftWitness, ThroughSplitsGivesOppositeSignCycles) {
    std::size_t lifted_part3 = 0, lifted_any = 0;
    for (std::uint64_t seed = 0; seed < 3000 && lifted_part3 < 20; ++seed) {
        auto g = random_signed_graph(7 + seed % 3, 11 + seed % 5, 0.4, seed);
        const EdgeId e1 = eid(seed % g.edge_count());
        const EdgeId e2 = eid((seed / 7 + 1 + e1.index) % g.edge_count());
        if (e1 == e2) continue;
        auto d = decide_with_tree(g, e1, e2);
        if (d.verdict.kind != VerdictKind::Untied || d.tree.is_leaf() || !d.tree.split) continue;
        std::vector<std::size_t> path;
        std::vector<std::vector<std::size_t>> leaves;
        untied_leaves(d.tree, path, leaves);
        for (const auto& p : leaves) {
            const ReductionNode* leaf = &d.tree;
            for (std::size_t i : p) leaf = &leaf->children[i];
            auto w = oracle_tied(leaf->normalized.core, leaf->normalized.first, leaf->normalized.second);
            ASSERT_TRUE(w.witness);
            auto lifted = lift_witness(d.tree, p, *w.witness);
            EXPECT_EQ(edges_sign(g, lifted.positive.edges), P);
            EXPECT_EQ(edges_sign(g, lifted.negative.edges), N);
            for (const auto* c : {&lifted.positive, &lifted.negative}) {
                EXPECT_TRUE(is_valid_cycle(g, *c));
                EXPECT_TRUE(c->contains(e1) && c->contains(e2));
            }
            ++lifted_any;
            if (has_part(d.tree, SplitPart::UnbalancedSide)) ++lifted_part3;
        }
    }
    EXPECT_GT(lifted_any, 0u);
    EXPECT_GT(lifted_part3, 0u);
}

TEST(DecideTied, SwitchInvariance) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto g = random_signed_graph(6, 10, 0.4, seed);
        std::vector<VertexId> s;
        for (std::size_t v = 0; v < 6; ++v) {
            if ((seed >> v) & 1) s.push_back(vid(v));
        }
        auto h = switch_signature(g, SwitchSet(s));
        auto a = decide_tied(g, eid(0), eid(9));
        auto b = decide_tied(h, eid(0), eid(9));
        EXPECT_EQ(a.kind, b.kind);
        EXPECT_EQ(a.common_sign, b.common_sign);
    }
}

TEST(DecideTied, RandomAgainstSubsetOracle) {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        auto g = random_signed_graph(4 + seed % 5, 6 + seed % 9, 0.3, 77 + seed);
        expect_matches_oracle(g, eid(0), eid(1 + seed % (g.edge_count() - 1)));
    }
}

TEST(DecideTied, NegativeCycleOffThePairForcesUntied) {
    std::size_t tested = 0;
    for (std::uint64_t seed = 0; tested < 100; ++seed) {
        const std::size_t n = 5 + seed % 3;
        auto g = random_3_connected(n, seed % (n - 3), 0.4, seed);
        const EdgeId e1 = eid(seed % g.edge_count());
        const EdgeId e2 = eid((seed * 7 + 3) % g.edge_count());
        const Edge& a = g.edge(e1);
        const Edge& b = g.edge(e2);
        if (e1 == e2 || a.touches(b.u) || a.touches(b.v)) continue;
        const std::array pair{e1, e2};
        if (is_balanced(delete_edges(g, pair).graph).balanced()) continue;
        ++tested;
        EXPECT_EQ(decide_tied(g, e1, e2).kind, VerdictKind::Untied);
    }
}

TEST(Lovasz, Examples) {
    auto g = k4({P, P, P, P, P, P});
    EXPECT_EQ(lovasz_three_edges(g, eid(0), eid(1), eid(2)), ThreeEdgeAnswer::NoCycleCommonVertex);
    EXPECT_EQ(lovasz_three_edges(g, eid(0), eid(1), eid(3)), ThreeEdgeAnswer::CycleExists);
    auto tri = cycle_through_three(g, eid(0), eid(1), eid(3));
    ASSERT_TRUE(tri.cycle);
    EXPECT_EQ(tri.cycle->length(), 3u);

    SignedGraph prism(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}) {
        prism.add_edge(vid(u), vid(v), P);
    }
    EXPECT_EQ(lovasz_three_edges(prism, eid(6), eid(7), eid(8)), ThreeEdgeAnswer::NoCycleDisconnecting);
    auto none = cycle_through_three(prism, eid(6), eid(7), eid(8));
    EXPECT_FALSE(none.cycle);
    EXPECT_TRUE(none.complete);
}

TEST(Lovasz, Preconditions) {
    auto g = k4({P, P, P, P, P, P});
    EXPECT_THROW(lovasz_three_edges(g, eid(0), eid(0), eid(1)), Error);
    g.add_edge(vid(0), vid(1), N);
    try {
        lovasz_three_edges(g, eid(0), eid(1), eid(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
    }
    SignedGraph c4(4);
    for (std::size_t i = 0; i < 4; ++i) c4.add_edge(vid(i), vid((i + 1) % 4), P);
    EXPECT_THROW(lovasz_three_edges(c4, eid(0), eid(1), eid(2)), Error);
}
