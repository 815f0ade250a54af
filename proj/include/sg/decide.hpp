// Deciding whether two edges are tied: normalization, recursive reduction across
// proper 2-separations, the 3-connected leaf characterization, and lifting of
// untied witnesses back to the input graph.
#pragma once

#include <map>

#include "sg/balance.hpp"
#include "sg/connectivity.hpp"
#include "sg/core.hpp"
#include "sg/oracle.hpp"
#include "sg/verdict.hpp"

namespace sg {

struct DecideOptions {
    /// Leaves with at most this many vertices are decided by enumeration. Must be >= 3:
    /// a 2-connected graph on 3 vertices is never 3-connected.
    std::size_t small_leaf_threshold = 4;
    /// Node budget shared by all witness searches of one decide_tied call.
    std::size_t witness_budget = 1'000'000;
};

// ---------------------------------------------------------------- normalization

/// A problem (g, first, second) after dropping edges parallel to either distinguished
/// edge and restricting to the block that holds both.
struct NormalizedProblem {
    enum class Kind { ParallelPair, Vacuous, Core };
    Kind kind = Kind::Core;
    SignedGraph core;
    EdgeId first;
    EdgeId second;
    std::vector<EdgeId> edge_origin;      // core edge -> problem edge
    std::vector<VertexId> vertex_origin;  // core vertex -> problem vertex
};

inline NormalizedProblem normalize_problem(const SignedGraph& g, EdgeId a, EdgeId b) {
    const Edge ea = g.edge(a);
    const Edge eb = g.edge(b);
    if (a == b) throw Error(ErrorCode::SameEdge, "distinguished edges must differ");
    NormalizedProblem p;
    if (ea.same_ends(eb)) {
        p.kind = NormalizedProblem::Kind::ParallelPair;
        return p;
    }
    std::vector<EdgeId> doomed;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        EdgeId e = eid(i);
        if (e == a || e == b) continue;
        if (es[i].same_ends(ea) || es[i].same_ends(eb)) doomed.push_back(e);
    }
    auto pruned = delete_edges(g, doomed);
    const EdgeId pa = *pruned.map.edge[a.index];
    const EdgeId pb = *pruned.map.edge[b.index];
    auto tree = blocks(pruned.graph);
    if (!tree.same_block(pa, pb)) {
        p.kind = NormalizedProblem::Kind::Vacuous;
        return p;
    }
    std::vector<EdgeId> pruned_to_g(pruned.graph.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (pruned.map.edge[i]) pruned_to_g[pruned.map.edge[i]->index] = eid(i);
    }
    const auto& block = tree.blocks[tree.block_of_edge[pa.index]];
    auto sub = edge_subgraph(pruned.graph, block);
    p.core = std::move(sub.graph);
    p.vertex_origin = std::move(sub.vertex_origin);  // delete_edges keeps vertex ids
    for (std::size_t i = 0; i < sub.edge_origin.size(); ++i) {
        EdgeId original = pruned_to_g[sub.edge_origin[i].index];
        p.edge_origin.push_back(original);
        if (original == a) p.first = eid(i);
        if (original == b) p.second = eid(i);
    }
    return p;
}

// ---------------------------------------------------------------- splitting

/// A subproblem produced by a split. `core_edge` maps each edge of `graph` to the
/// parent's core edge it copies; markers map to nullopt.
struct ChildProblem {
    SignedGraph graph;
    EdgeId first;
    EdgeId second;
    std::vector<std::optional<EdgeId>> core_edge;
};

namespace detail {

inline bool contains_id(std::span<const EdgeId> sorted, EdgeId e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

inline std::vector<EdgeId> complement(const SignedGraph& g, std::span<const EdgeId> sorted_side) {
    std::vector<EdgeId> rest;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (!contains_id(sorted_side, eid(i))) rest.push_back(eid(i));
    }
    return rest;
}

// Kept edges (increasing core id) plus markers between u and v, in the given order.
inline ChildProblem make_child(const SignedGraph& core, std::span<const EdgeId> kept, VertexId u, VertexId v,
                               std::span<const Sign> markers, std::vector<EdgeId>& marker_ids) {
    const std::array<VertexId, 2> ends{u, v};
    auto sub = edge_subgraph(core, kept, ends);
    ChildProblem c;
    c.graph = std::move(sub.graph);
    for (EdgeId e : sub.edge_origin) c.core_edge.emplace_back(e);
    for (Sign s : markers) {
        marker_ids.push_back(c.graph.add_edge(*sub.vertex_map[u.index], *sub.vertex_map[v.index], s));
        c.core_edge.emplace_back(std::nullopt);
    }
    return c;
}

inline std::optional<EdgeId> child_id(const ChildProblem& c, EdgeId core_edge) {
    for (std::size_t i = 0; i < c.core_edge.size(); ++i) {
        if (c.core_edge[i] == core_edge) return eid(i);
    }
    return std::nullopt;
}

}  // namespace detail

/// Edges of the side that a part-2/3 split replaces.
inline std::vector<EdgeId> replaced_edges(const SignedGraph& core, const SplitSpec& s) {
    return s.replace_side ? s.side : detail::complement(core, s.side);
}

/// Builds the child problems of a split. Part 1: the side holding `a` plus a positive
/// marker (distinguished a, marker), then the other side likewise for b. Parts 2/3: the
/// kept side plus a marker of the replaced side's u-v path sign, or a +/- marker pair.
inline std::vector<ChildProblem> split_children(const SignedGraph& core, EdgeId a, EdgeId b, const SplitSpec& s) {
    const auto rest = detail::complement(core, s.side);
    std::vector<ChildProblem> out;
    std::vector<EdgeId> markers;
    if (s.part == SplitPart::Separated) {
        const bool a_in_side = detail::contains_id(s.side, a);
        const auto& with_a = a_in_side ? s.side : rest;
        const auto& with_b = a_in_side ? rest : s.side;
        const std::array plus{Sign::Positive};
        auto c0 = detail::make_child(core, with_a, s.u, s.v, plus, markers);
        c0.first = *detail::child_id(c0, a);
        c0.second = markers.back();
        auto c1 = detail::make_child(core, with_b, s.u, s.v, plus, markers);
        c1.first = *detail::child_id(c1, b);
        c1.second = markers.back();
        out.push_back(std::move(c0));
        out.push_back(std::move(c1));
        return out;
    }
    const auto& kept = s.replace_side ? rest : s.side;
    std::vector<Sign> marker_signs;
    if (s.part == SplitPart::BalancedSide) {
        const std::array<VertexId, 2> ends{s.u, s.v};
        auto sub = edge_subgraph(core, replaced_edges(core, s), ends);
        const auto& theta = s.side_signing.value();
        marker_signs.push_back(theta[*sub.vertex_map[s.u.index]] * theta[*sub.vertex_map[s.v.index]]);
    } else {
        marker_signs = {Sign::Positive, Sign::Negative};
    }
    auto c = detail::make_child(core, kept, s.u, s.v, marker_signs, markers);
    c.first = *detail::child_id(c, a);
    c.second = *detail::child_id(c, b);
    out.push_back(std::move(c));
    return out;
}

// ---------------------------------------------------------------- leaves

enum class LeafCase { ParallelCut = 1, CommonVertex = 2, BalancedRemainder = 3, Small, Untied };

struct LeafVerdict {
    LeafCase kind = LeafCase::Untied;
    std::optional<Sign> sign;  // common sign when tied
    std::variant<std::monostate, SmallLeafRecord, ParallelCutRecord, CommonVertexRecord, BalancedRemainderRecord>
        record;

    bool tied() const noexcept { return kind != LeafCase::Untied; }
};

/// sign(a) sign(b) times theta over the four endpoints: the sign of every cycle made of
/// a, b and two paths inside a subgraph balanced under theta.
inline Sign through_pair_sign(const SignedGraph& g, EdgeId a, EdgeId b, const VertexSigning& theta) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    return ea.sign * eb.sign * theta[ea.u] * theta[ea.v] * theta[eb.u] * theta[eb.v];
}

namespace detail {

inline std::optional<ParallelCutRecord> find_parallel_cut(const SignedGraph& g, EdgeId a, EdgeId b) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<EdgeId>> classes;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        auto key = std::minmax(es[i].u.index, es[i].v.index);
        classes[{key.first, key.second}].push_back(eid(i));
    }
    std::vector<std::vector<EdgeId>> ordered;
    for (auto& [k, list] : classes) ordered.push_back(list);
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });

    for (const auto& F : ordered) {
        if (contains_id(F, a) || contains_id(F, b)) continue;
        bool pos = false, neg = false;
        for (EdgeId e : F) (g.sign(e) == Sign::Positive ? pos : neg) = true;
        if (!pos || !neg) continue;
        std::vector<EdgeId> fplus = F;
        fplus.push_back(a);
        fplus.push_back(b);
        std::sort(fplus.begin(), fplus.end());
        auto rest = delete_edges(g, fplus).graph;

        std::size_t count = 0;
        auto label = component_labels(rest, rest.incidence(), std::vector<bool>(rest.vertex_count(), false), &count);
        // 2-colour the components so that every edge of F+ crosses.
        std::vector<std::vector<std::size_t>> adj(count);
        bool ok = true;
        for (EdgeId e : fplus) {
            std::size_t x = *label[g.edge(e).u.index], y = *label[g.edge(e).v.index];
            if (x == y) ok = false;
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
        if (!ok) continue;
        std::vector<int> colour(count, -1);
        for (std::size_t s = 0; s < count && ok; ++s) {
            if (colour[s] >= 0) continue;
            colour[s] = 0;
            std::vector<std::size_t> stack{s};
            while (!stack.empty() && ok) {
                std::size_t x = stack.back();
                stack.pop_back();
                for (std::size_t y : adj[x]) {
                    if (colour[y] < 0) {
                        colour[y] = 1 - colour[x];
                        stack.push_back(y);
                    } else if (colour[y] == colour[x]) {
                        ok = false;
                    }
                }
            }
        }
        if (!ok) continue;
        auto balance = is_balanced(rest);
        if (!balance.balanced()) continue;
        ParallelCutRecord r;
        r.parallel_class = F;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (colour[*label[v]] == 1) r.cut_side.push_back(vid(v));
        }
        r.signing = balance.signing();
        return r;
    }
    return std::nullopt;
}

inline std::optional<VertexId> shared_vertex(const SignedGraph& g, EdgeId a, EdgeId b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    if (eb.touches(ea.u)) return ea.u;
    if (eb.touches(ea.v)) return ea.v;
    return std::nullopt;
}

}  // namespace detail

/// Leaf decision. Graphs with at most `small_leaf_threshold` vertices are enumerated;
/// larger ones must be 3-connected and are tied iff one of three structures appears:
/// a mixed-sign parallel class F with F + {a, b} an edge cut and the remainder balanced;
/// a shared endpoint v of a, b with g - v balanced; or g - {a, b} balanced.
inline LeafVerdict check_leaf(const SignedGraph& g, EdgeId a, EdgeId b, const DecideOptions& opts = {}) {
    g.check_edge(a);
    g.check_edge(b);
    if (a == b) throw Error(ErrorCode::PreconditionViolated, "distinguished edges must differ");
    if (parallel_class(g, a).size() != 1 || parallel_class(g, b).size() != 1) {
        throw Error(ErrorCode::PreconditionViolated, "a distinguished edge has a parallel edge");
    }
    LeafVerdict out;
    if (g.vertex_count() <= opts.small_leaf_threshold) {
        auto report = enumerate_common_cycles(g, a, b);
        if (!report.complete) throw Error(ErrorCode::BudgetExhausted, "small leaf enumeration hit its budget");
        if (report.positive_count > 0 && report.negative_count > 0) return out;
        if (report.cycles.empty()) throw Error(ErrorCode::PreconditionViolated, "leaf has no cycle through both edges");
        out.kind = LeafCase::Small;
        out.sign = report.positive_count > 0 ? Sign::Positive : Sign::Negative;
        out.record = SmallLeafRecord{};
        return out;
    }
    if (!is_3_connected(g)) throw Error(ErrorCode::PreconditionViolated, "leaf is not 3-connected");

    if (auto cut = detail::find_parallel_cut(g, a, b)) {
        out.kind = LeafCase::ParallelCut;
        out.sign = through_pair_sign(g, a, b, cut->signing);
        out.record = std::move(*cut);
        return out;
    }
    if (auto v = detail::shared_vertex(g, a, b)) {
        auto minus = delete_vertex(g, *v);
        auto balance = is_balanced(minus.graph);
        if (balance.balanced()) {
            const auto& theta = balance.signing();
            VertexId x = *minus.map.vertex[g.edge(a).other(*v).index];
            VertexId y = *minus.map.vertex[g.edge(b).other(*v).index];
            out.kind = LeafCase::CommonVertex;
            out.sign = g.sign(a) * g.sign(b) * theta[x] * theta[y];
            out.record = CommonVertexRecord{*v, theta};
            return out;
        }
    }
    const std::array pair{a, b};
    auto balance = is_balanced(delete_edges(g, pair).graph);
    if (balance.balanced()) {
        out.kind = LeafCase::BalancedRemainder;
        out.sign = through_pair_sign(g, a, b, balance.signing());
        out.record = BalancedRemainderRecord{balance.signing()};
        return out;
    }
    return out;
}

// ---------------------------------------------------------------- reduction tree

struct ReductionNode {
    SignedGraph graph;  // the problem as posed to this node
    EdgeId first;
    EdgeId second;
    /// graph edge -> parent's core edge (nullopt for markers); empty at the root.
    std::vector<std::optional<EdgeId>> parent_core_edge;

    NormalizedProblem normalized;
    std::optional<SplitSpec> split;
    std::vector<ReductionNode> children;

    // Filled in by decide_tied.
    std::optional<LeafVerdict> leaf;
    VerdictKind outcome = VerdictKind::TiedVacuous;
    std::optional<Sign> outcome_sign;

    bool is_leaf() const noexcept { return normalized.kind == NormalizedProblem::Kind::Core && !split; }
};

using ReductionTree = ReductionNode;

namespace detail {

inline ReductionNode reduce_node(SignedGraph graph, EdgeId a, EdgeId b, const DecideOptions& opts) {
    ReductionNode node;
    node.graph = std::move(graph);
    node.first = a;
    node.second = b;
    node.normalized = normalize_problem(node.graph, a, b);
    if (node.normalized.kind != NormalizedProblem::Kind::Core) return node;
    const SignedGraph& core = node.normalized.core;
    if (core.vertex_count() <= opts.small_leaf_threshold) return node;
    auto sep = find_proper_2_separation(core);
    if (!sep) return node;

    const EdgeId ca = node.normalized.first;
    const EdgeId cb = node.normalized.second;
    SplitSpec spec;
    spec.u = sep->u;
    spec.v = sep->v;
    spec.side = sep->side1;
    const bool a_side = contains_id(spec.side, ca);
    const bool b_side = contains_id(spec.side, cb);
    if (a_side != b_side) {
        spec.part = SplitPart::Separated;
    } else {
        spec.replace_side = !a_side;
        const std::array<VertexId, 2> ends{spec.u, spec.v};
        auto replaced = edge_subgraph(core, replaced_edges(core, spec), ends);
        auto balance = is_balanced(replaced.graph);
        if (balance.balanced()) {
            spec.part = SplitPart::BalancedSide;
            spec.side_signing = balance.signing();
        } else {
            spec.part = SplitPart::UnbalancedSide;
        }
    }
    for (auto& child : split_children(core, ca, cb, spec)) {
        auto sub = reduce_node(std::move(child.graph), child.first, child.second, opts);
        sub.parent_core_edge = std::move(child.core_edge);
        node.children.push_back(std::move(sub));
    }
    node.split = std::move(spec);
    return node;
}

}  // namespace detail

/// Recursively splits across proper 2-separations (lexicographically first boundary)
/// until every leaf is small or 3-connected. Leaves are not evaluated here.
inline ReductionTree reduce(const SignedGraph& g, EdgeId e1, EdgeId e2, const DecideOptions& opts = {}) {
    g.check_edge(e1);
    g.check_edge(e2);
    if (e1 == e2) throw Error(ErrorCode::SameEdge, "distinguished edges must differ");
    if (opts.small_leaf_threshold < 3) throw Error(ErrorCode::BadParams, "small_leaf_threshold must be >= 3");
    return detail::reduce_node(g, e1, e2, opts);
}

// ---------------------------------------------------------------- witnesses

struct WitnessBudget {
    std::size_t remaining = 0;
    bool exhausted = false;
};

namespace detail {

// A cycle through a and b of sign `wanted`: DFS over paths from one end of a to the
// other that pick up b.
inline std::optional<std::vector<EdgeId>> search_common_cycle(const SignedGraph& g, EdgeId a, EdgeId b,
                                                              std::optional<Sign> wanted, WitnessBudget& budget) {
    const Edge ea = g.edge(a);
    auto inc = g.incidence();
    std::vector<bool> on_path(g.vertex_count(), false);
    std::vector<EdgeId> path;
    std::optional<std::vector<EdgeId>> found;
    bool has_b = false;
    auto dfs = [&](auto&& self, VertexId x, Sign s) -> bool {
        if (budget.remaining == 0) {
            budget.exhausted = true;
            return true;
        }
        --budget.remaining;
        if (x == ea.u) {
            if (has_b && (!wanted || s * ea.sign == *wanted)) {
                found = path;
                found->push_back(a);
                return true;
            }
            return false;
        }
        for (EdgeId e : inc[x.index]) {
            if (e == a) continue;
            VertexId y = g.edge(e).other(x);
            if (on_path[y.index]) continue;
            on_path[y.index] = true;
            path.push_back(e);
            if (e == b) has_b = true;
            if (self(self, y, s * g.sign(e))) return true;
            if (e == b) has_b = false;
            path.pop_back();
            on_path[y.index] = false;
        }
        return false;
    };
    on_path[ea.v.index] = true;
    dfs(dfs, ea.v, Sign::Positive);
    return found;
}

inline bool can_have(const ReductionNode& n, Sign s) {
    if (n.outcome == VerdictKind::Untied) return true;
    return n.outcome == VerdictKind::Tied && n.outcome_sign == s;
}

inline std::vector<EdgeId> core_to_graph(const ReductionNode& n, std::span<const EdgeId> core_edges) {
    std::vector<EdgeId> out;
    for (EdgeId e : core_edges) out.push_back(n.normalized.edge_origin[e.index]);
    return out;
}

// Replaces a marker of a part-2/3 split by a u-v path of sign `s` inside the replaced side.
inline std::optional<std::vector<EdgeId>> marker_path(const ReductionNode& n, Sign s, WitnessBudget& budget) {
    const SplitSpec& spec = *n.split;
    const auto& core = n.normalized.core;
    const std::array<VertexId, 2> ends{spec.u, spec.v};
    auto sub = edge_subgraph(core, replaced_edges(core, spec), ends);
    auto search = find_signed_path(sub.graph, *sub.vertex_map[spec.u.index], *sub.vertex_map[spec.v.index], s,
                                   budget.remaining);
    budget.remaining = search.nodes >= budget.remaining ? 0 : budget.remaining - search.nodes;
    if (search.exhausted) budget.exhausted = true;
    if (!search.path) return std::nullopt;
    std::vector<EdgeId> out;
    for (EdgeId e : search.path->edges) out.push_back(sub.edge_origin[e.index]);
    return out;
}

inline std::optional<std::vector<EdgeId>> realize(const ReductionNode& n, std::optional<Sign> wanted,
                                                  WitnessBudget& budget);

// Lifts a cycle of child `ci` (child graph ids) to a cycle of n.graph.
inline std::optional<std::vector<EdgeId>> lift_from_child(const ReductionNode& n, std::size_t ci,
                                                          std::span<const EdgeId> child_cycle,
                                                          WitnessBudget& budget) {
    const SplitSpec& spec = *n.split;
    const ReductionNode& child = n.children[ci];
    std::vector<EdgeId> core_edges;
    std::vector<EdgeId> markers;
    for (EdgeId e : child_cycle) {
        if (auto c = child.parent_core_edge[e.index]) {
            core_edges.push_back(*c);
        } else {
            markers.push_back(e);
        }
    }
    if (spec.part == SplitPart::Separated) {
        const ReductionNode& sibling = n.children[1 - ci];
        auto other = realize(sibling, std::nullopt, budget);
        if (!other) return std::nullopt;
        for (EdgeId e : *other) {
            if (auto c = sibling.parent_core_edge[e.index]) core_edges.push_back(*c);
        }
    } else {
        for (EdgeId m : markers) {
            auto path = marker_path(n, child.graph.sign(m), budget);
            if (!path) return std::nullopt;
            core_edges.insert(core_edges.end(), path->begin(), path->end());
        }
    }
    return core_to_graph(n, core_edges);
}

inline std::optional<std::vector<EdgeId>> realize(const ReductionNode& n, std::optional<Sign> wanted,
                                                  WitnessBudget& budget) {
    using Kind = NormalizedProblem::Kind;
    if (n.normalized.kind == Kind::Vacuous) return std::nullopt;
    if (n.normalized.kind == Kind::ParallelPair) {
        if (wanted && n.graph.sign(n.first) * n.graph.sign(n.second) != *wanted) return std::nullopt;
        return std::vector<EdgeId>{n.first, n.second};
    }
    if (wanted && !can_have(n, *wanted)) return std::nullopt;
    if (n.is_leaf()) {
        auto c = search_common_cycle(n.normalized.core, n.normalized.first, n.normalized.second, wanted, budget);
        if (!c) return std::nullopt;
        return core_to_graph(n, *c);
    }
    const SplitSpec& spec = *n.split;
    if (spec.part == SplitPart::Separated) {
        const ReductionNode& c0 = n.children[0];
        const ReductionNode& c1 = n.children[1];
        for (Sign s0 : {Sign::Positive, Sign::Negative}) {
            if (!can_have(c0, s0)) continue;
            std::optional<Sign> s1;
            if (wanted) {
                s1 = *wanted * s0;
                if (!can_have(c1, *s1)) continue;
            }
            auto left = realize(c0, s0, budget);
            if (!left) continue;
            auto right = realize(c1, s1, budget);
            if (!right) continue;
            std::vector<EdgeId> core_edges;
            for (EdgeId e : *left) {
                if (auto c = c0.parent_core_edge[e.index]) core_edges.push_back(*c);
            }
            for (EdgeId e : *right) {
                if (auto c = c1.parent_core_edge[e.index]) core_edges.push_back(*c);
            }
            return core_to_graph(n, core_edges);
        }
        return std::nullopt;
    }
    auto inner = realize(n.children[0], wanted, budget);
    if (!inner) return std::nullopt;
    return lift_from_child(n, 0, *inner, budget);
}

// Every same-sign parallel copy replaced by the smallest id, then canonical cycle order.
inline Cycle canonical_witness(const SignedGraph& g, std::vector<EdgeId> edges, EdgeId e1, EdgeId e2) {
    for (EdgeId& e : edges) {
        if (e == e1 || e == e2) continue;
        for (EdgeId p : parallel_class(g, e)) {
            if (g.sign(p) == g.sign(e) && p != e1 && p != e2) {
                e = p;
                break;
            }
        }
    }
    return make_cycle(g, edges);
}

}  // namespace detail

/// Maps a pair of opposite-sign cycles found at the leaf reached by `leaf_path` (child
/// indices from the root) to the root graph. Markers are replaced by signed paths in
/// the side they stand for; across part-1 splits the sibling contributes any cycle
/// through its marker, so the lifted cycles are labelled by their actual sign. Throws BudgetExhausted when a search runs out of budget.
inline Witness lift_witness(const ReductionTree& tree, std::span<const std::size_t> leaf_path,
                            const Witness& leaf_witness, std::size_t budget = 1'000'000) {
    std::vector<const ReductionNode*> chain{&tree};
    for (std::size_t i : leaf_path) chain.push_back(&chain.back()->children.at(i));
    const ReductionNode& leaf = *chain.back();
    auto to_graph = [&](const Cycle& c) {
        if (leaf.normalized.kind == NormalizedProblem::Kind::Core) return detail::core_to_graph(leaf, c.edges);
        return c.edges;
    };
    std::vector<EdgeId> pos = to_graph(leaf_witness.positive);
    std::vector<EdgeId> neg = to_graph(leaf_witness.negative);
    WitnessBudget wb{budget, false};
    for (std::size_t depth = leaf_path.size(); depth-- > 0;) {
        const ReductionNode& parent = *chain[depth];
        auto p = detail::lift_from_child(parent, leaf_path[depth], pos, wb);
        auto q = detail::lift_from_child(parent, leaf_path[depth], neg, wb);
        if (!p || !q) {
            throw Error(wb.exhausted ? ErrorCode::BudgetExhausted : ErrorCode::PreconditionViolated,
                        "could not lift witness through split");
        }
        pos = std::move(*p);
        neg = std::move(*q);
    }
    // a negative sibling across a part-1 split flips both signs
    if (edges_sign(tree.graph, pos) == Sign::Negative) std::swap(pos, neg);
    return Witness{make_cycle(tree.graph, pos), make_cycle(tree.graph, neg)};
}

namespace detail {

// Evaluates leaves bottom-up, records outcomes on the nodes, and returns the
// certificate for the subtree.
inline CertificateNode evaluate(ReductionNode& n, const DecideOptions& opts) {
    using Kind = NormalizedProblem::Kind;
    if (n.normalized.kind == Kind::ParallelPair) {
        n.outcome = VerdictKind::Tied;
        n.outcome_sign = n.graph.sign(n.first) * n.graph.sign(n.second);
        return {ParallelPairRecord{}};
    }
    if (n.normalized.kind == Kind::Vacuous) {
        n.outcome = VerdictKind::TiedVacuous;
        return {VacuousRecord{}};
    }
    if (n.is_leaf()) {
        n.leaf = check_leaf(n.normalized.core, n.normalized.first, n.normalized.second, opts);
        n.outcome = n.leaf->tied() ? VerdictKind::Tied : VerdictKind::Untied;
        n.outcome_sign = n.leaf->sign;
        CertificateNode c;
        std::visit(
            [&](const auto& r) {
                if constexpr (!std::is_same_v<std::decay_t<decltype(r)>, std::monostate>) c.body = r;
            },
            n.leaf->record);
        return c;
    }
    SplitRecord rec;
    rec.spec = *n.split;
    for (auto& child : n.children) rec.children.push_back(evaluate(child, opts));
    if (rec.spec.part == SplitPart::Separated) {
        const auto& c0 = n.children[0];
        const auto& c1 = n.children[1];
        if (c0.outcome == VerdictKind::Untied || c1.outcome == VerdictKind::Untied) {
            n.outcome = VerdictKind::Untied;
        } else if (c0.outcome == VerdictKind::TiedVacuous || c1.outcome == VerdictKind::TiedVacuous) {
            n.outcome = VerdictKind::TiedVacuous;
        } else {
            n.outcome = VerdictKind::Tied;
            n.outcome_sign = *c0.outcome_sign * *c1.outcome_sign;
        }
    } else {
        n.outcome = n.children[0].outcome;
        n.outcome_sign = n.children[0].outcome_sign;
    }
    return {std::move(rec)};
}

}  // namespace detail

struct Decision {
    Verdict verdict;
    ReductionTree tree;
};

/// Full pipeline keeping the evaluated reduction tree.
inline Decision decide_with_tree(const SignedGraph& g, EdgeId e1, EdgeId e2, const DecideOptions& opts = {}) {
    Decision d{{}, reduce(g, e1, e2, opts)};
    CertificateNode cert = detail::evaluate(d.tree, opts);
    Verdict& v = d.verdict;
    v.kind = d.tree.outcome;
    if (v.kind == VerdictKind::Tied) v.common_sign = d.tree.outcome_sign;
    if (v.kind != VerdictKind::Untied) {
        v.certificate = std::move(cert);
        return d;
    }
    WitnessBudget budget{opts.witness_budget, false};
    auto pos = detail::realize(d.tree, Sign::Positive, budget);
    auto neg = detail::realize(d.tree, Sign::Negative, budget);
    if (pos && neg) {
        v.witness = Witness{detail::canonical_witness(g, *pos, e1, e2), detail::canonical_witness(g, *neg, e1, e2)};
    } else if (budget.exhausted) {
        v.witness_exhausted = true;
    } else {
        throw std::logic_error("untied verdict but no witness cycle exists");
    }
    return d;
}

/// Tied / untied with a certificate (reduction record) or witness (two cycles).
inline Verdict decide_tied(const SignedGraph& g, EdgeId e1, EdgeId e2, const DecideOptions& opts = {}) {
    return decide_with_tree(g, e1, e2, opts).verdict;
}

// ---------------------------------------------------------------- three edges

enum class ThreeEdgeAnswer { CycleExists, NoCycleCommonVertex, NoCycleDisconnecting };

inline const char* to_string(ThreeEdgeAnswer a) {
    switch (a) {
        case ThreeEdgeAnswer::CycleExists: return "cycle_exists";
        case ThreeEdgeAnswer::NoCycleCommonVertex: return "no_cycle(common_vertex)";
        case ThreeEdgeAnswer::NoCycleDisconnecting: return "no_cycle(disconnecting)";
    }
    return "?";
}

/// For a simple 3-connected graph: no cycle through all three edges iff they share
/// an endpoint or their removal disconnects the graph.
inline ThreeEdgeAnswer lovasz_three_edges(const SignedGraph& g, EdgeId e1, EdgeId e2, EdgeId e3) {
    const std::array es{e1, e2, e3};
    for (EdgeId e : es) g.check_edge(e);
    if (e1 == e2 || e1 == e3 || e2 == e3) throw Error(ErrorCode::PreconditionViolated, "edges must be distinct");
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (parallel_class(g, eid(i)).size() != 1) throw Error(ErrorCode::PreconditionViolated, "graph is not simple");
    }
    if (!is_3_connected(g)) throw Error(ErrorCode::PreconditionViolated, "graph is not 3-connected");
    const Edge& a = g.edge(e1);
    for (VertexId x : {a.u, a.v}) {
        if (g.edge(e2).touches(x) && g.edge(e3).touches(x)) return ThreeEdgeAnswer::NoCycleCommonVertex;
    }
    if (!is_connected(delete_edges(g, es).graph)) return ThreeEdgeAnswer::NoCycleDisconnecting;
    return ThreeEdgeAnswer::CycleExists;
}

}  // namespace sg
