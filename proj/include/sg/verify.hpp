// Independent checking of decide_tied output: witness cycles for untied verdicts,
// replay of the reduction record for tied ones.
#pragma once

#include "sg/balance.hpp"
#include "sg/connectivity.hpp"
#include "sg/decide.hpp"
#include "sg/oracle.hpp"
#include "sg/verdict.hpp"

namespace sg {

struct VerifyResult {
    bool ok = true;
    std::string reason;  // first failure; empty when ok

    explicit operator bool() const noexcept { return ok; }
};

namespace detail {

struct VerifyFailure {
    std::string reason;
};

[[noreturn]] inline void fail(std::string reason) { throw VerifyFailure{std::move(reason)}; }

inline void need(bool cond, const std::string& reason) {
    if (!cond) fail(reason);
}

inline std::string edge_str(EdgeId e) { return std::to_string(e.index); }

template <typename Id>
bool strictly_ascending(const std::vector<Id>& ids) {
    return std::adjacent_find(ids.begin(), ids.end(), [](Id x, Id y) { return !(x < y); }) == ids.end();
}

inline void check_signing(const SignedGraph& g, const VertexSigning& s, const std::string& what) {
    need(s.theta.size() == g.vertex_count(), what + " signing has " + std::to_string(s.theta.size()) +
                                                 " entries for " + std::to_string(g.vertex_count()) + " vertices");
    if (auto bad = s.first_violation(g)) fail(what + " signing violated at edge " + edge_str(*bad));
    need(is_normalized_signing(g, s), what + " signing is not normalized");
}

struct Outcome {
    VerdictKind kind;
    std::optional<Sign> sign;
};

inline Outcome replay(const SignedGraph& g, EdgeId a, EdgeId b, const CertificateNode& node, std::size_t budget);

inline Outcome replay_core(const NormalizedProblem& p, const CertificateNode& node, std::size_t budget) {
    const SignedGraph& core = p.core;
    const EdgeId a = p.first;
    const EdgeId b = p.second;
    const std::size_t n = core.vertex_count();
    const std::size_t m = core.edge_count();

    if (std::holds_alternative<SmallLeafRecord>(node.body)) {
        auto report = enumerate_common_cycles(core, a, b, budget);
        need(report.complete, "small leaf enumeration did not complete");
        need(!(report.positive_count > 0 && report.negative_count > 0), "small leaf is untied");
        need(!report.cycles.empty(), "small leaf has no common cycle");
        return {VerdictKind::Tied, report.positive_count > 0 ? Sign::Positive : Sign::Negative};
    }
    if (const auto* r = std::get_if<ParallelCutRecord>(&node.body)) {
        const auto& F = r->parallel_class;
        need(!F.empty(), "parallel class is empty");
        for (EdgeId e : F) need(e.index < m, "parallel class edge " + edge_str(e) + " out of range");
        need(F == parallel_class(core, F.front()), "parallel class is not a full parallel class");
        need(!contains_id(F, a) && !contains_id(F, b), "parallel class contains a distinguished edge");
        bool pos = false, neg = false;
        for (EdgeId e : F) (core.sign(e) == Sign::Positive ? pos : neg) = true;
        need(pos && neg, "parallel class does not have both signs");
        need(strictly_ascending(r->cut_side), "cut side not strictly ascending");
        for (VertexId v : r->cut_side) need(v.index < n, "cut side vertex out of range");
        need(r->cut_side.empty() || r->cut_side.front().index != 0, "cut side must not contain vertex 0");
        std::vector<EdgeId> fplus = F;
        fplus.push_back(a);
        fplus.push_back(b);
        std::sort(fplus.begin(), fplus.end());
        need(edge_cut(core, SwitchSet(r->cut_side)) == fplus, "F+ is not the edge cut of the cut side");
        const SignedGraph rest = delete_edges(core, fplus).graph;
        check_signing(rest, r->signing, "parallel-cut");
        return {VerdictKind::Tied, through_pair_sign(core, a, b, r->signing)};
    }
    if (const auto* r = std::get_if<CommonVertexRecord>(&node.body)) {
        need(r->vertex.index < n, "common vertex out of range");
        need(core.edge(a).touches(r->vertex) && core.edge(b).touches(r->vertex),
             "vertex " + std::to_string(r->vertex.index) + " is not shared by both edges");
        auto minus = delete_vertex(core, r->vertex);
        check_signing(minus.graph, r->signing, "common-vertex");
        VertexId x = *minus.map.vertex[core.edge(a).other(r->vertex).index];
        VertexId y = *minus.map.vertex[core.edge(b).other(r->vertex).index];
        return {VerdictKind::Tied, core.sign(a) * core.sign(b) * r->signing[x] * r->signing[y]};
    }
    if (const auto* r = std::get_if<BalancedRemainderRecord>(&node.body)) {
        const std::array pair{a, b};
        check_signing(delete_edges(core, pair).graph, r->signing, "balanced-remainder");
        return {VerdictKind::Tied, through_pair_sign(core, a, b, r->signing)};
    }
    const auto* split = std::get_if<SplitRecord>(&node.body);
    need(split != nullptr, "record kind does not match a core problem");
    const SplitSpec& s = split->spec;
    need(s.u.index < n && s.v.index < n, "split boundary out of range");
    need(s.u < s.v, "split boundary must be ascending");
    need(!s.side.empty() && strictly_ascending(s.side), "split side not strictly ascending");
    for (EdgeId e : s.side) need(e.index < m, "split side edge " + edge_str(e) + " out of range");

    // The side must be exactly one component of core - {u, v} with all its edges.
    std::vector<bool> removed(n, false);
    removed[s.u.index] = removed[s.v.index] = true;
    std::size_t count = 0;
    auto label = component_labels(core, core.incidence(), removed, &count);
    std::optional<std::size_t> comp;
    for (EdgeId e : s.side) {
        for (VertexId x : {core.edge(e).u, core.edge(e).v}) {
            if (removed[x.index]) continue;
            need(!comp || *comp == *label[x.index], "split side spans several components");
            comp = label[x.index];
        }
    }
    need(comp.has_value(), "split side has no private vertex");
    need(count >= 2, "split boundary does not separate the core");
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& ed = core.edge(eid(i));
        bool in_comp = (label[ed.u.index] == comp) || (label[ed.v.index] == comp);
        need(in_comp == contains_id(s.side, eid(i)), "split side is not closed at edge " + std::to_string(i));
    }

    const bool a_side = contains_id(s.side, a);
    const bool b_side = contains_id(s.side, b);
    if (s.part == SplitPart::Separated) {
        need(a_side != b_side, "part 1 split with both edges on one side");
        need(!s.replace_side && !s.side_signing, "part 1 split carries replacement data");
    } else {
        need(a_side == b_side, "part 2/3 split separates the distinguished edges");
        need(s.replace_side == !a_side, "split replaces the side holding the distinguished edges");
        const std::array<VertexId, 2> ends{s.u, s.v};
        auto replaced = edge_subgraph(core, replaced_edges(core, s), ends);
        bool balanced = is_balanced(replaced.graph).balanced();
        if (s.part == SplitPart::BalancedSide) {
            need(balanced, "part 2 split but the replaced side is unbalanced");
            need(s.side_signing.has_value(), "part 2 split without a side signing");
            check_signing(replaced.graph, *s.side_signing, "side");
        } else {
            need(!balanced, "part 3 split but the replaced side is balanced");
            need(!s.side_signing, "part 3 split carries a side signing");
        }
    }
    auto children = split_children(core, a, b, s);
    need(children.size() == split->children.size(), "split has the wrong number of children");
    std::vector<Outcome> outs;
    for (std::size_t i = 0; i < children.size(); ++i) {
        outs.push_back(replay(children[i].graph, children[i].first, children[i].second, split->children[i], budget));
    }
    if (s.part != SplitPart::Separated) return outs[0];
    need(outs[0].kind == VerdictKind::Tied && outs[1].kind == VerdictKind::Tied, "part 1 child is vacuous");
    return {VerdictKind::Tied, *outs[0].sign * *outs[1].sign};
}

inline Outcome replay(const SignedGraph& g, EdgeId a, EdgeId b, const CertificateNode& node, std::size_t budget) {
    auto p = normalize_problem(g, a, b);
    switch (p.kind) {
        case NormalizedProblem::Kind::ParallelPair:
            need(std::holds_alternative<ParallelPairRecord>(node.body), "expected a parallel_pair record");
            return {VerdictKind::Tied, g.sign(a) * g.sign(b)};
        case NormalizedProblem::Kind::Vacuous:
            need(std::holds_alternative<VacuousRecord>(node.body), "expected a vacuous record");
            return {VerdictKind::TiedVacuous, std::nullopt};
        case NormalizedProblem::Kind::Core: break;
    }
    need(!std::holds_alternative<ParallelPairRecord>(node.body) && !std::holds_alternative<VacuousRecord>(node.body),
         "record kind does not match a core problem");
    return replay_core(p, node, budget);
}

inline void check_witness_cycle(const SignedGraph& g, EdgeId e1, EdgeId e2, const Cycle& c, Sign expected,
                                const std::string& name) {
    need(is_valid_cycle(g, c) && c.contains(e1), name + " witness not a cycle containing e1");
    need(c.contains(e2), name + " witness not a cycle containing e2");
    need(make_cycle(g, c.edges) == c, name + " witness is not in canonical order");
    need(edges_sign(g, c.edges) == expected, name + " witness has the wrong sign");
    for (EdgeId e : c.edges) {
        if (e == e1 || e == e2) continue;
        for (EdgeId p : parallel_class(g, e)) {
            if (p == e) break;
            need(g.sign(p) != g.sign(e) || p == e1 || p == e2,
                 name + " witness edge " + edge_str(e) + " is not the least same-sign parallel copy");
        }
    }
}

}  // namespace detail

/// Checks a verdict for (g, e1, e2) without trusting the code that produced it.
inline VerifyResult verify_certificate(const SignedGraph& g, EdgeId e1, EdgeId e2, const Verdict& v,
                                       std::size_t budget = default_oracle_budget) {
    using detail::need;
    try {
        need(g.has_edge(e1) && g.has_edge(e2), "distinguished edge out of range");
        need(e1 != e2, "distinguished edges are equal");
        if (v.kind == VerdictKind::Untied) {
            need(!v.certificate && !v.common_sign, "untied verdict carries tied data");
            need(v.witness.has_value(), "untied verdict has no witness");
            detail::check_witness_cycle(g, e1, e2, v.witness->positive, Sign::Positive, "positive");
            detail::check_witness_cycle(g, e1, e2, v.witness->negative, Sign::Negative, "negative");
            return {};
        }
        need(!v.witness, "tied verdict carries a witness");
        need(v.certificate.has_value(), "tied verdict has no certificate");
        auto out = detail::replay(g, e1, e2, *v.certificate, budget);
        need(out.kind == v.kind, std::string("certificate proves ") + to_string(out.kind) + ", verdict says " +
                                     to_string(v.kind));
        need(out.sign == v.common_sign, "common sign does not match the certificate");
        return {};
    } catch (const detail::VerifyFailure& f) {
        return {false, f.reason};
    } catch (const Error& e) {
        return {false, e.what()};
    }
}

}  // namespace sg
