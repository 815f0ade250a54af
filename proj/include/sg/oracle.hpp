// Ground truth by exhaustive search: every cycle through two given edges, and the
// three-edge cycle question.
#pragma once

#include "sg/core.hpp"
#include "sg/verdict.hpp"

namespace sg {

inline constexpr std::size_t default_oracle_budget = 1'000'000;

struct CommonCycleReport {
    std::vector<Cycle> cycles;  // sorted by sorted edge-id list
    std::size_t positive_count = 0;
    std::size_t negative_count = 0;
    bool complete = true;
};

namespace detail {

class PathEnumerator {
public:
    PathEnumerator(const SignedGraph& g, std::size_t budget) : g_(g), inc_(g.incidence()), budget_(budget) {}

    bool exhausted() const noexcept { return exhausted_; }

    // Calls visit(path_edges) for every simple path from `from` to `to` that avoids
    // `blocked` vertices. Stops early if visit returns false.
    template <typename Visit>
    void paths(VertexId from, VertexId to, std::vector<bool>& blocked, Visit&& visit) {
        std::vector<EdgeId> path;
        blocked[from.index] = true;
        walk(from, to, blocked, path, visit);
        blocked[from.index] = false;
    }

private:
    template <typename Visit>
    bool walk(VertexId x, VertexId to, std::vector<bool>& blocked, std::vector<EdgeId>& path, Visit& visit) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (x == to) return visit(path);
        for (EdgeId e : inc_[x.index]) {
            VertexId y = g_.edge(e).other(x);
            if (blocked[y.index]) continue;
            blocked[y.index] = true;
            path.push_back(e);
            bool go_on = walk(y, to, blocked, path, visit);
            path.pop_back();
            blocked[y.index] = false;
            if (!go_on) return false;
        }
        return true;
    }

    const SignedGraph& g_;
    std::vector<std::vector<EdgeId>> inc_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
};

inline std::vector<EdgeId> sorted_ids(const std::vector<EdgeId>& es) {
    auto s = es;
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace detail

/// All cycles containing both e1 and e2. With e1 = ab and e2 disjoint from it, a
/// cycle is e1, a path from b to an end t of e2, e2, and a path from the other end
/// of e2 back to a that avoids the first path.
inline CommonCycleReport enumerate_common_cycles(const SignedGraph& g, EdgeId e1, EdgeId e2,
                                                 std::size_t budget = default_oracle_budget) {
    const Edge first = g.edge(e1);
    const Edge second = g.edge(e2);
    if (e1 == e2) throw Error(ErrorCode::SameEdge, "enumerate_common_cycles needs distinct edges");
    CommonCycleReport report;
    std::vector<std::vector<EdgeId>> found;
    detail::PathEnumerator walker(g, budget);
    std::vector<bool> blocked(g.vertex_count(), false);

    if (first.same_ends(second)) {
        found.push_back({e1, e2});
    } else if (first.touches(second.u) || first.touches(second.v)) {
        VertexId shared = first.touches(second.u) ? second.u : second.v;
        VertexId x = first.other(shared);
        VertexId y = second.other(shared);
        blocked[shared.index] = true;
        walker.paths(x, y, blocked, [&](const std::vector<EdgeId>& p) {
            auto c = p;
            c.push_back(e1);
            c.push_back(e2);
            found.push_back(std::move(c));
            return true;
        });
    } else {
        const VertexId a = first.u, b = first.v;
        for (VertexId t : {second.u, second.v}) {
            VertexId t2 = second.other(t);
            blocked[a.index] = blocked[t2.index] = true;
            walker.paths(b, t, blocked, [&](const std::vector<EdgeId>& p1) {
                std::vector<bool> used(g.vertex_count(), false);
                used[b.index] = true;
                for (EdgeId e : p1) {
                    used[g.edge(e).u.index] = used[g.edge(e).v.index] = true;
                }
                walker.paths(t2, a, used, [&](const std::vector<EdgeId>& p2) {
                    auto c = p1;
                    c.insert(c.end(), p2.begin(), p2.end());
                    c.push_back(e1);
                    c.push_back(e2);
                    found.push_back(std::move(c));
                    return true;
                });
                return !walker.exhausted();
            });
            blocked[a.index] = blocked[t2.index] = false;
        }
    }

    report.complete = !walker.exhausted();
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
        return detail::sorted_ids(x) < detail::sorted_ids(y);
    });
    for (const auto& edges : found) {
        Cycle c = make_cycle(g, edges);
        (edges_sign(g, c.edges) == Sign::Positive ? report.positive_count : report.negative_count)++;
        report.cycles.push_back(std::move(c));
    }
    return report;
}

/// Tied/untied straight from the definition. Throws BudgetExhausted when the
/// enumeration could not finish.
inline Verdict oracle_tied(const SignedGraph& g, EdgeId e1, EdgeId e2, std::size_t budget = default_oracle_budget) {
    auto report = enumerate_common_cycles(g, e1, e2, budget);
    if (!report.complete) throw Error(ErrorCode::BudgetExhausted, "cycle enumeration hit its node budget");
    Verdict v;
    if (report.cycles.empty()) {
        v.kind = VerdictKind::TiedVacuous;
        return v;
    }
    if (report.positive_count > 0 && report.negative_count > 0) {
        v.kind = VerdictKind::Untied;
        Witness w;
        bool have_pos = false, have_neg = false;
        for (const auto& c : report.cycles) {
            bool pos = edges_sign(g, c.edges) == Sign::Positive;
            if (pos && !have_pos) {
                w.positive = c;
                have_pos = true;
            } else if (!pos && !have_neg) {
                w.negative = c;
                have_neg = true;
            }
        }
        v.witness = std::move(w);
        return v;
    }
    v.kind = VerdictKind::Tied;
    v.common_sign = report.positive_count > 0 ? Sign::Positive : Sign::Negative;
    return v;
}

struct ThreeEdgeSearch {
    std::optional<Cycle> cycle;
    bool complete = true;
};

/// Some cycle through e1, e2 and e3: a path from one end of e1 back to the other
/// that picks up e2 and e3.
inline ThreeEdgeSearch cycle_through_three(const SignedGraph& g, EdgeId e1, EdgeId e2, EdgeId e3,
                                           std::size_t budget = default_oracle_budget) {
    g.check_edge(e1);
    g.check_edge(e2);
    g.check_edge(e3);
    if (e1 == e2 || e1 == e3 || e2 == e3) throw Error(ErrorCode::SameEdge, "cycle_through_three needs distinct edges");
    const Edge first = g.edge(e1);
    ThreeEdgeSearch result;
    detail::PathEnumerator walker(g, budget);
    std::vector<bool> blocked(g.vertex_count(), false);
    walker.paths(first.v, first.u, blocked, [&](const std::vector<EdgeId>& p) {
        bool has2 = std::find(p.begin(), p.end(), e2) != p.end();
        bool has3 = std::find(p.begin(), p.end(), e3) != p.end();
        if (!has2 || !has3) return true;
        auto c = p;
        c.push_back(e1);
        result.cycle = make_cycle(g, c);
        return false;
    });
    result.complete = result.cycle.has_value() || !walker.exhausted();
    return result;
}

}  // namespace sg
