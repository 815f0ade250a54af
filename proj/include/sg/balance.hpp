// Balance testing with certificates, signature equivalence and signed path search.
#pragma once

#include <deque>
#include <variant>

#include "sg/connectivity.hpp"
#include "sg/core.hpp"

namespace sg {

/// theta[v] for every vertex; certifies balance when sign(uv) = theta(u) * theta(v)
/// on every edge.
struct VertexSigning {
    std::vector<Sign> theta;

    Sign operator[](VertexId v) const { return theta.at(v.index); }

    std::optional<EdgeId> first_violation(const SignedGraph& g) const {
        if (theta.size() != g.vertex_count()) return eid(0);
        auto es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (es[i].sign != theta[es[i].u.index] * theta[es[i].v.index]) return eid(i);
        }
        return std::nullopt;
    }
    bool realizes(const SignedGraph& g) const {
        return theta.size() == g.vertex_count() && !first_violation(g);
    }
    friend bool operator==(const VertexSigning&, const VertexSigning&) = default;
};

/// Either a signing (balanced) or a negative cycle (unbalanced).
class BalanceResult {
public:
    explicit BalanceResult(VertexSigning s) : value_(std::move(s)) {}
    explicit BalanceResult(Cycle c) : value_(std::move(c)) {}

    bool balanced() const noexcept { return std::holds_alternative<VertexSigning>(value_); }
    const VertexSigning& signing() const { return std::get<VertexSigning>(value_); }
    const Cycle& witness() const { return std::get<Cycle>(value_); }

private:
    std::variant<VertexSigning, Cycle> value_;
};

namespace detail {

struct SpanningForest {
    std::vector<std::optional<EdgeId>> parent_edge;
    std::vector<std::size_t> depth;
    std::vector<Sign> theta;  // product of tree-edge signs from the component root
};

// BFS from the smallest vertex of every component, scanning incident edges by id.
inline SpanningForest spanning_forest(const SignedGraph& g) {
    const std::size_t n = g.vertex_count();
    SpanningForest f;
    f.parent_edge.assign(n, std::nullopt);
    f.depth.assign(n, 0);
    f.theta.assign(n, Sign::Positive);
    std::vector<bool> seen(n, false);
    auto inc = g.incidence();
    std::deque<std::size_t> queue;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        queue.push_back(root);
        while (!queue.empty()) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (EdgeId e : inc[x]) {
                const Edge& ed = g.edge(e);
                std::size_t y = ed.other(vid(x)).index;
                if (seen[y]) continue;
                seen[y] = true;
                f.parent_edge[y] = e;
                f.depth[y] = f.depth[x] + 1;
                f.theta[y] = f.theta[x] * ed.sign;
                queue.push_back(y);
            }
        }
    }
    return f;
}

// Tree path edges joining u and v (same component), plus the closing edge.
inline std::vector<EdgeId> fundamental_cycle(const SignedGraph& g, const SpanningForest& f, EdgeId closing) {
    std::vector<EdgeId> out{closing};
    VertexId a = g.edge(closing).u;
    VertexId b = g.edge(closing).v;
    while (a != b) {
        if (f.depth[a.index] >= f.depth[b.index]) {
            EdgeId pe = *f.parent_edge[a.index];
            out.push_back(pe);
            a = g.edge(pe).other(a);
        } else {
            EdgeId pe = *f.parent_edge[b.index];
            out.push_back(pe);
            b = g.edge(pe).other(b);
        }
    }
    return out;
}

}  // namespace detail

/// Balanced iff a vertex signing realizes the signature. The signing is +1 on the
/// smallest vertex of each component; the witness is the fundamental cycle of the
/// lowest-id edge that disagrees with the forest potentials.
inline BalanceResult is_balanced(const SignedGraph& g) {
    auto forest = detail::spanning_forest(g);
    VertexSigning signing{forest.theta};
    if (auto bad = signing.first_violation(g)) {
        auto edges = detail::fundamental_cycle(g, forest, *bad);
        return BalanceResult(make_cycle(g, edges));
    }
    return BalanceResult(std::move(signing));
}

/// Signing normalized per component (smallest vertex +1), as is_balanced produces.
inline bool is_normalized_signing(const SignedGraph& g, const VertexSigning& s) {
    if (s.theta.size() != g.vertex_count()) return false;
    auto forest = detail::spanning_forest(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!forest.parent_edge[v] && s.theta[v] != Sign::Positive) return false;
    }
    return true;
}

struct EquivalenceResult {
    std::optional<SwitchSet> switch_set;
    std::optional<Cycle> distinguishing_cycle;  // set when not equivalent

    bool equivalent() const noexcept { return switch_set.has_value(); }
};

/// Two signatures are equivalent iff they differ on an edge cut; the switch set is
/// read off a signing of the difference.
inline EquivalenceResult signatures_equivalent(const SignedGraph& g, std::span<const Sign> other) {
    if (other.size() != g.edge_count()) {
        throw Error(ErrorCode::DomainMismatch, "signature has " + std::to_string(other.size()) +
                                                   " entries for " + std::to_string(g.edge_count()) + " edges");
    }
    std::vector<Sign> diff(other.size());
    for (std::size_t i = 0; i < other.size(); ++i) diff[i] = g.edges()[i].sign * other[i];
    auto balance = is_balanced(with_signature(g, diff));
    EquivalenceResult r;
    if (balance.balanced()) {
        std::vector<VertexId> flipped;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (balance.signing().theta[v] == Sign::Negative) flipped.push_back(vid(v));
        }
        r.switch_set = SwitchSet(std::move(flipped));
    } else {
        r.distinguishing_cycle = balance.witness();
    }
    return r;
}

/// On a 2-connected graph, e lies on cycles of both signs iff g - e is unbalanced.
inline bool edge_in_both_signs(const SignedGraph& g, EdgeId e) {
    g.check_edge(e);
    if (!is_2_connected(g)) throw Error(ErrorCode::NotTwoConnected, "edge_in_both_signs needs a 2-connected graph");
    return !is_balanced(delete_edge(g, e).graph).balanced();
}

struct SignedPath {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;  // edges.size() + 1 entries
    Sign sign = Sign::Positive;
};

struct SignedPathSearch {
    std::optional<SignedPath> path;
    bool exhausted = false;  // budget ran out before the search finished
    std::size_t nodes = 0;
};

/// Backtracking search for a simple u-v path with edge-sign product `wanted`.
/// No path and !exhausted means none exists.
inline SignedPathSearch find_signed_path(const SignedGraph& g, VertexId u, VertexId v, Sign wanted,
                                         std::size_t budget) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw Error(ErrorCode::BadVertex, "find_signed_path needs distinct endpoints");
    SignedPathSearch result;
    auto inc = g.incidence();
    std::vector<bool> on_path(g.vertex_count(), false);
    SignedPath current;
    current.vertices.push_back(u);
    on_path[u.index] = true;

    // Vertices still able to reach v avoiding the current path.
    auto reachable = [&](VertexId from) {
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<std::size_t> stack{from.index};
        seen[from.index] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            if (x == v.index) return true;
            for (EdgeId e : inc[x]) {
                std::size_t y = g.edge(e).other(vid(x)).index;
                if (!seen[y] && !on_path[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        return false;
    };

    auto dfs = [&](auto&& self, VertexId x, Sign s) -> bool {
        if (++result.nodes > budget) {
            result.exhausted = true;
            return true;
        }
        if (x == v) {
            if (s == wanted) {
                current.sign = s;
                result.path = current;
                return true;
            }
            return false;
        }
        if (!reachable(x)) return false;
        for (EdgeId e : inc[x.index]) {
            const Edge& ed = g.edge(e);
            VertexId y = ed.other(x);
            if (on_path[y.index]) continue;
            on_path[y.index] = true;
            current.edges.push_back(e);
            current.vertices.push_back(y);
            if (self(self, y, s * ed.sign)) return true;
            current.edges.pop_back();
            current.vertices.pop_back();
            on_path[y.index] = false;
        }
        return false;
    };
    dfs(dfs, u, Sign::Positive);
    return result;
}

}  // namespace sg
