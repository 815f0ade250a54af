// Signed multigraph data model: signs, ids, cycles, switching and minor operations.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sg {

enum class ErrorCode {
    LoopRejected,
    BadVertex,
    BadEdge,
    NotACycle,
    DomainMismatch,
    NotTwoConnected,
    SameEdge,
    PreconditionViolated,
    BudgetExhausted,
    BadParams,
    BadRecipe,
    ParseError,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopRejected: return "LoopRejected";
        case ErrorCode::BadVertex: return "BadVertex";
        case ErrorCode::BadEdge: return "BadEdge";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::NotTwoConnected: return "NotTwoConnected";
        case ErrorCode::SameEdge: return "SameEdge";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::BadRecipe: return "BadRecipe";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
    return a == b ? Sign::Positive : Sign::Negative;
}
constexpr Sign& operator*=(Sign& a, Sign b) noexcept { return a = a * b; }
constexpr Sign operator-(Sign a) noexcept { return a * Sign::Negative; }
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

struct VertexId {
    std::uint32_t index = 0;
    friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
    std::uint32_t index = 0;
    friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

constexpr VertexId vid(std::size_t i) noexcept { return VertexId{static_cast<std::uint32_t>(i)}; }
constexpr EdgeId eid(std::size_t i) noexcept { return EdgeId{static_cast<std::uint32_t>(i)}; }

struct Edge {
    VertexId u;
    VertexId v;
    Sign sign = Sign::Positive;

    constexpr VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
    constexpr bool touches(VertexId x) const noexcept { return x == u || x == v; }
    constexpr bool same_ends(const Edge& o) const noexcept {
        return (u == o.u && v == o.v) || (u == o.v && v == o.u);
    }
    friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// Finite loopless multigraph with a +1/-1 signature. Edge ids are dense and
/// follow insertion order; operations that remove things return a Relabeling.
class SignedGraph {
public:
    SignedGraph() = default;
    explicit SignedGraph(std::size_t n) : n_(n) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool has_vertex(VertexId v) const noexcept { return v.index < n_; }
    bool has_edge(EdgeId e) const noexcept { return e.index < edges_.size(); }

    VertexId add_vertex() { return vid(n_++); }

    EdgeId add_edge(VertexId u, VertexId v, Sign s) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) {
            throw Error(ErrorCode::LoopRejected, "loop at vertex " + std::to_string(u.index));
        }
        edges_.push_back(Edge{u, v, s});
        return eid(edges_.size() - 1);
    }

    const Edge& edge(EdgeId e) const {
        check_edge(e);
        return edges_[e.index];
    }
    Sign sign(EdgeId e) const { return edge(e).sign; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::vector<Sign> signature() const {
        std::vector<Sign> out;
        out.reserve(edges_.size());
        for (const auto& e : edges_) out.push_back(e.sign);
        return out;
    }

    /// Incident edge ids per vertex, each list in increasing id order.
    std::vector<std::vector<EdgeId>> incidence() const {
        std::vector<std::vector<EdgeId>> inc(n_);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            inc[edges_[i].u.index].push_back(eid(i));
            inc[edges_[i].v.index].push_back(eid(i));
        }
        return inc;
    }

    void check_vertex(VertexId v) const {
        if (!has_vertex(v)) {
            throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v.index) + " out of range (n=" +
                                                  std::to_string(n_) + ")");
        }
    }
    void check_edge(EdgeId e) const {
        if (!has_edge(e)) {
            throw Error(ErrorCode::BadEdge, "edge " + std::to_string(e.index) + " out of range (m=" +
                                                std::to_string(edges_.size()) + ")");
        }
    }

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

inline SignedGraph new_graph(std::size_t n) { return SignedGraph(n); }

inline Sign edges_sign(const SignedGraph& g, std::span<const EdgeId> edges) {
    Sign s = Sign::Positive;
    for (EdgeId e : edges) s *= g.sign(e);
    return s;
}

// ---------------------------------------------------------------- cycles

/// Cyclically ordered edges; edge i joins vertices[i] and vertices[i+1 mod k].
struct Cycle {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;

    std::size_t length() const noexcept { return edges.size(); }
    bool contains(EdgeId e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

inline bool is_valid_cycle(const SignedGraph& g, const Cycle& c) {
    const std::size_t k = c.edges.size();
    if (k < 2 || c.vertices.size() != k) return false;
    for (EdgeId e : c.edges) {
        if (!g.has_edge(e)) return false;
    }
    for (VertexId v : c.vertices) {
        if (!g.has_vertex(v)) return false;
    }
    auto es = c.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    auto vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    for (std::size_t i = 0; i < k; ++i) {
        const Edge& e = g.edge(c.edges[i]);
        VertexId a = c.vertices[i];
        VertexId b = c.vertices[(i + 1) % k];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
    }
    return true;
}

/// Orders an edge set into a cycle. Canonical form: starts at the smallest edge id
/// and continues toward its smaller-id neighbour on the cycle.
inline Cycle make_cycle(const SignedGraph& g, std::span<const EdgeId> edge_set) {
    if (edge_set.size() < 2) throw Error(ErrorCode::NotACycle, "a cycle needs at least two edges");
    std::vector<EdgeId> es(edge_set.begin(), edge_set.end());
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) {
        throw Error(ErrorCode::NotACycle, "repeated edge");
    }
    // vertex -> incident edges within the set
    std::vector<std::pair<VertexId, std::vector<EdgeId>>> touch;
    auto slot = [&](VertexId v) -> std::vector<EdgeId>& {
        for (auto& [x, list] : touch) {
            if (x == v) return list;
        }
        touch.emplace_back(v, std::vector<EdgeId>{});
        return touch.back().second;
    };
    for (EdgeId e : es) {
        const Edge& ed = g.edge(e);
        slot(ed.u).push_back(e);
        slot(ed.v).push_back(e);
    }
    for (const auto& [v, list] : touch) {
        if (list.size() != 2) {
            throw Error(ErrorCode::NotACycle, "vertex " + std::to_string(v.index) + " has degree " +
                                                  std::to_string(list.size()) + " in edge set");
        }
    }
    auto partner = [&](VertexId v, EdgeId e) {
        const auto& list = slot(v);
        return list[0] == e ? list[1] : list[0];
    };

    const EdgeId first = es.front();
    const Edge& fe = g.edge(first);
    // Walk away from `first` through the endpoint whose other edge is smaller.
    EdgeId nu = partner(fe.u, first);
    EdgeId nv = partner(fe.v, first);
    VertexId start = nv < nu ? fe.u : fe.v;
    if (nu == nv) start = fe.u;  // 2-cycle

    Cycle c;
    VertexId cur = start;
    EdgeId e = first;
    for (std::size_t step = 0; step < es.size(); ++step) {
        c.edges.push_back(e);
        c.vertices.push_back(cur);
        cur = g.edge(e).other(cur);
        e = partner(cur, e);
        if (cur == start) break;
    }
    if (c.edges.size() != es.size() || cur != start) {
        throw Error(ErrorCode::NotACycle, "edge set is not a single cycle");
    }
    return c;
}

inline Sign cycle_sign(const SignedGraph& g, const Cycle& c) {
    if (!is_valid_cycle(g, c)) throw Error(ErrorCode::NotACycle, "not a closed simple walk");
    return edges_sign(g, c.edges);
}

// ---------------------------------------------------------------- switching

struct SwitchSet {
    std::vector<VertexId> vertices;  // sorted, unique

    SwitchSet() = default;
    explicit SwitchSet(std::vector<VertexId> vs) : vertices(std::move(vs)) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    }
    bool contains(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
    friend bool operator==(const SwitchSet&, const SwitchSet&) = default;
};

/// Edges with exactly one endpoint in `side`, in increasing id order.
inline std::vector<EdgeId> edge_cut(const SignedGraph& g, const SwitchSet& side) {
    for (VertexId v : side.vertices) g.check_vertex(v);
    std::vector<EdgeId> cut;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (side.contains(es[i].u) != side.contains(es[i].v)) cut.push_back(eid(i));
    }
    return cut;
}

inline SignedGraph with_signature(const SignedGraph& g, std::span<const Sign> signs) {
    if (signs.size() != g.edge_count()) {
        throw Error(ErrorCode::DomainMismatch, "signature has " + std::to_string(signs.size()) +
                                                   " entries for " + std::to_string(g.edge_count()) + " edges");
    }
    SignedGraph out(g.vertex_count());
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) out.add_edge(es[i].u, es[i].v, signs[i]);
    return out;
}

/// Flips the sign of every edge in the cut of `s`. Cycle signs are unchanged.
inline SignedGraph switch_signature(const SignedGraph& g, const SwitchSet& s) {
    auto signs = g.signature();
    for (EdgeId e : edge_cut(g, s)) signs[e.index] = -signs[e.index];
    return with_signature(g, signs);
}

// ---------------------------------------------------------------- minors

/// Old id -> new id; nullopt for removed items.
struct Relabeling {
    std::vector<std::optional<VertexId>> vertex;
    std::vector<std::optional<EdgeId>> edge;
};

struct MinorResult {
    SignedGraph graph;
    Relabeling map;
};

namespace detail {

// Keeps the marked vertices and edges, renumbering both in increasing old-id order.
inline MinorResult rebuild(const SignedGraph& g, const std::vector<bool>& keep_vertex,
                           const std::vector<bool>& keep_edge) {
    MinorResult r;
    r.map.vertex.assign(g.vertex_count(), std::nullopt);
    r.map.edge.assign(g.edge_count(), std::nullopt);
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (keep_vertex[v]) r.map.vertex[v] = vid(next++);
    }
    r.graph = SignedGraph(next);
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!keep_edge[i]) continue;
        r.map.edge[i] = r.graph.add_edge(*r.map.vertex[es[i].u.index], *r.map.vertex[es[i].v.index], es[i].sign);
    }
    return r;
}

}  // namespace detail

inline MinorResult delete_edges(const SignedGraph& g, std::span<const EdgeId> doomed) {
    std::vector<bool> keep_edge(g.edge_count(), true);
    for (EdgeId e : doomed) {
        g.check_edge(e);
        keep_edge[e.index] = false;
    }
    return detail::rebuild(g, std::vector<bool>(g.vertex_count(), true), keep_edge);
}

inline MinorResult delete_edge(const SignedGraph& g, EdgeId e) {
    return delete_edges(g, std::span<const EdgeId>(&e, 1));
}

inline MinorResult delete_vertices(const SignedGraph& g, std::span<const VertexId> doomed) {
    std::vector<bool> keep_vertex(g.vertex_count(), true);
    for (VertexId v : doomed) {
        g.check_vertex(v);
        keep_vertex[v.index] = false;
    }
    std::vector<bool> keep_edge(g.edge_count(), true);
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        keep_edge[i] = keep_vertex[es[i].u.index] && keep_vertex[es[i].v.index];
    }
    return detail::rebuild(g, keep_vertex, keep_edge);
}

inline MinorResult delete_vertex(const SignedGraph& g, VertexId v) {
    return delete_vertices(g, std::span<const VertexId>(&v, 1));
}

/// Contracts e = uv into u. A negative e is first made positive by switching at v.
/// Edges parallel to e would become loops and are dropped.
inline MinorResult contract_edge(const SignedGraph& g, EdgeId e) {
    const Edge target = g.edge(e);
    auto signs = g.signature();
    if (target.sign == Sign::Negative) {
        auto es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (es[i].touches(target.v) && !es[i].same_ends(target)) signs[i] = -signs[i];
        }
    }
    std::vector<bool> keep_vertex(g.vertex_count(), true);
    keep_vertex[target.v.index] = false;
    std::vector<bool> keep_edge(g.edge_count(), true);
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].same_ends(target)) keep_edge[i] = false;
    }
    MinorResult r;
    r.map.vertex.assign(g.vertex_count(), std::nullopt);
    r.map.edge.assign(g.edge_count(), std::nullopt);
    std::size_t next = 0;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        if (keep_vertex[x]) r.map.vertex[x] = vid(next++);
    }
    r.map.vertex[target.v.index] = r.map.vertex[target.u.index];
    r.graph = SignedGraph(next);
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!keep_edge[i]) continue;
        r.map.edge[i] = r.graph.add_edge(*r.map.vertex[es[i].u.index], *r.map.vertex[es[i].v.index], signs[i]);
    }
    return r;
}

/// All edges sharing e's endpoint pair (including e), increasing id order.
inline std::vector<EdgeId> parallel_class(const SignedGraph& g, EdgeId e) {
    const Edge& target = g.edge(e);
    std::vector<EdgeId> out;
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (es[i].same_ends(target)) out.push_back(eid(i));
    }
    return out;
}

/// Subgraph formed by an edge set and the vertices it touches, with vertices
/// renumbered in increasing order of their old id and edges in the given order.
struct EdgeSubgraph {
    SignedGraph graph;
    std::vector<VertexId> vertex_origin;  // new -> old
    std::vector<EdgeId> edge_origin;      // new -> old
    std::vector<std::optional<VertexId>> vertex_map;  // old -> new
};

inline EdgeSubgraph edge_subgraph(const SignedGraph& g, std::span<const EdgeId> edge_set,
                                  std::span<const VertexId> extra_vertices = {}) {
    EdgeSubgraph s;
    std::vector<bool> used(g.vertex_count(), false);
    for (EdgeId e : edge_set) {
        used[g.edge(e).u.index] = true;
        used[g.edge(e).v.index] = true;
    }
    for (VertexId v : extra_vertices) {
        g.check_vertex(v);
        used[v.index] = true;
    }
    s.vertex_map.assign(g.vertex_count(), std::nullopt);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (used[v]) {
            s.vertex_map[v] = vid(s.vertex_origin.size());
            s.vertex_origin.push_back(vid(v));
        }
    }
    s.graph = SignedGraph(s.vertex_origin.size());
    for (EdgeId e : edge_set) {
        const Edge& ed = g.edge(e);
        s.graph.add_edge(*s.vertex_map[ed.u.index], *s.vertex_map[ed.v.index], ed.sign);
        s.edge_origin.push_back(e);
    }
    return s;
}

}  // namespace sg
