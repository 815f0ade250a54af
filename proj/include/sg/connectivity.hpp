// Components, blocks, proper 2-separations and 3-connectivity.
#pragma once

#include "sg/core.hpp"

namespace sg {

namespace detail {

// Component label per vertex (nullopt for removed vertices); labels are assigned
// in order of each component's smallest vertex.
inline std::vector<std::optional<std::size_t>> component_labels(const SignedGraph& g,
                                                                 const std::vector<std::vector<EdgeId>>& inc,
                                                                 const std::vector<bool>& removed,
                                                                 std::size_t* count = nullptr) {
    const std::size_t n = g.vertex_count();
    std::vector<std::optional<std::size_t>> label(n);
    std::size_t next = 0;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (removed[s] || label[s]) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (EdgeId e : inc[x]) {
                std::size_t y = g.edge(e).other(vid(x)).index;
                if (removed[y] || label[y]) continue;
                label[y] = next;
                stack.push_back(y);
            }
        }
        ++next;
    }
    if (count) *count = next;
    return label;
}

inline std::size_t components_without(const SignedGraph& g, const std::vector<std::vector<EdgeId>>& inc,
                                      const std::vector<bool>& removed) {
    std::size_t count = 0;
    component_labels(g, inc, removed, &count);
    return count;
}

}  // namespace detail

/// Vertex sets of the connected components, ordered by smallest vertex.
inline std::vector<std::vector<VertexId>> components(const SignedGraph& g) {
    std::size_t count = 0;
    auto label = detail::component_labels(g, g.incidence(), std::vector<bool>(g.vertex_count(), false), &count);
    std::vector<std::vector<VertexId>> out(count);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out[*label[v]].push_back(vid(v));
    return out;
}

inline bool is_connected(const SignedGraph& g) { return components(g).size() <= 1; }

/// Block / cut-vertex decomposition. Isolated vertices belong to no block.
struct BlockTree {
    std::vector<std::vector<EdgeId>> blocks;  // each sorted; blocks ordered by first edge
    std::vector<VertexId> cut_vertices;       // sorted
    std::vector<std::pair<std::size_t, VertexId>> incidence;  // (block, cut vertex) pairs
    std::vector<std::size_t> block_of_edge;

    bool same_block(EdgeId a, EdgeId b) const { return block_of_edge.at(a.index) == block_of_edge.at(b.index); }
};

/// Hopcroft-Tarjan with an edge stack; parallel edges are told apart by id.
inline BlockTree blocks(const SignedGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    auto inc = g.incidence();
    std::vector<std::size_t> disc(n, 0), low(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<EdgeId> edge_stack;
    std::vector<std::vector<EdgeId>> found;
    std::vector<bool> is_cut(n, false);
    std::size_t timer = 0;

    struct Frame {
        std::size_t v;
        std::optional<EdgeId> via;
        std::size_t next = 0;
        std::size_t children = 0;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (visited[root]) continue;
        std::vector<Frame> stack{{root, std::nullopt}};
        visited[root] = true;
        disc[root] = low[root] = ++timer;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < inc[f.v].size()) {
                EdgeId e = inc[f.v][f.next++];
                if (f.via && *f.via == e) continue;
                std::size_t w = g.edge(e).other(vid(f.v)).index;
                if (!visited[w]) {
                    edge_stack.push_back(e);
                    visited[w] = true;
                    disc[w] = low[w] = ++timer;
                    ++f.children;
                    stack.push_back({w, e});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children >= 2) is_cut[done.v] = true;
                continue;
            }
            Frame& parent = stack.back();
            low[parent.v] = std::min(low[parent.v], low[done.v]);
            if (low[done.v] >= disc[parent.v]) {
                if (stack.size() > 1) is_cut[parent.v] = true;
                std::vector<EdgeId> block;
                while (true) {
                    EdgeId top = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(top);
                    if (top == *done.via) break;
                }
                std::sort(block.begin(), block.end());
                found.push_back(std::move(block));
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

    BlockTree t;
    t.blocks = std::move(found);
    t.block_of_edge.assign(m, 0);
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        for (EdgeId e : t.blocks[b]) t.block_of_edge[e.index] = b;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (is_cut[v]) t.cut_vertices.push_back(vid(v));
    }
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        std::vector<VertexId> touched;
        for (EdgeId e : t.blocks[b]) {
            touched.push_back(g.edge(e).u);
            touched.push_back(g.edge(e).v);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (VertexId v : touched) {
            if (is_cut[v.index]) t.incidence.emplace_back(b, v);
        }
    }
    return t;
}

/// One block holding every edge, at least two edges, no isolated vertices.
inline bool is_2_connected(const SignedGraph& g) {
    if (g.vertex_count() < 2 || g.edge_count() < 2) return false;
    auto t = blocks(g);
    if (t.blocks.size() != 1) return false;
    auto inc = g.incidence();
    for (const auto& list : inc) {
        if (list.empty()) return false;
    }
    return true;
}

/// A 2-separation: side1 and side2 partition E and share exactly {u, v}.
struct Separation {
    std::vector<EdgeId> side1;
    std::vector<EdgeId> side2;
    VertexId u;
    VertexId v;
};

namespace detail {

// Private vertices (touched by a side, not on the boundary) of each side.
inline std::pair<std::vector<bool>, std::vector<bool>> side_vertices(const SignedGraph& g, const Separation& s) {
    std::vector<bool> a(g.vertex_count(), false), b(g.vertex_count(), false);
    for (EdgeId e : s.side1) {
        a[g.edge(e).u.index] = a[g.edge(e).v.index] = true;
    }
    for (EdgeId e : s.side2) {
        b[g.edge(e).u.index] = b[g.edge(e).v.index] = true;
    }
    return {a, b};
}

}  // namespace detail

/// Sides partition E, meet exactly in {u, v}, and each has a private vertex.
inline bool is_proper_2_separation(const SignedGraph& g, const Separation& s) {
    if (!g.has_vertex(s.u) || !g.has_vertex(s.v) || s.u == s.v) return false;
    std::vector<int> owner(g.edge_count(), 0);
    for (EdgeId e : s.side1) {
        if (!g.has_edge(e) || owner[e.index]) return false;
        owner[e.index] = 1;
    }
    for (EdgeId e : s.side2) {
        if (!g.has_edge(e) || owner[e.index]) return false;
        owner[e.index] = 2;
    }
    for (int o : owner) {
        if (!o) return false;
    }
    auto [a, b] = detail::side_vertices(g, s);
    bool private_a = false, private_b = false;
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
        bool boundary = x == s.u.index || x == s.v.index;
        if (a[x] && b[x] && !boundary) return false;
        if (boundary && !(a[x] && b[x])) return false;
        if (!boundary) {
            private_a = private_a || (a[x] && !b[x]);
            private_b = private_b || (b[x] && !a[x]);
        }
    }
    return private_a && private_b;
}

/// Brute force over boundary pairs in lexicographic order. side1 is the component of
/// g - {u, v} holding the smallest remaining vertex, with its edges to u and v; side2
/// is everything else (other components and any u-v edges).
inline std::optional<Separation> find_proper_2_separation(const SignedGraph& g) {
    if (g.vertex_count() < 4 || !is_2_connected(g)) {
        throw Error(ErrorCode::NotTwoConnected, "find_proper_2_separation needs a 2-connected graph on >= 4 vertices");
    }
    const std::size_t n = g.vertex_count();
    auto inc = g.incidence();
    std::vector<bool> removed(n, false);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            removed[u] = removed[v] = true;
            std::size_t count = 0;
            auto label = detail::component_labels(g, inc, removed, &count);
            removed[u] = removed[v] = false;
            if (count < 2) continue;
            Separation s{{}, {}, vid(u), vid(v)};
            auto es = g.edges();
            for (std::size_t i = 0; i < es.size(); ++i) {
                const auto& lu = label[es[i].u.index];
                const auto& lv = label[es[i].v.index];
                bool in_first = (lu && *lu == 0) || (lv && *lv == 0);
                (in_first ? s.side1 : s.side2).push_back(eid(i));
            }
            return s;
        }
    }
    return std::nullopt;
}

/// At least 4 vertices and no vertex cut of size <= 2; edge multiplicity is ignored.
inline bool is_3_connected(const SignedGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 4) return false;
    auto inc = g.incidence();
    std::vector<bool> removed(n, false);
    if (detail::components_without(g, inc, removed) != 1) return false;
    for (std::size_t u = 0; u < n; ++u) {
        removed[u] = true;
        if (detail::components_without(g, inc, removed) != 1) return false;
        for (std::size_t v = u + 1; v < n; ++v) {
            removed[v] = true;
            bool split = detail::components_without(g, inc, removed) != 1;
            removed[v] = false;
            if (split) return false;
        }
        removed[u] = false;
    }
    return true;
}

}  // namespace sg
