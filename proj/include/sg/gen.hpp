// Seeded instance generators: random multigraphs, wheel-based 3-connected graphs,
// composed tied instances, and exhaustive small-graph enumeration by switching class.
#pragma once

#include <functional>
#include <random>
#include <set>

#include "sg/balance.hpp"
#include "sg/core.hpp"
#include "sg/decide.hpp"

namespace sg {

namespace detail {

inline void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::BadParams, "p_neg must lie in [0, 1]");
}

inline Sign random_sign(std::mt19937_64& rng, double p_neg) {
    return std::bernoulli_distribution(p_neg)(rng) ? Sign::Negative : Sign::Positive;
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

}  // namespace detail

/// m endpoint pairs drawn uniformly (parallel edges allowed), each negative with
/// probability p_neg.
inline SignedGraph random_signed_graph(std::size_t n, std::size_t m, double p_neg, std::uint64_t seed) {
    detail::check_probability(p_neg);
    if (m > 0 && n < 2) throw Error(ErrorCode::BadParams, "edges need at least two vertices");
    std::mt19937_64 rng(seed);
    SignedGraph g(n);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t u = detail::pick(rng, n);
        std::size_t v = detail::pick(rng, n - 1);
        if (v >= u) ++v;
        g.add_edge(vid(u), vid(v), detail::random_sign(rng, p_neg));
    }
    return g;
}

/// Wheel with hub 0 and rim 1..n-1, plus `extra` random chords. With `simple`, chords
/// never duplicate an existing pair.
inline SignedGraph random_3_connected(std::size_t n, std::size_t extra, double p_neg, std::uint64_t seed,
                                     bool simple = true) {
    detail::check_probability(p_neg);
    if (n < 4) throw Error(ErrorCode::BadParams, "random_3_connected needs n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::set<std::pair<std::size_t, std::size_t>> used;
    for (std::size_t i = 1; i < n; ++i) {
        pairs.emplace_back(0, i);
        std::size_t j = i + 1 < n ? i + 1 : 1;
        pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
    for (auto p : pairs) used.insert(p);
    const std::size_t free_pairs = n * (n - 1) / 2 - used.size();
    if (simple && extra > free_pairs) throw Error(ErrorCode::BadParams, "too many chords for a simple graph");
    while (extra > 0) {
        std::size_t u = detail::pick(rng, n);
        std::size_t v = detail::pick(rng, n - 1);
        if (v >= u) ++v;
        auto key = std::minmax(u, v);
        if (simple && used.count(key)) continue;
        used.insert(key);
        pairs.emplace_back(key);
        --extra;
    }
    SignedGraph g(n);
    for (auto [u, v] : pairs) g.add_edge(vid(u), vid(v), detail::random_sign(rng, p_neg));
    return g;
}

// ---------------------------------------------------------------- composed tied instances

enum class LeafShape { ParallelCut = 1, CommonVertex = 2, BalancedRemainder = 3 };
enum class SpliceKind { BalancedSide, UnbalancedSide, Join };

/// A leaf structure followed by splice steps applied in order.
struct Recipe {
    LeafShape leaf = LeafShape::BalancedRemainder;
    std::size_t leaf_vertices = 4;  // >= 4
    std::vector<SpliceKind> splices;
    double p_neg = 0.5;  // sign bias for free choices
};

/// "case2:p2,p3,p1" or "case3" or "case1/6:p2" (leaf size after the slash).
inline Recipe parse_recipe(const std::string& text) {
    Recipe r;
    std::string head = text;
    std::string tail;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        head = text.substr(0, colon);
        tail = text.substr(colon + 1);
    }
    if (auto slash = head.find('/'); slash != std::string::npos) {
        try {
            r.leaf_vertices = std::stoul(head.substr(slash + 1));
        } catch (const std::exception&) {
            throw Error(ErrorCode::BadRecipe, "bad leaf size in '" + text + "'");
        }
        head = head.substr(0, slash);
    }
    if (head == "case1") r.leaf = LeafShape::ParallelCut;
    else if (head == "case2") r.leaf = LeafShape::CommonVertex;
    else if (head == "case3") r.leaf = LeafShape::BalancedRemainder;
    else throw Error(ErrorCode::BadRecipe, "unknown leaf '" + head + "'");
    std::size_t pos = 0;
    while (pos < tail.size()) {
        std::size_t end = tail.find(',', pos);
        if (end == std::string::npos) end = tail.size();
        std::string step = tail.substr(pos, end - pos);
        if (step == "p1") r.splices.push_back(SpliceKind::Join);
        else if (step == "p2") r.splices.push_back(SpliceKind::BalancedSide);
        else if (step == "p3") r.splices.push_back(SpliceKind::UnbalancedSide);
        else throw Error(ErrorCode::BadRecipe, "unknown splice '" + step + "'");
        pos = end + 1;
    }
    if (r.leaf_vertices < 4) throw Error(ErrorCode::BadRecipe, "leaf needs at least 4 vertices");
    return r;
}

struct ComposedInstance {
    SignedGraph graph;
    EdgeId e1;
    EdgeId e2;
    Sign common_sign = Sign::Positive;  // sign of every common cycle, by construction
};

namespace detail {

// Editable edge list; ids are positions, dead edges are dropped on finish().
struct Draft {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<bool> alive;
    std::size_t e1 = 0, e2 = 0;
    Sign sign = Sign::Positive;
    std::vector<std::pair<std::size_t, std::size_t>> mixed_pairs;  // (+ edge, - edge), both alive

    std::size_t vertex() { return n++; }
    std::size_t edge(std::size_t u, std::size_t v, Sign s) {
        edges.push_back(Edge{vid(u), vid(v), s});
        alive.push_back(true);
        return edges.size() - 1;
    }
};

inline std::vector<Sign> random_potentials(std::mt19937_64& rng, std::size_t n) {
    std::vector<Sign> theta(n);
    for (auto& t : theta) t = random_sign(rng, 0.5);
    return theta;
}

// X and Y balanced, joined only by e1, e2 and a mixed pair F.
inline Draft leaf_parallel_cut(std::mt19937_64& rng, std::size_t n) {
    Draft d;
    const std::size_t nx = std::max<std::size_t>(2, n / 2);
    const std::size_t ny = std::max<std::size_t>(2, n - nx);
    d.n = nx + ny;
    auto theta = random_potentials(rng, d.n);
    auto side_edges = [&](std::size_t base, std::size_t k) {
        for (std::size_t i = 1; i < k; ++i) {
            std::size_t p = base + pick(rng, i);
            d.edge(p, base + i, theta[p] * theta[base + i]);
        }
        for (std::size_t extra = pick(rng, k); extra > 0 && k > 2; --extra) {
            std::size_t a = base + pick(rng, k), b = base + pick(rng, k);
            if (a != b) d.edge(a, b, theta[a] * theta[b]);
        }
    };
    side_edges(0, nx);
    side_edges(nx, ny);
    std::vector<std::pair<std::size_t, std::size_t>> cross;
    for (std::size_t x = 0; x < nx; ++x) {
        for (std::size_t y = nx; y < nx + ny; ++y) cross.emplace_back(x, y);
    }
    std::shuffle(cross.begin(), cross.end(), rng);
    d.e1 = d.edge(cross[0].first, cross[0].second, random_sign(rng, 0.5));
    d.e2 = d.edge(cross[1].first, cross[1].second, random_sign(rng, 0.5));
    std::size_t fp = d.edge(cross[2].first, cross[2].second, Sign::Positive);
    std::size_t fn = d.edge(cross[2].first, cross[2].second, Sign::Negative);
    d.mixed_pairs.emplace_back(fp, fn);
    const Edge& a = d.edges[d.e1];
    const Edge& b = d.edges[d.e2];
    d.sign = a.sign * b.sign * theta[a.u.index] * theta[a.v.index] * theta[b.u.index] * theta[b.v.index];
    return d;
}

// Wheel: hub 0, balanced rim; e1, e2 are spokes; mixed pairs on some other spokes.
inline Draft leaf_common_vertex(std::mt19937_64& rng, std::size_t n, double p_neg) {
    Draft d;
    d.n = n;
    auto theta = random_potentials(rng, n);
    const std::size_t k = n - 1;
    std::vector<std::size_t> spoke(n);
    for (std::size_t i = 1; i < n; ++i) spoke[i] = d.edge(0, i, random_sign(rng, p_neg));
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t j = i % k + 1;
        d.edge(i, j, theta[i] * theta[j]);
    }
    std::size_t i = 1 + pick(rng, k);
    std::size_t j = 1 + pick(rng, k - 1);
    if (j >= i) ++j;
    d.e1 = spoke[i];
    d.e2 = spoke[j];
    for (std::size_t r = 1; r < n; ++r) {
        if (r == i || r == j || !std::bernoulli_distribution(0.5)(rng)) continue;
        Sign s = d.edges[spoke[r]].sign;
        std::size_t twin = d.edge(0, r, -s);
        d.mixed_pairs.emplace_back(s == Sign::Positive ? spoke[r] : twin, s == Sign::Positive ? twin : spoke[r]);
    }
    d.sign = d.edges[d.e1].sign * d.edges[d.e2].sign * theta[i] * theta[j];
    return d;
}

// Simple 3-connected graph, balanced apart from e1 and e2.
inline Draft leaf_balanced_remainder(std::mt19937_64& rng, std::size_t n) {
    const std::size_t room = n * (n - 1) / 2 - 2 * (n - 1);
    auto g = random_3_connected(n, room == 0 ? 0 : pick(rng, room + 1), 0.0, rng(), true);
    Draft d;
    d.n = n;
    auto theta = random_potentials(rng, n);
    for (const Edge& e : g.edges()) d.edge(e.u.index, e.v.index, theta[e.u.index] * theta[e.v.index]);
    d.e1 = pick(rng, d.edges.size());
    d.e2 = pick(rng, d.edges.size() - 1);
    if (d.e2 >= d.e1) ++d.e2;
    d.edges[d.e1].sign = random_sign(rng, 0.5);
    d.edges[d.e2].sign = random_sign(rng, 0.5);
    const Edge& a = d.edges[d.e1];
    const Edge& b = d.edges[d.e2];
    d.sign = a.sign * b.sign * theta[a.u.index] * theta[a.v.index] * theta[b.u.index] * theta[b.v.index];
    return d;
}

inline Draft make_leaf(std::mt19937_64& rng, LeafShape shape, std::size_t n, double p_neg) {
    switch (shape) {
        case LeafShape::ParallelCut: return leaf_parallel_cut(rng, n);
        case LeafShape::CommonVertex: return leaf_common_vertex(rng, n, p_neg);
        case LeafShape::BalancedRemainder: return leaf_balanced_remainder(rng, n);
    }
    throw Error(ErrorCode::BadRecipe, "unknown leaf shape");
}

// Two-terminal path u .. v through `inner` new vertices; returns the vertex chain.
inline std::vector<std::size_t> add_chain(Draft& d, std::size_t u, std::size_t v, std::size_t inner) {
    std::vector<std::size_t> chain{u};
    for (std::size_t i = 0; i < inner; ++i) chain.push_back(d.vertex());
    chain.push_back(v);
    return chain;
}

// Replace edge f = uv by a balanced two-terminal graph whose u-v paths all have sign(f).
inline void splice_balanced(Draft& d, std::mt19937_64& rng, double p_neg) {
    std::vector<std::size_t> choices;
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        if (d.alive[i] && i != d.e1 && i != d.e2) choices.push_back(i);
    }
    if (choices.empty()) throw Error(ErrorCode::BadRecipe, "no edge to replace");
    const std::size_t f = choices[pick(rng, choices.size())];
    d.alive[f] = false;
    for (auto it = d.mixed_pairs.begin(); it != d.mixed_pairs.end();) {
        it = (it->first == f || it->second == f) ? d.mixed_pairs.erase(it) : it + 1;
    }
    const std::size_t u = d.edges[f].u.index, v = d.edges[f].v.index;
    const Sign fs = d.edges[f].sign;
    auto chain = add_chain(d, u, v, 1 + pick(rng, 2));
    std::vector<Sign> theta(d.n, Sign::Positive);
    for (std::size_t x : chain) theta[x] = random_sign(rng, p_neg);
    theta[u] = Sign::Positive;
    theta[v] = fs;
    auto pot = [&](std::size_t x) { return theta[x]; };
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) d.edge(chain[i], chain[i + 1], pot(chain[i]) * pot(chain[i + 1]));
    // a couple of chords among the chain keep it balanced
    for (std::size_t extra = pick(rng, 3); extra > 0; --extra) {
        std::size_t a = chain[pick(rng, chain.size())], b = chain[pick(rng, chain.size())];
        if (a != b) d.edge(a, b, pot(a) * pot(b));
    }
}

// Replace a mixed pair by an unbalanced two-terminal graph with u-v paths of both signs.
// Without a mixed pair, one is first placed parallel to e1 (cycles through e1 never use it).
inline void splice_unbalanced(Draft& d, std::mt19937_64& rng, double p_neg) {
    std::size_t pos, neg;
    if (d.mixed_pairs.empty()) {
        const Edge host = d.edges[d.e1];
        pos = d.edge(host.u.index, host.v.index, Sign::Positive);
        neg = d.edge(host.u.index, host.v.index, Sign::Negative);
    } else {
        std::size_t k = pick(rng, d.mixed_pairs.size());
        std::tie(pos, neg) = d.mixed_pairs[k];
        d.mixed_pairs.erase(d.mixed_pairs.begin() + static_cast<std::ptrdiff_t>(k));
    }
    d.alive[pos] = d.alive[neg] = false;
    const std::size_t u = d.edges[pos].u.index, v = d.edges[pos].v.index;
    auto a = add_chain(d, u, v, 1 + pick(rng, 2));
    auto b = add_chain(d, u, v, pick(rng, 2));
    Sign sa = Sign::Positive;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        Sign s = random_sign(rng, p_neg);
        sa *= s;
        d.edge(a[i], a[i + 1], s);
    }
    Sign sb = Sign::Positive;
    for (std::size_t i = 0; i + 2 < b.size(); ++i) {
        Sign s = random_sign(rng, p_neg);
        sb *= s;
        d.edge(b[i], b[i + 1], s);
    }
    d.edge(b[b.size() - 2], b.back(), -sa * sb);  // path b gets the opposite sign of path a
    std::vector<std::size_t> inner(a.begin() + 1, a.end() - 1);
    inner.insert(inner.end(), b.begin() + 1, b.end() - 1);
    for (std::size_t extra = pick(rng, 2); extra > 0 && inner.size() >= 2; --extra) {
        std::size_t x = inner[pick(rng, inner.size())], y = inner[pick(rng, inner.size())];
        if (x != y) d.edge(x, y, random_sign(rng, p_neg));
    }
}

// Glue a fresh tied half H (h1, h2) onto e2: identify the ends of e2 and h1, drop both,
// and make h2 the new second edge.
inline void splice_join(Draft& d, std::mt19937_64& rng, double p_neg) {
    const auto shape = static_cast<LeafShape>(1 + pick(rng, 3));
    Draft h = make_leaf(rng, shape, 4 + pick(rng, 2), p_neg);
    const Edge marker = d.edges[d.e2];
    const Edge hm = h.edges[h.e1];
    const bool flip = std::bernoulli_distribution(0.5)(rng);
    std::vector<std::size_t> where(h.n);
    for (std::size_t x = 0; x < h.n; ++x) where[x] = d.n + x;
    where[hm.u.index] = flip ? marker.v.index : marker.u.index;
    where[hm.v.index] = flip ? marker.u.index : marker.v.index;
    std::size_t next = d.n;
    for (std::size_t x = 0; x < h.n; ++x) {
        if (x != hm.u.index && x != hm.v.index) where[x] = next++;
    }
    d.n = next;
    d.alive[d.e2] = false;
    std::vector<std::size_t> moved(h.edges.size());
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        if (i == h.e1 || !h.alive[i]) continue;
        const Edge& e = h.edges[i];
        moved[i] = d.edge(where[e.u.index], where[e.v.index], e.sign);
    }
    for (auto [p, q] : h.mixed_pairs) {
        if (p != h.e1 && q != h.e1) d.mixed_pairs.emplace_back(moved[p], moved[q]);
    }
    for (auto it = d.mixed_pairs.begin(); it != d.mixed_pairs.end();) {
        it = (it->first == d.e2 || it->second == d.e2) ? d.mixed_pairs.erase(it) : it + 1;
    }
    d.sign = d.sign * marker.sign * h.sign * hm.sign;
    d.e2 = moved[h.e2];
}

}  // namespace detail

/// Builds an instance that is tied by construction: a leaf with one of the three tied
/// structures, then splices that reverse the 2-separation reduction. The result is
/// relabeled and switched at random.
inline ComposedInstance compose_tied_instance(const Recipe& recipe, std::uint64_t seed) {
    detail::check_probability(recipe.p_neg);
    if (recipe.leaf_vertices < 4) throw Error(ErrorCode::BadRecipe, "leaf needs at least 4 vertices");
    std::mt19937_64 rng(seed);
    detail::Draft d = detail::make_leaf(rng, recipe.leaf, recipe.leaf_vertices, recipe.p_neg);
    for (SpliceKind s : recipe.splices) {
        switch (s) {
            case SpliceKind::BalancedSide: detail::splice_balanced(d, rng, recipe.p_neg); break;
            case SpliceKind::UnbalancedSide: detail::splice_unbalanced(d, rng, recipe.p_neg); break;
            case SpliceKind::Join: detail::splice_join(d, rng, recipe.p_neg); break;
        }
    }
    std::vector<std::size_t> perm(d.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        if (d.alive[i]) order.push_back(i);
    }
    std::shuffle(order.begin(), order.end(), rng);
    auto flip = detail::random_potentials(rng, d.n);
    ComposedInstance out;
    out.graph = SignedGraph(d.n);
    for (std::size_t i : order) {
        const Edge& e = d.edges[i];
        EdgeId id = out.graph.add_edge(vid(perm[e.u.index]), vid(perm[e.v.index]),
                                       e.sign * flip[e.u.index] * flip[e.v.index]);
        if (i == d.e1) out.e1 = id;
        if (i == d.e2) out.e2 = id;
    }
    out.common_sign = d.sign;
    return out;
}

// ---------------------------------------------------------------- exhaustive enumeration

struct EnumerateOptions {
    bool simple = true;
    bool dedup_isomorphic = false;  // brute-force canonical form; n <= 7
    bool connected_only = false;
    bool two_connected_only = false;
};

namespace detail {

// Edge multiset as sorted (u, v) pairs under a vertex permutation.
inline std::vector<std::pair<std::size_t, std::size_t>> relabeled(
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const std::vector<std::size_t>& perm) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [u, v] : pairs) out.push_back(std::minmax(perm[u], perm[v]));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<std::size_t, std::size_t>> canonical_form(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto best = relabeled(pairs, perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, relabeled(pairs, perm));
    return best;
}

}  // namespace detail

/// Calls visit(g) for every underlying graph with n <= n_max vertices and m <= m_max
/// edges (no isolated vertices except n = 1), once per switching class: a spanning
/// forest stays positive while the remaining edges take every sign pattern.
inline std::size_t enumerate_small(std::size_t n_max, std::size_t m_max, const EnumerateOptions& opts,
                                   const std::function<void(const SignedGraph&)>& visit) {
    if (n_max > 7 || (opts.dedup_isomorphic && n_max > 7)) throw Error(ErrorCode::BadParams, "n_max must be <= 7");
    if (m_max > 24) throw Error(ErrorCode::BadParams, "m_max must be <= 24");
    std::size_t emitted = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> all;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) all.emplace_back(u, v);
        }
        std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
        std::vector<std::pair<std::size_t, std::size_t>> chosen;

        auto emit = [&] {
            std::vector<bool> touched(n, false);
            for (auto [u, v] : chosen) touched[u] = touched[v] = true;
            if (n > 1 && std::find(touched.begin(), touched.end(), false) != touched.end()) return;
            SignedGraph base(n);
            for (auto [u, v] : chosen) base.add_edge(vid(u), vid(v), Sign::Positive);
            if (opts.connected_only && !is_connected(base)) return;
            if (opts.two_connected_only && !is_2_connected(base)) return;
            if (opts.dedup_isomorphic && !seen.insert(detail::canonical_form(n, chosen)).second) return;
            auto forest = detail::spanning_forest(base);
            std::vector<bool> in_forest(chosen.size(), false);
            for (const auto& pe : forest.parent_edge) {
                if (pe) in_forest[pe->index] = true;
            }
            std::vector<std::size_t> free;
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                if (!in_forest[i]) free.push_back(i);
            }
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
                std::vector<Sign> signs(chosen.size(), Sign::Positive);
                for (std::size_t k = 0; k < free.size(); ++k) {
                    if (mask >> k & 1) signs[free[k]] = Sign::Negative;
                }
                visit(with_signature(base, signs));
                ++emitted;
            }
        };
        // Pairs in lexicographic order, each used up to 1 (simple) or m_max times.
        auto extend = [&](auto&& self, std::size_t from) -> void {
            emit();
            if (chosen.size() == m_max) return;
            for (std::size_t i = from; i < all.size(); ++i) {
                chosen.push_back(all[i]);
                self(self, opts.simple ? i + 1 : i);
                chosen.pop_back();
            }
        };
        extend(extend, 0);
    }
    return emitted;
}

}  // namespace sg
