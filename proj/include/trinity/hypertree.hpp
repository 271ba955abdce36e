#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "trinity/combmap.hpp"
#include "trinity/error.hpp"
#include "trinity/sandpile.hpp"
#include "trinity/trinity.hpp"

namespace trinity {

struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

inline Multigraph multigraph_of(const PlaneGraph& g) {
    Multigraph m;
    m.n = g.num_vertices();
    for (int e = 0; e < g.num_edges(); ++e)
        m.edges.emplace_back(g.map.dart_vertex[g.map.edge_darts[e][0]],
                             g.map.dart_vertex[g.map.edge_darts[e][1]]);
    return m;
}

namespace detail {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// can the chosen forest be completed to a spanning tree using edges >= i?
inline bool still_connectable(const Multigraph& mg, const Dsu& partial, size_t i) {
    Dsu d = partial;
    int comps = 0;
    for (int v = 0; v < mg.n; ++v) comps += (d.find(v) == v);
    for (size_t j = i; j < mg.edges.size() && comps > 1; ++j)
        if (d.join(mg.edges[j].first, mg.edges[j].second)) --comps;
    return comps == 1;
}

} // namespace detail

// All spanning trees as sorted edge-id lists, by contraction/deletion over
// edges in id order with a connectivity prune.
inline std::vector<std::vector<int>> spanning_trees(const Multigraph& mg, long long guard = 1000000) {
    std::vector<std::vector<int>> out;
    if (mg.n == 0) return out;
    std::vector<int> chosen;
    long long produced = 0;
    auto rec = [&](auto&& self, size_t i, detail::Dsu dsu, int picked) -> void {
        if (picked == mg.n - 1) {
            require(++produced <= guard, Errc::too_large, "spanning tree guard exceeded");
            out.push_back(chosen);
            return;
        }
        if (i == mg.edges.size()) return;
        if (!detail::still_connectable(mg, dsu, i)) return;
        auto [a, b] = mg.edges[i];
        if (dsu.find(a) != dsu.find(b)) {
            detail::Dsu with = dsu;
            with.join(a, b);
            chosen.push_back(static_cast<int>(i));
            self(self, i + 1, std::move(with), picked + 1);
            chosen.pop_back();
        }
        self(self, i + 1, std::move(dsu), picked);
    };
    rec(rec, 0, detail::Dsu(mg.n), 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_spanning_tree(const Multigraph& mg, const std::vector<int>& edges) {
    if (static_cast<int>(edges.size()) != mg.n - 1) return false;
    detail::Dsu d(mg.n);
    for (int e : edges) {
        if (e < 0 || e >= static_cast<int>(mg.edges.size())) return false;
        if (!d.join(mg.edges[e].first, mg.edges[e].second)) return false;
    }
    return true;
}

struct SpanningTree {
    std::vector<int> edges; // sorted
    bool contains(int e) const { return std::binary_search(edges.begin(), edges.end(), e); }
    bool operator==(const SpanningTree& o) const { return edges == o.edges; }
    bool operator<(const SpanningTree& o) const { return edges < o.edges; }
};

// base point b0 together with a designated incident edge (edge ids
// disambiguate parallel edges)
struct BasePair {
    int b0 = 0;
    int edge = 0;
};

struct TourStep {
    int node;
    int edge;
    bool operator==(const TourStep& o) const { return node == o.node && edge == o.edge; }
};

struct TourRecord {
    std::vector<TourStep> steps;
    std::vector<std::pair<int, int>> cuts; // (edge, endpoint at which it was cut), in tour order
};

inline int base_dart(const PlaneGraph& g, BasePair base) {
    require(base.edge >= 0 && base.edge < g.num_edges(), Errc::invalid_base, "no such base edge");
    auto [d0, d1] = g.map.edge_darts[base.edge];
    if (g.map.dart_vertex[d0] == base.b0) return d0;
    require(g.map.dart_vertex[d1] == base.b0, Errc::invalid_base, "base edge not incident to b0");
    return d1;
}

// The walk guided by a spanning tree: a non-tree current edge is skipped
// (rotation successor at the same vertex), a tree edge is crossed (rotation
// successor of the arriving dart); stops when the starting state would recur.
inline TourRecord tour(const PlaneGraph& g, const SpanningTree& tree, BasePair base) {
    require(is_spanning_tree(multigraph_of(g), tree.edges), Errc::semantic, "tour needs a spanning tree");
    const CombMap& m = g.map;
    const int start = base_dart(g, base);
    TourRecord rec;
    std::vector<char> cut_seen(g.num_edges(), 0);
    int d = start;
    const int limit = 2 * g.num_edges() + 1;
    do {
        rec.steps.push_back({m.dart_vertex[d], m.dart_edge[d]});
        require(static_cast<int>(rec.steps.size()) <= limit, Errc::semantic, "tour failed to close");
        int e = m.dart_edge[d];
        if (tree.contains(e)) {
            d = m.next[m.mate[d]];
        } else {
            if (!cut_seen[e]) {
                cut_seen[e] = 1;
                rec.cuts.emplace_back(e, m.dart_vertex[d]);
            }
            d = m.next[d];
        }
    } while (d != start);
    return rec;
}

// chip configuration witnessed by a spanning tree: one chip per non-tree
// edge, dropped at the endpoint where the tour first cuts it
struct BreakDivisor {
    ChipConfig div;
    SpanningTree tree;
    std::vector<std::pair<int, int>> assignment; // (non-tree edge, endpoint holding its chip)
};

inline BreakDivisor bernardi_break_divisor(const PlaneGraph& g, const SpanningTree& tree, BasePair base) {
    TourRecord rec = tour(g, tree, base);
    BreakDivisor out;
    out.div = ChipConfig(g.num_vertices());
    out.tree = tree;
    for (auto [e, v] : rec.cuts) {
        out.div[v] += 1;
        out.assignment.emplace_back(e, v);
    }
    return out;
}

// nonnegative vector on one class of a bipartite graph, realizable as
// (degree - 1) of a spanning tree
struct Hypertree {
    std::vector<int> side; // sorted vertex ids of the class
    std::vector<int> val;  // aligned with side

    bool operator==(const Hypertree& o) const { return side == o.side && val == o.val; }
    bool operator!=(const Hypertree& o) const { return !(*this == o); }
    bool operator<(const Hypertree& o) const { return val < o.val; }

    int index_of(int vertex) const {
        auto it = std::lower_bound(side.begin(), side.end(), vertex);
        require(it != side.end() && *it == vertex, Errc::unknown_vertex, "vertex not on this side");
        return static_cast<int>(it - side.begin());
    }
    long long total() const { return std::accumulate(val.begin(), val.end(), 0ll); }
};

// every edge must have exactly one endpoint in `side`
inline void check_bipartite_side(const Multigraph& mg, const std::vector<int>& side) {
    std::vector<char> in(mg.n, 0);
    for (int v : side) in[v] = 1;
    for (auto [a, b] : mg.edges)
        require(in[a] + in[b] == 1, Errc::not_bipartite, "side is not one class of a bipartition");
}

inline Hypertree hypertree_of_tree(const Multigraph& mg, const std::vector<int>& tree_edges,
                                   const std::vector<int>& side) {
    check_bipartite_side(mg, side);
    require(is_spanning_tree(mg, tree_edges), Errc::semantic, "not a spanning tree");
    Hypertree h;
    h.side = side;
    std::sort(h.side.begin(), h.side.end());
    h.val.assign(h.side.size(), -1);
    for (int e : tree_edges)
        for (int v : {mg.edges[e].first, mg.edges[e].second}) {
            auto it = std::lower_bound(h.side.begin(), h.side.end(), v);
            if (it != h.side.end() && *it == v) ++h.val[it - h.side.begin()];
        }
    return h;
}

inline Hypertree hypertree_of_tree(const PlaneGraph& g, const SpanningTree& t, const std::vector<int>& side) {
    return hypertree_of_tree(multigraph_of(g), t.edges, side);
}

// Realization search: a spanning tree with degree exactly val+1 on the side
// class. Degree caps suffice: the cap total equals the tree size, so any
// capped spanning tree meets every cap with equality.
inline bool is_hypertree(const Multigraph& mg, const Hypertree& h, long long guard = 4000000) {
    check_bipartite_side(mg, h.side);
    long long cap_total = 0;
    for (int v : h.val) {
        if (v < 0) return false;
        cap_total += v + 1;
    }
    if (cap_total != mg.n - 1) return false;

    std::vector<int> cap(mg.n, -1); // -1: unbounded
    for (size_t i = 0; i < h.side.size(); ++i) cap[h.side[i]] = h.val[i] + 1;
    std::vector<int> used(mg.n, 0);
    long long steps = 0;

    auto rec = [&](auto&& self, size_t i, detail::Dsu dsu, int picked) -> bool {
        require(++steps <= guard, Errc::too_large, "realization search guard exceeded");
        if (picked == mg.n - 1) return true;
        if (i == mg.edges.size()) return false;
        // connectivity through edges whose capped endpoint still has room
        {
            detail::Dsu d = dsu;
            int comps = 0;
            for (int v = 0; v < mg.n; ++v) comps += (d.find(v) == v);
            for (size_t j = i; j < mg.edges.size() && comps > 1; ++j) {
                auto [a, b] = mg.edges[j];
                int u = cap[a] >= 0 ? a : b;
                if (used[u] >= cap[u]) continue;
                if (d.join(a, b)) --comps;
            }
            if (comps > 1) return false;
        }
        auto [a, b] = mg.edges[i];
        int u = cap[a] >= 0 ? a : b;
        if (dsu.find(a) != dsu.find(b) && used[u] < cap[u]) {
            detail::Dsu with = dsu;
            with.join(a, b);
            ++used[u];
            if (self(self, i + 1, std::move(with), picked + 1)) return true;
            --used[u];
        }
        return self(self, i + 1, std::move(dsu), picked);
    };
    return rec(rec, 0, detail::Dsu(mg.n), 0);
}

// The subset characterization, exponential in the side size: nonnegative,
// total = |other class| - 1, and val(S) <= |N(S)| - 1 for every nonempty S.
inline bool hypertree_subset_test(const Multigraph& mg, const Hypertree& h) {
    check_bipartite_side(mg, h.side);
    require(h.side.size() <= 16, Errc::too_large, "subset test limited to 16 side nodes");
    for (int v : h.val)
        if (v < 0) return false;
    if (h.total() != mg.n - 1 - static_cast<long long>(h.side.size())) return false;

    std::vector<std::vector<int>> nbr(h.side.size());
    for (size_t i = 0; i < h.side.size(); ++i)
        for (size_t e = 0; e < mg.edges.size(); ++e) {
            auto [a, b] = mg.edges[e];
            if (a == h.side[i]) nbr[i].push_back(b);
            if (b == h.side[i]) nbr[i].push_back(a);
        }
    const unsigned k = static_cast<unsigned>(h.side.size());
    for (unsigned s = 1; s < (1u << k); ++s) {
        long long fs = 0;
        std::set<int> gamma;
        for (unsigned i = 0; i < k; ++i)
            if (s & (1u << i)) {
                fs += h.val[i];
                gamma.insert(nbr[i].begin(), nbr[i].end());
            }
        if (fs > static_cast<long long>(gamma.size()) - 1) return false;
    }
    return true;
}

// distinct degree vectors over all spanning trees
inline std::vector<Hypertree> enumerate_hypertrees(const Multigraph& mg, const std::vector<int>& side,
                                                   long long guard = 1000000) {
    check_bipartite_side(mg, side);
    std::vector<int> sorted_side = side;
    std::sort(sorted_side.begin(), sorted_side.end());
    std::set<std::vector<int>> seen;
    std::vector<Hypertree> out;
    for (const auto& tree : spanning_trees(mg, guard)) {
        Hypertree h = hypertree_of_tree(mg, tree, sorted_side);
        if (seen.insert(h.val).second) out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Hypertree> enumerate_hypertrees(const PlaneGraph& g, const std::vector<int>& side,
                                                   long long guard = 1000000) {
    return enumerate_hypertrees(multigraph_of(g), side, guard);
}

// every non-tree edge must be cut through at an endpoint of the cut class
inline bool is_jaeger_tree(const PlaneGraph& g, const SpanningTree& tree, BasePair base,
                           const std::vector<int>& cut_side) {
    TourRecord rec = tour(g, tree, base);
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : cut_side) in[v] = 1;
    for (auto [e, v] : rec.cuts)
        if (!in[v]) return false;
    return true;
}

inline std::vector<SpanningTree> jaeger_trees(const PlaneGraph& g, BasePair base,
                                              const std::vector<int>& cut_side,
                                              long long guard = 1000000) {
    std::vector<SpanningTree> out;
    for (auto& edges : spanning_trees(multigraph_of(g), guard)) {
        SpanningTree t{std::move(edges)};
        if (is_jaeger_tree(g, t, base, cut_side)) out.push_back(std::move(t));
    }
    return out;
}

// The greedy realization walk: starting with the base edge, an edge examined
// from the non-cut class is crossed; one examined from the cut class is
// deleted when the hypertree stays realizable without it, otherwise crossed.
// The surviving edges are the unique cut-class-cut Jaeger tree realizing f.
inline SpanningTree bernardi_process(const PlaneGraph& g, const Hypertree& f, BasePair base,
                                     const std::vector<int>& cut_side) {
    Multigraph mg = multigraph_of(g);
    require(is_hypertree(mg, f), Errc::not_a_hypertree, "input vector is not a hypertree");
    for (int v : f.side)
        for (int c : cut_side)
            require(v != c, Errc::not_a_hypertree, "hypertree must live on the non-cut class");

    const CombMap& m = g.map;
    std::vector<char> in_cut(g.num_vertices(), 0);
    for (int v : cut_side) in_cut[v] = 1;

    std::vector<int> nxt = m.next, prv = m.prev;
    std::vector<char> edge_alive(g.num_edges(), 1);
    std::vector<char> examined(m.num_darts(), 0);
    auto unlink = [&](int dart) {
        nxt[prv[dart]] = nxt[dart];
        prv[nxt[dart]] = prv[dart];
    };

    Multigraph residual = mg;
    auto realizable_without = [&](int edge) {
        Multigraph sub;
        sub.n = mg.n;
        for (int e = 0; e < g.num_edges(); ++e)
            if (edge_alive[e] && e != edge) sub.edges.push_back(mg.edges[e]);
        // edge ids shift, but only existence matters here
        Hypertree shifted = f;
        return is_hypertree(sub, shifted);
    };

    int d = base_dart(g, base);
    long long guard = 4ll * m.num_darts() + 4;
    while (!examined[d]) {
        require(--guard >= 0, Errc::semantic, "process failed to terminate");
        examined[d] = 1;
        int e = m.dart_edge[d];
        int v = m.dart_vertex[d];
        if (in_cut[v] && realizable_without(e)) {
            int succ = nxt[d];
            require(succ != d, Errc::semantic, "deletion would isolate a vertex");
            unlink(d);
            unlink(m.mate[d]);
            edge_alive[e] = 0;
            d = succ;
        } else {
            d = nxt[m.mate[d]];
        }
    }

    SpanningTree t;
    for (int e = 0; e < g.num_edges(); ++e)
        if (edge_alive[e]) t.edges.push_back(e);
    require(is_spanning_tree(mg, t.edges), Errc::not_found, "process did not leave a spanning tree");
    require(hypertree_of_tree(mg, t.edges, f.side) == f, Errc::not_found,
            "process tree does not realize the hypertree");
    return t;
}

// V-cut Jaeger trees biject the hypertrees on the two classes; from the
// non-cut class the representing tree comes from the greedy walk, from the
// cut class it is looked up among the enumerated Jaeger trees.
inline Hypertree bernardi_bijection(const PlaneGraph& g, const Hypertree& f, BasePair base,
                                    const std::vector<int>& cut_side) {
    std::vector<int> sorted_cut = cut_side;
    std::sort(sorted_cut.begin(), sorted_cut.end());
    if (f.side != sorted_cut) {
        SpanningTree t = bernardi_process(g, f, base, sorted_cut);
        return hypertree_of_tree(g, t, sorted_cut);
    }
    std::vector<int> other;
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : sorted_cut) in[v] = 1;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!in[v]) other.push_back(v);
    for (const auto& t : jaeger_trees(g, base, sorted_cut)) {
        if (hypertree_of_tree(g, t, sorted_cut) == f) return hypertree_of_tree(g, t, other);
    }
    fail(Errc::not_a_hypertree, "no Jaeger tree realizes the given vector");
}

// f on E in G_R  ->  deg - 1 - f on E in G_V (an involution)
inline Hypertree dual_hypertree(const Trinity& t, const DerivedGraph& gR, const DerivedGraph& gV,
                                const Hypertree& f) {
    require(is_hypertree(multigraph_of(gR.g), f), Errc::not_a_hypertree,
            "input is not a hypertree of the host graph");
    Hypertree out;
    for (size_t i = 0; i < f.side.size(); ++i) {
        int node = gR.node_id[f.side[i]];
        int gv_vertex = gV.vertex_of_node[node];
        require(gv_vertex >= 0, Errc::semantic, "side node missing from the dual host");
        out.side.push_back(gv_vertex);
        out.val.push_back(gR.g.map.degree(f.side[i]) - 1 - f.val[i]);
    }
    // same emerald nodes, ascending in both hosts, so side stays sorted
    require(std::is_sorted(out.side.begin(), out.side.end()), Errc::semantic, "side order broke");
    return out;
}

struct DualArcs {
    int root = 0;           // s0 in the derived digraph of the third color
    std::vector<int> arcs;  // sorted arc ids, duals of the non-tree edges
};

// the dual arc set of a spanning tree of G_R inside D_R; it is an
// out-arborescence at s0 exactly when the tree is a V-cut Jaeger tree
inline DualArcs jaeger_arborescence_dual(const Trinity& t, const DerivedGraph& gR,
                                         const DerivedDigraph& dR, const SpanningTree& tree,
                                         BasePair base) {
    require(base.edge >= 0 && base.edge < gR.g.num_edges(), Errc::invalid_base, "no such base edge");
    int trin_edge = gR.trin_edge[base.edge];
    int b0_node = gR.node_id[base.b0];
    bool b0_violet = t.node_color[b0_node] == Color::V;
    require(t.node_color[b0_node] == Color::V || t.node_color[b0_node] == Color::E,
            Errc::invalid_base, "base point must be violet or emerald");

    auto corners = triangle_corners(t);
    int s0_node = -1;
    for (int i = 0; i < t.num_triangles(); ++i) {
        bool has = false;
        for (int e : t.triangles[i].e) has = has || (e == trin_edge);
        if (!has) continue;
        if (t.triangles[i].white != b0_violet) s0_node = corners[i][static_cast<int>(Color::R)];
    }
    require(s0_node >= 0, Errc::invalid_base, "base edge has no triangle of the required tag");

    DualArcs out;
    out.root = dR.vertex_of_node[s0_node];
    for (int e = 0; e < gR.g.num_edges(); ++e) {
        if (tree.contains(e)) continue;
        out.arcs.push_back(dR.arc_of[gR.trin_edge[e]]);
    }
    std::sort(out.arcs.begin(), out.arcs.end());
    return out;
}

} // namespace trinity
