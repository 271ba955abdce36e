#pragma once

#include <array>
#include <map>
#include <memory>
#include <queue>
#include <vector>

#include "trinity/hypertree.hpp"
#include "trinity/intmatrix.hpp"
#include "trinity/sandpile.hpp"
#include "trinity/trinity.hpp"

namespace trinity {

// chips on all three classes at once
struct TriChip {
    std::array<ChipConfig, 3> part; // indexed by Color

    ChipConfig& operator[](Color c) { return part[static_cast<int>(c)]; }
    const ChipConfig& operator[](Color c) const { return part[static_cast<int>(c)]; }
};

// one column per white triangle: the characteristic vector of its three
// corner nodes inside Z^(V u E u R)
inline IntMatrix white_matrix(const Trinity& t, std::vector<int>* white_cols = nullptr) {
    auto corners = triangle_corners(t);
    std::vector<int> cols;
    for (int i = 0; i < t.num_triangles(); ++i)
        if (t.triangles[i].white) cols.push_back(i);
    IntMatrix w(t.num_nodes(), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int corner : corners[cols[j]]) w.at(corner, static_cast<int>(j)) = 1;
    if (white_cols) *white_cols = cols;
    return w;
}

// Everything the group-level operations share: the derived graphs and
// digraphs, one sandpile group per color, and the white-triangle lattice.
struct TrinityCtx {
    Trinity t;
    std::array<DerivedGraph, 3> G;
    std::array<DerivedDigraph, 3> D;
    std::array<std::unique_ptr<SandpileGroup>, 3> group;
    std::array<std::vector<int>, 3> cls; // class node lists, ascending
    std::vector<int> class_rank;         // node -> rank inside its class

    IntMatrix white;
    std::vector<int> white_cols; // column -> triangle id
    ColEchelon white_ech;
    std::array<ColEchelon, 3> phi_ech; // echelon of [white | -I_class]
    std::array<ColEchelon, 3> psi_ech; // echelon of [white | +I_class]

    explicit TrinityCtx(Trinity tr) : t(std::move(tr)) {
        auto rep = validate_trinity(t);
        require(rep.ok(), Errc::semantic, "invalid trinity: " + rep.to_text());
        class_rank.assign(t.num_nodes(), -1);
        for (int c = 0; c < 3; ++c) {
            Color col = static_cast<Color>(c);
            cls[c] = t.class_nodes(col);
            for (size_t i = 0; i < cls[c].size(); ++i) class_rank[cls[c][i]] = static_cast<int>(i);
            G[c] = derived_bipartite(t, col);
            D[c] = derived_digraph(t, col);
            group[c] = std::make_unique<SandpileGroup>(digraph_of(D[c].d));
        }
        white = white_matrix(t, &white_cols);
        white_ech = column_echelon(white);
        for (int c = 0; c < 3; ++c) {
            const int k = static_cast<int>(cls[c].size());
            IntMatrix m(t.num_nodes(), white.cols() + k);
            for (int r = 0; r < t.num_nodes(); ++r)
                for (int j = 0; j < white.cols(); ++j) m.at(r, j) = white.at(r, j);
            IntMatrix mpsi = m;
            for (int i = 0; i < k; ++i) {
                m.at(cls[c][i], white.cols() + i) = -1;
                mpsi.at(cls[c][i], white.cols() + i) = 1;
            }
            phi_ech[c] = column_echelon(m);
            psi_ech[c] = column_echelon(mpsi);
        }
    }

    const SandpileGroup& grp(Color c) const { return *group[static_cast<int>(c)]; }
    const std::vector<int>& class_of(Color c) const { return cls[static_cast<int>(c)]; }

    std::vector<Integer> embed(const TriChip& x) const {
        std::vector<Integer> v(t.num_nodes(), 0);
        for (int c = 0; c < 3; ++c) {
            require(x.part[c].size() == static_cast<int>(cls[c].size()), Errc::semantic,
                    "class size mismatch");
            for (size_t i = 0; i < cls[c].size(); ++i) v[cls[c][i]] = x.part[c][static_cast<int>(i)];
        }
        return v;
    }

    TriChip single(Color c, const ChipConfig& x) const {
        TriChip out;
        for (int i = 0; i < 3; ++i) out.part[i] = ChipConfig(static_cast<int>(cls[i].size()));
        out[c] = x;
        return out;
    }

    // chips of a hypertree on class c: side nodes ascend like the class list
    ChipConfig chips_of_hypertree(Color c, const DerivedGraph& host, const Hypertree& f) const {
        const auto& klass = class_of(c);
        require(f.side.size() == klass.size(), Errc::semantic, "hypertree side is not the class");
        ChipConfig x(static_cast<int>(klass.size()));
        for (size_t i = 0; i < f.side.size(); ++i) {
            require(host.node_id[f.side[i]] == klass[i], Errc::semantic,
                    "hypertree side does not match the class order");
            x[static_cast<int>(i)] = f.val[i];
        }
        return x;
    }

    std::vector<int> side_in(Color host, Color c) const {
        std::vector<int> out;
        const auto& hg = G[static_cast<int>(host)];
        for (size_t v = 0; v < hg.node_id.size(); ++v)
            if (t.node_color[hg.node_id[v]] == c) out.push_back(static_cast<int>(v));
        return out;
    }
};

inline bool white_triangle_equivalent(const TrinityCtx& ctx, const TriChip& a, const TriChip& b) {
    auto va = ctx.embed(a), vb = ctx.embed(b);
    for (size_t i = 0; i < va.size(); ++i) va[i] -= vb[i];
    return lattice_contains(ctx.white_ech, va);
}

// phi_{from->to}([x]) = [y] with (x on `from`) ~ (-y on `to`) modulo white
// triangles; solved from the combined system [white columns | -identity].
inline PicClass phi(const TrinityCtx& ctx, Color from, Color to, const ChipConfig& x) {
    require(x.degree() == 0, Errc::degree_nonzero, "phi needs a degree-zero class");
    require(from != to, Errc::semantic, "source and target class coincide");
    auto b = ctx.embed(ctx.single(from, x));
    auto sol = lattice_solve(ctx.phi_ech[static_cast<int>(to)], b);
    require(sol.has_value(), Errc::not_found, "no white-triangle combination found");
    const auto& klass = ctx.class_of(to);
    ChipConfig y(static_cast<int>(klass.size()));
    for (size_t i = 0; i < klass.size(); ++i) y[static_cast<int>(i)] = (*sol)[ctx.white.cols() + i];
    return ctx.grp(to).class_of(y);
}

inline PicClass phi(const TrinityCtx& ctx, Color from, Color to, const PicClass& x) {
    return phi(ctx, from, to, x.rep);
}

// psi is the variant with (x on `from`) ~ (+y on `to`)
inline PicClass psi(const TrinityCtx& ctx, Color from, Color to, const ChipConfig& x) {
    require(x.degree() == 0, Errc::degree_nonzero, "psi needs a degree-zero class");
    require(from != to, Errc::semantic, "source and target class coincide");
    auto b = ctx.embed(ctx.single(from, x));
    auto sol = lattice_solve(ctx.psi_ech[static_cast<int>(to)], b);
    require(sol.has_value(), Errc::not_found, "no white-triangle combination found");
    const auto& klass = ctx.class_of(to);
    ChipConfig y(static_cast<int>(klass.size()));
    for (size_t i = 0; i < klass.size(); ++i) y[static_cast<int>(i)] = (*sol)[ctx.white.cols() + i];
    return ctx.grp(to).class_of(y);
}

inline PicClass psi(const TrinityCtx& ctx, Color from, Color to, const PicClass& x) {
    return psi(ctx, from, to, x.rep);
}

struct ChipTransport {
    std::vector<std::pair<int, Integer>> white_coeffs; // (triangle id, coefficient)
    TriChip result;                                    // all chips on the target class
};

namespace detail {

// breadth-first shortest path between two vertices, ascending-id tie-breaks
inline std::vector<int> bfs_path_edges(const PlaneGraph& g, int src, int dst) {
    const auto mg = multigraph_of(g);
    std::vector<std::vector<std::pair<int, int>>> adj(mg.n); // (neighbor, edge)
    for (int e = 0; e < static_cast<int>(mg.edges.size()); ++e) {
        auto [a, b] = mg.edges[e];
        adj[a].emplace_back(b, e);
        adj[b].emplace_back(a, e);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());
    std::vector<int> par_edge(mg.n, -1), par(mg.n, -1);
    std::vector<char> vis(mg.n, 0);
    std::queue<int> q;
    q.push(src);
    vis[src] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == dst) break;
        for (auto [w, e] : adj[v])
            if (!vis[w]) {
                vis[w] = 1;
                par[w] = v;
                par_edge[w] = e;
                q.push(w);
            }
    }
    require(vis[dst], Errc::disconnected, "no path in the host graph");
    std::vector<int> edges;
    for (int v = dst; v != src; v = par[v]) edges.push_back(par_edge[v]);
    std::reverse(edges.begin(), edges.end());
    return edges;
}

} // namespace detail

// The constructive route behind phi/psi: while some source-class chip is off
// zero, walk a path of `to`-colored edges between a positive and a negative
// node and add alternating +-1 white triangles along it. Net effect: one chip
// moves inside the source class, the dumps land on the target class only.
inline ChipTransport chip_transport(const TrinityCtx& ctx, Color from, Color to, const ChipConfig& x) {
    require(x.degree() == 0, Errc::degree_nonzero, "transport needs a degree-zero configuration");
    require(from != to, Errc::semantic, "source and target class coincide");
    const auto& host = ctx.G[static_cast<int>(to)]; // contains `from` and the third class
    const auto& klass = ctx.class_of(from);
    require(x.size() == static_cast<int>(klass.size()), Errc::semantic, "class size mismatch");

    // white triangle of each `to`-colored trinity edge
    std::vector<int> white_of_edge(ctx.t.num_edges(), -1);
    for (int i = 0; i < ctx.t.num_triangles(); ++i)
        if (ctx.t.triangles[i].white)
            for (int e : ctx.t.triangles[i].e) white_of_edge[e] = i;
    auto corners = triangle_corners(ctx.t);

    std::map<int, Integer> coeffs;
    ChipConfig cur = x;
    ChipConfig dump(static_cast<int>(ctx.class_of(to).size()));
    long long guard = 0;
    for (;;) {
        int pos = -1, neg = -1;
        for (int i = 0; i < cur.size(); ++i) {
            if (pos < 0 && cur[i] > 0) pos = i;
            if (neg < 0 && cur[i] < 0) neg = i;
        }
        if (pos < 0 && neg < 0) break;
        require(pos >= 0 && neg >= 0 && ++guard < 100000, Errc::semantic, "transport failed to settle");
        Integer amount = cur[pos] < -cur[neg] ? cur[pos] : -cur[neg];

        int src = host.vertex_of_node[klass[pos]];
        int dst = host.vertex_of_node[klass[neg]];
        auto path = detail::bfs_path_edges(host.g, src, dst);
        Integer sign = -1;
        for (int le : path) {
            int trin_edge = host.trin_edge[le];
            int w = white_of_edge[trin_edge];
            coeffs[w] += sign * amount;
            // the white triangle touches one node of each class
            int from_node = corners[w][static_cast<int>(from)];
            int to_node = corners[w][static_cast<int>(to)];
            cur[ctx.class_rank[from_node]] += sign * amount;
            dump[ctx.class_rank[to_node]] += sign * amount;
            sign = -sign;
        }
    }

    ChipTransport out;
    for (auto [tri, c] : coeffs)
        if (c != 0) out.white_coeffs.emplace_back(tri, c);
    out.result = ctx.single(to, dump);
    // sanity: x + sum(coeffs * white triangles) really equals the dump vector
    auto lhs = ctx.embed(ctx.single(from, x));
    for (auto [tri, c] : out.white_coeffs)
        for (int corner : corners[tri]) lhs[corner] += c;
    auto rhs = ctx.embed(out.result);
    require(lhs == rhs, Errc::semantic, "transport bookkeeping failed");
    return out;
}

struct AwStructure {
    int free_rank = 0;
    std::vector<Integer> torsion; // nontrivial invariant factors
};

// Smith form of the white-triangle matrix describes the quotient of
// Z^(V u E u R) by white triangle equivalence.
inline AwStructure aw_structure(const Trinity& t) {
    auto w = white_matrix(t);
    auto s = smith_normal_form(w);
    AwStructure out;
    out.free_rank = t.num_nodes() - s.rank;
    for (const auto& d : s.diag)
        if (d > 1) out.torsion.push_back(d);
    return out;
}

inline AwStructure aw_structure(const TrinityCtx& ctx) { return aw_structure(ctx.t); }

// The classical reference-orientation isomorphism between the sandpile
// groups of a plane graph and of its dual: write the representative as an
// integer combination of edge boundaries, transport the coefficients to the
// dual edges (each turned clockwise), read off the class. `flip_edge`
// reverses one reference orientation to exercise independence of the choice.
inline PicClass cori_rossin_iso(const PlaneGraph& g, const SandpileGroup& primal,
                                const SandpileGroup& dual, const PicClass& x, int flip_edge = -1) {
    require(x.degree() == 0, Errc::degree_nonzero, "the isomorphism acts on degree-zero classes");
    require(genus2(g.map) == 0, Errc::non_planar, "dual transport needs genus 0");
    require(primal.digraph().n == g.num_vertices(), Errc::semantic, "primal group mismatch");
    FaceSet fs = compute_faces(g.map);
    require(dual.digraph().n == static_cast<int>(fs.faces.size()), Errc::semantic, "dual group mismatch");

    const int n = g.num_vertices(), m = g.num_edges();
    IntMatrix inc(n, m);
    std::vector<int> tail_dart(m);
    for (int e = 0; e < m; ++e) {
        int d = g.map.edge_darts[e][0];
        if (e == flip_edge) d = g.map.edge_darts[e][1];
        tail_dart[e] = d;
        inc.at(g.map.dart_vertex[d], e) -= 1;            // tail
        inc.at(g.map.dart_vertex[g.map.mate[d]], e) += 1; // head
    }
    auto ech = column_echelon(inc);
    auto a = lattice_solve(ech, x.rep.v);
    require(a.has_value(), Errc::not_found, "representative is not a boundary combination");

    // dual edge oriented from the face left of the edge to the face right
    ChipConfig y(static_cast<int>(fs.faces.size()));
    for (int e = 0; e < m; ++e) {
        int left = fs.face_of[tail_dart[e]];
        int right = fs.face_of[g.map.mate[tail_dart[e]]];
        y[left] -= (*a)[e];
        y[right] += (*a)[e];
    }
    return dual.class_of(y);
}

} // namespace trinity
