#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trinity/error.hpp"

namespace trinity {

// Embedded multigraph as a combinatorial map: darts with a rotation (the
// counterclockwise dart order around each vertex) and a fixed-point-free
// pairing matching the two ends of each edge. Nothing geometric is stored.
struct CombMap {
    std::vector<std::vector<int>> vertex_darts; // ccw rotation per vertex
    std::vector<int> dart_vertex;
    std::vector<int> dart_edge;
    std::vector<int> mate;                      // pairing
    std::vector<std::array<int, 2>> edge_darts; // the two darts of each edge
    std::vector<int> next, prev;                // rotation successor/predecessor, derived

    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_names;
    std::vector<std::string> dart_names;

    int num_vertices() const { return static_cast<int>(vertex_darts.size()); }
    int num_edges() const { return static_cast<int>(edge_darts.size()); }
    int num_darts() const { return static_cast<int>(dart_vertex.size()); }
    int degree(int v) const { return static_cast<int>(vertex_darts[v].size()); }

    int other_end(int e, int v_from) const {
        int a = dart_vertex[edge_darts[e][0]];
        int b = dart_vertex[edge_darts[e][1]];
        return a == v_from ? b : a;
    }

    bool edge_incident(int e, int v) const {
        return dart_vertex[edge_darts[e][0]] == v || dart_vertex[edge_darts[e][1]] == v;
    }

    // Rebuild next/prev from the rotation lists; call after any mutation.
    void refresh() {
        const int nd = num_darts();
        next.assign(nd, -1);
        prev.assign(nd, -1);
        for (const auto& cyc : vertex_darts) {
            const int k = static_cast<int>(cyc.size());
            for (int i = 0; i < k; ++i) {
                next[cyc[i]] = cyc[(i + 1) % k];
                prev[cyc[(i + 1) % k]] = cyc[i];
            }
        }
    }

    void default_names() {
        if (vertex_names.empty())
            for (int v = 0; v < num_vertices(); ++v) vertex_names.push_back("v" + std::to_string(v + 1));
        if (edge_names.empty())
            for (int e = 0; e < num_edges(); ++e) edge_names.push_back("e" + std::to_string(e + 1));
        if (dart_names.empty())
            for (int d = 0; d < num_darts(); ++d) dart_names.push_back("d" + std::to_string(d + 1));
    }

    // Structural sanity: pairing is a fixed-point-free involution, rotations
    // partition the darts, edge records agree with the pairing.
    void check() const {
        const int nd = num_darts();
        require(static_cast<int>(mate.size()) == nd && static_cast<int>(dart_edge.size()) == nd,
                Errc::semantic, "dart arrays disagree in size");
        std::vector<char> seen(nd, 0);
        for (int v = 0; v < num_vertices(); ++v)
            for (int d : vertex_darts[v]) {
                require(d >= 0 && d < nd, Errc::semantic, "dart id out of range");
                require(!seen[d], Errc::semantic, "dart listed twice in rotations");
                seen[d] = 1;
                require(dart_vertex[d] == v, Errc::semantic, "dart attached to two vertices");
            }
        for (int d = 0; d < nd; ++d) {
            require(seen[d], Errc::semantic, "dart missing from rotations");
            require(mate[d] != d, Errc::semantic, "pairing has a fixed point");
            require(mate[mate[d]] == d, Errc::semantic, "pairing is not an involution");
            require(dart_edge[mate[d]] == dart_edge[d], Errc::semantic, "mates on different edges");
        }
        for (int e = 0; e < num_edges(); ++e) {
            auto [a, b] = edge_darts[e];
            require(mate[a] == b && dart_edge[a] == e && dart_edge[b] == e,
                    Errc::semantic, "edge record disagrees with pairing");
        }
    }

    bool connected() const {
        const int n = num_vertices();
        if (n <= 1) return true;
        std::vector<char> vis(n, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : vertex_darts[v]) {
                int w = dart_vertex[mate[d]];
                if (!vis[w]) {
                    vis[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        return cnt == n;
    }
};

// Faces are the orbits of d -> prev[mate[d]]; the face lies to the left of
// every dart in its orbit, and the orbit lists follow the counterclockwise
// walk around the face interior.
struct FaceSet {
    std::vector<std::vector<int>> faces;
    std::vector<int> face_of;
};

inline FaceSet compute_faces(const CombMap& m) {
    FaceSet fs;
    fs.face_of.assign(m.num_darts(), -1);
    for (int d0 = 0; d0 < m.num_darts(); ++d0) {
        if (fs.face_of[d0] >= 0) continue;
        std::vector<int> orbit;
        int d = d0;
        do {
            fs.face_of[d] = static_cast<int>(fs.faces.size());
            orbit.push_back(d);
            d = m.prev[m.mate[d]];
        } while (d != d0);
        fs.faces.push_back(std::move(orbit));
    }
    return fs;
}

inline int genus2(const CombMap& m) {  // twice the genus
    if (m.num_darts() == 0) return 0;
    FaceSet fs = compute_faces(m);
    return 2 - m.num_vertices() + m.num_edges() - static_cast<int>(fs.faces.size());
}

struct PlaneGraph {
    CombMap map;

    int num_vertices() const { return map.num_vertices(); }
    int num_edges() const { return map.num_edges(); }

    void validate(bool need_planar = true) const {
        map.check();
        require(map.connected(), Errc::disconnected, "graph is not connected");
        if (need_planar)
            require(genus2(map) == 0, Errc::non_planar, "ribbon structure has positive genus");
    }
};

// Plane digraph: every edge is an arc with a designated tail dart.
struct RibbonDigraph {
    CombMap map;
    std::vector<int> tail_dart; // per edge

    int num_vertices() const { return map.num_vertices(); }
    int num_arcs() const { return map.num_edges(); }
    bool is_tail(int d) const { return tail_dart[map.dart_edge[d]] == d; }
    int tail(int a) const { return map.dart_vertex[tail_dart[a]]; }
    int head(int a) const { return map.dart_vertex[map.mate[tail_dart[a]]]; }

    // in- and out-darts alternate strictly around every vertex
    bool balanced() const {
        for (const auto& cyc : map.vertex_darts) {
            const int k = static_cast<int>(cyc.size());
            if (k % 2 != 0) return false;
            for (int i = 0; i < k; ++i)
                if (is_tail(cyc[i]) == is_tail(cyc[(i + 1) % k])) return false;
        }
        return true;
    }

    void validate(bool need_planar = true) const {
        map.check();
        require(map.connected(), Errc::disconnected, "digraph is not connected");
        for (int a = 0; a < num_arcs(); ++a)
            require(map.dart_edge[tail_dart[a]] == a, Errc::semantic, "tail dart not on its arc");
        if (need_planar)
            require(genus2(map) == 0, Errc::non_planar, "ribbon structure has positive genus");
    }
};

// Builder used by tests and parsers: edges as endpoint pairs, rotations as
// per-vertex ccw lists of (edge, side) where side 0 means the first endpoint.
inline PlaneGraph make_plane_graph(int n, const std::vector<std::pair<int, int>>& edges,
                                   const std::vector<std::vector<std::pair<int, int>>>& rotations) {
    PlaneGraph g;
    CombMap& m = g.map;
    const int me = static_cast<int>(edges.size());
    m.vertex_darts.resize(n);
    m.dart_vertex.assign(2 * me, -1);
    m.dart_edge.resize(2 * me);
    m.mate.resize(2 * me);
    m.edge_darts.resize(me);
    for (int e = 0; e < me; ++e) {
        m.edge_darts[e] = {2 * e, 2 * e + 1};
        m.dart_edge[2 * e] = m.dart_edge[2 * e + 1] = e;
        m.mate[2 * e] = 2 * e + 1;
        m.mate[2 * e + 1] = 2 * e;
    }
    require(static_cast<int>(rotations.size()) == n, Errc::semantic, "rotation list size mismatch");
    for (int v = 0; v < n; ++v) {
        for (auto [e, side] : rotations[v]) {
            require(e >= 0 && e < me && (side == 0 || side == 1), Errc::semantic, "bad rotation entry");
            int expected = side == 0 ? edges[e].first : edges[e].second;
            require(expected == v, Errc::semantic, "rotation entry lists an edge end at the wrong vertex");
            int d = 2 * e + side;
            require(m.dart_vertex[d] == -1, Errc::semantic, "edge end used twice");
            m.dart_vertex[d] = v;
            m.vertex_darts[v].push_back(d);
        }
    }
    for (int d = 0; d < 2 * me; ++d)
        require(m.dart_vertex[d] >= 0, Errc::semantic, "edge end missing from rotations");
    m.refresh();
    m.default_names();
    return g;
}

// Planar dual with the rotation coming from the reversed orientation of the
// sphere: vertex set = faces, same darts and pairing, dual rotation at a face
// is the reversed face walk. Edge ids carry over (the dual edge crosses its
// primal edge).
inline PlaneGraph planar_dual(const PlaneGraph& g) {
    g.validate(false);
    require(genus2(g.map) == 0, Errc::non_planar, "dual requires genus 0");
    FaceSet fs = compute_faces(g.map);
    PlaneGraph d;
    CombMap& m = d.map;
    m.vertex_darts.resize(fs.faces.size());
    for (size_t f = 0; f < fs.faces.size(); ++f) {
        m.vertex_darts[f] = fs.faces[f];
        std::reverse(m.vertex_darts[f].begin(), m.vertex_darts[f].end());
    }
    m.dart_vertex = fs.face_of;
    m.dart_edge = g.map.dart_edge;
    m.mate = g.map.mate;
    m.edge_darts = g.map.edge_darts;
    m.refresh();
    for (size_t f = 0; f < fs.faces.size(); ++f) m.vertex_names.push_back("f" + std::to_string(f + 1));
    m.edge_names = g.map.edge_names;
    for (int dd = 0; dd < m.num_darts(); ++dd) m.dart_names.push_back("d" + std::to_string(dd + 1));
    return d;
}

// Bidirected version of a plane graph, arranged so that the digraph is
// balanced: each original dart d becomes a (tail, head) pair placed
// consecutively in the rotation; the arc of d runs along d.
inline RibbonDigraph bidirect(const PlaneGraph& g) {
    RibbonDigraph b;
    CombMap& m = b.map;
    const CombMap& gm = g.map;
    const int nd = gm.num_darts();
    m.vertex_darts.resize(gm.num_vertices());
    m.dart_vertex.resize(2 * nd);
    m.dart_edge.resize(2 * nd);
    m.mate.resize(2 * nd);
    m.edge_darts.resize(nd);
    b.tail_dart.resize(nd);
    for (int d = 0; d < nd; ++d) {
        int t = 2 * d, h = 2 * gm.mate[d] + 1;
        m.edge_darts[d] = {t, h};
        b.tail_dart[d] = t;
        m.dart_edge[t] = d;
        m.dart_edge[h] = d;
        m.mate[t] = h;
        m.mate[h] = t;
    }
    for (int v = 0; v < gm.num_vertices(); ++v)
        for (int d : gm.vertex_darts[v]) {
            m.vertex_darts[v].push_back(2 * d);
            m.vertex_darts[v].push_back(2 * d + 1);
            m.dart_vertex[2 * d] = v;
            m.dart_vertex[2 * d + 1] = v;
        }
    m.refresh();
    m.vertex_names = gm.vertex_names;
    for (int d = 0; d < nd; ++d) {
        const std::string& en = gm.edge_names.empty() ? ("e" + std::to_string(gm.dart_edge[d] + 1))
                                                      : gm.edge_names[gm.dart_edge[d]];
        m.edge_names.push_back(en + (d == gm.edge_darts[gm.dart_edge[d]][0] ? "+" : "-"));
    }
    m.default_names();
    return b;
}

inline PlaneGraph underlying_graph(const RibbonDigraph& d) {
    PlaneGraph g;
    g.map = d.map;
    return g;
}

// Canonical code of a connected map: breadth-first dart numbering from every
// root dart, encoding (rotation successor, mate, role) per dart; the minimum
// over roots is a complete isomorphism invariant for oriented maps.
inline std::vector<int> map_canonical_code(const CombMap& m, const std::vector<int>& role) {
    const int nd = m.num_darts();
    if (nd == 0) return {m.num_vertices()};
    std::vector<int> best;
    std::vector<int> num(nd), order(nd);
    for (int root = 0; root < nd; ++root) {
        std::fill(num.begin(), num.end(), -1);
        int cnt = 0;
        num[root] = cnt;
        order[cnt++] = root;
        for (int i = 0; i < cnt; ++i) {
            int d = order[i];
            for (int nb : {m.next[d], m.mate[d]}) {
                if (num[nb] < 0) {
                    num[nb] = cnt;
                    order[cnt++] = nb;
                }
            }
        }
        if (cnt != nd) fail(Errc::disconnected, "canonical code requires a connected map");
        std::vector<int> code;
        code.reserve(3 * nd);
        for (int i = 0; i < nd; ++i) {
            int d = order[i];
            code.push_back(num[m.next[d]]);
            code.push_back(num[m.mate[d]]);
            code.push_back(role.empty() ? 0 : role[d]);
        }
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

inline bool isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    return map_canonical_code(a.map, {}) == map_canonical_code(b.map, {});
}

inline bool isomorphic(const RibbonDigraph& a, const RibbonDigraph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_arcs() != b.num_arcs()) return false;
    auto roles = [](const RibbonDigraph& d) {
        std::vector<int> r(d.map.num_darts());
        for (int x = 0; x < d.map.num_darts(); ++x) r[x] = d.is_tail(x) ? 1 : 0;
        return r;
    };
    return map_canonical_code(a.map, roles(a)) == map_canonical_code(b.map, roles(b));
}

// Seeded generator of connected genus-0 ribbon multigraphs: a random plane
// tree plus face-corner edge insertions (inserting across a single face keeps
// the genus at zero). Avoids loops whenever n >= 2.
inline PlaneGraph random_plane_graph(int n_vertices, int n_edges, uint64_t seed) {
    require(n_vertices >= 1, Errc::infeasible, "need at least one vertex");
    require(n_edges >= n_vertices - 1, Errc::infeasible, "too few edges to connect");
    std::mt19937_64 rng(seed);
    auto rnd = [&rng](int bound) { return static_cast<int>(rng() % static_cast<uint64_t>(bound)); };

    PlaneGraph g;
    CombMap& m = g.map;
    m.vertex_darts.resize(n_vertices);

    auto new_dart = [&m](int v, int e) {
        int d = m.num_darts();
        m.dart_vertex.push_back(v);
        m.dart_edge.push_back(e);
        m.mate.push_back(-1);
        return d;
    };

    // random plane tree
    for (int v = 1; v < n_vertices; ++v) {
        int p = rnd(v);
        int e = m.num_edges();
        int d1 = new_dart(p, e), d2 = new_dart(v, e);
        m.mate[d1] = d2;
        m.mate[d2] = d1;
        m.edge_darts.push_back({d1, d2});
        auto& rot = m.vertex_darts[p];
        rot.insert(rot.begin() + rnd(static_cast<int>(rot.size()) + 1), d1);
        m.vertex_darts[v].push_back(d2);
    }
    m.refresh();

    int extra = n_edges - (n_vertices - 1);
    for (int k = 0; k < extra; ++k) {
        FaceSet fs = compute_faces(m);
        int d1 = -1, d2 = -1;
        if (n_vertices == 1) {
            // only loops are possible; attach inside a random face (or at the
            // bare vertex while it has no darts yet)
            int e = m.num_edges();
            int a = new_dart(0, e), b = new_dart(0, e);
            m.mate[a] = b;
            m.mate[b] = a;
            m.edge_darts.push_back({a, b});
            auto& rot = m.vertex_darts[0];
            int pos = rot.empty() ? 0 : rnd(static_cast<int>(rot.size()) + 1);
            rot.insert(rot.begin() + pos, b);
            rot.insert(rot.begin() + pos, a);
            m.refresh();
            continue;
        }
        for (int attempt = 0; attempt < 256 && d1 < 0; ++attempt) {
            const auto& face = fs.faces[rnd(static_cast<int>(fs.faces.size()))];
            int c1 = face[rnd(static_cast<int>(face.size()))];
            int c2 = face[rnd(static_cast<int>(face.size()))];
            if (m.dart_vertex[c1] != m.dart_vertex[c2]) { d1 = c1; d2 = c2; }
        }
        if (d1 < 0) {
            // deterministic sweep as a fallback
            for (const auto& face : fs.faces) {
                for (int c1 : face)
                    for (int c2 : face)
                        if (m.dart_vertex[c1] != m.dart_vertex[c2]) { d1 = c1; d2 = c2; }
                if (d1 >= 0) break;
            }
        }
        require(d1 >= 0, Errc::infeasible, "no loopless planar insertion available");
        int e = m.num_edges();
        int u = m.dart_vertex[d1], w = m.dart_vertex[d2];
        int a = new_dart(u, e), b = new_dart(w, e);
        m.mate[a] = b;
        m.mate[b] = a;
        m.edge_darts.push_back({a, b});
        auto insert_after = [&m](int after, int d) {
            auto& rot = m.vertex_darts[m.dart_vertex[after]];
            auto it = std::find(rot.begin(), rot.end(), after);
            rot.insert(it + 1, d);
        };
        insert_after(d1, a);
        insert_after(d2, b);
        m.refresh();
    }
    m.default_names();
    g.validate();
    return g;
}

} // namespace trinity
