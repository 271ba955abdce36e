#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "trinity/combmap.hpp"
#include "trinity/error.hpp"

namespace trinity {

enum class Color { R = 0, E = 1, V = 2 };

inline const char* color_name(Color c) {
    switch (c) {
    case Color::R: return "R";
    case Color::E: return "E";
    case Color::V: return "V";
    }
    return "?";
}

inline Color color_next(Color c) { return static_cast<Color>((static_cast<int>(c) + 1) % 3); }
inline Color color_prev(Color c) { return static_cast<Color>((static_cast<int>(c) + 2) % 3); }

// Sphere triangulation with three-colored nodes. Triangles reference edge
// ids, not node triples, so parallel trinity edges stay unambiguous.
// White means the red, emerald, violet corners appear in clockwise order.
struct Trinity {
    std::vector<Color> node_color;
    std::vector<std::string> node_names;
    struct TEdge {
        int a, b;
    };
    std::vector<TEdge> edges;
    std::vector<std::string> edge_names;
    struct Triangle {
        std::array<int, 3> e;
        bool white;
    };
    std::vector<Triangle> triangles;

    int num_nodes() const { return static_cast<int>(node_color.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_triangles() const { return static_cast<int>(triangles.size()); }

    // the color that does not occur among the endpoints
    Color edge_color(int e) const {
        bool used[3] = {false, false, false};
        used[static_cast<int>(node_color[edges[e].a])] = true;
        used[static_cast<int>(node_color[edges[e].b])] = true;
        for (int c = 0; c < 3; ++c)
            if (!used[c]) return static_cast<Color>(c);
        return Color::R; // both ends same color: invalid, caught by validation
    }

    std::vector<int> class_nodes(Color c) const {
        std::vector<int> out;
        for (int n = 0; n < num_nodes(); ++n)
            if (node_color[n] == c) out.push_back(n);
        return out;
    }

    void default_names() {
        if (node_names.empty())
            for (int n = 0; n < num_nodes(); ++n) {
                const char* p = node_color[n] == Color::R ? "r" : node_color[n] == Color::E ? "e" : "v";
                node_names.push_back(p + std::to_string(n + 1));
            }
        if (edge_names.empty())
            for (int e = 0; e < num_edges(); ++e) edge_names.push_back("a" + std::to_string(e + 1));
    }
};

// corner nodes of every triangle, indexed by color; -1 entries mean the
// triangle is not a proper closed triple
inline std::vector<std::array<int, 3>> triangle_corners(const Trinity& t) {
    std::vector<std::array<int, 3>> out(t.num_triangles(), {-1, -1, -1});
    for (int i = 0; i < t.num_triangles(); ++i) {
        std::map<int, int> cnt;
        for (int e : t.triangles[i].e) {
            if (e < 0 || e >= t.num_edges()) { cnt.clear(); break; }
            ++cnt[t.edges[e].a];
            ++cnt[t.edges[e].b];
        }
        if (cnt.size() != 3) continue;
        bool ok = true;
        std::array<int, 3> corner{-1, -1, -1};
        for (auto [node, c] : cnt) {
            if (c != 2) { ok = false; break; }
            int col = static_cast<int>(t.node_color[node]);
            if (corner[col] != -1) { ok = false; break; }
            corner[col] = node;
        }
        if (ok && corner[0] >= 0 && corner[1] >= 0 && corner[2] >= 0) out[i] = corner;
    }
    return out;
}

struct ValidationItem {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool ok() const { return items.empty(); }
    std::string to_text() const {
        if (items.empty()) return "valid\n";
        std::string s;
        for (const auto& it : items) s += it.code + ": " + it.message + "\n";
        return s;
    }
};

// The cyclic counterclockwise order of edges and triangles around a node,
// recovered from tags alone: a white triangle at a node of color c is crossed
// counterclockwise from its next(c)-colored edge to its prev(c)-colored edge,
// a black one the other way round.
struct NodeLink {
    std::vector<int> edges;     // ccw
    std::vector<int> triangles; // triangles[i] sits between edges[i] and edges[i+1]
};

namespace detail {

struct TriAtNode {
    int tri;
    int from_edge, to_edge;
};

inline std::vector<std::vector<TriAtNode>> node_incidences(const Trinity& t) {
    std::vector<std::vector<TriAtNode>> at(t.num_nodes());
    for (int i = 0; i < t.num_triangles(); ++i) {
        const auto& tri = t.triangles[i];
        // group the three edges by the corner nodes they touch
        for (int n = 0; n < t.num_nodes(); ++n) (void)n;
        std::map<int, std::vector<int>> touching;
        for (int e : tri.e) {
            touching[t.edges[e].a].push_back(e);
            touching[t.edges[e].b].push_back(e);
        }
        for (auto& [node, es] : touching) {
            if (es.size() != 2) continue;
            Color cn = t.node_color[node];
            Color from_col = tri.white ? color_next(cn) : color_prev(cn);
            int e0 = es[0], e1 = es[1];
            if (t.edge_color(e0) != from_col) std::swap(e0, e1);
            at[node].push_back({i, e0, e1});
        }
    }
    return at;
}

} // namespace detail

// Throws Errc::semantic when the link around a node is not a single cycle.
inline NodeLink node_link(const Trinity& t, int node,
                          const std::vector<std::vector<detail::TriAtNode>>& at) {
    NodeLink link;
    const auto& inc = at[node];
    require(!inc.empty(), Errc::semantic, "node " + t.node_names[node] + " has no incident triangle");
    std::map<int, std::pair<int, int>> step; // from_edge -> (to_edge, triangle)
    for (const auto& x : inc) {
        require(!step.count(x.from_edge), Errc::semantic,
                "two triangles leave the same edge at node " + t.node_names[node]);
        step[x.from_edge] = {x.to_edge, x.tri};
    }
    int start = inc.front().from_edge;
    int e = start;
    do {
        auto it = step.find(e);
        require(it != step.end(), Errc::semantic,
                "link does not close at node " + t.node_names[node]);
        link.edges.push_back(e);
        link.triangles.push_back(it->second.second);
        e = it->second.first;
        require(static_cast<int>(link.edges.size()) <= static_cast<int>(inc.size()), Errc::semantic,
                "link wraps before covering node " + t.node_names[node]);
    } while (e != start);
    require(link.edges.size() == inc.size(), Errc::semantic,
            "link around node " + t.node_names[node] + " is not a single cycle");
    return link;
}

inline ValidationReport validate_trinity(const Trinity& t) {
    ValidationReport rep;
    auto flag = [&rep](const std::string& code, const std::string& msg) {
        rep.items.push_back({code, msg});
    };

    bool edges_ok = true;
    for (int e = 0; e < t.num_edges(); ++e) {
        const auto& ed = t.edges[e];
        if (ed.a < 0 || ed.a >= t.num_nodes() || ed.b < 0 || ed.b >= t.num_nodes()) {
            flag("edge-coloring", "edge " + std::to_string(e) + " references a missing node");
            edges_ok = false;
            continue;
        }
        if (ed.a == ed.b || t.node_color[ed.a] == t.node_color[ed.b]) {
            flag("edge-coloring", "edge " + t.edge_names[e] + " joins two nodes of the same color");
            edges_ok = false;
        }
    }

    auto corners = triangle_corners(t);
    bool tris_ok = edges_ok;
    for (int i = 0; i < t.num_triangles(); ++i) {
        for (int e : t.triangles[i].e)
            if (e < 0 || e >= t.num_edges()) {
                flag("triangle-structure", "triangle " + std::to_string(i) + " references a missing edge");
                tris_ok = false;
            }
        if (corners[i][0] < 0) {
            flag("triangle-structure",
                 "triangle " + std::to_string(i) + " is not a closed triple with one node of each color");
            tris_ok = false;
        }
    }

    // every edge in exactly two triangles, one of each tag
    std::vector<int> white_cnt(t.num_edges(), 0), black_cnt(t.num_edges(), 0);
    for (const auto& tri : t.triangles)
        for (int e : tri.e)
            if (e >= 0 && e < t.num_edges()) ++(tri.white ? white_cnt[e] : black_cnt[e]);
    for (int e = 0; e < t.num_edges(); ++e) {
        if (white_cnt[e] + black_cnt[e] != 2)
            flag("edge-coverage", "edge " + t.edge_names[e] + " lies in " +
                                      std::to_string(white_cnt[e] + black_cnt[e]) + " triangles");
        else if (white_cnt[e] != 1)
            flag("tag-alternation", "edge " + t.edge_names[e] + " has two same-tag triangles");
    }

    if (3 * t.num_triangles() != 2 * t.num_edges())
        flag("euler", "edge count is not 3/2 of the triangle count");
    if (t.num_nodes() - t.num_edges() + t.num_triangles() != 2)
        flag("euler", "nodes - edges + triangles differs from 2");

    // connectivity of the node-edge graph
    if (t.num_nodes() > 0 && edges_ok) {
        std::vector<std::vector<int>> adj(t.num_nodes());
        for (const auto& ed : t.edges) {
            adj[ed.a].push_back(ed.b);
            adj[ed.b].push_back(ed.a);
        }
        std::vector<char> vis(t.num_nodes(), 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!vis[w]) { vis[w] = 1; ++cnt; stack.push_back(w); }
        }
        if (cnt != t.num_nodes()) flag("connectivity", "node-edge graph is disconnected");
    }

    if (rep.ok() && tris_ok) {
        auto at = detail::node_incidences(t);
        for (int n = 0; n < t.num_nodes(); ++n) {
            try {
                node_link(t, n, at);
            } catch (const Error& err) {
                flag("vertex-link", err.what());
            }
        }
    }
    return rep;
}

// Trinity of a plane graph: violet nodes are the vertices, emerald nodes the
// edges, red nodes the faces. Every dart d contributes one edge of each color
// and two triangles; the white one lies left of d.
inline Trinity trinity_from_plane_graph(const PlaneGraph& g) {
    g.map.check();
    require(g.map.connected(), Errc::disconnected, "input graph is disconnected");
    require(genus2(g.map) == 0, Errc::non_planar, "input ribbon structure has positive genus");
    require(g.num_edges() > 0, Errc::infeasible, "need at least one edge");

    const CombMap& m = g.map;
    FaceSet fs = compute_faces(m);
    const int nv = m.num_vertices(), ne = m.num_edges(), nf = static_cast<int>(fs.faces.size());

    Trinity t;
    auto violet = [&](int v) { return v; };
    auto emerald = [&](int e) { return nv + e; };
    auto red = [&](int f) { return nv + ne + f; };
    t.node_color.assign(nv, Color::V);
    t.node_color.insert(t.node_color.end(), ne, Color::E);
    t.node_color.insert(t.node_color.end(), nf, Color::R);
    for (int v = 0; v < nv; ++v) t.node_names.push_back(m.vertex_names[v]);
    for (int e = 0; e < ne; ++e) t.node_names.push_back(m.edge_names[e]);
    for (int f = 0; f < nf; ++f) t.node_names.push_back("f" + std::to_string(f + 1));

    const int nd = m.num_darts();
    // edge ids: red edges [0, nd), violet edges [nd, 2nd), emerald [2nd, 3nd)
    for (int d = 0; d < nd; ++d) t.edges.push_back({violet(m.dart_vertex[d]), emerald(m.dart_edge[d])});
    for (int d = 0; d < nd; ++d) t.edges.push_back({emerald(m.dart_edge[d]), red(fs.face_of[d])});
    for (int d = 0; d < nd; ++d) t.edges.push_back({violet(m.dart_vertex[d]), red(fs.face_of[d])});
    auto red_edge = [&](int d) { return d; };
    auto violet_edge = [&](int d) { return nd + d; };
    auto emerald_edge = [&](int d) { return 2 * nd + d; };

    for (int d = 0; d < nd; ++d) {
        t.triangles.push_back({{red_edge(d), violet_edge(d), emerald_edge(d)}, true});
        t.triangles.push_back({{red_edge(d), violet_edge(m.mate[d]), emerald_edge(m.prev[d])}, false});
    }
    t.default_names();
    return t;
}

// Trinity of a balanced plane digraph: faces traversed along their arcs
// counterclockwise become emerald nodes, the clockwise ones red; each arc
// contributes a black triangle at its tail and a white one at its head.
inline Trinity trinity_from_balanced_digraph(const RibbonDigraph& g) {
    g.map.check();
    require(g.map.connected(), Errc::disconnected, "input digraph is disconnected");
    require(g.balanced(), Errc::not_balanced, "in- and out-arcs must alternate at every vertex");
    require(genus2(g.map) == 0, Errc::non_planar, "input ribbon structure has positive genus");
    require(g.num_arcs() > 0, Errc::infeasible, "need at least one arc");

    const CombMap& m = g.map;
    FaceSet fs = compute_faces(m);
    const int nv = m.num_vertices(), na = g.num_arcs(), nf = static_cast<int>(fs.faces.size());

    // a face orbit consists purely of tail darts (emerald) or head darts (red)
    std::vector<char> face_emerald(nf, 0);
    for (int f = 0; f < nf; ++f) {
        bool tail = g.is_tail(fs.faces[f][0]);
        for (int d : fs.faces[f])
            require(g.is_tail(d) == tail, Errc::not_balanced, "face boundary is not an oriented cycle");
        face_emerald[f] = tail ? 1 : 0;
    }

    Trinity t;
    t.node_color.assign(nv, Color::V);
    for (int v = 0; v < nv; ++v) t.node_names.push_back(m.vertex_names[v]);
    std::vector<int> face_node(nf);
    int e_count = 0, r_count = 0;
    for (int f = 0; f < nf; ++f) {
        face_node[f] = t.num_nodes();
        t.node_color.push_back(face_emerald[f] ? Color::E : Color::R);
        t.node_names.push_back(face_emerald[f] ? "g" + std::to_string(++e_count)
                                               : "r" + std::to_string(++r_count));
    }

    // edge ids: red edges [0, na), violet [na, 2na), emerald [2na, 3na)
    for (int a = 0; a < na; ++a) {
        int td = g.tail_dart[a];
        t.edges.push_back({m.dart_vertex[td], face_node[fs.face_of[td]]});
    }
    for (int a = 0; a < na; ++a) {
        int td = g.tail_dart[a], hd = m.mate[td];
        t.edges.push_back({face_node[fs.face_of[td]], face_node[fs.face_of[hd]]});
    }
    for (int a = 0; a < na; ++a) {
        int hd = m.mate[g.tail_dart[a]];
        t.edges.push_back({m.dart_vertex[hd], face_node[fs.face_of[hd]]});
    }
    auto red_edge = [&](int a) { return a; };
    auto violet_edge = [&](int a) { return na + a; };
    auto emerald_edge = [&](int a) { return 2 * na + a; };

    for (int a = 0; a < na; ++a) {
        int td = g.tail_dart[a], hd = m.mate[td];
        // black triangle at the tail: red edge of a, violet edge of a, and the
        // emerald edge of the arc whose head dart precedes td at the tail vertex
        int black_em = m.dart_edge[m.prev[td]];
        require(!g.is_tail(m.prev[td]), Errc::not_balanced, "alternation broken at a tail");
        t.triangles.push_back({{red_edge(a), violet_edge(a), emerald_edge(black_em)}, false});
        // white triangle at the head: the red edge of the arc whose tail dart
        // precedes hd at the head vertex
        int white_red = m.dart_edge[m.prev[hd]];
        require(g.is_tail(m.prev[hd]), Errc::not_balanced, "alternation broken at a head");
        t.triangles.push_back({{red_edge(white_red), violet_edge(a), emerald_edge(a)}, true});
    }
    t.default_names();
    return t;
}

// G_c: the bipartite graph on the two other color classes with the c-colored
// edges, carrying the embedding read off the triangulation.
struct DerivedGraph {
    PlaneGraph g;
    Color c = Color::R;
    std::vector<int> node_id;        // graph vertex -> trinity node
    std::vector<int> trin_edge;      // graph edge -> trinity edge
    std::vector<int> vertex_of_node; // trinity node -> graph vertex or -1
    std::vector<int> graph_edge_of;  // trinity edge -> graph edge or -1
};

inline DerivedGraph derived_bipartite(const Trinity& t, Color c) {
    auto rep = validate_trinity(t);
    require(rep.ok(), Errc::semantic, "invalid trinity: " + rep.to_text());

    DerivedGraph out;
    out.c = c;
    out.vertex_of_node.assign(t.num_nodes(), -1);
    out.graph_edge_of.assign(t.num_edges(), -1);
    for (int n = 0; n < t.num_nodes(); ++n)
        if (t.node_color[n] != c) {
            out.vertex_of_node[n] = static_cast<int>(out.node_id.size());
            out.node_id.push_back(n);
        }
    std::vector<std::pair<int, int>> ge;
    for (int e = 0; e < t.num_edges(); ++e)
        if (t.edge_color(e) == c) {
            out.graph_edge_of[e] = static_cast<int>(ge.size());
            out.trin_edge.push_back(e);
            ge.emplace_back(out.vertex_of_node[t.edges[e].a], out.vertex_of_node[t.edges[e].b]);
        }

    auto at = detail::node_incidences(t);
    std::vector<std::vector<std::pair<int, int>>> rot(out.node_id.size());
    for (size_t v = 0; v < out.node_id.size(); ++v) {
        NodeLink link = node_link(t, out.node_id[v], at);
        for (int e : link.edges) {
            if (t.edge_color(e) != c) continue;
            int le = out.graph_edge_of[e];
            int side = ge[le].first == static_cast<int>(v) ? 0 : 1;
            rot[v].emplace_back(le, side);
        }
    }
    out.g = make_plane_graph(static_cast<int>(out.node_id.size()), ge, rot);
    out.g.map.vertex_names.clear();
    out.g.map.edge_names.clear();
    for (int n : out.node_id) out.g.map.vertex_names.push_back(t.node_names[n]);
    for (int e : out.trin_edge) out.g.map.edge_names.push_back(t.edge_names[e]);
    return out;
}

// D_c: one arc per c-colored edge, from the c-corner of its black triangle to
// the c-corner of its white triangle; the rotation at a c-node is the link
// order of its triangles.
struct DerivedDigraph {
    RibbonDigraph d;
    Color c = Color::V;
    std::vector<int> node_id;        // digraph vertex -> trinity node
    std::vector<int> trin_edge;      // arc -> trinity edge
    std::vector<int> vertex_of_node; // trinity node -> digraph vertex or -1
    std::vector<int> arc_of;         // trinity edge -> arc or -1
};

inline DerivedDigraph derived_digraph(const Trinity& t, Color c) {
    auto rep = validate_trinity(t);
    require(rep.ok(), Errc::semantic, "invalid trinity: " + rep.to_text());

    DerivedDigraph out;
    out.c = c;
    out.vertex_of_node.assign(t.num_nodes(), -1);
    out.arc_of.assign(t.num_edges(), -1);
    for (int n = 0; n < t.num_nodes(); ++n)
        if (t.node_color[n] == c) {
            out.vertex_of_node[n] = static_cast<int>(out.node_id.size());
            out.node_id.push_back(n);
        }
    for (int e = 0; e < t.num_edges(); ++e)
        if (t.edge_color(e) == c) {
            out.arc_of[e] = static_cast<int>(out.trin_edge.size());
            out.trin_edge.push_back(e);
        }

    auto corners = triangle_corners(t);
    const int na = static_cast<int>(out.trin_edge.size());
    CombMap& m = out.d.map;
    m.vertex_darts.resize(out.node_id.size());
    m.dart_vertex.assign(2 * na, -1);
    m.dart_edge.resize(2 * na);
    m.mate.resize(2 * na);
    m.edge_darts.resize(na);
    out.d.tail_dart.resize(na);
    for (int a = 0; a < na; ++a) {
        m.edge_darts[a] = {2 * a, 2 * a + 1};
        out.d.tail_dart[a] = 2 * a;
        m.dart_edge[2 * a] = m.dart_edge[2 * a + 1] = a;
        m.mate[2 * a] = 2 * a + 1;
        m.mate[2 * a + 1] = 2 * a;
    }

    auto at = detail::node_incidences(t);
    const int ci = static_cast<int>(c);
    for (size_t v = 0; v < out.node_id.size(); ++v) {
        NodeLink link = node_link(t, out.node_id[v], at);
        for (int tri : link.triangles) {
            // the triangle's c-colored edge does not touch this node
            int ce = -1;
            for (int e : t.triangles[tri].e)
                if (t.edge_color(e) == c) ce = e;
            require(ce >= 0, Errc::semantic, "triangle lacks an edge of the derived color");
            int a = out.arc_of[ce];
            int dart = t.triangles[tri].white ? 2 * a + 1 : 2 * a;
            require(corners[tri][ci] == out.node_id[v], Errc::semantic,
                    "triangle corner disagrees with the node link");
            require(m.dart_vertex[dart] == -1, Errc::semantic, "arc end reused");
            m.dart_vertex[dart] = static_cast<int>(v);
            m.vertex_darts[v].push_back(dart);
        }
    }
    for (int d = 0; d < 2 * na; ++d)
        require(m.dart_vertex[d] >= 0, Errc::semantic, "arc end missing from every link");
    m.refresh();
    for (int n : out.node_id) m.vertex_names.push_back(t.node_names[n]);
    for (int e : out.trin_edge) m.edge_names.push_back(t.edge_names[e]);
    m.default_names();
    out.d.validate();
    return out;
}

} // namespace trinity
