#pragma once

#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trinity/combmap.hpp"
#include "trinity/error.hpp"
#include "trinity/hypertree.hpp"
#include "trinity/sandpile.hpp"
#include "trinity/trinity.hpp"

namespace trinity {

class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& msg)
        : Error(Errc::parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line, col;
};

namespace io_detail {

struct Token {
    std::string text;
    int line, col;
};

// whitespace-separated tokens per line, '#' starts a comment
inline std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    int lineno = 1;
    size_t i = 0;
    while (i <= text.size()) {
        std::vector<Token> toks;
        size_t start = i;
        while (i < text.size() && text[i] != '\n') ++i;
        std::string_view line = text.substr(start, i - start);
        size_t j = 0;
        while (j < line.size()) {
            if (line[j] == '#') break;
            if (isspace(static_cast<unsigned char>(line[j]))) { ++j; continue; }
            size_t s = j;
            while (j < line.size() && !isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
            toks.push_back({std::string(line.substr(s, j - s)), lineno, static_cast<int>(s + 1)});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        ++lineno;
        if (i >= text.size()) break;
        ++i;
    }
    return lines;
}

inline std::string strip_colon(const Token& t) {
    if (!t.text.empty() && t.text.back() == ':') return t.text.substr(0, t.text.size() - 1);
    throw ParseError(t.line, t.col, "expected '" + t.text + "' to end with ':'");
}

struct NameTable {
    std::map<std::string, int> index;
    std::vector<std::string> names;

    int add(const Token& t, const char* what) {
        auto [it, fresh] = index.emplace(t.text, static_cast<int>(names.size()));
        if (!fresh) throw ParseError(t.line, t.col, std::string(what) + " '" + t.text + "' declared twice");
        names.push_back(t.text);
        return it->second;
    }
    int get(const Token& t, const char* what) const {
        auto it = index.find(t.text);
        if (it == index.end())
            throw ParseError(t.line, t.col, std::string("unknown ") + what + " '" + t.text + "'");
        return it->second;
    }
};

struct MapAccum {
    NameTable vertices, edges, darts;
    std::vector<std::vector<int>> rotations;       // per vertex, dart ids
    std::vector<std::pair<Token, Token>> edge_toks; // the two dart tokens per edge
};

inline void read_vertex_line(MapAccum& acc, const std::vector<Token>& toks) {
    if (toks.size() < 2) throw ParseError(toks[0].line, toks[0].col, "vertex needs a name");
    Token name = toks[1];
    name.text = strip_colon(toks[1]);
    acc.vertices.add(name, "vertex");
    std::vector<int> rot;
    for (size_t i = 2; i < toks.size(); ++i) rot.push_back(acc.darts.add(toks[i], "dart"));
    acc.rotations.push_back(std::move(rot));
}

inline CombMap finish_map(const MapAccum& acc) {
    CombMap m;
    m.vertex_darts.resize(acc.rotations.size());
    const int nd = static_cast<int>(acc.darts.names.size());
    m.dart_vertex.assign(nd, -1);
    m.dart_edge.assign(nd, -1);
    m.mate.assign(nd, -1);
    for (size_t v = 0; v < acc.rotations.size(); ++v) {
        m.vertex_darts[v] = acc.rotations[v];
        for (int d : acc.rotations[v]) m.dart_vertex[d] = static_cast<int>(v);
    }
    for (size_t e = 0; e < acc.edge_toks.size(); ++e) {
        const auto& [ta, tb] = acc.edge_toks[e];
        int a = acc.darts.get(ta, "dart");
        int b = acc.darts.get(tb, "dart");
        if (a == b) throw ParseError(ta.line, ta.col, "an edge needs two distinct darts");
        for (auto [d, tok] : {std::pair{a, ta}, std::pair{b, tb}}) {
            if (m.dart_vertex[d] < 0)
                throw ParseError(tok.line, tok.col, "dart '" + tok.text + "' is not in any rotation");
            if (m.dart_edge[d] >= 0)
                throw ParseError(tok.line, tok.col, "dart '" + tok.text + "' used by two edges");
        }
        m.dart_edge[a] = m.dart_edge[b] = static_cast<int>(e);
        m.mate[a] = b;
        m.mate[b] = a;
        m.edge_darts.push_back({a, b});
    }
    for (int d = 0; d < nd; ++d)
        require(m.dart_edge[d] >= 0, Errc::semantic,
                "dart '" + acc.darts.names[d] + "' belongs to no edge");
    m.refresh();
    m.vertex_names = acc.vertices.names;
    m.edge_names = acc.edges.names;
    m.dart_names = acc.darts.names;
    return m;
}

} // namespace io_detail

// ---------------------------------------------------------------------------
// planegraph v1
//
//   planegraph v1
//   vertex <id>: <dart> <dart> ...     # counterclockwise
//   edge <id>: <dart> <dart>

inline PlaneGraph parse_plane_graph(std::string_view text) {
    auto lines = io_detail::tokenize(text);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0].text != "planegraph" || lines[0][1].text != "v1")
        throw ParseError(1, 1, "expected header 'planegraph v1'");
    io_detail::MapAccum acc;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& toks = lines[i];
        if (toks[0].text == "vertex") {
            io_detail::read_vertex_line(acc, toks);
        } else if (toks[0].text == "edge") {
            if (toks.size() != 4) throw ParseError(toks[0].line, toks[0].col, "edge <id>: <dart> <dart>");
            io_detail::Token name = toks[1];
            name.text = io_detail::strip_colon(toks[1]);
            acc.edges.add(name, "edge");
            acc.edge_toks.emplace_back(toks[2], toks[3]);
        } else {
            throw ParseError(toks[0].line, toks[0].col, "unknown directive '" + toks[0].text + "'");
        }
    }
    PlaneGraph g;
    g.map = io_detail::finish_map(acc);
    g.map.check();
    return g;
}

inline std::string serialize(const PlaneGraph& g) {
    std::ostringstream os;
    os << "planegraph v1\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        os << "vertex " << g.map.vertex_names[v] << ":";
        for (int d : g.map.vertex_darts[v]) os << " " << g.map.dart_names[d];
        os << "\n";
    }
    for (int e = 0; e < g.num_edges(); ++e)
        os << "edge " << g.map.edge_names[e] << ": " << g.map.dart_names[g.map.edge_darts[e][0]]
           << " " << g.map.dart_names[g.map.edge_darts[e][1]] << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// planedigraph v1 : as planegraph, but arcs give tail and head darts
//
//   planedigraph v1
//   vertex <id>: <dart> <dart> ...
//   arc <id>: <tail-dart> <head-dart>

inline RibbonDigraph parse_plane_digraph(std::string_view text) {
    auto lines = io_detail::tokenize(text);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0].text != "planedigraph" || lines[0][1].text != "v1")
        throw ParseError(1, 1, "expected header 'planedigraph v1'");
    io_detail::MapAccum acc;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& toks = lines[i];
        if (toks[0].text == "vertex") {
            io_detail::read_vertex_line(acc, toks);
        } else if (toks[0].text == "arc") {
            if (toks.size() != 4) throw ParseError(toks[0].line, toks[0].col, "arc <id>: <tail-dart> <head-dart>");
            io_detail::Token name = toks[1];
            name.text = io_detail::strip_colon(toks[1]);
            acc.edges.add(name, "arc");
            acc.edge_toks.emplace_back(toks[2], toks[3]);
        } else {
            throw ParseError(toks[0].line, toks[0].col, "unknown directive '" + toks[0].text + "'");
        }
    }
    RibbonDigraph d;
    d.map = io_detail::finish_map(acc);
    d.map.check();
    for (int a = 0; a < d.map.num_edges(); ++a) d.tail_dart.push_back(d.map.edge_darts[a][0]);
    return d;
}

inline std::string serialize(const RibbonDigraph& d) {
    std::ostringstream os;
    os << "planedigraph v1\n";
    for (int v = 0; v < d.num_vertices(); ++v) {
        os << "vertex " << d.map.vertex_names[v] << ":";
        for (int x : d.map.vertex_darts[v]) os << " " << d.map.dart_names[x];
        os << "\n";
    }
    for (int a = 0; a < d.num_arcs(); ++a)
        os << "arc " << d.map.edge_names[a] << ": " << d.map.dart_names[d.tail_dart[a]] << " "
           << d.map.dart_names[d.map.mate[d.tail_dart[a]]] << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// trinity v1
//
//   trinity v1
//   node <id> <R|E|V>
//   edge <id>: <nodeA> <nodeB>
//   triangle: <edgeId> <edgeId> <edgeId> <W|B>

inline Trinity parse_trinity(std::string_view text) {
    auto lines = io_detail::tokenize(text);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0].text != "trinity" || lines[0][1].text != "v1")
        throw ParseError(1, 1, "expected header 'trinity v1'");
    Trinity t;
    io_detail::NameTable nodes, edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& toks = lines[i];
        if (toks[0].text == "node") {
            if (toks.size() != 3) throw ParseError(toks[0].line, toks[0].col, "node <id> <R|E|V>");
            nodes.add(toks[1], "node");
            if (toks[2].text == "R") t.node_color.push_back(Color::R);
            else if (toks[2].text == "E") t.node_color.push_back(Color::E);
            else if (toks[2].text == "V") t.node_color.push_back(Color::V);
            else throw ParseError(toks[2].line, toks[2].col, "color must be R, E or V");
        } else if (toks[0].text == "edge") {
            if (toks.size() != 4) throw ParseError(toks[0].line, toks[0].col, "edge <id>: <nodeA> <nodeB>");
            io_detail::Token name = toks[1];
            name.text = io_detail::strip_colon(toks[1]);
            edges.add(name, "edge");
            t.edges.push_back({nodes.get(toks[2], "node"), nodes.get(toks[3], "node")});
        } else if (toks[0].text == "triangle:") {
            if (toks.size() != 5)
                throw ParseError(toks[0].line, toks[0].col, "triangle: <edge> <edge> <edge> <W|B>");
            std::array<int, 3> es{edges.get(toks[1], "edge"), edges.get(toks[2], "edge"),
                                  edges.get(toks[3], "edge")};
            bool white;
            if (toks[4].text == "W") white = true;
            else if (toks[4].text == "B") white = false;
            else throw ParseError(toks[4].line, toks[4].col, "tag must be W or B");
            t.triangles.push_back({es, white});
        } else {
            throw ParseError(toks[0].line, toks[0].col, "unknown directive '" + toks[0].text + "'");
        }
    }
    t.node_names = nodes.names;
    t.edge_names = edges.names;
    return t;
}

inline std::string serialize(const Trinity& t) {
    std::ostringstream os;
    os << "trinity v1\n";
    for (int n = 0; n < t.num_nodes(); ++n)
        os << "node " << t.node_names[n] << " " << color_name(t.node_color[n]) << "\n";
    for (int e = 0; e < t.num_edges(); ++e)
        os << "edge " << t.edge_names[e] << ": " << t.node_names[t.edges[e].a] << " "
           << t.node_names[t.edges[e].b] << "\n";
    for (const auto& tri : t.triangles)
        os << "triangle: " << t.edge_names[tri.e[0]] << " " << t.edge_names[tri.e[1]] << " "
           << t.edge_names[tri.e[2]] << (tri.white ? " W" : " B") << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// chip configurations:  chips: v1=3 v2=-1    (unlisted vertices are 0)

inline ChipConfig parse_chips(std::string_view text, const std::vector<std::string>& vertex_names) {
    auto lines = io_detail::tokenize(text);
    if (lines.size() != 1 || lines[0][0].text != "chips:")
        throw ParseError(1, 1, "expected a single 'chips:' line");
    std::map<std::string, int> index;
    for (size_t i = 0; i < vertex_names.size(); ++i) index[vertex_names[i]] = static_cast<int>(i);
    ChipConfig x(static_cast<int>(vertex_names.size()));
    for (size_t i = 1; i < lines[0].size(); ++i) {
        const auto& tok = lines[0][i];
        auto eq = tok.text.find('=');
        if (eq == std::string::npos) throw ParseError(tok.line, tok.col, "expected <vertex>=<integer>");
        std::string name = tok.text.substr(0, eq);
        std::string num = tok.text.substr(eq + 1);
        auto it = index.find(name);
        if (it == index.end()) throw ParseError(tok.line, tok.col, "unknown vertex '" + name + "'");
        try {
            x[it->second] = Integer(num);
        } catch (const std::exception&) {
            throw ParseError(tok.line, tok.col, "bad integer '" + num + "'");
        }
    }
    return x;
}

inline std::string serialize_chips(const ChipConfig& x, const std::vector<std::string>& vertex_names) {
    std::ostringstream os;
    os << "chips:";
    for (int i = 0; i < x.size(); ++i)
        if (x[i] != 0) os << " " << vertex_names[i] << "=" << x[i];
    os << "\n";
    return os.str();
}

// hypertrees:  hypertree side=E: e1=0 e2=1 ...   (all side nodes listed)

inline std::string serialize_hypertree(const Hypertree& h, const std::vector<std::string>& vertex_names,
                                       const std::string& side_name) {
    std::ostringstream os;
    os << "hypertree side=" << side_name << ":";
    for (size_t i = 0; i < h.side.size(); ++i) os << " " << vertex_names[h.side[i]] << "=" << h.val[i];
    os << "\n";
    return os.str();
}

inline std::pair<std::string, std::vector<std::pair<std::string, int>>>
parse_hypertree_entries(std::string_view text) {
    auto lines = io_detail::tokenize(text);
    if (lines.size() != 1 || lines[0].size() < 1 || lines[0][0].text != "hypertree")
        throw ParseError(1, 1, "expected a single 'hypertree side=X:' line");
    if (lines[0].size() < 2 || lines[0][1].text.rfind("side=", 0) != 0 || lines[0][1].text.back() != ':')
        throw ParseError(1, 1, "expected 'side=<class>:'");
    std::string side = lines[0][1].text.substr(5, lines[0][1].text.size() - 6);
    std::vector<std::pair<std::string, int>> entries;
    for (size_t i = 2; i < lines[0].size(); ++i) {
        const auto& tok = lines[0][i];
        auto eq = tok.text.find('=');
        if (eq == std::string::npos) throw ParseError(tok.line, tok.col, "expected <node>=<value>");
        try {
            entries.emplace_back(tok.text.substr(0, eq), std::stoi(tok.text.substr(eq + 1)));
        } catch (const std::exception&) {
            throw ParseError(tok.line, tok.col, "bad value in '" + tok.text + "'");
        }
    }
    return {side, entries};
}

// arborescences:  arb root=<vertex>: <arc> <arc> ...

inline Arborescence parse_arborescence(std::string_view text, const RibbonDigraph& d, int expected_root) {
    auto lines = io_detail::tokenize(text);
    if (lines.size() != 1 || lines[0].size() < 2 || lines[0][0].text != "arb")
        throw ParseError(1, 1, "expected a single 'arb root=<v>:' line");
    const auto& rt = lines[0][1];
    if (rt.text.rfind("root=", 0) != 0 || rt.text.back() != ':')
        throw ParseError(rt.line, rt.col, "expected 'root=<vertex>:'");
    std::string root_name = rt.text.substr(5, rt.text.size() - 6);
    Arborescence a;
    a.dir = Direction::in;
    a.root = -1;
    for (int v = 0; v < d.num_vertices(); ++v)
        if (d.map.vertex_names[v] == root_name) a.root = v;
    if (a.root < 0) throw ParseError(rt.line, rt.col, "unknown root '" + root_name + "'");
    if (a.root != expected_root)
        throw ParseError(rt.line, rt.col, "arborescence root disagrees with --root");
    for (size_t i = 2; i < lines[0].size(); ++i) {
        const auto& tok = lines[0][i];
        int arc = -1;
        for (int j = 0; j < d.num_arcs(); ++j)
            if (d.map.edge_names[j] == tok.text) arc = j;
        if (arc < 0) throw ParseError(tok.line, tok.col, "unknown arc '" + tok.text + "'");
        a.arcs.push_back(arc);
    }
    std::sort(a.arcs.begin(), a.arcs.end());
    require(is_arborescence(digraph_of(d), a.root, Direction::in, a.arcs), Errc::invalid_arborescence,
            "arc set is not an in-arborescence at the root");
    return a;
}

// ---------------------------------------------------------------------------
// DOT export (cosmetic; node/edge order is deterministic)

inline std::string dot_export(const Trinity& t) {
    std::ostringstream os;
    os << "graph trinity {\n";
    for (int n = 0; n < t.num_nodes(); ++n) {
        const char* color = t.node_color[n] == Color::R ? "red"
                            : t.node_color[n] == Color::E ? "green" : "violet";
        os << "  \"" << t.node_names[n] << "\" [color=" << color << "];\n";
    }
    for (int e = 0; e < t.num_edges(); ++e)
        os << "  \"" << t.node_names[t.edges[e].a] << "\" -- \"" << t.node_names[t.edges[e].b]
           << "\" [label=\"" << t.edge_names[e] << "\"];\n";
    auto corners = triangle_corners(t);
    for (int i = 0; i < t.num_triangles(); ++i) {
        if (!t.triangles[i].white) continue;
        const auto& c = corners[i];
        os << "  \"" << t.node_names[c[0]] << "\" -- \"" << t.node_names[c[1]]
           << "\" -- \"" << t.node_names[c[2]] << "\" [style=dashed constraint=false];\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string dot_export(const RibbonDigraph& d) {
    std::ostringstream os;
    os << "digraph plane {\n";
    for (int v = 0; v < d.num_vertices(); ++v) os << "  \"" << d.map.vertex_names[v] << "\";\n";
    for (int a = 0; a < d.num_arcs(); ++a)
        os << "  \"" << d.map.vertex_names[d.tail(a)] << "\" -> \"" << d.map.vertex_names[d.head(a)]
           << "\" [label=\"" << d.map.edge_names[a] << "\"];\n";
    os << "}\n";
    return os.str();
}

inline std::string dot_export(const PlaneGraph& g) {
    std::ostringstream os;
    os << "graph plane {\n";
    for (int v = 0; v < g.num_vertices(); ++v) os << "  \"" << g.map.vertex_names[v] << "\";\n";
    for (int e = 0; e < g.num_edges(); ++e)
        os << "  \"" << g.map.vertex_names[g.map.dart_vertex[g.map.edge_darts[e][0]]] << "\" -- \""
           << g.map.vertex_names[g.map.dart_vertex[g.map.edge_darts[e][1]]] << "\" [label=\""
           << g.map.edge_names[e] << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace trinity
