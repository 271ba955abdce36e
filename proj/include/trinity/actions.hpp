#pragma once

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "trinity/hypertree.hpp"
#include "trinity/trinity_group.hpp"

namespace trinity {

// hypertrees on one class keyed by the canonical representative of their
// chip class; building it is the exhaustive uniqueness check behind the
// representative theorem
struct ClassTable {
    Color cls = Color::V, host = Color::R;
    std::vector<Hypertree> list;
    std::map<ChipConfig, int> canon;
};

// TrinityCtx plus the caches the action layer needs. Single-threaded by
// design; concurrent verification runs one ActionCtx per instance.
class ActionCtx {
public:
    TrinityCtx ctx;

    explicit ActionCtx(Trinity t) : ctx(std::move(t)) {}

    const std::vector<std::vector<int>>& host_trees(Color host) {
        auto it = trees_.find(static_cast<int>(host));
        if (it == trees_.end()) {
            auto mg = multigraph_of(ctx.G[static_cast<int>(host)].g);
            it = trees_.emplace(static_cast<int>(host), spanning_trees(mg)).first;
        }
        return it->second;
    }

    const ClassTable& table(Color cls, Color host) {
        auto key = std::make_pair(static_cast<int>(cls), static_cast<int>(host));
        auto it = tables_.find(key);
        if (it != tables_.end()) return it->second;

        ClassTable tab;
        tab.cls = cls;
        tab.host = host;
        auto side = ctx.side_in(host, cls);
        const auto& hostG = ctx.G[static_cast<int>(host)];
        auto mg = multigraph_of(hostG.g);
        std::set<std::vector<int>> seen;
        for (const auto& tree : host_trees(host)) {
            Hypertree h = hypertree_of_tree(mg, tree, side);
            if (seen.insert(h.val).second) tab.list.push_back(std::move(h));
        }
        std::sort(tab.list.begin(), tab.list.end());
        const auto& g = ctx.grp(cls);
        for (int i = 0; i < static_cast<int>(tab.list.size()); ++i) {
            ChipConfig c = g.canonical_rep(ctx.chips_of_hypertree(cls, hostG, tab.list[i]));
            auto ins = tab.canon.emplace(std::move(c), i);
            require(ins.second, Errc::not_found,
                    "two hypertrees share a linear equivalence class");
        }
        require(Integer(tab.list.size()) == g.order(), Errc::not_found,
                "hypertree count differs from the group order");
        return tables_.emplace(key, std::move(tab)).first->second;
    }

    // V-cut style Jaeger data of a host graph for a fixed base
    struct JaegerData {
        std::vector<SpanningTree> trees;
        std::vector<Hypertree> on_cut, on_other;
        std::map<std::vector<int>, int> by_cut, by_other;
    };

    const JaegerData& jaeger(Color host, Color cut, BasePair base) {
        auto key = std::make_tuple(static_cast<int>(host), static_cast<int>(cut), base.b0, base.edge);
        auto it = jcache_.find(key);
        if (it != jcache_.end()) return it->second;

        const auto& hostG = ctx.G[static_cast<int>(host)].g;
        auto cut_side = ctx.side_in(host, cut);
        Color other = (host == Color::R) ? (cut == Color::V ? Color::E : Color::V)
                                         : (host == Color::V ? (cut == Color::R ? Color::E : Color::R)
                                                             : (cut == Color::V ? Color::R : Color::V));
        auto other_side = ctx.side_in(host, other);
        JaegerData jd;
        auto mg = multigraph_of(hostG);
        for (const auto& edges : host_trees(host)) {
            SpanningTree t{edges};
            if (!is_jaeger_tree(hostG, t, base, cut_side)) continue;
            Hypertree hc = hypertree_of_tree(mg, t.edges, cut_side);
            Hypertree ho = hypertree_of_tree(mg, t.edges, other_side);
            int idx = static_cast<int>(jd.trees.size());
            require(jd.by_cut.emplace(hc.val, idx).second, Errc::not_found,
                    "two Jaeger trees realize one cut-side hypertree");
            require(jd.by_other.emplace(ho.val, idx).second, Errc::not_found,
                    "two Jaeger trees realize one hypertree");
            jd.trees.push_back(std::move(t));
            jd.on_cut.push_back(std::move(hc));
            jd.on_other.push_back(std::move(ho));
        }
        return jcache_.emplace(key, std::move(jd)).first->second;
    }

private:
    std::map<std::pair<int, int>, ClassTable> tables_;
    std::map<int, std::vector<std::vector<int>>> trees_;
    std::map<std::tuple<int, int, int, int>, JaegerData> jcache_;
};

// x (+) f: the unique hypertree of the class of x + f, via the canonical
// table; a missing entry would disprove the representative theorem.
inline Hypertree sandpile_act(ActionCtx& a, Color cls, Color host, const PicClass& x,
                              const Hypertree& f) {
    require(x.degree() == 0, Errc::degree_nonzero, "actions use degree-zero classes");
    const auto& tab = a.table(cls, host);
    const auto& g = a.ctx.grp(cls);
    ChipConfig fc = a.ctx.chips_of_hypertree(cls, a.ctx.G[static_cast<int>(host)], f);
    {
        auto self = tab.canon.find(g.canonical_rep(fc));
        require(self != tab.canon.end() && tab.list[self->second] == f, Errc::not_a_hypertree,
                "f is not a hypertree on this class");
    }
    ChipConfig sum = x.rep + fc;
    auto it = tab.canon.find(g.canonical_rep(sum));
    require(it != tab.canon.end(), Errc::not_found, "class of x + f contains no hypertree");
    return tab.list[it->second];
}

// canonical form of the base-pointed action on B_E(G_R)
inline Hypertree bernardi_act(ActionCtx& a, const PicClass& x, const Hypertree& f) {
    PicClass xe = phi(a.ctx, Color::V, Color::E, x);
    return sandpile_act(a, Color::E, Color::R, xe, f);
}

// classical route through the tree bijection; must agree with the canonical
// form, which is re-checked here
inline Hypertree bernardi_act(ActionCtx& a, const PicClass& x, const Hypertree& f, BasePair base) {
    const auto& jd = a.jaeger(Color::R, Color::V, base);
    auto it = jd.by_other.find(f.val);
    require(it != jd.by_other.end(), Errc::not_a_hypertree, "f has no representing Jaeger tree");
    const Hypertree& fv = jd.on_cut[it->second];
    Hypertree gv = sandpile_act(a, Color::V, Color::R, x, fv);
    auto back = jd.by_cut.find(gv.val);
    require(back != jd.by_cut.end(), Errc::not_found, "image hypertree has no Jaeger tree");
    Hypertree result = jd.on_other[back->second];
    require(result == bernardi_act(a, x, f), Errc::not_found,
            "classical and canonical actions disagree");
    return result;
}

// ---------------------------------------------------------------------------
// rotor routing

struct RotorConfig {
    int root = 0;
    std::vector<int> rotor; // arc id per vertex, -1 at the root
};

struct GameState {
    ChipConfig chips;
    RotorConfig rotors;
};

// next out-arc at the tail of `arc`, following the rotation through the
// interleaved in-darts
inline int next_out_arc(const RibbonDigraph& d, int arc) {
    int td = d.tail_dart[arc];
    int x = d.map.next[td];
    while (!d.is_tail(x)) x = d.map.next[x];
    return d.map.dart_edge[x];
}

inline GameState rotor_route_step(const RibbonDigraph& d, GameState s, int v) {
    require(v >= 0 && v < d.num_vertices(), Errc::unknown_vertex, "no such vertex");
    require(v != s.rotors.root, Errc::root_routing, "the root is never routed");
    require(s.chips[v] > 0, Errc::no_chip, "routing needs a chip");
    int a = s.rotors.rotor[v];
    require(a >= 0 && d.tail(a) == v, Errc::semantic, "rotor does not point out of v");
    int a2 = next_out_arc(d, a);
    s.rotors.rotor[v] = a2;
    s.chips[v] -= 1;
    s.chips[d.head(a2)] += 1;
    return s;
}

inline RotorConfig rotor_of_arborescence(const RibbonDigraph& d, const Arborescence& a) {
    RotorConfig r;
    r.root = a.root;
    r.rotor.assign(d.num_vertices(), -1);
    for (int arc : a.arcs) {
        require(r.rotor[d.tail(arc)] == -1 && d.tail(arc) != a.root, Errc::invalid_arborescence,
                "not an in-arborescence");
        r.rotor[d.tail(arc)] = arc;
    }
    return r;
}

// The action of a degree-zero configuration on an in-arborescence: written as
// a sum of (1_v - 1_root) generators with coefficients lifted into [0, order)
// by adding group-order multiples, each applied by playing the single-chip
// game until the chip reaches the root.
inline Arborescence rotor_act(const RibbonDigraph& d, const SandpileGroup& g, int root,
                              const ChipConfig& x, const Arborescence& a) {
    Digraph dg = digraph_of(d);
    require(a.root == root && a.dir == Direction::in && is_arborescence(dg, root, Direction::in, a.arcs),
            Errc::invalid_arborescence, "need an in-arborescence at the root");
    require(x.degree() == 0, Errc::degree_nonzero, "the action is by degree-zero classes");
    require(dg.eulerian(), Errc::semantic, "rotor action needs an Eulerian digraph");

    RotorConfig rotor = rotor_of_arborescence(d, a);
    Integer guard_budget = Integer(d.num_vertices()) * d.num_arcs() * (g.order() + 1);
    for (int v = 0; v < d.num_vertices(); ++v) {
        if (v == root) continue;
        Integer reps = pos_mod(x[v], g.order());
        for (Integer k = 0; k < reps; ++k) {
            int pos = v;
            while (pos != root) {
                require(--guard_budget >= 0, Errc::semantic, "rotor game exceeded its step budget");
                int arc = next_out_arc(d, rotor.rotor[pos]);
                rotor.rotor[pos] = arc;
                pos = d.head(arc);
            }
        }
    }

    Arborescence out{root, Direction::in, {}};
    for (int v = 0; v < d.num_vertices(); ++v)
        if (v != root) out.arcs.push_back(rotor.rotor[v]);
    std::sort(out.arcs.begin(), out.arcs.end());
    require(is_arborescence(dg, root, Direction::in, out.arcs), Errc::invalid_arborescence,
            "terminal rotor configuration is not an arborescence");
    return out;
}

// in-arborescence of D_V -> hypertree on E in G_R: count, at each emerald
// node, the arcs of the arborescence whose crossing violet edge touches it
// (for a bidirected graph this is the characteristic vector of the tree).
inline Hypertree arborescence_to_hypertree(ActionCtx& a, const Arborescence& arb) {
    const auto& dv = a.ctx.D[static_cast<int>(Color::V)];
    Digraph dg = digraph_of(dv.d);
    require(arb.dir == Direction::in && is_arborescence(dg, arb.root, Direction::in, arb.arcs),
            Errc::invalid_arborescence, "need an in-arborescence of the violet digraph");
    Hypertree f;
    f.side = a.ctx.side_in(Color::R, Color::E);
    f.val.assign(f.side.size(), 0);
    for (int arc : arb.arcs) {
        int te = dv.trin_edge[arc]; // a violet edge joining an E and an R node
        int na = a.ctx.t.edges[te].a, nb = a.ctx.t.edges[te].b;
        int e_node = a.ctx.t.node_color[na] == Color::E ? na : nb;
        f.val[a.ctx.class_rank[e_node]] += 1;
    }
    return f;
}

// walk between two same-root in-arborescences by single arc exchanges,
// always swapping at a vertex not reachable from any other differing vertex
inline std::vector<Arborescence> arborescence_exchange_path(const Digraph& d, const Arborescence& a,
                                                            const Arborescence& b) {
    require(a.root == b.root && a.dir == b.dir, Errc::root_mismatch,
            "arborescences must share root and direction");
    require(a.dir == Direction::in, Errc::semantic, "exchange path implemented for in-arborescences");
    require(is_arborescence(d, a.root, a.dir, a.arcs) && is_arborescence(d, b.root, b.dir, b.arcs),
            Errc::invalid_arborescence, "inputs must be arborescences");

    auto out_arc_of = [&](const std::vector<int>& arcs) {
        std::vector<int> out(d.n, -1);
        for (int arc : arcs) out[d.arcs[arc].first] = arc;
        return out;
    };
    std::vector<Arborescence> path{a};
    auto cur = out_arc_of(a.arcs);
    auto target = out_arc_of(b.arcs);
    int guard = d.n + 1;
    for (;;) {
        std::vector<int> differ;
        for (int v = 0; v < d.n; ++v)
            if (v != a.root && cur[v] != target[v]) differ.push_back(v);
        if (differ.empty()) break;
        require(--guard >= 0, Errc::semantic, "exchange path failed to shrink");
        // pick w in `differ` that no other differing vertex can reach along cur
        int w = -1;
        for (int cand : differ) {
            bool reachable = false;
            for (int other : differ) {
                if (other == cand) continue;
                int u = other;
                while (u != a.root && !reachable) {
                    u = d.arcs[cur[u]].second;
                    reachable = (u == cand);
                }
                if (reachable) break;
            }
            if (!reachable) { w = cand; break; }
        }
        require(w >= 0, Errc::semantic, "no maximal differing vertex");
        cur[w] = target[w];
        Arborescence step{a.root, Direction::in, {}};
        for (int v = 0; v < d.n; ++v)
            if (v != a.root) step.arcs.push_back(cur[v]);
        std::sort(step.arcs.begin(), step.arcs.end());
        require(is_arborescence(d, a.root, Direction::in, step.arcs), Errc::invalid_arborescence,
                "exchange step left the arborescences");
        path.push_back(std::move(step));
    }
    return path;
}

// ---------------------------------------------------------------------------
// the verification harness

struct VerificationLine {
    std::string name;
    long long checked = 0;
    bool pass = true;
    std::string counterexample;
};

struct VerificationReport {
    std::vector<VerificationLine> lines;

    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    std::string to_text() const {
        std::ostringstream os;
        for (const auto& l : lines) {
            os << (l.pass ? "pass" : "FAIL") << "  " << l.name << "  checked=" << l.checked;
            if (!l.pass) os << "  counterexample: " << l.counterexample;
            os << "\n";
        }
        os << (all_pass() ? "all-pass\n" : "failures-present\n");
        return os.str();
    }
};

namespace detail {

inline std::string vec_text(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline std::string chip_text(const ChipConfig& c) {
    std::string s = "(";
    for (int i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].str();
    return s + ")";
}

// degree-zero generator classes 1_v - 1_v0
inline std::vector<PicClass> generator_classes(const SandpileGroup& g) {
    std::vector<PicClass> out;
    for (int v = 1; v < g.digraph().n; ++v) {
        ChipConfig x(g.digraph().n);
        x[v] = 1;
        x[0] = -1;
        out.push_back(g.class_of(x));
    }
    if (out.empty()) out.push_back(g.zero_class());
    return out;
}

inline std::vector<BasePair> some_bases(const PlaneGraph& g, size_t want) {
    std::vector<BasePair> out;
    for (int v = 0; v < g.num_vertices() && out.size() < want; ++v)
        for (int e = 0; e < g.num_edges() && out.size() < want; ++e)
            if (g.map.edge_incident(e, v)) out.push_back({v, e});
    return out;
}

} // namespace detail

// Exhaustive checks of every identity the library is built around, on one
// trinity. Reported one line per statement; the first counterexample is
// spelled out.
inline VerificationReport verify_theorems(ActionCtx& a, uint64_t seed,
                                          const Integer& order_guard = 100000) {
    VerificationReport rep;
    TrinityCtx& ctx = a.ctx;
    require(ctx.grp(Color::V).order() <= order_guard, Errc::too_large,
            "group order exceeds the verification guard");
    std::mt19937_64 rng(seed);
    auto rnd = [&rng](long long bound) { return static_cast<long long>(rng() % static_cast<uint64_t>(bound)); };

    auto line = [&rep](const std::string& name) {
        rep.lines.push_back({name, 0, true, ""});
        return &rep.lines.back();
    };

    // Fact-level order identities: Smith order vs determinant vs arborescence
    // counts at every root
    {
        auto* l = line("group-order-arborescences");
        for (Color c : {Color::R, Color::E, Color::V}) {
            const auto& g = ctx.grp(c);
            Integer det = abs(det_bareiss(g.reduced_laplacian()));
            if (det != g.order()) {
                l->pass = false;
                l->counterexample = std::string("det mismatch on D_") + color_name(c);
            }
            Digraph dg = digraph_of(ctx.D[static_cast<int>(c)].d);
            for (int r = 0; r < dg.n; ++r) {
                ++l->checked;
                auto arbs = enumerate_arborescences(dg, r, Direction::in);
                if (Integer(arbs.size()) != g.order()) {
                    l->pass = false;
                    l->counterexample = std::string("root ") + std::to_string(r) + " of D_" + color_name(c);
                    break;
                }
            }
        }
    }

    // hypertrees represent the degree-(|class|-1) classes exactly once
    {
        auto* l = line("hypertree-representatives");
        const std::pair<Color, Color> pairs[] = {{Color::V, Color::R}, {Color::E, Color::R}, {Color::E, Color::V}};
        for (auto [cls, host] : pairs) {
            const ClassTable* tab = nullptr;
            try {
                tab = &a.table(cls, host);
            } catch (const Error& e) {
                l->pass = false;
                l->counterexample = e.what();
                break;
            }
            const auto& g = ctx.grp(cls);
            ++l->checked;
            // random configurations of the right degree land on exactly one
            Integer want_deg = 0;
            for (const auto& h : tab->list[0].val) want_deg += h;
            const int n = static_cast<int>(ctx.class_of(cls).size());
            for (int trial = 0; trial < 20; ++trial) {
                ChipConfig x(n);
                Integer s = 0;
                for (int i = 1; i < n; ++i) {
                    x[i] = rnd(9) - 4;
                    s += x[i];
                }
                x[0] = want_deg - s;
                ++l->checked;
                if (!tab->canon.count(g.canonical_rep(x))) {
                    l->pass = false;
                    l->counterexample = "no hypertree equivalent to " + detail::chip_text(x) +
                                        " on class " + color_name(cls);
                    break;
                }
            }
        }
    }

    // the six isomorphisms: bijective, additive, psi = -phi, composition law
    {
        auto* l = line("iso-bijectivity-additivity");
        for (Color from : {Color::R, Color::E, Color::V}) {
            auto classes = ctx.grp(from).all_classes(0);
            auto gens = detail::generator_classes(ctx.grp(from));
            for (Color to : {Color::R, Color::E, Color::V}) {
                if (from == to) continue;
                std::set<ChipConfig> images;
                for (const auto& c : classes) images.insert(phi(ctx, from, to, c).rep);
                ++l->checked;
                if (Integer(images.size()) != ctx.grp(to).order()) {
                    l->pass = false;
                    l->counterexample = std::string("phi ") + color_name(from) + "->" + color_name(to) +
                                        " is not bijective";
                }
                for (const auto& c1 : gens)
                    for (const auto& c2 : gens) {
                        ++l->checked;
                        auto lhs = phi(ctx, from, to, ctx.grp(from).add(c1, c2));
                        auto rhs = ctx.grp(to).add(phi(ctx, from, to, c1), phi(ctx, from, to, c2));
                        if (!(lhs == rhs)) {
                            l->pass = false;
                            l->counterexample = "additivity fails";
                        }
                    }
                for (const auto& c : classes) {
                    ++l->checked;
                    if (!(ctx.grp(to).add(phi(ctx, from, to, c), psi(ctx, from, to, c)) ==
                          ctx.grp(to).zero_class())) {
                        l->pass = false;
                        l->counterexample = "phi + psi is not zero at " + detail::chip_text(c.rep);
                    }
                }
            }
        }
        for (const auto& c : ctx.grp(Color::V).all_classes(0)) {
            ++l->checked;
            if (!(phi(ctx, Color::R, Color::E, phi(ctx, Color::V, Color::R, c)) ==
                  psi(ctx, Color::V, Color::E, c))) {
                l->pass = false;
                l->counterexample = "composition law fails at " + detail::chip_text(c.rep);
            }
        }
    }

    // the constructive transport lands in the same class as the lattice phi
    {
        auto* l = line("transport-agrees-with-phi");
        const std::pair<Color, Color> pairs[] = {{Color::V, Color::E}, {Color::E, Color::R}, {Color::R, Color::V}};
        for (auto [from, to] : pairs)
            for (const auto& c : detail::generator_classes(ctx.grp(from))) {
                ++l->checked;
                auto tr = chip_transport(ctx, from, to, c.rep);
                if (!(ctx.grp(to).class_of(-tr.result[to]) == phi(ctx, from, to, c))) {
                    l->pass = false;
                    l->counterexample = std::string("transport ") + color_name(from) + "->" + color_name(to);
                }
            }
    }

    // white quotient: free rank 2, torsion = the violet invariant factors
    {
        auto* l = line("white-quotient-structure");
        auto aw = aw_structure(ctx.t);
        ++l->checked;
        if (aw.free_rank != 2 || aw.torsion != ctx.grp(Color::V).invariant_factors()) {
            l->pass = false;
            l->counterexample = "free rank " + std::to_string(aw.free_rank);
        }
    }

    const auto& gr = ctx.G[static_cast<int>(Color::R)].g;
    auto bases = detail::some_bases(gr, 3);
    auto gens_v = detail::generator_classes(ctx.grp(Color::V));

    // the tree bijection commutes with the two class actions
    {
        auto* l = line("bijection-commutes-with-actions");
        const auto& all_f = a.table(Color::E, Color::R).list;
        for (BasePair base : bases) {
            const auto& jd = a.jaeger(Color::R, Color::V, base);
            for (const auto& x : gens_v) {
                PicClass xe = phi(ctx, Color::V, Color::E, x);
                for (const auto& f : all_f) {
                    ++l->checked;
                    Hypertree lhs_e = sandpile_act(a, Color::E, Color::R, xe, f);
                    auto itl = jd.by_other.find(lhs_e.val);
                    auto itf = jd.by_other.find(f.val);
                    bool ok = itl != jd.by_other.end() && itf != jd.by_other.end();
                    if (ok) {
                        const Hypertree& beta_lhs = jd.on_cut[itl->second];
                        Hypertree rhs = sandpile_act(a, Color::V, Color::R, x, jd.on_cut[itf->second]);
                        ok = beta_lhs == rhs;
                    }
                    if (!ok) {
                        l->pass = false;
                        l->counterexample = "x=" + detail::chip_text(x.rep) + " f=" + detail::vec_text(f.val) +
                                            " base=(" + std::to_string(base.b0) + "," + std::to_string(base.edge) + ")";
                    }
                }
            }
        }
    }

    // classical base-pointed action equals the canonical one for every base
    {
        auto* l = line("base-independence");
        const auto& all_f = a.table(Color::E, Color::R).list;
        for (const auto& x : gens_v)
            for (const auto& f : all_f) {
                Hypertree canon = bernardi_act(a, x, f);
                for (BasePair base : bases) {
                    ++l->checked;
                    if (!(bernardi_act(a, x, f, base) == canon)) {
                        l->pass = false;
                        l->counterexample = "x=" + detail::chip_text(x.rep) + " f=" + detail::vec_text(f.val);
                    }
                }
            }
    }

    // duality of the emerald action and of the full base-free action
    {
        auto* l = line("action-duality");
        const auto& gvd = ctx.G[static_cast<int>(Color::V)];
        const auto& grd = ctx.G[static_cast<int>(Color::R)];
        const auto& all_f = a.table(Color::E, Color::R).list;
        for (const auto& y : detail::generator_classes(ctx.grp(Color::E)))
            for (const auto& f : all_f) {
                ++l->checked;
                Hypertree lhs = dual_hypertree(ctx.t, grd, gvd, sandpile_act(a, Color::E, Color::R, y, f));
                Hypertree rhs = sandpile_act(a, Color::E, Color::V, ctx.grp(Color::E).neg(y),
                                             dual_hypertree(ctx.t, grd, gvd, f));
                if (!(lhs == rhs)) {
                    l->pass = false;
                    l->counterexample = "y=" + detail::chip_text(y.rep) + " f=" + detail::vec_text(f.val);
                }
            }

        auto* l2 = line("bernardi-duality");
        for (const auto& x : gens_v)
            for (const auto& f : all_f) {
                ++l2->checked;
                Hypertree lhs = dual_hypertree(ctx.t, grd, gvd, bernardi_act(a, x, f));
                PicClass xr = phi(ctx, Color::V, Color::R, x);
                PicClass xre = phi(ctx, Color::R, Color::E, xr);
                Hypertree rhs = sandpile_act(a, Color::E, Color::V, xre, dual_hypertree(ctx.t, grd, gvd, f));
                if (!(lhs == rhs)) {
                    l2->pass = false;
                    l2->counterexample = "x=" + detail::chip_text(x.rep) + " f=" + detail::vec_text(f.val);
                }
            }
    }

    // rotor action transported to hypertrees equals the action of the
    // inverse class, for every root
    {
        auto* l = line("rotor-equals-inverse-action");
        const auto& dv = ctx.D[static_cast<int>(Color::V)];
        Digraph dg = digraph_of(dv.d);
        const auto& g = ctx.grp(Color::V);
        for (int root = 0; root < dg.n; ++root) {
            auto arbs = enumerate_arborescences(dg, root, Direction::in);
            for (const auto& x : gens_v) {
                PicClass minus = g.neg(x);
                for (const auto& arb : arbs) {
                    ++l->checked;
                    Arborescence moved = rotor_act(dv.d, g, root, x.rep, arb);
                    Hypertree lhs = arborescence_to_hypertree(a, moved);
                    Hypertree rhs = bernardi_act(a, minus, arborescence_to_hypertree(a, arb));
                    if (!(lhs == rhs)) {
                        l->pass = false;
                        l->counterexample = "root=" + std::to_string(root) + " x=" + detail::chip_text(x.rep);
                    }
                }
            }
        }
    }

    // bases with the same black triangle's red node give the same Jaeger trees
    {
        auto* l = line("base-face-invariance");
        const auto& grd = ctx.G[static_cast<int>(Color::R)];
        const auto& drd = ctx.D[static_cast<int>(Color::R)];
        std::map<int, std::set<std::vector<int>>> trees_by_face;
        auto all_bases = detail::some_bases(gr, static_cast<size_t>(-1));
        SpanningTree any_tree{a.host_trees(Color::R).front()};
        for (BasePair base : all_bases) {
            int s0 = jaeger_arborescence_dual(ctx.t, grd, drd, any_tree, base).root;
            const auto& jd = a.jaeger(Color::R, Color::V, base);
            std::set<std::vector<int>> set;
            for (const auto& t : jd.trees) set.insert(t.edges);
            auto [it, fresh] = trees_by_face.emplace(s0, set);
            ++l->checked;
            if (!fresh && it->second != set) {
                l->pass = false;
                l->counterexample = "base=(" + std::to_string(base.b0) + "," + std::to_string(base.edge) + ")";
            }
        }
    }

    // tour bookkeeping: every edge becomes current twice, once per endpoint
    {
        auto* l = line("tour-twice-per-edge");
        const auto& trees = a.host_trees(Color::R);
        for (int trial = 0; trial < 10; ++trial) {
            SpanningTree t{trees[static_cast<size_t>(rnd(static_cast<long long>(trees.size())))]};
            BasePair base = bases[static_cast<size_t>(rnd(static_cast<long long>(bases.size())))];
            auto recd = tour(gr, t, base);
            ++l->checked;
            std::map<std::pair<int, int>, int> seen;
            for (auto s : recd.steps) ++seen[{s.edge, s.node}];
            bool ok = recd.steps.size() == 2 * static_cast<size_t>(gr.num_edges());
            for (auto [k, c] : seen) ok = ok && c == 1;
            if (!ok) {
                l->pass = false;
                l->counterexample = "tree " + detail::vec_text(t.edges);
            }
        }
    }

    // subset characterization vs realization search
    {
        auto* l = line("hypertree-characterization");
        auto mg = multigraph_of(gr);
        for (Color cls : {Color::V, Color::E}) {
            auto side = ctx.side_in(Color::R, cls);
            if (side.size() > 10) continue;
            const auto& tab = a.table(cls, Color::R);
            for (const auto& h : tab.list) {
                ++l->checked;
                if (!hypertree_subset_test(mg, h) || !is_hypertree(mg, h)) {
                    l->pass = false;
                    l->counterexample = "hypertree " + detail::vec_text(h.val);
                }
            }
            for (int trial = 0; trial < 20; ++trial) {
                Hypertree h = tab.list[static_cast<size_t>(rnd(static_cast<long long>(tab.list.size())))];
                int i = static_cast<int>(rnd(static_cast<long long>(h.val.size())));
                int j = static_cast<int>(rnd(static_cast<long long>(h.val.size())));
                h.val[i] += 1;
                h.val[j] -= 1;
                ++l->checked;
                bool sub = hypertree_subset_test(mg, h);
                bool real = is_hypertree(mg, h);
                if (sub != real) {
                    l->pass = false;
                    l->counterexample = "vector " + detail::vec_text(h.val);
                }
            }
        }
    }

    // planar dual hypertrees: involution onto the dual family
    {
        auto* l = line("dual-involution");
        const auto& gvd = ctx.G[static_cast<int>(Color::V)];
        const auto& grd = ctx.G[static_cast<int>(Color::R)];
        auto mgv = multigraph_of(gvd.g);
        for (const auto& f : a.table(Color::E, Color::R).list) {
            ++l->checked;
            Hypertree fd = dual_hypertree(ctx.t, grd, gvd, f);
            bool ok = is_hypertree(mgv, fd) && dual_hypertree(ctx.t, gvd, grd, fd) == f;
            if (!ok) {
                l->pass = false;
                l->counterexample = "f=" + detail::vec_text(f.val);
            }
        }
    }

    return rep;
}

inline VerificationReport verify_theorems(const Trinity& t, uint64_t seed) {
    ActionCtx a(t);
    return verify_theorems(a, seed);
}

} // namespace trinity
