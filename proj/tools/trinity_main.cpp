// Command line front end: build/validate trinities, inspect the class
// groups, list hypertrees and Jaeger trees, run the two actions, export DOT,
// and drive the randomized verification harness.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trinity/actions.hpp"
#include "trinity/io.hpp"

using namespace trinity;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::semantic, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(Errc::semantic, "cannot open '" + out_path + "' for writing");
    out << text;
}

Color parse_color(const std::string& s) {
    if (s == "R" || s == "r") return Color::R;
    if (s == "E" || s == "e") return Color::E;
    if (s == "V" || s == "v") return Color::V;
    throw Error(Errc::semantic, "color must be one of R, E, V");
}

int name_index(const std::vector<std::string>& names, const std::string& name, const char* what) {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw Error(Errc::semantic, std::string("unknown ") + what + " '" + name + "'");
}

// --base b0:b1:edge against a host graph
BasePair parse_base(const PlaneGraph& host, const std::string& spec) {
    auto c1 = spec.find(':');
    auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw Error(Errc::invalid_base, "--base expects b0:b1:edge");
    std::string b0 = spec.substr(0, c1);
    std::string b1 = spec.substr(c1 + 1, c2 - c1 - 1);
    std::string edge = spec.substr(c2 + 1);
    BasePair base;
    base.b0 = name_index(host.map.vertex_names, b0, "vertex");
    base.edge = name_index(host.map.edge_names, edge, "edge");
    int other = host.map.other_end(base.edge, base.b0);
    require(host.map.edge_incident(base.edge, base.b0), Errc::invalid_base,
            "base edge is not incident to b0");
    require(host.map.vertex_names[other] == b1, Errc::invalid_base,
            "base edge does not join b0 and b1");
    return base;
}

Hypertree parse_hypertree_file(const std::string& text, const TrinityCtx& ctx, Color host, Color cls) {
    auto [side_name, entries] = parse_hypertree_entries(text);
    require(parse_color(side_name) == cls, Errc::semantic, "hypertree side disagrees with --class");
    const auto& hostG = ctx.G[static_cast<int>(host)];
    Hypertree f;
    f.side = ctx.side_in(host, cls);
    f.val.assign(f.side.size(), 0);
    std::vector<char> seen(f.side.size(), 0);
    for (const auto& [name, value] : entries) {
        int v = name_index(hostG.g.map.vertex_names, name, "node");
        auto it = std::lower_bound(f.side.begin(), f.side.end(), v);
        require(it != f.side.end() && *it == v, Errc::semantic,
                "node '" + name + "' is not on the hypertree side");
        f.val[it - f.side.begin()] = value;
        seen[it - f.side.begin()] = 1;
    }
    return f;
}

struct InstanceResult {
    std::string text;
    bool pass = true;
};

InstanceResult run_instance(int index, uint64_t seed, int max_vertices, int max_edges) {
    std::ostringstream os;
    InstanceResult res;
    std::mt19937_64 rng(seed);
    int n = 2 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, max_vertices - 1)));
    int lo = n - 1;
    int hi = std::max(lo, max_edges);
    int m = lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    PlaneGraph g = random_plane_graph(n, m, rng());

    os << "instance " << index << ": n=" << n << " m=" << m << " seed=" << seed;
    try {
        ActionCtx actx(trinity_from_plane_graph(g));
        os << " order=" << actx.ctx.grp(Color::V).order();
        auto rep = verify_theorems(actx, seed ^ 0x9e3779b97f4a7c15ull);

        // the undirected extras: reference-orientation iso and tree divisors
        {
            auto& l = rep.lines.emplace_back();
            l.name = "dual-iso-agreement";
            SandpileGroup primal(digraph_of(bidirect(g)));
            SandpileGroup dual(digraph_of(bidirect(planar_dual(g))));
            for (const auto& c : detail::generator_classes(primal)) {
                ++l.checked;
                auto classical = cori_rossin_iso(g, primal, dual, c);
                auto via = phi(actx.ctx, Color::V, Color::R, actx.ctx.grp(Color::V).class_of(c.rep));
                if (classical.rep != via.rep) {
                    l.pass = false;
                    l.counterexample = "class " + detail::chip_text(c.rep);
                }
                for (int e = 0; e < g.num_edges() && l.pass; ++e) {
                    ++l.checked;
                    if (!(cori_rossin_iso(g, primal, dual, c, e) == classical)) {
                        l.pass = false;
                        l.counterexample = "orientation flip on edge " + std::to_string(e);
                    }
                }
            }
        }
        {
            // every tree's chips are the degree complement of a violet hypertree
            auto& l = rep.lines.emplace_back();
            l.name = "tree-divisor-complement";
            const auto& tab = actx.table(Color::V, Color::R);
            BasePair base{0, 0};
            for (int e = 0; e < g.num_edges(); ++e)
                if (g.map.edge_incident(e, 0)) base.edge = e;
            std::set<ChipConfig> divisors;
            for (const auto& edges : spanning_trees(multigraph_of(g))) {
                ++l.checked;
                auto bd = bernardi_break_divisor(g, SpanningTree{edges}, base);
                divisors.insert(bd.div);
                Hypertree h;
                h.side = actx.ctx.side_in(Color::R, Color::V);
                h.val.assign(h.side.size(), 0);
                for (int v = 0; v < g.num_vertices(); ++v)
                    h.val[v] = g.map.degree(v) - 1 - static_cast<int>(bd.div[v]);
                if (!tab.canon.count(actx.ctx.grp(Color::V).canonical_rep(
                        actx.ctx.chips_of_hypertree(Color::V, actx.ctx.G[static_cast<int>(Color::R)], h)))) {
                    l.pass = false;
                    l.counterexample = "tree " + detail::vec_text(edges);
                }
            }
            if (Integer(divisors.size()) != actx.ctx.grp(Color::V).order()) {
                l.pass = false;
                l.counterexample = "distinct divisors != group order";
            }
        }

        res.pass = rep.all_pass();
        if (res.pass) {
            os << " all-pass\n";
        } else {
            os << " FAIL\n" << rep.to_text();
            os << "# re-runnable counterexample instance\n" << serialize(g);
        }
    } catch (const Error& e) {
        res.pass = false;
        os << " ERROR " << e.what() << "\n";
        os << "# re-runnable counterexample instance\n" << serialize(g);
    }
    res.text = os.str();
    return res;
}

std::string detect_header(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (ls >> word) return word;
    }
    return "";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sandpile, hypertree and rotor computations on trinities"};
    app.require_subcommand(1);

    std::string in_path, out_path, from_kind = "planegraph", color_s = "V", cls_s = "E", host_s = "R";
    std::string base_spec, chips_path, hypertree_path, arb_path, root_name;
    uint64_t seed = 1;
    bool seed_given = false;
    int instances = 50, max_vertices = 6, max_edges = 10, jobs = 1;

    // trinity build / trinity validate
    auto* trin = app.add_subcommand("trinity", "build or validate trinity files");
    trin->require_subcommand(1);
    auto* build = trin->add_subcommand("build", "build a trinity from an embedded (di)graph");
    build->add_option("--from", from_kind, "planegraph or digraph")->check(CLI::IsMember({"planegraph", "digraph"}));
    build->add_option("--in", in_path, "input file")->required();
    build->add_option("--out", out_path, "output file (stdout when absent)");
    auto* validate = trin->add_subcommand("validate", "validate a trinity file");
    validate->add_option("--in", in_path, "trinity file")->required();

    auto* group_cmd = app.add_subcommand("group", "order and invariant factors of a class digraph");
    group_cmd->add_option("--color", color_s, "V, E or R")->required();
    group_cmd->add_option("--in", in_path, "trinity file")->required();

    auto* hyper = app.add_subcommand("hypertrees", "list the hypertrees of one class");
    hyper->add_option("--class", cls_s, "class color")->required();
    hyper->add_option("--host", host_s, "host graph color")->required();
    hyper->add_option("--in", in_path, "trinity file")->required();

    auto* jaeger_cmd = app.add_subcommand("jaeger", "list cut-class Jaeger trees of the host graph");
    jaeger_cmd->add_option("--base", base_spec, "b0:b1:edge in the host graph")->required();
    jaeger_cmd->add_option("--host", host_s, "host graph color (default R)");
    jaeger_cmd->add_option("--cut", cls_s, "cut class (default V)")->default_val("V");
    jaeger_cmd->add_option("--in", in_path, "trinity file")->required();

    auto* bernardi_cmd = app.add_subcommand("bernardi", "base-free tree action");
    auto* bact = bernardi_cmd->add_subcommand("act", "act on a hypertree on E in the red host");
    bact->add_option("--chips", chips_path, "degree-zero chips on the violet class")->required();
    bact->add_option("--hypertree", hypertree_path, "hypertree file (side=E)")->required();
    bact->add_option("--base", base_spec, "optional b0:b1:edge for the classical route");
    bact->add_option("--in", in_path, "trinity file")->required();

    auto* rotor_cmd = app.add_subcommand("rotor", "rotor-routing action");
    auto* ract = rotor_cmd->add_subcommand("act", "act on an in-arborescence of the violet digraph");
    ract->add_option("--root", root_name, "root vertex name")->required();
    ract->add_option("--chips", chips_path, "degree-zero chips on the violet class")->required();
    ract->add_option("--arb", arb_path, "arborescence file")->required();
    ract->add_option("--in", in_path, "trinity file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "randomized theorem verification");
    verify_cmd->add_option("--seed", seed, "seed (TRINITY_SEED overrides when absent)")
        ->each([&seed_given](const std::string&) { seed_given = true; });
    verify_cmd->add_option("--instances", instances, "number of instances");
    verify_cmd->add_option("--max-vertices", max_vertices, "largest vertex count");
    verify_cmd->add_option("--max-edges", max_edges, "largest edge count");
    verify_cmd->add_option("--jobs", jobs, "concurrent instances");

    auto* export_cmd = app.add_subcommand("export", "exports");
    auto* dot = export_cmd->add_subcommand("dot", "DOT rendering of a trinity or (di)graph file");
    dot->add_option("--in", in_path, "input file")->required();
    dot->add_option("--out", out_path, "output file (stdout when absent)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            std::string text = slurp(in_path);
            Trinity t = from_kind == "planegraph" ? trinity_from_plane_graph(parse_plane_graph(text))
                                                  : trinity_from_balanced_digraph(parse_plane_digraph(text));
            emit(out_path, serialize(t));
            return 0;
        }
        if (validate->parsed()) {
            auto rep = validate_trinity(parse_trinity(slurp(in_path)));
            std::cout << rep.to_text();
            return rep.ok() ? 0 : 1;
        }
        if (group_cmd->parsed()) {
            TrinityCtx ctx(parse_trinity(slurp(in_path)));
            const auto& g = ctx.grp(parse_color(color_s));
            std::cout << "order=" << g.order() << " factors=[";
            auto f = g.invariant_factors();
            for (size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
            std::cout << "]\n";
            return 0;
        }
        if (hyper->parsed()) {
            ActionCtx actx(parse_trinity(slurp(in_path)));
            Color cls = parse_color(cls_s), host = parse_color(host_s);
            const auto& tab = actx.table(cls, host);
            const auto& names = actx.ctx.G[static_cast<int>(host)].g.map.vertex_names;
            for (const auto& h : tab.list)
                std::cout << serialize_hypertree(h, names, color_name(cls));
            return 0;
        }
        if (jaeger_cmd->parsed()) {
            ActionCtx actx(parse_trinity(slurp(in_path)));
            Color cut = parse_color(cls_s), host = parse_color(host_s);
            const auto& hostG = actx.ctx.G[static_cast<int>(host)].g;
            BasePair base = parse_base(hostG, base_spec);
            const auto& jd = actx.jaeger(host, cut, base);
            for (const auto& t : jd.trees) {
                std::cout << "tree:";
                for (int e : t.edges) std::cout << " " << hostG.map.edge_names[e];
                std::cout << "\n";
            }
            return 0;
        }
        if (bact->parsed()) {
            ActionCtx actx(parse_trinity(slurp(in_path)));
            const auto& dv = actx.ctx.D[static_cast<int>(Color::V)].d;
            ChipConfig x = parse_chips(slurp(chips_path), dv.map.vertex_names);
            Hypertree f = parse_hypertree_file(slurp(hypertree_path), actx.ctx, Color::R, Color::E);
            PicClass cls = actx.ctx.grp(Color::V).class_of(x);
            Hypertree out = base_spec.empty()
                                ? bernardi_act(actx, cls, f)
                                : bernardi_act(actx, cls, f,
                                               parse_base(actx.ctx.G[static_cast<int>(Color::R)].g, base_spec));
            const auto& names = actx.ctx.G[static_cast<int>(Color::R)].g.map.vertex_names;
            std::cout << serialize_hypertree(out, names, "E");
            return 0;
        }
        if (ract->parsed()) {
            ActionCtx actx(parse_trinity(slurp(in_path)));
            const auto& dvd = actx.ctx.D[static_cast<int>(Color::V)];
            ChipConfig x = parse_chips(slurp(chips_path), dvd.d.map.vertex_names);
            int root = name_index(dvd.d.map.vertex_names, root_name, "vertex");
            Arborescence a = parse_arborescence(slurp(arb_path), dvd.d, root);
            auto out = rotor_act(dvd.d, actx.ctx.grp(Color::V), root, x, a);
            std::cout << "arb root=" << dvd.d.map.vertex_names[root] << ":";
            for (int arc : out.arcs) std::cout << " " << dvd.d.map.edge_names[arc];
            std::cout << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            if (!seed_given) {
                if (const char* env = std::getenv("TRINITY_SEED")) seed = std::strtoull(env, nullptr, 10);
            }
            std::vector<std::future<InstanceResult>> futs;
            std::vector<InstanceResult> results(static_cast<size_t>(instances));
            int active = std::max(1, jobs);
            for (int start = 0; start < instances; start += active) {
                int end = std::min(instances, start + active);
                for (int i = start; i < end; ++i)
                    futs.push_back(std::async(std::launch::async, run_instance, i, seed + i, max_vertices, max_edges));
                for (int i = start; i < end; ++i) {
                    results[i] = futs[i - start].get();
                }
                futs.clear();
            }
            bool all = true;
            for (const auto& r : results) {
                std::cout << r.text;
                all = all && r.pass;
            }
            std::cout << (all ? "all-pass" : "FAILURES") << " instances=" << instances << " seed=" << seed << "\n";
            return all ? 0 : 2;
        }
        if (dot->parsed()) {
            std::string text = slurp(in_path);
            std::string kind = detect_header(text);
            if (kind == "trinity") emit(out_path, dot_export(parse_trinity(text)));
            else if (kind == "planegraph") emit(out_path, dot_export(parse_plane_graph(text)));
            else if (kind == "planedigraph") emit(out_path, dot_export(parse_plane_digraph(text)));
            else throw Error(Errc::parse, "unrecognized input header '" + kind + "'");
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
