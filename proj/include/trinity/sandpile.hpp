#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "trinity/combmap.hpp"
#include "trinity/error.hpp"
#include "trinity/intmatrix.hpp"

namespace trinity {

// Arc-list view of a digraph; embeddings play no role in chip firing.
struct Digraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs; // (tail, head)

    int outdeg(int v) const {
        int k = 0;
        for (auto [t, h] : arcs) k += (t == v);
        return k;
    }
    int indeg(int v) const {
        int k = 0;
        for (auto [t, h] : arcs) k += (h == v);
        return k;
    }
    bool eulerian() const {
        for (int v = 0; v < n; ++v)
            if (outdeg(v) != indeg(v)) return false;
        return true;
    }
    bool weakly_connected() const {
        if (n <= 1) return true;
        std::vector<std::vector<int>> adj(n);
        for (auto [t, h] : arcs) {
            adj[t].push_back(h);
            adj[h].push_back(t);
        }
        std::vector<char> vis(n, 0);
        std::vector<int> st{0};
        vis[0] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : adj[v])
                if (!vis[w]) { vis[w] = 1; ++cnt; st.push_back(w); }
        }
        return cnt == n;
    }
};

inline Digraph digraph_of(const RibbonDigraph& d) {
    Digraph g;
    g.n = d.num_vertices();
    for (int a = 0; a < d.num_arcs(); ++a) g.arcs.emplace_back(d.tail(a), d.head(a));
    return g;
}

struct ChipConfig {
    std::vector<Integer> v;

    ChipConfig() = default;
    explicit ChipConfig(int n) : v(n) {}
    explicit ChipConfig(std::vector<Integer> values) : v(std::move(values)) {}

    Integer degree() const {
        Integer s = 0;
        for (const auto& x : v) s += x;
        return s;
    }
    int size() const { return static_cast<int>(v.size()); }
    Integer& operator[](int i) { return v[i]; }
    const Integer& operator[](int i) const { return v[i]; }
    bool operator==(const ChipConfig& o) const { return v == o.v; }
    bool operator<(const ChipConfig& o) const { return v < o.v; }

    ChipConfig operator+(const ChipConfig& o) const {
        ChipConfig r(*this);
        for (int i = 0; i < size(); ++i) r.v[i] += o.v[i];
        return r;
    }
    ChipConfig operator-(const ChipConfig& o) const {
        ChipConfig r(*this);
        for (int i = 0; i < size(); ++i) r.v[i] -= o.v[i];
        return r;
    }
    ChipConfig operator-() const {
        ChipConfig r(*this);
        for (auto& x : r.v) x = -x;
        return r;
    }
};

// L(u,v) = -d+(v) on the diagonal, d(v,u) off it; a self-arc adds to both and
// so contributes nothing.
inline IntMatrix laplacian(const Digraph& d) {
    IntMatrix l(d.n, d.n);
    for (auto [t, h] : d.arcs) {
        if (t == h) continue;
        l.at(t, t) -= 1;
        l.at(h, t) += 1;
    }
    return l;
}

inline ChipConfig fire(const Digraph& d, const ChipConfig& x, int v) {
    require(v >= 0 && v < d.n && x.size() == d.n, Errc::unknown_vertex,
            "vertex " + std::to_string(v) + " not in the digraph");
    ChipConfig y = x;
    for (auto [t, h] : d.arcs) {
        if (t != v || t == h) continue;
        y[t] -= 1;
        y[h] += 1;
    }
    return y;
}

class SandpileGroup;

// A linear-equivalence class, keyed by its canonical representative.
struct PicClass {
    const SandpileGroup* group = nullptr;
    ChipConfig rep;

    Integer degree() const { return rep.degree(); }
    bool operator==(const PicClass& o) const { return rep == o.rep; }
    bool operator!=(const PicClass& o) const { return !(rep == o.rep); }
    bool operator<(const PicClass& o) const { return rep < o.rep; }
};

// Group data of a connected Eulerian digraph: Smith form of the reduced
// Laplacian (deleted vertex = smallest id) provides canonical residues, a
// Hermite form of the full Laplacian provides an independent equivalence
// test.
class SandpileGroup {
public:
    explicit SandpileGroup(Digraph d) : d_(std::move(d)) {
        require(d_.n >= 1, Errc::semantic, "empty digraph");
        require(d_.weakly_connected(), Errc::disconnected, "digraph is disconnected");
        lap_ = laplacian(d_);
        lap_ech_ = column_echelon(lap_);
        IntMatrix reduced(d_.n - 1, d_.n - 1);
        for (int r = 1; r < d_.n; ++r)
            for (int c = 1; c < d_.n; ++c) reduced.at(r - 1, c - 1) = lap_.at(r, c);
        reduced_ = reduced;
        snf_ = smith_normal_form(reduced);
        order_ = 1;
        for (const auto& s : snf_.diag) order_ *= s;
        order_ = abs(order_);
        require(order_ != 0, Errc::semantic, "reduced Laplacian is singular");
    }

    const Digraph& digraph() const { return d_; }
    const IntMatrix& lap() const { return lap_; }
    const IntMatrix& reduced_laplacian() const { return reduced_; }
    const Integer& order() const { return order_; }
    int deleted_vertex() const { return 0; }

    // all Smith diagonal entries of the reduced Laplacian
    std::vector<Integer> elementary_divisors() const { return snf_.diag; }
    // the nontrivial ones
    std::vector<Integer> invariant_factors() const {
        std::vector<Integer> f;
        for (const auto& s : snf_.diag)
            if (s > 1) f.push_back(s);
        return f;
    }

    // Hermite-form membership of y - x in the column lattice of L
    bool equivalent(const ChipConfig& x, const ChipConfig& y) const {
        require(x.size() == d_.n && y.size() == d_.n, Errc::unknown_vertex, "config size mismatch");
        if (x.degree() != y.degree()) return false;
        std::vector<Integer> b(d_.n);
        for (int i = 0; i < d_.n; ++i) b[i] = y[i] - x[i];
        return lattice_contains(lap_ech_, b);
    }

    ChipConfig canonical_rep(const ChipConfig& x) const {
        require(x.size() == d_.n, Errc::unknown_vertex, "config size mismatch");
        const int m = d_.n - 1;
        std::vector<Integer> b(m);
        for (int i = 0; i < m; ++i) b[i] = x[i + 1];
        auto c = snf_.u.mul(b);
        for (int i = 0; i < m; ++i) c[i] = pos_mod(c[i], snf_.diag[i]);
        auto y = snf_.uinv.mul(c);
        ChipConfig out(d_.n);
        Integer rest = 0;
        for (int i = 0; i < m; ++i) {
            out[i + 1] = y[i];
            rest += y[i];
        }
        out[0] = x.degree() - rest;
        return out;
    }

    PicClass class_of(const ChipConfig& x) const { return {this, canonical_rep(x)}; }

    PicClass zero_class() const { return class_of(ChipConfig(d_.n)); }

    PicClass add(const PicClass& a, const PicClass& b) const { return class_of(a.rep + b.rep); }
    PicClass neg(const PicClass& a) const { return class_of(-a.rep); }

    // every class of the given degree, each exactly once
    std::vector<PicClass> all_classes(const Integer& degree, const Integer& guard = 200000) const {
        require(order_ <= guard, Errc::too_large, "group order exceeds the enumeration guard");
        const int m = d_.n - 1;
        std::vector<PicClass> out;
        std::vector<Integer> c(m, 0);
        for (;;) {
            auto y = snf_.uinv.mul(c);
            ChipConfig x(d_.n);
            Integer rest = 0;
            for (int i = 0; i < m; ++i) {
                x[i + 1] = y[i];
                rest += y[i];
            }
            x[0] = degree - rest;
            out.push_back(class_of(x));
            int i = m - 1;
            for (; i >= 0; --i) {
                if (++c[i] < snf_.diag[i]) break;
                c[i] = 0;
            }
            if (i < 0) break;
        }
        return out;
    }

private:
    Digraph d_;
    IntMatrix lap_, reduced_;
    ColEchelon lap_ech_;
    SmithForm snf_;
    Integer order_;
};

enum class Direction { in, out };

struct Arborescence {
    int root = 0;
    Direction dir = Direction::in;
    std::vector<int> arcs; // sorted arc ids

    bool operator==(const Arborescence& o) const {
        return root == o.root && dir == o.dir && arcs == o.arcs;
    }
    bool operator<(const Arborescence& o) const { return arcs < o.arcs; }
};

inline bool is_arborescence(const Digraph& d, int root, Direction dir, const std::vector<int>& arcs) {
    if (static_cast<int>(arcs.size()) != d.n - 1) return false;
    // for `in`: every non-root vertex has exactly one out-arc and reaches the
    // root along the chosen arcs
    std::vector<int> nxt(d.n, -1);
    for (int a : arcs) {
        if (a < 0 || a >= static_cast<int>(d.arcs.size())) return false;
        auto [t, h] = d.arcs[a];
        int from = dir == Direction::in ? t : h;
        int to = dir == Direction::in ? h : t;
        if (from == root || from == to) return false;
        if (nxt[from] != -1) return false;
        nxt[from] = to;
    }
    for (int v = 0; v < d.n; ++v) {
        if (v == root) continue;
        int steps = 0, u = v;
        while (u != root) {
            if (u < 0 || nxt[u] < 0 || ++steps > d.n) return false;
            u = nxt[u];
        }
    }
    return true;
}

// Exhaustive enumeration: each non-root vertex picks its unique incident arc
// (out-arc for `in`, in-arc for `out`), pruning choices that close a cycle.
inline std::vector<Arborescence> enumerate_arborescences(const Digraph& d, int root, Direction dir,
                                                         long long guard = 2000000) {
    require(root >= 0 && root < d.n, Errc::unknown_vertex, "bad root");
    std::vector<std::vector<int>> cand(d.n); // arcs usable at each non-root vertex
    for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
        auto [t, h] = d.arcs[a];
        if (t == h) continue;
        int from = dir == Direction::in ? t : h;
        if (from != root) cand[from].push_back(a);
    }
    std::vector<int> verts;
    for (int v = 0; v < d.n; ++v)
        if (v != root) verts.push_back(v);

    std::vector<Arborescence> out;
    std::vector<int> nxt(d.n, -1), chosen;
    long long steps = 0;
    auto other = [&](int a, int v) {
        auto [t, h] = d.arcs[a];
        return t == v ? h : t;
    };
    auto rec = [&](auto&& self, size_t i) -> void {
        require(++steps <= guard, Errc::too_large, "arborescence enumeration guard exceeded");
        if (i == verts.size()) {
            Arborescence arb{root, dir, chosen};
            std::sort(arb.arcs.begin(), arb.arcs.end());
            out.push_back(std::move(arb));
            return;
        }
        int v = verts[i];
        for (int a : cand[v]) {
            int w = other(a, v);
            // following assigned choices from w must not run back into v
            int u = w;
            bool cyc = false;
            while (u != root && nxt[u] != -1) {
                u = nxt[u];
                if (u == v) { cyc = true; break; }
            }
            if (cyc) continue;
            nxt[v] = w;
            chosen.push_back(a);
            self(self, i + 1);
            chosen.pop_back();
            nxt[v] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Arborescence> enumerate_arborescences(const RibbonDigraph& d, int root,
                                                         Direction dir, long long guard = 2000000) {
    return enumerate_arborescences(digraph_of(d), root, dir, guard);
}

} // namespace trinity
