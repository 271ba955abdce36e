#pragma once

// Shared hand-built instances: the worked examples everything is checked
// against. Rotations are counterclockwise orders read off the drawings.

#include "trinity/combmap.hpp"

namespace fixtures {

// single edge v1--v2
inline trinity::PlaneGraph k2() {
    return trinity::make_plane_graph(2, {{0, 1}}, {{{0, 0}}, {{0, 1}}});
}

// two vertices joined by three parallel edges e1,e2,e3 (nested arcs)
inline trinity::PlaneGraph theta() {
    return trinity::make_plane_graph(
        2, {{0, 1}, {0, 1}, {0, 1}},
        {{{0, 0}, {1, 0}, {2, 0}}, {{2, 1}, {1, 1}, {0, 1}}});
}

// triangle v1 v2 v3
inline trinity::PlaneGraph c3() {
    return trinity::make_plane_graph(
        3, {{0, 1}, {1, 2}, {2, 0}},
        {{{0, 0}, {2, 1}}, {{1, 0}, {0, 1}}, {{2, 0}, {1, 1}}});
}

// 4 vertices, 5 edges: v1 right, v2 top, v3 left, v4 bottom;
// e1=v1v2, e2=v2v3, e3=v3v4, e4=v4v1, e5=v2v4
inline trinity::PlaneGraph figure2() {
    return trinity::make_plane_graph(
        4,
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}},
        {
            {{0, 0}, {3, 1}},         // v1: e1 e4
            {{1, 0}, {4, 0}, {0, 1}}, // v2: e2 e5 e1
            {{1, 1}, {2, 0}},         // v3: e2 e3
            {{3, 0}, {4, 1}, {2, 1}}, // v4: e4 e5 e3
        });
}

// single vertex with one loop
inline trinity::PlaneGraph loop1() {
    return trinity::make_plane_graph(1, {{0, 0}}, {{{0, 0}, {0, 1}}});
}

// The 3+4-node 9-edge bipartite graph of the seven-Jaeger-tree example.
// Vertices 0..2 are the violet class (va lower left, vb lower right, vc top),
// 3..6 the emerald class (e1 bottom, e2 center, e3 upper left, e4 upper
// right). Rotations follow the plane drawing, counterclockwise.
inline trinity::PlaneGraph fig5_graph() {
    // edges: 0 va-e1, 1 va-e2, 2 va-e3, 3 vb-e1, 4 vb-e2, 5 vb-e4,
    //        6 vc-e2, 7 vc-e3, 8 vc-e4
    return trinity::make_plane_graph(
        7,
        {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {2, 6}},
        {
            {{1, 0}, {2, 0}, {0, 0}},  // va: e2(26.6) e3(90) e1(333)
            {{5, 0}, {4, 0}, {3, 0}},  // vb: e4(90) e2(153) e1(206)
            {{7, 0}, {6, 0}, {8, 0}},  // vc: e3(206) e2(270) e4(333)
            {{3, 1}, {0, 1}},          // e1: vb(26.6) va(153)
            {{6, 1}, {1, 1}, {4, 1}},  // e2: vc(90) va(206) vb(333)
            {{7, 1}, {2, 1}},          // e3: vc(26.6) va(270)
            {{8, 1}, {5, 1}},          // e4: vc(153) vb(270)
        });
}

inline std::vector<int> fig5_violet() { return {0, 1, 2}; }
inline std::vector<int> fig5_emerald() { return {3, 4, 5, 6}; }

} // namespace fixtures
