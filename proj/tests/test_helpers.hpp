#pragma once

#include <cstdint>
#include <vector>

#include "aeg/graph.hpp"
#include "aeg/rng.hpp"

namespace aeg::testing {

// Labeled graph on n vertices from an edge-subset bitmask (row-major order).
inline SimpleGraph graph_from_mask(int n, uint64_t mask) {
    SimpleGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

inline SimpleGraph random_graph(int n, double edge_prob, Rng& rng) {
    SimpleGraph g(n);
    const uint64_t threshold = static_cast<uint64_t>(edge_prob * 4294967296.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next() % 4294967296ULL < threshold) g.add_edge(u, v);
    return g;
}

// Cycle 0-1-...-(n-1)-0.
inline SimpleGraph cycle_graph(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Triangulated polygon (fan triangulation): maximal outerplanar, 2n-3 edges.
inline SimpleGraph triangulated_polygon(int n) {
    SimpleGraph g = cycle_graph(n);
    for (int v = 2; v + 1 < n; ++v) g.add_edge(0, v);
    return g;
}

// Chain of triangles sharing single vertices, padded by a pendant path, with
// exactly ceil((3n-5)/2) edges for odd n.
inline SimpleGraph triangle_chain(int n) {
    SimpleGraph g(n);
    int t = (n - 1) / 2 - 1;  // triangles, leaving room for the pendant path
    int v = 0;
    for (int i = 0; i < t; ++i) {
        g.add_edge(v, v + 1);
        g.add_edge(v, v + 2);
        g.add_edge(v + 1, v + 2);
        v += 2;
    }
    for (int w = v; w + 1 < n; ++w) g.add_edge(w, w + 1);
    return g;
}

}  // namespace aeg::testing
