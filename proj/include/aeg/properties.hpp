#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "aeg/family.hpp"
#include "aeg/graph.hpp"

namespace aeg {

// Biconnected components (blocks), each returned as its edge list.
// Bridges come out as 2-vertex blocks; isolated vertices produce no block.
inline std::vector<std::vector<std::pair<int, int>>> biconnected_components(
    const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        size_t next;       // next neighbor position to look at
        bool skipped_parent;
    };
    std::vector<Frame> stack;

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1 || g.degree(root) == 0) continue;
        stack.push_back({root, -1, 0, false});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                int w = nbrs[f.next++];
                if (w == f.parent && !f.skipped_parent) {
                    f.skipped_parent = true;  // simple graph: one parent edge
                    continue;
                }
                if (disc[w] == -1) {
                    estack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0, false});
                } else if (disc[w] < disc[f.v]) {
                    estack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent >= 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        std::vector<std::pair<int, int>> block;
                        while (true) {
                            auto e = estack.back();
                            estack.pop_back();
                            block.push_back(e);
                            if (e.first == parent && e.second == v) break;
                        }
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

// A graph has a diamond minor iff some block is neither an edge nor a cycle,
// i.e. some block has more edges than vertices.
inline bool is_diamond_minor_free(const SimpleGraph& g) {
    for (const auto& block : biconnected_components(g)) {
        std::set<int> verts;
        for (auto [a, b] : block) {
            verts.insert(a);
            verts.insert(b);
        }
        if (block.size() > verts.size()) return false;
    }
    return true;
}

namespace detail {

// Outerplanarity test for one block, by series reduction on a multigraph.
//
// Bundles between a vertex pair count the direct edge ("real") and the
// internally-disjoint paths of length >= 2 consumed so far ("virt").
// Suppressing a vertex whose bundle-degree is 2 turns its two bundles into
// one virt unit between the outer neighbors. The block fails when
//   - no degree-2 vertex exists while more than two remain (K4 subdivision), or
//   - a pair accumulates two virt units while anything else remains: the pair
//     has consumed both boundary arcs, so a third connection would be a third
//     internally-disjoint path of length >= 2 (K_{2,3} subdivision).
// End states on two vertices (up to real + two virt: a cycle with a chord
// through the pair) are outerplanar.
inline bool block_outerplanar(const std::vector<std::pair<int, int>>& block_edges) {
    std::map<int, int> relabel;
    for (auto [a, b] : block_edges) {
        relabel.emplace(a, 0);
        relabel.emplace(b, 0);
    }
    int t = 0;
    for (auto& kv : relabel) kv.second = t++;
    if (t <= 2) return true;
    if (block_edges.size() > 2 * static_cast<size_t>(t) - 3) return false;

    struct Bundle {
        int real = 0;
        int virt = 0;
    };
    std::vector<std::map<int, Bundle>> adj(t);
    for (auto [a, b] : block_edges) {
        int u = relabel[a], v = relabel[b];
        adj[u][v].real = 1;
        adj[v][u].real = 1;
    }

    std::set<int> deg2;
    for (int v = 0; v < t; ++v)
        if (adj[v].size() == 2) deg2.insert(v);

    int remaining = t;
    while (remaining > 2) {
        if (deg2.empty()) return false;  // stuck: K4 subdivision
        int v = *deg2.begin();
        deg2.erase(deg2.begin());
        if (adj[v].size() != 2) continue;  // stale entry
        int x = adj[v].begin()->first;
        int y = std::next(adj[v].begin())->first;
        adj[v].clear();
        adj[x].erase(v);
        adj[y].erase(v);
        Bundle& merged = adj[x][y];
        merged.virt += 1;
        adj[y][x] = merged;
        --remaining;
        if (merged.virt >= 2 && remaining > 2) return false;
        if (merged.virt >= 3) return false;
        for (int w : {x, y}) {
            if (adj[w].size() == 2)
                deg2.insert(w);
            else
                deg2.erase(w);
        }
    }
    return true;
}

}  // namespace detail

// True iff g has neither a K4 minor nor a K_{2,3} minor. Decided block by
// block after the edge-count prefilter (any outerplanar graph on n >= 2
// vertices has at most 2n-3 edges).
inline bool is_outerplanar(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n >= 2 && g.edge_count() > 2LL * n - 3) return false;
    for (const auto& block : biconnected_components(g))
        if (!detail::block_outerplanar(block)) return false;
    return true;
}

struct DegeneracyCertificate {
    int k = 0;
    std::vector<int> ordering;  // every vertex has at most k preceding neighbors
};

// Minimum k by iterated minimum-degree removal (ties: lowest index).
// The ordering is the reverse removal order.
inline DegeneracyCertificate degeneracy(const SimpleGraph& g) {
    const int n = g.vertex_count();
    DegeneracyCertificate cert;
    if (n == 0) return cert;
    std::vector<int> deg(n);
    std::set<std::pair<int, int>> active;  // (degree, vertex)
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        active.emplace(deg[v], v);
    }
    std::vector<char> removed(n, 0);
    std::vector<int> removal;
    removal.reserve(n);
    while (!active.empty()) {
        auto [d, v] = *active.begin();
        active.erase(active.begin());
        cert.k = std::max(cert.k, d);
        removed[v] = 1;
        removal.push_back(v);
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            active.erase({deg[w], w});
            --deg[w];
            active.emplace(deg[w], w);
        }
    }
    cert.ordering.assign(removal.rbegin(), removal.rend());
    return cert;
}

// Check the "at most k preceding neighbors" property of an ordering.
inline bool valid_degeneracy_ordering(const SimpleGraph& g, const std::vector<int>& ordering,
                                      int k) {
    const int n = g.vertex_count();
    if (static_cast<int>(ordering.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = ordering[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = i;
    }
    for (int v = 0; v < n; ++v) {
        int preceding = 0;
        for (int w : g.neighbors(v))
            if (pos[w] < pos[v]) ++preceding;
        if (preceding > k) return false;
    }
    return true;
}

inline bool is_losing(const SimpleGraph& g, const GameFamily& f) {
    switch (f.kind) {
        case FamilyKind::Outerplanar: return !is_outerplanar(g);
        case FamilyKind::DiamondFree: return !is_diamond_minor_free(g);
        case FamilyKind::KDegenerate: return degeneracy(g).k > f.k;
    }
    return false;
}

}  // namespace aeg
