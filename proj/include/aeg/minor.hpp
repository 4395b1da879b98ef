#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "aeg/errors.hpp"
#include "aeg/graph.hpp"

namespace aeg {

namespace detail {

// Compact labeled graph on at most 9 vertices: triangular adjacency bitmask.
struct SmallGraph {
    int n = 0;
    uint64_t mask = 0;  // bit per pair (i < j), row-major

    static int bit(int n, int i, int j) {
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }
    bool has(int i, int j) const {
        if (i == j) return false;
        if (i > j) std::swap(i, j);
        return mask >> bit(n, i, j) & 1;
    }
    void set(int i, int j) {
        if (i > j) std::swap(i, j);
        mask |= uint64_t{1} << bit(n, i, j);
    }
    int edge_total() const { return __builtin_popcountll(mask); }
    uint64_t key() const { return mask | (static_cast<uint64_t>(n) << 40); }
};

inline SmallGraph to_small(const SimpleGraph& g) {
    SmallGraph s;
    s.n = g.vertex_count();
    for (Edge e : g.edges()) s.set(e.u, e.v);
    return s;
}

// Contract edge (a, b): b merges into a, labels above b shift down.
inline SmallGraph contract(const SmallGraph& g, int a, int b) {
    SmallGraph out;
    out.n = g.n - 1;
    auto map = [&](int v) { return v == b ? a : (v > b ? v - 1 : v); };
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has(i, j)) {
                int mi = map(i), mj = map(j);
                if (mi != mj) out.set(mi, mj);
            }
    return out;
}

// Backtracking injective embedding of h into g (subgraph containment).
inline bool subgraph_embeds(const SmallGraph& h, const SmallGraph& g) {
    if (h.n > g.n || h.edge_total() > g.edge_total()) return false;
    std::array<int, 9> hdeg{}, gdeg{};
    for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < h.n; ++j)
            if (h.has(i, j)) hdeg[i]++;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.has(i, j)) gdeg[i]++;

    // Assign high-degree pattern vertices first.
    std::array<int, 9> order{};
    for (int i = 0; i < h.n; ++i) order[i] = i;
    std::sort(order.begin(), order.begin() + h.n,
              [&](int a, int b) { return hdeg[a] > hdeg[b]; });

    std::array<int, 9> img{};
    img.fill(-1);
    std::array<char, 9> used{};

    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == h.n) return true;
        int hv = order[pos];
        for (int gv = 0; gv < g.n; ++gv) {
            if (used[gv] || gdeg[gv] < hdeg[hv]) continue;
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                int hw = order[prev];
                if (h.has(hv, hw) && !g.has(gv, img[hw])) ok = false;
            }
            if (!ok) continue;
            used[gv] = 1;
            img[hv] = gv;
            if (self(self, pos + 1)) return true;
            used[gv] = 0;
            img[hv] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline bool has_minor_small(const SmallGraph& g, const SmallGraph& h,
                            std::unordered_map<uint64_t, bool>& memo) {
    if (g.n < h.n || g.edge_total() < h.edge_total()) return false;
    auto it = memo.find(g.key());
    if (it != memo.end()) return it->second;
    bool found = subgraph_embeds(h, g);
    if (!found) {
        for (int i = 0; i < g.n && !found; ++i)
            for (int j = i + 1; j < g.n && !found; ++j)
                if (g.has(i, j) && has_minor_small(contract(g, i, j), h, memo)) found = true;
    }
    memo.emplace(g.key(), found);
    return found;
}

}  // namespace detail

// Exact minor test by exhaustive recursion over contractions, with subgraph
// embedding at every level (deletions commute to the end). Memoized on the
// compacted labeled adjacency mask. Capped at 9 vertices for g.
inline bool has_minor_oracle(const SimpleGraph& g, const SimpleGraph& h) {
    if (g.vertex_count() > 9)
        throw CapacityError("minor oracle capped at 9 vertices");
    if (h.vertex_count() > 9)
        throw CapacityError("minor oracle pattern capped at 9 vertices");
    detail::SmallGraph sg = detail::to_small(g);
    detail::SmallGraph sh = detail::to_small(h);
    // Memo is per pattern; keyed by the contracted graph.
    thread_local std::unordered_map<uint64_t, std::unordered_map<uint64_t, bool>> memos;
    auto& memo = memos[sh.key()];
    if (memo.size() > (1u << 22)) memo.clear();
    return detail::has_minor_small(sg, sh, memo);
}

inline SimpleGraph k4_graph() {
    return SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline SimpleGraph k23_graph() {
    return SimpleGraph::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

// K4 minus one edge.
inline SimpleGraph diamond_graph() {
    return SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace aeg
