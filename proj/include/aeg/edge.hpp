#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "aeg/errors.hpp"

namespace aeg {

// An edge of K_n in canonical orientation: 0 <= u < v. No loops.
struct Edge {
    int u = 0;
    int v = 1;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b || a < 0 || b < 0)
            throw InvalidParameter("edge endpoints must be distinct and non-negative");
    }

    bool touches(int w) const { return u == w || v == w; }
    int other(int w) const { return u == w ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

// Number of edges of K_n.
inline long long edge_slot_count(int n) {
    return static_cast<long long>(n) * (n - 1) / 2;
}

// Row-major index of a canonical edge: u*n - u*(u+1)/2 + (v-u-1).
// Lexicographic in (u, v); "lowest edge index" means lexicographically smallest.
inline long long edge_index(int n, Edge e) {
    return static_cast<long long>(e.u) * n - static_cast<long long>(e.u) * (e.u + 1) / 2 +
           (e.v - e.u - 1);
}

inline Edge edge_from_index(int n, long long idx) {
    // Invert the row-major formula by walking rows; n is small enough everywhere we use this.
    int u = 0;
    long long row = n - 1;
    while (idx >= row) {
        idx -= row;
        ++u;
        --row;
    }
    return Edge(u, u + 1 + static_cast<int>(idx));
}

inline std::string to_string(Edge e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace aeg
