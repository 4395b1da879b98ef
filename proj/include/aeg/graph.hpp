#pragma once

#include <algorithm>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "aeg/edge.hpp"
#include "aeg/errors.hpp"

namespace aeg {

// Undirected simple graph with per-vertex sorted neighbor sets.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(static_cast<size_t>(check_n(n))) {}

    static SimpleGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        SimpleGraph g(n);
        for (auto [a, b] : edges) g.add_edge(a, b);
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    long long edge_count() const { return m_; }

    void add_edge(int a, int b) {
        Edge e(a, b);
        if (e.v >= vertex_count()) throw InvalidParameter("edge endpoint out of range");
        auto& nu = adj_[e.u];
        auto it = std::lower_bound(nu.begin(), nu.end(), e.v);
        if (it != nu.end() && *it == e.v) throw InvalidParameter("duplicate edge");
        nu.insert(it, e.v);
        auto& nv = adj_[e.v];
        nv.insert(std::lower_bound(nv.begin(), nv.end(), e.u), e.u);
        ++m_;
    }

    bool has_edge(int a, int b) const {
        if (a == b) return false;
        const auto& na = adj_[a];
        return std::binary_search(na.begin(), na.end(), b);
    }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Edges in canonical (u, v) lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Exchange format: first line "n m", then m lines "u v" (0-based, u < v).
    // Blank lines are tolerated anywhere.
    static SimpleGraph read_edge_list(std::istream& in) {
        std::string line;
        auto next_line = [&](std::string& out) {
            while (std::getline(in, out)) {
                if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
            }
            return false;
        };
        if (!next_line(line)) throw InvalidParameter("edge list: missing header line");
        std::istringstream head(line);
        long long n = -1, m = -1;
        if (!(head >> n >> m) || n < 0 || m < 0)
            throw InvalidParameter("edge list: bad header line");
        SimpleGraph g(static_cast<int>(n));
        for (long long i = 0; i < m; ++i) {
            if (!next_line(line)) throw InvalidParameter("edge list: missing edge line");
            std::istringstream row(line);
            int u, v;
            if (!(row >> u >> v)) throw InvalidParameter("edge list: bad edge line");
            if (u >= v) throw InvalidParameter("edge list: edges must satisfy u < v");
            g.add_edge(u, v);
        }
        return g;
    }

    void write_edge_list(std::ostream& out) const {
        out << vertex_count() << ' ' << m_ << '\n';
        for (Edge e : edges()) out << e.u << ' ' << e.v << '\n';
    }

private:
    static int check_n(int n) {
        if (n < 0) throw InvalidParameter("vertex count must be non-negative");
        return n;
    }

    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

}  // namespace aeg
