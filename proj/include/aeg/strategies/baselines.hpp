#pragma once

#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "aeg/properties.hpp"
#include "aeg/rng.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

// Uniform over unclaimed edges, from the seeded stream. Works for either role.
class RandomStrategy final : public Strategy {
public:
    RandomStrategy(Player role, int n, uint64_t stream_seed) : role_(role), rng_(stream_seed) {
        pool_.resize(static_cast<size_t>(edge_slot_count(n)));
        std::iota(pool_.begin(), pool_.end(), 0LL);
    }

    std::string_view id() const override { return "random"; }
    Player role() const override { return role_; }

    Edge next_move(const Board& board) override {
        // Entries claimed by the opponent since our last draw are discarded
        // lazily, so a draw is amortized O(1).
        while (!pool_.empty()) {
            size_t j = static_cast<size_t>(rng_.below(pool_.size()));
            long long idx = pool_[j];
            pool_[j] = pool_.back();
            pool_.pop_back();
            Edge e = board.edge_at(idx);
            if (board.unclaimed(e)) return e;
        }
        throw ProtocolError("random strategy asked to move on an exhausted board");
    }

private:
    Player role_;
    Rng rng_;
    std::vector<long long> pool_;
};

// Lowest-index unclaimed edge whose addition keeps the avoider's graph
// non-losing, else lowest-index unclaimed. Rescans the board each move, so
// only suitable for small boards.
class GreedyAvoider final : public Strategy {
public:
    GreedyAvoider(int n, GameFamily family) : family_(family), graph_(n) {}

    std::string_view id() const override { return "greedy-avoider"; }
    Player role() const override { return Player::Avoider; }

    Edge next_move(const Board& board) override {
        sync(board);
        std::optional<Edge> fallback;
        for (long long i = 0; i < board.edge_slots(); ++i) {
            Edge e = board.edge_at(i);
            if (!board.unclaimed(e)) continue;
            if (!fallback) fallback = e;
            SimpleGraph trial = graph_;
            trial.add_edge(e.u, e.v);
            if (!is_losing(trial, family_)) return e;
        }
        if (fallback) return *fallback;
        throw ProtocolError("greedy avoider asked to move on an exhausted board");
    }

private:
    void sync(const Board& board) {
        const auto& hist = board.history();
        while (seen_ < hist.size()) {
            const auto& mv = hist[seen_++];
            if (mv.player == Player::Avoider) graph_.add_edge(mv.edge.u, mv.edge.v);
        }
    }

    GameFamily family_;
    SimpleGraph graph_;
    size_t seen_ = 0;
};

// Unclaimed edge maximizing the sum of its endpoints' Avoider degrees,
// ties by lowest edge index. Vertices are bucketed by Avoider degree and
// degree-pair classes are visited best-first, so a move costs roughly the
// number of claimed edges ranking above the answer.
class SaboteurEnforcer final : public Strategy {
public:
    explicit SaboteurEnforcer(int n) : n_(n), bucket_(1), vertex_deg_(n, 0) {
        bucket_[0].reserve(n);
        for (int v = 0; v < n; ++v) bucket_[0].push_back(v);
    }

    std::string_view id() const override { return "saboteur-enforcer"; }
    Player role() const override { return Player::Enforcer; }

    Edge next_move(const Board& board) override {
        sync(board);
        std::vector<int> degs;  // distinct degrees, descending
        for (int d = static_cast<int>(bucket_.size()) - 1; d >= 0; --d)
            if (!bucket_[d].empty()) degs.push_back(d);

        // Best-first over index pairs (i <= j) into degs; key is the degree sum.
        auto sum_of = [&](std::pair<int, int> c) { return degs[c.first] + degs[c.second]; };
        auto cmp = [&](std::pair<int, int> a, std::pair<int, int> b) {
            return sum_of(a) < sum_of(b);
        };
        std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, decltype(cmp)>
            frontier(cmp);
        std::set<std::pair<int, int>> pushed;
        auto push = [&](int i, int j) {
            if (i > j || j >= static_cast<int>(degs.size())) return;  // canonical i <= j
            if (pushed.emplace(i, j).second) frontier.emplace(i, j);
        };
        push(0, 0);
        while (!frontier.empty()) {
            int key = sum_of(frontier.top());
            std::optional<Edge> best;
            while (!frontier.empty() && sum_of(frontier.top()) == key) {
                auto [i, j] = frontier.top();
                frontier.pop();
                auto found = class_min_unclaimed(board, degs[i], degs[j]);
                if (found && (!best || board.index(*found) < board.index(*best))) best = found;
                push(i + 1, j);
                push(i, j + 1);
            }
            if (best) return *best;
        }
        throw ProtocolError("saboteur asked to move on an exhausted board");
    }

private:
    // Lexicographically smallest unclaimed edge whose endpoint degrees are
    // exactly {da, db}.
    std::optional<Edge> class_min_unclaimed(const Board& board, int da, int db) const {
        const auto& A = bucket_[da];
        const auto& B = bucket_[db];
        if (da == db) {
            for (size_t i = 0; i < A.size(); ++i)
                for (size_t j = i + 1; j < A.size(); ++j) {
                    Edge e(A[i], A[j]);
                    if (board.unclaimed(e)) return e;
                }
            return std::nullopt;
        }
        // Walk candidate first endpoints in ascending order.
        size_t ia = 0, ib = 0;
        while (ia < A.size() || ib < B.size()) {
            bool take_a = ib >= B.size() || (ia < A.size() && A[ia] < B[ib]);
            int u = take_a ? A[ia++] : B[ib++];
            const auto& partners = take_a ? B : A;
            for (int v : partners) {
                if (v <= u) continue;
                Edge e(u, v);
                if (board.unclaimed(e)) return e;
            }
        }
        return std::nullopt;
    }

    void sync(const Board& board) {
        const auto& hist = board.history();
        while (seen_ < hist.size()) {
            const auto& mv = hist[seen_++];
            if (mv.player != Player::Avoider) continue;
            for (int v : {mv.edge.u, mv.edge.v}) {
                int d = vertex_deg_[v];
                auto& from = bucket_[d];
                from.erase(std::find(from.begin(), from.end(), v));
                if (static_cast<size_t>(d + 1) >= bucket_.size()) bucket_.resize(d + 2);
                auto& to = bucket_[d + 1];
                to.insert(std::lower_bound(to.begin(), to.end(), v), v);
                vertex_deg_[v] = d + 1;
            }
        }
    }

    int n_;
    std::vector<std::vector<int>> bucket_;  // avoider degree -> sorted vertices
    std::vector<int> vertex_deg_;
    size_t seen_ = 0;
};

}  // namespace aeg
