#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aeg/edge.hpp"
#include "aeg/errors.hpp"
#include "aeg/graph.hpp"

namespace aeg {

enum class Player : uint8_t { Avoider, Enforcer };

inline Player opponent(Player p) {
    return p == Player::Avoider ? Player::Enforcer : Player::Avoider;
}

inline char player_tag(Player p) { return p == Player::Avoider ? 'A' : 'E'; }

enum class Owner : uint8_t { None, Avoider, Enforcer };

inline Owner owner_of(Player p) {
    return p == Player::Avoider ? Owner::Avoider : Owner::Enforcer;
}

struct MoveRecord {
    Player player;
    Edge edge;
};

// Shared board E(K_n) with the alternating-move protocol (Avoider first).
// Ownership is a flat array indexed by the canonical edge index.
class Board {
public:
    explicit Board(int n)
        : n_(n),
          own_(n >= 2 ? static_cast<size_t>(edge_slot_count(n)) : 0, Owner::None),
          deg_{std::vector<int>(n >= 2 ? n : 0, 0), std::vector<int>(n >= 2 ? n : 0, 0)},
          adj_{std::vector<std::vector<int>>(n >= 2 ? n : 0),
               std::vector<std::vector<int>>(n >= 2 ? n : 0)} {
        if (n < 2) throw InvalidParameter("board needs at least two vertices");
    }

    int vertex_count() const { return n_; }
    long long edge_slots() const { return static_cast<long long>(own_.size()); }
    long long unclaimed_count() const { return edge_slots() - history_.size(); }
    bool exhausted() const { return unclaimed_count() == 0; }

    Owner owner(Edge e) const { return own_[index(e)]; }
    bool unclaimed(Edge e) const { return owner(e) == Owner::None; }

    Player to_move() const {
        return moves_[0] == moves_[1] ? Player::Avoider : Player::Enforcer;
    }

    int moves_made(Player p) const { return moves_[idx(p)]; }
    const std::vector<MoveRecord>& history() const { return history_; }

    std::optional<MoveRecord> last_move() const {
        if (history_.empty()) return std::nullopt;
        return history_.back();
    }

    void claim(Player p, Edge e) {
        if (e.v >= n_) throw InvalidParameter("edge endpoint out of range for board");
        Owner& slot = own_[index(e)];
        if (slot != Owner::None) throw OccupiedEdge("edge " + to_string(e) + " already claimed");
        if (to_move() != p) throw ProtocolError("move out of turn");
        slot = owner_of(p);
        ++moves_[idx(p)];
        history_.push_back({p, e});
        deg_[idx(p)][e.u]++;
        deg_[idx(p)][e.v]++;
        adj_[idx(p)][e.u].push_back(e.v);
        adj_[idx(p)][e.v].push_back(e.u);
    }

    int degree(Player p, int v) const { return deg_[idx(p)][v]; }

    // Neighbors in claim order (not sorted).
    const std::vector<int>& neighbors(Player p, int v) const { return adj_[idx(p)][v]; }

    SimpleGraph player_graph(Player p) const {
        SimpleGraph g(n_);
        for (const auto& mv : history_)
            if (mv.player == p) g.add_edge(mv.edge.u, mv.edge.v);
        return g;
    }

    long long index(Edge e) const { return edge_index(n_, e); }
    Edge edge_at(long long idx_) const { return edge_from_index(n_, idx_); }

private:
    static size_t idx(Player p) { return p == Player::Avoider ? 0 : 1; }

    int n_;
    std::vector<Owner> own_;
    int moves_[2] = {0, 0};  // [avoider, enforcer]
    std::vector<MoveRecord> history_;
    std::vector<int> deg_[2];
    std::vector<std::vector<int>> adj_[2];
};

inline Board new_board(int n) { return Board(n); }

}  // namespace aeg
