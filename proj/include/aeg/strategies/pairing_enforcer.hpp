#pragma once

#include <optional>

#include "aeg/strategy.hpp"

namespace aeg {

// Anchors an edge uv on the first move, then answers every Avoider edge xw
// with w in {u, v} by claiming the partner edge from x to the other anchor
// endpoint. This blocks every triangle through uv. Off-pair moves claim the
// smallest unclaimed edge avoiding {u, v}, so future pairs stay intact.
class PairingEnforcer final : public Strategy {
public:
    explicit PairingEnforcer(int n) : n_(n) {}

    std::string_view id() const override { return "pairing-enforcer"; }
    Player role() const override { return Player::Enforcer; }

    Edge next_move(const Board& board) override {
        if (!anchor_) {
            anchor_ = pick_anchor(board);
            if (!anchor_disjoint_)
                diagnose(board, "no anchor disjoint from the opening; pairing not in force");
            return *anchor_;
        }
        auto last = board.last_move();
        if (last && last->player == Player::Avoider) {
            Edge a = last->edge;
            bool tu = a.touches(anchor_->u), tv = a.touches(anchor_->v);
            if (tu != tv) {
                int x = tu ? a.other(anchor_->u) : a.other(anchor_->v);
                Edge partner(x, tu ? anchor_->v : anchor_->u);
                if (board.unclaimed(partner)) return partner;
            }
        }
        return fallback(board);
    }

    std::optional<Edge> anchor() const { return anchor_; }

    void self_check(const Board& board, int move_index,
                    std::vector<MonitorEvent>& out) const override {
        if (!anchor_ || !anchor_disjoint_) return;  // block holds only for a clean anchor
        // Avoider must never own both anchor partners of any vertex.
        for (int x = 0; x < n_; ++x) {
            if (x == anchor_->u || x == anchor_->v) continue;
            if (board.owner(Edge(x, anchor_->u)) == Owner::Avoider &&
                board.owner(Edge(x, anchor_->v)) == Owner::Avoider) {
                out.push_back({move_index, "pairing-block", false, double(x), 0.0,
                               "avoider owns both anchor partners of vertex " + std::to_string(x)});
                return;
            }
        }
        out.push_back({move_index, "pairing-block", true, 0.0, 0.0, ""});
    }

private:
    // Smallest edge whose endpoints are untouched by Avoider's opening move,
    // falling back to the smallest unclaimed edge.
    Edge pick_anchor(const Board& board) {
        std::optional<Edge> touched;
        if (auto last = board.last_move(); last && last->player == Player::Avoider)
            touched = last->edge;
        for (long long i = 0; i < board.edge_slots(); ++i) {
            Edge e = board.edge_at(i);
            if (!board.unclaimed(e)) continue;
            if (touched && (touched->touches(e.u) || touched->touches(e.v))) continue;
            return e;
        }
        anchor_disjoint_ = false;
        auto any = lowest_unclaimed(board);
        if (!any) throw ProtocolError("pairing enforcer asked to move on an exhausted board");
        return *any;
    }

    Edge fallback(const Board& board) {
        // Scan from a cursor; claimed edges never come back, anchor-incident
        // edges are revisited only when nothing else is left.
        for (; cursor_ < board.edge_slots(); ++cursor_) {
            Edge e = board.edge_at(cursor_);
            if (!board.unclaimed(e)) continue;
            if (e.touches(anchor_->u) || e.touches(anchor_->v)) continue;
            return e;
        }
        auto any = lowest_unclaimed(board);
        if (!any) throw ProtocolError("pairing enforcer asked to move on an exhausted board");
        return *any;
    }

    int n_;
    std::optional<Edge> anchor_;
    bool anchor_disjoint_ = true;
    long long cursor_ = 0;
};

}  // namespace aeg
