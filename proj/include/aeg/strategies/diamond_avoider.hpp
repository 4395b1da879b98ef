#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "aeg/properties.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

// Two-phase star strategy around fixed centers c1 = 0 and c2 = 1.
//
// Phase one builds two disjoint stars plus the bridge c1c2, answering each
// enforcer move by absorbing one isolated vertex into a star; the response
// rules keep the density (enforcer edges inside L_i or between L_i and R,
// per |L_i|) at most 1 on both sides. Phase two claims a near-perfect
// matching inside each star's leaf set, always answering next to the
// enforcer-busiest live leaf. The result is edge-disjoint triangles on a
// bridge, a diamond-minor-free graph.
class DiamondAvoider final : public Strategy {
public:
    static constexpr int kMinGuaranteedN = 12;  // survival guarantee gate

    explicit DiamondAvoider(int n) : n_(n), member_(n, Member::R), graph_(n) {
        member_[c1_] = Member::Center;
        if (n > 1) member_[c2_] = Member::Center;
        r_count_ = n - 2;
    }

    std::string_view id() const override { return "paper-diamond-avoider"; }
    Player role() const override { return Player::Avoider; }

    Edge next_move(const Board& board) override {
        if (my_moves_ == 0 && n_ < kMinGuaranteedN)
            diagnose(board, "n below the survival guarantee gate");
        Edge e = choose(board);
        ++my_moves_;
        graph_.add_edge(e.u, e.v);
        return e;
    }

    enum class Phase { One, Two, End };
    Phase phase() const { return phase_; }

    // Density of enforcer edges around side i (1 or 2), exact as a fraction.
    // Phase one counts edges inside L_i and between L_i and R; phase two
    // counts edges inside the live set only.
    std::pair<long long, long long> density_fraction(const Board& board, int i) const {
        long long num = 0, den = 1;
        if (phase_ == Phase::One) {
            const std::vector<int>& side = (i == 1) ? l1_ : l2_;
            Member mine = (i == 1) ? Member::L1 : Member::L2;
            for (int v : side)
                for (int w : board.neighbors(Player::Enforcer, v)) {
                    if (member_[w] == mine) num += 1;  // counted twice, halved below
                    else if (member_[w] == Member::R) num += 2;
                }
            num /= 2;
            den = std::max<long long>(side.size(), 1);
        } else {
            const std::vector<int>& live = (i == 1) ? live1_ : live2_;
            std::vector<char> in_live(n_, 0);
            for (int v : live) in_live[v] = 1;
            for (int v : live)
                for (int w : board.neighbors(Player::Enforcer, v))
                    if (in_live[w]) num += 1;
            num /= 2;
            den = std::max<long long>(live.size(), 1);
        }
        return {num, den};
    }

    void self_check(const Board& board, int move_index,
                    std::vector<MonitorEvent>& out) const override {
        if (off_script_ || my_moves_ == 0) return;
        // the density invariant holds after the avoider's own moves; the
        // enforcer can raise it transiently and the scripted reply restores it
        auto last = board.last_move();
        bool after_own_move = last && last->player == Player::Avoider;
        if (phase_ != Phase::End && after_own_move) {
            for (int i : {1, 2}) {
                auto [num, den] = density_fraction(board, i);
                out.push_back({move_index, "density", num <= den,
                               double(num) / double(den), 1.0,
                               "side " + std::to_string(i)});
            }
        }
        if (phase_ == Phase::End && !unsat_reported_) {
            unsat_reported_ = true;
            out.push_back({move_index, "unsaturated-leaves", unsat_count_ <= 6,
                           double(unsat_count_), 6.0, "leaves unmatched at phase-two end"});
        }
    }

private:
    enum class Member : char { R, L1, L2, Center };

    Edge choose(const Board& board) {
        if (off_script_) return safe_fallback(board);
        if (my_moves_ == 0) return Edge(c1_, c2_);

        if (phase_ == Phase::One) return phase_one(board);
        if (phase_ == Phase::Two) {
            if (auto e = phase_two(board)) return *e;
            phase_ = Phase::End;
            // matchings cannot be extended; measure the leftovers now
            unsat_count_ = 0;
            for (int v : l1_)
                if (graph_.degree(v) <= 1) ++unsat_count_;
            for (int v : l2_)
                if (graph_.degree(v) <= 1) ++unsat_count_;
        }
        return safe_fallback(board);
    }

    Edge phase_one(const Board& board) {
        auto last = board.last_move();
        if (!last || last->player != Player::Enforcer) {
            off_script_ = true;
            diagnose(board, "phase one without an enforcer move to answer");
            return safe_fallback(board);
        }
        int a = last->edge.u, b = last->edge.v;
        std::optional<Edge> reply;

        auto center_index = [&](int v) { return v == c1_ ? 1 : (v == c2_ ? 2 : 0); };
        int ca = center_index(a), cb = center_index(b);
        if (ca || cb) {
            int i = ca ? ca : cb;
            int x = ca ? b : a;
            if (member_[x] == Member::R) {
                reply = absorb(x, 3 - i);  // xc_i answered by xc_{3-i}
            } else {
                reply = absorb_balanced_max_degree(board);  // saturated leaf; free absorption
            }
        } else {
            Member ma = member_[a], mb = member_[b];
            if (ma != Member::R && mb != Member::R && ma == mb) {
                // inside L_i: absorb the enforcer-busiest isolated vertex there
                int i = ma == Member::L1 ? 1 : 2;
                reply = absorb(max_degree_r_vertex(board, i), i);
            } else if (ma != mb && (ma == Member::R || mb == Member::R)) {
                // between L_i and R: pull the R endpoint to the other star
                int x = ma == Member::R ? a : b;
                int i = (ma == Member::R ? mb : ma) == Member::L1 ? 1 : 2;
                reply = absorb(x, 3 - i);
            } else if (ma == Member::R && mb == Member::R) {
                reply = absorb(std::min(a, b), balance_side());
            } else {
                // between L1 and L2
                reply = absorb_balanced_max_degree(board);
            }
        }
        if (!reply) {
            off_script_ = true;
            diagnose(board, "phase one: no isolated vertex left to absorb");
            return safe_fallback(board);
        }
        if (!board.unclaimed(*reply)) {
            off_script_ = true;
            diagnose(board, "phase one: scripted reply already claimed");
            return safe_fallback(board);
        }
        if (r_count_ == 0) start_phase_two();
        return *reply;
    }

    int balance_side() const { return l1_.size() <= l2_.size() ? 1 : 2; }

    // Highest enforcer degree toward L_i u R among isolated vertices, ties low.
    int max_degree_r_vertex(const Board& board, int i) const {
        Member side = i == 1 ? Member::L1 : Member::L2;
        int best = -1, best_deg = -1;
        for (int w = 0; w < n_; ++w) {
            if (member_[w] != Member::R) continue;
            int d = 0;
            for (int x : board.neighbors(Player::Enforcer, w))
                if (member_[x] == side || member_[x] == Member::R) ++d;
            if (d > best_deg) {
                best = w;
                best_deg = d;
            }
        }
        return best;
    }

    std::optional<Edge> absorb_balanced_max_degree(const Board& board) {
        int i = balance_side();
        int w = max_degree_r_vertex(board, i);
        if (w < 0) return std::nullopt;
        return absorb(w, i);
    }

    std::optional<Edge> absorb(int x, int i) {
        if (x < 0) return std::nullopt;
        member_[x] = i == 1 ? Member::L1 : Member::L2;
        (i == 1 ? l1_ : l2_).push_back(x);
        --r_count_;
        return Edge(x, i == 1 ? c1_ : c2_);
    }

    void start_phase_two() {
        phase_ = Phase::Two;
        std::sort(l1_.begin(), l1_.end());
        std::sort(l2_.begin(), l2_.end());
        live1_ = l1_;
        live2_ = l2_;
    }

    std::optional<Edge> phase_two(const Board& board) {
        int first = 0;
        if (auto last = board.last_move(); last && last->player == Player::Enforcer) {
            if (both_in(last->edge, live1_)) first = 1;
            else if (both_in(last->edge, live2_)) first = 2;
        }
        if (first == 0) first = live1_.size() >= live2_.size() ? 1 : 2;
        for (int side : {first, 3 - first})
            if (auto e = claim_in_live(board, side == 1 ? live1_ : live2_)) return e;
        return std::nullopt;
    }

    static bool both_in(Edge e, const std::vector<int>& live) {
        return std::binary_search(live.begin(), live.end(), e.u) &&
               std::binary_search(live.begin(), live.end(), e.v);
    }

    std::optional<Edge> claim_in_live(const Board& board, std::vector<int>& live) {
        while (live.size() >= 2) {
            // enforcer-busiest live vertex, ties lowest index
            int m = -1, best = -1;
            std::vector<char> in_live(n_, 0);
            for (int v : live) in_live[v] = 1;
            for (int v : live) {
                int d = 0;
                for (int w : board.neighbors(Player::Enforcer, v))
                    if (in_live[w]) ++d;
                if (d > best) {
                    best = d;
                    m = v;
                }
            }
            for (int y : live) {
                if (y == m) continue;
                Edge e(m, y);
                if (board.unclaimed(e)) {
                    live.erase(std::find(live.begin(), live.end(), m));
                    live.erase(std::find(live.begin(), live.end(), y));
                    return e;
                }
            }
            live.erase(std::find(live.begin(), live.end(), m));  // saturated; drop it
        }
        return std::nullopt;
    }

    Edge safe_fallback(const Board& board) {
        for (long long i = 0; i < board.edge_slots(); ++i) {
            Edge e = board.edge_at(i);
            if (!board.unclaimed(e)) continue;
            SimpleGraph t = graph_;
            t.add_edge(e.u, e.v);
            if (is_diamond_minor_free(t)) return e;
        }
        auto any = lowest_unclaimed(board);
        if (!any) throw ProtocolError("avoider asked to move on an exhausted board");
        return *any;
    }

    int n_;
    int c1_ = 0, c2_ = 1;
    int my_moves_ = 0;
    std::vector<Member> member_;
    SimpleGraph graph_;
    std::vector<int> l1_, l2_;        // star leaves (phase-one order, sorted later)
    std::vector<int> live1_, live2_;  // phase-two shrinking copies, sorted
    int r_count_ = 0;
    int unsat_count_ = 0;
    Phase phase_ = Phase::One;
    bool off_script_ = false;
    mutable bool unsat_reported_ = false;
};

}  // namespace aeg
