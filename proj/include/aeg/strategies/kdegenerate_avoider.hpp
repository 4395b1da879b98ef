#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "aeg/properties.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

// Builds a maximal k-degenerate graph in two phases.
//
// Phase one runs k subphases: subphase i connects a fresh anchor v_i (chosen
// enforcer-sparsest inside V_{i-1}) to 3^{3k-i+1} vertices of V_{i-1}, which
// become V_i. The anchors plus V_k form the core R, on which the avoider's
// graph is maximal k-degenerate.
//
// Phase two attaches every other vertex x by k edges into R (or into R plus
// the well-connected set D when x's unclaimed supply toward R is short),
// protecting the needed edges with a pairing strategy: whenever the enforcer
// takes a paired edge, the partner is claimed at once. When no pairs remain
// the graph is maximal k-degenerate on all n vertices and any further claim
// is the loss.
class KDegenerateAvoider final : public Strategy {
public:
    KDegenerateAvoider(int n, int k) : n_(n), k_(k), graph_(n), in_r_(n, 0), in_d_(n, 0) {
        if (k < 1 || k > 12) throw InvalidParameter("k must be in 1..12");
    }

    std::string_view id() const override { return "paper-kdeg-avoider"; }
    Player role() const override { return Player::Avoider; }

    static long long pow3(int e) {
        long long r = 1;
        while (e-- > 0) r *= 3;
        return r;
    }
    long long subphase_target(int i) const { return pow3(3 * k_ - i + 1); }
    bool gate_satisfied() const { return n_ > 2 * pow3(3 * k_ + 1); }

    Edge next_move(const Board& board) override {
        if (my_moves_ == 0 && !gate_satisfied())
            diagnose(board, "n below the guarantee gate 2*3^(3k+1)");
        Edge e = choose(board);
        ++my_moves_;
        graph_.add_edge(e.u, e.v);
        return e;
    }

    enum class Phase { Build, Pairs, Done };
    Phase phase() const { return phase_; }

    // v_1 .. v_k, then V_k, then D, then F: a k-degeneracy witness ordering
    // for the avoider's graph at any point of phase two.
    std::vector<int> witness_ordering() const {
        std::vector<int> order = anchors_;
        order.insert(order.end(), v_prev_.begin(), v_prev_.end());
        for (int x = 0; x < n_; ++x)
            if (!in_r_[x] && in_d_[x]) order.push_back(x);
        for (int x = 0; x < n_; ++x)
            if (!in_r_[x] && !in_d_[x]) order.push_back(x);
        return order;
    }

    void self_check(const Board&, int move_index, std::vector<MonitorEvent>& out) const override {
        for (auto& ev : staged_) {
            ev.move_index = move_index;
            out.push_back(ev);
        }
        staged_.clear();
        if (off_script_) return;
        if (phase_ == Phase::Pairs && pairs_built_) {
            bool ok = valid_degeneracy_ordering(graph_, witness_ordering(), k_);
            out.push_back({move_index, "kdeg-ordering", ok, 0.0, double(k_),
                           "witness ordering preceding-neighbor check"});
        }
    }

private:
    Edge choose(const Board& board) {
        if (off_script_) return safe_fallback(board);
        if (phase_ == Phase::Build) {
            if (auto e = build_move(board)) return *e;
            off_script_ = true;
            return safe_fallback(board);
        }
        if (phase_ == Phase::Pairs) {
            if (!pairs_built_) build_pairs(board);
            if (auto e = pairs_move(board)) return *e;
            phase_ = Phase::Done;
        }
        // Maximal k-degenerate graph reached: every remaining edge loses.
        auto any = lowest_unclaimed(board);
        if (!any) throw ProtocolError("avoider asked to move on an exhausted board");
        return *any;
    }

    std::optional<Edge> build_move(const Board& board) {
        if (claimed_in_subphase_ == 0) start_subphase(board);
        int vi = anchors_.back();

        int best = -1;
        long long best_deg = -1;
        for (int x : v_prev_) {
            if (x == vi || !board.unclaimed(Edge(vi, x))) continue;
            long long d = enforcer_degree_within(board, x);
            if (best < 0 || d < best_deg) {
                best = x;
                best_deg = d;
            }
        }
        if (best < 0) {
            diagnose(board, "subphase " + std::to_string(subphase_) +
                                ": no free edge from the anchor into the previous layer");
            return std::nullopt;
        }
        v_cur_.push_back(best);
        ++claimed_in_subphase_;
        Edge e(vi, best);
        if (claimed_in_subphase_ == subphase_target(subphase_)) finish_subphase();
        return e;
    }

    void start_subphase(const Board& board) {
        ++subphase_;
        if (subphase_ == 1) {
            v_prev_.resize(n_);
            for (int v = 0; v < n_; ++v) v_prev_[v] = v;
        }
        // anchor: enforcer-sparsest vertex of the previous layer, ties lowest
        int anchor = -1;
        long long adeg = -1;
        for (int x : v_prev_) {
            long long d = enforcer_degree_within(board, x);
            if (anchor < 0 || d < adeg) {
                anchor = x;
                adeg = d;
            }
        }
        anchors_.push_back(anchor);
        std::erase(v_prev_, anchor);

        // the feasibility guarantee only holds above the n gate; below it the
        // init diagnostic already records that the script is unsupported
        if (gate_satisfied()) {
            long long avail = 0;
            for (int x : v_prev_)
                if (board.unclaimed(Edge(anchor, x))) ++avail;
            long long need = 2 * subphase_target(subphase_);
            staged_.push_back({0, "kdeg-subphase-feasibility", avail >= need, double(avail),
                               double(need), "subphase " + std::to_string(subphase_)});
        }
    }

    long long enforcer_degree_within(const Board& board, int x) const {
        if (subphase_ <= 1) return board.degree(Player::Enforcer, x);
        long long d = 0;
        for (int w : board.neighbors(Player::Enforcer, x))
            if (in_prev_[w]) ++d;
        return d;
    }

    void finish_subphase() {
        v_prev_ = v_cur_;
        std::sort(v_prev_.begin(), v_prev_.end());
        v_cur_.clear();
        claimed_in_subphase_ = 0;
        in_prev_.assign(n_, 0);
        for (int x : v_prev_) in_prev_[x] = 1;
        if (subphase_ == k_) {
            for (int x : v_prev_) in_r_[x] = 1;
            for (int x : anchors_) in_r_[x] = 1;
            phase_ = Phase::Pairs;  // pairs are built on the next turn
        }
    }

    void build_pairs(const Board& board) {
        pairs_built_ = true;
        std::vector<int> r_list;
        for (int x = 0; x < n_; ++x)
            if (in_r_[x]) r_list.push_back(x);
        const long long r_size = static_cast<long long>(r_list.size());

        std::vector<int> deg_a_r(n_, 0);
        long long f_count = 0;
        for (int x = 0; x < n_; ++x) {
            if (in_r_[x]) continue;
            int da = 0, de = 0;
            for (int w : graph_.neighbors(x))
                if (in_r_[w]) ++da;
            for (int w : board.neighbors(Player::Enforcer, x))
                if (in_r_[w]) ++de;
            deg_a_r[x] = da;
            // f(x) = da + (|R| - de - da)/2, compared against k without halving
            if (2 * da + (r_size - de - da) >= 2 * k_) in_d_[x] = 1;
            else ++f_count;
        }
        staged_.push_back({0, "kdeg-f-partition-size", f_count <= pow3(3 * k_ + 1),
                           double(f_count), double(pow3(3 * k_ + 1)), "|F| bound"});

        std::vector<int> rd_list = r_list;
        for (int x = 0; x < n_; ++x)
            if (!in_r_[x] && in_d_[x]) rd_list.push_back(x);
        std::sort(rd_list.begin(), rd_list.end());

        for (int x = 0; x < n_; ++x) {
            if (in_r_[x]) continue;
            int need = 2 * (k_ - deg_a_r[x]);
            if (need <= 0) continue;
            const std::vector<int>& partners = in_d_[x] ? r_list : rd_list;
            std::vector<long long> found;
            for (int w : partners) {
                if (w == x) continue;
                Edge e(x, w);
                if (board.unclaimed(e)) {
                    found.push_back(board.index(e));
                    if (static_cast<int>(found.size()) == need) break;
                }
            }
            if (static_cast<int>(found.size()) < need) {
                diagnose(board, "pairing shortfall at vertex " + std::to_string(x));
                if (found.size() % 2) found.pop_back();
            }
            for (size_t j = 0; j + 1 < found.size(); j += 2) {
                int id = static_cast<int>(pairs_.size());
                pairs_.push_back({found[j], found[j + 1]});
                pair_of_[found[j]] = id;
                pair_of_[found[j + 1]] = id;
                pair_alive_.push_back(1);
                ++alive_;
            }
        }
    }

    std::optional<Edge> pairs_move(const Board& board) {
        if (auto last = board.last_move(); last && last->player == Player::Enforcer) {
            auto it = pair_of_.find(board.index(last->edge));
            if (it != pair_of_.end() && pair_alive_[it->second]) {
                int id = it->second;
                pair_alive_[id] = 0;
                --alive_;
                long long partner = pairs_[id].first == board.index(last->edge)
                                        ? pairs_[id].second
                                        : pairs_[id].first;
                return board.edge_at(partner);
            }
        }
        // enforcer played an unpaired edge: retire the lowest live pair
        while (next_retire_ < pairs_.size() && !pair_alive_[next_retire_]) ++next_retire_;
        if (next_retire_ < pairs_.size()) {
            int id = static_cast<int>(next_retire_);
            pair_alive_[id] = 0;
            --alive_;
            return board.edge_at(std::min(pairs_[id].first, pairs_[id].second));
        }
        return std::nullopt;
    }

    Edge safe_fallback(const Board& board) {
        for (long long i = 0; i < board.edge_slots(); ++i) {
            Edge e = board.edge_at(i);
            if (!board.unclaimed(e)) continue;
            SimpleGraph t = graph_;
            t.add_edge(e.u, e.v);
            if (degeneracy(t).k <= k_) return e;
        }
        auto any = lowest_unclaimed(board);
        if (!any) throw ProtocolError("avoider asked to move on an exhausted board");
        return *any;
    }

    int n_, k_;
    int my_moves_ = 0;
    SimpleGraph graph_;
    Phase phase_ = Phase::Build;
    int subphase_ = 0;  // 1-based once started
    long long claimed_in_subphase_ = 0;
    std::vector<int> anchors_;
    std::vector<int> v_prev_, v_cur_;
    std::vector<char> in_prev_;
    std::vector<char> in_r_, in_d_;
    bool pairs_built_ = false;
    bool off_script_ = false;
    std::vector<std::pair<long long, long long>> pairs_;
    std::vector<char> pair_alive_;
    std::unordered_map<long long, int> pair_of_;
    size_t next_retire_ = 0;
    long long alive_ = 0;
    mutable std::vector<MonitorEvent> staged_;
};

}  // namespace aeg
