#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "aeg/properties.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

enum class FaceVertexClass { Good, Bad };

// An isolated vertex v is bad for the given cyclic outer face when every
// three consecutive face vertices include an enforcer-neighbor of v.
inline FaceVertexClass classify_vertex(const Board& board, const std::vector<int>& face, int v) {
    const int L = static_cast<int>(face.size());
    for (int i = 0; i < L; ++i) {
        bool enforcer_hit = false;
        for (int d = 0; d < 3; ++d) {
            int w = face[(i + d) % L];
            if (w != v && board.owner(Edge(v, w)) == Owner::Enforcer) {
                enforcer_hit = true;
                break;
            }
        }
        if (!enforcer_hit) return FaceVertexClass::Good;
    }
    return FaceVertexClass::Bad;
}

// Keeps the Avoider's graph one edge short of a maximal outerplanar graph
// (a triangulated polygon missing the virtual edge m) plus isolated vertices.
//
// Play proceeds in phases: a two-move triangle bootstrap; repeated two-move
// extensions that splice an isolated vertex into the outer face; one optional
// two-move reduction when the face first reaches ceil(n/4) with five bad
// vertices alive; and an endgame that attaches the leftover bad vertices by
// whatever edges keep the graph outerplanar.
//
// An isolated vertex is bad when every three consecutive face vertices
// contain an enforcer-neighbor of it, good otherwise. A good vertex always
// admits a fully unclaimed face triple, and the enforcer's single reply
// cannot block both side edges of a started extension.
class OuterplanarAvoider final : public Strategy {
public:
    static constexpr int kMinGuaranteedN = 50;  // survival guarantee gate

    explicit OuterplanarAvoider(int n) : n_(n), in_core_(n, 0), graph_(n) {}

    std::string_view id() const override { return "paper-op-avoider"; }
    Player role() const override { return Player::Avoider; }

    Edge next_move(const Board& board) override {
        if (my_moves_ == 0 && n_ < kMinGuaranteedN)
            diagnose(board, "n below the survival guarantee gate");
        Edge e = choose(board);
        ++my_moves_;
        graph_.add_edge(e.u, e.v);
        return e;
    }

    // Face order of the current core; empty before the bootstrap completes.
    const std::vector<int>& outer_face() const { return face_; }
    Edge virtual_edge() const { return m_; }
    bool reduce_done() const { return reduce_done_; }

    using VertexClass = FaceVertexClass;

    // v must be isolated in the Avoider's graph.
    VertexClass classify(const Board& board, int v) const {
        return classify_vertex(board, face_, v);
    }

    void self_check(const Board& board, int move_index,
                    std::vector<MonitorEvent>& out) const override {
        if (face_.empty() || off_script_) return;

        int bad = 0, max_good_deg = 0;
        for (int v = 0; v < n_; ++v) {
            if (graph_.degree(v) != 0) continue;  // isolated vertices only
            if (classify(board, v) == VertexClass::Bad)
                ++bad;
            else
                max_good_deg = std::max(max_good_deg, board.degree(Player::Enforcer, v));
        }
        out.push_back({move_index, "bad-vertex-bound", bad <= 5, double(bad), 5.0, ""});
        if (reduce_done_)
            out.push_back(
                {move_index, "bad-vertex-after-reduce", bad <= 4, double(bad), 4.0, ""});
        double box_bound = 4.0 * std::log(double(n_));
        out.push_back({move_index, "box-degree", max_good_deg <= box_bound,
                       double(max_good_deg), box_bound, ""});

        if (!pending_ && !endgame_) {
            // Core structure: the graph plus the virtual edge is a maximal
            // outerplanar graph on the face vertices, everything else isolated.
            long long core = static_cast<long long>(face_.size());
            bool structural = graph_.edge_count() == 2 * core - 4;
            if (structural) {
                SimpleGraph with_m = graph_;
                with_m.add_edge(m_.u, m_.v);
                structural = is_outerplanar(with_m);
            }
            out.push_back({move_index, "outerplanar-core", structural,
                           double(graph_.edge_count()), double(2 * core - 4), ""});
        }
    }

private:
    struct Pending {
        int v;           // vertex being attached
        int v1, v2, v3;  // consecutive face vertices; v-v2 already claimed
    };

    Edge choose(const Board& board) {
        if (off_script_) return safe_fallback(board);

        if (my_moves_ == 0) return Edge(0, 1);
        if (my_moves_ == 1) return bootstrap_second(board);

        if (pending_) return finish_extension(board);

        if (!endgame_) {
            int threshold = (n_ + 3) / 4;
            if (!reduce_checked_ && static_cast<int>(face_.size()) >= threshold) {
                reduce_checked_ = true;
                if (auto e = try_reduce_bad(board)) return *e;
            }
            if (auto e = start_extension(board)) return *e;
            endgame_ = true;
        }
        return endgame_move(board);
    }

    Edge bootstrap_second(const Board& board) {
        for (int c = 2; c < n_; ++c) {
            if (board.unclaimed(Edge(1, c))) {
                face_ = {0, 1, c};
                m_ = Edge(0, c);
                in_core_[0] = in_core_[1] = 1;
                in_core_[c] = 1;
                return Edge(1, c);
            }
        }
        diagnose(board, "bootstrap: no free triangle edge");
        off_script_ = true;
        return safe_fallback(board);
    }

    Edge finish_extension(const Board& board) {
        Pending p = *pending_;
        pending_.reset();
        bool was_reduce = reduce_pending_;
        reduce_pending_ = false;
        Edge side1(p.v, p.v1), side3(p.v, p.v3);
        if (board.unclaimed(side1)) {
            splice(p.v, p.v1, p.v2);
            if (was_reduce) reduce_done_ = true;
            return side1;
        }
        if (board.unclaimed(side3)) {
            splice(p.v, p.v2, p.v3);
            if (was_reduce) reduce_done_ = true;
            return side3;
        }
        diagnose(board, "extension: both side edges taken");
        off_script_ = true;
        return safe_fallback(board);
    }

    // Insert v on the face between adjacent vertices a and b.
    void splice(int v, int a, int b) {
        const int L = static_cast<int>(face_.size());
        for (int i = 0; i < L; ++i) {
            int x = face_[i], y = face_[(i + 1) % L];
            if ((x == a && y == b) || (x == b && y == a)) {
                face_.insert(face_.begin() + i + 1, v);
                in_core_[v] = 1;
                return;
            }
        }
        off_script_ = true;  // unreachable if bookkeeping is sound
    }

    std::optional<Edge> start_extension(const Board& board) {
        // Good isolated vertex of highest enforcer degree, ties lowest index.
        int best = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (in_core_[v]) continue;
            if (classify(board, v) != VertexClass::Good) continue;
            int d = board.degree(Player::Enforcer, v);
            if (d > best_deg) {
                best = v;
                best_deg = d;
            }
        }
        if (best < 0) return std::nullopt;

        // First fully unclaimed face triple, scanning from a rotating start.
        const int L = static_cast<int>(face_.size());
        for (int s = 0; s < L; ++s) {
            int i = (scan_pos_ + s) % L;
            int v1 = face_[i], v2 = face_[(i + 1) % L], v3 = face_[(i + 2) % L];
            if (board.unclaimed(Edge(best, v1)) && board.unclaimed(Edge(best, v2)) &&
                board.unclaimed(Edge(best, v3))) {
                scan_pos_ = (i + 2) % L;
                pending_ = Pending{best, v1, v2, v3};
                return Edge(best, v2);
            }
        }
        diagnose(board, "extension: good vertex without free triple");
        off_script_ = true;
        return safe_fallback(board);
    }

    // With the face at ceil(n/4) and five bad vertices alive, pick a face edge
    // whose five blocks have reciprocal sizes summing below 2, extend over it
    // with an enforcer-isolated vertex; at least one bad vertex turns good.
    // Skipped silently when fewer than five bad vertices exist.
    std::optional<Edge> try_reduce_bad(const Board& board) {
        std::vector<int> bad;
        for (int v = 0; v < n_; ++v)
            if (!in_core_[v] && classify(board, v) == VertexClass::Bad) bad.push_back(v);
        if (bad.size() != 5) return std::nullopt;

        const int L = static_cast<int>(face_.size());
        // marked[bi][i]: face position i holds an enforcer-neighbor of bad[bi].
        std::vector<std::vector<char>> marked(5, std::vector<char>(L, 0));
        // block_size[bi][e]: edge count of the face arc containing face edge e
        // (from face_[e] to face_[e+1]) in the subdivision by bad[bi].
        std::vector<std::vector<int>> block_size(5, std::vector<int>(L, 0));
        for (int bi = 0; bi < 5; ++bi) {
            bool any = false;
            for (int i = 0; i < L; ++i)
                if (board.owner(Edge(bad[bi], face_[i])) == Owner::Enforcer) {
                    marked[bi][i] = 1;
                    any = true;
                }
            if (!any) return std::nullopt;  // not actually bad; stay safe
            for (int e = 0; e < L; ++e) {
                int start = e, guard = 0;
                while (!marked[bi][start] && guard++ < L) start = (start + L - 1) % L;
                int fwd = (start + 1) % L, blk = 1;
                while (!marked[bi][fwd]) {
                    fwd = (fwd + 1) % L;
                    ++blk;
                }
                block_size[bi][e] = blk;
            }
        }

        int chosen = -1;
        for (int e = 0; e < L && chosen < 0; ++e) {
            double s = 0;
            for (int bi = 0; bi < 5; ++bi) s += 1.0 / block_size[bi][e];
            if (s < 2.0) chosen = e;
        }
        if (chosen < 0) {
            diagnose(board, "reduce: no face edge with block sum below 2");
            return std::nullopt;
        }

        // The incident face edge sharing two of the size-3 blocks. Edge
        // `chosen` and its right neighbor share face position chosen+1; with
        // its left neighbor, position chosen.
        int cnt_r = 0, cnt_l = 0;
        for (int bi = 0; bi < 5; ++bi) {
            if (block_size[bi][chosen] != 3) continue;
            if (!marked[bi][(chosen + 1) % L]) ++cnt_r;
            if (!marked[bi][chosen]) ++cnt_l;
        }
        int w1, w2, w3;
        if (cnt_r >= cnt_l && cnt_r >= 2) {
            w1 = face_[chosen];
            w2 = face_[(chosen + 1) % L];
            w3 = face_[(chosen + 2) % L];
        } else if (cnt_l >= 2) {
            w1 = face_[(chosen + 1) % L];
            w2 = face_[chosen];
            w3 = face_[(chosen + L - 1) % L];
        } else {
            diagnose(board, "reduce: no incident edge sharing two blocks");
            return std::nullopt;
        }

        int u = -1;
        for (int v = 0; v < n_; ++v)
            if (!in_core_[v] && board.degree(Player::Enforcer, v) == 0) {
                u = v;
                break;
            }
        if (u < 0) {
            diagnose(board, "reduce: no enforcer-isolated vertex");
            return std::nullopt;
        }

        pending_ = Pending{u, w1, w2, w3};
        reduce_pending_ = true;
        return Edge(u, w2);
    }

    // Attach remaining (bad) vertices by any outerplanarity-preserving edge,
    // preferring edges at low-degree vertices; the final claim is the loss.
    Edge endgame_move(const Board& board) {
        auto keeps_outerplanar = [&](Edge e) {
            SimpleGraph trial = graph_;
            trial.add_edge(e.u, e.v);
            return is_outerplanar(trial);
        };
        for (int v = 0; v < n_; ++v) {
            if (graph_.degree(v) > 1) continue;
            for (int w = 0; w < n_; ++w) {
                if (w == v) continue;
                Edge e(v, w);
                if (board.unclaimed(e) && keeps_outerplanar(e)) return e;
            }
        }
        for (long long i = 0; i < board.edge_slots(); ++i) {
            Edge e = board.edge_at(i);
            if (board.unclaimed(e) && keeps_outerplanar(e)) return e;
        }
        auto any = lowest_unclaimed(board);
        if (!any) throw ProtocolError("avoider asked to move on an exhausted board");
        return *any;  // the losing move
    }

    Edge safe_fallback(const Board& board) {
        for (long long i = 0; i < board.edge_slots(); ++i) {
            Edge e = board.edge_at(i);
            if (!board.unclaimed(e)) continue;
            SimpleGraph t = graph_;
            t.add_edge(e.u, e.v);
            if (is_outerplanar(t)) return e;
        }
        auto any = lowest_unclaimed(board);
        if (!any) throw ProtocolError("avoider asked to move on an exhausted board");
        return *any;
    }

    int n_;
    int my_moves_ = 0;
    std::vector<char> in_core_;
    SimpleGraph graph_;  // avoider's own edges
    std::vector<int> face_;
    Edge m_{0, 1};
    std::optional<Pending> pending_;
    bool reduce_pending_ = false;
    bool reduce_done_ = false;
    bool reduce_checked_ = false;
    bool endgame_ = false;
    bool off_script_ = false;
    int scan_pos_ = 0;
};

}  // namespace aeg
