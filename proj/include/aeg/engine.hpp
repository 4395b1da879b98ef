#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aeg/board.hpp"
#include "aeg/properties.hpp"
#include "aeg/registry.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

// Outcome in Avoider moves: lost_at t means his t-th claimed edge was the
// first after which his graph contained a losing set; survived means the
// board was exhausted without that happening.
struct GameResult {
    std::optional<int> lost_at;
    bool survived() const { return !lost_at.has_value(); }
    bool operator==(const GameResult&) const = default;
};

struct Transcript {
    int version = 1;
    GameFamily family;
    int n = 0;
    uint64_t seed = 0;
    std::string avoider;
    std::string enforcer;
    std::vector<MoveRecord> moves;
    GameResult result;
};

struct GameRecord {
    Transcript transcript;
    GameResult result;
    std::vector<Diagnostic> diagnostics;
    std::vector<MonitorEvent> monitors;

    int monitor_violations() const {
        int c = 0;
        for (const auto& ev : monitors)
            if (!ev.ok) ++c;
        return c;
    }
};

struct EngineOptions {
    bool run_monitors = true;
};

// Alternating loop, Avoider first. The avoider's graph is tested after each
// of his moves and the game halts at the first loss; the families are
// monotone, so nothing after that move can change the result.
inline GameRecord play_game(int n, const GameFamily& family, Strategy& avoider,
                            Strategy& enforcer, uint64_t seed,
                            const EngineOptions& opts = {}) {
    Board board(n);
    SimpleGraph avoider_graph(n);
    GameRecord rec;
    rec.transcript.family = family;
    rec.transcript.n = n;
    rec.transcript.seed = seed;
    rec.transcript.avoider = std::string(avoider.id());
    rec.transcript.enforcer = std::string(enforcer.id());

    auto pull_diagnostics = [&](Strategy& s) {
        for (auto& d : s.drain_diagnostics()) rec.diagnostics.push_back(std::move(d));
    };

    while (!board.exhausted()) {
        Player side = board.to_move();
        Strategy& actor = side == Player::Avoider ? avoider : enforcer;
        int move_index = static_cast<int>(board.history().size()) + 1;
        Edge e{0, 1};
        try {
            e = actor.next_move(board);
        } catch (const Error&) {
            pull_diagnostics(actor);
            throw;
        }
        pull_diagnostics(actor);
        if (e.v >= n || !board.unclaimed(e))
            throw StrategyFault(std::string(actor.id()), move_index,
                                "strategy " + std::string(actor.id()) +
                                    " returned illegal move " + to_string(e) + " at move " +
                                    std::to_string(move_index));
        board.claim(side, e);
        rec.transcript.moves.push_back({side, e});

        if (opts.run_monitors) {
            avoider.self_check(board, move_index, rec.monitors);
            enforcer.self_check(board, move_index, rec.monitors);
        }

        if (side == Player::Avoider) {
            avoider_graph.add_edge(e.u, e.v);
            if (is_losing(avoider_graph, family)) {
                rec.result.lost_at = board.moves_made(Player::Avoider);
                break;
            }
        }
    }
    rec.transcript.result = rec.result;
    return rec;
}

inline GameRecord play_game(int n, const GameFamily& family, const std::string& avoider_id,
                            const std::string& enforcer_id, uint64_t seed,
                            const EngineOptions& opts = {}) {
    auto av = make_strategy(avoider_id, Player::Avoider, n, family, seed);
    auto en = make_strategy(enforcer_id, Player::Enforcer, n, family, seed);
    return play_game(n, family, *av, *en, seed, opts);
}

// Replays a recorded move list on a fresh board, returning the result the
// engine would report. Throws on any illegal move.
inline GameResult replay_result(const Transcript& t) {
    Board board(t.n);
    SimpleGraph avoider_graph(t.n);
    GameResult result;
    for (const auto& mv : t.moves) {
        board.claim(mv.player, mv.edge);
        if (mv.player == Player::Avoider && !result.lost_at) {
            avoider_graph.add_edge(mv.edge.u, mv.edge.v);
            if (is_losing(avoider_graph, t.family))
                result.lost_at = board.moves_made(Player::Avoider);
        }
    }
    return result;
}

}  // namespace aeg
