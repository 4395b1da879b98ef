#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aeg/board.hpp"
#include "aeg/family.hpp"

namespace aeg {

// A strategy falling off its script (a precondition of the scripted move
// failed and a safe fallback was played instead).
struct Diagnostic {
    int move_index;  // 1-based index into the game's move list, at emission time
    Player role;
    std::string message;
};

// Per-move invariant sample recorded by a strategy's self check.
struct MonitorEvent {
    int move_index;
    std::string check;
    bool ok = true;
    double value = 0.0;
    double bound = 0.0;
    std::string detail;
};

// Stateful deterministic move generator for one player. next_move must return
// an unclaimed edge; internal state may only depend on the board, the seed
// stream and the strategy's own history.
class Strategy {
public:
    virtual ~Strategy() = default;

    virtual std::string_view id() const = 0;
    virtual Player role() const = 0;
    virtual Edge next_move(const Board& board) = 0;

    // Validate the strategy's scripted invariants against the current board.
    // Called by the engine after every move; violations become monitor events.
    virtual void self_check(const Board&, int /*move_index*/, std::vector<MonitorEvent>&) const {}

    std::vector<Diagnostic> drain_diagnostics() { return std::exchange(diagnostics_, {}); }

protected:
    void diagnose(const Board& board, std::string message) {
        diagnostics_.push_back(
            {static_cast<int>(board.history().size()) + 1, role(), std::move(message)});
    }

private:
    std::vector<Diagnostic> diagnostics_;
};

// Lowest-index unclaimed edge, if any.
inline std::optional<Edge> lowest_unclaimed(const Board& board) {
    for (long long i = 0; i < board.edge_slots(); ++i) {
        Edge e = board.edge_at(i);
        if (board.unclaimed(e)) return e;
    }
    return std::nullopt;
}

}  // namespace aeg
