#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aeg/engine.hpp"

namespace aeg {

inline nlohmann::json to_json(const Transcript& t) {
    nlohmann::json j;
    j["version"] = t.version;
    j["family"] = family_name(t.family);
    if (t.family.kind == FamilyKind::KDegenerate) j["k"] = t.family.k;
    j["n"] = t.n;
    j["seed"] = t.seed;
    j["avoider"] = t.avoider;
    j["enforcer"] = t.enforcer;
    auto moves = nlohmann::json::array();
    for (const auto& mv : t.moves) {
        nlohmann::json m;
        m["p"] = std::string(1, player_tag(mv.player));
        m["e"] = {mv.edge.u, mv.edge.v};
        moves.push_back(std::move(m));
    }
    j["moves"] = std::move(moves);
    if (t.result.lost_at)
        j["result"] = {{"lost_at", *t.result.lost_at}};
    else
        j["result"] = {{"survived", true}};
    return j;
}

inline Transcript transcript_from_json(const nlohmann::json& j) {
    Transcript t;
    t.version = j.at("version").get<int>();
    if (t.version != 1) throw InvalidParameter("unsupported transcript version");
    std::string fam = j.at("family").get<std::string>();
    t.family = parse_family(fam, j.contains("k") ? j.at("k").get<int>() : 0);
    t.n = j.at("n").get<int>();
    t.seed = j.at("seed").get<uint64_t>();
    t.avoider = j.at("avoider").get<std::string>();
    t.enforcer = j.at("enforcer").get<std::string>();
    for (const auto& m : j.at("moves")) {
        std::string p = m.at("p").get<std::string>();
        if (p != "A" && p != "E") throw InvalidParameter("bad player tag in transcript");
        auto e = m.at("e");
        t.moves.push_back({p == "A" ? Player::Avoider : Player::Enforcer,
                           Edge(e.at(0).get<int>(), e.at(1).get<int>())});
    }
    const auto& r = j.at("result");
    if (r.contains("lost_at"))
        t.result.lost_at = r.at("lost_at").get<int>();
    else if (!r.value("survived", false))
        throw InvalidParameter("bad result in transcript");
    return t;
}

inline std::string serialize_transcript(const Transcript& t) { return to_json(t).dump(2) + "\n"; }

inline void write_transcript(const Transcript& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidParameter("cannot write transcript file: " + path);
    out << serialize_transcript(t);
}

inline Transcript read_transcript(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot read transcript file: " + path);
    nlohmann::json j;
    in >> j;
    return transcript_from_json(j);
}

struct CheckFailure {
    std::string invariant;
    int move_index = 0;  // 0 when not tied to a move
    std::string detail;
};

struct CheckReport {
    std::vector<CheckFailure> failures;
    bool passed() const { return failures.empty(); }
};

// Structural validation from the move list alone: alternation starting with
// the Avoider, no duplicate edges, edges in range, and the recorded result
// matching a replay (first Avoider loss index, or survival with the board
// exhausted).
inline void check_structure(const Transcript& t, CheckReport& report) {
    if (t.n < 2) {
        report.failures.push_back({"header", 0, "n must be at least 2"});
        return;
    }
    Board board(t.n);
    SimpleGraph avoider_graph(t.n);
    std::optional<int> first_loss;
    int index = 0;
    for (const auto& mv : t.moves) {
        ++index;
        Player expected = board.to_move();
        if (mv.player != expected) {
            report.failures.push_back(
                {"alternation", index, "expected " + std::string(1, player_tag(expected))});
            return;
        }
        if (mv.edge.v >= t.n) {
            report.failures.push_back({"edge-range", index, to_string(mv.edge)});
            return;
        }
        if (!board.unclaimed(mv.edge)) {
            report.failures.push_back({"duplicate-edge", index, to_string(mv.edge)});
            return;
        }
        board.claim(mv.player, mv.edge);
        if (mv.player == Player::Avoider && !first_loss) {
            avoider_graph.add_edge(mv.edge.u, mv.edge.v);
            if (is_losing(avoider_graph, t.family))
                first_loss = board.moves_made(Player::Avoider);
        }
    }
    if (t.result.lost_at) {
        if (!first_loss || *first_loss != *t.result.lost_at)
            report.failures.push_back({"loss-index", index,
                                       "recorded " + std::to_string(*t.result.lost_at) +
                                           ", replay says " +
                                           (first_loss ? std::to_string(*first_loss) : "none")});
        else if (board.moves_made(Player::Avoider) != *t.result.lost_at)
            report.failures.push_back(
                {"loss-index", index, "transcript continues past the recorded loss"});
    } else {
        if (first_loss)
            report.failures.push_back(
                {"loss-index", index, "replay finds a loss at " + std::to_string(*first_loss)});
        else if (!board.exhausted())
            report.failures.push_back(
                {"survival", index, "board not exhausted in a survived transcript"});
    }
}

// Full check: structure, then a deterministic re-simulation with the recorded
// strategies and seed. The regenerated game must match move for move, and
// every strategy invariant monitored during the re-run must hold.
inline CheckReport check_transcript(const Transcript& t) {
    CheckReport report;
    check_structure(t, report);
    if (!report.passed()) return report;

    GameRecord rerun;
    try {
        rerun = play_game(t.n, t.family, t.avoider, t.enforcer, t.seed);
    } catch (const Error& e) {
        report.failures.push_back({"strategy-replay", 0, e.what()});
        return report;
    }
    if (rerun.transcript.moves.size() != t.moves.size()) {
        report.failures.push_back(
            {"strategy-replay", static_cast<int>(t.moves.size()),
             "re-simulation produced a different move count"});
        return report;
    }
    for (size_t i = 0; i < t.moves.size(); ++i) {
        if (rerun.transcript.moves[i].player != t.moves[i].player ||
            !(rerun.transcript.moves[i].edge == t.moves[i].edge)) {
            report.failures.push_back({"strategy-replay", static_cast<int>(i) + 1,
                                       "re-simulation diverges at this move"});
            return report;
        }
    }
    if (!(rerun.result == t.result)) {
        report.failures.push_back({"strategy-replay", 0, "re-simulation result differs"});
        return report;
    }
    for (const auto& ev : rerun.monitors)
        if (!ev.ok)
            report.failures.push_back({ev.check, ev.move_index, ev.detail});
    return report;
}

}  // namespace aeg
