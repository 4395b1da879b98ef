#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "aeg/engine.hpp"
#include "aeg/solver.hpp"
#include "aeg/transcript.hpp"

namespace aeg {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    GameFamily family;
    int n_min = 0, n_max = 0, n_step = 1;
    std::string avoider = "random";
    std::string enforcer = "random";
    int trials = 1;
    uint64_t base_seed = 0;
    std::string out_path;     // empty: stdout
    std::string format = "csv";
};

struct SweepRow {
    int n = 0;
    GameFamily family;
    std::string avoider, enforcer;
    uint64_t seed = 0;
    std::optional<int> loss_move;  // empty: survived
    long long bound_lower = 0, bound_upper = 0, theorem_lower_bound = 0;
    bool within_bounds = true;
    int diagnostics = 0;
};

inline SweepRow row_from_record(const GameRecord& rec) {
    SweepRow row;
    row.n = rec.transcript.n;
    row.family = rec.transcript.family;
    row.avoider = rec.transcript.avoider;
    row.enforcer = rec.transcript.enforcer;
    row.seed = rec.transcript.seed;
    row.loss_move = rec.result.lost_at;
    TauBounds b = tau_bounds(row.family, row.n);
    row.bound_lower = b.lower;
    row.bound_upper = b.upper;
    row.theorem_lower_bound = theorem_lower(row.family, row.n);
    row.within_bounds = !row.loss_move || *row.loss_move <= row.bound_upper;
    row.diagnostics = static_cast<int>(rec.diagnostics.size());
    return row;
}

inline const char* kSweepHeader =
    "n,family,k,avoider,enforcer,seed,loss_move,bound_lower,bound_upper,theorem_lower,"
    "within_bounds,diagnostics";

inline std::string row_csv(const SweepRow& r) {
    std::ostringstream s;
    s << r.n << ',' << family_name(r.family) << ',';
    if (r.family.kind == FamilyKind::KDegenerate) s << r.family.k;
    s << ',' << r.avoider << ',' << r.enforcer << ',' << r.seed << ',';
    if (r.loss_move) s << *r.loss_move;
    s << ',' << r.bound_lower << ',' << r.bound_upper << ',' << r.theorem_lower_bound << ','
      << (r.within_bounds ? 1 : 0) << ',' << r.diagnostics;
    return s.str();
}

inline nlohmann::json row_json(const SweepRow& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["family"] = family_name(r.family);
    if (r.family.kind == FamilyKind::KDegenerate) j["k"] = r.family.k;
    j["avoider"] = r.avoider;
    j["enforcer"] = r.enforcer;
    j["seed"] = r.seed;
    if (r.loss_move) j["loss_move"] = *r.loss_move;
    j["bound_lower"] = r.bound_lower;
    j["bound_upper"] = r.bound_upper;
    j["theorem_lower"] = r.theorem_lower_bound;
    j["within_bounds"] = r.within_bounds;
    j["diagnostics"] = r.diagnostics;
    return j;
}

// One game: writes the transcript when a path is given and prints a one-line
// summary "family n seed loss_move|survived".
inline int run_play(const RunConfig& cfg, const std::string& transcript_path, std::ostream& out,
                    std::ostream& err) {
    try {
        GameRecord rec =
            play_game(cfg.n_min, cfg.family, cfg.avoider, cfg.enforcer, cfg.base_seed);
        if (!transcript_path.empty()) write_transcript(rec.transcript, transcript_path);
        out << family_name(cfg.family) << ' ' << cfg.n_min << ' ' << cfg.base_seed << ' ';
        if (rec.result.lost_at)
            out << *rec.result.lost_at;
        else
            out << "survived";
        out << '\n';
        return kExitOk;
    } catch (const StrategyFault& f) {
        err << "strategy fault: " << f.what() << '\n';
        return kExitRuntime;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

// Parameter sweep: one row per (n, trial), seeds = base_seed + trial index,
// emitted in deterministic (n, trial) order.
inline std::vector<SweepRow> sweep_rows(const RunConfig& cfg) {
    std::vector<SweepRow> rows;
    for (int n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            uint64_t seed = cfg.base_seed + static_cast<uint64_t>(trial);
            try {
                GameRecord rec = play_game(n, cfg.family, cfg.avoider, cfg.enforcer, seed);
                rows.push_back(row_from_record(rec));
            } catch (const StrategyFault&) {
                SweepRow row;
                row.n = n;
                row.family = cfg.family;
                row.avoider = cfg.avoider;
                row.enforcer = cfg.enforcer;
                row.seed = seed;
                TauBounds b = tau_bounds(cfg.family, n);
                row.bound_lower = b.lower;
                row.bound_upper = b.upper;
                row.theorem_lower_bound = theorem_lower(cfg.family, n);
                row.diagnostics = 1;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

inline std::string sweep_output(const std::vector<SweepRow>& rows, const std::string& format) {
    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(row_json(r));
        return arr.dump(2) + "\n";
    }
    std::ostringstream s;
    s << kSweepHeader << '\n';
    for (const auto& r : rows) s << row_csv(r) << '\n';
    return s.str();
}

inline int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::string text = sweep_output(sweep_rows(cfg), cfg.format);
        if (cfg.out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(cfg.out_path, std::ios::binary);
            if (!f) throw InvalidParameter("cannot write: " + cfg.out_path);
            f << text;
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

// Exact solve plus the relation-(1) bounds report; optional CSV row with the
// strategy columns set to "optimal".
inline int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Relation1Report rep = verify_relation1(cfg.family, cfg.n_min);
        out << "tau(" << family_name(cfg.family)
            << (cfg.family.kind == FamilyKind::KDegenerate
                    ? " k=" + std::to_string(cfg.family.k)
                    : "")
            << ", n=" << cfg.n_min << ") = ";
        if (rep.tau.infinite())
            out << "infinite";
        else
            out << *rep.tau.finite;
        out << '\n';
        out << "relation1 bounds [" << rep.bounds.lower << ", " << rep.bounds.upper << "] "
            << (rep.pass ? (rep.vacuous ? "pass (vacuous)" : "pass") : "FAIL") << '\n';
        if (!cfg.out_path.empty()) {
            SweepRow row;
            row.n = cfg.n_min;
            row.family = cfg.family;
            row.avoider = "optimal";
            row.enforcer = "optimal";
            row.seed = 0;
            if (!rep.tau.infinite()) row.loss_move = *rep.tau.finite;
            row.bound_lower = rep.bounds.lower;
            row.bound_upper = rep.bounds.upper;
            row.theorem_lower_bound = theorem_lower(cfg.family, cfg.n_min);
            row.within_bounds = rep.pass;
            std::ofstream f(cfg.out_path, std::ios::binary);
            if (!f) throw InvalidParameter("cannot write: " + cfg.out_path);
            f << kSweepHeader << '\n' << row_csv(row) << '\n';
        }
        return rep.pass ? kExitOk : kExitRuntime;
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

// Transcript validation; named failures, exit 1 on invariant failure and 2 on
// a malformed file.
inline int run_check(const std::string& path, std::ostream& out, std::ostream& err) {
    Transcript t;
    try {
        t = read_transcript(path);
    } catch (const std::exception& e) {
        err << "malformed transcript: " << e.what() << '\n';
        return kExitUsage;
    }
    CheckReport rep = check_transcript(t);
    if (rep.passed()) {
        out << "ok: " << path << '\n';
        return kExitOk;
    }
    for (const auto& f : rep.failures) {
        out << "fail " << f.invariant;
        if (f.move_index > 0) out << " at move " << f.move_index;
        if (!f.detail.empty()) out << ": " << f.detail;
        out << '\n';
    }
    return kExitRuntime;
}

// Property report for a graph in the edge-list exchange format.
inline int run_check_graph(const std::string& path, const GameFamily& family, std::ostream& out,
                           std::ostream& err) {
    try {
        std::ifstream in(path);
        if (!in) throw InvalidParameter("cannot read graph file: " + path);
        SimpleGraph g = SimpleGraph::read_edge_list(in);
        out << "n " << g.vertex_count() << " m " << g.edge_count() << '\n';
        out << "outerplanar " << (is_outerplanar(g) ? 1 : 0) << '\n';
        out << "diamond_minor_free " << (is_diamond_minor_free(g) ? 1 : 0) << '\n';
        out << "degeneracy " << degeneracy(g).k << '\n';
        out << "losing " << (is_losing(g, family) ? 1 : 0) << '\n';
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace aeg
