// Command-line front end: single games, parameter sweeps, the exact solver,
// and transcript validation.

#include <CLI11.hpp>

#include "aeg/harness.hpp"

namespace {

struct FamilyFlags {
    std::string family = "outerplanar";
    int k = 0;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
    cmd->add_option("--family", f.family, "outerplanar|diamond|kdegenerate")
        ->check(CLI::IsMember({"outerplanar", "diamond", "kdegenerate"}));
    cmd->add_option("--k", f.k, "degeneracy bound (kdegenerate only)");
}

aeg::GameFamily parse(const FamilyFlags& f) { return aeg::parse_family(f.family, f.k); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Avoider-Enforcer games on the edges of K_n"};
    app.require_subcommand(1);

    // play
    auto* play = app.add_subcommand("play", "run one game and write its transcript");
    FamilyFlags play_family;
    add_family_flags(play, play_family);
    int play_n = 0;
    std::string play_avoider = "random", play_enforcer = "random", play_transcript;
    uint64_t play_seed = 0;
    play->add_option("--n", play_n, "vertex count")->required();
    play->add_option("--avoider", play_avoider, "avoider strategy id");
    play->add_option("--enforcer", play_enforcer, "enforcer strategy id");
    play->add_option("--seed", play_seed, "game seed");
    play->add_option("--transcript", play_transcript, "transcript output path");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and emit rows");
    FamilyFlags sweep_family;
    add_family_flags(sweep, sweep_family);
    int sweep_n = 0, sweep_nmin = 0, sweep_nmax = 0, sweep_nstep = 1, sweep_trials = 1;
    std::string sweep_avoider = "random", sweep_enforcer = "random", sweep_out, sweep_format = "csv";
    uint64_t sweep_seed = 0;
    sweep->add_option("--n", sweep_n, "single n (same as --n-min = --n-max)");
    sweep->add_option("--n-min", sweep_nmin, "range start");
    sweep->add_option("--n-max", sweep_nmax, "range end (inclusive)");
    sweep->add_option("--n-step", sweep_nstep, "range step");
    sweep->add_option("--avoider", sweep_avoider, "avoider strategy id");
    sweep->add_option("--enforcer", sweep_enforcer, "enforcer strategy id");
    sweep->add_option("--trials", sweep_trials, "trials per n");
    sweep->add_option("--seed", sweep_seed, "base seed; trial i uses seed+i");
    sweep->add_option("--out", sweep_out, "output file (default stdout)");
    sweep->add_option("--format", sweep_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // solve
    auto* solve = app.add_subcommand("solve", "exact optimal-play value for small n");
    FamilyFlags solve_family;
    add_family_flags(solve, solve_family);
    int solve_n = 0;
    std::string solve_out;
    solve->add_option("--n", solve_n, "vertex count")->required();
    solve->add_option("--out", solve_out, "CSV output path");

    // check
    auto* check = app.add_subcommand("check", "validate a transcript (or a graph file)");
    FamilyFlags check_family;
    add_family_flags(check, check_family);
    std::string check_path, check_graph;
    check->add_option("path", check_path, "transcript file");
    check->add_option("--graph", check_graph, "edge-list graph file to report on instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : aeg::kExitUsage;
    }

    try {
        if (play->parsed()) {
            aeg::RunConfig cfg;
            cfg.family = parse(play_family);
            cfg.n_min = cfg.n_max = play_n;
            cfg.avoider = play_avoider;
            cfg.enforcer = play_enforcer;
            cfg.base_seed = play_seed;
            return aeg::run_play(cfg, play_transcript, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            aeg::RunConfig cfg;
            cfg.family = parse(sweep_family);
            if (sweep_n > 0) {
                cfg.n_min = cfg.n_max = sweep_n;
            } else {
                cfg.n_min = sweep_nmin;
                cfg.n_max = sweep_nmax;
            }
            cfg.n_step = sweep_nstep;
            if (cfg.n_min < 2 || cfg.n_max < cfg.n_min || cfg.n_step < 1) {
                std::cerr << "error: empty or invalid n range\n";
                return aeg::kExitUsage;
            }
            if (sweep_trials < 1) {
                std::cerr << "error: --trials must be at least 1\n";
                return aeg::kExitUsage;
            }
            cfg.avoider = sweep_avoider;
            cfg.enforcer = sweep_enforcer;
            cfg.trials = sweep_trials;
            cfg.base_seed = sweep_seed;
            cfg.out_path = sweep_out;
            cfg.format = sweep_format;
            return aeg::run_sweep(cfg, std::cout, std::cerr);
        }
        if (solve->parsed()) {
            aeg::RunConfig cfg;
            cfg.family = parse(solve_family);
            cfg.n_min = solve_n;
            cfg.out_path = solve_out;
            return aeg::run_solve(cfg, std::cout, std::cerr);
        }
        if (check->parsed()) {
            if (!check_graph.empty())
                return aeg::run_check_graph(check_graph, parse(check_family), std::cout,
                                            std::cerr);
            if (check_path.empty()) {
                std::cerr << "error: check needs a transcript path or --graph\n";
                return aeg::kExitUsage;
            }
            return aeg::run_check(check_path, std::cout, std::cerr);
        }
    } catch (const aeg::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return aeg::kExitUsage;
    } catch (const aeg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return aeg::kExitRuntime;
    }
    return aeg::kExitUsage;
}
