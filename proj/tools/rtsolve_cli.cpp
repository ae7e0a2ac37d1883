#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rtsolve/games.hpp"
#include "rtsolve/harness.hpp"

namespace fs = std::filesystem;

namespace {

// Output paths are resolved against RTSOLVE_OUT_ROOT when it is set and the
// given path is relative.
std::string resolve_out(const std::string& path) {
    if (path.empty() || fs::path(path).is_absolute()) return path;
    const char* root = std::getenv("RTSOLVE_OUT_ROOT");
    if (!root || !*root) return path;
    fs::create_directories(root);
    return (fs::path(root) / path).string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rtsolve: regret-minimization solvers for two-player zero-sum games"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "run one algorithm on one game");
    std::string game, algo, out, eval, averaging = "quadratic";
    std::optional<double> mu, alpha, beta, eta, mu_b;
    std::optional<long> T, m;
    long iters = 1000, stride = 10;
    unsigned long long seed = 0;
    bool k_per_iteration = false;
    solve->add_option("--game", game, "game id, e.g. kuhn:3, matrix:10x10:0")->required();
    solve->add_option("--algo", algo, "algorithm id, e.g. cfr+, adp-rt-cfr+")->required();
    solve->add_option("--mu", mu, "transformation weight");
    solve->add_option("--T", T, "reference-refresh period");
    solve->add_option("--m", m, "controller evaluation cadence");
    solve->add_option("--alpha", alpha, "discount exponent for positive regrets");
    solve->add_option("--beta", beta, "discount exponent for negative regrets");
    solve->add_option("--eta", eta, "multiplicative-weights stepsize");
    solve->add_option("--mu-b", mu_b, "entropy regularization weight");
    solve->add_option("--iters", iters, "iteration budget");
    solve->add_option("--stride", stride, "trace checkpoint stride");
    solve->add_option("--seed", seed, "rng seed");
    solve->add_option("--averaging", averaging, "uniform|linear|quadratic");
    solve->add_option("--eval", eval, "last|avg (default depends on algorithm)");
    solve->add_flag("--k-per-iteration", k_per_iteration,
                    "count the controller clock per iteration instead of per player update");
    solve->add_option("--out", out, "trace csv path")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "cartesian hyperparameter sweep");
    std::string sweep_config, out_dir;
    sweep_cmd->add_option("--config", sweep_config, "key=value config; grid axes comma-separated")
        ->required();
    sweep_cmd->add_option("--out-dir", out_dir, "directory for per-point csv traces")->required();

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "print game size statistics");
    std::string stats_game;
    stats_cmd->add_option("--game", stats_game, "game id")->required();

    // plot
    auto* plot_cmd = app.add_subcommand("plot", "render csv traces to an svg plot");
    std::vector<std::string> plot_in;
    std::string plot_out;
    plot_cmd->add_option("--in", plot_in, "input csv files")->required()->expected(-1);
    plot_cmd->add_option("--out", plot_out, "output svg path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            rtsolve::ExperimentConfig cfg;
            cfg.game = game;
            cfg.algo = algo;
            cfg.mu = mu;
            cfg.T = T;
            cfg.m = m;
            cfg.alpha = alpha;
            cfg.beta = beta;
            cfg.eta = eta;
            cfg.mu_b = mu_b;
            cfg.iters = iters;
            cfg.stride = stride;
            cfg.seed = seed;
            cfg.averaging = averaging;
            cfg.eval = eval;
            cfg.k_per_iteration = k_per_iteration;
            cfg.out = resolve_out(out);
            rtsolve::RunRecord rec = rtsolve::run(cfg);
            const rtsolve::TraceRow& last = rec.rows.back();
            std::cout << "final iter=" << last.iter
                      << " exploitability=" << rtsolve::format_double(last.exploitability)
                      << " -> " << cfg.out << "\n";
        } else if (*sweep_cmd) {
            std::ifstream in(sweep_config);
            if (!in) throw std::runtime_error("cannot open config file: " + sweep_config);
            std::vector<std::string> lines;
            std::string line;
            while (std::getline(in, line)) lines.push_back(line);
            std::string dir = resolve_out(out_dir);
            fs::create_directories(dir);
            auto records = rtsolve::sweep(lines, dir);
            std::cout << records.size() << " runs completed\n";
        } else if (*stats_cmd) {
            rtsolve::GameStats s =
                rtsolve::game_stats(rtsolve::build_game(rtsolve::GameSpec::parse(stats_game)));
            std::cout << "game=" << stats_game << " infosets=" << s.infosets
                      << " sequences=" << s.sequences << " leaves=" << s.leaves << "\n";
        } else if (*plot_cmd) {
            std::vector<rtsolve::PlotSeries> series;
            for (const std::string& p : plot_in) {
                rtsolve::PlotSeries s;
                s.label = fs::path(p).stem().string();
                s.rows = rtsolve::parse_csv(p);
                series.push_back(std::move(s));
            }
            std::string dest = resolve_out(plot_out);
            rtsolve::emit_plot(series, dest);
            std::cout << "wrote " << dest << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
