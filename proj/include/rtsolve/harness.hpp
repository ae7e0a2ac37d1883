#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtsolve/engine.hpp"
#include "rtsolve/games.hpp"

namespace rtsolve {

// Flat key=value run configuration. Unset tunables are filled from the
// built-in per-game defaults before the run starts.
struct ExperimentConfig {
    std::string game;
    std::string algo;
    std::optional<double> mu;
    std::optional<long> T;
    std::optional<long> m;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> eta;
    std::optional<double> mu_b;
    long iters = 1000;
    long stride = 10;
    uint64_t seed = 0;
    std::string averaging = "quadratic";
    std::string eval;  // "last" | "avg"; empty = per-algorithm default
    bool k_per_iteration = false;
    std::string out;

    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_lines(const std::vector<std::string>& lines);
    std::string to_text() const;
};

struct TraceRow {
    long iter = 0;
    double exploitability = 0.0;
    long sccp_n = 0;
    std::string phase;
    double w = 1.0;
    double wall_ms = 0.0;
};

struct RunRecord {
    ExperimentConfig config;  // snapshot with defaults resolved
    std::vector<TraceRow> rows;
    SequenceStrategy final_q1, final_q2;
};

bool is_known_algorithm(const std::string& algo);

// Resolves unset tunables (Tables of per-game defaults, then fallbacks) and
// the eval mode. Idempotent.
void resolve_defaults(ExperimentConfig& cfg);

// Executes one configured run. When cfg.out is set the trace is written
// incrementally so partial runs remain parseable.
RunRecord run(const ExperimentConfig& cfg);

// Cartesian sweep: config lines where mu/T/eta/mu_b/alpha/beta/algo may hold
// comma-separated value lists. One CSV per point is written under out_dir and
// the best point per game (final exploitability) is reported on stdout.
// Individual run failures are reported and skipped.
std::vector<RunRecord> sweep(const std::vector<std::string>& config_lines,
                             const std::string& out_dir);

void emit_csv(const RunRecord& record, const std::string& path);
std::vector<TraceRow> parse_csv(const std::string& path);

struct PlotSeries {
    std::string label;
    std::vector<TraceRow> rows;
};
// Self-contained SVG, log-scale exploitability vs iteration.
void emit_plot(const std::vector<PlotSeries>& series, const std::string& path);

std::string format_double(double v);

}  // namespace rtsolve
