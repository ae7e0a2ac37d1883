#include "rtsolve/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rtsolve/baselines.hpp"
#include "rtsolve/controller.hpp"
#include "rtsolve/metrics.hpp"

namespace rtsolve {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RtMode { None, Fixed, Adaptive };

struct AlgoInfo {
    bool engine_family = true;
    MinimizerKind kind;
    RtMode rt = RtMode::None;
    std::string default_eval = "last";
    std::string baseline;  // mwu | omwu | reg-omwu | rnad for the MWU family
};

const std::map<std::string, AlgoInfo>& algo_table() {
    static const std::map<std::string, AlgoInfo> table = [] {
        std::map<std::string, AlgoInfo> t;
        auto eng = [](MinimizerKind k, RtMode rt, std::string ev) {
            AlgoInfo a;
            a.kind = k;
            a.rt = rt;
            a.default_eval = std::move(ev);
            return a;
        };
        MinimizerKind rm = MinimizerKind::rm();
        MinimizerKind rmp = MinimizerKind::rm_plus();
        MinimizerKind drm = MinimizerKind::drm(2.0, 0.0);  // (alpha,beta) overridable
        MinimizerKind prm = MinimizerKind::prm_plus();
        for (auto [nfg, efg, kind] : {std::tuple{"rm", "cfr", rm}, {"rm+", "cfr+", rmp},
                                      {"drm", "dcfr", drm}, {"prm+", "pcfr+", prm}}) {
            t[nfg] = t[efg] = eng(kind, RtMode::None, "avg");
        }
        for (auto [nfg, efg, kind] : {std::tuple{"rt-rm+", "rt-cfr+", rmp},
                                      {"rt-drm", "rt-dcfr", drm}}) {
            t[nfg] = t[efg] = eng(kind, RtMode::Fixed, "last");
            t["adp-" + std::string(nfg)] = t["adp-" + std::string(efg)] =
                eng(kind, RtMode::Adaptive, "last");
        }
        auto mwu = [](std::string name, std::string ev) {
            AlgoInfo a;
            a.engine_family = false;
            a.baseline = std::move(name);
            a.default_eval = std::move(ev);
            return a;
        };
        t["mwu"] = mwu("mwu", "avg");
        t["omwu"] = t["domwu"] = mwu("omwu", "last");
        t["reg-omwu"] = t["reg-domwu"] = mwu("reg-omwu", "last");
        t["rnad"] = mwu("rnad", "last");
        return t;
    }();
    return table;
}

// Final hyperparameters from the experiment tables, keyed by (algo, game).
struct Defaults {
    std::optional<double> mu, eta, mu_b;
    std::optional<long> T;
};

std::optional<Defaults> table_defaults(const std::string& algo, const std::string& game) {
    auto D = [](double mu, long T) { return Defaults{mu, {}, {}, T}; };
    auto E = [](double eta) { return Defaults{{}, eta, {}, {}}; };
    auto R = [](double eta, double mu_b) { return Defaults{{}, eta, mu_b, {}}; };
    auto N = [](double eta, long T, double mu_b) { return Defaults{{}, eta, mu_b, T}; };
    static const std::map<std::pair<std::string, std::string>, Defaults> table = {
        // 10x10 matrix games, seeds 0-3
        {{"rt-rm+", "matrix:10x10:0"}, D(0.5, 10)},   {{"rt-rm+", "matrix:10x10:1"}, D(0.1, 30)},
        {{"rt-rm+", "matrix:10x10:2"}, D(0.1, 20)},   {{"rt-rm+", "matrix:10x10:3"}, D(0.1, 20)},
        {{"rt-drm", "matrix:10x10:0"}, D(0.5, 5)},    {{"rt-drm", "matrix:10x10:1"}, D(0.1, 20)},
        {{"rt-drm", "matrix:10x10:2"}, D(0.1, 20)},   {{"rt-drm", "matrix:10x10:3"}, D(0.1, 20)},
        {{"adp-rt-rm+", "matrix:10x10:0"}, D(0.1, 20)},
        {{"adp-rt-rm+", "matrix:10x10:1"}, D(0.05, 40)},
        {{"adp-rt-rm+", "matrix:10x10:2"}, D(0.05, 20)},
        {{"adp-rt-rm+", "matrix:10x10:3"}, D(0.05, 30)},
        {{"adp-rt-drm", "matrix:10x10:0"}, D(0.1, 20)},
        {{"adp-rt-drm", "matrix:10x10:1"}, D(0.05, 20)},
        {{"adp-rt-drm", "matrix:10x10:2"}, D(0.05, 20)},
        {{"adp-rt-drm", "matrix:10x10:3"}, D(0.05, 20)},
        {{"omwu", "matrix:10x10:0"}, E(0.379)},       {{"omwu", "matrix:10x10:1"}, E(0.379)},
        {{"omwu", "matrix:10x10:2"}, E(0.263)},       {{"omwu", "matrix:10x10:3"}, E(0.379)},
        {{"reg-omwu", "matrix:10x10:0"}, R(0.379, 0.1)},
        {{"reg-omwu", "matrix:10x10:1"}, R(0.379, 0.1)},
        {{"reg-omwu", "matrix:10x10:2"}, R(0.263, 0.1)},
        {{"reg-omwu", "matrix:10x10:3"}, R(0.379, 0.05)},
        {{"rnad", "matrix:10x10:0"}, N(1.128, 30, 0.1)},
        {{"rnad", "matrix:10x10:1"}, N(1.128, 30, 0.1)},
        {{"rnad", "matrix:10x10:2"}, N(0.784, 30, 0.05)},
        {{"rnad", "matrix:10x10:3"}, N(0.784, 20, 0.1)},
        // extensive-form benchmarks
        {{"rt-cfr+", "kuhn:3"}, D(0.1, 5)},           {{"rt-cfr+", "leduc:3"}, D(0.001, 125)},
        {{"rt-cfr+", "goofspiel:4"}, D(0.005, 30)},   {{"rt-cfr+", "liarsdice:6"}, D(0.1, 1)},
        {{"rt-dcfr", "kuhn:3"}, D(0.05, 5)},          {{"rt-dcfr", "leduc:3"}, D(0.001, 125)},
        {{"rt-dcfr", "goofspiel:4"}, D(0.005, 20)},   {{"rt-dcfr", "liarsdice:6"}, D(0.1, 1)},
        {{"adp-rt-cfr+", "kuhn:3"}, D(0.05, 5)},      {{"adp-rt-cfr+", "leduc:3"}, D(0.01, 200)},
        {{"adp-rt-cfr+", "goofspiel:4"}, D(0.1, 15)}, {{"adp-rt-cfr+", "liarsdice:6"}, D(0.01, 1)},
        {{"adp-rt-dcfr", "kuhn:3"}, D(0.05, 5)},      {{"adp-rt-dcfr", "leduc:3"}, D(0.01, 150)},
        {{"adp-rt-dcfr", "goofspiel:4"}, D(0.1, 10)}, {{"adp-rt-dcfr", "liarsdice:6"}, D(0.01, 1)},
        {{"domwu", "kuhn:3"}, E(0.127)},              {{"domwu", "leduc:3"}, E(0.127)},
        {{"domwu", "goofspiel:4"}, E(0.014)},         {{"domwu", "liarsdice:6"}, E(0.127)},
        {{"reg-domwu", "kuhn:3"}, R(0.127, 1e-7)},    {{"reg-domwu", "leduc:3"}, R(0.112, 0.001)},
        {{"reg-domwu", "goofspiel:4"}, R(0.127, 1e-4)},
        {{"reg-domwu", "liarsdice:6"}, R(0.078, 0.01)},
        {{"rnad", "kuhn:3"}, N(0.236, 10, 0.05)},     {{"rnad", "leduc:3"}, N(0.263, 20, 0.1)},
        {{"rnad", "goofspiel:4"}, N(0.029, 10, 0.01)},
        {{"rnad", "liarsdice:6"}, N(0.263, 10, 0.05)},
    };
    auto it = table.find({algo, game});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

Averaging parse_averaging(const std::string& s) {
    if (s == "uniform") return Averaging::Uniform;
    if (s == "linear") return Averaging::Linear;
    if (s == "quadratic") return Averaging::Quadratic;
    throw std::invalid_argument("unknown averaging scheme: " + s);
}

double parse_double(const std::string& s) {
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    return std::stod(s);
}

double now_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void write_row(std::ostream& os, const TraceRow& r) {
    os << r.iter << ',' << format_double(r.exploitability) << ',' << r.sccp_n << ',' << r.phase
       << ',' << format_double(r.w) << ',' << format_double(r.wall_ms) << '\n';
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool is_known_algorithm(const std::string& algo) { return algo_table().count(algo) > 0; }

void resolve_defaults(ExperimentConfig& cfg) {
    auto it = algo_table().find(cfg.algo);
    if (it == algo_table().end()) throw std::invalid_argument("unknown algorithm: " + cfg.algo);
    const AlgoInfo& info = it->second;
    if (auto d = table_defaults(cfg.algo, cfg.game)) {
        if (!cfg.mu && d->mu) cfg.mu = d->mu;
        if (!cfg.T && d->T) cfg.T = d->T;
        if (!cfg.eta && d->eta) cfg.eta = d->eta;
        if (!cfg.mu_b && d->mu_b) cfg.mu_b = d->mu_b;
    }
    if (!cfg.mu) cfg.mu = 0.1;
    if (!cfg.T) cfg.T = 10;
    if (!cfg.m) cfg.m = 1;
    if (!cfg.alpha) cfg.alpha = 2.0;
    if (!cfg.beta) cfg.beta = 0.0;
    if (!cfg.eta) cfg.eta = 0.1;
    if (!cfg.mu_b) cfg.mu_b = 0.1;
    if (cfg.eval.empty()) cfg.eval = info.default_eval;
    if (cfg.eval != "last" && cfg.eval != "avg")
        throw std::invalid_argument("eval must be last or avg");
    if (cfg.stride < 1) throw std::invalid_argument("stride must be >= 1");
    if (*cfg.T < 1) throw std::invalid_argument("T must be >= 1");
    parse_averaging(cfg.averaging);  // validates
}

ExperimentConfig ExperimentConfig::from_lines(const std::vector<std::string>& lines) {
    ExperimentConfig cfg;
    for (const std::string& raw : lines) {
        std::string line = raw.substr(0, raw.find('#'));
        auto ltrim = line.find_first_not_of(" \t\r\n");
        if (ltrim == std::string::npos) continue;
        auto rtrim = line.find_last_not_of(" \t\r\n");
        line = line.substr(ltrim, rtrim - ltrim + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad config line: " + raw);
        std::string key = line.substr(0, eq);
        std::string val = line.substr(eq + 1);
        if (key == "game") cfg.game = val;
        else if (key == "algo") cfg.algo = val;
        else if (key == "mu") cfg.mu = parse_double(val);
        else if (key == "T") cfg.T = std::stol(val);
        else if (key == "m") cfg.m = std::stol(val);
        else if (key == "alpha") cfg.alpha = parse_double(val);
        else if (key == "beta") cfg.beta = parse_double(val);
        else if (key == "eta") cfg.eta = parse_double(val);
        else if (key == "mu_b") cfg.mu_b = parse_double(val);
        else if (key == "iters") cfg.iters = std::stol(val);
        else if (key == "stride") cfg.stride = std::stol(val);
        else if (key == "seed") cfg.seed = std::stoull(val);
        else if (key == "averaging") cfg.averaging = val;
        else if (key == "eval") cfg.eval = val;
        else if (key == "k_per_iteration") cfg.k_per_iteration = (val == "true" || val == "1");
        else if (key == "out") cfg.out = val;
        else if (key.rfind("grid.", 0) == 0) { /* sweep-only keys, ignored here */ }
        else throw std::invalid_argument("unknown config key: " + key);
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return from_lines(lines);
}

std::string ExperimentConfig::to_text() const {
    std::ostringstream os;
    os << "game=" << game << "\nalgo=" << algo << "\n";
    if (mu) os << "mu=" << format_double(*mu) << "\n";
    if (T) os << "T=" << *T << "\n";
    if (m) os << "m=" << *m << "\n";
    if (alpha) os << "alpha=" << format_double(*alpha) << "\n";
    if (beta) os << "beta=" << format_double(*beta) << "\n";
    if (eta) os << "eta=" << format_double(*eta) << "\n";
    if (mu_b) os << "mu_b=" << format_double(*mu_b) << "\n";
    os << "iters=" << iters << "\nstride=" << stride << "\nseed=" << seed
       << "\naveraging=" << averaging;
    if (!eval.empty()) os << "\neval=" << eval;
    if (k_per_iteration) os << "\nk_per_iteration=true";
    os << "\n";
    return os.str();
}

namespace {

RunRecord run_engine_family(const ExperimentConfig& cfg, const AlgoInfo& info,
                            const GameForm& g) {
    auto start = std::chrono::steady_clock::now();
    RunRecord rec;
    rec.config = cfg;
    std::ofstream out;
    if (!cfg.out.empty()) {
        out.open(cfg.out);
        if (!out) throw std::runtime_error("cannot open output file: " + cfg.out);
        out << "iter,exploitability,sccp_n,phase,w,wall_ms\n";
        out.flush();
    }

    MinimizerKind kind = info.kind;
    if (kind.variant == Variant::DRM) {
        kind.alpha = *cfg.alpha;
        kind.beta = *cfg.beta;
    }
    Averaging averaging = parse_averaging(cfg.averaging);
    const long T = *cfg.T;
    const double mu = info.rt == RtMode::None ? 0.0 : *cfg.mu;

    EngineState st = make_engine_state(g);
    RtTermConfig cfg1{mu, 1.0, uniform_strategy(g.tp1)};
    RtTermConfig cfg2{mu, 1.0, uniform_strategy(g.tp2)};

    auto current_eps = [&] { return exploitability(g, st.q1, st.q2).epsilon; };
    auto row_eps = [&]() -> double {
        if (cfg.eval == "avg" && st.iter >= 1)
            return exploitability(g, average_strategy(g, st, 1), average_strategy(g, st, 2))
                .epsilon;
        return current_eps();
    };

    std::optional<SccpController> ctrl;
    if (info.rt == RtMode::Adaptive) {
        ctrl.emplace(cfg1.reference, cfg2.reference, current_eps(), T, *cfg.m);
    }

    auto emit = [&](long t, double eps, const std::string& phase) {
        TraceRow r;
        r.iter = t;
        r.exploitability = eps;
        r.sccp_n = ctrl ? ctrl->sccp_index()
                        : (info.rt == RtMode::Fixed && t >= 1 ? (t - 1) / T + 1 : 0);
        r.phase = phase;
        r.w = ctrl ? ctrl->w() : 1.0;
        r.wall_ms = now_ms(start);
        rec.rows.push_back(r);
        if (out.is_open()) {
            write_row(out, r);
            out.flush();
        }
    };

    emit(0, row_eps(), "");
    for (long t = 1; t <= cfg.iters; ++t) {
        if (info.rt == RtMode::Fixed && (t - 1) % T == 0) {
            cfg1.reference = st.sigma1;
            cfg2.reference = st.sigma2;
        }
        if (ctrl) {
            cfg1.w = cfg2.w = ctrl->w();
        }
        iterate_once(g, st, cfg1, cfg2, kind, averaging);
        std::string phase;
        std::optional<double> eps_now;
        if (ctrl) {
            for (int u = 0; u < (cfg.k_per_iteration ? 1 : 2); ++u) ctrl->count_player_update();
            PhaseEvent ev = ctrl->tick(t, st.sigma1, st.sigma2, [&] {
                double e = current_eps();
                eps_now = e;
                return e;
            });
            if (ev.phase != Phase::None) {
                phase = phase_name(ev.phase);
                cfg1.reference = ctrl->reference(1);
                cfg2.reference = ctrl->reference(2);
            }
        }
        if (t % cfg.stride == 0 || t == cfg.iters || !phase.empty()) {
            double eps = (cfg.eval == "last" && eps_now) ? *eps_now : row_eps();
            emit(t, eps, phase);
        }
    }
    rec.final_q1 = st.q1;
    rec.final_q2 = st.q2;
    return rec;
}

RunRecord run_mwu_family(const ExperimentConfig& cfg, const AlgoInfo& info, const GameForm& g) {
    auto start = std::chrono::steady_clock::now();
    RunRecord rec;
    rec.config = cfg;
    std::ofstream out;
    if (!cfg.out.empty()) {
        out.open(cfg.out);
        if (!out) throw std::runtime_error("cannot open output file: " + cfg.out);
        out << "iter,exploitability,sccp_n,phase,w,wall_ms\n";
        out.flush();
    }

    Averaging averaging = parse_averaging(cfg.averaging);
    MwuState s1 = make_mwu_state(g.tp1, *cfg.eta, *cfg.mu_b, 2 * *cfg.T);
    MwuState s2 = make_mwu_state(g.tp2, *cfg.eta, *cfg.mu_b, 2 * *cfg.T);
    if (info.baseline == "mwu" || info.baseline == "omwu") s1.mu_b = s2.mu_b = 0.0;
    SequenceStrategy q1 = behavior_to_sequence(g.tp1, s1.sigma);
    SequenceStrategy q2 = behavior_to_sequence(g.tp2, s2.sigma);
    std::vector<double> avg1(g.tp1.num_sequences, 0.0), avg2(g.tp2.num_sequences, 0.0);
    double weight_sum = 0.0;

    auto averaged = [&](const Treeplex& tp, const std::vector<double>& acc) {
        SequenceStrategy q;
        q.q.resize(acc.size());
        for (size_t i = 0; i < acc.size(); ++i) q.q[i] = acc[i] / weight_sum;
        return behavior_to_sequence(tp, sequence_to_behavior(tp, q));
    };
    auto row_eps = [&]() -> double {
        if (cfg.eval == "avg" && weight_sum > 0.0)
            return exploitability(g, averaged(g.tp1, avg1), averaged(g.tp2, avg2)).epsilon;
        return exploitability(g, q1, q2).epsilon;
    };
    auto emit = [&](long t) {
        TraceRow r;
        r.iter = t;
        r.exploitability = row_eps();
        r.wall_ms = now_ms(start);
        rec.rows.push_back(r);
        if (out.is_open()) {
            write_row(out, r);
            out.flush();
        }
    };
    auto update = [&](int player, MwuState& s, const SequenceStrategy& q_opp) {
        if (info.baseline == "mwu") mwu_avg_player_update(g, player, s, q_opp);
        else if (info.baseline == "omwu") domwu_player_update(g, player, s, q_opp);
        else if (info.baseline == "reg-omwu") reg_domwu_player_update(g, player, s, q_opp);
        else rnad_player_update(g, player, s, q_opp);
    };

    emit(0);
    for (long t = 1; t <= cfg.iters; ++t) {
        update(1, s1, q2);
        q1 = behavior_to_sequence(g.tp1, s1.sigma);
        update(2, s2, q1);
        q2 = behavior_to_sequence(g.tp2, s2.sigma);
        double tt = static_cast<double>(t);
        double weight = averaging == Averaging::Uniform ? 1.0
                        : averaging == Averaging::Linear ? tt
                                                         : tt * tt;
        for (size_t i = 0; i < avg1.size(); ++i) avg1[i] += weight * q1.q[i];
        for (size_t i = 0; i < avg2.size(); ++i) avg2[i] += weight * q2.q[i];
        weight_sum += weight;
        if (t % cfg.stride == 0 || t == cfg.iters) emit(t);
    }
    rec.final_q1 = q1;
    rec.final_q2 = q2;
    return rec;
}

}  // namespace

RunRecord run(const ExperimentConfig& cfg_in) {
    ExperimentConfig cfg = cfg_in;
    resolve_defaults(cfg);
    const AlgoInfo& info = algo_table().at(cfg.algo);
    GameForm g = build_game(GameSpec::parse(cfg.game));
    return info.engine_family ? run_engine_family(cfg, info, g) : run_mwu_family(cfg, info, g);
}

std::vector<RunRecord> sweep(const std::vector<std::string>& config_lines,
                             const std::string& out_dir) {
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(item);
        if (out.empty()) out.push_back("");
        return out;
    };
    static const std::vector<std::string> grid_keys = {"algo", "game",  "mu",   "T",
                                                       "eta",  "mu_b", "alpha", "beta"};

    // Separate grid axes from scalar lines, preserving everything else as-is.
    std::vector<std::string> scalar_lines;
    std::vector<std::pair<std::string, std::vector<std::string>>> axes;
    for (const std::string& raw : config_lines) {
        std::string line = raw.substr(0, raw.find('#'));
        auto l = line.find_first_not_of(" \t\r\n");
        if (l == std::string::npos) continue;
        line = line.substr(l, line.find_last_not_of(" \t\r\n") - l + 1);
        auto eq = line.find('=');
        std::string key = eq == std::string::npos ? "" : line.substr(0, eq);
        bool gridable = std::find(grid_keys.begin(), grid_keys.end(), key) != grid_keys.end();
        if (gridable && line.find(',') != std::string::npos) {
            axes.emplace_back(key, split(line.substr(eq + 1)));
        } else {
            scalar_lines.push_back(line);
        }
    }

    long total = 1;
    for (const auto& [k, vals] : axes) total *= static_cast<long>(vals.size());

    std::vector<RunRecord> records;
    // best final exploitability per game id
    std::map<std::string, std::pair<double, std::string>> best;
    for (long idx = 0; idx < total; ++idx) {
        std::vector<std::string> lines = scalar_lines;
        long rem = idx;
        std::string tag;
        for (const auto& [key, vals] : axes) {
            const std::string& v = vals[rem % vals.size()];
            rem /= static_cast<long>(vals.size());
            lines.push_back(key + "=" + v);
            tag += "_" + key + "-" + v;
        }
        try {
            ExperimentConfig cfg = ExperimentConfig::from_lines(lines);
            std::string game_tag = cfg.game;
            std::replace(game_tag.begin(), game_tag.end(), ':', '-');
            cfg.out = out_dir + "/" + cfg.algo + "_" + game_tag + tag + ".csv";
            RunRecord rec = run(cfg);
            double final_eps = rec.rows.empty() ? kInf : rec.rows.back().exploitability;
            auto it = best.find(cfg.game);
            if (it == best.end() || final_eps < it->second.first)
                best[cfg.game] = {final_eps, cfg.out};
            records.push_back(std::move(rec));
        } catch (const std::exception& e) {
            std::cerr << "sweep point " << idx << " failed: " << e.what() << "\n";
        }
    }
    for (const auto& [game, b] : best)
        std::cout << "best " << game << ": " << format_double(b.first) << " (" << b.second
                  << ")\n";
    return records;
}

void emit_csv(const RunRecord& record, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << "iter,exploitability,sccp_n,phase,w,wall_ms\n";
    for (const TraceRow& r : record.rows) write_row(out, r);
}

std::vector<TraceRow> parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open csv: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "iter,exploitability,sccp_n,phase,w,wall_ms")
        throw std::runtime_error("bad csv header in " + path);
    std::vector<TraceRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string item;
        while (std::getline(ss, item, ',')) f.push_back(item);
        while (f.size() < 6) f.push_back("");
        TraceRow r;
        r.iter = std::stol(f[0]);
        r.exploitability = std::stod(f[1]);
        r.sccp_n = std::stol(f[2]);
        r.phase = f[3];
        r.w = std::stod(f[4]);
        r.wall_ms = f[5].empty() ? 0.0 : std::stod(f[5]);
        rows.push_back(r);
    }
    return rows;
}

void emit_plot(const std::vector<PlotSeries>& series, const std::string& path) {
    if (series.empty()) throw std::invalid_argument("no series to plot");
    const double W = 760, H = 480, ml = 70, mr = 20, mt = 20, mb = 50;
    double xmax = 1, ymin = 1e300, ymax = 1e-300;
    for (const auto& s : series) {
        for (const auto& r : s.rows) {
            xmax = std::max(xmax, static_cast<double>(r.iter));
            double e = std::max(r.exploitability, 1e-18);
            ymin = std::min(ymin, e);
            ymax = std::max(ymax, e);
        }
    }
    ymin = std::pow(10.0, std::floor(std::log10(ymin)));
    ymax = std::pow(10.0, std::ceil(std::log10(std::max(ymax, ymin * 10))));
    auto X = [&](double it) { return ml + (W - ml - mr) * (xmax > 0 ? it / xmax : 0.0); };
    auto Y = [&](double e) {
        double le = std::log10(std::max(e, 1e-18));
        return mt + (H - mt - mb) * (std::log10(ymax) - le) / (std::log10(ymax) - std::log10(ymin));
    };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open plot file: " + path);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
        << "' font-family='sans-serif' font-size='12'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    out << "<rect x='" << ml << "' y='" << mt << "' width='" << W - ml - mr << "' height='"
        << H - mt - mb << "' fill='none' stroke='black'/>\n";
    for (double d = std::log10(ymin); d <= std::log10(ymax) + 0.5; d += 1.0) {
        double y = Y(std::pow(10.0, d));
        out << "<line x1='" << ml << "' y1='" << y << "' x2='" << W - mr << "' y2='" << y
            << "' stroke='#dddddd'/>\n";
        out << "<text x='" << ml - 6 << "' y='" << y + 4 << "' text-anchor='end'>1e"
            << static_cast<int>(d) << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        double it = xmax * i / 5.0;
        out << "<text x='" << X(it) << "' y='" << H - mb + 18
            << "' text-anchor='middle'>" << static_cast<long>(it) << "</text>\n";
    }
    out << "<text x='" << (ml + W - mr) / 2 << "' y='" << H - 10
        << "' text-anchor='middle'>iteration</text>\n";
    for (size_t si = 0; si < series.size(); ++si) {
        const char* c = colors[si % 8];
        out << "<polyline fill='none' stroke='" << c << "' stroke-width='1.5' points='";
        for (const auto& r : series[si].rows)
            out << X(static_cast<double>(r.iter)) << "," << Y(r.exploitability) << " ";
        out << "'/>\n";
        double ly = mt + 16 + 16 * static_cast<double>(si);
        out << "<line x1='" << ml + 10 << "' y1='" << ly - 4 << "' x2='" << ml + 34 << "' y2='"
            << ly - 4 << "' stroke='" << c << "' stroke-width='2'/>\n";
        out << "<text x='" << ml + 40 << "' y='" << ly << "'>" << series[si].label
            << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace rtsolve
