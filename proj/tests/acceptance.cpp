// End-to-end acceptance checks. Each numbered check prints one PASS/FAIL line;
// the process exits nonzero if any check fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "rtsolve/engine.hpp"
#include "rtsolve/games.hpp"
#include "rtsolve/harness.hpp"
#include "rtsolve/metrics.hpp"
#include "rtsolve/minimizers.hpp"

using namespace rtsolve;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- 1: published game sizes -------------------------------------------------
void check_game_sizes() {
    struct Row {
        const char* id;
        long long infosets, sequences, leaves;
    };
    const Row rows[] = {{"kuhn:3", 12, 26, 30},
                        {"leduc:3", 288, 674, 1116},
                        {"liarsdice:6", 24576, 49142, 147420},
                        {"goofspiel:4", 34952, 42658, 13824}};
    bool ok = true;
    std::string detail = "game sizes:";
    for (const Row& r : rows) {
        auto t0 = std::chrono::steady_clock::now();
        GameStats s = game_stats(build_game(GameSpec::parse(r.id)));
        double dt = seconds_since(t0);
        bool match = s.infosets == r.infosets && s.sequences == r.sequences &&
                     s.leaves == r.leaves && dt < 1.0;
        ok = ok && match;
        detail += std::string(" ") + r.id + (match ? "=ok" : "=MISMATCH");
    }
    report(1, ok, detail);
}

// ---- 2 & 3: fixed-loss purification times -----------------------------------
long purification_time(const MinimizerKind& kind, long cap) {
    RegretState st = make_regret_state(3);
    std::vector<double> loss = {-1.0, 0.0, 1e6};
    std::vector<double> sigma = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    for (long t = 1; t <= cap; ++t) {
        accumulate(st, immediate_regret(loss, sigma), kind);
        sigma = strategy_from_regret(st, kind);
        if (sigma[1] == 0.0 && sigma[2] == 0.0) return t;
    }
    return -1;
}

void check_purification() {
    auto t0 = std::chrono::steady_clock::now();
    long t_rmp = purification_time(MinimizerKind::rm_plus(), 600000);
    double dt = seconds_since(t0);
    report(2, std::labs(t_rmp - 471407) <= 2 && dt < 5.0,
           "clipped-regret purification at t=" + std::to_string(t_rmp) + " (target 471407 +-2, " +
               std::to_string(dt) + "s)");
    long t_drm = purification_time(MinimizerKind::drm(1.0, 1.0), 10000);
    report(3, std::labs(t_drm - 970) <= 2,
           "discounted(1,1) purification at t=" + std::to_string(t_drm) + " (target 970 +-2)");
}

// ---- 4: mirror-descent oracle equivalence -----------------------------------
void check_oracle_equivalence() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> rd(-4.0, 4.0);
    bool ok = true;
    double worst = 0.0;
    for (MinimizerKind kind :
         {MinimizerKind::rm(), MinimizerKind::rm_plus(), MinimizerKind::drm(2.0, 0.0)}) {
        RegretState a = make_regret_state(5), b = make_regret_state(5);
        for (int step = 0; step < 10000; ++step) {
            std::vector<double> r(5);
            for (double& v : r) v = rd(rng);
            accumulate(a, r, kind);
            omd_oracle_step(b, r, kind, 1.0);
            for (int i = 0; i < 5; ++i) {
                double d = std::abs(a.R[i] - b.R[i]);
                double scale = std::max(1.0, std::abs(a.R[i]));
                worst = std::max(worst, d / scale);
                if (d / scale > 1e-12) ok = false;
            }
        }
    }
    report(4, ok, "unit-stepsize oracle equivalence, worst relative gap " +
                      format_double(worst) + " over 3x10^4 steps");
}

// ---- 5: best response vs pure-strategy enumeration --------------------------
double brute_force_br(const GameForm& g, int player, const SequenceStrategy& q_opp) {
    const Treeplex& tp = g.treeplex(player);
    long combos = 1;
    for (const Infoset& I : tp.infosets) combos *= I.num_actions;
    double best = -1e300;
    for (long mask = 0; mask < combos; ++mask) {
        BehaviorStrategy s;
        s.probs.assign(tp.num_sequences, 0.0);
        s.probs[0] = 1.0;
        long rem = mask;
        for (const Infoset& I : tp.infosets) {
            s.probs[I.first_seq + rem % I.num_actions] = 1.0;
            rem /= I.num_actions;
        }
        SequenceStrategy q = behavior_to_sequence(tp, s);
        double v = 0.0;
        for (const PayoffEntry& e : g.entries) {
            double u = player == 1 ? e.value : -e.value;
            v += u * q.q[player == 1 ? e.seq1 : e.seq2] * q_opp.q[player == 1 ? e.seq2 : e.seq1];
        }
        best = std::max(best, v);
    }
    return best;
}

BehaviorStrategy random_behavior(const Treeplex& t, std::mt19937_64& rng) {
    BehaviorStrategy s;
    s.probs.assign(t.num_sequences, 1.0);
    std::uniform_real_distribution<double> dist(0.02, 1.0);
    for (const Infoset& I : t.infosets) {
        double z = 0.0;
        for (int a = 0; a < I.num_actions; ++a) z += s.probs[I.first_seq + a] = dist(rng);
        for (int a = 0; a < I.num_actions; ++a) s.probs[I.first_seq + a] /= z;
    }
    return s;
}

void check_best_response() {
    GameForm g = build_kuhn(3);
    std::mt19937_64 rng(7);
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        SequenceStrategy q1 = behavior_to_sequence(g.tp1, random_behavior(g.tp1, rng));
        SequenceStrategy q2 = behavior_to_sequence(g.tp2, random_behavior(g.tp2, rng));
        worst = std::max(worst, std::abs(best_response_value(g, 1, q2) - brute_force_br(g, 1, q2)));
        worst = std::max(worst, std::abs(best_response_value(g, 2, q1) - brute_force_br(g, 2, q1)));
    }
    report(5, worst <= 1e-10,
           "tree best response vs enumeration on 50 profiles, worst gap " + format_double(worst));
}

// ---- 6: fixed-reference stagnation bound ------------------------------------
void check_stagnation_bound() {
    bool ok = true;
    std::string detail = "fixed-reference stagnation:";
    for (uint64_t seed : {11u, 12u, 13u}) {
        GameForm g = build_matrix_game(2, 2, seed);
        for (double mu : {0.1, 0.5}) {
            EngineState st = make_engine_state(g);
            RtTermConfig cfg1{mu, 1.0, uniform_strategy(g.tp1)};
            RtTermConfig cfg2{mu, 1.0, uniform_strategy(g.tp2)};
            for (int t = 1; t <= 200000; ++t)
                iterate_once(g, st, cfg1, cfg2, MinimizerKind::rm_plus());
            double eps = exploitability(g, st.q1, st.q2).epsilon;
            bool pass = eps <= 2.0 * mu + 1e-6;
            ok = ok && pass;
            detail += " (seed " + std::to_string(seed) + ", mu " + std::to_string(mu) +
                      ") eps=" + format_double(eps) + (pass ? "" : " EXCEEDS");
        }
    }
    report(6, ok, detail);
}

// ---- 7: controller halving and interval spans -------------------------------
void check_controller_properties() {
    bool ok = true;
    std::string detail = "controller:";
    struct Cfg {
        const char* game;
        const char* algo;
        long iters;
    };
    for (const Cfg& c : {Cfg{"kuhn:3", "adp-rt-cfr+", 4000}, Cfg{"matrix:10x10:0",
                                                                 "adp-rt-rm+", 4000}}) {
        ExperimentConfig cfg;
        cfg.game = c.game;
        cfg.algo = c.algo;
        cfg.iters = c.iters;
        cfg.stride = c.iters;  // rows mostly from phase events
        resolve_defaults(cfg);
        RunRecord rec = run(cfg);
        long T = *cfg.T;
        double prev_exploit = -1.0;
        long prev_t = 0;
        bool halves = true, spans = true;
        int transitions = 0;
        for (const TraceRow& r : rec.rows) {
            if (r.phase.empty()) continue;
            ++transitions;
            long span_units = 2 * (r.iter - prev_t);  // two player updates per iteration
            if (span_units < 1 || span_units > 2 * T) spans = false;
            prev_t = r.iter;
            if (r.phase == "exploit") {
                if (prev_exploit >= 0.0 && r.exploitability > prev_exploit / 2.0) halves = false;
                prev_exploit = r.exploitability;
            }
        }
        bool pass = halves && spans && transitions >= 2;
        ok = ok && pass;
        detail += std::string(" ") + c.game + ": " + std::to_string(transitions) +
                  " transitions, halving=" + (halves ? "yes" : "NO") +
                  ", spans in [1,2T]=" + (spans ? "yes" : "NO") + ";";
    }
    report(7, ok, detail);
}

// ---- 8: desk-scale convergence with acceleration ----------------------------
void check_convergence() {
    bool ok = true;
    std::string detail;

    auto final_eps = [](const char* game, const char* algo, long iters) {
        ExperimentConfig cfg;
        cfg.game = game;
        cfg.algo = algo;
        cfg.iters = iters;
        cfg.stride = iters;
        return run(cfg).rows.back().exploitability;
    };

    auto t0 = std::chrono::steady_clock::now();
    double kuhn_adp = final_eps("kuhn:3", "adp-rt-cfr+", 10000);
    double kuhn_time = seconds_since(t0);
    double kuhn_cfrp = final_eps("kuhn:3", "cfr+", 10000);  // quadratic averaging default
    bool kuhn_ok = kuhn_adp <= 1e-8 && kuhn_time < 30.0 && kuhn_adp < kuhn_cfrp;
    detail += "kuhn adp=" + format_double(kuhn_adp) + " vs averaged=" + format_double(kuhn_cfrp) +
              " in " + std::to_string(kuhn_time) + "s";

    t0 = std::chrono::steady_clock::now();
    double leduc_adp = final_eps("leduc:3", "adp-rt-dcfr", 100000);
    double leduc_time = seconds_since(t0);
    double leduc_cfrp = final_eps("leduc:3", "cfr+", 100000);
    bool leduc_ok = leduc_adp <= 1e-4 && leduc_time < 600.0 && leduc_adp < leduc_cfrp;
    detail += "; leduc adp=" + format_double(leduc_adp) +
              " vs averaged=" + format_double(leduc_cfrp) + " in " + std::to_string(leduc_time) +
              "s";

    ok = kuhn_ok && leduc_ok;
    report(8, ok, detail);
}

// ---- 9: strict-equilibrium game and the T=1 reduction -----------------------
std::vector<TraceRow> run_rows(const char* game, const char* algo, long iters,
                               std::optional<long> T) {
    ExperimentConfig cfg;
    cfg.game = game;
    cfg.algo = algo;
    cfg.iters = iters;
    cfg.stride = 1;
    cfg.T = T;
    cfg.eval = "last";
    return run(cfg).rows;
}

void check_strict_ne() {
    std::vector<TraceRow> cfrp = run_rows("liarsdice:6", "cfr+", 20, std::nullopt);
    bool fast = cfrp.back().exploitability <= 1e-6;

    bool identical = true;
    for (auto [plain, rt] : {std::pair{"cfr+", "rt-cfr+"}, {"dcfr", "rt-dcfr"}}) {
        std::vector<TraceRow> a = run_rows("liarsdice:6", plain, 20, std::nullopt);
        std::vector<TraceRow> b = run_rows("liarsdice:6", rt, 20, 1);
        if (a.size() != b.size()) identical = false;
        for (size_t i = 0; identical && i < a.size(); ++i)
            if (a[i].iter != b[i].iter || a[i].exploitability != b[i].exploitability)
                identical = false;
    }
    report(9, fast && identical,
           "strict-equilibrium last iterate eps=" + format_double(cfrp.back().exploitability) +
               " at t=20; T=1 reduction identical=" + (identical ? "yes" : "NO"));
}

// ---- 10: discount-exponent study --------------------------------------------
void check_discount_study() {
    auto trace = [](double alpha) {
        ExperimentConfig cfg;
        cfg.game = "leduc:3";
        cfg.algo = "rt-dcfr";
        cfg.T = 125;
        cfg.mu = 0.001;
        cfg.alpha = alpha;
        cfg.beta = 0.0;
        cfg.iters = 20000;
        cfg.stride = 20;
        return run(cfg).rows;
    };
    std::vector<TraceRow> sharp = trace(2.0);
    std::vector<TraceRow> soft = trace(1.5);
    double final_sharp = sharp.back().exploitability;
    double final_soft = soft.back().exploitability;
    // report-style: count rises of more than 10x above the running minimum
    auto fluctuations = [](const std::vector<TraceRow>& rows) {
        int count = 0;
        double run_min = std::numeric_limits<double>::infinity();
        for (const TraceRow& r : rows) {
            if (std::isfinite(run_min) && run_min > 0.0 && r.exploitability > 10.0 * run_min)
                ++count;
            run_min = std::min(run_min, r.exploitability);
        }
        return count;
    };
    report(10, final_sharp <= final_soft,
           "discount study final eps: (2,0)=" + format_double(final_sharp) +
               " <= (1.5,0)=" + format_double(final_soft) +
               "; >10x rises above the running minimum: (1.5,0)=" +
               std::to_string(fluctuations(soft)) + ", (2,0)=" +
               std::to_string(fluctuations(sharp)));
}

// ---- 11: determinism ---------------------------------------------------------
void check_determinism() {
    bool ok = true;
    std::string detail = "determinism:";
    struct Cfg {
        const char* game;
        const char* algo;
        long iters;
    };
    for (const Cfg& c : {Cfg{"kuhn:3", "adp-rt-cfr+", 500}, Cfg{"matrix:10x10:1", "rnad", 500},
                         Cfg{"leduc:3", "pcfr+", 200}}) {
        ExperimentConfig cfg;
        cfg.game = c.game;
        cfg.algo = c.algo;
        cfg.iters = c.iters;
        cfg.stride = 10;
        RunRecord a = run(cfg);
        RunRecord b = run(cfg);
        bool same = a.rows.size() == b.rows.size();
        for (size_t i = 0; same && i < a.rows.size(); ++i) {
            const TraceRow &x = a.rows[i], &y = b.rows[i];
            same = x.iter == y.iter && x.exploitability == y.exploitability &&
                   x.sccp_n == y.sccp_n && x.phase == y.phase && x.w == y.w;
        }
        same = same && a.final_q1.q == b.final_q1.q && a.final_q2.q == b.final_q2.q;
        ok = ok && same;
        detail += std::string(" ") + c.game + "/" + c.algo + (same ? "=ok" : "=DIFFERS");
    }
    report(11, ok, detail);
}

}  // namespace

int main() {
    check_game_sizes();
    check_purification();
    check_oracle_equivalence();
    check_best_response();
    check_stagnation_bound();
    check_controller_properties();
    check_convergence();
    check_strict_ne();
    check_discount_study();
    check_determinism();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
