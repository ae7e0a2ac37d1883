#include <doctest.h>

#include <random>

#include "rtsolve/engine.hpp"
#include "rtsolve/games.hpp"
#include "rtsolve/metrics.hpp"
#include "test_util.hpp"

using namespace rtsolve;

namespace {

// Enumerates all pure behavior strategies of `player` (Kuhn-sized games only)
// and returns the best value against q_opp.
double brute_force_br(const GameForm& g, int player, const SequenceStrategy& q_opp) {
    const Treeplex& tp = g.treeplex(player);
    size_t n = tp.infosets.size();
    long combos = 1;
    for (const Infoset& I : tp.infosets) combos *= I.num_actions;
    REQUIRE(combos <= 100000);
    double best = -1e300;
    for (long mask = 0; mask < combos; ++mask) {
        BehaviorStrategy s;
        s.probs.assign(tp.num_sequences, 0.0);
        s.probs[0] = 1.0;
        long rem = mask;
        for (size_t i = 0; i < n; ++i) {
            const Infoset& I = tp.infosets[i];
            s.probs[I.first_seq + rem % I.num_actions] = 1.0;
            rem /= I.num_actions;
        }
        SequenceStrategy q = behavior_to_sequence(tp, s);
        double v = 0.0;
        for (const PayoffEntry& e : g.entries) {
            double u = player == 1 ? e.value : -e.value;
            int sp = player == 1 ? e.seq1 : e.seq2;
            int so = player == 1 ? e.seq2 : e.seq1;
            v += u * q.q[sp] * q_opp.q[so];
        }
        best = std::max(best, v);
    }
    return best;
}

}  // namespace

TEST_CASE("uniform play is an equilibrium of rock-paper-scissors") {
    GameForm g = test::rock_paper_scissors();
    SequenceStrategy u{{1.0, 1.0 / 3, 1.0 / 3, 1.0 / 3}};
    CHECK(exploitability(g, u, u).epsilon == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("a pure first action against uniform matching pennies is fully exploitable") {
    GameForm g = test::matching_pennies();
    SequenceStrategy q1{{1.0, 1.0, 0.0}};
    SequenceStrategy q2{{1.0, 0.5, 0.5}};
    CHECK(exploitability(g, q1, q2).epsilon == doctest::Approx(1.0));
}

TEST_CASE("matrix-game best response picks the best row") {
    GameForm g = test::matrix_form({{1.0, -1.0}, {0.5, 0.5}, {-2.0, 3.0}});
    SequenceStrategy q2{{1.0, 0.5, 0.5}};
    BestResponse br = best_response(g, 1, q2);
    CHECK(br.value == doctest::Approx(0.5));
    CHECK(br.sigma.probs[2] == 1.0);  // second row dominates at this q2
}

TEST_CASE("treeplex best response matches pure-strategy enumeration") {
    GameForm g = build_kuhn(3);
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        SequenceStrategy q1 = behavior_to_sequence(g.tp1, test::random_behavior(g.tp1, rng));
        SequenceStrategy q2 = behavior_to_sequence(g.tp2, test::random_behavior(g.tp2, rng));
        CHECK(best_response_value(g, 1, q2) ==
              doctest::Approx(brute_force_br(g, 1, q2)).epsilon(1e-10));
        CHECK(best_response_value(g, 2, q1) ==
              doctest::Approx(brute_force_br(g, 2, q1)).epsilon(1e-10));
    }
}

TEST_CASE("best response dominates arbitrary fixed strategies") {
    GameForm g = build_kuhn(3);
    std::mt19937_64 rng(37);
    SequenceStrategy q2 = behavior_to_sequence(g.tp2, test::random_behavior(g.tp2, rng));
    double brv = best_response_value(g, 1, q2);
    for (int rep = 0; rep < 100; ++rep) {
        SequenceStrategy q1 = behavior_to_sequence(g.tp1, test::random_behavior(g.tp1, rng));
        CHECK(g.expected_value1(q1, q2) <= brv + 1e-10);
    }
}

TEST_CASE("first-player equilibrium value of three-card poker is -1/18") {
    GameForm g = build_kuhn(3);
    EngineState st = make_engine_state(g);
    RtTermConfig none1{0.0, 1.0, uniform_strategy(g.tp1)};
    RtTermConfig none2{0.0, 1.0, uniform_strategy(g.tp2)};
    for (int t = 1; t <= 20000; ++t)
        iterate_once(g, st, none1, none2, MinimizerKind::prm_plus());
    SequenceStrategy q1 = average_strategy(g, st, 1);
    SequenceStrategy q2 = average_strategy(g, st, 2);
    REQUIRE(exploitability(g, q1, q2).epsilon < 1e-6);
    // player 1's best response to the near-equilibrium q2 is the game value
    CHECK(best_response_value(g, 1, q2) == doctest::Approx(-1.0 / 18).epsilon(1e-4));
}

TEST_CASE("averaged self-play keeps shrinking at the classical rate") {
    GameForm g = build_kuhn(3);
    EngineState st = make_engine_state(g);
    RtTermConfig none1{0.0, 1.0, uniform_strategy(g.tp1)};
    RtTermConfig none2{0.0, 1.0, uniform_strategy(g.tp2)};
    double at_100 = 0.0;
    for (int t = 1; t <= 1000; ++t) {
        iterate_once(g, st, none1, none2, MinimizerKind::rm_plus(), Averaging::Linear);
        if (t == 100)
            at_100 =
                exploitability(g, average_strategy(g, st, 1), average_strategy(g, st, 2)).epsilon;
    }
    double at_1000 =
        exploitability(g, average_strategy(g, st, 1), average_strategy(g, st, 2)).epsilon;
    CHECK(at_1000 < 2.5e-4);
    CHECK(at_1000 < at_100 / 3.0);
}

TEST_CASE("distances between strategies") {
    BehaviorStrategy a, b;
    a.probs = {1.0, 1.0, 0.0};
    b.probs = {1.0, 0.0, 1.0};
    CHECK(behavior_distance(a, a) == 0.0);
    CHECK(behavior_distance(a, b) == doctest::Approx(std::sqrt(2.0)));

    SequenceStrategy qa{{1.0, 0.2, 0.8}};
    SequenceStrategy qb{{1.0, 0.2, 0.8}};
    CHECK(strategy_distance(qa, qb) == 0.0);
}

TEST_CASE("reach-weighted distance follows a hand computation") {
    // root infoset (2 actions), child infoset under action 1
    Treeplex t;
    t.player = 1;
    t.infosets = {Infoset{1, 3, 2}, Infoset{0, 1, 2}};
    t.num_sequences = 5;
    t.finalize();
    BehaviorStrategy a, b;
    a.probs = {1.0, 0.5, 0.5, 1.0, 0.0};
    b.probs = {1.0, 0.5, 0.5, 0.0, 1.0};
    SequenceStrategy w{{1.0, 0.25, 0.75, 0.1, 0.15}};
    // sum over infosets of reach-weighted block norms: the root block is
    // identical (norm 0); the child block has norm sqrt(2), weight w[1] = 0.25
    double want = 0.25 * std::sqrt(2.0);
    CHECK(weighted_strategy_distance(t, w, a, b) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("a converged regularized fixed point is no farther from equilibrium than its anchor") {
    // matching pennies has the unique equilibrium (0.5, 0.5) for both players
    GameForm g = test::matching_pennies();
    BehaviorStrategy ref1, ref2;
    ref1.probs = {1.0, 0.8, 0.2};
    ref2.probs = {1.0, 0.35, 0.65};
    EngineState st = make_engine_state(g);
    RtTermConfig cfg1{0.2, 1.0, ref1};
    RtTermConfig cfg2{0.2, 1.0, ref2};
    for (int t = 1; t <= 200000; ++t)
        iterate_once(g, st, cfg1, cfg2, MinimizerKind::rm_plus());
    BehaviorStrategy ne;
    ne.probs = {1.0, 0.5, 0.5};
    CHECK(behavior_distance(st.sigma1, ne) <= behavior_distance(ref1, ne) + 1e-6);
    CHECK(behavior_distance(st.sigma2, ne) <= behavior_distance(ref2, ne) + 1e-6);
}
