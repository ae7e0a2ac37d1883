#pragma once

#include "rtsolve/minimizers.hpp"
#include "rtsolve/treeplex.hpp"

namespace rtsolve {

enum class Averaging { Uniform, Linear, Quadratic };

// Regularization injected into the local immediate-regret computation.
// mu = 0 disables it, recovering the plain CFR-family dynamics.
struct RtTermConfig {
    double mu = 0.0;
    double w = 1.0;
    BehaviorStrategy reference;
};

struct EngineState {
    BehaviorStrategy sigma1, sigma2;
    SequenceStrategy q1, q2;
    std::vector<RegretState> regrets1, regrets2;
    std::vector<double> avg1, avg2;  // weighted sums of sequence strategies
    double weight_sum = 0.0;
    long iter = 0;

    BehaviorStrategy& sigma(int player) { return player == 1 ? sigma1 : sigma2; }
    SequenceStrategy& q(int player) { return player == 1 ? q1 : q2; }
    std::vector<RegretState>& regrets(int player) { return player == 1 ? regrets1 : regrets2; }
};

EngineState make_engine_state(const GameForm& g);

// Counterfactual losses for every sequence of `player`, bottom-up, using the
// player's current behavior strategy to weight child infoset values.
// loss[seq(I,a)] = -sum_z u_i(z) q_opp(z) over terminals at Ia, plus the
// children's expected losses.
std::vector<double> counterfactual_losses(const GameForm& g, int player,
                                          const SequenceStrategy& q_opp,
                                          const BehaviorStrategy& sigma_self);

// l_hat = l + w*mu*(sigma - sigma_ref) for one infoset block. The transformed
// loss feeds only the local regret update; parent propagation keeps plain l.
std::vector<double> rt_loss(std::span<const double> loss, std::span<const double> sigma,
                            std::span<const double> sigma_ref, double mu, double w);

// One alternating iteration: player 1 updates against q2, then player 2
// against the refreshed q1. Appends weight * q^{t+1} to the averaging sums.
void iterate_once(const GameForm& g, EngineState& state, const RtTermConfig& cfg1,
                  const RtTermConfig& cfg2, const MinimizerKind& kind,
                  Averaging averaging = Averaging::Quadratic);

// Normalized averaged strategy per player, renormalized to exact flow
// conservation through a behavior round trip.
SequenceStrategy average_strategy(const GameForm& g, const EngineState& state, int player);

}  // namespace rtsolve
