#pragma once

#include <span>
#include <vector>

#include "rtsolve/treeplex.hpp"

namespace rtsolve {

enum class DilationWeights { AllOnes, DepthBased };

// Multiplicative-weights state over one treeplex; the NFG case is a treeplex
// with a single infoset. Strategies stay strictly interior.
struct MwuState {
    BehaviorStrategy sigma;
    std::vector<double> prev_loss;  // per sequence, for optimism
    BehaviorStrategy ref;           // R-NaD anchor
    double eta = 0.1;
    double mu_b = 0.0;
    long T = 0;                      // R-NaD reference refresh, in player updates
    long player_updates = 0;
    std::vector<double> beta;        // per-infoset dilation weight (EFG)
};

MwuState make_mwu_state(const Treeplex& t, double eta, double mu_b = 0.0, long T = 0,
                        DilationWeights dw = DilationWeights::AllOnes);

// One multiplicative update on a single simplex, shift-normalized so constant
// loss offsets cancel exactly.
void mwu_step_simplex(std::span<double> sigma, std::span<const double> loss, double eta);

// Flat per-infoset updates over the whole treeplex.
void mwu_step(const Treeplex& t, MwuState& s, std::span<const double> loss);
void omwu_step(const Treeplex& t, MwuState& s, std::span<const double> loss);
// OMWU on loss + mu_b * (log sigma - log uniform)
void reg_omwu_step(const Treeplex& t, MwuState& s, std::span<const double> loss_raw);
// MWU on loss + mu_b * (log sigma - log ref); ref <- sigma every T updates
void rnad_step(const Treeplex& t, MwuState& s, std::span<const double> loss_raw);

// EFG drivers: counterfactual losses vs q_opp, then the per-infoset update
// with stepsize eta / beta_I.
void domwu_player_update(const GameForm& g, int player, MwuState& s,
                         const SequenceStrategy& q_opp);
void reg_domwu_player_update(const GameForm& g, int player, MwuState& s,
                             const SequenceStrategy& q_opp);
void rnad_player_update(const GameForm& g, int player, MwuState& s,
                        const SequenceStrategy& q_opp);
void mwu_avg_player_update(const GameForm& g, int player, MwuState& s,
                           const SequenceStrategy& q_opp);

}  // namespace rtsolve
