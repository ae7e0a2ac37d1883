#include "rtsolve/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rtsolve/engine.hpp"

namespace rtsolve {

namespace {

std::vector<double> infoset_depths(const Treeplex& t) {
    std::vector<double> depth(t.infosets.size(), 1.0);
    // infosets are bottom-up; walk in reverse so parents are set first
    std::vector<int> owner(t.num_sequences, -1);
    for (int i = 0; i < static_cast<int>(t.infosets.size()); ++i) {
        const Infoset& I = t.infosets[i];
        for (int a = 0; a < I.num_actions; ++a) owner[I.first_seq + a] = i;
    }
    for (int i = static_cast<int>(t.infosets.size()) - 1; i >= 0; --i) {
        int ps = t.infosets[i].parent_seq;
        if (ps != 0) depth[i] = depth[owner[ps]] + 1.0;
    }
    return depth;
}

}  // namespace

MwuState make_mwu_state(const Treeplex& t, double eta, double mu_b, long T,
                        DilationWeights dw) {
    if (eta <= 0.0) throw std::invalid_argument("eta must be positive");
    MwuState s;
    s.sigma = uniform_strategy(t);
    s.ref = s.sigma;
    s.prev_loss.assign(t.num_sequences, 0.0);
    s.eta = eta;
    s.mu_b = mu_b;
    s.T = T;
    s.beta = dw == DilationWeights::AllOnes
                 ? std::vector<double>(t.infosets.size(), 1.0)
                 : infoset_depths(t);
    return s;
}

void mwu_step_simplex(std::span<double> sigma, std::span<const double> loss, double eta) {
    // sigma' proportional to sigma * exp(-eta * loss); subtract the minimum
    // exponent so overflow cannot occur and constant shifts cancel.
    double min_l = *std::min_element(loss.begin(), loss.end());
    double z = 0.0;
    for (size_t i = 0; i < sigma.size(); ++i) {
        sigma[i] *= std::exp(-eta * (loss[i] - min_l));
        z += sigma[i];
    }
    for (size_t i = 0; i < sigma.size(); ++i) sigma[i] /= z;
}

void mwu_step(const Treeplex& t, MwuState& s, std::span<const double> loss) {
    for (size_t i = 0; i < t.infosets.size(); ++i) {
        const Infoset& I = t.infosets[i];
        mwu_step_simplex(s.sigma.at(t, static_cast<int>(i)),
                         loss.subspan(I.first_seq, I.num_actions), s.eta / s.beta[i]);
    }
    std::copy(loss.begin(), loss.end(), s.prev_loss.begin());
    ++s.player_updates;
}

void omwu_step(const Treeplex& t, MwuState& s, std::span<const double> loss) {
    std::vector<double> optimistic(loss.size());
    for (size_t i = 0; i < loss.size(); ++i) optimistic[i] = 2.0 * loss[i] - s.prev_loss[i];
    for (size_t i = 0; i < t.infosets.size(); ++i) {
        const Infoset& I = t.infosets[i];
        mwu_step_simplex(s.sigma.at(t, static_cast<int>(i)),
                         std::span<const double>(optimistic).subspan(I.first_seq, I.num_actions),
                         s.eta / s.beta[i]);
    }
    std::copy(loss.begin(), loss.end(), s.prev_loss.begin());
    ++s.player_updates;
}

namespace {

std::vector<double> with_entropy_term(const Treeplex& t, const MwuState& s,
                                      std::span<const double> loss_raw, bool anchor_uniform) {
    std::vector<double> out(loss_raw.begin(), loss_raw.end());
    if (s.mu_b == 0.0) return out;
    for (const Infoset& I : t.infosets) {
        double log_u = std::log(1.0 / I.num_actions);
        for (int a = 0; a < I.num_actions; ++a) {
            int q = I.first_seq + a;
            double p = s.sigma.probs[q];
            if (p <= 0.0) throw std::runtime_error("mwu strategy left the simplex interior");
            double anchor = anchor_uniform ? log_u : std::log(s.ref.probs[q]);
            out[q] += s.mu_b * (std::log(p) - anchor);
        }
    }
    return out;
}

void maybe_refresh_ref(MwuState& s) {
    if (s.T > 0 && s.player_updates % s.T == 0) s.ref = s.sigma;
}

}  // namespace

void reg_omwu_step(const Treeplex& t, MwuState& s, std::span<const double> loss_raw) {
    std::vector<double> l = with_entropy_term(t, s, loss_raw, /*anchor_uniform=*/true);
    omwu_step(t, s, l);
}

void rnad_step(const Treeplex& t, MwuState& s, std::span<const double> loss_raw) {
    std::vector<double> l = with_entropy_term(t, s, loss_raw, /*anchor_uniform=*/false);
    mwu_step(t, s, l);
    maybe_refresh_ref(s);
}

void domwu_player_update(const GameForm& g, int player, MwuState& s,
                         const SequenceStrategy& q_opp) {
    omwu_step(g.treeplex(player), s, counterfactual_losses(g, player, q_opp, s.sigma));
}

void reg_domwu_player_update(const GameForm& g, int player, MwuState& s,
                             const SequenceStrategy& q_opp) {
    reg_omwu_step(g.treeplex(player), s, counterfactual_losses(g, player, q_opp, s.sigma));
}

void rnad_player_update(const GameForm& g, int player, MwuState& s,
                        const SequenceStrategy& q_opp) {
    rnad_step(g.treeplex(player), s, counterfactual_losses(g, player, q_opp, s.sigma));
}

void mwu_avg_player_update(const GameForm& g, int player, MwuState& s,
                           const SequenceStrategy& q_opp) {
    mwu_step(g.treeplex(player), s, counterfactual_losses(g, player, q_opp, s.sigma));
}

}  // namespace rtsolve
