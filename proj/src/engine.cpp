#include "rtsolve/engine.hpp"

#include <cmath>
#include <stdexcept>

namespace rtsolve {

EngineState make_engine_state(const GameForm& g) {
    EngineState s;
    s.sigma1 = uniform_strategy(g.tp1);
    s.sigma2 = uniform_strategy(g.tp2);
    s.q1 = behavior_to_sequence(g.tp1, s.sigma1);
    s.q2 = behavior_to_sequence(g.tp2, s.sigma2);
    s.regrets1.reserve(g.tp1.infosets.size());
    for (const Infoset& I : g.tp1.infosets) s.regrets1.push_back(make_regret_state(I.num_actions));
    s.regrets2.reserve(g.tp2.infosets.size());
    for (const Infoset& I : g.tp2.infosets) s.regrets2.push_back(make_regret_state(I.num_actions));
    s.avg1.assign(g.tp1.num_sequences, 0.0);
    s.avg2.assign(g.tp2.num_sequences, 0.0);
    return s;
}

std::vector<double> counterfactual_losses(const GameForm& g, int player,
                                          const SequenceStrategy& q_opp,
                                          const BehaviorStrategy& sigma_self) {
    const Treeplex& tp = g.treeplex(player);
    const auto& payoff = g.payoff(player);
    std::vector<double> loss(tp.num_sequences, 0.0);
    std::vector<double> infoset_value(tp.infosets.size(), 0.0);
    for (size_t i = 0; i < tp.infosets.size(); ++i) {
        const Infoset& I = tp.infosets[i];
        double v = 0.0;
        for (int a = 0; a < I.num_actions; ++a) {
            int s = I.first_seq + a;
            double l = 0.0;
            for (const auto& [so, u] : payoff[s]) l -= u * q_opp.q[so];
            for (int child : tp.seq_children[s]) l += infoset_value[child];
            loss[s] = l;
            v += sigma_self.probs[s] * l;
        }
        infoset_value[i] = v;
    }
    return loss;
}

std::vector<double> rt_loss(std::span<const double> loss, std::span<const double> sigma,
                            std::span<const double> sigma_ref, double mu, double w) {
    if (loss.size() != sigma.size() || loss.size() != sigma_ref.size())
        throw std::invalid_argument("rt_loss shape mismatch");
    std::vector<double> out(loss.size());
    double wm = w * mu;
    for (size_t i = 0; i < loss.size(); ++i) out[i] = loss[i] + wm * (sigma[i] - sigma_ref[i]);
    return out;
}

namespace {

void update_player(const GameForm& g, EngineState& state, int player, const RtTermConfig& cfg,
                   const MinimizerKind& kind) {
    const Treeplex& tp = g.treeplex(player);
    const SequenceStrategy& q_opp = player == 1 ? state.q2 : state.q1;
    BehaviorStrategy& sigma = state.sigma(player);
    auto& regrets = state.regrets(player);

    std::vector<double> loss = counterfactual_losses(g, player, q_opp, sigma);
    for (size_t i = 0; i < tp.infosets.size(); ++i) {
        const Infoset& I = tp.infosets[i];
        std::span<const double> l(loss.data() + I.first_seq, static_cast<size_t>(I.num_actions));
        std::span<const double> s = sigma.at(tp, static_cast<int>(i));
        std::vector<double> r;
        if (cfg.mu != 0.0) {
            std::span<const double> ref(cfg.reference.probs.data() + I.first_seq,
                                        static_cast<size_t>(I.num_actions));
            r = immediate_regret(rt_loss(l, s, ref, cfg.mu, cfg.w), s);
        } else {
            r = immediate_regret(l, s);
        }
        accumulate(regrets[i], r, kind);
        std::vector<double> next = strategy_from_regret(regrets[i], kind);
        for (int a = 0; a < I.num_actions; ++a) sigma.probs[I.first_seq + a] = next[a];
    }
    state.q(player) = behavior_to_sequence(tp, sigma);
}

}  // namespace

void iterate_once(const GameForm& g, EngineState& state, const RtTermConfig& cfg1,
                  const RtTermConfig& cfg2, const MinimizerKind& kind, Averaging averaging) {
    update_player(g, state, 1, cfg1, kind);
    update_player(g, state, 2, cfg2, kind);
    ++state.iter;

    double t = static_cast<double>(state.iter);
    double weight = averaging == Averaging::Uniform ? 1.0
                    : averaging == Averaging::Linear ? t
                                                     : t * t;
    for (size_t i = 0; i < state.avg1.size(); ++i) state.avg1[i] += weight * state.q1.q[i];
    for (size_t i = 0; i < state.avg2.size(); ++i) state.avg2[i] += weight * state.q2.q[i];
    state.weight_sum += weight;

    // cheap periodic sanity check against silent blowups
    if (state.iter % 1000 == 0) {
        for (double v : state.q1.q)
            if (!std::isfinite(v)) throw std::runtime_error("non-finite strategy detected");
        for (double v : state.q2.q)
            if (!std::isfinite(v)) throw std::runtime_error("non-finite strategy detected");
    }
}

SequenceStrategy average_strategy(const GameForm& g, const EngineState& state, int player) {
    if (state.iter < 1) throw std::logic_error("average strategy requested before any iteration");
    const Treeplex& tp = g.treeplex(player);
    const std::vector<double>& acc = player == 1 ? state.avg1 : state.avg2;
    SequenceStrategy q;
    q.q.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) q.q[i] = acc[i] / state.weight_sum;
    // round-trip through behavior space restores exact flow conservation
    return behavior_to_sequence(tp, sequence_to_behavior(tp, q));
}

}  // namespace rtsolve
