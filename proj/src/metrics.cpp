#include "rtsolve/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rtsolve {

BestResponse best_response(const GameForm& g, int player, const SequenceStrategy& q_opp) {
    const Treeplex& tp = g.treeplex(player);
    const auto& payoff = g.payoff(player);

    // Opponent-and-chance weighted terminal utility per own sequence.
    std::vector<double> w(tp.num_sequences, 0.0);
    for (int s = 0; s < tp.num_sequences; ++s)
        for (const auto& [so, u] : payoff[s]) w[s] += u * q_opp.q[so];

    BestResponse br;
    br.sigma.probs.assign(tp.num_sequences, 0.0);
    std::vector<double> value(tp.infosets.size(), 0.0);
    for (size_t i = 0; i < tp.infosets.size(); ++i) {
        const Infoset& I = tp.infosets[i];
        double best = -std::numeric_limits<double>::infinity();
        int best_a = 0;
        for (int a = 0; a < I.num_actions; ++a) {
            int s = I.first_seq + a;
            double v = w[s];
            for (int child : tp.seq_children[s]) v += value[child];
            if (v > best) {
                best = v;
                best_a = a;
            }
        }
        value[i] = best;
        br.sigma.probs[I.first_seq + best_a] = 1.0;
    }
    br.value = w[0];
    for (int child : tp.seq_children[0]) br.value += value[child];
    return br;
}

double best_response_value(const GameForm& g, int player, const SequenceStrategy& q_opp) {
    return best_response(g, player, q_opp).value;
}

ExploitabilityReport exploitability(const GameForm& g, const SequenceStrategy& q1,
                                    const SequenceStrategy& q2) {
    ExploitabilityReport rep;
    rep.br_value1 = best_response_value(g, 1, q2);
    rep.br_value2 = best_response_value(g, 2, q1);
    double eps = rep.br_value1 + rep.br_value2;
    if (eps < -1e-9) throw std::runtime_error("negative exploitability: broken best response");
    rep.epsilon = eps < 0.0 ? 0.0 : eps;
    return rep;
}

double behavior_distance(const BehaviorStrategy& a, const BehaviorStrategy& b) {
    if (a.probs.size() != b.probs.size()) throw std::invalid_argument("shape mismatch");
    double s = 0.0;
    // index 0 is the unused empty-sequence slot on both sides
    for (size_t i = 1; i < a.probs.size(); ++i) {
        double d = a.probs[i] - b.probs[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double strategy_distance(const SequenceStrategy& a, const SequenceStrategy& b) {
    if (a.q.size() != b.q.size()) throw std::invalid_argument("shape mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.q.size(); ++i) {
        double d = a.q[i] - b.q[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double weighted_strategy_distance(const Treeplex& t, const SequenceStrategy& weights,
                                  const BehaviorStrategy& a, const BehaviorStrategy& b) {
    double total = 0.0;
    for (const Infoset& I : t.infosets) {
        double s = 0.0;
        for (int x = 0; x < I.num_actions; ++x) {
            double d = a.probs[I.first_seq + x] - b.probs[I.first_seq + x];
            s += d * d;
        }
        total += weights.q[I.parent_seq] * std::sqrt(s);
    }
    return total;
}

}  // namespace rtsolve
