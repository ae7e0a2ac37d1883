#include "rtsolve/treeplex.hpp"

#include <cmath>
#include <stdexcept>

namespace rtsolve {

void Treeplex::finalize() {
    seq_children.assign(num_sequences, {});
    for (int i = 0; i < static_cast<int>(infosets.size()); ++i) {
        seq_children[infosets[i].parent_seq].push_back(i);
    }
}

std::vector<std::string> Treeplex::validate() const {
    std::vector<std::string> out;
    const int n = static_cast<int>(infosets.size());

    // Sequence ownership: the owned ranges must partition [1, num_sequences).
    std::vector<int> owner(num_sequences, -1);
    long long total_actions = 0;
    for (int i = 0; i < n; ++i) {
        const Infoset& I = infosets[i];
        if (I.num_actions <= 0) out.push_back("infoset " + std::to_string(i) + " has no actions");
        total_actions += I.num_actions;
        for (int a = 0; a < I.num_actions; ++a) {
            int s = I.first_seq + a;
            if (s <= 0 || s >= num_sequences) {
                out.push_back("infoset " + std::to_string(i) + " owns out-of-range sequence " +
                              std::to_string(s));
            } else if (owner[s] != -1) {
                out.push_back("sequence " + std::to_string(s) + " owned by infosets " +
                              std::to_string(owner[s]) + " and " + std::to_string(i));
            } else {
                owner[s] = i;
            }
        }
        if (I.parent_seq < 0 || I.parent_seq >= num_sequences) {
            out.push_back("infoset " + std::to_string(i) + " has invalid parent sequence " +
                          std::to_string(I.parent_seq));
        }
    }
    if (total_actions + 1 != num_sequences) {
        out.push_back("sequence count " + std::to_string(num_sequences) +
                      " != 1 + total actions " + std::to_string(total_actions));
    }
    for (int s = 1; s < num_sequences; ++s) {
        if (owner[s] == -1) out.push_back("sequence " + std::to_string(s) + " has no owner");
    }

    // Bottom-up ordering / acyclicity: the infoset owning parent_seq(I) must
    // come after I, and walking parent links must terminate at the root.
    for (int i = 0; i < n; ++i) {
        int ps = infosets[i].parent_seq;
        if (ps == 0) continue;
        if (ps < 0 || ps >= num_sequences || owner[ps] == -1) continue;  // already reported
        if (owner[ps] <= i) {
            out.push_back("infoset " + std::to_string(i) + " appears after its parent " +
                          std::to_string(owner[ps]) + " (ordering not bottom-up)");
        }
        int cur = i, steps = 0;
        while (infosets[cur].parent_seq != 0) {
            int o = owner[infosets[cur].parent_seq];
            if (o < 0) break;
            cur = o;
            if (++steps > n) {
                out.push_back("cycle in parent links reachable from infoset " + std::to_string(i));
                break;
            }
        }
    }
    return out;
}

BehaviorStrategy uniform_strategy(const Treeplex& t) {
    BehaviorStrategy sigma;
    sigma.probs.assign(t.num_sequences, 1.0);
    for (const Infoset& I : t.infosets) {
        double p = 1.0 / I.num_actions;
        for (int a = 0; a < I.num_actions; ++a) sigma.probs[I.first_seq + a] = p;
    }
    return sigma;
}

SequenceStrategy behavior_to_sequence(const Treeplex& t, const BehaviorStrategy& sigma) {
    if (sigma.probs.size() != static_cast<size_t>(t.num_sequences))
        throw std::invalid_argument("behavior strategy does not match treeplex");
    SequenceStrategy q;
    q.q.assign(t.num_sequences, 0.0);
    q.q[0] = 1.0;
    // Infosets are bottom-up; reverse order is top-down, so parents are filled
    // before their children are expanded.
    for (auto it = t.infosets.rbegin(); it != t.infosets.rend(); ++it) {
        double reach = q.q[it->parent_seq];
        for (int a = 0; a < it->num_actions; ++a)
            q.q[it->first_seq + a] = reach * sigma.probs[it->first_seq + a];
    }
    return q;
}

BehaviorStrategy sequence_to_behavior(const Treeplex& t, const SequenceStrategy& q) {
    if (q.q.size() != static_cast<size_t>(t.num_sequences))
        throw std::invalid_argument("sequence strategy does not match treeplex");
    BehaviorStrategy sigma;
    sigma.probs.assign(t.num_sequences, 1.0);
    for (const Infoset& I : t.infosets) {
        double reach = q.q[I.parent_seq];
        if (reach > 0.0) {
            double mass = 0.0;
            for (int a = 0; a < I.num_actions; ++a) mass += q.q[I.first_seq + a];
            if (std::abs(mass - reach) > kSimplexTol * std::max(1.0, reach))
                throw std::invalid_argument("flow conservation violated at infoset");
            for (int a = 0; a < I.num_actions; ++a)
                sigma.probs[I.first_seq + a] = q.q[I.first_seq + a] / reach;
        } else {
            double p = 1.0 / I.num_actions;
            for (int a = 0; a < I.num_actions; ++a) sigma.probs[I.first_seq + a] = p;
        }
    }
    return sigma;
}

void GameForm::finalize() {
    tp1.finalize();
    tp2.finalize();
    payoff1.assign(tp1.num_sequences, {});
    payoff2.assign(tp2.num_sequences, {});
    for (const PayoffEntry& e : entries) {
        payoff1[e.seq1].emplace_back(e.seq2, e.value);
        payoff2[e.seq2].emplace_back(e.seq1, -e.value);
    }
}

double GameForm::expected_value1(const SequenceStrategy& q1, const SequenceStrategy& q2) const {
    double v = 0.0;
    for (const PayoffEntry& e : entries) v += e.value * q1.q[e.seq1] * q2.q[e.seq2];
    return v;
}

}  // namespace rtsolve
