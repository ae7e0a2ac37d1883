#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rtsolve {

// One decision point of a player. Sequences owned by this infoset are the
// contiguous range [first_seq, first_seq + num_actions).
struct Infoset {
    int parent_seq = 0;   // sequence index of pI (0 = empty sequence)
    int first_seq = 0;
    int num_actions = 0;
};

// Sequence-form decision structure of one player. Infosets are stored
// bottom-up: every infoset appears after all infosets in its subtree, so a
// single forward pass over `infosets` is a valid bottom-up traversal.
struct Treeplex {
    int player = 1;  // 1 or 2
    std::vector<Infoset> infosets;
    int num_sequences = 1;  // 1 + sum |A(I)|; index 0 is the empty sequence

    // For each sequence s, the infoset ids whose parent sequence is s.
    // Built by finalize().
    std::vector<std::vector<int>> seq_children;

    int seq(int infoset, int action) const { return infosets[infoset].first_seq + action; }

    void finalize();

    // Reports every violated structural invariant; empty iff valid.
    std::vector<std::string> validate() const;
};

// Per-infoset simplexes, stored flat: probs[seq(I,a)] = sigma(I,a).
// probs[0] is unused and kept at 1.
struct BehaviorStrategy {
    std::vector<double> probs;

    std::span<double> at(const Treeplex& t, int infoset) {
        const Infoset& I = t.infosets[infoset];
        return {probs.data() + I.first_seq, static_cast<size_t>(I.num_actions)};
    }
    std::span<const double> at(const Treeplex& t, int infoset) const {
        const Infoset& I = t.infosets[infoset];
        return {probs.data() + I.first_seq, static_cast<size_t>(I.num_actions)};
    }
};

// Sequence-form strategy vector q with q[0] = 1 and, for every infoset I,
// sum_a q(Ia) = q(pI).
struct SequenceStrategy {
    std::vector<double> q;
};

BehaviorStrategy uniform_strategy(const Treeplex& t);
SequenceStrategy behavior_to_sequence(const Treeplex& t, const BehaviorStrategy& sigma);
// Unreached infosets (q(pI) = 0) map to the uniform distribution.
BehaviorStrategy sequence_to_behavior(const Treeplex& t, const SequenceStrategy& q);

inline constexpr double kSimplexTol = 1e-9;

// A terminal utility entry: u1(z) pre-multiplied by the chance reach of z,
// attached to the pair of player sequences leading to z. u2 = -u1.
struct PayoffEntry {
    int seq1 = 0;
    int seq2 = 0;
    double value = 0.0;
};

// Two treeplexes plus the sparse bilinear payoff for player 1.
struct GameForm {
    Treeplex tp1, tp2;
    std::vector<PayoffEntry> entries;

    // CSR-style view per player: for each own sequence, (opponent sequence,
    // utility for that player). Built by finalize().
    std::vector<std::vector<std::pair<int, double>>> payoff1;  // indexed by seq1, u1
    std::vector<std::vector<std::pair<int, double>>> payoff2;  // indexed by seq2, u2

    const Treeplex& treeplex(int player) const { return player == 1 ? tp1 : tp2; }
    Treeplex& treeplex(int player) { return player == 1 ? tp1 : tp2; }
    const std::vector<std::vector<std::pair<int, double>>>& payoff(int player) const {
        return player == 1 ? payoff1 : payoff2;
    }

    void finalize();

    // <q1, U q2> for player 1 over the sparse entries.
    double expected_value1(const SequenceStrategy& q1, const SequenceStrategy& q2) const;
};

}  // namespace rtsolve
