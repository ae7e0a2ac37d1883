#pragma once

#include "rtsolve/treeplex.hpp"

namespace rtsolve {

struct BestResponse {
    double value = 0.0;       // max over own sequence strategies of expected utility
    BehaviorStrategy sigma;   // a pure strategy attaining it (lowest-index ties)
};

struct ExploitabilityReport {
    double epsilon = 0.0;
    double br_value1 = 0.0;  // max_{q1'} <q1', U q2>
    double br_value2 = 0.0;  // max_{q2'} u2(q1, q2')
};

BestResponse best_response(const GameForm& g, int player, const SequenceStrategy& q_opp);
double best_response_value(const GameForm& g, int player, const SequenceStrategy& q_opp);

ExploitabilityReport exploitability(const GameForm& g, const SequenceStrategy& q1,
                                    const SequenceStrategy& q2);

// l2 distances. The weighted sequence variant scales each infoset block by
// the given reach weights (q(pI)).
double behavior_distance(const BehaviorStrategy& a, const BehaviorStrategy& b);
double strategy_distance(const SequenceStrategy& a, const SequenceStrategy& b);
double weighted_strategy_distance(const Treeplex& t, const SequenceStrategy& weights,
                                  const BehaviorStrategy& a, const BehaviorStrategy& b);

}  // namespace rtsolve
