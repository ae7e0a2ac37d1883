#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rtsolve/treeplex.hpp"

namespace rtsolve {

enum class Phase { None, Exploit, Keep, Explore };

const char* phase_name(Phase p);

struct PhaseEvent {
    long iteration = 0;
    Phase phase = Phase::None;
    double epsilon = 0.0;
};

// Adaptive reference/weight controller. The counter k is in player-update
// units: the run loop advances it once per player update (twice per
// iteration), so T and 2T thresholds are measured in half-iterations. A
// per-iteration counting mode is available for comparison.
class SccpController {
public:
    SccpController(BehaviorStrategy ref1, BehaviorStrategy ref2, double initial_epsilon,
                   long T, long m)
        : ref1_(std::move(ref1)),
          ref2_(std::move(ref2)),
          eps_min_(initial_epsilon),
          T_(T),
          m_(m) {}

    // Called after each full iteration t; eps_fn is evaluated only when
    // t mod m == 0. On a transition the reference is replaced by the given
    // current profile and the returned event is non-None.
    PhaseEvent tick(long t, const BehaviorStrategy& sigma1, const BehaviorStrategy& sigma2,
                    const std::function<double()>& eps_fn);

    void count_player_update() { ++k_; }

    const BehaviorStrategy& reference(int player) const { return player == 1 ? ref1_ : ref2_; }
    double w() const { return w_; }
    double eps_min() const { return eps_min_; }
    long k() const { return k_; }
    long sccp_index() const { return n_; }
    const std::vector<PhaseEvent>& phase_log() const { return log_; }

private:
    BehaviorStrategy ref1_, ref2_;
    double eps_min_;
    long T_;
    long m_;
    double w_ = 1.0;
    long k_ = 0;
    long n_ = 1;
    std::vector<PhaseEvent> log_;
};

// True iff every consecutive pair of Exploit events satisfies the halving
// inequality eps_j <= eps_{j-1} / 2.
bool halving_schedule_check(const std::vector<PhaseEvent>& log);

}  // namespace rtsolve
