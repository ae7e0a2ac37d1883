#include "rtsolve/controller.hpp"

#include <stdexcept>

namespace rtsolve {

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Exploit: return "exploit";
        case Phase::Keep: return "keep";
        case Phase::Explore: return "explore";
        case Phase::None: break;
    }
    return "";
}

PhaseEvent SccpController::tick(long t, const BehaviorStrategy& sigma1,
                                const BehaviorStrategy& sigma2,
                                const std::function<double()>& eps_fn) {
    PhaseEvent ev;
    ev.iteration = t;
    if (m_ <= 0 || t % m_ != 0) return ev;

    double eps = eps_fn();
    if (eps < -1e-9) throw std::runtime_error("controller received negative exploitability");
    ev.epsilon = eps;

    // priority: Exploit > Keep > Explore
    if (eps <= eps_min_ / 2.0) {
        eps_min_ = eps;
        w_ = 2.0;
        ev.phase = Phase::Exploit;
    } else if (eps <= eps_min_ && k_ >= T_) {
        eps_min_ = eps;
        w_ = 1.0;
        ev.phase = Phase::Keep;
    } else if (k_ >= 2 * T_) {
        w_ = 0.5;
        ev.phase = Phase::Explore;
    } else {
        return ev;
    }
    ref1_ = sigma1;
    ref2_ = sigma2;
    k_ = 0;
    ++n_;
    log_.push_back(ev);
    return ev;
}

bool halving_schedule_check(const std::vector<PhaseEvent>& log) {
    double prev = -1.0;
    for (const PhaseEvent& ev : log) {
        if (ev.phase != Phase::Exploit) continue;
        if (prev >= 0.0 && ev.epsilon > prev / 2.0) return false;
        prev = ev.epsilon;
    }
    return true;
}

}  // namespace rtsolve
