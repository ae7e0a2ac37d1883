#include "rtsolve/minimizers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rtsolve {

RegretState make_regret_state(int num_actions) {
    RegretState s;
    s.R.assign(num_actions, 0.0);
    s.r_prev.assign(num_actions, 0.0);
    return s;
}

std::vector<double> immediate_regret(std::span<const double> loss,
                                     std::span<const double> sigma) {
    if (loss.size() != sigma.size())
        throw std::invalid_argument("loss/strategy dimension mismatch");
    double expected = 0.0;
    for (size_t i = 0; i < loss.size(); ++i) expected += loss[i] * sigma[i];
    std::vector<double> r(loss.size());
    for (size_t i = 0; i < loss.size(); ++i) r[i] = expected - loss[i];
    return r;
}

double drm_discount(long t, double z) {
    if (std::isinf(z)) return z > 0 ? 1.0 : 0.0;
    double tz = std::pow(static_cast<double>(t), z);
    if (std::isinf(tz)) return 1.0;
    return tz / (tz + 1.0);
}

void accumulate(RegretState& state, std::span<const double> r, const MinimizerKind& kind) {
    if (r.size() != state.R.size())
        throw std::invalid_argument("regret dimension mismatch");
    for (double v : r)
        if (!std::isfinite(v)) throw std::invalid_argument("non-finite immediate regret");

    switch (kind.variant) {
        case Variant::RM:
            for (size_t i = 0; i < r.size(); ++i) state.R[i] += r[i];
            break;
        case Variant::RM_PLUS:
            for (size_t i = 0; i < r.size(); ++i) state.R[i] = std::max(state.R[i] + r[i], 0.0);
            break;
        case Variant::DRM: {
            // counter starts at 1 for the first call
            long t = state.t + 1;
            double wp = drm_discount(t, kind.alpha);
            double wn = drm_discount(t, kind.beta);
            for (size_t i = 0; i < r.size(); ++i) {
                double x = state.R[i] + r[i];
                state.R[i] = x > 0 ? wp * x : wn * x;
            }
            break;
        }
        case Variant::PRM_PLUS:
            for (size_t i = 0; i < r.size(); ++i) {
                state.R[i] = std::max(state.R[i] + r[i], 0.0);
                state.r_prev[i] = r[i];
            }
            break;
    }
    ++state.t;
}

std::vector<double> strategy_from_regret(const RegretState& state, const MinimizerKind& kind) {
    std::vector<double> sigma(state.R.size());
    double mass = 0.0;
    for (size_t i = 0; i < sigma.size(); ++i) {
        double v = state.R[i];
        if (kind.variant == Variant::PRM_PLUS) v += state.r_prev[i];
        sigma[i] = std::max(v, 0.0);
        mass += sigma[i];
    }
    if (mass > 0.0) {
        for (double& v : sigma) v /= mass;
    } else {
        std::fill(sigma.begin(), sigma.end(), 1.0 / sigma.size());
    }
    return sigma;
}

void omd_oracle_step(RegretState& state, std::span<const double> r, const MinimizerKind& kind,
                     double eta) {
    if (eta <= 0.0) throw std::invalid_argument("eta must be positive");
    switch (kind.variant) {
        case Variant::RM:
            for (size_t i = 0; i < r.size(); ++i) state.R[i] += eta * r[i];
            break;
        case Variant::RM_PLUS:
        case Variant::PRM_PLUS:
            for (size_t i = 0; i < r.size(); ++i)
                state.R[i] = std::max(state.R[i] + eta * r[i], 0.0);
            break;
        case Variant::DRM: {
            long t = state.t + 1;
            for (size_t i = 0; i < r.size(); ++i) {
                double x = state.R[i] + eta * r[i];
                state.R[i] = x > 0 ? drm_discount(t, kind.alpha) * x
                                   : drm_discount(t, kind.beta) * x;
            }
            break;
        }
    }
    ++state.t;
}

}  // namespace rtsolve
