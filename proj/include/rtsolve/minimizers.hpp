#pragma once

#include <span>
#include <vector>

namespace rtsolve {

enum class Variant { RM, RM_PLUS, DRM, PRM_PLUS };

// Local regret minimizer selection. For DRM, alpha >= beta; +/-infinity are
// legal and mean discount weight 1 / 0 respectively.
struct MinimizerKind {
    Variant variant = Variant::RM_PLUS;
    double alpha = 0.0;
    double beta = 0.0;

    static MinimizerKind rm() { return {Variant::RM}; }
    static MinimizerKind rm_plus() { return {Variant::RM_PLUS}; }
    static MinimizerKind drm(double alpha, double beta) { return {Variant::DRM, alpha, beta}; }
    static MinimizerKind prm_plus() { return {Variant::PRM_PLUS}; }
};

struct RegretState {
    std::vector<double> R;       // cumulative regret per action
    std::vector<double> r_prev;  // last immediate regret (PRM+ prediction)
    long t = 0;                  // completed accumulate calls
};

RegretState make_regret_state(int num_actions);

// r = <l, sigma> 1 - l. Satisfies <r, sigma> = 0.
std::vector<double> immediate_regret(std::span<const double> loss, std::span<const double> sigma);

void accumulate(RegretState& state, std::span<const double> r, const MinimizerKind& kind);

// Normalized positive part of R (of R + r_prev for PRM+); uniform when the
// positive part vanishes.
std::vector<double> strategy_from_regret(const RegretState& state, const MinimizerKind& kind);

// Closed-form mirror-descent update over the regret state; with eta = 1 it
// coincides with accumulate for RM, RM+ and DRM. Kept as an independent test
// oracle for the equivalence property.
void omd_oracle_step(RegretState& state, std::span<const double> r, const MinimizerKind& kind,
                     double eta);

// Discount factor t^z / (t^z + 1) with the +/-infinity conventions.
double drm_discount(long t, double z);

}  // namespace rtsolve
