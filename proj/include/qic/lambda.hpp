#pragma once

#include <vector>

#include "qic/channels.hpp"
#include "qic/info.hpp"

namespace qic {

// Physical parameters of the Lambda-system qubit/photon-field channel: a
// three-level atom whose ground doublet |1>,|2> stores the qubit, excited
// by an impulsive pulse of action angle theta (effective Rabi frequency
// times pulse duration) and decaying into the field for a duration t.
// gamma1/gamma2 are the partial decay rates of the two transitions.
struct LambdaParams {
    double gamma1;
    double gamma2;
    double theta;  // radians, [0, 2pi]
    double t;      // free-decay duration, same time unit as 1/gamma

    double gamma_total() const { return gamma1 + gamma2; }
    double gamma_max() const { return gamma1 > gamma2 ? gamma1 : gamma2; }
    void validate() const;
};

// Channel from the ground doublet (d_in=2) to the photon field spanned by
// {|vac>, |1_1>, |1_2>} (d_out=3): impulsive excitation rotates the bright
// state (sqrt(g1)|1>+sqrt(g2)|2>)/sqrt(G) by theta into the excited level,
// a single spontaneous emission for time t transfers the excitation into
// the field, and the atom is traced out.
QuantumChannel lambda_channel(const LambdaParams& p);

// Two-level radiative system {ground, excited}: theta pulse, decay for the
// dimensionless time gamma_total*t, atom traced out. Output {|vac>, |1>}.
QuantumChannel two_level_channel(double theta, double gamma_total_t);

struct SurfacePoint {
    double gamma_t;  // dimensionless time, units of 1/max(gamma1,gamma2)
    double theta;
    double value;  // clamped coherent information, bits, input I/2
};

// Coherent-information surface over a (t, theta) grid for the maximum
// entropy input state; rows in row-major order, t outer.
std::vector<SurfacePoint> coherent_info_surface(const std::vector<double>& gamma_t_values,
                                                const std::vector<double>& theta_values,
                                                double gamma1, double gamma2);

struct SearchConfig {
    double t_max = 8.0;  // units of 1/max(gamma1,gamma2)
    int grid_t = 128;
    int grid_theta = 128;
    double rel_tol = 1e-4;

    void validate() const;
};

// Optimum of R = I_c/t over t in (0, t_max], theta in [0, 2pi].
struct RateResult {
    double rate;        // units of max(gamma1,gamma2)
    double rate_total;  // units of gamma1+gamma2 (the excited-state decay rate)
    double t_opt;       // units of 1/max(gamma1,gamma2)
    double theta_opt;
    double info_at_opt;     // bits
    bool two_level_limit;   // true when one partial rate is zero
};

// Coarse grid scan followed by coordinate-wise golden-section refinement,
// deterministic tie-breaking (smallest t, then smallest theta).
//
// When one partial rate vanishes the Lambda ground-doublet encoding is
// classical-quantum (every Kraus operator is supported on a single basis
// vector, so raw I_c <= 0 identically) and the system degenerates to a
// two-level radiative one; the optimum is then computed for the
// {ground, excited} encoding of the remaining transition.
RateResult optimal_rate(double gamma1, double gamma2, const SearchConfig& config = {});

}  // namespace qic
