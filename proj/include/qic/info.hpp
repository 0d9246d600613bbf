#pragma once

#include "qic/channels.hpp"
#include "qic/states.hpp"

namespace qic {

// Information quantity in bits. Negative values are meaningful (entropy
// exchange exceeding the transmitted information) and always reported;
// clamped_bits = max(raw_bits, 0) is the usable amount.
struct InfoValue {
    double raw_bits;
    double clamped_bits;

    explicit InfoValue(double raw) : raw_bits(raw), clamped_bits(raw > 0.0 ? raw : 0.0) {}
};

// -sum lambda_n log2 lambda_n; eigenvalues below 1e-12 contribute 0.
double von_neumann_entropy(const DensityMatrix& rho);

// S(rho_A) + S(rho_B) - S(rho_AB) for a bipartite state.
InfoValue quantum_mutual_information(const DensityMatrix& rho_ab);

// S[(N (x) I)|Psi_AR><Psi_AR|] with Psi_AR the canonical purification of rho_a.
double entropy_exchange(const QuantumChannel& n, const DensityMatrix& rho_a);

// S(N(rho_a)) minus the entropy exchange.
InfoValue coherent_information(const QuantumChannel& n, const DensityMatrix& rho_a);

// S(rho_B) - S(rho_AB); subsystem 0 is the reference A, subsystem 1 the
// output B. Negative raw values signal purely classical correlations.
InfoValue one_time_coherent_information(const DensityMatrix& rho_ab);

// Shannon entropy in bits of a non-negative weight vector (normalized by
// the caller); zero entries contribute 0.
double shannon_entropy_bits(const std::vector<double>& p);

}  // namespace qic
