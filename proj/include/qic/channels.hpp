#pragma once

#include <utility>
#include <vector>

#include "qic/states.hpp"

namespace qic {

// Completely positive trace-preserving map in Kraus form. Validated on
// construction: sum K_i^dag K_i = I within 1e-9 and Choi matrix PSD within
// -1e-9 on eigenvalues.
class QuantumChannel {
public:
    explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
    int d_in() const { return d_in_; }
    int d_out() const { return d_out_; }

private:
    std::vector<ComplexMatrix> kraus_;
    int d_in_ = 0;
    int d_out_ = 0;
};

// sum_i K_i rho K_i^dag
DensityMatrix apply(const QuantumChannel& n, const DensityMatrix& rho);

// (N (x) I) or (I (x) N) on a bipartite pure state; `acted` selects the
// factor the channel acts on. The acted dimension is replaced by d_out.
DensityMatrix apply_extended(const QuantumChannel& n, const PureState& psi, int acted);

// (N (x) I)|Omega><Omega| with |Omega> = sum_i |ii>/sqrt(d_in);
// dims [d_out, d_in], unit trace iff the map is trace-preserving.
ComplexMatrix choi(const QuantumChannel& n);

// Choi matrix of a general operator sum rho -> sum_i L_i rho R_i^dag.
// Hermitian iff the map preserves Hermiticity; PSD iff completely positive.
ComplexMatrix choi_of_pairs(const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& pairs,
                            int d_in);

// Smallest Choi eigenvalue of an operator-pair sum; CP iff >= -tol.
double min_choi_eigenvalue(const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& pairs,
                           int d_in);

// second channel after the first: Kraus set {K2_j K1_i}
QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first);

QuantumChannel identity_channel(int d);
QuantumChannel unitary_channel(const ComplexMatrix& u);
QuantumChannel depolarizing_channel();                 // qubit, rho -> I/2
QuantumChannel dephasing_channel();                    // Kraus {|0><0|, |1><1|}
QuantumChannel amplitude_damping_channel(double p);    // |1> decays with probability p

}  // namespace qic
