#pragma once

#include <vector>

#include "qic/matrix.hpp"

namespace qic {

// Spectral decomposition m = V diag(eigenvalues) V^dagger with eigenvalues
// sorted descending and eigenvector columns permuted in lockstep.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;  // unitary; column n pairs with eigenvalues[n]

    ComplexMatrix reconstruct() const;
};

// Cyclic Jacobi diagonalization of a Hermitian matrix (Hermitian within
// 1e-9 in max-norm; throws invariant_violation otherwise). Sweeps until the
// off-diagonal Frobenius norm drops below 1e-14*||m||_F; throws
// convergence_error after 100 sweeps.
//
// Determinism conventions: each eigenvector's largest-magnitude component
// (first such index on ties) is phase-fixed to be real positive, and equal
// eigenvalues are ordered by lexicographic comparison of the phase-fixed
// column entries.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

}  // namespace qic
