#pragma once

#include <vector>

#include "qic/eig.hpp"
#include "qic/matrix.hpp"

namespace qic {

// Normalized state vector over a (possibly composite) Hilbert space.
class PureState {
public:
    PureState(std::vector<cplx> amplitudes, DimensionList dims);

    const std::vector<cplx>& amplitudes() const { return amps_; }
    const DimensionList& dims() const { return dims_; }
    int dim() const { return static_cast<int>(amps_.size()); }

    ComplexMatrix projector() const;  // |psi><psi|

private:
    std::vector<cplx> amps_;
    DimensionList dims_;
};

// Hermitian, positive semidefinite, unit-trace operator. Validated on
// construction: Hermitian within 1e-9, trace 1 within 1e-9, smallest
// eigenvalue >= -1e-9.
class DensityMatrix {
public:
    DensityMatrix(ComplexMatrix matrix, DimensionList dims);
    explicit DensityMatrix(const PureState& psi);

    static DensityMatrix maximally_mixed(int d);

    const ComplexMatrix& matrix() const { return m_; }
    const DimensionList& dims() const { return dims_; }
    int dim() const { return m_.rows(); }

    // reduced state over the kept subsystems
    DensityMatrix reduce(const std::vector<int>& keep) const;

private:
    ComplexMatrix m_;
    DimensionList dims_;
};

// Canonical purification sum_n sqrt(lambda_n) |n>|n> over the descending
// eigenbasis; dims [d, d], tracing out the second factor returns rho.
PureState purify(const DensityMatrix& rho);

// k=0 singlet (|01>-|10>)/sqrt2; k=1 (|01>+|10>)/sqrt2;
// k=2 (|00>+|11>)/sqrt2;  k=3 (|00>-|11>)/sqrt2.
PureState bell_state(int k);

}  // namespace qic
