#include "qic/states.hpp"

#include <cmath>

#include "qic/errors.hpp"

namespace qic {

namespace {
constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-9;
constexpr double kTraceTol = 1e-9;
constexpr double kPsdTol = -1e-9;
}  // namespace

PureState::PureState(std::vector<cplx> amplitudes, DimensionList dims)
    : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
    if (dim_product(dims_) != static_cast<int>(amps_.size()))
        throw invariant_violation("pure state dims do not match amplitude count");
    double n2 = 0.0;
    for (const cplx& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
            throw invariant_violation("pure state amplitude is not finite");
        n2 += std::norm(a);
    }
    if (std::abs(n2 - 1.0) > kNormTol)
        throw invariant_violation("pure state is not normalized within 1e-12");
}

ComplexMatrix PureState::projector() const { return outer(amps_, amps_); }

DensityMatrix::DensityMatrix(ComplexMatrix matrix, DimensionList dims)
    : m_(std::move(matrix)), dims_(std::move(dims)) {
    if (!m_.is_square()) throw invariant_violation("density matrix must be square");
    if (dim_product(dims_) != m_.rows())
        throw invariant_violation("density matrix dims do not match matrix dimension");
    if (!m_.is_finite()) throw invariant_violation("density matrix contains non-finite entries");
    if (m_.hermiticity_defect() > kHermTol)
        throw invariant_violation("density matrix is not Hermitian within 1e-9");
    if (std::abs(m_.trace() - cplx(1.0, 0.0)) > kTraceTol)
        throw invariant_violation("density matrix trace differs from 1 by more than 1e-9");
    const EigenDecomposition e = hermitian_eig(m_);
    if (e.eigenvalues.back() < kPsdTol)
        throw invariant_violation("density matrix has an eigenvalue below -1e-9");
}

DensityMatrix::DensityMatrix(const PureState& psi) : DensityMatrix(psi.projector(), psi.dims()) {}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
    ComplexMatrix m = ComplexMatrix::identity(d);
    m *= cplx(1.0 / d, 0.0);
    return DensityMatrix(std::move(m), {d});
}

DensityMatrix DensityMatrix::reduce(const std::vector<int>& keep) const {
    DimensionList kept_dims;
    for (int k : keep) {
        if (k < 0 || k >= static_cast<int>(dims_.size()))
            throw invariant_violation("reduce keep index out of range");
        kept_dims.push_back(dims_[k]);
    }
    return DensityMatrix(partial_trace(m_, dims_, keep), kept_dims);
}

PureState purify(const DensityMatrix& rho) {
    const int d = rho.dim();
    const EigenDecomposition e = hermitian_eig(rho.matrix());
    std::vector<cplx> amps(static_cast<size_t>(d) * d, cplx(0.0, 0.0));
    for (int n = 0; n < d; ++n) {
        const double lambda = std::max(e.eigenvalues[n], 0.0);
        if (lambda == 0.0) continue;
        const double root = std::sqrt(lambda);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                amps[static_cast<size_t>(i) * d + j] += root * e.eigenvectors(i, n) * e.eigenvectors(j, n);
    }
    // roundoff from sqrt of near-unit eigenvalue sums; renormalize exactly
    double n2 = 0.0;
    for (const cplx& a : amps) n2 += std::norm(a);
    const double scale = 1.0 / std::sqrt(n2);
    for (cplx& a : amps) a *= scale;
    return PureState(std::move(amps), {d, d});
}

PureState bell_state(int k) {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<cplx> a(4, cplx(0.0, 0.0));
    switch (k) {
        case 0: a[1] = r; a[2] = -r; break;
        case 1: a[1] = r; a[2] = r; break;
        case 2: a[0] = r; a[3] = r; break;
        case 3: a[0] = r; a[3] = -r; break;
        default: throw invariant_violation("bell_state index must be in 0..3");
    }
    return PureState(std::move(a), {2, 2});
}

}  // namespace qic
