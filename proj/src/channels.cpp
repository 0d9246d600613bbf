#include "qic/channels.hpp"

#include <cmath>

#include "qic/errors.hpp"

namespace qic {

namespace {
constexpr double kTpTol = 1e-9;
constexpr double kCpTol = -1e-9;
constexpr double kUnitaryTol = 1e-9;
}  // namespace

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
    if (kraus_.empty()) throw invariant_violation("channel needs at least one Kraus operator");
    d_out_ = kraus_.front().rows();
    d_in_ = kraus_.front().cols();
    for (const ComplexMatrix& k : kraus_) {
        if (k.rows() != d_out_ || k.cols() != d_in_)
            throw invariant_violation("Kraus operators have inconsistent shapes");
        if (!k.is_finite()) throw invariant_violation("Kraus operator contains non-finite entries");
    }

    ComplexMatrix sum = ComplexMatrix::zero(d_in_, d_in_);
    for (const ComplexMatrix& k : kraus_) sum += k.adjoint() * k;
    if (max_abs_diff(sum, ComplexMatrix::identity(d_in_)) > kTpTol)
        throw invariant_violation("channel is not trace-preserving within 1e-9");

    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pairs;
    pairs.reserve(kraus_.size());
    for (const ComplexMatrix& k : kraus_) pairs.emplace_back(k, k);
    if (min_choi_eigenvalue(pairs, d_in_) < kCpTol)
        throw invariant_violation("channel Choi matrix has an eigenvalue below -1e-9");
}

DensityMatrix apply(const QuantumChannel& n, const DensityMatrix& rho) {
    if (rho.dim() != n.d_in())
        throw invariant_violation("state dimension does not match channel input");
    ComplexMatrix out = ComplexMatrix::zero(n.d_out(), n.d_out());
    for (const ComplexMatrix& k : n.kraus()) out += k * rho.matrix() * k.adjoint();
    return DensityMatrix(std::move(out), {n.d_out()});
}

DensityMatrix apply_extended(const QuantumChannel& n, const PureState& psi, int acted) {
    const DimensionList& dims = psi.dims();
    if (dims.size() != 2) throw invariant_violation("apply_extended needs a bipartite state");
    if (acted != 0 && acted != 1) throw invariant_violation("acted subsystem index must be 0 or 1");
    if (dims[acted] != n.d_in())
        throw invariant_violation("acted subsystem dimension does not match channel input");

    const int spectator = dims[1 - acted];
    const ComplexMatrix id = ComplexMatrix::identity(spectator);
    DimensionList out_dims = dims;
    out_dims[acted] = n.d_out();
    const int out_dim = dim_product(out_dims);

    ComplexMatrix out = ComplexMatrix::zero(out_dim, out_dim);
    for (const ComplexMatrix& k : n.kraus()) {
        const ComplexMatrix ext = (acted == 0) ? kron(k, id) : kron(id, k);
        const std::vector<cplx> v = ext * psi.amplitudes();
        out += outer(v, v);
    }
    return DensityMatrix(std::move(out), out_dims);
}

ComplexMatrix choi_of_pairs(const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& pairs,
                            int d_in) {
    if (pairs.empty()) throw invariant_violation("empty operator-pair list");
    std::vector<cplx> omega(static_cast<size_t>(d_in) * d_in, cplx(0.0, 0.0));
    const double r = 1.0 / std::sqrt(static_cast<double>(d_in));
    for (int i = 0; i < d_in; ++i) omega[static_cast<size_t>(i) * d_in + i] = r;

    const int d_out = pairs.front().first.rows();
    const ComplexMatrix id = ComplexMatrix::identity(d_in);
    ComplexMatrix c = ComplexMatrix::zero(d_out * d_in, d_out * d_in);
    for (const auto& [l, rr] : pairs) {
        if (l.cols() != d_in || rr.cols() != d_in || l.rows() != d_out || rr.rows() != d_out)
            throw invariant_violation("operator-pair shapes inconsistent");
        const std::vector<cplx> lv = kron(l, id) * omega;
        const std::vector<cplx> rv = kron(rr, id) * omega;
        c += outer(lv, rv);
    }
    return c;
}

double min_choi_eigenvalue(const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& pairs,
                           int d_in) {
    const ComplexMatrix c = choi_of_pairs(pairs, d_in);
    if (c.hermiticity_defect() > 1e-9)
        throw invariant_violation("Choi matrix is not Hermitian; map does not preserve Hermiticity");
    const EigenDecomposition e = hermitian_eig(c);
    return e.eigenvalues.back();
}

ComplexMatrix choi(const QuantumChannel& n) {
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> pairs;
    pairs.reserve(n.kraus().size());
    for (const ComplexMatrix& k : n.kraus()) pairs.emplace_back(k, k);
    return choi_of_pairs(pairs, n.d_in());
}

QuantumChannel compose(const QuantumChannel& second, const QuantumChannel& first) {
    if (first.d_out() != second.d_in())
        throw invariant_violation("channel composition dimension mismatch");
    std::vector<ComplexMatrix> ks;
    ks.reserve(first.kraus().size() * second.kraus().size());
    for (const ComplexMatrix& k2 : second.kraus())
        for (const ComplexMatrix& k1 : first.kraus()) ks.push_back(k2 * k1);
    return QuantumChannel(std::move(ks));
}

QuantumChannel identity_channel(int d) { return QuantumChannel({ComplexMatrix::identity(d)}); }

QuantumChannel unitary_channel(const ComplexMatrix& u) {
    if (!u.is_square()) throw invariant_violation("unitary_channel needs a square matrix");
    if (max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) > kUnitaryTol)
        throw invariant_violation("matrix is not unitary within 1e-9");
    return QuantumChannel({u});
}

QuantumChannel depolarizing_channel() {
    const cplx half(0.5, 0.0);
    return QuantumChannel({half * ComplexMatrix::identity(2), half * sigma_x(),
                           half * sigma_y(), half * sigma_z()});
}

QuantumChannel dephasing_channel() {
    return QuantumChannel({ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}},
                           ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}});
}

QuantumChannel amplitude_damping_channel(double p) {
    if (p < 0.0 || p > 1.0) throw invariant_violation("decay probability must be in [0,1]");
    return QuantumChannel({ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}},
                           ComplexMatrix{{0.0, std::sqrt(p)}, {0.0, 0.0}}});
}

}  // namespace qic
