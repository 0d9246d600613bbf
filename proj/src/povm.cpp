#include "qic/povm.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qic/errors.hpp"

namespace qic {

namespace {
constexpr double kVolumeTol = 1e-9;
constexpr double kClampFloor = -1e-12;
}  // namespace

ComplexMatrix SphereMeasure::completeness_sum() const {
    ComplexMatrix s = ComplexMatrix::zero(dim, dim);
    for (int k = 0; k < size(); ++k) {
        ComplexMatrix p = nodes[k].projector();
        p *= cplx(weights[k], 0.0);
        s += p;
    }
    return s;
}

double SphereMeasure::completeness_defect() const {
    return max_abs_diff(completeness_sum(), ComplexMatrix::identity(dim));
}

void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    if (order < 1) throw invariant_violation("Gauss-Legendre order must be >= 1");
    nodes.assign(order, 0.0);
    weights.assign(order, 0.0);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration from the Chebyshev-like initial guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
}

SphereMeasure bloch_quadrature(int order) {
    if (order < 2) throw invariant_violation("bloch_quadrature order must be >= 2");
    std::vector<double> x, w;
    gauss_legendre(order, x, w);
    const int n_phi = 2 * order;

    SphereMeasure m;
    m.dim = 2;
    m.nodes.reserve(static_cast<size_t>(order) * n_phi);
    m.weights.reserve(static_cast<size_t>(order) * n_phi);
    for (int i = 0; i < order; ++i) {
        const double cos_half = std::sqrt((1.0 + x[i]) / 2.0);
        const double sin_half = std::sqrt((1.0 - x[i]) / 2.0);
        for (int j = 0; j < n_phi; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / n_phi;
            m.nodes.emplace_back(
                std::vector<cplx>{cplx(cos_half, 0.0), std::polar(sin_half, phi)},
                DimensionList{2});
            m.weights.push_back(w[i] / n_phi);
        }
    }
    return m;
}

SphereMeasure measure_from_states(std::vector<PureState> states, std::vector<double> weights,
                                  double tol) {
    if (states.empty() || states.size() != weights.size())
        throw invariant_violation("measure needs matching non-empty state and weight lists");
    SphereMeasure m;
    m.dim = states.front().dim();
    for (const PureState& s : states)
        if (s.dim() != m.dim) throw invariant_violation("measure states have mixed dimensions");
    for (double w : weights)
        if (!(w > 0.0)) throw invariant_violation("measure weights must be positive");
    m.nodes = std::move(states);
    m.weights = std::move(weights);

    const double defect = m.completeness_defect();
    if (defect > tol) {
        std::ostringstream os;
        os << "measure is not a decomposition of unity: deficit norm " << defect;
        throw invariant_violation(os.str());
    }
    return m;
}

SphereMeasure rotate_measure(const SphereMeasure& m, const ComplexMatrix& u) {
    if (u.rows() != m.dim || u.cols() != m.dim)
        throw invariant_violation("rotation dimension does not match measure");
    SphereMeasure out;
    out.dim = m.dim;
    out.weights = m.weights;
    out.nodes.reserve(m.nodes.size());
    for (const PureState& s : m.nodes)
        out.nodes.emplace_back(u * s.amplitudes(), s.dims());
    return out;
}

std::vector<double> state_distribution(const DensityMatrix& rho, const SphereMeasure& m) {
    if (rho.dim() != m.dim) throw invariant_violation("state dimension does not match measure");
    std::vector<double> p(m.nodes.size());
    for (size_t k = 0; k < m.nodes.size(); ++k) {
        const std::vector<cplx>& a = m.nodes[k].amplitudes();
        p[k] = inner(a, rho.matrix() * a).real() * m.weights[k];
        if (p[k] < 0.0 && p[k] >= kClampFloor) p[k] = 0.0;
    }
    return p;
}

std::vector<double> JointDistribution::marginal_a() const {
    std::vector<double> m(n_a, 0.0);
    for (int j = 0; j < n_a; ++j)
        for (int k = 0; k < n_b; ++k) m[j] += at(j, k);
    return m;
}

std::vector<double> JointDistribution::marginal_b() const {
    std::vector<double> m(n_b, 0.0);
    for (int j = 0; j < n_a; ++j)
        for (int k = 0; k < n_b; ++k) m[k] += at(j, k);
    return m;
}

JointDistribution joint_distribution(const DensityMatrix& rho_ab, const SphereMeasure& m_a,
                                     const SphereMeasure& m_b) {
    if (rho_ab.dims().size() != 2) throw invariant_violation("joint distribution needs a bipartite state");
    if (rho_ab.dims()[0] != m_a.dim || rho_ab.dims()[1] != m_b.dim)
        throw invariant_violation("measure dimensions do not match the state factors");

    JointDistribution d;
    d.n_a = m_a.size();
    d.n_b = m_b.size();
    d.weight_a = m_a.weights;
    d.weight_b = m_b.weights;
    d.p.resize(static_cast<size_t>(d.n_a) * d.n_b);

    const ComplexMatrix& rho = rho_ab.matrix();
    const int db = m_b.dim;
    for (int j = 0; j < d.n_a; ++j) {
        const std::vector<cplx>& a = m_a.nodes[j].amplitudes();
        // contract the A side once per row: M = <alpha_j| rho |alpha_j> on B
        ComplexMatrix mb = ComplexMatrix::zero(db, db);
        for (int r = 0; r < db; ++r)
            for (int c = 0; c < db; ++c) {
                cplx s = 0.0;
                for (int ia = 0; ia < m_a.dim; ++ia)
                    for (int ja = 0; ja < m_a.dim; ++ja)
                        s += std::conj(a[ia]) * rho(ia * db + r, ja * db + c) * a[ja];
                mb(r, c) = s;
            }
        for (int k = 0; k < d.n_b; ++k) {
            const std::vector<cplx>& b = m_b.nodes[k].amplitudes();
            double v = inner(b, mb * b).real() * m_a.weights[j] * m_b.weights[k];
            if (v < 0.0) {
                if (v < kClampFloor)
                    throw invariant_violation("joint probability below the -1e-12 clamp floor");
                v = 0.0;
                ++d.clamped_bins;
            }
            d.at(j, k) = v;
        }
    }

    double total = 0.0;
    for (double v : d.p) total += v;
    if (std::abs(total - 1.0) > kVolumeTol)
        throw invariant_violation("joint distribution total differs from 1 by more than 1e-9");
    for (double& v : d.p) v /= total;
    return d;
}

InfoValue mutual_information(const JointDistribution& d) {
    const std::vector<double> pa = d.marginal_a();
    const std::vector<double> pb = d.marginal_b();
    double s = 0.0;
    for (int j = 0; j < d.n_a; ++j)
        for (int k = 0; k < d.n_b; ++k) {
            const double pjk = d.at(j, k);
            if (pjk > 0.0) s += pjk * std::log2(pjk / (pa[j] * pb[k]));
        }
    return InfoValue(s);
}

InfoValue compatible_information(const DensityMatrix& rho_ab, const SphereMeasure& m_a,
                                 const SphereMeasure& m_b) {
    return mutual_information(joint_distribution(rho_ab, m_a, m_b));
}

double compatible_information_richardson(const DensityMatrix& rho_ab, int order) {
    if (order < 4 || order % 2 != 0)
        throw invariant_violation("Richardson extrapolation needs an even order >= 4");
    const SphereMeasure coarse = bloch_quadrature(order / 2);
    const SphereMeasure fine = bloch_quadrature(order);
    const double i_coarse = compatible_information(rho_ab, coarse, coarse).raw_bits;
    const double i_fine = compatible_information(rho_ab, fine, fine).raw_bits;
    return (16.0 * i_fine - i_coarse) / 15.0;
}

EpsilonOperator epsilon_operator(const SphereMeasure& m) {
    if (m.dim != 2) throw invariant_violation("epsilon operator is defined for qubit measures");
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix eps = ComplexMatrix::zero(4, 4);
    for (int k = 0; k < m.size(); ++k) {
        const ComplexMatrix p = m.nodes[k].projector();
        ComplexMatrix diff = kron(p, id) - kron(id, p);
        ComplexMatrix sq = diff * diff;
        sq *= cplx(m.weights[k] / 2.0, 0.0);
        eps += sq;
    }
    EpsilonOperator out;
    out.eigenvalues = hermitian_eig(eps).eigenvalues;
    out.matrix = std::move(eps);
    return out;
}

}  // namespace qic
