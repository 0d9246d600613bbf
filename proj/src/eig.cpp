#include "qic/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qic/errors.hpp"

namespace qic {

namespace {

constexpr double kHermTol = 1e-9;
constexpr double kStopFactor = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.rows(); ++p)
        for (int q = 0; q < a.cols(); ++q)
            if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
}

// One two-sided rotation U^dagger A U zeroing A(p,q), with
// U(p,p)=c, U(p,q)=s*phase, U(q,p)=-s*conj(phase), U(q,q)=c.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const cplx apq = a(p, q);
    const double absA = std::abs(apq);
    if (absA == 0.0) return;
    const cplx phase = apq / absA;

    const double alpha = a(p, p).real();
    const double beta = a(q, q).real();
    const double tau = (beta - alpha) / (2.0 * absA);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.rows();
    for (int i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        const cplx aip = a(i, p);
        const cplx aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(phase) * aiq;
        a(i, q) = s * phase * aip + c * aiq;
        a(p, i) = std::conj(a(i, p));
        a(q, i) = std::conj(a(i, q));
    }
    a(p, p) = alpha * c * c + beta * s * s - 2.0 * c * s * absA;
    a(q, q) = alpha * s * s + beta * c * c + 2.0 * c * s * absA;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (int i = 0; i < n; ++i) {
        const cplx vip = v(i, p);
        const cplx viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(phase) * viq;
        v(i, q) = s * phase * vip + c * viq;
    }
}

void phase_fix_columns(ComplexMatrix& v) {
    const int n = v.rows();
    for (int col = 0; col < n; ++col) {
        int imax = 0;
        double amax = -1.0;
        for (int i = 0; i < n; ++i) {
            const double a = std::abs(v(i, col));
            if (a > amax) {
                amax = a;
                imax = i;
            }
        }
        if (amax <= 0.0) continue;
        const cplx z = v(imax, col);
        const cplx phase = std::conj(z) / std::abs(z);
        for (int i = 0; i < n; ++i) v(i, col) *= phase;
    }
}

bool column_lex_less(const ComplexMatrix& v, int a, int b) {
    for (int i = 0; i < v.rows(); ++i) {
        const cplx& x = v(i, a);
        const cplx& y = v(i, b);
        if (x.real() != y.real()) return x.real() < y.real();
        if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
}

}  // namespace

ComplexMatrix EigenDecomposition::reconstruct() const {
    const int n = eigenvectors.rows();
    ComplexMatrix scaled = eigenvectors;
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) scaled(r, c) *= eigenvalues[c];
    return scaled * eigenvectors.adjoint();
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
    if (!m.is_square()) throw invariant_violation("hermitian_eig needs a square matrix");
    if (!m.is_finite()) throw invariant_violation("hermitian_eig input contains non-finite entries");
    if (m.hermiticity_defect() > kHermTol)
        throw invariant_violation("hermitian_eig input is not Hermitian within 1e-9");

    const int n = m.rows();
    // symmetrize away representation roundoff before iterating
    ComplexMatrix a(n, n);
    for (int r = 0; r < n; ++r) {
        a(r, r) = m(r, r).real();
        for (int c = r + 1; c < n; ++c) {
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
            a(c, r) = std::conj(a(r, c));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double stop = kStopFactor * m.frobenius_norm();
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= stop) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    if (!converged && off_diagonal_norm(a) > stop)
        throw convergence_error("Jacobi diagonalization did not converge in 100 sweeps");

    phase_fix_columns(v);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        const double li = a(i, i).real();
        const double lj = a(j, j).real();
        if (li != lj) return li > lj;
        return column_lex_less(v, i, j);
    });

    EigenDecomposition d;
    d.eigenvalues.resize(n);
    d.eigenvectors = ComplexMatrix(n, n);
    for (int c = 0; c < n; ++c) {
        d.eigenvalues[c] = a(order[c], order[c]).real();
        for (int r = 0; r < n; ++r) d.eigenvectors(r, c) = v(r, order[c]);
    }
    return d;
}

}  // namespace qic
