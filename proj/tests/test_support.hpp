#pragma once

#include <random>
#include <vector>

#include "qic/channels.hpp"
#include "qic/matrix.hpp"
#include "qic/states.hpp"

namespace qic::test {

inline cplx random_cplx(std::mt19937& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng)};
}

inline ComplexMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = random_cplx(rng);
    return m;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, int n) {
    const ComplexMatrix g = random_matrix(rng, n, n);
    ComplexMatrix h = g + g.adjoint();
    h *= cplx(0.5, 0.0);
    return h;
}

inline DensityMatrix random_density(std::mt19937& rng, int n, DimensionList dims = {}) {
    const ComplexMatrix g = random_matrix(rng, n, n);
    ComplexMatrix w = g * g.adjoint();
    w *= cplx(1.0, 0.0) / w.trace();
    if (dims.empty()) dims = {n};
    return DensityMatrix(std::move(w), std::move(dims));
}

inline PureState random_pure(std::mt19937& rng, int n, DimensionList dims = {}) {
    std::vector<cplx> a(n);
    double norm2 = 0.0;
    for (cplx& z : a) {
        z = random_cplx(rng);
        norm2 += std::norm(z);
    }
    const double s = 1.0 / std::sqrt(norm2);
    for (cplx& z : a) z *= s;
    if (dims.empty()) dims = {n};
    return PureState(std::move(a), std::move(dims));
}

// Gram-Schmidt on Gaussian columns: Haar-like, exactly unitary to roundoff.
inline ComplexMatrix random_unitary(std::mt19937& rng, int n) {
    ComplexMatrix g = random_matrix(rng, n, n);
    for (int c = 0; c < n; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            cplx overlap = 0.0;
            for (int r = 0; r < n; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
            for (int r = 0; r < n; ++r) g(r, c) -= overlap * g(r, prev);
        }
        double norm2 = 0.0;
        for (int r = 0; r < n; ++r) norm2 += std::norm(g(r, c));
        const double s = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < n; ++r) g(r, c) *= s;
    }
    return g;
}

// Random Stinespring isometry chopped into n_kraus blocks of shape
// d_out x d_in; trace-preserving and completely positive by construction.
inline QuantumChannel random_channel(std::mt19937& rng, int d_in, int d_out, int n_kraus) {
    const int big = d_out * n_kraus;
    ComplexMatrix iso = random_matrix(rng, big, d_in);
    for (int c = 0; c < d_in; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            cplx overlap = 0.0;
            for (int r = 0; r < big; ++r) overlap += std::conj(iso(r, prev)) * iso(r, c);
            for (int r = 0; r < big; ++r) iso(r, c) -= overlap * iso(r, prev);
        }
        double norm2 = 0.0;
        for (int r = 0; r < big; ++r) norm2 += std::norm(iso(r, c));
        const double s = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < big; ++r) iso(r, c) *= s;
    }
    std::vector<ComplexMatrix> ks;
    for (int e = 0; e < n_kraus; ++e) {
        ComplexMatrix k(d_out, d_in);
        for (int r = 0; r < d_out; ++r)
            for (int c = 0; c < d_in; ++c) k(r, c) = iso(e * d_out + r, c);
        ks.push_back(std::move(k));
    }
    return QuantumChannel(std::move(ks));
}

}  // namespace qic::test
