#pragma once

#include <vector>

#include "qic/info.hpp"
#include "qic/states.hpp"

namespace qic {

// Discretization of the projective measure E(d alpha) = |alpha><alpha| dV
// over a Hilbert space's pure-state manifold: sample states |alpha_k> with
// volume weights w_k, sum w_k = D (the total volume equals the dimension)
// and sum w_k |alpha_k><alpha_k| = I.
struct SphereMeasure {
    std::vector<PureState> nodes;
    std::vector<double> weights;
    int dim;

    int size() const { return static_cast<int>(nodes.size()); }
    // sum_k w_k |alpha_k><alpha_k|
    ComplexMatrix completeness_sum() const;
    // deviation of the completeness sum from the identity (max-norm)
    double completeness_defect() const;
};

// Gauss-Legendre nodes/weights for integration over [-1,1].
void gauss_legendre(int order, std::vector<double>& nodes, std::vector<double>& weights);

// Bloch-sphere product rule: Gauss-Legendre of the given order in
// cos(theta) times a uniform grid of 2*order points in phi, nodes
// |alpha> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, weights summing
// to D = 2. Exact for integrands polynomial in the Bloch vector up to
// degree 2*order-1 (polar) and harmonics below 2*order (azimuthal).
SphereMeasure bloch_quadrature(int order);

// Measure made of explicit states with explicit weights; validates the
// completeness sum within tol and reports the deficit norm on failure.
SphereMeasure measure_from_states(std::vector<PureState> states, std::vector<double> weights,
                                  double tol = 1e-9);

// Measure with every node transformed by the same unitary.
SphereMeasure rotate_measure(const SphereMeasure& m, const ComplexMatrix& u);

// p_k = <alpha_k| rho |alpha_k> w_k
std::vector<double> state_distribution(const DensityMatrix& rho, const SphereMeasure& m);

// Discrete joint outcome distribution of two measures on a bipartite state.
struct JointDistribution {
    std::vector<double> p;  // row-major, n_a x n_b, sums to 1
    int n_a = 0;
    int n_b = 0;
    std::vector<double> weight_a;  // measure volume weights, for reference
    std::vector<double> weight_b;
    int clamped_bins = 0;  // entries in [-1e-12, 0) that were clamped to 0

    double& at(int j, int k) { return p[static_cast<size_t>(j) * n_b + k]; }
    double at(int j, int k) const { return p[static_cast<size_t>(j) * n_b + k]; }
    std::vector<double> marginal_a() const;
    std::vector<double> marginal_b() const;
};

// P_jk = <alpha_j beta_k| rho_AB |alpha_j beta_k> w_j w_k, normalized to 1.
JointDistribution joint_distribution(const DensityMatrix& rho_ab, const SphereMeasure& m_a,
                                     const SphereMeasure& m_b);

// Shannon mutual information of a JointDistribution, in bits.
InfoValue mutual_information(const JointDistribution& d);

// Mutual information of the two measures' outcomes on rho_ab (the
// discretized compatible-information measure).
InfoValue compatible_information(const DensityMatrix& rho_ab, const SphereMeasure& m_a,
                                 const SphereMeasure& m_b);

// Richardson extrapolation (16 I(order) - I(order/2))/15 of the
// Bloch-quadrature compatible information; the quadrature error of the
// sphere rule decays like order^-4 for the log-singular mutual-information
// integrand, so this removes the leading term. order must be even, >= 4.
double compatible_information_richardson(const DensityMatrix& rho_ab, int order);

// Bloch average of the squared projector difference between two qubits,
// sum_k (w_k/2) (P_k (x) I - I (x) P_k)^2; spectrum {1, 1/3, 1/3, 1/3} with
// the singlet carrying eigenvalue 1.
struct EpsilonOperator {
    ComplexMatrix matrix;             // 4x4 Hermitian
    std::vector<double> eigenvalues;  // descending
};
EpsilonOperator epsilon_operator(const SphereMeasure& m);

}  // namespace qic
