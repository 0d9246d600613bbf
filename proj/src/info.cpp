#include "qic/info.hpp"

#include <cmath>

#include "qic/errors.hpp"

namespace qic {

namespace {
constexpr double kEigFloor = 1e-12;

void require_bipartite(const DensityMatrix& rho) {
    if (rho.dims().size() != 2) throw invariant_violation("state is not bipartite");
}
}  // namespace

double shannon_entropy_bits(const std::vector<double>& p) {
    double s = 0.0;
    for (double x : p)
        if (x > 0.0) s -= x * std::log2(x);
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const EigenDecomposition e = hermitian_eig(rho.matrix());
    double s = 0.0;
    for (double lambda : e.eigenvalues)
        if (lambda >= kEigFloor) s -= lambda * std::log2(lambda);
    if (s < 0.0) s = 0.0;
    const double cap = std::log2(static_cast<double>(rho.dim()));
    return s < cap ? s : cap;
}

InfoValue quantum_mutual_information(const DensityMatrix& rho_ab) {
    require_bipartite(rho_ab);
    const double sa = von_neumann_entropy(rho_ab.reduce({0}));
    const double sb = von_neumann_entropy(rho_ab.reduce({1}));
    const double sab = von_neumann_entropy(rho_ab);
    return InfoValue(sa + sb - sab);
}

double entropy_exchange(const QuantumChannel& n, const DensityMatrix& rho_a) {
    const DensityMatrix joint = apply_extended(n, purify(rho_a), 0);
    return von_neumann_entropy(joint);
}

InfoValue coherent_information(const QuantumChannel& n, const DensityMatrix& rho_a) {
    const double s_out = von_neumann_entropy(apply(n, rho_a));
    return InfoValue(s_out - entropy_exchange(n, rho_a));
}

InfoValue one_time_coherent_information(const DensityMatrix& rho_ab) {
    require_bipartite(rho_ab);
    const double sb = von_neumann_entropy(rho_ab.reduce({1}));
    const double sab = von_neumann_entropy(rho_ab);
    return InfoValue(sb - sab);
}

}  // namespace qic
