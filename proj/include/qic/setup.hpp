#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qic/channels.hpp"
#include "qic/povm.hpp"

namespace qic {

// One element A_a of a positive superoperator measure, acting as
// rho -> sum_i L_i rho R_i^dag, carried with its weight mu_a and a
// classical label.
struct PSMElement {
    std::string label;
    double weight;
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> ops;
};

// Positive superoperator measure: indexed family {A_a} with weights mu(da).
// Validated on construction: each element completely positive (element Choi
// PSD within -1e-9) and the total map sum_a mu_a A_a trace-preserving
// within 1e-9.
class PSM {
public:
    explicit PSM(std::vector<PSMElement> elements);

    const std::vector<PSMElement>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int d_in() const { return d_in_; }
    int d_out() const { return d_out_; }

    // A_a(rho), without the weight factor
    ComplexMatrix apply_element(int a, const ComplexMatrix& rho) const;
    // sum_a mu_a A_a(rho)
    ComplexMatrix apply_total(const ComplexMatrix& rho) const;
    // conjugate measure on an operator: sum_a mu_a sum_i L_i^dag X R_i
    ComplexMatrix adjoint_apply_total(const ComplexMatrix& x) const;

private:
    std::vector<PSMElement> elements_;
    int d_in_ = 0;
    int d_out_ = 0;
};

// Element a acts as rho -> E(U_a rho U_a^dag) with E an optional
// environment-averaging channel. Each U_a must be unitary within 1e-9 and
// the weights positive with sum 1.
PSM psm_from_unitary_family(const std::vector<ComplexMatrix>& unitaries,
                            const std::vector<double>& mu,
                            const std::optional<QuantumChannel>& env_average = std::nullopt,
                            const std::vector<std::string>& labels = {});

// Element a acts as rho -> |a><a| rho |a><a| with weight mu_a; requires the
// completeness sum mu_a |a><a| = I within 1e-9 (reports the deficit norm).
PSM psm_from_projectors(const std::vector<PureState>& states, const std::vector<double>& mu,
                        const std::vector<std::string>& labels = {});

// Projector PSM of a sphere measure's nodes lifted to one factor of a
// composite space: element a acts with |alpha_a><alpha_a| on `factor` and
// identity elsewhere, weight w_a.
PSM psm_from_sphere_measure_on_factor(const SphereMeasure& m, const DimensionList& dims,
                                      int factor);

struct ControlGrid {
    std::string name;
    std::vector<double> values;
};

// Preparation PSM -> channel -> measurement PSM, composed on rho_in.
struct SetupModel {
    PSM preparation;
    QuantumChannel channel;
    PSM measurement;
    DensityMatrix rho_in;
    std::vector<ControlGrid> controls;

    void validate() const;  // dimensional chain
};

// P(a,b) = Tr[B_b nu_b N(A_a mu_a rho_in)]; entries clamped to 0 above the
// -1e-12 rounding floor, total checked against 1 within 1e-9.
JointDistribution joint_readout_distribution(const SetupModel& s);

// Shannon mutual information of the readout distribution, in bits.
InfoValue information_capacity(const JointDistribution& p);

struct ControlOptimum {
    std::map<std::string, double> controls;
    InfoValue capacity;
};

using SetupBuilder = std::function<SetupModel(const std::map<std::string, double>&)>;

// Exhaustive evaluation of information_capacity over the cartesian product
// of the control grids (declared order, last control fastest); ties keep
// the first-encountered point.
ControlOptimum optimize_controls(const SetupModel& s, const SetupBuilder& builder);

}  // namespace qic
