#include "qic/setup.hpp"

#include <cmath>
#include <sstream>

#include "qic/errors.hpp"

namespace qic {

namespace {
constexpr double kTol = 1e-9;
constexpr double kClampFloor = -1e-12;

std::string auto_label(const std::vector<std::string>& labels, size_t i, const char* prefix) {
    if (i < labels.size()) return labels[i];
    return prefix + std::to_string(i);
}
}  // namespace

PSM::PSM(std::vector<PSMElement> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw invariant_violation("PSM needs at least one element");
    if (elements_.front().ops.empty()) throw invariant_violation("PSM element has no operators");
    d_out_ = elements_.front().ops.front().first.rows();
    d_in_ = elements_.front().ops.front().first.cols();

    for (const PSMElement& e : elements_) {
        if (!(e.weight > 0.0)) throw invariant_violation("PSM weights must be positive");
        if (e.ops.empty()) throw invariant_violation("PSM element has no operators");
        for (const auto& [l, r] : e.ops)
            if (l.rows() != d_out_ || l.cols() != d_in_ || r.rows() != d_out_ || r.cols() != d_in_)
                throw invariant_violation("PSM element operator shapes are inconsistent");
        if (min_choi_eigenvalue(e.ops, d_in_) < -kTol)
            throw invariant_violation("PSM element '" + e.label + "' is not completely positive");
    }

    // trace form of total trace preservation: sum mu_a sum_i R_i^dag L_i = I
    ComplexMatrix total = ComplexMatrix::zero(d_in_, d_in_);
    for (const PSMElement& e : elements_)
        for (const auto& [l, r] : e.ops) {
            ComplexMatrix term = r.adjoint() * l;
            term *= cplx(e.weight, 0.0);
            total += term;
        }
    if (max_abs_diff(total, ComplexMatrix::identity(d_in_)) > kTol)
        throw invariant_violation("PSM total map is not trace-preserving within 1e-9");
}

ComplexMatrix PSM::apply_element(int a, const ComplexMatrix& rho) const {
    const PSMElement& e = elements_.at(a);
    ComplexMatrix out = ComplexMatrix::zero(d_out_, d_out_);
    for (const auto& [l, r] : e.ops) out += l * rho * r.adjoint();
    return out;
}

ComplexMatrix PSM::apply_total(const ComplexMatrix& rho) const {
    ComplexMatrix out = ComplexMatrix::zero(d_out_, d_out_);
    for (int a = 0; a < size(); ++a) {
        ComplexMatrix term = apply_element(a, rho);
        term *= cplx(elements_[a].weight, 0.0);
        out += term;
    }
    return out;
}

ComplexMatrix PSM::adjoint_apply_total(const ComplexMatrix& x) const {
    ComplexMatrix out = ComplexMatrix::zero(d_in_, d_in_);
    for (const PSMElement& e : elements_)
        for (const auto& [l, r] : e.ops) {
            ComplexMatrix term = l.adjoint() * x * r;
            term *= cplx(e.weight, 0.0);
            out += term;
        }
    return out;
}

PSM psm_from_unitary_family(const std::vector<ComplexMatrix>& unitaries,
                            const std::vector<double>& mu,
                            const std::optional<QuantumChannel>& env_average,
                            const std::vector<std::string>& labels) {
    if (unitaries.empty() || unitaries.size() != mu.size())
        throw invariant_violation("unitary family and weights must match and be non-empty");
    double total = 0.0;
    for (double w : mu) {
        if (!(w > 0.0)) throw invariant_violation("PSM weights must be positive");
        total += w;
    }
    if (std::abs(total - 1.0) > kTol)
        throw invariant_violation("unitary-family weights must sum to 1");

    const int d = unitaries.front().rows();
    std::vector<PSMElement> elems;
    for (size_t a = 0; a < unitaries.size(); ++a) {
        const ComplexMatrix& u = unitaries[a];
        if (!u.is_square() || u.rows() != d)
            throw invariant_violation("unitary family has mixed dimensions");
        if (max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(d)) > kTol)
            throw invariant_violation("family member is not unitary within 1e-9");
        PSMElement e;
        e.label = auto_label(labels, a, "a");
        e.weight = mu[a];
        if (env_average) {
            if (env_average->d_in() != d)
                throw invariant_violation("environment channel dimension mismatch");
            for (const ComplexMatrix& f : env_average->kraus()) e.ops.emplace_back(f * u, f * u);
        } else {
            e.ops.emplace_back(u, u);
        }
        elems.push_back(std::move(e));
    }
    return PSM(std::move(elems));
}

PSM psm_from_projectors(const std::vector<PureState>& states, const std::vector<double>& mu,
                        const std::vector<std::string>& labels) {
    if (states.empty() || states.size() != mu.size())
        throw invariant_violation("projector family and weights must match and be non-empty");
    const int d = states.front().dim();
    ComplexMatrix sum = ComplexMatrix::zero(d, d);
    for (size_t a = 0; a < states.size(); ++a) {
        if (states[a].dim() != d) throw invariant_violation("projector family has mixed dimensions");
        if (!(mu[a] > 0.0)) throw invariant_violation("PSM weights must be positive");
        ComplexMatrix p = states[a].projector();
        p *= cplx(mu[a], 0.0);
        sum += p;
    }
    const double defect = max_abs_diff(sum, ComplexMatrix::identity(d));
    if (defect > kTol) {
        std::ostringstream os;
        os << "projector family is not a decomposition of unity: deficit norm " << defect;
        throw invariant_violation(os.str());
    }

    std::vector<PSMElement> elems;
    for (size_t a = 0; a < states.size(); ++a) {
        PSMElement e;
        e.label = auto_label(labels, a, "a");
        e.weight = mu[a];
        const ComplexMatrix p = states[a].projector();
        e.ops.emplace_back(p, p);
        elems.push_back(std::move(e));
    }
    return PSM(std::move(elems));
}

PSM psm_from_sphere_measure_on_factor(const SphereMeasure& m, const DimensionList& dims,
                                      int factor) {
    if (factor < 0 || factor >= static_cast<int>(dims.size()))
        throw invariant_violation("factor index out of range");
    if (dims[factor] != m.dim)
        throw invariant_violation("measure dimension does not match the chosen factor");

    int left = 1, right = 1;
    for (int i = 0; i < factor; ++i) left *= dims[i];
    for (int i = factor + 1; i < static_cast<int>(dims.size()); ++i) right *= dims[i];
    const ComplexMatrix id_l = ComplexMatrix::identity(left);
    const ComplexMatrix id_r = ComplexMatrix::identity(right);

    std::vector<PSMElement> elems;
    for (int a = 0; a < m.size(); ++a) {
        PSMElement e;
        e.label = "a" + std::to_string(a);
        e.weight = m.weights[a];
        const ComplexMatrix p = kron(kron(id_l, m.nodes[a].projector()), id_r);
        e.ops.emplace_back(p, p);
        elems.push_back(std::move(e));
    }
    return PSM(std::move(elems));
}

void SetupModel::validate() const {
    if (rho_in.dim() != preparation.d_in())
        throw invariant_violation("input state does not match preparation dimension");
    if (preparation.d_out() != channel.d_in())
        throw invariant_violation("preparation output does not match channel input");
    if (channel.d_out() != measurement.d_in())
        throw invariant_violation("channel output does not match measurement input");
}

JointDistribution joint_readout_distribution(const SetupModel& s) {
    s.validate();
    JointDistribution d;
    d.n_a = s.preparation.size();
    d.n_b = s.measurement.size();
    for (const PSMElement& e : s.preparation.elements()) d.weight_a.push_back(e.weight);
    for (const PSMElement& e : s.measurement.elements()) d.weight_b.push_back(e.weight);
    d.p.resize(static_cast<size_t>(d.n_a) * d.n_b);

    for (int a = 0; a < d.n_a; ++a) {
        // mu_a A_a(rho_in) through the channel once per row
        ComplexMatrix prepared = s.preparation.apply_element(a, s.rho_in.matrix());
        prepared *= cplx(s.preparation.elements()[a].weight, 0.0);
        ComplexMatrix sent = ComplexMatrix::zero(s.channel.d_out(), s.channel.d_out());
        for (const ComplexMatrix& k : s.channel.kraus()) sent += k * prepared * k.adjoint();

        for (int b = 0; b < d.n_b; ++b) {
            const double nu = s.measurement.elements()[b].weight;
            double v = (s.measurement.apply_element(b, sent).trace() * nu).real();
            if (v < 0.0) {
                if (v < kClampFloor)
                    throw invariant_violation("readout probability below the -1e-12 clamp floor");
                v = 0.0;
                ++d.clamped_bins;
            }
            d.at(a, b) = v;
        }
    }

    double total = 0.0;
    for (double v : d.p) total += v;
    if (std::abs(total - 1.0) > kTol)
        throw invariant_violation("readout distribution total differs from 1 by more than 1e-9");
    for (double& v : d.p) v /= total;
    return d;
}

InfoValue information_capacity(const JointDistribution& p) { return mutual_information(p); }

ControlOptimum optimize_controls(const SetupModel& s, const SetupBuilder& builder) {
    if (s.controls.empty()) throw invariant_violation("no control grids declared");
    for (const ControlGrid& g : s.controls)
        if (g.values.empty()) throw invariant_violation("control grid '" + g.name + "' is empty");

    const int n = static_cast<int>(s.controls.size());
    std::vector<size_t> idx(n, 0);
    std::optional<ControlOptimum> best;
    for (;;) {
        std::map<std::string, double> point;
        for (int i = 0; i < n; ++i) point[s.controls[i].name] = s.controls[i].values[idx[i]];
        const SetupModel model = builder(point);
        const InfoValue cap = information_capacity(joint_readout_distribution(model));
        if (!best || cap.raw_bits > best->capacity.raw_bits) best = ControlOptimum{point, cap};

        int i = n - 1;
        for (; i >= 0; --i) {
            if (++idx[i] < s.controls[i].values.size()) break;
            idx[i] = 0;
        }
        if (i < 0) break;
    }
    return *best;
}

}  // namespace qic
