#include "qic/lambda.hpp"

#include <cmath>
#include <numbers>

#include "qic/errors.hpp"
#include "qic/parallel.hpp"

namespace qic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Kraus operators of tracing subsystem `env_dim` out of an isometry
// V: d_in -> env_dim (x) d_out (environment slow index).
std::vector<ComplexMatrix> kraus_from_isometry(const ComplexMatrix& v, int env_dim, int d_out) {
    std::vector<ComplexMatrix> ks;
    ks.reserve(env_dim);
    for (int e = 0; e < env_dim; ++e) {
        ComplexMatrix k(d_out, v.cols());
        for (int f = 0; f < d_out; ++f)
            for (int j = 0; j < v.cols(); ++j) k(f, j) = v(e * d_out + f, j);
        ks.push_back(std::move(k));
    }
    return ks;
}

double clamped_ic(const QuantumChannel& ch) {
    return coherent_information(ch, DensityMatrix::maximally_mixed(2)).clamped_bits;
}

// golden-section maximization, deterministic
std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo, double hi,
                                     double tol_abs) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    // >= so flat stretches resolve toward the lower endpoint
    while (b - a > tol_abs) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace

void LambdaParams::validate() const {
    if (!(gamma1 >= 0.0) || !(gamma2 >= 0.0))
        throw invariant_violation("partial decay rates must be non-negative");
    if (!(gamma1 + gamma2 > 0.0))
        throw invariant_violation("at least one partial decay rate must be positive");
    if (!(theta >= 0.0) || !(theta <= kTwoPi))
        throw invariant_violation("action angle must lie in [0, 2pi]");
    if (!(t >= 0.0)) throw invariant_violation("decay duration must be non-negative");
}

QuantumChannel lambda_channel(const LambdaParams& p) {
    p.validate();
    const double g = p.gamma_total();
    const double gt = g * p.t;
    const double survive = std::exp(-gt / 2.0);
    const double emit = 1.0 - std::exp(-gt);

    // atom basis {|1>,|2>,|3>}, field basis {|vac>,|1_1>,|1_2>}
    const double b1 = std::sqrt(p.gamma1 / g);
    const double b2 = std::sqrt(p.gamma2 / g);
    const double bright[2] = {b1, b2};
    const double dark[2] = {b2, -b1};

    const double c = std::cos(p.theta / 2.0);
    const double s = std::sin(p.theta / 2.0);
    ComplexMatrix u = ComplexMatrix::zero(3, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) u(i, j) = c * bright[i] * bright[j] + dark[i] * dark[j];
    for (int j = 0; j < 2; ++j) {
        u(2, j) = cplx(0.0, -s * bright[j]);
        u(j, 2) = cplx(0.0, -s * bright[j]);
    }
    u(2, 2) = c;

    // decay isometry on atom (x) field, ground states inert
    ComplexMatrix w = ComplexMatrix::zero(9, 3);
    w(0 * 3 + 0, 0) = 1.0;
    w(1 * 3 + 0, 1) = 1.0;
    w(2 * 3 + 0, 2) = survive;
    w(0 * 3 + 1, 2) = std::sqrt(p.gamma1 * emit / g);
    w(1 * 3 + 2, 2) = std::sqrt(p.gamma2 * emit / g);

    ComplexMatrix embed = ComplexMatrix::zero(3, 2);
    embed(0, 0) = 1.0;
    embed(1, 1) = 1.0;

    const ComplexMatrix v = w * (u * embed);
    return QuantumChannel(kraus_from_isometry(v, 3, 3));
}

QuantumChannel two_level_channel(double theta, double gamma_total_t) {
    if (!(theta >= 0.0) || !(theta <= kTwoPi))
        throw invariant_violation("action angle must lie in [0, 2pi]");
    if (!(gamma_total_t >= 0.0)) throw invariant_violation("decay duration must be non-negative");
    const double survive = std::exp(-gamma_total_t / 2.0);
    const double emit = 1.0 - std::exp(-gamma_total_t);

    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const ComplexMatrix u{{c, cplx(0.0, -s)}, {cplx(0.0, -s), c}};

    // atom {g,e} (x) field {vac, photon}
    ComplexMatrix w = ComplexMatrix::zero(4, 2);
    w(0 * 2 + 0, 0) = 1.0;
    w(1 * 2 + 0, 1) = survive;
    w(0 * 2 + 1, 1) = std::sqrt(emit);

    const ComplexMatrix v = w * u;
    return QuantumChannel(kraus_from_isometry(v, 2, 2));
}

std::vector<SurfacePoint> coherent_info_surface(const std::vector<double>& gamma_t_values,
                                                const std::vector<double>& theta_values,
                                                double gamma1, double gamma2) {
    if (gamma_t_values.empty() || theta_values.empty())
        throw invariant_violation("surface grids must be non-empty");
    LambdaParams probe{gamma1, gamma2, 0.0, 0.0};
    probe.validate();
    const double gmax = probe.gamma_max();

    const int nt = static_cast<int>(gamma_t_values.size());
    const int ntheta = static_cast<int>(theta_values.size());
    std::vector<SurfacePoint> table(static_cast<size_t>(nt) * ntheta);
    parallel_for(nt * ntheta, [&](int idx) {
        const int i = idx / ntheta;
        const int j = idx % ntheta;
        const LambdaParams p{gamma1, gamma2, theta_values[j], gamma_t_values[i] / gmax};
        table[idx] = {gamma_t_values[i], theta_values[j], clamped_ic(lambda_channel(p))};
    });
    return table;
}

void SearchConfig::validate() const {
    if (!(t_max > 0.0)) throw invariant_violation("t_max must be positive");
    if (grid_t < 2 || grid_theta < 2) throw invariant_violation("search grids need >= 2 points");
    if (!(rel_tol > 0.0)) throw invariant_violation("refinement tolerance must be positive");
}

RateResult optimal_rate(double gamma1, double gamma2, const SearchConfig& config) {
    LambdaParams probe{gamma1, gamma2, 0.0, 0.0};
    probe.validate();
    config.validate();

    const double gmax = probe.gamma_max();
    const double gtotal = probe.gamma_total();
    const bool two_level = (gamma1 == 0.0) || (gamma2 == 0.0);

    // t in units of 1/gamma_max
    auto info_at = [&](double t, double theta) {
        if (two_level) return clamped_ic(two_level_channel(theta, gtotal * t / gmax));
        return clamped_ic(lambda_channel({gamma1, gamma2, theta, t / gmax}));
    };
    auto rate_at = [&](double t, double theta) { return info_at(t, theta) / t; };

    const int nt = config.grid_t;
    const int ntheta = config.grid_theta;
    std::vector<double> values(static_cast<size_t>(nt) * ntheta);
    parallel_for(nt * ntheta, [&](int idx) {
        const int i = idx / ntheta;
        const int j = idx % ntheta;
        const double t = config.t_max * (i + 1) / nt;
        const double theta = kTwoPi * j / (ntheta - 1);
        values[idx] = rate_at(t, theta);
    });

    // ties (within rounding noise) keep the first point: smallest t, then theta
    int best = 0;
    for (int idx = 1; idx < nt * ntheta; ++idx)
        if (values[idx] > values[best] + 1e-12) best = idx;
    double t_best = config.t_max * (best / ntheta + 1) / nt;
    double theta_best = kTwoPi * (best % ntheta) / (ntheta - 1);

    const double dt = config.t_max / nt;
    const double dtheta = kTwoPi / (ntheta - 1);
    for (int pass = 0; pass < 8; ++pass) {
        const double t_lo = std::max(dt * 1e-3, t_best - dt);
        const double t_hi = std::min(config.t_max, t_best + dt);
        auto [t_new, unused_rt] = golden_max([&](double t) { return rate_at(t, theta_best); },
                                             t_lo, t_hi, config.rel_tol * config.t_max);
        const double th_lo = std::max(0.0, theta_best - dtheta);
        const double th_hi = std::min(kTwoPi, theta_best + dtheta);
        auto [th_new, unused_rth] = golden_max([&](double th) { return rate_at(t_new, th); },
                                               th_lo, th_hi, config.rel_tol * kTwoPi);
        const bool settled = std::abs(t_new - t_best) <= config.rel_tol * config.t_max &&
                             std::abs(th_new - theta_best) <= config.rel_tol * kTwoPi;
        t_best = t_new;
        theta_best = th_new;
        if (settled) break;
    }

    RateResult r;
    r.t_opt = t_best;
    r.theta_opt = theta_best;
    r.info_at_opt = info_at(t_best, theta_best);
    r.rate = r.info_at_opt / t_best;
    r.rate_total = r.rate * gmax / gtotal;
    r.two_level_limit = two_level;
    return r;
}

}  // namespace qic
