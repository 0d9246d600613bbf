#include "qic/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qic/errors.hpp"
#include "qic/povm.hpp"
#include "qic/setup.hpp"

namespace qic::cli {

namespace {

using nlohmann::json;

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

double round9(double v) { return std::strtod(fmt9(v).c_str(), nullptr); }

cplx parse_entry(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw config_error("complex entries must be [re, im] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& j) {
    if (!j.is_array() || j.empty()) throw config_error("matrix must be a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) throw config_error("matrix rows must be non-empty arrays");
    const int cols = static_cast<int>(j[0].size());
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
            throw config_error("matrix rows have inconsistent lengths");
        for (int c = 0; c < cols; ++c) m(r, c) = parse_entry(j[r][c]);
    }
    return m;
}

std::vector<cplx> parse_state_vector(const json& j) {
    if (!j.is_array() || j.empty()) throw config_error("state must be a non-empty array of [re, im]");
    std::vector<cplx> v;
    v.reserve(j.size());
    for (const json& e : j) v.push_back(parse_entry(e));
    return v;
}

DimensionList parse_dims(const json& config, int total_dim) {
    if (!config.contains("dims")) return {total_dim};
    DimensionList dims;
    for (const json& d : config.at("dims")) {
        if (!d.is_number_integer()) throw config_error("dims must be integers");
        dims.push_back(d.get<int>());
    }
    if (dim_product(dims) != total_dim)
        throw config_error("dims do not multiply to the matrix dimension");
    return dims;
}

std::vector<double> parse_grid(const json& j) {
    if (!j.is_object() || !j.contains("start") || !j.contains("stop") || !j.contains("count"))
        throw config_error("grid must be {start, stop, count}");
    const double start = j.at("start").get<double>();
    const double stop = j.at("stop").get<double>();
    const int count = j.at("count").get<int>();
    if (count < 1) throw config_error("grid count must be >= 1");
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
    return v;
}

std::vector<ComplexMatrix> parse_kraus_list(const json& j) {
    if (!j.is_array() || j.empty()) throw config_error("kraus must be a non-empty array of matrices");
    std::vector<ComplexMatrix> ks;
    for (const json& m : j) ks.push_back(parse_matrix(m));
    return ks;
}

PSM parse_psm(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw config_error("PSM needs a 'kind'");
    const std::string kind = j.at("kind").get<std::string>();
    std::vector<double> weights;
    for (const json& w : j.at("weights")) weights.push_back(w.get<double>());
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const json& l : j.at("labels")) labels.push_back(l.get<std::string>());

    if (kind == "projectors") {
        std::vector<PureState> states;
        for (const json& s : j.at("states")) {
            std::vector<cplx> amps = parse_state_vector(s);
            const int d = static_cast<int>(amps.size());
            states.emplace_back(std::move(amps), DimensionList{d});
        }
        return psm_from_projectors(states, weights, labels);
    }
    if (kind == "unitary_family") {
        std::vector<ComplexMatrix> us;
        for (const json& u : j.at("unitaries")) us.push_back(parse_matrix(u));
        std::optional<QuantumChannel> env;
        if (j.contains("environment"))
            env = QuantumChannel(parse_kraus_list(j.at("environment").at("kraus")));
        return psm_from_unitary_family(us, weights, env, labels);
    }
    throw config_error("unknown PSM kind '" + kind + "'");
}

DensityMatrix parse_density(const json& config, const char* key) {
    if (!config.contains(key)) throw config_error(std::string("missing '") + key + "'");
    ComplexMatrix m = parse_matrix(config.at(key));
    return DensityMatrix(std::move(m), parse_dims(config, m.rows()));
}

// y-rotation of measurement projector states, the one control the CLI wires up
SetupModel rotated_setup(const SetupModel& base, const json& measurement_spec, double phi) {
    const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
    const ComplexMatrix ry{{c, -s}, {s, c}};
    std::vector<PureState> states;
    std::vector<double> weights;
    for (const json& sj : measurement_spec.at("states")) {
        std::vector<cplx> amps = parse_state_vector(sj);
        if (amps.size() != 2) throw config_error("measurement_rotation_y needs qubit projectors");
        states.emplace_back(ry * amps, DimensionList{2});
    }
    for (const json& w : measurement_spec.at("weights")) weights.push_back(w.get<double>());
    SetupModel model = base;
    model.measurement = psm_from_projectors(states, weights);
    return model;
}

RunReport run_dispatch(const std::string& experiment, const json& config) {
    RunReport rep;
    rep.experiment = experiment;
    rep.inputs = config;

    if (experiment == "entropy") {
        const DensityMatrix rho = parse_density(config, "rho");
        rep.scalars.push_back({"entropy", von_neumann_entropy(rho), ScalarKind::info});
        return rep;
    }

    if (experiment == "coherent") {
        const QuantumChannel n(parse_kraus_list(config.at("kraus")));
        const ComplexMatrix m = parse_matrix(config.at("rho"));
        const DensityMatrix rho(m, {m.rows()});
        const double s_out = von_neumann_entropy(apply(n, rho));
        const double exchange = entropy_exchange(n, rho);
        const InfoValue ic = coherent_information(n, rho);
        rep.scalars.push_back({"output_entropy", s_out, ScalarKind::info});
        rep.scalars.push_back({"entropy_exchange", exchange, ScalarKind::info});
        rep.scalars.push_back({"coherent_information_raw", ic.raw_bits, ScalarKind::info});
        rep.scalars.push_back({"coherent_information", ic.clamped_bits, ScalarKind::info});
        if (ic.raw_bits < 0.0) rep.warnings.push_back("raw coherent information clamped to 0");
        return rep;
    }

    if (experiment == "one-time") {
        const DensityMatrix rho = parse_density(config, "rho_ab");
        if (rho.dims().size() != 2) throw config_error("one-time needs bipartite dims");
        const InfoValue ic = one_time_coherent_information(rho);
        rep.scalars.push_back({"output_entropy", von_neumann_entropy(rho.reduce({1})), ScalarKind::info});
        rep.scalars.push_back({"joint_entropy", von_neumann_entropy(rho), ScalarKind::info});
        rep.scalars.push_back({"one_time_coherent_information_raw", ic.raw_bits, ScalarKind::info});
        rep.scalars.push_back({"one_time_coherent_information", ic.clamped_bits, ScalarKind::info});
        if (ic.raw_bits < 0.0) rep.warnings.push_back("raw one-time coherent information clamped to 0");
        return rep;
    }

    if (experiment == "compatible") {
        const DensityMatrix rho = parse_density(config, "rho_ab");
        if (rho.dims() != DimensionList{2, 2})
            throw config_error("compatible needs a two-qubit state (dims [2,2])");
        const int order = config.value("order", 24);
        const SphereMeasure m = bloch_quadrature(order);
        const InfoValue iv = compatible_information(rho, m, m);
        rep.scalars.push_back({"compatible_information", iv.raw_bits, ScalarKind::info});
        rep.scalars.push_back({"quadrature_order", static_cast<double>(order), ScalarKind::plain});
        if (order >= 4 && order % 2 == 0)
            rep.scalars.push_back({"richardson_extrapolated",
                                   compatible_information_richardson(rho, order), ScalarKind::info});
        return rep;
    }

    if (experiment == "epsilon") {
        const int order = config.value("order", 8);
        const EpsilonOperator eps = epsilon_operator(bloch_quadrature(order));
        for (size_t i = 0; i < eps.eigenvalues.size(); ++i)
            rep.scalars.push_back({"eigenvalue_" + std::to_string(i), eps.eigenvalues[i],
                                   ScalarKind::plain});
        rep.scalars.push_back({"min_eigenvalue", eps.eigenvalues.back(), ScalarKind::plain});
        const EigenDecomposition d = hermitian_eig(eps.matrix);
        std::vector<cplx> top(4);
        for (int i = 0; i < 4; ++i) top[i] = d.eigenvectors(i, 0);
        const double overlap = std::norm(inner(bell_state(0).amplitudes(), top));
        rep.scalars.push_back({"singlet_overlap_sq", overlap, ScalarKind::plain});
        return rep;
    }

    if (experiment == "lambda-surface") {
        const double g1 = config.at("gamma1").get<double>();
        const double g2 = config.at("gamma2").get<double>();
        rep.surface = coherent_info_surface(parse_grid(config.at("t_grid")),
                                            parse_grid(config.at("theta_grid")), g1, g2);
        double peak = 0.0;
        for (const SurfacePoint& p : rep.surface) peak = std::max(peak, p.value);
        rep.scalars.push_back({"max_value", peak, ScalarKind::info});
        return rep;
    }

    if (experiment == "lambda-rate") {
        const double g1 = config.at("gamma1").get<double>();
        const double g2 = config.at("gamma2").get<double>();
        SearchConfig sc;
        sc.t_max = config.value("t_max", sc.t_max);
        sc.grid_t = config.value("grid_t", sc.grid_t);
        sc.grid_theta = config.value("grid_theta", sc.grid_theta);
        sc.rel_tol = config.value("tolerance", sc.rel_tol);
        const RateResult r = optimal_rate(g1, g2, sc);
        rep.scalars.push_back({"rate_per_gamma_max", r.rate, ScalarKind::rate});
        rep.scalars.push_back({"rate_per_gamma_total", r.rate_total, ScalarKind::rate});
        rep.scalars.push_back({"t_opt", r.t_opt, ScalarKind::plain});
        rep.scalars.push_back({"theta_opt", r.theta_opt, ScalarKind::plain});
        rep.scalars.push_back({"info_at_opt", r.info_at_opt, ScalarKind::info});
        if (r.two_level_limit)
            rep.warnings.push_back(
                "one partial rate is zero: optimum computed for the two-level "
                "{ground, excited} radiative encoding");
        return rep;
    }

    if (experiment == "setup-capacity") {
        PSM preparation = parse_psm(config.at("preparation"));
        QuantumChannel channel =
            config.contains("channel")
                ? QuantumChannel(parse_kraus_list(config.at("channel").at("kraus")))
                : identity_channel(preparation.d_out());
        SetupModel base{std::move(preparation), std::move(channel),
                        parse_psm(config.at("measurement")), parse_density(config, "rho_in"), {}};
        if (config.contains("controls")) {
            const json& controls = config.at("controls");
            if (!controls.is_object() || controls.size() != 1 ||
                !controls.contains("measurement_rotation_y"))
                throw config_error("the only supported control is 'measurement_rotation_y'");
            if (config.at("measurement").at("kind").get<std::string>() != "projectors")
                throw config_error("measurement_rotation_y requires a projector measurement");
            base.controls.push_back({"measurement_rotation_y",
                                     parse_grid(controls.at("measurement_rotation_y"))});
            const json mspec = config.at("measurement");
            const ControlOptimum best = optimize_controls(
                base, [&](const std::map<std::string, double>& c) {
                    return rotated_setup(base, mspec, c.at("measurement_rotation_y"));
                });
            rep.scalars.push_back({"capacity", best.capacity.raw_bits, ScalarKind::info});
            rep.scalars.push_back({"best_measurement_rotation_y",
                                   best.controls.at("measurement_rotation_y"), ScalarKind::plain});
            return rep;
        }
        const JointDistribution d = joint_readout_distribution(base);
        if (d.clamped_bins > 0)
            rep.warnings.push_back(std::to_string(d.clamped_bins) +
                                   " readout probabilities clamped to 0");
        rep.scalars.push_back({"capacity", information_capacity(d).raw_bits, ScalarKind::info});
        return rep;
    }

    throw config_error("unknown experiment '" + experiment + "'");
}

double display_value(const Scalar& s, bool nats) {
    if (nats && (s.kind == ScalarKind::info || s.kind == ScalarKind::rate))
        return s.value * std::numbers::ln2;
    return s.value;
}

double display_info(double bits, bool nats) { return nats ? bits * std::numbers::ln2 : bits; }

}  // namespace

RunReport run(const std::string& experiment, const json& config, bool nats) {
    if (config.contains("experiment") &&
        config.at("experiment").get<std::string>() != experiment)
        throw config_error("config 'experiment' does not match the subcommand");
    const auto t0 = std::chrono::steady_clock::now();
    RunReport rep = run_dispatch(experiment, config);
    rep.nats = nats;
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

void render_text(const RunReport& report, std::ostream& os) {
    const char* unit = report.nats ? "nats" : "bits";
    os << "experiment: " << report.experiment << "\n";
    for (const Scalar& s : report.scalars) {
        os << "  " << s.name;
        if (s.kind == ScalarKind::info) os << " [" << unit << "]";
        if (s.kind == ScalarKind::rate) os << " [" << unit << " * gamma]";
        os << " = " << fmt9(display_value(s, report.nats)) << "\n";
    }
    if (!report.surface.empty()) os << "  surface rows: " << report.surface.size() << "\n";
    for (const std::string& w : report.warnings) os << "  warning: " << w << "\n";
    os << "  wall time: " << fmt9(report.wall_time_ms) << " ms\n";
}

std::string render_csv(const RunReport& report) {
    if (report.surface.empty())
        throw config_error("csv output is only defined for lambda-surface tables");
    std::string out = "gamma_t,theta,value\n";
    for (const SurfacePoint& p : report.surface) {
        out += fmt9(p.gamma_t);
        out += ',';
        out += fmt9(p.theta);
        out += ',';
        out += fmt9(display_info(p.value, report.nats));
        out += '\n';
    }
    return out;
}

json render_json(const RunReport& report) {
    json j;
    j["experiment"] = report.experiment;
    j["inputs"] = report.inputs;
    j["units"] = report.nats ? "nats" : "bits";
    json scalars = json::object();
    for (const Scalar& s : report.scalars)
        scalars[s.name] = round9(display_value(s, report.nats));
    j["scalars"] = scalars;
    if (!report.surface.empty()) {
        json rows = json::array();
        for (const SurfacePoint& p : report.surface)
            rows.push_back({{"gamma_t", round9(p.gamma_t)},
                            {"theta", round9(p.theta)},
                            {"value", round9(display_info(p.value, report.nats))}});
        j["surface"] = rows;
    }
    j["warnings"] = report.warnings;
    return j;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantum information measures over finite-dimensional states and channels"};
    app.require_subcommand(1);

    static const std::vector<std::string> kinds = {"entropy",  "coherent",       "one-time",
                                                   "compatible", "epsilon",      "lambda-surface",
                                                   "lambda-rate", "setup-capacity"};
    std::string config_path, out_path, format;
    bool nats = false;
    for (const std::string& kind : kinds) {
        CLI::App* sub = app.add_subcommand(kind);
        sub->add_option("--config", config_path, "experiment config (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "write results to this path");
        sub->add_option("--format", format, "output file format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--nats", nats, "report information values in nats");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, out, err);
        return kConfigError;
    }

    const std::string experiment = app.get_subcommands().front()->get_name();
    try {
        json config;
        {
            std::ifstream in(config_path);
            if (!in) throw io_error("cannot open config file " + config_path);
            try {
                config = json::parse(in);
            } catch (const json::parse_error& e) {
                throw config_error(e.what());
            }
        }

        const RunReport rep = run(experiment, config, nats);
        render_text(rep, out);

        if (!out_path.empty()) {
            std::string fmt = format;
            if (fmt.empty()) fmt = rep.surface.empty() ? "json" : "csv";
            std::string payload;
            if (fmt == "csv") {
                payload = render_csv(rep);
            } else {
                payload = render_json(rep).dump(2);
                payload += '\n';
            }
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw io_error("cannot open output file " + out_path);
            f << payload;
            if (!f) throw io_error("failed writing " + out_path);
        }
        return kOk;
    } catch (const config_error& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const nlohmann::json::exception& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const invariant_violation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return kInvariantError;
    } catch (const convergence_error& e) {
        err << "convergence failure: " << e.what() << "\n";
        return kConvergenceError;
    } catch (const io_error& e) {
        err << "io error: " << e.what() << "\n";
        return kIoError;
    }
}

}  // namespace qic::cli
