#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qic/lambda.hpp"

namespace qic::cli {

// process-level contract
constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kInvariantError = 3;
constexpr int kConvergenceError = 4;
constexpr int kIoError = 5;

class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

enum class ScalarKind { plain, info, rate };

struct Scalar {
    std::string name;
    double value;
    ScalarKind kind = ScalarKind::plain;
};

struct RunReport {
    std::string experiment;
    nlohmann::json inputs;  // config echo
    std::vector<Scalar> scalars;
    std::vector<SurfacePoint> surface;  // non-empty for table experiments
    std::vector<std::string> warnings;
    double wall_time_ms = 0.0;
    bool nats = false;  // display conversion only; computation stays base-2
};

// Dispatches one experiment. `experiment` is one of: entropy, coherent,
// one-time, compatible, epsilon, lambda-surface, lambda-rate,
// setup-capacity.
RunReport run(const std::string& experiment, const nlohmann::json& config, bool nats);

void render_text(const RunReport& report, std::ostream& os);
std::string render_csv(const RunReport& report);
nlohmann::json render_json(const RunReport& report);  // deterministic file payload

// Full command-line entry point; returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qic::cli
