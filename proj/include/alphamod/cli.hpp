#pragma once

// Command-line runs: configuration, dispatch and report emission.
//
// Every report carries "schema": "alphamod/1", the resolved configuration and
// the seed. Reports are deterministic functions of the configuration.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphamod/errors.hpp"
#include "alphamod/params.hpp"

namespace alphamod {

inline constexpr const char* kSchema = "alphamod/1";

enum class Command { Decide, Index, Covering, Normcalc, VerifyAsymptotics, VerifyEmbedding };
enum class Format { Json, Csv, Text };

const char* to_string(Command c);
const char* to_string(Format f);

struct RunConfig {
    Command command = Command::Decide;
    std::optional<ExactSpace> source;
    std::optional<ExactSpace> target;
    int N = 2048;
    double L = 32.0;
    std::optional<std::pair<double, double>> constants;  // (c_small, c_big)
    std::uint64_t seed = 1;
    std::string out;  // empty: standard output
    Format format = Format::Json;
    std::string input = "gaussian";  // normcalc: file path or gaussian | bump | tone
    std::string preset;              // verify-asymptotics: "rates" or empty
    int samples = 64;                // Monte Carlo trials
    int j_min = 4;
    int j_max = 9;
    int truncation = 32;  // verify-embedding: K_max
    std::string dump;     // covering: binary partition dump path

    /// Checks that the parameters the command uses are present and valid.
    void validate() const;
};

/// Configuration errors (exit status 2).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error("usage error: " + what) {}
};

/// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
    std::string text;
};

/// Parses arguments (without the program name) and validates the result.
RunConfig parse_args(const std::vector<std::string>& args);

struct Rendered {
    std::string report;
    std::optional<std::string> check_failure;  // set when an internal check failed
};

/// Computes the report for `config` in its output format.
/// Throws UsageError or alphamod::Error.
Rendered render_report(const RunConfig& config);

/// Runs the command and writes the report to config.out or `out`.
/// Returns 0, 2 (configuration), 3 (numerical precondition) or 4 (internal check).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Entry point of the alphamod tool.
int cli_main(int argc, const char* const* argv);

}  // namespace alphamod
