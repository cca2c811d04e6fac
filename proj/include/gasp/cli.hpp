#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gasp/hyperfun.hpp"
#include "gasp/kernel.hpp"

namespace gasp::cli {

// Raised for anything wrong with the configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Mode { EvalFa, EvalQ, Solve, Verify };
enum class Format { Csv, Report };

struct PolyTerm {
    double coef = 0.0;
    std::vector<int> powers;  // one exponent per non-singular coordinate
};

struct DataFamily {
    std::string kind = "constant";  // constant | polynomial | exterior-pole
    double value = 1.0;
    std::vector<PolyTerm> terms;
    Point pole;
};

struct FaPoint {
    double a = 0.0;
    std::vector<double> b, c, z;
};

struct QPair {
    Point x, xi;
};

struct RunConfig {
    Mode mode = Mode::Solve;
    int m = 2;
    std::vector<double> alpha{0.25};
    double R = 1.0;
    DataFamily data;
    std::vector<Point> probes;
    std::optional<int> level;
    SeriesControl ctl;
    std::string fa_method = "auto";  // auto | direct | decomposed
    std::vector<FaPoint> fa_points;
    std::vector<QPair> q_pairs;
    std::string suite = "all";
    std::uint64_t seed = 1;
    std::string out_path;
    Format format = Format::Csv;
};

// Reads the nested key/value (JSON) file. Unknown keys and type errors raise
// ConfigError naming the offending field or the line of the syntax error.
RunConfig load_config(const std::string& path, Mode mode);
RunConfig parse_config(const std::string& text, Mode mode);
void validate(const RunConfig& cfg);

// Writes the output of one run; returns the process exit status.
int run(const RunConfig& cfg, std::ostream& out);

struct PropertyResult {
    std::string suite;
    std::string property;
    bool pass;
    double measured;
    double tolerance;
};
std::vector<PropertyResult> verify_suites(const std::string& suite, std::uint64_t seed);

// Full command line; returns the exit status.
int main_entry(int argc, char** argv);

}  // namespace gasp::cli
