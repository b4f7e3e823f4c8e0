#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <vector>

#include "ridgelab/activation.hpp"
#include "ridgelab/field_file.hpp"
#include "ridgelab/grid.hpp"

namespace ridgelab::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCatalog = 3;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GridOptions {
    int dimension = 2;
    std::size_t directions = 180;
    std::string b_range = "-12,12";
    std::size_t b_count = 256;
    std::string scales = "1/16,16";
    std::size_t scale_count = 96;
    std::string omega_range = "-16,16";
    std::size_t omega_count = 512;

    YGrid ygrid() const;
    Axis omega() const;
};

struct TransformOptions {
    GridOptions grid;
    std::string input;
    std::string psi = "hermite_spectral(2)";
    std::string out;
    std::string plot;
};

struct CheckOptions {
    GridOptions grid;
    std::string suite = "all";
    std::string psi = "hermite_spectral(2)";
    std::string eta = "hermite_spectral(2)";
};

struct ConstantsOptions {
    std::string psi;
    std::string eta;
    int dimension = 2;
};

struct Remark43Options {
    int dimension = 2;
    std::size_t directions = 4;
    std::string b_range = "-8,8";
    std::size_t b_count = 17;
    double scale_min = 1.0;
    double scale_max = 64.0;
    std::size_t scale_count = 61;
    std::string omega_range = "-12,12";
    std::size_t omega_count = 4097;
    std::string plot;
};

// "x" or "p/q".
double parse_number(const std::string& text);
// "lo,hi" or a single half-width h meaning [-h, h].
std::pair<double, double> parse_range(const std::string& text);

// Identity suites in report order.
const std::vector<std::string>& suite_names();
ReportRow run_suite(const std::string& name, const ReconstructionPair& pair, const YGrid& y, const Axis& omega);

int cmd_transform(const TransformOptions& options, std::ostream& out);
int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);
int cmd_constants(const ConstantsOptions& options, std::ostream& out);
int cmd_demo_remark43(const Remark43Options& options, std::ostream& out);

}  // namespace ridgelab::cli
