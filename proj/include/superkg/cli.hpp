#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Command implementations behind the CLI front end. Everything here is a
// library function so the acceptance suite and tests can drive the exact
// code paths the binary uses.

namespace skg::cli {

struct Range {
    double min = 0.0;
    double max = 0.0;
    int count = 1;  // >= 1; count == 1 pins the value at min

    std::vector<double> grid() const;
};

// Parse "min:max:count"; throws ConfigError on malformed input.
Range parse_range(const std::string& text);

struct RunConfig {
    std::string command;  // evolve | verify | bargmann | kernel | coeffs
    int n = 10;
    double a = 1.5;
    std::optional<double> b;        // required for the second initial-data family
    double m = 3.0;
    std::string problem_case = "one";  // one | two
    std::string source = "zero";       // zero | dirac-space | dirac-spacetime
    Range x{-10.0, 10.0, 201};
    Range t{0.0, 2.0, 81};
    Range s_grid{0.0, 3.0, 13};        // kernel command: s axis
    double x0 = 0.0;                   // kernel command: spatial offset
    std::vector<double> a_list;        // figure1 preset series
    double panels_per_unit = 16.0;
    int quad_order = 10;
    int gh_nodes = 96;                 // Bargmann quadrature size per axis
    Range z_re{-2.0, 2.0, 21};
    Range z_im{-2.0, 2.0, 21};
    std::string preset;                // figure1 | figure2 | empty
    std::string out;                   // output path or stem
    std::string format = "csv";        // csv | report
    std::string only;                  // verify filter
    double tol_scale = 1.0;
    bool allow_large_n = false;        // overrides the Bargmann cost guard

    void validate() const;  // throws ConfigError
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Applies figure1/figure2 parameter sets to any field the user left at its
// default. `explicitly_set` holds flag names the front end saw.
void apply_preset(RunConfig& config, const std::vector<std::string>& explicitly_set);

// Exit codes shared by all commands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_bad_config = 2;

// Each command returns its exit code and appends the files it wrote.
int cmd_evolve(const RunConfig& config, std::vector<std::string>* written = nullptr,
               std::ostream* log = nullptr);
int cmd_verify(const RunConfig& config, std::vector<std::string>* written = nullptr,
               std::ostream* log = nullptr);
int cmd_bargmann(const RunConfig& config, std::vector<std::string>* written = nullptr,
                 std::ostream* log = nullptr);
int cmd_kernel(const RunConfig& config, std::vector<std::string>* written = nullptr,
               std::ostream* log = nullptr);
int cmd_coeffs(const RunConfig& config, std::vector<std::string>* written = nullptr,
               std::ostream* log = nullptr);

// Shortest round-trip decimal formatting; the reason CSV output is
// byte-stable across runs.
std::string format_double(double v);

// Preamble parsing: reads "# key=value" lines back into a RunConfig so a file
// can be reproduced from its own header.
RunConfig config_from_preamble(const std::string& csv_path);

// Full reader for the emitted CSV files (preamble map, column names, numeric
// rows). Non-numeric cells parse as NaN.
struct CsvData {
    std::map<std::string, std::string> preamble;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};
CsvData read_csv(const std::string& path);

}  // namespace skg::cli
