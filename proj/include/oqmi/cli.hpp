#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oqmi/discord.hpp"
#include "oqmi/qcore.hpp"
#include "oqmi/states.hpp"
#include "oqmi/sweep.hpp"

namespace oqmi::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 2, kValidationError = 3 };

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(std::string_view text);

// Bad flags, unknown state specs or quantities.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Unreadable or physically invalid input matrices.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- matrix files -----------------------------------------------------------
// One row per line, whitespace-separated entries of the form a, a+bi, a-bi or bi.

Complex parse_complex(std::string_view token);
ComplexMatrix parse_matrix(std::string_view text);
ComplexMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const ComplexMatrix& m);
Dims parse_dims(std::string_view text);  // "2,2,2"

// --- quantities -------------------------------------------------------------
// ic, oqmi, ix, is2, qmi, entropy, or logneg:<letters> (left side of the cut).

void check_quantity(std::string_view name, std::size_t parties);
double compute_quantity(const DensityMatrix& rho, std::string_view name);

// --- commands ---------------------------------------------------------------

struct TableRow {
  std::string state;
  double common;       // I_c (bipartite QMI for two parties)
  double operational;  // I
};

std::vector<TableRow> table_rows();
std::string render_table(const std::vector<TableRow>& rows, OutputFormat format);

std::vector<SweepRecord> run_sweep(const NamedState& state, const std::vector<std::string>& quantities,
                                   std::span<const double> p_grid);

// CSV: header "p,<columns>", 9 significant digits. JSON: array of flat objects.
std::string render_records(const std::vector<SweepRecord>& records, OutputFormat format);
std::vector<SweepRecord> parse_csv(std::string_view text);

// Values below 1e-12 in magnitude print as 0.
std::string format_number(double value, int significant_digits = 9);

// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oqmi::cli
