#include "oqmi/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "oqmi/mutualinfo.hpp"
#include "oqmi/negativity.hpp"

namespace oqmi::cli {

namespace {

std::vector<std::string_view> split_any(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && seps.find(s[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < s.size() && seps.find(s[j]) == std::string_view::npos) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_double(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw InputError("cannot parse number '" + std::string(text) + "'");
  return v;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  for (auto part : split_any(s, ",")) out.emplace_back(part);
  return out;
}

double parse_cell(std::string_view text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  return parse_double(text);
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw UsageError("unknown format '" + std::string(text) + "' (expected csv or json)");
}

Complex parse_complex(std::string_view token) {
  if (token.empty()) throw InputError("empty matrix entry");
  if (token.back() != 'i') return {parse_double(token), 0.0};

  const std::string_view body = token.substr(0, token.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  auto imag_of = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t.front() == '+' ? t.substr(1) : t);
  };
  if (split == std::string_view::npos) return {0.0, imag_of(body)};
  return {parse_double(body.substr(0, split)), imag_of(body.substr(split))};
}

ComplexMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Complex>> rows;
  for (auto line : split_any(text, "\n")) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split_any(line, " \t");
    if (tokens.empty() || tokens.front().front() == '#') continue;
    std::vector<Complex> row;
    for (auto t : tokens) row.push_back(parse_complex(t));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("matrix file holds no rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)].size()) != n)
      throw InputError("matrix is not square: row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[static_cast<std::size_t>(r)].size()) + " entries, expected " +
                       std::to_string(n));
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += fmt::format("{:.17g}{:+.17g}i", m(r, c).real(), m(r, c).imag());
    }
    out += '\n';
  }
  return out;
}

Dims parse_dims(std::string_view text) {
  Dims dims;
  for (auto part : split_any(text, ",")) {
    std::size_t d = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), d);
    if (ec != std::errc{} || ptr != part.data() + part.size() || d < 2)
      throw UsageError("bad dimension '" + std::string(part) + "' in --dims");
    dims.push_back(d);
  }
  if (dims.empty()) throw UsageError("--dims is empty");
  return dims;
}

void check_quantity(std::string_view name, std::size_t parties) {
  if (name.starts_with("logneg:")) {
    const auto left = PartySet::from_letters(name.substr(7));
    Bipartition::split(left, parties);
    return;
  }
  if (name == "oqmi" || name == "ix" || name == "entropy") return;
  if (name == "ic" && parties >= 3) return;
  if (name == "is2" && parties == 3) return;
  if (name == "qmi" && parties == 2) return;
  throw UsageError("unknown quantity '" + std::string(name) + "' for a " + std::to_string(parties) +
                   "-party state");
}

double compute_quantity(const DensityMatrix& rho, std::string_view name) {
  try {
    check_quantity(name, rho.parties());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (name.starts_with("logneg:"))
    return log_negativity(rho, Bipartition::split(PartySet::from_letters(name.substr(7)), rho.parties()));
  if (name == "entropy") return von_neumann_entropy(rho);
  if (name == "oqmi") return operational_qmi(rho);
  if (name == "ix") return conventional_ix(rho);
  if (name == "ic") return common_information(rho);
  if (name == "is2") return shared_two_party(rho);
  return bipartite_qmi(rho);
}

namespace {

constexpr double kZeroSnap = 1e-12;

}  // namespace

std::vector<TableRow> table_rows() {
  static const char* const kStates[] = {"ghz:2",    "ghz:3",     "dicke:3:1", "antisym3",
                                        "ghz:4",    "dicke:4:1", "dicke:4:2", "cluster4"};
  std::vector<TableRow> rows;
  for (const char* spec : kStates) {
    const DensityMatrix rho = build(NamedState::parse(spec)).projector();
    const double common = rho.parties() == 2 ? bipartite_qmi(rho) : common_information(rho);
    rows.push_back({spec, common, operational_qmi(rho)});
  }
  return rows;
}

std::string format_number(double value, int significant_digits) {
  // Rounding residue of exact zeros (and -0) prints as 0.
  if (std::abs(value) < kZeroSnap) value = 0.0;
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{:.{}g}", value, significant_digits);
}

namespace {

std::string fixed6(double v) {
  std::string s = fmt::format("{:.6f}", v);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

}  // namespace

std::string render_table(const std::vector<TableRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "state,I_c,I\n";
    for (const auto& r : rows) out += r.state + "," + fixed6(r.common) + "," + fixed6(r.operational) + "\n";
    return out;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json obj;
    obj["state"] = r.state;
    obj["I_c"] = std::stod(fixed6(r.common));
    obj["I"] = std::stod(fixed6(r.operational));
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::vector<SweepRecord> run_sweep(const NamedState& state, const std::vector<std::string>& quantities,
                                   std::span<const double> p_grid) {
  if (quantities.empty()) throw UsageError("no quantities requested");
  const std::size_t parties = state.dims().size();
  for (const auto& q : quantities) {
    try {
      check_quantity(q, parties);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const PureState psi = build(state);
  std::vector<SweepRecord> out;
  for (double p : p_grid) {
    const DensityMatrix rho = white_noise(psi, p);
    SweepRecord rec{p, {}};
    for (const auto& q : quantities) rec.values.emplace_back(q, compute_quantity(rho, q));
    out.push_back(std::move(rec));
  }
  return out;
}

std::string render_records(const std::vector<SweepRecord>& records, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "p";
    if (!records.empty())
      for (const auto& [name, v] : records.front().values) out += "," + name;
    out += '\n';
    for (const auto& rec : records) {
      out += format_number(rec.p);
      for (const auto& [name, v] : rec.values) out += "," + format_number(v);
      out += '\n';
    }
    return out;
  }
  auto arr = nlohmann::ordered_json::array();
  auto mirrored = [](double v) -> nlohmann::ordered_json {
    if (!std::isfinite(v)) return nullptr;
    return std::stod(format_number(v));
  };
  for (const auto& rec : records) {
    nlohmann::ordered_json obj;
    obj["p"] = mirrored(rec.p);
    for (const auto& [name, v] : rec.values) obj[name] = mirrored(v);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::vector<SweepRecord> parse_csv(std::string_view text) {
  const auto lines = split_any(text, "\n");
  if (lines.empty()) throw InputError("empty CSV");
  const auto header = split_any(lines.front(), ",");
  if (header.empty() || header.front() != "p") throw InputError("CSV header must start with 'p'");

  std::vector<SweepRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_any(lines[i], ",");
    if (cells.size() != header.size())
      throw InputError("CSV row " + std::to_string(i) + " has " + std::to_string(cells.size()) +
                       " cells, header has " + std::to_string(header.size()));
    SweepRecord rec{parse_cell(cells[0]), {}};
    for (std::size_t c = 1; c < cells.size(); ++c) rec.values.emplace_back(std::string(header[c]), parse_cell(cells[c]));
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

struct CommonOptions {
  std::string format = "csv";
  std::string out = "stdout";
};

struct SweepOptions {
  std::string state;
  std::string quantities = "ic,oqmi";
  double pmin = 0.0;
  double pmax = 1.0;
  std::size_t steps = 21;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "Output format: csv or json")->capture_default_str();
  cmd->add_option("--out", o.out, "Output path, or 'stdout'")->capture_default_str();
}

void add_grid(CLI::App* cmd, SweepOptions& o) {
  cmd->add_option("--state", o.state, "Named state, e.g. ghz:3, w:3, dicke:4:2, cluster4, antisym3")
      ->required();
  cmd->add_option("--pmin", o.pmin, "Smallest noise parameter")->capture_default_str();
  cmd->add_option("--pmax", o.pmax, "Largest noise parameter")->capture_default_str();
  cmd->add_option("--steps", o.steps, "Grid points, endpoints included")->capture_default_str();
}

std::vector<double> checked_grid(const SweepOptions& o) {
  if (!(0.0 <= o.pmin && o.pmin <= o.pmax && o.pmax <= 1.0))
    throw UsageError("need 0 <= pmin <= pmax <= 1");
  if (o.steps < 2) throw UsageError("--steps must be at least 2");
  return uniform_grid(o.pmin, o.pmax, o.steps);
}

NamedState checked_state(const std::string& spec) {
  try {
    return NamedState::parse(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const CommonOptions& o, const std::string& text, std::ostream& out) {
  if (o.out == "stdout" || o.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw InputError("cannot write '" + o.out + "'");
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiparty mutual information, common information and discord calculator", "oqmi"};
  app.require_subcommand(1);

  CommonOptions table_opts;
  auto* table = app.add_subcommand("table", "Common information and operational QMI of the reference states");
  add_common(table, table_opts);

  CommonOptions sweep_io;
  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Mutual-information quantities along the white-noise family");
  add_grid(sweep, sweep_opts);
  sweep->add_option("--quantities", sweep_opts.quantities, "Comma list from ic, oqmi, ix, is2, qmi, entropy, logneg:<parties>")
      ->capture_default_str();
  add_common(sweep, sweep_io);

  CommonOptions discord_io;
  SweepOptions discord_grid;
  std::string measured = "A";
  std::string mi = "operational";
  OptimizerConfig optimizer;
  auto* discord = app.add_subcommand("discord", "Multiparty quantum discord along the white-noise family");
  add_grid(discord, discord_grid);
  discord->add_option("--measured", measured, "Measured parties as letters, e.g. A, AB, ABC")->capture_default_str();
  discord->add_option("--mi", mi, "Mutual information: operational or ix")->capture_default_str();
  discord->add_option("--seed", optimizer.seed, "Seed for the optimizer's extra starting points")->capture_default_str();
  discord->add_option("--grid-theta", optimizer.grid_theta, "Polar grid points")->capture_default_str();
  discord->add_option("--grid-phi", optimizer.grid_phi, "Azimuthal grid points")->capture_default_str();
  discord->add_option("--refine-iters", optimizer.refine_iterations, "Nelder-Mead iteration cap")->capture_default_str();
  add_common(discord, discord_io);

  CommonOptions compute_io;
  std::string matrix_path, dims_text, quantity = "oqmi";
  auto* compute = app.add_subcommand("compute", "Evaluate one quantity on a density matrix read from a file");
  compute->add_option("--matrix", matrix_path, "Text file: one row per line, entries a+bi")->required();
  compute->add_option("--dims", dims_text, "Subsystem dimensions, e.g. 2,2,2")->required();
  compute->add_option("--quantity", quantity, "ic, oqmi, ix, is2, qmi, entropy or logneg:<parties>")
      ->capture_default_str();
  compute->add_option("--out", compute_io.out, "Output path, or 'stdout'")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*table) {
      emit(table_opts, render_table(table_rows(), parse_format(table_opts.format)), out);
    } else if (*sweep) {
      const auto format = parse_format(sweep_io.format);
      const auto state = checked_state(sweep_opts.state);
      const auto grid = checked_grid(sweep_opts);
      emit(sweep_io, render_records(run_sweep(state, split_list(sweep_opts.quantities), grid), format), out);
    } else if (*discord) {
      const auto format = parse_format(discord_io.format);
      const auto state = checked_state(discord_grid.state);
      const auto grid = checked_grid(discord_grid);
      DiscordSpec spec;
      try {
        spec.measured = PartySet::from_letters(measured);
        spec.measured.check_against(state.dims().size());
        spec.mi = parse_mi_kind(mi);
        optimizer.check();
        for (std::size_t p : spec.measured)
          if (state.dims()[p] != 2)
            throw std::invalid_argument("state '" + state.spec() +
                                        "' has non-qubit parties; the discord optimizer parameterizes "
                                        "qubit bases only (explicit basis lists are a library-only path)");
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (spec.measured.empty()) throw UsageError("--measured is empty");
      spec.optimizer = optimizer;
      emit(discord_io, render_records(discord_noise_sweep(state, spec, grid), format), out);
    } else if (*compute) {
      const Dims dims = parse_dims(dims_text);
      const ComplexMatrix m = read_matrix_file(matrix_path);
      if (static_cast<std::size_t>(m.rows()) != total_dimension(dims))
        throw InputError("matrix side " + std::to_string(m.rows()) + " does not match dims product " +
                         std::to_string(total_dimension(dims)));
      const DensityMatrix rho(m, dims);
      const auto report = validate(rho);
      if (!report.ok()) throw InputError("invalid density matrix: " + report.describe());
      emit(compute_io, format_number(compute_quantity(rho, quantity)) + "\n", out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::exception& e) {
    // numerical failures on user-supplied data
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kSuccess;
}

}  // namespace oqmi::cli
