#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "greysd/dataset.hpp"
#include "greysd/diagnostics.hpp"
#include "greysd/errors.hpp"
#include "greysd/models.hpp"
#include "greysd/report_io.hpp"
#include "greysd/repro.hpp"

using namespace greysd;

namespace {

struct DataOpts {
  std::string fixture_name;
  std::string input_path;
  std::size_t csv_column = 0; // 0 = auto
  bool csv_header = false;
  std::size_t nu = 0; // 0 = fixture default, else n
  std::size_t horizon = 0;
  std::string sc_init = "anchored";
  std::string output; // empty or "-" = stdout
};

// Shared --fixture/--input/--nu/... flags of the fitting commands.
void add_data_options(CLI::App *cmd, DataOpts &o, bool with_horizon) {
  cmd->add_option("--fixture", o.fixture_name,
                  "embedded dataset (electricity_cn, gdp_lanzhou, "
                  "freightage_lanzhou)");
  cmd->add_option("--input", o.input_path, "CSV file with the series");
  cmd->add_option("--csv-column", o.csv_column,
                  "1-based value column of --input (default: single column, "
                  "otherwise the 2nd)");
  cmd->add_flag("--csv-header", o.csv_header,
                "skip the first line of --input");
  cmd->add_option("--nu", o.nu,
                  "fit on the first nu samples (default: the fixture's "
                  "canonical split, otherwise the whole series)");
  if (with_horizon)
    cmd->add_option("--horizon", o.horizon,
                    "extra forecast steps past the series end");
  cmd->add_option("--gm-sc-init", o.sc_init,
                  "initial condition of the continuous Simpson response")
      ->check(CLI::IsMember({"anchored", "first"}));
  cmd->add_option("--output,-o", o.output, "output file (default: stdout)");
}

Dataset load_dataset(const DataOpts &o) {
  if (!o.fixture_name.empty() && !o.input_path.empty())
    throw DataError("--fixture and --input are mutually exclusive");
  if (!o.fixture_name.empty())
    return fixture(o.fixture_name);
  if (!o.input_path.empty()) {
    CsvOptions copts;
    copts.header = o.csv_header;
    copts.value_column = o.csv_column;
    return load_csv(o.input_path, copts);
  }
  throw DataError("one of --fixture or --input is required");
}

SplitSpec make_split(const Dataset &ds, const DataOpts &o) {
  SplitSpec split;
  split.nu = o.nu ? o.nu
                  : (ds.default_nu ? ds.default_nu : ds.values.size());
  split.horizon = o.horizon;
  return split;
}

ScInit parse_sc_init(const std::string &name) {
  return name == "first" ? ScInit::First : ScInit::Anchored;
}

void write_text(const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw DataError("cannot open output file " + path);
  out << text;
}

std::vector<ModelKind> parse_models(const std::vector<std::string> &names) {
  std::vector<ModelKind> kinds;
  for (const std::string &name : names) {
    if (name == "all")
      for (ModelKind k : all_model_kinds())
        kinds.push_back(k);
    else
      kinds.push_back(model_kind_from_string(name));
  }
  if (kinds.empty())
    kinds = all_model_kinds();
  return kinds;
}

int cmd_fit(const DataOpts &o, const std::string &model_name) {
  const Dataset ds = load_dataset(o);
  const Series s = ds.to_series();
  const FittedModel m = fit_model(s, make_split(ds, o),
                                  model_kind_from_string(model_name),
                                  parse_sc_init(o.sc_init));
  write_text(model_to_json(m), o.output);
  return 0;
}

int cmd_compare(const DataOpts &o, const std::vector<std::string> &models,
                const std::string &format_name) {
  const Dataset ds = load_dataset(o);
  const Series s = ds.to_series();
  const SplitSpec split = make_split(ds, o);
  const auto entries =
      run_experiment(s, split, parse_models(models), parse_sc_init(o.sc_init));
  bool any_fitted = false;
  for (const ExperimentEntry &e : entries)
    any_fitted = any_fitted || e.report.has_value();
  if (!any_fitted)
    throw DegenerateDataError(entries.front().error);
  write_text(render_comparison(s, entries, split,
                               report_format_from_string(format_name),
                               ds.name),
             o.output);
  return 0;
}

int cmd_diagnose(const std::string &grid_name, std::uint64_t seed,
                 std::string out_dir) {
  if (out_dir.empty()) {
    const char *env = std::getenv("GREYSD_OUTPUT_DIR");
    out_dir = env && *env ? env : ".";
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw DataError("cannot create output directory " + out_dir + ": " +
                    ec.message());
  const EpsilonGridResult grid =
      grid_name == "dense" ? run_reference_sweep(seed) : run_desk_sweep();
  const std::string phi_path = out_dir + "/phi.csv";
  const std::string eps_path = out_dir + "/epsilon_grid.csv";
  write_text(phi_csv(phi_grid()), phi_path);
  write_text(epsilon_csv(grid), eps_path);
  std::cout << epsilon_summary(grid);
  std::cout << "wrote " << phi_path << "\n";
  std::cout << "wrote " << eps_path << "\n";
  return 0;
}

int cmd_repro(int table_id, const std::string &sc_init) {
  repro::ReproOptions opts;
  opts.sc_init = parse_sc_init(sc_init);
  std::vector<repro::TableReport> reports;
  if (table_id == 0)
    reports = repro::run_all(opts);
  else
    reports.push_back(repro::run_table(table_id, opts));
  std::cout << repro::render(reports);
  return repro::all_passed(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"small-sample grey forecasting toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "greysd 1.0.0");
  app.footer("environment:\n"
             "  GREYSD_OUTPUT_DIR  default directory for files written by "
             "diagnose\n"
             "exit codes:\n"
             "  0 success, 1 reference-table mismatch, 2 input error, "
             "3 numerical degeneracy");

  DataOpts fit_opts;
  std::string fit_model_name = "gm_sd";
  CLI::App *fit = app.add_subcommand(
      "fit", "fit one model and emit its JSON document");
  add_data_options(fit, fit_opts, false);
  fit->add_option("--model", fit_model_name, "model kind")
      ->check(CLI::IsMember({"gm11", "dgm11", "gm_sc", "gm_sd"}));

  DataOpts cmp_opts;
  std::vector<std::string> cmp_models;
  std::string cmp_format = "table";
  CLI::App *compare = app.add_subcommand(
      "compare", "fit several models and tabulate values, APE and MAPE");
  add_data_options(compare, cmp_opts, true);
  compare
      ->add_option("--models", cmp_models,
                   "comma-separated model kinds, or 'all' (default)")
      ->delimiter(',');
  compare->add_option("--format", cmp_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  std::string diag_grid = "desk";
  std::uint64_t diag_seed = kDefaultSweepSeed;
  std::string diag_out_dir;
  CLI::App *diagnose = app.add_subcommand(
      "diagnose", "write the phi table and the parameter-recovery sweep "
                  "as CSV files");
  diagnose
      ->add_option("--grid", diag_grid,
                   "desk: 50x50 cartesian sweep; dense: 0.01-step q grid "
                   "with seeded r draws")
      ->check(CLI::IsMember({"desk", "dense"}));
  diagnose->add_option("--seed", diag_seed,
                       "seed of the dense grid's r draws");
  diagnose->add_option("--output-dir", diag_out_dir,
                       "target directory (default: $GREYSD_OUTPUT_DIR or .)");

  int repro_table = 0;
  std::string repro_sc_init = "anchored";
  CLI::App *repro_cmd = app.add_subcommand(
      "repro", "recompute the reference tables and diff every cell");
  repro_cmd->add_option("--table", repro_table, "single table to check (1-7)")
      ->check(CLI::Range(1, 7));
  repro_cmd
      ->add_option("--gm-sc-init", repro_sc_init,
                   "initial condition of the continuous Simpson response")
      ->check(CLI::IsMember({"anchored", "first"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fit->parsed())
      return cmd_fit(fit_opts, fit_model_name);
    if (compare->parsed())
      return cmd_compare(cmp_opts, cmp_models, cmp_format);
    if (diagnose->parsed())
      return cmd_diagnose(diag_grid, diag_seed, diag_out_dir);
    if (repro_cmd->parsed())
      return cmd_repro(repro_table, repro_sc_init);
  } catch (const DegenerateDataError &e) {
    std::cerr << "error: degenerate: " << e.what() << "\n";
    return 3;
  } catch (const DataError &e) {
    std::cerr << "error: data: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
