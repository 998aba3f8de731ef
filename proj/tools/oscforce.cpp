// oscforce: forces from damped oscillators and RLC circuits.
//
//   oscforce force    --config run.json [--units reduced|si] [--out file] [--format csv|json]
//   oscforce sweep    --config run.json [--jobs N] ...
//   oscforce validate --suite <name> [--n-max N]
//
// Exit codes: 0 ok, 2 configuration error, 3 precondition violation, 4 validation failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cli/config.hpp"
#include "cli/run.hpp"
#include "oscforce/validation.hpp"

namespace {

using namespace oscforce;

struct Options {
  std::string config;
  std::string units;
  std::string out;
  std::string format;
  std::size_t n_max = 0;
  bool oracle = false;
  unsigned jobs = 0;
  std::string suite;
};

cli::RunConfig load(const Options& o) {
  std::ifstream in(o.config);
  if (!in) throw ConfigError("cannot open config '" + o.config + "'");
  std::stringstream text;
  text << in.rdbuf();
  cli::json root;
  try {
    root = cli::json::parse(text.str());
  } catch (const cli::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!o.units.empty() && root.is_object()) root["units"] = o.units;
  auto c = cli::parse_config(root);
  if (!o.format.empty()) c.format = cli::parse_format(o.format);
  if (!o.out.empty()) c.output_path = o.out;
  if (o.oracle) c.oracle = true;
  if (o.n_max > 0) c.n_max = o.n_max;
  return c;
}

void emit(const cli::RunConfig& c, const std::vector<cli::Row>& rows) {
  if (!c.output_path) {
    cli::write_table(std::cout, c, rows);
    return;
  }
  const std::filesystem::path path(*c.output_path);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  cli::write_table(out, c, rows);
}

int run_force(const Options& o) {
  auto c = load(o);
  c.sweep.reset();
  emit(c, cli::run_points(c));
  return cli::exit_ok;
}

int run_sweep(const Options& o) {
  const auto c = load(o);
  if (!c.sweep) throw ConfigError("sweep: the config has no sweep block");
  const unsigned jobs = o.jobs > 0 ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
  emit(c, cli::run_points(c, jobs));
  return cli::exit_ok;
}

int run_validate(const Options& o) {
  std::optional<std::size_t> n_max;
  if (o.n_max > 0) n_max = o.n_max;
  const auto report = validation::run_suite(o.suite, n_max);
  const std::string text = report.to_text();
  std::cout << text;
  if (!o.out.empty()) {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + o.out + "'");
    out << text;
  }
  return report.passed() ? cli::exit_ok : cli::exit_validation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fluctuation forces from damped oscillators and RLC circuits"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--units", o.units, "Unit system of the config values")
      ->check(CLI::IsMember({"reduced", "si"}));
  app.add_option("--out", o.out, "Output file (default stdout)");
  app.add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--n-max", o.n_max, "Matsubara cutoff for the oracle");

  auto* force = app.add_subcommand("force", "Force at the configured point");
  force->add_option("--config", o.config, "Run configuration (JSON)")->required();
  force->add_flag("--oracle", o.oracle, "Also evaluate the Matsubara oracle");
  force->fallthrough();

  auto* sweep = app.add_subcommand("sweep", "Force over the configured sweep");
  sweep->add_option("--config", o.config, "Run configuration (JSON)")->required();
  sweep->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
  sweep->add_flag("--oracle", o.oracle, "Also evaluate the Matsubara oracle");
  sweep->fallthrough();

  auto* validate = app.add_subcommand("validate", "Run a validation battery");
  validate->add_option("--suite", o.suite, "Battery name")
      ->required()
      ->check(CLI::IsMember(oscforce::validation::suite_names()));
  validate->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return oscforce::cli::exit_config;
  }

  try {
    if (*force) return run_force(o);
    if (*sweep) return run_sweep(o);
    return run_validate(o);
  } catch (const std::exception& e) {
    std::cerr << "oscforce: error: " << e.what() << '\n';
    return oscforce::cli::exit_code_for(e);
  }
}
