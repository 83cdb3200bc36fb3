// elmid CLI: `run` executes one configured experiment and writes its series;
// `reproduce` regenerates the benchmark comparison tables.
//
// Exit codes: 0 success, 2 configuration error, 3 estimator/plant divergence,
// 4 I/O failure.
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "elmid/config_io.hpp"
#include "elmid/errors.hpp"
#include "elmid/experiment.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDiverged = 3;
constexpr int kExitIo = 4;

int run_single(const std::string& config_path, const std::string& plant,
               const std::optional<double>& noise_sigma,
               const std::optional<std::uint64_t>& seed,
               const std::optional<double>& dt,
               const std::optional<double>& duration,
               const std::string& out_dir) {
  elmid::ExperimentConfig cfg = elmid::load_config(config_path, plant);
  if (noise_sigma) cfg.noise_sigma = *noise_sigma;
  if (seed) cfg.seed = *seed;
  if (dt) cfg.dt = *dt;
  if (duration) cfg.duration = *duration;
  if (!out_dir.empty()) cfg.out_dir = out_dir;

  const elmid::ExperimentResult res = elmid::run_experiment(cfg);

  std::cout << "plant: " << res.plant << "  seed: " << res.seed
            << "  noise sigma: " << res.noise_sigma << "\n";
  for (const auto& ms : res.methods)
    std::cout << "  " << ms.name << " normalized rmse: " << ms.rmse << "\n";
  if (res.diverged)
    std::cout << "DIVERGED: " << res.note << "\n";
  std::cout << elmid::summary_table({res});

  if (!cfg.out_dir.empty()) {
    fs::create_directories(cfg.out_dir);
    const fs::path dir(cfg.out_dir);
    elmid::export_csv(res, (dir / "series.csv").string());
    for (const auto& ms : res.methods)
      elmid::export_weights_csv(res, ms.name,
                                (dir / ("weights_" + ms.name + ".csv")).string());
    elmid::save_config(cfg, (dir / "config.json").string());
    std::cout << "wrote " << (dir / "series.csv").string() << "\n";
  }
  return res.diverged ? kExitDiverged : kExitOk;
}

int run_reproduce(const std::string& out_dir) {
  const bool ok = elmid::write_benchmark_tables(out_dir, &std::cout);
  std::cout << "wrote " << (fs::path(out_dir) / "table1.csv").string() << ", "
            << (fs::path(out_dir) / "table2.csv").string() << ", "
            << (fs::path(out_dir) / "per_seed.csv").string() << "\n";
  return ok ? kExitOk : kExitDiverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online estimation benchmark for nonlinear dynamic systems"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run one experiment from a config file");
  std::string config_path, plant, out_dir;
  std::optional<double> noise_sigma, dt, duration;
  std::optional<std::uint64_t> seed;
  run->add_option("--config", config_path, "path to a JSON config file")
      ->required();
  run->add_option("--plant", plant, "plant override: dc_motor or lorentz")
      ->check(CLI::IsMember({"dc_motor", "lorentz"}));
  run->add_option("--noise-sigma", noise_sigma,
                  "measurement noise sigma (normalized units)");
  run->add_option("--seed", seed, "master seed");
  run->add_option("--dt", dt, "integration step");
  run->add_option("--duration", duration, "run length in time units");
  run->add_option("--out", out_dir, "directory for series/weights/config CSV");

  // reproduce
  auto* repro = app.add_subcommand(
      "reproduce", "regenerate the benchmark comparison tables (10 seeds)");
  bool paper_tables = false;
  std::string repro_out;
  repro->add_flag("--paper-tables", paper_tables,
                  "produce table1.csv, table2.csv and per_seed.csv");
  repro->add_option("--out", repro_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // --help: exit 0 with usage text
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the CLI11 diagnostic
    return kExitConfig;
  }

  try {
    if (app.got_subcommand(run))
      return run_single(config_path, plant, noise_sigma, seed, dt, duration,
                        out_dir);
    if (!paper_tables) {
      std::cerr << "reproduce: nothing to do (pass --paper-tables)\n";
      return kExitConfig;
    }
    return run_reproduce(repro_out);
  } catch (const elmid::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const elmid::DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << "\n";
    return kExitDiverged;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
