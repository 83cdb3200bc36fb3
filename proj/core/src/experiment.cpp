#include "elmid/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "elmid/adaptive_observer.hpp"
#include "elmid/config_io.hpp"
#include "elmid/errors.hpp"
#include "elmid/narx.hpp"
#include "elmid/online_rls.hpp"
#include "elmid/ridge.hpp"
#include "elmid/rng.hpp"

namespace elmid {

namespace {

constexpr int kMaxWeightRows = 2000;

void append_g17(std::string& s, double v) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  s.append(buf, size_t(n));
}

bool is_known_method(const std::string& m) {
  return m == kMethodOnline || m == kMethodLyapunov;
}

void validate(const ExperimentConfig& c, const PlantDefinition& plant) {
  const int n = plant.state_dim;
  const int m = plant.input_dim;
  if (c.A_diag.size() != n)
    throw ConfigError("config: A_diag must have one entry per plant state");
  if (c.hidden_dim < 1) throw ConfigError("config: hidden_dim must be >= 1");
  if (!(c.dt > 0.0)) throw ConfigError("config: dt must be positive");
  if (std::llround(c.duration / c.dt) < 1)
    throw ConfigError("config: duration must cover at least one step");
  if (c.sample_stride < 1)
    throw ConfigError("config: sample_stride must be >= 1");
  if (!(c.lambda > 0.0)) throw ConfigError("config: lambda must be positive");
  if (!(c.gain >= 0.0)) throw ConfigError("config: gain must be >= 0");
  if (!(c.noise_sigma >= 0.0))
    throw ConfigError("config: noise_sigma must be >= 0");
  if (c.dead_zone_radius < 0.0)
    throw ConfigError("config: dead_zone_radius must be >= 0");
  if (c.z0.size() != n)
    throw ConfigError("config: z0 must match the plant state dimension");
  if (c.state_lo.size() != n || c.state_hi.size() != n)
    throw ConfigError("config: state bounds must match the plant state dimension");
  if (c.input_lo.size() != m || c.input_hi.size() != m)
    throw ConfigError("config: input bounds must match the plant input dimension");
  for (const auto& method : c.methods)
    if (!is_known_method(method))
      throw ConfigError("config: unknown method '" + method + "'");
  for (size_t i = 0; i < c.methods.size(); ++i)
    for (size_t j = i + 1; j < c.methods.size(); ++j)
      if (c.methods[i] == c.methods[j])
        throw ConfigError("config: duplicate method '" + c.methods[i] + "'");
}

Mat flatten_weight_row(const Mat& W) {
  Mat row(1, W.size());
  int at = 0;
  for (int i = 0; i < W.rows(); ++i)
    for (int j = 0; j < W.cols(); ++j) row(0, at++) = W(i, j);
  return row;
}

struct WeightLog {
  Mat traj;
  Vec times;
  int rows = 0;
  int stride = 1;

  WeightLog(int total_samples, int flat_dim) {
    stride = (total_samples + kMaxWeightRows - 1) / kMaxWeightRows;
    const int capacity = (total_samples + stride - 1) / stride;
    traj.resize(capacity, flat_dim);
    times.resize(capacity);
  }

  void maybe_record(int k, double t, const Mat& W) {
    if (k % stride != 0 || rows >= traj.rows()) return;
    traj.row(rows) = flatten_weight_row(W);
    times[rows] = t;
    ++rows;
  }

  void finish(MethodSeries& out) {
    out.weight_traj = traj.topRows(rows);
    out.weight_times = times.head(rows);
  }
};

}  // namespace

ExperimentConfig default_config(const std::string& plant) {
  ExperimentConfig c;
  c.plant = plant;
  c.seed = 1;
  c.dt = 1e-4;
  c.lambda = 1e6;
  c.gain = 20000.0;
  c.noise_sigma = 0.0;
  if (plant == "dc_motor") {
    c.hidden_dim = 8;
    c.duration = 10.0;
    c.A_diag = (Vec(2) << -50.0, -50.0).finished();
    c.z0 = Vec::Zero(2);
    c.state_lo = (Vec(2) << 0.0, -1500.0).finished();
    c.state_hi = (Vec(2) << 1.5, 1500.0).finished();
    c.input_lo = Vec::Constant(1, -0.1);
    c.input_hi = Vec::Constant(1, 0.1);
    c.sample_stride = 500;
    c.prms = PrmsConfig{};
  } else if (plant == "lorentz") {
    c.hidden_dim = 12;
    c.duration = 20.0;
    c.A_diag = (Vec(3) << -60.0, -60.0, -120.0).finished();
    c.z0 = Vec::Ones(3);
    c.state_lo = (Vec(3) << -25.0, -25.0, 0.0).finished();
    c.state_hi = (Vec(3) << 25.0, 25.0, 50.0).finished();
    c.input_lo = Vec(0);
    c.input_hi = Vec(0);
    c.sample_stride = 1000;
    c.prms = std::nullopt;
  } else {
    throw ConfigError("unknown plant '" + plant +
                      "' (expected dc_motor or lorentz)");
  }
  return c;
}

double normalized_rmse(const Mat& truth, const Mat& estimate,
                       const NormalizationBounds& bounds) {
  if (truth.rows() != estimate.rows() || truth.cols() != estimate.cols())
    throw ConfigError("normalized_rmse: series shapes differ");
  if (truth.rows() < 1) throw ConfigError("normalized_rmse: empty series");
  const Mat tn = bounds.normalize_rows(truth);
  const Mat en = bounds.normalize_rows(estimate);
  double acc = 0.0;
  for (int j = 0; j < tn.cols(); ++j)
    acc += std::sqrt((tn.col(j) - en.col(j)).squaredNorm() / double(tn.rows()));
  return acc / double(tn.cols());
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  PlantDefinition plant;
  if (config.plant == "dc_motor")
    plant = dc_motor_plant(config.dc_params);
  else if (config.plant == "lorentz")
    plant = lorentz_plant(config.lorentz_params);
  else
    throw ConfigError("unknown plant '" + config.plant +
                      "' (expected dc_motor or lorentz)");
  return run_experiment(config, plant);
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const PlantDefinition& plant) {
  validate(config, plant);
  const int n = plant.state_dim;
  const int m = plant.input_dim;
  const int steps = int(std::llround(config.duration / config.dt));
  const int N = steps + 1;
  const double dt = config.dt;

  const NormalizationBounds state_bounds(config.state_lo, config.state_hi);
  const NormalizationBounds input_bounds =
      m > 0 ? NormalizationBounds(config.input_lo, config.input_hi)
            : NormalizationBounds();

  // Independent sub-streams derived from the master seed; both methods share
  // the projection and the measurement stream.
  SplitMix64 seeder(config.seed);
  const std::uint64_t proj_seed = seeder.next();
  const std::uint64_t prms_seed = seeder.next();
  const std::uint64_t noise_seed = seeder.next();

  const RandomProjection proj =
      RandomProjection::create(m + n, config.hidden_dim, proj_seed);

  ExperimentResult result;
  result.seed = config.seed;
  result.noise_sigma = config.noise_sigma;
  result.plant = config.plant;
  result.config_hash = config_hash(config);
  result.time = Vec::LinSpaced(N, 0.0, steps * dt);

  // Excitation (normalized, then mapped to physical units).
  Mat u_norm = Mat::Zero(N, m);
  if (m > 0 && config.prms.has_value()) {
    SplitMix64 channel_seeds(prms_seed);
    for (int ch = 0; ch < m; ++ch) {
      PrmsConfig pc = *config.prms;
      pc.duration = config.duration;
      pc.dt = dt;
      pc.seed = channel_seeds.next();
      u_norm.col(ch) = prms_generate(pc);
    }
  }
  const Mat u_phys = m > 0 ? input_bounds.denormalize_rows(u_norm) : u_norm;

  // Ground truth.
  result.truth.resize(N, n);
  result.truth.row(0) = config.z0.transpose();
  {
    Vec z = config.z0;
    for (int k = 0; k < steps; ++k) {
      z = plant_rk4_step(plant, z, u_phys.row(k).transpose(), k * dt, dt);
      result.truth.row(k + 1) = z.transpose();
    }
  }

  // Shared measurement stream.
  Mat z_meas = state_bounds.normalize_rows(result.truth);
  if (config.noise_sigma > 0.0) {
    NoiseConfig nc;
    nc.sigma = Vec::Constant(n, config.noise_sigma);
    nc.seed = noise_seed;
    z_meas = add_noise(z_meas, nc);
  }

  const Mat A = Mat(config.A_diag.asDiagonal());
  const auto nan = std::numeric_limits<double>::quiet_NaN();

  for (const auto& method : config.methods) {
    MethodSeries series;
    series.name = method;
    series.z_hat = Mat::Constant(N, n, nan);
    WeightLog wlog(N, config.hidden_dim * n);

    if (method == kMethodLyapunov) {
      AdaptiveObserver obs(A, proj, Mat::Zero(config.hidden_dim, n),
                           z_meas.row(0).transpose(), config.gain,
                           config.dead_zone_radius);
      series.z_hat.row(0) =
          state_bounds.denormalize(obs.z_hat()).transpose();
      Vec model_input(m + n);
      try {
        for (int k = 0; k < steps; ++k) {
          wlog.maybe_record(k, k * dt, obs.W_hat());
          if (m > 0) model_input.head(m) = u_norm.row(k).transpose();
          model_input.tail(n) = z_meas.row(k).transpose();
          obs.step(z_meas.row(k).transpose(), model_input, dt);
          series.z_hat.row(k + 1) =
              state_bounds.denormalize(obs.z_hat()).transpose();
        }
        wlog.maybe_record(steps, steps * dt, obs.W_hat());
      } catch (const DivergenceError& err) {
        result.diverged = true;
        result.note = err.what();
        // rows not reached stay NaN (series pre-filled above)
      }
    } else {  // online_elm
      OnlineState state =
          OnlineState::fresh(config.hidden_dim, n, config.lambda);
      NarxWindow window(1, 1, m, n);
      const Vec initial_est = z_meas.row(0).transpose();
      series.z_hat.row(0) = state_bounds.denormalize(initial_est).transpose();
      bool trained = false;
      Vec held = initial_est;
      Vec sample_input(m + n);
      for (int k = 0; k <= steps; ++k) {
        wlog.maybe_record(k, k * dt, state.W);
        if (k % config.sample_stride == 0) {
          const Vec u_k = u_norm.row(k).transpose();
          const Vec y_k = z_meas.row(k).transpose();
          auto pair = window.push(u_k, y_k);
          if (pair) {
            const Vec phi = proj.hidden_output(pair->first);
            state.update(phi.transpose(), pair->second.transpose());
            trained = true;
          }
          if (trained) {
            if (m > 0) sample_input.head(m) = u_k;
            sample_input.tail(n) = y_k;
            held = predict(proj, state.W, sample_input);
          }
        }
        if (k < steps)
          series.z_hat.row(k + 1) =
              state_bounds.denormalize(held).transpose();
      }
    }

    wlog.finish(series);
    series.rmse = normalized_rmse(result.truth, series.z_hat, state_bounds);
    result.methods.push_back(std::move(series));
  }

  return result;
}

void export_csv(const ExperimentResult& r, const std::string& path) {
  const int N = int(r.time.size());
  const int n = int(r.truth.cols());
  std::string out;
  out.reserve(size_t(N) * 32 * size_t(1 + n + 2 * n * std::max<size_t>(1, r.methods.size())));

  out += "t";
  for (int j = 0; j < n; ++j) out += ",z" + std::to_string(j + 1);
  for (const auto& ms : r.methods) {
    for (int j = 0; j < n; ++j)
      out += ",zhat_" + ms.name + "_" + std::to_string(j + 1);
    for (int j = 0; j < n; ++j)
      out += ",e_" + ms.name + "_" + std::to_string(j + 1);
  }
  out += "\n";

  for (int k = 0; k < N; ++k) {
    append_g17(out, r.time[k]);
    for (int j = 0; j < n; ++j) {
      out += ',';
      append_g17(out, r.truth(k, j));
    }
    for (const auto& ms : r.methods) {
      for (int j = 0; j < n; ++j) {
        out += ',';
        append_g17(out, ms.z_hat(k, j));
      }
      for (int j = 0; j < n; ++j) {
        out += ',';
        append_g17(out, r.truth(k, j) - ms.z_hat(k, j));
      }
    }
    out += "\n";
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file.write(out.data(), std::streamsize(out.size()));
  if (!file) throw std::runtime_error("write failed: " + path);
}

void export_weights_csv(const ExperimentResult& r, const std::string& method,
                        const std::string& path) {
  const MethodSeries* found = nullptr;
  for (const auto& ms : r.methods)
    if (ms.name == method) found = &ms;
  if (!found)
    throw ConfigError("export_weights_csv: no series for method '" + method + "'");

  std::string out = "t";
  for (int j = 0; j < found->weight_traj.cols(); ++j)
    out += ",w_" + std::to_string(j + 1);
  out += "\n";
  for (int k = 0; k < found->weight_traj.rows(); ++k) {
    append_g17(out, found->weight_times[k]);
    for (int j = 0; j < found->weight_traj.cols(); ++j) {
      out += ',';
      append_g17(out, found->weight_traj(k, j));
    }
    out += "\n";
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file.write(out.data(), std::streamsize(out.size()));
  if (!file) throw std::runtime_error("write failed: " + path);
}

std::string summary_table(const std::vector<ExperimentResult>& runs) {
  std::vector<std::string> methods;
  bool any_truth_only = false;
  for (const auto& r : runs) {
    if (r.methods.empty()) any_truth_only = true;
    for (const auto& ms : r.methods) {
      bool known = false;
      for (const auto& m : methods) known |= (m == ms.name);
      if (!known) methods.push_back(ms.name);
    }
  }

  std::map<std::pair<std::string, bool>, std::vector<double>> cells;
  for (const auto& r : runs)
    for (const auto& ms : r.methods)
      cells[{ms.name, r.noise_sigma > 0.0}].push_back(ms.rmse);

  auto fmt_cell = [](const std::vector<double>& v) -> std::string {
    if (v.empty()) return "-";
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= double(v.size());
    char buf[64];
    if (v.size() == 1) {
      std::snprintf(buf, sizeof buf, "%.4f", mean);
      return buf;
    }
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= double(v.size() - 1);
    std::snprintf(buf, sizeof buf, "%.4f +/- %.4f", mean, std::sqrt(var));
    return buf;
  };

  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-14s %-20s %-20s\n", "method", "clean",
                "noisy");
  out << line;
  for (const auto& m : methods) {
    std::snprintf(line, sizeof line, "%-14s %-20s %-20s\n", m.c_str(),
                  fmt_cell(cells[{m, false}]).c_str(),
                  fmt_cell(cells[{m, true}]).c_str());
    out << line;
  }
  if (methods.empty()) out << "(truth only)\n";
  if (any_truth_only)
    out << "warning: at least one run produced truth series only (no methods)\n";
  return out.str();
}

bool write_benchmark_tables(const std::string& out_dir, std::ostream* log) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  std::string per_seed = "plant,case,seed,method,rmse\n";
  bool all_ok = true;

  const char* plants[] = {"dc_motor", "lorentz"};
  const char* tables[] = {"table1.csv", "table2.csv"};
  const std::vector<std::string> methods = {kMethodOnline, kMethodLyapunov};

  for (int pi = 0; pi < 2; ++pi) {
    std::map<std::pair<std::string, bool>, std::vector<double>> cells;
    std::vector<ExperimentResult> stubs;

    for (bool noisy : {false, true}) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        ExperimentConfig cfg = default_config(plants[pi]);
        cfg.seed = seed;
        cfg.noise_sigma = noisy ? kNoisySigma : 0.0;
        ExperimentResult res = run_experiment(cfg);
        if (res.diverged) {
          all_ok = false;
          if (log) *log << plants[pi] << " seed " << seed << " DIVERGED: "
                        << res.note << "\n";
        }

        ExperimentResult stub;  // metadata + RMSE only, series dropped
        stub.seed = res.seed;
        stub.noise_sigma = res.noise_sigma;
        stub.plant = res.plant;
        stub.diverged = res.diverged;
        for (const auto& ms : res.methods) {
          MethodSeries s;
          s.name = ms.name;
          s.rmse = ms.rmse;
          stub.methods.push_back(std::move(s));

          cells[{ms.name, noisy}].push_back(ms.rmse);
          per_seed += std::string(plants[pi]) + "," +
                      (noisy ? "noisy" : "clean") + "," +
                      std::to_string(seed) + "," + ms.name + ",";
          append_g17(per_seed, ms.rmse);
          per_seed += "\n";
        }
        stubs.push_back(std::move(stub));
      }
    }

    std::string table = "method,clean_mean,clean_std,noisy_mean,noisy_std\n";
    for (const auto& m : methods) {
      auto stats = [&](bool noisy) -> std::pair<double, double> {
        const auto& v = cells[{m, noisy}];
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= double(v.size());
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        var = v.size() > 1 ? var / double(v.size() - 1) : 0.0;
        return {mean, std::sqrt(var)};
      };
      const auto [cm, cs] = stats(false);
      const auto [nm, ns] = stats(true);
      table += m + ",";
      append_g17(table, cm);
      table += ",";
      append_g17(table, cs);
      table += ",";
      append_g17(table, nm);
      table += ",";
      append_g17(table, ns);
      table += "\n";
    }

    std::ofstream tf(fs::path(out_dir) / tables[pi], std::ios::binary);
    if (!tf) throw std::runtime_error(std::string("cannot write ") + tables[pi]);
    tf << table;

    if (log) {
      *log << plants[pi] << " (normalized RMSE, 10 seeds):\n"
           << summary_table(stubs) << "\n";
    }
  }

  std::ofstream pf(fs::path(out_dir) / "per_seed.csv", std::ios::binary);
  if (!pf) throw std::runtime_error("cannot write per_seed.csv");
  pf << per_seed;

  return all_ok;
}

}  // namespace elmid
