#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "elmid/normalization.hpp"
#include "elmid/plants.hpp"
#include "elmid/signals.hpp"
#include "elmid/types.hpp"

namespace elmid {

inline constexpr const char* kMethodOnline = "online_elm";
inline constexpr const char* kMethodLyapunov = "lyapunov_elm";

// Measurement-noise level used for the "noisy" benchmark cells.
inline constexpr double kNoisySigma = 0.01;

// Declarative description of one benchmark run. default_config() fills every
// field for a named plant; config files and CLI flags override from there.
struct ExperimentConfig {
  std::string plant = "dc_motor";  // dc_motor | lorentz
  DcMotorParams dc_params{};
  LorentzParams lorentz_params{};
  Vec A_diag;           // diagonal of the observer design matrix
  int hidden_dim = 8;
  std::uint64_t seed = 1;
  double dt = 1e-4;
  double duration = 10.0;
  double lambda = 1e6;  // ridge factor for the online method
  double gain = 1.0;    // observer adaptation gain
  int sample_stride = 1;  // online method samples every sample_stride * dt
  std::optional<PrmsConfig> prms;  // excitation; absent -> zero input
  double noise_sigma = 0.0;        // measurement noise, normalized units
  std::vector<std::string> methods{kMethodOnline, kMethodLyapunov};
  Vec z0;                     // physical initial state
  Vec state_lo, state_hi;     // normalization bounds, physical units
  Vec input_lo, input_hi;
  double dead_zone_radius = 0.0;  // 0 disables the adaptation dead zone
  std::string out_dir;            // optional CSV destination (used by the CLI)
};

ExperimentConfig default_config(const std::string& plant);

struct MethodSeries {
  std::string name;
  Mat z_hat;        // N x n estimated states, physical units, shared grid
  Mat weight_traj;  // <= 2000 rows, flattened W snapshots (row-major)
  Vec weight_times;
  double rmse = 0.0;  // normalized RMSE against the noise-free truth
};

struct ExperimentResult {
  Vec time;     // N samples, t = 0..duration
  Mat truth;    // N x n true states, physical units (noise-free)
  std::vector<MethodSeries> methods;
  bool diverged = false;
  std::string note;  // divergence context, when any
  std::uint64_t seed = 0;
  double noise_sigma = 0.0;
  std::string plant;
  std::uint64_t config_hash = 0;
};

// Per-dimension RMSE in [-1, 1]-normalized coordinates, averaged across
// dimensions.
double normalized_rmse(const Mat& truth, const Mat& estimate,
                       const NormalizationBounds& bounds);

// Run the named benchmark plant from the config.
//
// Seed contract (part of the reproducibility guarantee): SplitMix64(seed)
// yields, in order, the projection seed, the excitation seed, and the noise
// seed. Both methods share the projection and the measurement stream built
// from them. Excitation channels use SplitMix64(excitation seed), one draw
// per input channel.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Run an explicit plant (synthetic-truth tests); the config's plant field is
// used only as a label.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const PlantDefinition& plant);

// Time-series CSV: t, z1..zn, then per method zhat_<name>_i and e_<name>_i
// (e = truth - estimate, physical units). Values printed with %.17g.
void export_csv(const ExperimentResult& r, const std::string& path);

// Weight-trajectory CSV for one method: t, w_1..w_{hidden*n} (row-major).
void export_weights_csv(const ExperimentResult& r, const std::string& method,
                        const std::string& path);

// Text table: method rows x {clean, noisy} columns of normalized RMSE over
// one or more runs; repeated cells aggregate to mean +/- sample std.
std::string summary_table(const std::vector<ExperimentResult>& runs);

// Run both benchmark plants across seeds 1..10, clean and noisy, and write
// table1.csv (dc_motor), table2.csv (lorentz) and per_seed.csv into out_dir.
// Returns false if any run diverged. Progress lines go to `log` when given.
bool write_benchmark_tables(const std::string& out_dir,
                            std::ostream* log = nullptr);

}  // namespace elmid
