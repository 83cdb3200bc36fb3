#pragma once

#include <cstdint>

#include "elmid/types.hpp"

namespace elmid {

// Piecewise-constant excitation: each segment holds one of `levels`
// equispaced values spanning [lo, hi] for a duration drawn uniformly from
// [hold_min, hold_max].
struct PrmsConfig {
  int levels = 5;
  double lo = -1.0;
  double hi = 1.0;
  double hold_min = 0.05;
  double hold_max = 0.5;
  std::uint64_t seed = 0;
  double duration = 0.0;
  double dt = 0.0;
};

// Sampled signal covering t = 0..duration inclusive:
// round(duration/dt) + 1 samples.
Vec prms_generate(const PrmsConfig& c);

struct NoiseConfig {
  Vec sigma;  // per-dimension standard deviation, entries >= 0
  std::uint64_t seed = 0;
};

// signal + i.i.d. zero-mean Gaussian noise per dimension (row = one time
// sample). Columns with sigma == 0 are returned untouched.
Mat add_noise(const Mat& signal, const NoiseConfig& n);

}  // namespace elmid
