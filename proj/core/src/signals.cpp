#include "elmid/signals.hpp"

#include <algorithm>
#include <cmath>

#include "elmid/errors.hpp"
#include "elmid/rng.hpp"

namespace elmid {

Vec prms_generate(const PrmsConfig& c) {
  if (c.levels < 2) throw ConfigError("prms: need at least 2 levels");
  if (!(c.lo < c.hi)) throw ConfigError("prms: lo must be below hi");
  if (!(c.dt > 0.0)) throw ConfigError("prms: dt must be positive");
  if (!(c.duration > 0.0)) throw ConfigError("prms: duration must be positive");
  if (c.hold_min < c.dt) throw ConfigError("prms: hold_min must be >= dt");
  if (c.hold_max < c.hold_min)
    throw ConfigError("prms: hold_max must be >= hold_min");

  const int n = int(std::llround(c.duration / c.dt)) + 1;
  Vec u(n);
  Rng rng(c.seed);
  int i = 0;
  while (i < n) {
    const int k = rng.uniform_int(c.levels);
    const double level = c.lo + (c.hi - c.lo) * (double(k) / (c.levels - 1));
    const double hold = rng.uniform(c.hold_min, c.hold_max);
    const int len = std::max(1, int(std::llround(hold / c.dt)));
    for (int j = 0; j < len && i < n; ++j, ++i) u[i] = level;
  }
  return u;
}

Mat add_noise(const Mat& signal, const NoiseConfig& n) {
  if (n.sigma.size() != signal.cols())
    throw ConfigError("add_noise: sigma must have one entry per column");
  for (int j = 0; j < n.sigma.size(); ++j)
    if (!(n.sigma[j] >= 0.0))
      throw ConfigError("add_noise: sigma entries must be >= 0");

  Mat out = signal;
  Rng rng(n.seed);
  for (int i = 0; i < signal.rows(); ++i)
    for (int j = 0; j < signal.cols(); ++j)
      if (n.sigma[j] > 0.0) out(i, j) += n.sigma[j] * rng.gaussian();
  return out;
}

}  // namespace elmid
