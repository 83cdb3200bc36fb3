#include "elmid/random_projection.hpp"

#include <cmath>
#include <string>

#include "elmid/errors.hpp"
#include "elmid/rng.hpp"

namespace elmid {

double sigmoid(double v) {
  if (v >= 0.0) return 1.0 / (1.0 + std::exp(-v));
  const double e = std::exp(v);
  return e / (1.0 + e);
}

RandomProjection RandomProjection::create(int input_dim, int hidden_dim,
                                          std::uint64_t seed) {
  if (input_dim < 1 || hidden_dim < 1)
    throw ConfigError("random projection: dimensions must be >= 1 (got input " +
                      std::to_string(input_dim) + ", hidden " +
                      std::to_string(hidden_dim) + ")");
  RandomProjection p;
  p.seed = seed;
  p.weights.resize(hidden_dim, input_dim);
  p.biases.resize(hidden_dim);
  Rng rng(seed);
  for (int i = 0; i < hidden_dim; ++i)
    for (int j = 0; j < input_dim; ++j) p.weights(i, j) = rng.uniform(-1.0, 1.0);
  for (int i = 0; i < hidden_dim; ++i) p.biases[i] = rng.uniform(-1.0, 1.0);
  return p;
}

Vec RandomProjection::hidden_output(const Vec& x) const {
  if (x.size() != weights.cols())
    throw ConfigError("hidden_output: input has " + std::to_string(x.size()) +
                      " entries, projection expects " +
                      std::to_string(weights.cols()));
  if (!x.allFinite()) throw ConfigError("hidden_output: non-finite input");
  Vec z = weights * x + biases;
  for (int i = 0; i < z.size(); ++i) z[i] = sigmoid(z[i]);
  return z;
}

Vec predict(const RandomProjection& proj, const Mat& W, const Vec& x) {
  if (W.rows() != proj.weights.rows())
    throw ConfigError("predict: weight rows do not match hidden size");
  return W.transpose() * proj.hidden_output(x);
}

}  // namespace elmid
