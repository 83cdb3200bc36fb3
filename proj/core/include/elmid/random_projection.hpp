#pragma once

#include <cstdint>

#include "elmid/types.hpp"

namespace elmid {

// Numerically stable logistic sigmoid, strictly in (0, 1).
double sigmoid(double v);

// Frozen random input layer: weights (hidden x input) and biases drawn
// i.i.d. uniform on [-1, 1] from the documented deterministic generator.
// Fill order is weights row by row, then biases, so the same (dims, seed)
// reproduces the same projection bit for bit.
struct RandomProjection {
  Mat weights;
  Vec biases;
  std::uint64_t seed = 0;

  static RandomProjection create(int input_dim, int hidden_dim,
                                 std::uint64_t seed);

  int input_dim() const { return int(weights.cols()); }
  int hidden_dim() const { return int(weights.rows()); }

  // phi = sigmoid(weights * x + biases); every entry in (0, 1).
  Vec hidden_output(const Vec& x) const;
};

// Model output phi(x)^T W for output weights W (hidden x out).
Vec predict(const RandomProjection& proj, const Mat& W, const Vec& x);

}  // namespace elmid
