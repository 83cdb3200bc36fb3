#pragma once

#include <string>
#include <utility>

#include "elmid/errors.hpp"
#include "elmid/types.hpp"

namespace elmid {

// Per-dimension affine map between physical units and [-1, 1]. Values may
// leave [-1, 1] transiently; only degenerate bounds are rejected.
struct NormalizationBounds {
  Vec lower, upper;

  NormalizationBounds() = default;

  NormalizationBounds(Vec lo, Vec hi)
      : lower(std::move(lo)), upper(std::move(hi)) {
    if (lower.size() != upper.size())
      throw ConfigError("normalization bounds: lower/upper size mismatch");
    for (int i = 0; i < lower.size(); ++i)
      if (!(lower[i] < upper[i]))
        throw ConfigError("normalization bounds: lower must be strictly below upper (dim " +
                          std::to_string(i) + ")");
  }

  // The do-nothing map: [-1, 1] onto itself in every dimension.
  static NormalizationBounds identity(int dim) {
    return {Vec::Constant(dim, -1.0), Vec::Constant(dim, 1.0)};
  }

  int dim() const { return int(lower.size()); }

  Vec normalize(const Vec& x) const {
    check(int(x.size()));
    return (2.0 * (x - lower).array() / (upper - lower).array() - 1.0).matrix();
  }

  Vec denormalize(const Vec& xn) const {
    check(int(xn.size()));
    return (lower.array() + (xn.array() + 1.0) * 0.5 * (upper - lower).array()).matrix();
  }

  // Row-wise variants for whole series (one sample per row).
  Mat normalize_rows(const Mat& X) const {
    check(int(X.cols()));
    Mat r(X.rows(), X.cols());
    for (int j = 0; j < X.cols(); ++j)
      r.col(j) = 2.0 * (X.col(j).array() - lower[j]) / (upper[j] - lower[j]) - 1.0;
    return r;
  }

  Mat denormalize_rows(const Mat& X) const {
    check(int(X.cols()));
    Mat r(X.rows(), X.cols());
    for (int j = 0; j < X.cols(); ++j)
      r.col(j) = lower[j] + (X.col(j).array() + 1.0) * 0.5 * (upper[j] - lower[j]);
    return r;
  }

 private:
  void check(int n) const {
    if (n != lower.size())
      throw ConfigError("normalization: dimension mismatch (got " + std::to_string(n) +
                        ", bounds have " + std::to_string(lower.size()) + ")");
  }
};

}  // namespace elmid
