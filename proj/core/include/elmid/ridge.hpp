#pragma once

#include "elmid/random_projection.hpp"
#include "elmid/types.hpp"

namespace elmid {

// Hidden-layer design matrix: row k = hidden_output(proj, X.row(k)).
Mat build_hidden_matrix(const RandomProjection& proj, const Mat& X);

// Regularized least squares for the output weights:
//   W = (I/lambda + H^T H)^{-1} H^T Y,
// solved by Cholesky on the SPD normal matrix. Note the convention: lambda
// multiplies the *inverse* of the weight penalty, so large lambda means
// near-unregularized and small lambda shrinks W toward zero.
Mat ridge_solve(const Mat& H, const Mat& Y, double lambda);

}  // namespace elmid
