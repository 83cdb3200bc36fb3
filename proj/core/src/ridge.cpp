#include "elmid/ridge.hpp"

#include <cmath>
#include <string>

#include "elmid/errors.hpp"

namespace elmid {

Mat build_hidden_matrix(const RandomProjection& proj, const Mat& X) {
  if (X.cols() != proj.weights.cols())
    throw ConfigError("build_hidden_matrix: sample dimension mismatch");
  Mat H(X.rows(), proj.hidden_dim());
  for (int k = 0; k < X.rows(); ++k)
    H.row(k) = proj.hidden_output(X.row(k).transpose()).transpose();
  return H;
}

Mat ridge_solve(const Mat& H, const Mat& Y, double lambda) {
  if (H.rows() != Y.rows() || H.rows() < 1)
    throw ConfigError("ridge_solve: H and Y must share N >= 1 rows");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ConfigError("ridge_solve: lambda must be positive and finite");
  if (!H.allFinite() || !Y.allFinite())
    throw ConfigError("ridge_solve: non-finite design data");
  const int h = int(H.cols());
  Mat K = Mat::Identity(h, h) / lambda;
  K.noalias() += H.transpose() * H;
  Eigen::LLT<Mat> llt(K);
  if (llt.info() != Eigen::Success)
    throw NumericError("ridge_solve: Cholesky factorization failed");
  return llt.solve(H.transpose() * Y);
}

}  // namespace elmid
