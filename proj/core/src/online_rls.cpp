#include "elmid/online_rls.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "elmid/errors.hpp"
#include "elmid/ridge.hpp"

namespace elmid {

OnlineState OnlineState::fresh(int hidden_dim, int output_dim, double lambda) {
  if (hidden_dim < 1 || output_dim < 1)
    throw ConfigError("online state: dimensions must be >= 1");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ConfigError("online state: lambda must be positive and finite");
  OnlineState s;
  s.W = Mat::Zero(hidden_dim, output_dim);
  s.P = Mat::Identity(hidden_dim, hidden_dim) * lambda;
  return s;
}

OnlineState OnlineState::from_batch(const Mat& H0, const Mat& Y0,
                                    double lambda) {
  if (H0.rows() < 1 || H0.rows() != Y0.rows())
    throw ConfigError("online init: need n0 >= 1 rows in H0 and Y0");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ConfigError("online init: lambda must be positive and finite");
  if (!H0.allFinite() || !Y0.allFinite())
    throw ConfigError("online init: non-finite seed data");
  const int h = int(H0.cols());
  Mat K = Mat::Identity(h, h) / lambda;
  K.noalias() += H0.transpose() * H0;
  Eigen::LLT<Mat> llt(K);
  if (llt.info() != Eigen::Success)
    throw NumericError("online init: Cholesky factorization failed");
  OnlineState s;
  s.W = llt.solve(H0.transpose() * Y0);
  s.P = llt.solve(Mat::Identity(h, h));
  s.P = ((s.P + s.P.transpose()) * 0.5).eval();
  return s;
}

void OnlineState::update(const Mat& H1, const Mat& Y1) {
  if (H1.rows() < 1 || H1.rows() != Y1.rows() || H1.cols() != W.rows() ||
      Y1.cols() != W.cols())
    throw ConfigError("online update: dimension mismatch");
  if (!H1.allFinite() || !Y1.allFinite())
    throw ConfigError("online update: non-finite input");

  const int k = int(H1.rows());
  const Mat G = P * H1.transpose();  // hidden x k
  Mat S = Mat::Identity(k, k);
  S.noalias() += H1 * G;
  Eigen::LLT<Mat> llt(S);
  if (llt.info() != Eigen::Success)
    throw NumericError("online update: innovation matrix not SPD");
  P.noalias() -= G * llt.solve(G.transpose());

  const double scale = std::max(1.0, P.cwiseAbs().maxCoeff());
  const double asym = (P - P.transpose()).cwiseAbs().maxCoeff();
  P = ((P + P.transpose()) * 0.5).eval();
  if (asym > 1e-6 * scale)
    throw NumericError("online update: covariance lost symmetry (relative asymmetry " +
                       std::to_string(asym / scale) + ")");

  W.noalias() += P * (H1.transpose() * (Y1 - H1 * W));
}

}  // namespace elmid
