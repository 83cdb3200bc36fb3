#include "elmid/adaptive_observer.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "elmid/errors.hpp"

namespace elmid {

void require_hurwitz(const Mat& A) {
  if (A.rows() != A.cols() || A.rows() < 1)
    throw ConfigError("design matrix must be square and non-empty");
  if (!A.allFinite()) throw ConfigError("design matrix has non-finite entries");
  Eigen::EigenSolver<Mat> es(A, /*computeEigenvectors=*/false);
  int worst = 0;
  for (int i = 1; i < A.rows(); ++i)
    if (es.eigenvalues()[i].real() > es.eigenvalues()[worst].real()) worst = i;
  const auto ev = es.eigenvalues()[worst];
  if (!(ev.real() < 0.0)) {
    std::ostringstream msg;
    msg << "design matrix is not Hurwitz: eigenvalue " << ev.real();
    if (ev.imag() != 0.0) msg << (ev.imag() > 0 ? "+" : "") << ev.imag() << "i";
    msg << " has non-negative real part";
    throw ConfigError(msg.str());
  }
}

double lyapunov_value(const Vec& e, const Mat& W_tilde) {
  return 0.5 * e.squaredNorm() + 0.5 * W_tilde.squaredNorm();
}

StabilityBound stability_threshold(const Mat& A, double xi) {
  if (xi < 0.0) throw ConfigError("stability threshold: xi must be >= 0");
  Eigen::SelfAdjointEigenSolver<Mat> es((A + A.transpose()) * 0.5);
  const double mu = es.eigenvalues().maxCoeff();
  if (!(mu < 0.0))
    throw ConfigError("stability threshold: symmetric part of A is not negative definite");
  StabilityBound b;
  b.xi = xi;
  b.gamma = xi / std::abs(mu);
  return b;
}

AdaptiveObserver::AdaptiveObserver(Mat A, RandomProjection proj, Mat W0,
                                   Vec z0, double gain,
                                   double dead_zone_radius)
    : A_(std::move(A)),
      proj_(std::move(proj)),
      W_(std::move(W0)),
      z_hat_(std::move(z0)),
      gain_(gain),
      dead_zone_radius_(dead_zone_radius) {
  require_hurwitz(A_);
  if (z_hat_.size() != A_.rows())
    throw ConfigError("observer: initial state size does not match A");
  if (W_.rows() != proj_.hidden_dim() || W_.cols() != A_.rows())
    throw ConfigError("observer: W0 must be hidden_dim x state_dim");
  if (!(gain_ >= 0.0) || !std::isfinite(gain_))
    throw ConfigError("observer: gain must be >= 0 and finite");
  if (dead_zone_radius_ < 0.0)
    throw ConfigError("observer: dead-zone radius must be >= 0");
}

std::pair<Vec, Mat> AdaptiveObserver::derivatives(const Vec& z_meas,
                                                  const Vec& phi) const {
  if (z_meas.size() != z_hat_.size())
    throw ConfigError("observer derivatives: measurement dimension mismatch");
  if (phi.size() != W_.rows())
    throw ConfigError("observer derivatives: feature dimension mismatch");
  const Vec e = z_meas - z_hat_;
  Vec dz = A_ * z_hat_;
  dz.noalias() += W_.transpose() * phi;
  Mat dW = (gain_ * phi) * e.transpose();
  return {std::move(dz), std::move(dW)};
}

void AdaptiveObserver::step(const Vec& z_meas, const Vec& model_input,
                            double dt) {
  if (!(dt > 0.0)) throw ConfigError("observer step: dt must be positive");
  if (z_meas.size() != z_hat_.size())
    throw ConfigError("observer step: measurement dimension mismatch");
  const Vec phi = proj_.hidden_output(model_input);
  const bool frozen = dead_zone_radius_ > 0.0 &&
                      (z_meas - z_hat_).norm() <= dead_zone_radius_;

  // Coupled RK4 stages with (z_meas, phi) held across the step.
  auto fz = [&](const Vec& z, const Mat& W) -> Vec {
    Vec dz = A_ * z;
    dz.noalias() += W.transpose() * phi;
    return dz;
  };
  auto fW = [&](const Vec& z) -> Mat {
    if (frozen) return Mat::Zero(W_.rows(), W_.cols());
    return (gain_ * phi) * (z_meas - z).transpose();
  };

  const Vec k1z = fz(z_hat_, W_);
  const Mat k1W = fW(z_hat_);
  const Vec z2 = z_hat_ + (0.5 * dt) * k1z;
  const Vec k2z = fz(z2, W_ + (0.5 * dt) * k1W);
  const Mat k2W = fW(z2);
  const Vec z3 = z_hat_ + (0.5 * dt) * k2z;
  const Vec k3z = fz(z3, W_ + (0.5 * dt) * k2W);
  const Mat k3W = fW(z3);
  const Vec z4 = z_hat_ + dt * k3z;
  const Vec k4z = fz(z4, W_ + dt * k3W);
  const Mat k4W = fW(z4);

  z_hat_ += (dt / 6.0) * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
  W_ += (dt / 6.0) * (k1W + 2.0 * k2W + 2.0 * k3W + k4W);
  t_ += dt;

  if (!z_hat_.allFinite() || !W_.allFinite()) {
    std::ostringstream msg;
    msg << "adaptive observer diverged at t=" << t_
        << " (state norm " << z_hat_.norm() << ")";
    throw DivergenceError(t_, z_hat_.norm(), msg.str());
  }
}

}  // namespace elmid
