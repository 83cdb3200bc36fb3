#pragma once

#include <utility>

#include "elmid/random_projection.hpp"
#include "elmid/types.hpp"

namespace elmid {

// Throws ConfigError naming the offending eigenvalue unless every eigenvalue
// of A has strictly negative real part.
void require_hurwitz(const Mat& A);

// Scalar descent certificate V(e, W~) = 1/2 ||e||^2 + 1/2 ||W~||_F^2 tracked
// by the stability tests (W~ = W* - W_hat when the true weights are known).
double lyapunov_value(const Vec& e, const Mat& W_tilde);

struct StabilityBound {
  double xi = 0.0;     // bound on the model-approximation error norm
  double gamma = 0.0;  // error radius xi / |mu|
};

// gamma = xi / |mu| with mu = lambda_max((A + A^T)/2): the error norm below
// which descent of V is no longer guaranteed. Requires the symmetric part of
// A to be negative definite (true for the diagonal benchmark matrices).
StabilityBound stability_threshold(const Mat& A, double xi);

// Continuous-time adaptive state observer
//   z_hat' = A z_hat + W^T phi,   W' = gain * phi e^T,   e = z_meas - z_hat,
// advanced by RK4 with zero-order hold on (z_meas, phi). Operates entirely
// in normalized coordinates; the caller normalizes measurements on the way
// in and denormalizes estimates on the way out.
class AdaptiveObserver {
 public:
  // W0 is hidden x n, z0 the initial normalized state estimate. A dead-zone
  // radius > 0 freezes adaptation for any step starting with ||e|| <= radius.
  AdaptiveObserver(Mat A, RandomProjection proj, Mat W0, Vec z0,
                   double gain = 1.0, double dead_zone_radius = 0.0);

  // (dz_hat, dW) at the current state for a frozen (z_meas, phi).
  std::pair<Vec, Mat> derivatives(const Vec& z_meas, const Vec& phi) const;

  // One RK4 step of the coupled (z_hat, W) system; model_input is the
  // feature vector fed to the projection, held across the step. Throws
  // DivergenceError if the state stops being finite.
  void step(const Vec& z_meas, const Vec& model_input, double dt);

  const Vec& z_hat() const { return z_hat_; }
  const Mat& W_hat() const { return W_; }
  double t() const { return t_; }
  double gain() const { return gain_; }
  const RandomProjection& projection() const { return proj_; }

 private:
  Mat A_;
  RandomProjection proj_;
  Mat W_;
  Vec z_hat_;
  double t_ = 0.0;
  double gain_;
  double dead_zone_radius_;
};

}  // namespace elmid
