#pragma once

#include <functional>
#include <string>

#include "elmid/normalization.hpp"
#include "elmid/random_projection.hpp"
#include "elmid/types.hpp"

namespace elmid {

struct DcMotorParams {
  double c1 = 60.0;
  double c2 = 0.5;
  double c3 = 40.0;
  double c4 = 6.0;
  double c5 = 40000.0;
};

struct LorentzParams {
  double sigma = 10.0;
  double r = 28.0;
  double b = 8.0 / 3.0;
};

// A continuous-time benchmark system x' = f(x, u, t) together with the
// a-priori operating ranges used for [-1, 1] normalization.
struct PlantDefinition {
  std::string name;
  int state_dim = 0;
  int input_dim = 0;
  std::function<Vec(const Vec& x, const Vec& u, double t)> derivative;
  NormalizationBounds state_bounds;
  NormalizationBounds input_bounds;  // dimension 0 when the plant has no input
};

// x1' = -c1*x1 + c3 - c2*x2*u,   x2' = -c4*x2 - c5*x1*u
Vec dc_motor_derivative(const Vec& x, double u, const DcMotorParams& p);

// s1' = sigma*(s2 - s1),   s2' = r*s1 - s2 - s1*s3,   s3' = s1*s2 - b*s3
Vec lorentz_derivative(const Vec& s, const LorentzParams& p);

// Default ranges: x1 in [0, 1.5], x2 in [-1500, 1500], u in [-0.1, 0.1].
// The input range keeps the frozen-input dynamics stable: the state matrix
// [[-c1, -c2*u], [-c5*u, -c4]] loses its stable determinant for
// |u| > sqrt(c1*c4/c5) ~ 0.134, and the equilibria at u = +/-0.1 sit exactly
// on the state-range corners (x1 = 1.5, x2 = -/+1000).
PlantDefinition dc_motor_plant(const DcMotorParams& p = {});

// Default ranges s1, s2 in [-25, 25], s3 in [0, 50]; no excitation input.
PlantDefinition lorentz_plant(const LorentzParams& p = {});

// A plant that IS the model class:
//   z' = A z + W*^T phi([u; z]) + d(t)
// in normalized coordinates (identity bounds). Used by tests that need zero
// structural approximation error, optionally with a known bounded
// disturbance d(t).
PlantDefinition synthetic_elm_plant(
    Mat A, Mat W_star, RandomProjection proj, int input_dim,
    std::function<Vec(double)> disturbance = nullptr);

// One RK4 step with zero-order-hold input; throws DivergenceError when the
// next state is not finite.
Vec plant_rk4_step(const PlantDefinition& plant, const Vec& x, const Vec& u,
                   double t, double dt);

}  // namespace elmid
