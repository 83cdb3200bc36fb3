#include "elmid/plants.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "elmid/errors.hpp"
#include "elmid/integrator.hpp"

namespace elmid {

Vec dc_motor_derivative(const Vec& x, double u, const DcMotorParams& p) {
  Vec d(2);
  d[0] = -p.c1 * x[0] + p.c3 - p.c2 * x[1] * u;
  d[1] = -p.c4 * x[1] - p.c5 * x[0] * u;
  return d;
}

Vec lorentz_derivative(const Vec& s, const LorentzParams& p) {
  Vec d(3);
  d[0] = p.sigma * (s[1] - s[0]);
  d[1] = p.r * s[0] - s[1] - s[0] * s[2];
  d[2] = s[0] * s[1] - p.b * s[2];
  return d;
}

PlantDefinition dc_motor_plant(const DcMotorParams& p) {
  PlantDefinition plant;
  plant.name = "dc_motor";
  plant.state_dim = 2;
  plant.input_dim = 1;
  plant.derivative = [p](const Vec& x, const Vec& u, double) {
    return dc_motor_derivative(x, u[0], p);
  };
  plant.state_bounds = NormalizationBounds((Vec(2) << 0.0, -1500.0).finished(),
                                           (Vec(2) << 1.5, 1500.0).finished());
  plant.input_bounds = NormalizationBounds(Vec::Constant(1, -0.1),
                                           Vec::Constant(1, 0.1));
  return plant;
}

PlantDefinition lorentz_plant(const LorentzParams& p) {
  PlantDefinition plant;
  plant.name = "lorentz";
  plant.state_dim = 3;
  plant.input_dim = 0;
  plant.derivative = [p](const Vec& s, const Vec&, double) {
    return lorentz_derivative(s, p);
  };
  plant.state_bounds =
      NormalizationBounds((Vec(3) << -25.0, -25.0, 0.0).finished(),
                          (Vec(3) << 25.0, 25.0, 50.0).finished());
  return plant;
}

PlantDefinition synthetic_elm_plant(Mat A, Mat W_star, RandomProjection proj,
                                    int input_dim,
                                    std::function<Vec(double)> disturbance) {
  const int n = int(A.rows());
  if (A.rows() != A.cols()) throw ConfigError("synthetic plant: A must be square");
  if (W_star.rows() != proj.hidden_dim() || W_star.cols() != n)
    throw ConfigError("synthetic plant: W* must be hidden_dim x state_dim");
  if (proj.input_dim() != input_dim + n)
    throw ConfigError("synthetic plant: projection expects input_dim + state_dim inputs");
  PlantDefinition plant;
  plant.name = "synthetic_elm";
  plant.state_dim = n;
  plant.input_dim = input_dim;
  plant.derivative = [A = std::move(A), W = std::move(W_star),
                      proj = std::move(proj), d = std::move(disturbance),
                      input_dim, n](const Vec& z, const Vec& u, double t) {
    Vec xin(input_dim + n);
    if (input_dim > 0) xin.head(input_dim) = u;
    xin.tail(n) = z;
    Vec dz = A * z;
    dz.noalias() += W.transpose() * proj.hidden_output(xin);
    if (d) dz += d(t);
    return dz;
  };
  plant.state_bounds = NormalizationBounds::identity(n);
  if (input_dim > 0)
    plant.input_bounds = NormalizationBounds::identity(input_dim);
  return plant;
}

Vec plant_rk4_step(const PlantDefinition& plant, const Vec& x, const Vec& u,
                   double t, double dt) {
  if (!(dt > 0.0)) throw ConfigError("plant step: dt must be positive");
  Vec next = rk4_step(
      [&](const Vec& s, double tt) { return plant.derivative(s, u, tt); }, x,
      t, dt);
  if (!next.allFinite()) {
    std::ostringstream msg;
    msg << plant.name << " diverged at t=" << (t + dt);
    throw DivergenceError(t + dt, next.norm(), msg.str());
  }
  return next;
}

}  // namespace elmid
