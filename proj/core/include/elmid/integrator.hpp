#pragma once

#include "elmid/types.hpp"

namespace elmid {

// One classical fixed-step RK4 step for x' = f(x, t).
template <class F>
Vec rk4_step(F&& f, const Vec& x, double t, double dt) {
  const Vec k1 = f(x, t);
  const Vec k2 = f(x + (0.5 * dt) * k1, t + 0.5 * dt);
  const Vec k3 = f(x + (0.5 * dt) * k2, t + 0.5 * dt);
  const Vec k4 = f(x + dt * k3, t + dt);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace elmid
