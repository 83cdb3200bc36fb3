#pragma once

#include <deque>
#include <optional>
#include <utility>

#include "elmid/errors.hpp"
#include "elmid/types.hpp"

namespace elmid {

// Sliding regression window over sampled input/output data. Once n_u inputs
// and n_y outputs of history exist, each new sample (u_k, y_k) yields the
// training pair
//   x(k) = [u(k-1), ..., u(k-n_u), y(k-1), ..., y(k-n_y)],  target = y(k)
// (newest to oldest within each block). From N samples this emits exactly
// N - max(n_u, n_y) pairs. u_dim may be 0 for autonomous systems.
class NarxWindow {
 public:
  NarxWindow(int n_u, int n_y, int u_dim, int y_dim)
      : n_u_(n_u), n_y_(n_y), u_dim_(u_dim), y_dim_(y_dim) {
    if (n_u < 1 || n_y < 1 || u_dim < 0 || y_dim < 1)
      throw ConfigError("narx window: need n_u, n_y >= 1, u_dim >= 0, y_dim >= 1");
  }

  int feature_dim() const { return n_u_ * u_dim_ + n_y_ * y_dim_; }

  std::optional<std::pair<Vec, Vec>> push(const Vec& u_k, const Vec& y_k) {
    if (int(u_k.size()) != u_dim_ || int(y_k.size()) != y_dim_)
      throw ConfigError("narx window: sample dimension mismatch");
    std::optional<std::pair<Vec, Vec>> out;
    if (int(u_hist_.size()) == n_u_ && int(y_hist_.size()) == n_y_) {
      Vec x(feature_dim());
      int at = 0;
      for (const auto& u : u_hist_) {
        x.segment(at, u_dim_) = u;
        at += u_dim_;
      }
      for (const auto& y : y_hist_) {
        x.segment(at, y_dim_) = y;
        at += y_dim_;
      }
      out = std::make_pair(std::move(x), y_k);
    }
    u_hist_.push_front(u_k);
    if (int(u_hist_.size()) > n_u_) u_hist_.pop_back();
    y_hist_.push_front(y_k);
    if (int(y_hist_.size()) > n_y_) y_hist_.pop_back();
    return out;
  }

 private:
  int n_u_, n_y_, u_dim_, y_dim_;
  std::deque<Vec> u_hist_, y_hist_;  // newest first
};

}  // namespace elmid
