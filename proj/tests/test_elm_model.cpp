#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "elmid/errors.hpp"
#include "elmid/normalization.hpp"
#include "elmid/random_projection.hpp"
#include "elmid/rng.hpp"

using namespace elmid;

TEST_CASE("sigmoid fixed points and saturation") {
  CHECK(sigmoid(0.0) == 0.5);
  CHECK(sigmoid(500.0) > 1.0 - 1e-12);
  CHECK(sigmoid(500.0) <= 1.0);
  CHECK(sigmoid(-500.0) < 1e-12);
  CHECK(sigmoid(-500.0) >= 0.0);
}

TEST_CASE("sigmoid antisymmetry: g(v) + g(-v) = 1") {
  for (double v : {0.1, 0.5, 1.0, 3.0, 10.0, 40.0})
    CHECK(sigmoid(v) + sigmoid(-v) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("sigmoid is monotone increasing") {
  double prev = sigmoid(-20.0);
  for (double v = -19.5; v <= 20.0; v += 0.5) {
    const double cur = sigmoid(v);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("projection is deterministic per seed and differs across seeds") {
  const auto a = RandomProjection::create(3, 8, 42);
  const auto b = RandomProjection::create(3, 8, 42);
  CHECK(a.weights == b.weights);
  CHECK(a.biases == b.biases);

  const auto c = RandomProjection::create(3, 8, 43);
  CHECK((a.weights - c.weights).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("projection entries are uniform on [-1, 1]") {
  const auto p = RandomProjection::create(20, 50, 9);
  CHECK(p.weights.minCoeff() >= -1.0);
  CHECK(p.weights.maxCoeff() <= 1.0);
  CHECK(p.biases.minCoeff() >= -1.0);
  CHECK(p.biases.maxCoeff() <= 1.0);
  // spread sanity: 1000 draws should fill most of the range
  CHECK(p.weights.maxCoeff() > 0.9);
  CHECK(p.weights.minCoeff() < -0.9);
}

TEST_CASE("projection rejects non-positive dimensions") {
  CHECK_THROWS_AS(RandomProjection::create(0, 8, 0), ConfigError);
  CHECK_THROWS_AS(RandomProjection::create(3, 0, 0), ConfigError);
  CHECK_THROWS_AS(RandomProjection::create(-1, 8, 0), ConfigError);
}

TEST_CASE("hidden output of the zero projection is all 0.5") {
  auto p = RandomProjection::create(4, 6, 1);
  p.weights.setZero();
  p.biases.setZero();
  const Vec phi = p.hidden_output(Vec::Random(4));
  for (int i = 0; i < phi.size(); ++i) CHECK(phi[i] == 0.5);
}

TEST_CASE("hidden output matches a scalar-loop recomputation") {
  const auto p = RandomProjection::create(2, 3, 1);
  Vec x(2);
  x << 0.5, -0.5;
  const Vec phi = p.hidden_output(x);
  REQUIRE(phi.size() == 3);
  for (int i = 0; i < 3; ++i) {
    double acc = p.biases[i];
    for (int j = 0; j < 2; ++j) acc += p.weights(i, j) * x[j];
    CHECK(phi[i] == doctest::Approx(1.0 / (1.0 + std::exp(-acc))).epsilon(1e-15));
  }
}

TEST_CASE("hidden output entries stay strictly inside (0, 1)") {
  const auto p = RandomProjection::create(5, 32, 17);
  Rng r(4);
  for (int trial = 0; trial < 50; ++trial) {
    Vec x(5);
    for (int j = 0; j < 5; ++j) x[j] = r.uniform(-1.0, 1.0);
    const Vec phi = p.hidden_output(x);
    CHECK(phi.minCoeff() > 0.0);
    CHECK(phi.maxCoeff() < 1.0);
  }
}

TEST_CASE("hidden output validates the input") {
  const auto p = RandomProjection::create(3, 4, 2);
  CHECK_THROWS_AS(p.hidden_output(Vec::Zero(2)), ConfigError);
  Vec bad = Vec::Zero(3);
  bad[1] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(p.hidden_output(bad), ConfigError);
}

TEST_CASE("predict with zero weights is zero") {
  const auto p = RandomProjection::create(3, 5, 8);
  const Vec y = predict(p, Mat::Zero(5, 2), Vec::Zero(3));
  CHECK(y.size() == 2);
  CHECK(y.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("predict is a per-column dot product with the hidden output") {
  const auto p = RandomProjection::create(3, 5, 8);
  Rng r(2);
  Mat W(5, 2);
  Vec x(3);
  for (int i = 0; i < W.size(); ++i) W(i % 5, i / 5) = r.uniform(-1.0, 1.0);
  for (int j = 0; j < 3; ++j) x[j] = r.uniform(-1.0, 1.0);

  const Vec phi = p.hidden_output(x);
  const Vec y = predict(p, W, x);
  REQUIRE(y.size() == 2);
  CHECK(y[0] == doctest::Approx(phi.dot(W.col(0))).epsilon(1e-14));
  CHECK(y[1] == doctest::Approx(phi.dot(W.col(1))).epsilon(1e-14));
}

TEST_CASE("prediction is linear in the output weights") {
  const auto p = RandomProjection::create(4, 7, 3);
  Rng r(5);
  Mat W1(7, 2), W2(7, 2);
  Vec x(4);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 2; ++j) {
      W1(i, j) = r.uniform(-1.0, 1.0);
      W2(i, j) = r.uniform(-1.0, 1.0);
    }
  for (int j = 0; j < 4; ++j) x[j] = r.uniform(-1.0, 1.0);

  const double alpha = 0.7, beta = -2.3;
  const Vec combined = predict(p, alpha * W1 + beta * W2, x);
  const Vec separate = alpha * predict(p, W1, x) + beta * predict(p, W2, x);
  CHECK((combined - separate).norm() <= 1e-12 * (1.0 + separate.norm()));

  const Vec doubled = predict(p, 2.0 * W1, x);
  CHECK((doubled - 2.0 * predict(p, W1, x)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("predict validates dimensions") {
  const auto p = RandomProjection::create(3, 5, 8);
  CHECK_THROWS_AS(predict(p, Mat::Zero(4, 2), Vec::Zero(3)), ConfigError);
  CHECK_THROWS_AS(predict(p, Mat::Zero(5, 2), Vec::Zero(4)), ConfigError);
}

TEST_CASE("normalization maps endpoints and midpoint") {
  Vec lo(2), hi(2);
  lo << 0.0, -1500.0;
  hi << 1.5, 1500.0;
  const NormalizationBounds b(lo, hi);

  CHECK((b.normalize(lo) - Vec::Constant(2, -1.0)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((b.normalize(hi) - Vec::Constant(2, 1.0)).cwiseAbs().maxCoeff() < 1e-15);
  const Vec mid = 0.5 * (lo + hi);
  CHECK(b.normalize(mid).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("normalize and denormalize are exact inverses") {
  Vec lo(3), hi(3);
  lo << -25.0, -25.0, 0.0;
  hi << 25.0, 25.0, 50.0;
  const NormalizationBounds b(lo, hi);
  Rng r(6);
  for (int trial = 0; trial < 100; ++trial) {
    Vec x(3);
    for (int j = 0; j < 3; ++j) x[j] = r.uniform(-30.0, 60.0);  // may exceed bounds
    const Vec back = b.denormalize(b.normalize(x));
    CHECK((back - x).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + x.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("out-of-range values pass through without error") {
  const NormalizationBounds b(Vec::Constant(1, 0.0), Vec::Constant(1, 1.0));
  const Vec v = b.normalize(Vec::Constant(1, 2.0));
  CHECK(v[0] == doctest::Approx(3.0));  // beyond [-1,1] is legal
}

TEST_CASE("degenerate bounds are rejected at construction") {
  CHECK_THROWS_AS(NormalizationBounds(Vec::Constant(2, 1.0), Vec::Constant(2, 1.0)),
                  ConfigError);
  Vec lo(2), hi(2);
  lo << 0.0, 5.0;
  hi << 1.0, 4.0;
  CHECK_THROWS_AS(NormalizationBounds(lo, hi), ConfigError);
  CHECK_THROWS_AS(NormalizationBounds(Vec::Zero(2), Vec::Ones(3)), ConfigError);
}

TEST_CASE("normalization validates dimensions on use") {
  const auto b = NormalizationBounds::identity(2);
  CHECK_THROWS_AS(b.normalize(Vec::Zero(3)), ConfigError);
  CHECK_THROWS_AS(b.denormalize_rows(Mat::Zero(4, 3)), ConfigError);
}

TEST_CASE("row-wise normalization agrees with the vector form") {
  Vec lo(2), hi(2);
  lo << -2.0, 1.0;
  hi << 2.0, 9.0;
  const NormalizationBounds b(lo, hi);
  Mat X(3, 2);
  X << -2.0, 1.0, 0.0, 5.0, 2.0, 9.0;
  const Mat N = b.normalize_rows(X);
  for (int k = 0; k < 3; ++k)
    CHECK((N.row(k).transpose() - b.normalize(X.row(k).transpose()))
              .cwiseAbs()
              .maxCoeff() < 1e-15);
  CHECK((b.denormalize_rows(N) - X).cwiseAbs().maxCoeff() < 1e-12);
}
