#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "elmid/errors.hpp"
#include "elmid/ridge.hpp"
#include "elmid/rng.hpp"

using namespace elmid;

namespace {

Mat random_matrix(int rows, int cols, Rng& r) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = r.uniform(-1.0, 1.0);
  return m;
}

// Independent oracle: solve K * W = B column by column with unpivoted
// Gaussian elimination, sharing no code with the library solver.
Mat gaussian_elimination_solve(Mat K, Mat B) {
  const int n = int(K.rows());
  for (int col = 0; col < n; ++col) {
    const double pivot = K(col, col);
    for (int row = col + 1; row < n; ++row) {
      const double f = K(row, col) / pivot;
      for (int j = col; j < n; ++j) K(row, j) -= f * K(col, j);
      for (int j = 0; j < B.cols(); ++j) B(row, j) -= f * B(col, j);
    }
  }
  Mat W = Mat::Zero(n, B.cols());
  for (int col = n - 1; col >= 0; --col) {
    for (int j = 0; j < B.cols(); ++j) {
      double acc = B(col, j);
      for (int k = col + 1; k < n; ++k) acc -= K(col, k) * W(k, j);
      W(col, j) = acc / K(col, col);
    }
  }
  return W;
}

double objective(const Mat& H, const Mat& Y, const Mat& W, double lambda) {
  return (H * W - Y).squaredNorm() + W.squaredNorm() / lambda;
}

}  // namespace

TEST_CASE("hidden matrix rows equal per-sample hidden outputs") {
  const auto p = RandomProjection::create(3, 6, 11);
  Rng r(1);
  const Mat X = random_matrix(5, 3, r);
  const Mat H = build_hidden_matrix(p, X);
  REQUIRE(H.rows() == 5);
  REQUIRE(H.cols() == 6);
  for (int k = 0; k < 5; ++k)
    CHECK((H.row(k).transpose() - p.hidden_output(X.row(k).transpose()))
              .cwiseAbs()
              .maxCoeff() == 0.0);

  const Mat H1 = build_hidden_matrix(p, X.topRows(1));
  CHECK(H1.rows() == 1);
  CHECK((H1.row(0) - H.row(0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("zero projection gives a hidden matrix of 0.5") {
  auto p = RandomProjection::create(2, 4, 3);
  p.weights.setZero();
  p.biases.setZero();
  const Mat H = build_hidden_matrix(p, Mat::Random(7, 2));
  CHECK((H.array() - 0.5).abs().maxCoeff() == 0.0);
}

TEST_CASE("permuting samples permutes hidden rows identically") {
  const auto p = RandomProjection::create(3, 5, 4);
  Rng r(9);
  const Mat X = random_matrix(6, 3, r);
  Mat Xp(6, 3);
  const int perm[6] = {4, 0, 5, 2, 1, 3};
  for (int k = 0; k < 6; ++k) Xp.row(k) = X.row(perm[k]);
  const Mat H = build_hidden_matrix(p, X);
  const Mat Hp = build_hidden_matrix(p, Xp);
  for (int k = 0; k < 6; ++k)
    CHECK((Hp.row(k) - H.row(perm[k])).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("hidden matrix validates column count") {
  const auto p = RandomProjection::create(3, 5, 4);
  CHECK_THROWS_AS(build_hidden_matrix(p, Mat::Zero(4, 2)), ConfigError);
}

TEST_CASE("identity design with weak regularization returns the targets") {
  const int n = 6;
  Rng r(2);
  const Mat Y = random_matrix(n, 2, r);
  const Mat W = ridge_solve(Mat::Identity(n, n), Y, 1e12);
  CHECK((W - Y).norm() <= 1e-6 * Y.norm());
}

TEST_CASE("strong regularization shrinks the weights toward zero") {
  Rng r(3);
  const Mat H = random_matrix(12, 4, r);
  const Mat Y = random_matrix(12, 2, r);
  const double lambda = 1e-12;
  const Mat W = ridge_solve(H, Y, lambda);
  CHECK(W.norm() <= lambda * (H.transpose() * Y).norm() * (1.0 + 1e-6));
}

TEST_CASE("solution matches an unpivoted Gaussian elimination oracle") {
  Rng r(4);
  const Mat H = random_matrix(20, 8, r);
  const Mat Y = random_matrix(20, 2, r);
  const double lambda = 100.0;

  const Mat K = Mat::Identity(8, 8) / lambda + H.transpose() * H;
  const Mat expected = gaussian_elimination_solve(K, H.transpose() * Y);
  const Mat W = ridge_solve(H, Y, lambda);
  CHECK((W - expected).norm() <= 1e-8 * expected.norm());
}

TEST_CASE("normal-equation residual is tiny") {
  Rng r(5);
  for (double lambda : {1e-6, 1.0, 1e6}) {
    const Mat H = random_matrix(30, 8, r);
    const Mat Y = random_matrix(30, 3, r);
    const Mat W = ridge_solve(H, Y, lambda);
    const Mat K = Mat::Identity(8, 8) / lambda + H.transpose() * H;
    const Mat HtY = H.transpose() * Y;
    CHECK((K * W - HtY).norm() <= 1e-8 * HtY.norm());
  }
}

TEST_CASE("returned weights are a local minimum of the ridge objective") {
  Rng r(6);
  const Mat H = random_matrix(25, 6, r);
  const Mat Y = random_matrix(25, 2, r);
  const double lambda = 10.0;
  const Mat W = ridge_solve(H, Y, lambda);
  const double base = objective(H, Y, W, lambda);
  for (int i = 0; i < W.rows(); ++i)
    for (int j = 0; j < W.cols(); ++j)
      for (double d : {1e-4, -1e-4}) {
        Mat Wp = W;
        Wp(i, j) += d;
        CHECK(objective(H, Y, Wp, lambda) >= base - 1e-14);
      }
}

TEST_CASE("per-column solves equal the matrix solve") {
  Rng r(7);
  const Mat H = random_matrix(15, 5, r);
  const Mat Y = random_matrix(15, 3, r);
  const Mat W = ridge_solve(H, Y, 50.0);
  for (int j = 0; j < 3; ++j) {
    const Mat Wj = ridge_solve(H, Y.col(j), 50.0);
    CHECK((W.col(j) - Wj.col(0)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("invalid design matrices are rejected") {
  CHECK_THROWS_AS(ridge_solve(Mat::Zero(0, 3), Mat::Zero(0, 1), 1.0), ConfigError);
  CHECK_THROWS_AS(ridge_solve(Mat::Zero(4, 3), Mat::Zero(5, 1), 1.0), ConfigError);
  CHECK_THROWS_AS(ridge_solve(Mat::Zero(4, 3), Mat::Zero(4, 1), 0.0), ConfigError);
  CHECK_THROWS_AS(ridge_solve(Mat::Zero(4, 3), Mat::Zero(4, 1), -1.0), ConfigError);

  Mat H = Mat::Ones(4, 3);
  H(2, 1) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(ridge_solve(H, Mat::Zero(4, 1), 1.0), ConfigError);
}

TEST_CASE("fit quality: recovers a linear map of the hidden features") {
  // If Y was generated as H * W_true, near-unregularized ridge must recover it.
  Rng r(8);
  const auto p = RandomProjection::create(2, 8, 21);
  const Mat X = random_matrix(40, 2, r);
  const Mat H = build_hidden_matrix(p, X);
  const Mat W_true = random_matrix(8, 2, r);
  const Mat Y = H * W_true;
  const Mat W = ridge_solve(H, Y, 1e9);
  CHECK((H * W - Y).norm() <= 1e-6 * Y.norm());
}
