#pragma once

#include "elmid/types.hpp"

namespace elmid {

// Recursive least-squares state for the streaming trainer. After any
// sequence of updates, W equals the batch ridge solution over all data seen
// so far (matrix-inversion-lemma identity); P is its inverse normal matrix.
struct OnlineState {
  Mat W;  // hidden x out
  Mat P;  // hidden x hidden, symmetric positive definite

  // Stream with no seed data: W = 0, P = lambda*I. This is the empty-batch
  // limit of from_batch (K0 = I/lambda).
  static OnlineState fresh(int hidden_dim, int output_dim, double lambda);

  // Seed from an initial batch of n0 >= 1 rows:
  //   K0 = I/lambda + H0^T H0,  W0 = K0^{-1} H0^T Y0,  P0 = K0^{-1}.
  static OnlineState from_batch(const Mat& H0, const Mat& Y0, double lambda);

  // Fold in k >= 1 rows:
  //   P <- P - P H1^T (I + H1 P H1^T)^{-1} H1 P
  //   W <- W + P H1^T (Y1 - H1 W)        (with the updated P)
  // computed in the symmetric form G = P H1^T, S = I + H1 G,
  // P <- P - G S^{-1} G^T. P is re-symmetrized every call; relative
  // asymmetry above 1e-6 beforehand raises NumericError.
  void update(const Mat& H1, const Mat& Y1);
};

}  // namespace elmid
