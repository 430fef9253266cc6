#pragma once

// Small rings written out by hand for the unit tests.

#include "fusionseq/fusion_ring.hpp"

#include <random>
#include <vector>

namespace fixtures {

using namespace fusionseq;
using Coeffs = std::vector<std::vector<std::vector<Integer>>>;

inline Coeffs zeros(int r) { return Coeffs(r, std::vector<std::vector<Integer>>(r, std::vector<Integer>(r, 0))); }

inline FusionRing cyclic(int n) {
  Coeffs c = zeros(n);
  std::vector<int> dual(n);
  for (int i = 0; i < n; ++i) {
    dual[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) c[i][j][(i + j) % n] = 1;
  }
  return FusionRing::from_coefficients(c, {0}, dual);
}

// 1, X with X^2 = 1 + X
inline FusionRing fibonacci() {
  Coeffs c = zeros(2);
  c[0][0][0] = 1;
  c[0][1][1] = c[1][0][1] = 1;
  c[1][1][0] = c[1][1][1] = 1;
  return FusionRing::from_coefficients(c, {0}, {0, 1}, std::nullopt, {"1", "X"});
}

// 1, psi, sigma
inline FusionRing ising() {
  Coeffs c = zeros(3);
  c[0][0][0] = 1;
  c[0][1][1] = c[1][0][1] = 1;
  c[0][2][2] = c[2][0][2] = 1;
  c[1][1][0] = 1;
  c[1][2][2] = c[2][1][2] = 1;
  c[2][2][0] = c[2][2][1] = 1;
  return FusionRing::from_coefficients(c, {0}, {0, 1, 2}, std::nullopt, {"1", "psi", "sigma"});
}

// trivial, sign, standard
inline FusionRing rep_s3() {
  Coeffs c = zeros(3);
  c[0][0][0] = 1;
  c[0][1][1] = c[1][0][1] = 1;
  c[0][2][2] = c[2][0][2] = 1;
  c[1][1][0] = 1;
  c[1][2][2] = c[2][1][2] = 1;
  c[2][2][0] = c[2][2][1] = c[2][2][2] = 1;
  return FusionRing::from_coefficients(c, {0}, {0, 1, 2}, std::nullopt, {"1", "sgn", "std"});
}

inline RatMatrix rat(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace fixtures
