#pragma once

// Certified Perron roots of nonnegative rational matrices.
//
// Every bracket returned here is a Collatz-Wielandt bracket evaluated in
// exact rational arithmetic: for a positive vector v,
//   min_k (Mv)_k / v_k  <=  rho(M)  <=  max_k (Mv)_k / v_k.
// Floating point is only used to find a good v; it never enters a bound.

#include "fusionseq/interval.hpp"
#include "fusionseq/numeric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fusionseq {

struct PerronOptions {
  Rational tol = pow10(-12);
  long max_iter = 1'000'000;
};

struct PerronResult {
  Rational lo;
  Rational hi;
  /// Approximate Perron eigenvector, first nonzero coordinate normalized to 1.
  /// Strictly positive for irreducible input; for reducible input it is the
  /// Perron vector of the dominant diagonal block, zero elsewhere.
  RatVector eigvec;
  /// Set when rho(M) is certified to be this integer by an exact positive
  /// rational eigenvector.
  std::optional<Integer> exact_integer;
  bool irreducible = true;

  Interval interval() const { return Interval(lo, hi); }
  Rational width() const { return hi - lo; }
};

/// Strongly connected components of the support digraph (edge j -> k when
/// m(k, j) != 0). Each component is sorted; components are listed in
/// order of their smallest index.
template <typename Derived>
std::vector<std::vector<Index>> strongly_connected_components(const Eigen::MatrixBase<Derived>& m);

std::vector<std::vector<Index>> strongly_connected_components(const std::vector<std::vector<Index>>& adjacency);

template <typename Derived>
std::pair<Rational, Rational> collatz_wielandt_bounds(const Eigen::MatrixBase<Derived>& m, const RatVector& v) {
  RatVector mv = m.template cast<Rational>() * v;
  Rational lo = mv(0) / v(0), hi = lo;
  for (Index k = 1; k < v.size(); ++k) {
    Rational ratio = mv(k) / v(k);
    if (ratio < lo) lo = ratio;
    if (ratio > hi) hi = ratio;
  }
  return {lo, hi};
}

/// Certified Perron root. Requires a square nonnegative matrix; reducible
/// input is split into irreducible diagonal blocks and the largest block
/// root is returned. The zero matrix gives exact_integer = 0.
PerronResult perron_eigen(const RatMatrix& m, const PerronOptions& opts = {});
PerronResult perron_eigen(const IntMatrix& m, const PerronOptions& opts = {});

/// Certified enclosure of the Perron vector u of an irreducible matrix:
/// there is c > 0 with  c * center_k <= u_k <= c * spread * center_k.
struct PerronVectorEnclosure {
  RatVector center;
  Rational spread{1};
  bool exact = false;
};

PerronVectorEnclosure perron_vector_enclosure(const RatMatrix& m, const PerronOptions& opts = {});

/// Result of comparing largest eigenvalues of A (entrywise positive) and
/// B with 0 <= B <= A entrywise.
struct ComparisonVerdict {
  PerronResult lambda_a;
  PerronResult lambda_b;
  bool equal = false;   // B == A
  bool strict = false;  // certified lambda(B) < lambda(A)
  int refinements = 0;
};

/// Throws std::invalid_argument when the preconditions fail (shape, a_ij <= 0,
/// b_ij < 0 or b_ij > a_ij) and std::runtime_error if the brackets cannot be
/// separated within the refinement cap.
ComparisonVerdict perron_compare(const RatMatrix& a, const RatMatrix& b, const PerronOptions& opts = {});

/// Exact nullspace basis (columns) by Gauss-Jordan elimination over Q.
RatMatrix nullspace(const RatMatrix& m);

template <typename Derived>
std::vector<std::vector<Index>> strongly_connected_components(const Eigen::MatrixBase<Derived>& m) {
  std::vector<std::vector<Index>> adjacency(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j)
    for (Index k = 0; k < m.rows(); ++k)
      if (m(k, j) != 0) adjacency[static_cast<std::size_t>(j)].push_back(k);
  return strongly_connected_components(adjacency);
}

}  // namespace fusionseq
