#include "fusionseq/perron.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace fusionseq {

std::vector<std::vector<Index>> strongly_connected_components(const std::vector<std::vector<Index>>& adjacency) {
  const auto n = static_cast<Index>(adjacency.size());
  std::vector<Index> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Index> stack;
  std::vector<std::vector<Index>> components;
  Index counter = 0;

  std::function<void(Index)> visit = [&](Index v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (Index w : adjacency[static_cast<std::size_t>(v)]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<Index> component;
      Index w = -1;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  };
  for (Index v = 0; v < n; ++v)
    if (index[v] < 0) visit(v);
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

RatMatrix nullspace(const RatMatrix& m) {
  RatMatrix a = m;
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> pivot_cols;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.row(r).swap(a.row(p));
    Rational inv = 1 / a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (Index j = c; j < cols; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (Index c : pivot_cols) is_pivot[c] = true;
  RatMatrix basis = RatMatrix::Zero(cols, cols - static_cast<Index>(pivot_cols.size()));
  Index out = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) basis(pivot_cols[k], out) = -a(static_cast<Index>(k), free);
    ++out;
  }
  return basis;
}

namespace {

struct BlockResult {
  Rational lo;
  Rational hi;
  RatVector v;  // positive, v(0) == 1
  std::optional<Integer> exact;
};

RatVector normalized_first(const RatVector& v) {
  for (Index k = 0; k < v.size(); ++k)
    if (v(k) != 0) return v / v(k);
  return v;
}

bool all_positive(const RatVector& v) {
  for (Index k = 0; k < v.size(); ++k)
    if (v(k) <= 0) return false;
  return true;
}

// A positive vector w with b * w == n * w certifies rho(b) == n.
std::optional<RatVector> exact_eigenvector_from(const RatMatrix& b, const RatVector& approx, const Integer& n,
                                                const Integer& max_den) {
  RatVector w(approx.size());
  Index p = 0;
  for (Index k = 1; k < approx.size(); ++k)
    if (approx(k) > approx(p)) p = k;
  for (Index k = 0; k < approx.size(); ++k) {
    w(k) = best_approximation(approx(k) / approx(p), max_den);
    if (w(k) <= 0) return std::nullopt;
  }
  RatVector residual = b * w - Rational(n) * w;
  for (Index k = 0; k < residual.size(); ++k)
    if (residual(k) != 0) return std::nullopt;
  return normalized_first(w);
}

std::optional<RatVector> exact_kernel_eigenvector(const RatMatrix& b, const Integer& n) {
  RatMatrix shifted = b - Rational(n) * RatMatrix::Identity(b.rows(), b.cols());
  RatMatrix kernel = nullspace(shifted);
  if (kernel.cols() != 1) return std::nullopt;
  RatVector w = kernel.col(0);
  if (w(0) < 0) w = -w;
  if (!all_positive(w)) return std::nullopt;
  return normalized_first(w);
}

struct Estimate {
  double lambda;
  Eigen::VectorXd v;
};

Estimate initial_estimate(const Eigen::MatrixXd& bd, long max_iter) {
  const Index n = bd.rows();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(bd, true);
  if (solver.info() == Eigen::Success) {
    Index best = 0;
    for (Index k = 1; k < n; ++k)
      if (solver.eigenvalues()(k).real() > solver.eigenvalues()(best).real()) best = k;
    Eigen::VectorXd v = solver.eigenvectors().col(best).real().cwiseAbs();
    if (v.allFinite() && v.maxCoeff() > 0) return {solver.eigenvalues()(best).real(), v / v.maxCoeff()};
  }
  // Power iteration on bd + I, which is primitive when bd is irreducible.
  Eigen::MatrixXd shifted = bd + Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  double lambda = 0;
  for (long it = 0; it < max_iter; ++it) {
    Eigen::VectorXd w = shifted * v;
    double next = w.maxCoeff();
    w /= next;
    bool converged = (w - v).cwiseAbs().maxCoeff() < 1e-15;
    v = w;
    lambda = next - 1;
    if (converged) break;
  }
  return {lambda, v};
}

long bits_for(const Rational& scale, const Rational& width) {
  Rational ratio = scale / width;
  return ratio <= 1 ? 0 : ilog2(ratio) + 1;
}

// Perron root of an irreducible block of size >= 2, bracketed to `target`.
BlockResult solve_irreducible(const RatMatrix& b, const Rational& target, long max_iter) {
  const Index n = b.rows();
  const Eigen::MatrixXd bd = to_double_matrix(b);
  Estimate est = initial_estimate(bd, max_iter);
  for (Index k = 0; k < n; ++k)
    if (!(est.v(k) > 1e-300)) est.v(k) = 1e-300;

  // Integer fast path: a short exact eigenvector straight from the estimate.
  const double nearest = std::round(est.lambda);
  if (std::abs(est.lambda - nearest) <= 1e-8 * std::max(1.0, std::abs(est.lambda)) && nearest > 0) {
    RatVector approx(n);
    for (Index k = 0; k < n; ++k) approx(k) = from_double(est.v(k));
    Integer candidate(static_cast<long long>(nearest));
    if (auto w = exact_eigenvector_from(b, approx, candidate, Integer(1) << 20))
      return {Rational(candidate), Rational(candidate), *w, candidate};
  }

  Index p = 0;
  for (Index k = 1; k < n; ++k)
    if (est.v(k) > est.v(p)) p = k;

  auto factor = [&](double lambda, const Eigen::VectorXd& v) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 1, n + 1);
    jac.topLeftCorner(n, n) = bd - lambda * Eigen::MatrixXd::Identity(n, n);
    jac.topRightCorner(n, 1) = -v;
    jac(n, p) = 1.0;
    return Eigen::FullPivLU<Eigen::MatrixXd>(jac);
  };
  Eigen::FullPivLU<Eigen::MatrixXd> lu = factor(est.lambda, est.v / est.v(p));
  if (!lu.isInvertible()) throw std::runtime_error("perron_eigen: bordered Jacobian is singular");

  const Rational scale = Rational(1) + mp::abs(from_double(est.lambda));
  long work_bits = std::max<long>(64, bits_for(scale, target) + 2 * static_cast<long>(std::log2(n + 1)) + 32);
  RatVector v(n);
  for (Index k = 0; k < n; ++k) v(k) = round_significant(from_double(est.v(k) / est.v(p)), work_bits);
  v(p) = 1;
  Rational lambda = from_double(est.lambda);

  std::optional<Rational> prev_width;
  int stall = 0;
  for (long it = 0; it < max_iter; ++it) {
    RatVector bv = b * v;
    RatVector residual = bv - lambda * v;
    if (all_positive(v)) {
      Rational lo = bv(0) / v(0), hi = lo;
      for (Index k = 1; k < n; ++k) {
        Rational ratio = bv(k) / v(k);
        if (ratio < lo) lo = ratio;
        if (ratio > hi) hi = ratio;
      }
      Rational width = hi - lo;
      if (width <= target) return {lo, hi, normalized_first(v), std::nullopt};
      if (prev_width && width * 2 > *prev_width) ++stall;
      else stall = 0;
      prev_width = width;
    } else {
      ++stall;
    }
    if (stall >= 3) {
      work_bits *= 2;
      if (work_bits > (1L << 20)) throw std::runtime_error("perron_eigen: refinement does not converge");
      Eigen::VectorXd vd(n);
      for (Index k = 0; k < n; ++k) vd(k) = to_double(v(k));
      lu = factor(to_double(lambda), vd);
      stall = 0;
      prev_width.reset();
    }

    Rational rmax = 0;
    for (Index k = 0; k < n; ++k) rmax = std::max(rmax, Rational(mp::abs(residual(k))));
    if (rmax == 0) {
      if (!all_positive(v)) throw std::runtime_error("perron_eigen: exact eigenvector is not positive");
      return {lambda, lambda, normalized_first(v), std::nullopt};
    }
    const long e = ilog2(rmax);
    const Rational unit = e >= 0 ? Rational(Integer(1) << static_cast<unsigned>(e))
                                 : Rational(Integer(1), Integer(1) << static_cast<unsigned>(-e));
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    for (Index k = 0; k < n; ++k) rhs(k) = -to_double(residual(k) / unit);
    Eigen::VectorXd delta = lu.solve(rhs);
    if (!delta.allFinite()) throw std::runtime_error("perron_eigen: non-finite Newton step");
    for (Index k = 0; k < n; ++k)
      if (k != p) v(k) = round_significant(v(k) + from_double(delta(k)) * unit, work_bits);
    lambda = round_significant(lambda + from_double(delta(n)) * unit, work_bits);
  }
  throw std::runtime_error("perron_eigen: iteration cap reached");
}

// Adds integer detection on top of a bracket narrower than 1/2.
BlockResult certify_irreducible(const RatMatrix& b, const Rational& tol, long max_iter) {
  const Rational target = std::min(tol, Rational(1, 4));
  BlockResult r = solve_irreducible(b, target, max_iter);
  if (r.exact) return r;
  Integer candidate = ceil(r.lo);
  if (candidate <= 0 || Rational(candidate) > r.hi) return r;
  const long bits = std::max<long>(8, bits_for(Rational(1), r.hi - r.lo) / 2 - 2);
  auto w = exact_eigenvector_from(b, r.v, candidate, Integer(1) << static_cast<unsigned>(std::min<long>(bits, 4096)));
  if (!w) w = exact_kernel_eigenvector(b, candidate);
  if (w) return {Rational(candidate), Rational(candidate), *w, candidate};
  return r;
}

RatMatrix submatrix(const RatMatrix& m, const std::vector<Index>& idx) {
  const auto s = static_cast<Index>(idx.size());
  RatMatrix out(s, s);
  for (Index i = 0; i < s; ++i)
    for (Index j = 0; j < s; ++j) out(i, j) = m(idx[i], idx[j]);
  return out;
}

BlockResult solve_component(const RatMatrix& m, const std::vector<Index>& comp, const Rational& tol, long max_iter) {
  if (comp.size() == 1) {
    const Rational& value = m(comp[0], comp[0]);
    RatVector one = RatVector::Ones(1);
    std::optional<Integer> exact;
    if (is_integer(value)) exact = mp::numerator(value);
    return {value, value, one, exact};
  }
  return certify_irreducible(submatrix(m, comp), tol, max_iter);
}

void check_square_nonnegative(const RatMatrix& m, const char* who) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
  if (m.rows() == 0) throw std::invalid_argument(std::string(who) + ": empty matrix");
  if (!is_nonnegative(m)) throw std::invalid_argument(std::string(who) + ": matrix has a negative entry");
}

}  // namespace

PerronResult perron_eigen(const RatMatrix& m, const PerronOptions& opts) {
  check_square_nonnegative(m, "perron_eigen");
  if (opts.tol <= 0) throw std::invalid_argument("perron_eigen: tolerance must be positive");
  const auto comps = strongly_connected_components(m);
  std::vector<BlockResult> blocks;
  blocks.reserve(comps.size());
  for (const auto& comp : comps) blocks.push_back(solve_component(m, comp, opts.tol, opts.max_iter));

  auto dominant = [&] {
    std::size_t best = 0;
    for (std::size_t b = 1; b < blocks.size(); ++b)
      if (blocks[b].lo > blocks[best].lo || (blocks[b].lo == blocks[best].lo && blocks[b].hi > blocks[best].hi))
        best = b;
    return best;
  };

  // An exact dominant block wins only once every other bracket sits at or below it.
  std::size_t top = dominant();
  for (int round = 0; round < 8 && blocks[top].exact; ++round) {
    const Rational n(*blocks[top].exact);
    bool overlapping = false;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b == top || blocks[b].exact || blocks[b].hi <= n) continue;
      overlapping = true;
      Rational tighter = (blocks[b].hi - blocks[b].lo) / Rational(Integer(1) << 20);
      blocks[b] = solve_component(m, comps[b], std::max(tighter, pow10(-4000)), opts.max_iter);
    }
    if (!overlapping) break;
    top = dominant();
  }

  PerronResult result;
  result.irreducible = comps.size() == 1;
  result.lo = blocks[0].lo;
  result.hi = blocks[0].hi;
  for (const auto& b : blocks) {
    result.lo = std::max(result.lo, b.lo);
    result.hi = std::max(result.hi, b.hi);
  }
  const BlockResult& best = blocks[top];
  if (best.exact && result.lo == Rational(*best.exact) && result.hi == result.lo) result.exact_integer = best.exact;

  RatVector full = RatVector::Zero(m.rows());
  for (std::size_t k = 0; k < comps[top].size(); ++k) full(comps[top][k]) = best.v(static_cast<Index>(k));
  result.eigvec = normalized_first(full);
  return result;
}

PerronResult perron_eigen(const IntMatrix& m, const PerronOptions& opts) {
  return perron_eigen(RatMatrix(m.cast<Rational>()), opts);
}

PerronVectorEnclosure perron_vector_enclosure(const RatMatrix& m, const PerronOptions& opts) {
  check_square_nonnegative(m, "perron_vector_enclosure");
  const Index n = m.rows();
  if (strongly_connected_components(m).size() != 1)
    throw std::invalid_argument("perron_vector_enclosure: matrix is reducible");
  if (n == 1) return {RatVector::Ones(1), Rational(1), true};

  // Smallest power k with (I + m)^k entrywise positive.
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> pattern(n, n), power(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) pattern(i, j) = (i == j) || m(i, j) != 0;
  power = pattern;
  const RatMatrix shifted = m + RatMatrix::Identity(n, n);
  RatMatrix positive = shifted;
  while (!power.all()) {
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> next(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        bool any = false;
        for (Index l = 0; l < n && !any; ++l) any = power(i, l) && pattern(l, j);
        next(i, j) = any;
      }
    power = next;
    positive = positive * shifted;
  }

  // Birkhoff: the Hilbert-metric contraction of `positive` is
  // tanh(Delta/4) = (sqrt(K) - 1) / (sqrt(K) + 1), K = max cross ratio.
  Rational cross = 1;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational a = positive(i, 0) / positive(j, 0), c = positive(j, 0) / positive(i, 0);
      for (Index l = 1; l < n; ++l) {
        a = std::max(a, Rational(positive(i, l) / positive(j, l)));
        c = std::max(c, Rational(positive(j, l) / positive(i, l)));
      }
      cross = std::max(cross, Rational(a * c));
    }
  const Rational amplification = (sqrt_upper(cross, 32) + 1) / 2;

  Rational tol = opts.tol;
  for (int attempt = 0; attempt < 12; ++attempt) {
    BlockResult r = certify_irreducible(m, tol, opts.max_iter);
    if (r.exact) return {r.v, Rational(1), true};
    RatVector pv = positive * r.v;
    Rational lo = pv(0) / r.v(0), hi = lo;
    for (Index k = 1; k < n; ++k) {
      Rational ratio = pv(k) / r.v(k);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    // log(hi/lo) <= hi/lo - 1 bounds the Hilbert distance from v to P v.
    Rational distance = (hi / lo - 1) * amplification;
    if (distance < Rational(1, 2)) return {r.v, 1 / (1 - distance), false};
    tol = tol / Rational(Integer(1) << 32);
  }
  throw std::runtime_error("perron_vector_enclosure: could not tighten the enclosure");
}

ComparisonVerdict perron_compare(const RatMatrix& a, const RatMatrix& b, const PerronOptions& opts) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("perron_compare: matrices must be square and of equal size");
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) <= 0)
        throw std::invalid_argument("perron_compare: a(" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is not positive");
      if (b(i, j) < 0 || b(i, j) > a(i, j))
        throw std::invalid_argument("perron_compare: b(" + std::to_string(i) + "," + std::to_string(j) +
                                    ") outside [0, a_ij]");
    }
  ComparisonVerdict verdict;
  if (a == b) {
    verdict.lambda_a = perron_eigen(a, opts);
    verdict.lambda_b = verdict.lambda_a;
    verdict.equal = true;
    return verdict;
  }
  PerronOptions local = opts;
  for (int round = 0; round < 40; ++round) {
    verdict.lambda_a = perron_eigen(a, local);
    verdict.lambda_b = perron_eigen(b, local);
    verdict.refinements = round;
    if (verdict.lambda_b.hi < verdict.lambda_a.lo) {
      verdict.strict = true;
      return verdict;
    }
    local.tol = local.tol / Rational(Integer(1) << 16);
  }
  throw std::runtime_error("perron_compare: brackets did not separate within the refinement cap");
}

}  // namespace fusionseq
