#pragma once

// Scalar and dense-matrix vocabulary shared by every module.
//
// Integers and rationals are arbitrary precision (GMP through
// Boost.Multiprecision, expression templates off so they behave as plain
// values inside Eigen kernels).

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fusionseq {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

using Index = Eigen::Index;

/// Exact decimal / fraction parsing: "3", "-7/4", "0.25", "1e-12", "2.5E3".
/// Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);
std::string to_string(const Integer& z);

double to_double(const Rational& q);
/// Exact binary value of a finite double.
Rational from_double(double x);

/// floor(log2 |q|) for q != 0.
long ilog2(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// q rounded to the nearest multiple of 2^-bits.
Rational round_dyadic(const Rational& q, long bits);
/// q rounded to `bits` significant binary digits (relative rounding).
Rational round_significant(const Rational& q, long bits);

/// Certified square-root bounds: lo^2 <= q <= hi^2, hi - lo <= 2^-bits
/// (relative to the scale of sqrt(q)). q must be >= 0.
Rational sqrt_lower(const Rational& q, long bits);
Rational sqrt_upper(const Rational& q, long bits);

/// Best rational approximation of q with denominator <= max_den
/// (continued-fraction convergents and semiconvergents).
Rational best_approximation(const Rational& q, const Integer& max_den);

Rational pow10(int exponent);

inline bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }

template <typename Derived>
RatMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<Rational>();
}

template <typename Derived>
Eigen::MatrixXd to_double_matrix(const Eigen::MatrixBase<Derived>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = to_double(Rational(m(i, j)));
  return out;
}

/// Kronecker product, Eigen-style free function over any scalar.
template <typename Scalar>
Matrix<Scalar> kronecker(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) return false;
  return true;
}

}  // namespace fusionseq
