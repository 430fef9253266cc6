#pragma once

// Closed intervals with exact rational endpoints. Arithmetic is exact, so
// every operation is trivially outward-rounded; `rounded()` widens the
// endpoints to short dyadics when bit growth needs to be capped.

#include "fusionseq/numeric.hpp"

#include <iosfwd>

namespace fusionseq {

class Interval {
 public:
  Interval() = default;
  Interval(const Rational& point) : lo_(point), hi_(point) {}  // NOLINT: implicit by design of Eigen scalars
  Interval(const Integer& point) : lo_(point), hi_(point) {}   // NOLINT
  Interval(int point) : lo_(point), hi_(point) {}              // NOLINT
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
  bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
  bool strictly_positive() const { return lo_ > 0; }

  /// Gap between the two intervals (zero when they intersect).
  Rational distance(const Interval& other) const;
  /// Outward rounding of both endpoints to multiples of 2^-bits.
  Interval rounded(long bits) const;

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }

  /// Identity of endpoints (not a certified comparison of the enclosed reals).
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

 private:
  Rational lo_{0};
  Rational hi_{0};
};

/// Intersection; throws std::domain_error when disjoint.
Interval intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
/// Certified enclosure of sqrt over [lo, hi] (lo >= 0) to about 2^-bits.
Interval sqrt(const Interval& x, long bits);

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace fusionseq

namespace Eigen {

template <>
struct NumTraits<fusionseq::Interval> : GenericNumTraits<fusionseq::Interval> {
  using Real = fusionseq::Interval;
  using NonInteger = fusionseq::Interval;
  using Literal = fusionseq::Interval;
  using Nested = fusionseq::Interval;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 40,
    MulCost = 160
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace fusionseq {

using IntervalVector = Vector<Interval>;
using IntervalMatrix = Matrix<Interval>;

template <typename Derived>
IntervalVector to_interval(const Eigen::MatrixBase<Derived>& v) {
  IntervalVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = Interval(Rational(v(i)));
  return out;
}

/// m * v with m exact (integer or rational) and v interval valued.
template <typename Derived>
IntervalVector apply(const Eigen::MatrixBase<Derived>& m, const IntervalVector& v) {
  IntervalVector out(m.rows());
  for (Index i = 0; i < m.rows(); ++i) {
    Interval acc;
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      acc += Interval(Rational(m(i, j))) * v(j);
    }
    out(i) = acc;
  }
  return out;
}

}  // namespace fusionseq


