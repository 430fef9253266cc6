#include "fusionseq/interval.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace fusionseq {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("Interval: lower endpoint exceeds upper endpoint");
}

Rational Interval::distance(const Interval& other) const {
  if (hi_ < other.lo_) return other.lo_ - hi_;
  if (other.hi_ < lo_) return lo_ - other.hi_;
  return Rational(0);
}

Interval Interval::rounded(long bits) const {
  Rational scale = Rational(Integer(1) << static_cast<unsigned>(bits));
  Rational lo = Rational(floor(lo_ * scale)) / scale;
  Rational hi = Rational(ceil(hi_ * scale)) / scale;
  return Interval(lo, hi);
}

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(lo);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  if (is_point() && o.is_point()) {
    lo_ *= o.lo_;
    hi_ = lo_;
    return *this;
  }
  if (lo_ >= 0 && o.lo_ >= 0) {
    lo_ *= o.lo_;
    hi_ *= o.hi_;
    return *this;
  }
  Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains(Rational(0))) throw std::domain_error("Interval division by an interval containing zero");
  Interval reciprocal(1 / o.hi_, 1 / o.lo_);
  return *this *= reciprocal;
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) throw std::domain_error("intersect: disjoint intervals");
  return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval sqrt(const Interval& x, long bits) {
  if (x.lo() < 0) throw std::domain_error("sqrt of an interval with negative part");
  return Interval(sqrt_lower(x.lo(), bits), sqrt_upper(x.hi(), bits));
}

std::ostream& operator<<(std::ostream& os, const Interval& x) {
  if (x.is_point()) return os << x.lo();
  return os << '[' << to_double(x.lo()) << ", " << to_double(x.hi()) << ']';
}

}  // namespace fusionseq
