#include "fusionseq/numeric.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace fusionseq {

namespace {

Integer pow2(long k) {
  Integer one = 1;
  return one << static_cast<unsigned>(k);
}

// q * 2^k exactly, k of either sign.
Rational scale2(const Rational& q, long k) {
  if (k >= 0) return q * Rational(pow2(k));
  return q / Rational(pow2(-k));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

// gmp reads a leading 0 as an octal prefix.
static Integer decimal(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string(digits.substr(first)));
}

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  Integer value = decimal(body);
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    Integer den = decimal(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  auto e = body.find_first_of("eE");
  if (e != std::string_view::npos) {
    Integer ex = parse_integer(body.substr(e + 1));
    if (mp::abs(ex) > 100000) throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
    exponent = ex.convert_to<long>();
    body = body.substr(0, e);
  }
  std::string digits;
  auto dot = body.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(body);
  }
  Rational value{decimal(digits)};
  value *= pow10(static_cast<int>(exponent));
  return negative ? Rational(-value) : value;
}

Rational pow10(int exponent) {
  Integer p = mp::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

std::string to_fraction_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, 0.5 <= |m| < 1
  auto mantissa = static_cast<long long>(std::ldexp(m, 53));
  return scale2(Rational(Integer(mantissa)), e - 53);
}

long ilog2(const Rational& q) {
  if (q == 0) throw std::domain_error("ilog2 of zero");
  Integer n = mp::abs(mp::numerator(q));
  const Integer& d = mp::denominator(q);
  long k = static_cast<long>(mp::msb(n)) - static_cast<long>(mp::msb(d));
  // now 2^(k-1) < n/d < 2^(k+1); settle which side of 2^k we are on
  bool below = k >= 0 ? n < (d << static_cast<unsigned>(k)) : (n << static_cast<unsigned>(-k)) < d;
  return below ? k - 1 : k;
}

Integer floor(const Rational& q) {
  const Integer& n = mp::numerator(q);
  const Integer& d = mp::denominator(q);
  Integer quotient = n / d;
  if (n < 0 && quotient * d != n) quotient -= 1;
  return quotient;
}

Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

Rational round_dyadic(const Rational& q, long bits) {
  Rational scaled = scale2(q, bits) + Rational(1, 2);
  return scale2(Rational(floor(scaled)), -bits);
}

Rational round_significant(const Rational& q, long bits) {
  if (q == 0) return q;
  return round_dyadic(q, bits - 1 - ilog2(q));
}

Rational sqrt_lower(const Rational& q, long bits) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return q;
  const Integer& n = mp::numerator(q);
  const Integer& d = mp::denominator(q);
  Integer radicand = (n * d) << static_cast<unsigned>(2 * bits);
  Integer root = mp::sqrt(radicand);
  return Rational(root, d << static_cast<unsigned>(bits));
}

Rational sqrt_upper(const Rational& q, long bits) {
  if (q < 0) throw std::domain_error("sqrt of negative rational");
  if (q == 0) return q;
  const Integer& n = mp::numerator(q);
  const Integer& d = mp::denominator(q);
  Integer radicand = (n * d) << static_cast<unsigned>(2 * bits);
  Integer root = mp::sqrt(radicand);
  if (root * root != radicand) root += 1;
  return Rational(root, d << static_cast<unsigned>(bits));
}

Rational best_approximation(const Rational& q, const Integer& max_den) {
  if (max_den < 1) throw std::invalid_argument("best_approximation: max_den must be >= 1");
  if (mp::denominator(q) <= max_den) return q;
  // convergents h/k of the continued fraction of q
  Integer h_prev2 = 0, h_prev = 1, k_prev2 = 1, k_prev = 0;
  Rational x = q;
  Integer a = floor(x);
  for (;;) {
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    if (k > max_den) {
      // best semiconvergent with denominator within budget
      Integer t = (max_den - k_prev2) / k_prev;
      Rational semi(t * h_prev + h_prev2, t * k_prev + k_prev2);
      Rational conv(h_prev, k_prev);
      return mp::abs(semi - q) < mp::abs(conv - q) ? semi : conv;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    Rational frac = x - Rational(a);
    if (frac == 0) return Rational(h, k);
    x = 1 / frac;
    a = floor(x);
  }
}

}  // namespace fusionseq
