#pragma once

// Arithmetic in F_p for word-sized primes, and the few polynomial and
// linear-algebra routines the character computation needs.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace fusionseq::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;
  u64 from(long long x) const;
};

bool is_prime(u64 n);
/// Smallest prime q > above with q = 1 (mod modulus).
u64 next_prime_congruent_one(u64 above, u64 modulus);

/// Coefficients low degree first, no trailing zeros (the zero polynomial is empty).
using Poly = std::vector<u64>;

Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
/// a mod b, b nonzero.
Poly poly_mod(const Field& f, Poly a, const Poly& b);
Poly poly_gcd(const Field& f, Poly a, Poly b);
Poly poly_monic(const Field& f, const Poly& a);
/// base^e mod m.
Poly poly_powmod(const Field& f, const Poly& base, u64 e, const Poly& m);

using Mat = std::vector<std::vector<u64>>;

/// det(xI - m) via reduction to Hessenberg form.
Poly characteristic_polynomial(const Field& f, Mat m);
/// The roots of a monic polynomial that is a product of distinct linear
/// factors over F_p (p odd), in increasing order; nothing otherwise.
std::optional<std::vector<u64>> distinct_roots(const Field& f, const Poly& poly, std::mt19937_64& rng);
/// Basis of the right kernel of m.
std::vector<std::vector<u64>> kernel(const Field& f, Mat m);

}  // namespace fusionseq::modular
