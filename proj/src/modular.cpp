#include "modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusionseq::modular {

u64 Field::pow(u64 a, u64 e) const {
  u64 result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

u64 Field::inv(u64 a) const {
  if (a % p == 0) throw std::domain_error("modular inverse of zero");
  return pow(a, p - 2);
}

u64 Field::from(long long x) const {
  long long r = x % static_cast<long long>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<long long>(p) : r);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  // Miller-Rabin with these bases is deterministic below 2^64.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Field f{n};
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = f.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = f.mul(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime_congruent_one(u64 above, u64 modulus) {
  if (modulus == 0) throw std::invalid_argument("next_prime_congruent_one: zero modulus");
  u64 q = above + 1;
  q += (modulus + 1 - q % modulus) % modulus;  // q = 1 mod modulus
  if (q <= above) q += modulus;
  for (; q < (u64(1) << 62); q += modulus)
    if (is_prime(q)) return q;
  throw std::overflow_error("next_prime_congruent_one: no prime below 2^62");
}

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Field& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

}  // namespace

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  trim(out);
  return out;
}

Poly poly_mod(const Field& f, Poly a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  const u64 lead_inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const u64 factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    trim(a);
  }
  return a;
}

Poly poly_monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  const u64 lead_inv = f.inv(a.back());
  Poly out = a;
  for (u64& c : out) c = f.mul(c, lead_inv);
  return out;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

Poly poly_powmod(const Field& f, const Poly& base, u64 e, const Poly& m) {
  Poly result = poly_mod(f, {1}, m);
  Poly b = poly_mod(f, base, m);
  while (e > 0) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, b), m);
    b = poly_mod(f, poly_mul(f, b, b), m);
    e >>= 1;
  }
  return result;
}

Poly characteristic_polynomial(const Field& f, Mat h) {
  const std::size_t n = h.size();
  // Similarity transforms to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && h[pivot][j] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
    }
    const u64 inv = f.inv(h[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      const u64 u = f.mul(h[k][j], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = f.sub(h[k][c], f.mul(u, h[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(u, h[r][k]));
    }
  }
  // p_{m+1} = (x - h_mm) p_m - sum_{i<m} h_im (prod_{k=i+1..m} h_{k,k-1}) p_i
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    Poly next = poly_mul(f, {f.neg(h[m][m]), 1}, p[m]);
    u64 t = 1;
    for (std::size_t i = m; i-- > 0;) {
      t = f.mul(t, h[i + 1][i]);
      const u64 c = f.mul(h[i][m], t);
      if (c != 0) next = poly_sub(f, next, poly_mul(f, {c}, p[i]));
    }
    p[m + 1] = std::move(next);
  }
  return p[n];
}

namespace {

void split(const Field& f, const Poly& g, std::mt19937_64& rng, std::vector<u64>& out) {
  if (g.size() == 2) {
    out.push_back(f.neg(g[0]));  // g monic: x + g0
    return;
  }
  std::uniform_int_distribution<u64> dist(0, f.p - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Poly h = poly_powmod(f, {dist(rng), 1}, (f.p - 1) / 2, g);
    h = poly_sub(f, h, {1});
    Poly d = poly_gcd(f, g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split(f, d, rng, out);
      // g / d
      Poly q;
      Poly rem = g;
      q.assign(g.size() - d.size() + 1, 0);
      while (rem.size() >= d.size()) {
        const u64 c = rem.back();
        const std::size_t shift = rem.size() - d.size();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(c, d[i]));
        trim(rem);
      }
      trim(q);
      split(f, q, rng, out);
      return;
    }
  }
  throw std::runtime_error("equal-degree splitting failed");
}

}  // namespace

std::optional<std::vector<u64>> distinct_roots(const Field& f, const Poly& poly, std::mt19937_64& rng) {
  Poly g = poly_monic(f, poly);
  if (g.size() <= 1) return std::vector<u64>{};
  // gcd with x^p - x keeps exactly the distinct linear factors.
  Poly xp = poly_powmod(f, {0, 1}, f.p, g);
  Poly linear = poly_gcd(f, g, poly_sub(f, xp, {0, 1}));
  if (linear.size() != g.size()) return std::nullopt;
  std::vector<u64> out;
  split(f, g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<u64>> kernel(const Field& f, Mat m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const u64 inv = f.inv(m[r][c]);
    for (u64& x : m[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 u = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = f.sub(m[i][k], f.mul(u, m[r][k]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<u64>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace fusionseq::modular
