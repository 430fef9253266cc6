#include "fusionseq/groups.hpp"

#include "modular.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fusionseq {

using modular::Field;
using modular::u64;

GroupTable make_group(std::vector<std::vector<int>> mult, std::string name) {
  GroupTable g;
  g.order = static_cast<int>(mult.size());
  if (g.order == 0) throw std::invalid_argument("make_group: empty table");
  for (const auto& row : mult) {
    if (static_cast<int>(row.size()) != g.order) throw std::invalid_argument("make_group: table is not square");
    for (int x : row)
      if (x < 0 || x >= g.order) throw std::invalid_argument("make_group: entry out of range");
  }
  g.mult = std::move(mult);
  g.name = std::move(name);
  g.identity = -1;
  for (int e = 0; e < g.order && g.identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < g.order && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) g.identity = e;
  }
  return g;
}

ValidationReport validate_group(const GroupTable& g) {
  ValidationReport report;
  const int n = g.order;
  if (static_cast<int>(g.mult.size()) != n) {
    report.add("table_shape", {});
    return report;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(g.mult[a].size()) != n) {
      report.add("table_shape", {a});
      return report;
    }
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) < 0 || g.mul(a, b) >= n) {
        report.add("not_closed", {a, b});
        return report;
      }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) report.add("associativity", {a, b, c});
  if (g.identity < 0 || g.identity >= n) {
    report.add("no_identity", {});
    return report;
  }
  for (int x = 0; x < n; ++x) {
    if (g.mul(g.identity, x) != x || g.mul(x, g.identity) != x) report.add("identity_law", {x});
    bool has_inverse = false;
    for (int y = 0; y < n && !has_inverse; ++y) has_inverse = g.mul(x, y) == g.identity && g.mul(y, x) == g.identity;
    if (!has_inverse) report.add("no_inverse", {x});
  }
  return report;
}

std::vector<int> inverses(const GroupTable& g) {
  std::vector<int> inv(static_cast<std::size_t>(g.order), -1);
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y)
      if (g.mul(x, y) == g.identity) {
        inv[x] = y;
        break;
      }
  return inv;
}

int element_order(const GroupTable& g, int x) {
  int k = 1;
  for (int y = x; y != g.identity; y = g.mul(y, x)) {
    if (++k > g.order) throw std::invalid_argument("element_order: not a group");
  }
  return k;
}

int exponent(const GroupTable& g) {
  int e = 1;
  for (int x = 0; x < g.order; ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

bool is_abelian(const GroupTable& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

ConjugacyClasses conjugacy_classes(const GroupTable& g) {
  const std::vector<int> inv = inverses(g);
  ConjugacyClasses cc;
  cc.class_of.assign(static_cast<std::size_t>(g.order), -1);
  std::vector<int> order{g.identity};
  for (int x = 0; x < g.order; ++x)
    if (x != g.identity) order.push_back(x);
  for (int x : order) {
    if (cc.class_of[x] >= 0) continue;
    std::set<int> members;
    for (int y = 0; y < g.order; ++y) members.insert(g.mul(g.mul(y, x), inv[y]));
    const int id = static_cast<int>(cc.classes.size());
    for (int m : members) cc.class_of[m] = id;
    cc.classes.emplace_back(members.begin(), members.end());
  }
  for (const auto& c : cc.classes) cc.inverse_class.push_back(cc.class_of[inv[c.front()]]);
  return cc;
}

std::uint64_t admissible_prime(const GroupTable& g, std::uint64_t above) {
  const u64 n = static_cast<u64>(g.order);
  const u64 bound = std::max<u64>({n * n * n, above, 2});
  return modular::next_prime_congruent_one(bound, static_cast<u64>(exponent(g)));
}

namespace {

// c[r][s][t] = #{(x, y) : x in C_r, y in C_s, xy = rep_t}.
std::vector<std::vector<std::vector<long long>>> class_coefficients(const GroupTable& g, const ConjugacyClasses& cc) {
  const int r = cc.count();
  std::vector<int> rep_class(static_cast<std::size_t>(g.order), -1);
  for (int t = 0; t < r; ++t) rep_class[cc.classes[t].front()] = t;
  std::vector<std::vector<std::vector<long long>>> c(
      r, std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)));
  for (int x = 0; x < g.order; ++x)
    for (int y = 0; y < g.order; ++y) {
      const int t = rep_class[g.mul(x, y)];
      if (t >= 0) ++c[cc.class_of[x]][cc.class_of[y]][t];
    }
  return c;
}

// Lifts a residue known to be a small nonnegative integer.
std::optional<long long> lift(u64 residue, long long bound) {
  if (residue > static_cast<u64>(bound)) return std::nullopt;
  return static_cast<long long>(residue);
}

std::optional<CharacterFusion> characters_mod(const GroupTable& g, const ConjugacyClasses& cc,
                                              const std::vector<std::vector<std::vector<long long>>>& coeff, u64 p) {
  const Field f{p};
  const int r = cc.count();
  const long long n = g.order;
  std::mt19937_64 rng(p);
  std::uniform_int_distribution<u64> dist(1, p - 1);

  std::vector<modular::Mat> class_mats(r, modular::Mat(r, std::vector<u64>(r)));
  for (int a = 0; a < r; ++a)
    for (int s = 0; s < r; ++s)
      for (int t = 0; t < r; ++t) class_mats[a][s][t] = f.from(coeff[a][s][t]);

  // Columns w_i = (omega_i(K_t))_t are the common eigenvectors of the class
  // matrices, normalized at the identity class.
  std::vector<std::vector<u64>> omega;
  for (int attempt = 0; attempt < 8 && omega.empty(); ++attempt) {
    modular::Mat mix(r, std::vector<u64>(r, 0));
    for (int a = 0; a < r; ++a) {
      const u64 lambda = dist(rng);
      for (int s = 0; s < r; ++s)
        for (int t = 0; t < r; ++t) mix[s][t] = f.add(mix[s][t], f.mul(lambda, class_mats[a][s][t]));
    }
    auto eig = modular::distinct_roots(f, modular::characteristic_polynomial(f, mix), rng);
    if (!eig || static_cast<int>(eig->size()) != r) continue;
    std::vector<std::vector<u64>> found;
    for (u64 mu : *eig) {
      modular::Mat shifted = mix;
      for (int s = 0; s < r; ++s) shifted[s][s] = f.sub(shifted[s][s], mu);
      auto ker = modular::kernel(f, shifted);
      if (ker.size() != 1 || ker[0][0] == 0) break;
      const u64 scale = f.inv(ker[0][0]);
      for (u64& x : ker[0]) x = f.mul(x, scale);
      found.push_back(ker[0]);
    }
    if (static_cast<int>(found.size()) == r) omega = std::move(found);
  }
  if (omega.empty()) return std::nullopt;

  // Every class matrix must act on w by the scalar w_a.
  for (const auto& w : omega)
    for (int a = 0; a < r; ++a)
      for (int s = 0; s < r; ++s) {
        u64 acc = 0;
        for (int t = 0; t < r; ++t) acc = f.add(acc, f.mul(class_mats[a][s][t], w[t]));
        if (acc != f.mul(w[a], w[s])) return std::nullopt;
      }

  struct Irrep {
    long long dim;
    std::vector<u64> chi;
  };
  std::vector<Irrep> irreps;
  for (const auto& w : omega) {
    u64 s = 0;
    for (int a = 0; a < r; ++a)
      s = f.add(s, f.mul(f.mul(w[a], w[cc.inverse_class[a]]), f.inv(static_cast<u64>(cc.classes[a].size()))));
    if (s == 0) return std::nullopt;
    auto d2 = lift(f.mul(static_cast<u64>(n), f.inv(s)), n);
    if (!d2) return std::nullopt;
    long long d = 0;
    while ((d + 1) * (d + 1) <= *d2) ++d;
    if (d * d != *d2 || d == 0) return std::nullopt;
    Irrep irrep{d, std::vector<u64>(r)};
    for (int a = 0; a < r; ++a)
      irrep.chi[a] = f.mul(f.mul(w[a], static_cast<u64>(d)), f.inv(static_cast<u64>(cc.classes[a].size())));
    irreps.push_back(std::move(irrep));
  }
  auto trivial = [](const Irrep& x) { return std::all_of(x.chi.begin(), x.chi.end(), [](u64 v) { return v == 1; }); };
  std::sort(irreps.begin(), irreps.end(), [&](const Irrep& x, const Irrep& y) {
    return std::make_tuple(x.dim, !trivial(x), x.chi) < std::make_tuple(y.dim, !trivial(y), y.chi);
  });
  long long total = 0;
  for (const auto& x : irreps) total += x.dim * x.dim;
  if (total != n || !trivial(irreps.front())) return std::nullopt;

  const u64 inv_n = f.inv(static_cast<u64>(n));
  std::vector<std::vector<std::vector<Integer>>> coeffs(
      r, std::vector<std::vector<Integer>>(r, std::vector<Integer>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        u64 acc = 0;
        for (int a = 0; a < r; ++a) {
          const u64 term = f.mul(f.mul(irreps[i].chi[a], irreps[j].chi[a]), irreps[k].chi[cc.inverse_class[a]]);
          acc = f.add(acc, f.mul(static_cast<u64>(cc.classes[a].size()), term));
        }
        auto value = lift(f.mul(acc, inv_n), irreps[i].dim * irreps[j].dim);
        if (!value) return std::nullopt;
        coeffs[i][j][k] = *value;
      }

  std::vector<int> dual(static_cast<std::size_t>(r), -1);
  for (int i = 0; i < r; ++i) {
    std::vector<u64> conj(static_cast<std::size_t>(r));
    for (int a = 0; a < r; ++a) conj[a] = irreps[i].chi[cc.inverse_class[a]];
    for (int k = 0; k < r; ++k)
      if (irreps[k].chi == conj) dual[i] = k;
    if (dual[i] < 0) return std::nullopt;
  }

  CharacterFusion out;
  out.num_irreps = r;
  out.classes = cc;
  out.prime = p;
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i) {
    out.dims.emplace_back(irreps[i].dim);
    out.chi.push_back(irreps[i].chi);
    labels.push_back("chi" + std::to_string(i));
  }
  out.ring = FusionRing::from_coefficients(coeffs, {0}, dual, std::nullopt, labels);
  return out;
}

void check_admissible(const GroupTable& g, u64 p) {
  const u64 n = static_cast<u64>(g.order);
  if (!modular::is_prime(p) || p <= n * n * n || p < 3 || p % static_cast<u64>(exponent(g)) != 1 % static_cast<u64>(exponent(g)))
    throw std::invalid_argument("rep_g_fusion: prime " + std::to_string(p) + " is not admissible for the group");
}

}  // namespace

CharacterFusion rep_g_fusion(const GroupTable& g, std::optional<std::uint64_t> prime) {
  if (!validate_group(g).ok()) throw std::invalid_argument("rep_g_fusion: not a group");
  const ConjugacyClasses cc = conjugacy_classes(g);
  const auto coeff = class_coefficients(g, cc);
  if (prime) {
    check_admissible(g, *prime);
    if (auto out = characters_mod(g, cc, coeff, *prime)) return *out;
    throw std::runtime_error("rep_g_fusion: class matrices do not split at p = " + std::to_string(*prime));
  }
  u64 p = admissible_prime(g);
  for (int attempt = 0; attempt < 5; ++attempt) {
    if (auto out = characters_mod(g, cc, coeff, p)) return *out;
    p = admissible_prime(g, p);
  }
  throw std::runtime_error("rep_g_fusion: class matrices did not split at five admissible primes");
}

FusionRing vec_g_ring(const GroupTable& g) {
  const int n = g.order;
  std::vector<IntMatrix> left(static_cast<std::size_t>(n), IntMatrix::Zero(n, n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) left[i](g.mul(i, j), j) = 1;
    labels.push_back("g" + std::to_string(i));
  }
  return FusionRing(std::move(left), {g.identity}, inverses(g), std::nullopt, std::move(labels));
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> closure(const GroupTable& g, const std::vector<int>& generators) {
  std::set<int> members(generators.begin(), generators.end());
  members.insert(g.identity);
  std::vector<int> frontier(members.begin(), members.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    std::vector<int> current(members.begin(), members.end());
    for (int a : frontier)
      for (int b : current)
        for (int c : {g.mul(a, b), g.mul(b, a)})
          if (members.insert(c).second) next.push_back(c);
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

}  // namespace

bool is_subgroup(const GroupTable& g, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::vector<int> s = sorted_unique(subset);
  if (s.size() != subset.size() || s.front() < 0 || s.back() >= g.order) return false;
  std::vector<bool> in(static_cast<std::size_t>(g.order), false);
  for (int x : s) in[x] = true;
  for (int a : s)
    for (int b : s)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

bool is_normal(const GroupTable& g, const std::vector<int>& subset) {
  if (!is_subgroup(g, subset)) return false;
  std::vector<bool> in(static_cast<std::size_t>(g.order), false);
  for (int x : subset) in[x] = true;
  const std::vector<int> inv = inverses(g);
  for (int y = 0; y < g.order; ++y)
    for (int h : subset)
      if (!in[g.mul(g.mul(y, h), inv[y])]) return false;
  return true;
}

GroupTable make_subgroup(const GroupTable& g, const std::vector<int>& subset) {
  if (!is_subgroup(g, subset)) throw std::invalid_argument("make_subgroup: subset is not a subgroup");
  std::vector<int> s = sorted_unique(subset);
  std::map<int, int> pos;
  for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> mult(s.size(), std::vector<int>(s.size()));
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) mult[a][b] = pos.at(g.mul(s[a], s[b]));
  return make_group(std::move(mult), g.name.empty() ? std::string() : g.name + "_sub");
}

Quotient quotient_group(const GroupTable& g, const std::vector<int>& normal) {
  if (!is_normal(g, normal)) throw std::invalid_argument("quotient_group: subset is not a normal subgroup");
  Quotient q;
  q.projection.assign(static_cast<std::size_t>(g.order), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order; ++x) {
    if (q.projection[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : normal) q.projection[g.mul(x, h)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<int>> mult(m, std::vector<int>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) mult[a][b] = q.projection[g.mul(reps[a], reps[b])];
  q.group = make_group(std::move(mult), g.name.empty() ? std::string() : g.name + "_quot");
  return q;
}

std::vector<std::vector<int>> all_subgroups(const GroupTable& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue{closure(g, {})};
  found.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> base = queue[head];
    for (int x = 0; x < g.order; ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> gens = base;
      gens.push_back(x);
      std::vector<int> grown = closure(g, gens);
      if (found.insert(grown).second) queue.push_back(std::move(grown));
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<std::vector<int>> normal_subgroups(const GroupTable& g) {
  const ConjugacyClasses cc = conjugacy_classes(g);
  // A subgroup generated by whole classes is normal; adding one class at a
  // time from the trivial subgroup reaches every normal subgroup.
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue{closure(g, {})};
  found.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<int> base = queue[head];
    for (const auto& cls : cc.classes) {
      if (std::binary_search(base.begin(), base.end(), cls.front())) continue;
      std::vector<int> gens = base;
      gens.insert(gens.end(), cls.begin(), cls.end());
      std::vector<int> grown = closure(g, gens);
      if (found.insert(grown).second) queue.push_back(std::move(grown));
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

IntMatrix restriction_matrix(const CharacterFusion& g, const CharacterFusion& h, const std::vector<int>& embedding) {
  if (g.prime != h.prime) throw std::invalid_argument("restriction_matrix: character fusions use different primes");
  const Field f{g.prime};
  long long h_order = 0;
  for (const auto& c : h.classes.classes) h_order += static_cast<long long>(c.size());
  if (static_cast<long long>(embedding.size()) != h_order)
    throw std::invalid_argument("restriction_matrix: embedding has wrong length");
  std::vector<int> g_class(static_cast<std::size_t>(h.classes.count()));
  for (int s = 0; s < h.classes.count(); ++s) g_class[s] = g.classes.class_of.at(embedding.at(h.classes.classes[s].front()));

  const u64 inv_h = f.inv(static_cast<u64>(h_order));
  IntMatrix r(h.num_irreps, g.num_irreps);
  for (int i = 0; i < g.num_irreps; ++i) {
    Integer check = 0;
    for (int j = 0; j < h.num_irreps; ++j) {
      u64 acc = 0;
      for (int s = 0; s < h.classes.count(); ++s) {
        const u64 term = f.mul(g.chi[i][g_class[s]], h.chi[j][h.classes.inverse_class[s]]);
        acc = f.add(acc, f.mul(static_cast<u64>(h.classes.classes[s].size()), term));
      }
      acc = f.mul(acc, inv_h);
      if (acc > g.dims[i]) throw std::logic_error("restriction_matrix: multiplicity out of range");
      r(j, i) = Integer(acc);
      check += r(j, i) * h.dims[j];
    }
    if (check != g.dims[i]) throw std::logic_error("restriction_matrix: restriction does not preserve dimension");
  }
  return r;
}

IntMatrix restriction_matrix(const GroupTable& g, const std::vector<int>& embedding_image) {
  const GroupTable h = make_subgroup(g, embedding_image);
  const CharacterFusion cg = rep_g_fusion(g);
  return restriction_matrix(cg, rep_g_fusion(h, cg.prime), sorted_unique(embedding_image));
}

IntMatrix inflation_matrix(const CharacterFusion& g, const CharacterFusion& q, const std::vector<int>& projection) {
  if (g.prime != q.prime) throw std::invalid_argument("inflation_matrix: character fusions use different primes");
  const Field f{g.prime};
  const long long n = static_cast<long long>(projection.size());
  std::vector<int> q_class(static_cast<std::size_t>(g.classes.count()));
  for (int r = 0; r < g.classes.count(); ++r) q_class[r] = q.classes.class_of.at(projection.at(g.classes.classes[r].front()));
  const u64 inv_n = f.inv(static_cast<u64>(n));
  IntMatrix out(g.num_irreps, q.num_irreps);
  for (int i = 0; i < g.num_irreps; ++i)
    for (int a = 0; a < q.num_irreps; ++a) {
      u64 acc = 0;
      for (int r = 0; r < g.classes.count(); ++r) {
        const u64 term = f.mul(q.chi[a][q_class[r]], g.chi[i][g.classes.inverse_class[r]]);
        acc = f.add(acc, f.mul(static_cast<u64>(g.classes.classes[r].size()), term));
      }
      acc = f.mul(acc, inv_n);
      if (acc > 1) throw std::logic_error("inflation_matrix: inflated irreducible is not irreducible");
      out(i, a) = Integer(acc);
    }
  return out;
}

namespace {

std::string subset_name(const GroupTable& g, const std::vector<int>& subset) {
  std::string s = g.name + "[";
  for (std::size_t i = 0; i < subset.size(); ++i) s += (i ? "," : "") + std::to_string(subset[i]);
  return s + "]";
}

template <typename Build>
SequenceData with_common_prime(const GroupTable& g, Build build) {
  u64 p = admissible_prime(g);
  std::string last_error;
  for (int attempt = 0; attempt < 5; ++attempt) {
    try {
      return build(rep_g_fusion(g, p));
    } catch (const std::runtime_error& e) {
      last_error = e.what();
    }
    p = admissible_prime(g, p);
  }
  throw std::runtime_error("no admissible prime splits all groups involved: " + last_error);
}

}  // namespace

SequenceData extension_sequence(const GroupTable& g, const std::vector<int>& normal_subgroup) {
  const std::vector<int> n = sorted_unique(normal_subgroup);
  if (!is_normal(g, n)) throw std::invalid_argument("extension_sequence: subset is not a normal subgroup");
  const GroupTable h = make_subgroup(g, n);
  const Quotient q = quotient_group(g, n);
  return with_common_prime(g, [&](const CharacterFusion& cg) {
    const CharacterFusion ch = rep_g_fusion(h, cg.prime);
    const CharacterFusion cq = rep_g_fusion(q.group, cg.prime);
    SequenceData s;
    s.A = std::make_shared<const FusionRing>(cq.ring);
    s.B = std::make_shared<const FusionRing>(cg.ring);
    s.C = std::make_shared<const FusionRing>(ch.ring);
    s.M = std::make_shared<const BasedModule>(fiber_module(s.A, cq.dims));
    s.iota = inflation_matrix(cg, cq, q.projection);
    s.F = restriction_matrix(cg, ch, n);
    s.name = subset_name(g, n);
    return s;
  });
}

SequenceData restriction_sequence(const GroupTable& g, const std::vector<int>& subgroup) {
  const std::vector<int> sub = sorted_unique(subgroup);
  const GroupTable h = make_subgroup(g, sub);
  return with_common_prime(g, [&](const CharacterFusion& cg) {
    const CharacterFusion ch = rep_g_fusion(h, cg.prime);
    const IntMatrix r = restriction_matrix(cg, ch, sub);
    std::vector<int> kernel;
    std::vector<Integer> dims;
    for (int i = 0; i < cg.num_irreps; ++i) {
      bool trivial_only = true;
      for (int j = 1; j < ch.num_irreps; ++j) trivial_only = trivial_only && r(j, i) == 0;
      if (trivial_only) {
        kernel.push_back(i);
        dims.push_back(cg.dims[i]);
      }
    }
    SequenceData s;
    s.B = std::make_shared<const FusionRing>(cg.ring);
    s.A = std::make_shared<const FusionRing>(based_subring(cg.ring, kernel));
    s.C = std::make_shared<const FusionRing>(ch.ring);
    s.M = std::make_shared<const BasedModule>(fiber_module(s.A, dims));
    s.iota = IntMatrix::Zero(cg.num_irreps, static_cast<Index>(kernel.size()));
    for (std::size_t a = 0; a < kernel.size(); ++a) s.iota(kernel[a], static_cast<Index>(a)) = 1;
    s.F = r;
    s.name = subset_name(g, sub) + "_res";
    return s;
  });
}

}  // namespace fusionseq
