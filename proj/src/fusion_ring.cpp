#include "fusionseq/fusion_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace fusionseq {

namespace {

using SmallMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

Integer max_abs(const IntMatrix& m) {
  Integer best = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) best = std::max(best, Integer(mp::abs(m(i, j))));
  return best;
}

Integer max_coefficient(const FusionRing& ring) {
  Integer best = 0;
  for (int i = 0; i < ring.rank(); ++i) best = std::max(best, max_abs(ring.left_matrix(i)));
  return best;
}

SmallMatrix to_small(const IntMatrix& m) {
  SmallMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).convert_to<long long>();
  return out;
}

IntMatrix from_small(const SmallMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Integer(m(i, j));
  return out;
}

// Machine-word copies of the structure constants when every product and
// sum formed from them stays below 2^62.
std::optional<std::vector<SmallMatrix>> small_left_matrices(const FusionRing& ring, const Integer& extra_factor = 1) {
  const Integer r = ring.rank();
  const Integer m = max_coefficient(ring);
  const Integer bound = r * r * r * m * m * std::max(Integer(1), extra_factor);
  if (bound >= (Integer(1) << 62)) return std::nullopt;
  std::vector<SmallMatrix> out;
  out.reserve(static_cast<std::size_t>(ring.rank()));
  for (int i = 0; i < ring.rank(); ++i) out.push_back(to_small(ring.left_matrix(i)));
  return out;
}

std::string label_or_index(const std::vector<std::string>& labels, int i) {
  if (static_cast<std::size_t>(i) < labels.size() && !labels[static_cast<std::size_t>(i)].empty())
    return labels[static_cast<std::size_t>(i)];
  return "X" + std::to_string(i);
}

}  // namespace

FusionRing::FusionRing(std::vector<IntMatrix> left, std::vector<int> unit_components, std::vector<int> dual,
                       std::optional<IntMatrix> cartan, std::vector<std::string> labels,
                       std::optional<bool> multifusion)
    : left_(std::move(left)),
      unit_components_(std::move(unit_components)),
      dual_(std::move(dual)),
      labels_(std::move(labels)) {
  const auto r = static_cast<Index>(left_.size());
  if (r == 0) throw std::invalid_argument("FusionRing: rank must be positive");
  for (const auto& m : left_)
    if (m.rows() != r || m.cols() != r) throw std::invalid_argument("FusionRing: structure constants are not rank^3");
  if (static_cast<Index>(dual_.size()) != r) throw std::invalid_argument("FusionRing: dual map has wrong length");
  if (unit_components_.empty()) throw std::invalid_argument("FusionRing: no unit component");
  if (!labels_.empty() && static_cast<Index>(labels_.size()) != r)
    throw std::invalid_argument("FusionRing: labels have wrong length");
  multifusion_ = multifusion.value_or(unit_components_.size() > 1);
  if (!multifusion_ && unit_components_.size() != 1)
    throw std::invalid_argument("FusionRing: a fusion ring has exactly one unit");
  if (cartan) {
    if (cartan->rows() != r || cartan->cols() != r) throw std::invalid_argument("FusionRing: Cartan matrix is not rank x rank");
    cartan_ = *cartan;
    has_cartan_ = true;
  } else {
    cartan_ = IntMatrix::Identity(r, r);
  }
}

FusionRing FusionRing::from_coefficients(const std::vector<std::vector<std::vector<Integer>>>& n,
                                         std::vector<int> unit_components, std::vector<int> dual,
                                         std::optional<IntMatrix> cartan, std::vector<std::string> labels,
                                         std::optional<bool> multifusion) {
  const auto r = static_cast<Index>(n.size());
  std::vector<IntMatrix> left(static_cast<std::size_t>(r), IntMatrix::Zero(r, r));
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(n[i].size()) != r) throw std::invalid_argument("FusionRing: N is not rank^3");
    for (Index j = 0; j < r; ++j) {
      if (static_cast<Index>(n[i][j].size()) != r) throw std::invalid_argument("FusionRing: N is not rank^3");
      for (Index k = 0; k < r; ++k) left[i](k, j) = n[i][j][k];
    }
  }
  return FusionRing(std::move(left), std::move(unit_components), std::move(dual), std::move(cartan),
                    std::move(labels), multifusion);
}

int FusionRing::unit() const {
  if (multifusion_) throw std::logic_error("FusionRing::unit: multifusion ring has several unit components");
  return unit_components_.front();
}

bool FusionRing::is_unit_component(int i) const {
  return std::find(unit_components_.begin(), unit_components_.end(), i) != unit_components_.end();
}

IntMatrix FusionRing::right_matrix(int j) const {
  IntMatrix out(rank(), rank());
  for (int i = 0; i < rank(); ++i)
    for (int k = 0; k < rank(); ++k) out(k, i) = N(i, j, k);
  return out;
}

bool FusionRing::is_semisimple() const { return cartan_ == IntMatrix::Identity(rank(), rank()); }

std::string FusionRing::label(int i) const { return label_or_index(labels_, i); }

bool operator==(const FusionRing& a, const FusionRing& b) {
  return a.left_ == b.left_ && a.unit_components_ == b.unit_components_ && a.dual_ == b.dual_ &&
         a.cartan_ == b.cartan_ && a.multifusion_ == b.multifusion_;
}

GrothendieckElement basis_element(const FusionRing& ring, int i) {
  if (i < 0 || i >= ring.rank()) throw std::out_of_range("basis_element: index out of range");
  RatVector e = RatVector::Zero(ring.rank());
  e(i) = 1;
  return e;
}

GrothendieckElement multiply(const FusionRing& ring, const GrothendieckElement& x, const GrothendieckElement& y) {
  if (y.size() != ring.rank()) throw std::invalid_argument("multiply: element length differs from rank");
  return left_mult_matrix(ring, x) * y;
}

RatMatrix left_mult_matrix(const FusionRing& ring, const GrothendieckElement& x) {
  return left_mult_matrix<Rational>(ring, x);
}

ValidationReport validate_ring(const FusionRing& ring) {
  ValidationReport report;
  const int r = ring.rank();

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.N(i, j, k) < 0) report.add("negative_coefficient", {i, j, k});

  bool duals_ok = true;
  for (int i = 0; i < r; ++i) {
    int d = ring.dual(i);
    if (d < 0 || d >= r) {
      report.add("dual_out_of_range", {i});
      duals_ok = false;
    } else if (ring.dual(d) != i) {
      report.add("dual_not_involution", {i});
      duals_ok = false;
    }
  }

  bool units_ok = true;
  std::set<int> seen;
  for (int c : ring.unit_components()) {
    if (c < 0 || c >= r || !seen.insert(c).second) {
      report.add("unit_component_invalid", {c});
      units_ok = false;
    }
  }
  if (!units_ok) return report;

  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      Integer left = 0, right = 0;
      for (int c : ring.unit_components()) {
        left += ring.N(c, j, k);
        right += ring.N(j, c, k);
      }
      const Integer expected = j == k ? 1 : 0;
      if (left != expected) report.add("unit_law_left", {j, k});
      if (right != expected) report.add("unit_law_right", {j, k});
    }

  if (duals_ok) {
    for (int c : ring.unit_components())
      if (ring.dual(c) != c) report.add("unit_not_self_dual", {c});
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Integer pairing = 0;
        for (int c : ring.unit_components()) pairing += ring.N(i, j, c);
        if (pairing != (j == ring.dual(i) ? 1 : 0)) report.add("unit_reciprocity", {i, j});
      }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
          if (ring.N(i, j, k) != ring.N(ring.dual(j), ring.dual(i), ring.dual(k)))
            report.add("duality_antihomomorphism", {i, j, k});
          if (ring.N(i, j, k) != ring.N(ring.dual(i), k, j)) report.add("frobenius_reciprocity", {i, j, k});
        }
  }

  // (X_i X_j) X_k = X_i (X_j X_k)  <=>  L_i L_j = sum_m N_ij^m L_m
  auto record = [&](int i, int j, auto&& lhs, auto&& rhs) {
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l)
        if (lhs(l, k) != rhs(l, k)) report.add("associativity", {i, j, k, l});
  };
  if (auto small = small_left_matrices(ring)) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        SmallMatrix lhs = SmallMatrix::Zero(r, r);
        for (int m = 0; m < r; ++m) {
          const long long n = (*small)[i](m, j);
          if (n != 0) lhs += n * (*small)[m];
        }
        SmallMatrix rhs = (*small)[i] * (*small)[j];
        record(i, j, lhs, rhs);
      }
  } else {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        IntMatrix lhs = IntMatrix::Zero(r, r);
        for (int m = 0; m < r; ++m)
          if (ring.N(i, j, m) != 0) lhs += ring.N(i, j, m) * ring.left_matrix(m);
        IntMatrix rhs = ring.left_matrix(i) * ring.left_matrix(j);
        record(i, j, lhs, rhs);
      }
  }

  if (ring.has_cartan()) {
    const IntMatrix& c = ring.cartan();
    for (int i = 0; i < r; ++i) {
      if (c(i, i) <= 0) report.add("cartan_diagonal", {i});
      for (int j = 0; j < r; ++j)
        if (c(i, j) < 0) report.add("cartan_negative", {i, j});
    }
  }
  return report;
}

PerronResult fpdim_object(const FusionRing& ring, int i, const PerronOptions& opts) {
  if (i < 0 || i >= ring.rank()) throw std::out_of_range("fpdim_object: index out of range");
  PerronResult result = perron_eigen(ring.left_matrix(i), opts);
  if (!ring.is_multifusion() && result.hi < 1)
    throw std::domain_error("fpdim_object: FPdim below 1, the ring is not a valid fusion ring");
  return result;
}

IntervalVector RingDimensions::object_intervals() const {
  IntervalVector out(static_cast<Index>(objects.size()));
  for (std::size_t i = 0; i < objects.size(); ++i) out(static_cast<Index>(i)) = objects[i].interval();
  return out;
}

bool RingDimensions::all_exact() const {
  return category.exact_integer &&
         std::all_of(objects.begin(), objects.end(), [](const PerronResult& p) { return p.exact_integer.has_value(); });
}

namespace {

IntMatrix category_matrix(const FusionRing& ring) {
  const int r = ring.rank();
  const IntMatrix& c = ring.cartan();
  if (auto small = small_left_matrices(ring, Integer(r) * std::max(Integer(1), max_abs(c)))) {
    SmallMatrix k = SmallMatrix::Zero(r, r);
    for (int i = 0; i < r; ++i) {
      SmallMatrix t = SmallMatrix::Zero(r, r);
      for (int j = 0; j < r; ++j) {
        const long long cij = c(i, j).convert_to<long long>();
        if (cij != 0) t += cij * (*small)[static_cast<std::size_t>(ring.dual(j))];
      }
      k += (*small)[static_cast<std::size_t>(i)] * t;
    }
    return from_small(k);
  }
  IntMatrix k = IntMatrix::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    IntMatrix t = IntMatrix::Zero(r, r);
    for (int j = 0; j < r; ++j)
      if (c(i, j) != 0) t += c(i, j) * ring.left_matrix(ring.dual(j));
    k += ring.left_matrix(i) * t;
  }
  return k;
}

PerronResult category_from_objects(const FusionRing& ring, const std::vector<PerronResult>& objects,
                                   const PerronOptions& opts) {
  if (ring.is_multifusion()) throw std::invalid_argument("fpdim_category: defined here for fusion rings only");
  const int r = ring.rank();
  const IntMatrix& c = ring.cartan();
  Interval quadratic;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (c(i, j) != 0) quadratic += Interval(Rational(c(i, j))) * objects[i].interval() * objects[j].interval();

  PerronResult result = perron_eigen(category_matrix(ring), opts);
  if (!result.interval().intersects(quadratic))
    throw std::logic_error("fpdim_category: matrix and interval routes disagree (invalid ring?)");
  Interval both = intersect(result.interval(), quadratic);
  result.lo = both.lo();
  result.hi = both.hi();
  return result;
}

}  // namespace

RingDimensions ring_dimensions(const FusionRing& ring, const PerronOptions& opts) {
  RingDimensions dims;
  dims.objects.reserve(static_cast<std::size_t>(ring.rank()));
  for (int i = 0; i < ring.rank(); ++i) dims.objects.push_back(fpdim_object(ring, i, opts));
  dims.category = category_from_objects(ring, dims.objects, opts);
  return dims;
}

PerronResult fpdim_category(const FusionRing& ring, const PerronOptions& opts) {
  return ring_dimensions(ring, opts).category;
}

IntervalVector regular_object(const FusionRing& ring, const RingDimensions& dims) {
  if (ring.is_multifusion()) throw std::invalid_argument("regular_object: defined here for fusion rings only");
  const IntervalVector d = dims.object_intervals();
  IntervalVector out(ring.rank());
  for (int j = 0; j < ring.rank(); ++j) {
    Interval acc;
    for (int i = 0; i < ring.rank(); ++i)
      if (ring.cartan()(i, j) != 0) acc += Interval(Rational(ring.cartan()(i, j))) * d(i);
    out(j) = acc;
  }
  return out;
}

IntervalVector regular_object(const FusionRing& ring, const PerronOptions& opts) {
  return regular_object(ring, ring_dimensions(ring, opts));
}

FusionRing deligne_product(const FusionRing& a, const FusionRing& b) {
  const int ra = a.rank(), rb = b.rank();
  std::vector<IntMatrix> left;
  left.reserve(static_cast<std::size_t>(ra * rb));
  std::vector<int> dual, units;
  std::vector<std::string> labels;
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < rb; ++j) {
      left.push_back(kronecker<Integer>(a.left_matrix(i), b.left_matrix(j)));
      dual.push_back(a.dual(i) * rb + b.dual(j));
      labels.push_back(a.label(i) + "⊠" + b.label(j));
    }
  for (int ua : a.unit_components())
    for (int ub : b.unit_components()) units.push_back(ua * rb + ub);
  std::optional<IntMatrix> cartan;
  if (a.has_cartan() || b.has_cartan()) cartan = kronecker<Integer>(a.cartan(), b.cartan());
  return FusionRing(std::move(left), std::move(units), std::move(dual), std::move(cartan), std::move(labels),
                    a.is_multifusion() || b.is_multifusion());
}

FusionRing opposite_ring(const FusionRing& ring) {
  std::vector<IntMatrix> left;
  left.reserve(static_cast<std::size_t>(ring.rank()));
  for (int i = 0; i < ring.rank(); ++i) left.push_back(ring.right_matrix(i));
  std::optional<IntMatrix> cartan;
  if (ring.has_cartan()) cartan = ring.cartan();
  return FusionRing(std::move(left), ring.unit_components(), ring.duals(), std::move(cartan), ring.labels(),
                    ring.is_multifusion());
}

FusionRing trivial_ring() {
  return FusionRing({IntMatrix::Identity(1, 1)}, {0}, {0}, std::nullopt, {"1"});
}

std::vector<int> fusion_closure(const FusionRing& ring, const std::vector<int>& seeds) {
  std::set<int> members(ring.unit_components().begin(), ring.unit_components().end());
  for (int s : seeds) {
    if (s < 0 || s >= ring.rank()) throw std::out_of_range("fusion_closure: seed out of range");
    members.insert(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(members.begin(), members.end());
    for (int i : current) {
      if (members.insert(ring.dual(i)).second) grew = true;
      for (int j : current)
        for (int k = 0; k < ring.rank(); ++k)
          if (ring.N(i, j, k) != 0 && members.insert(k).second) grew = true;
    }
  }
  return {members.begin(), members.end()};
}

std::vector<std::vector<int>> fusion_subrings(const FusionRing& ring, std::size_t limit) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue{fusion_closure(ring, {})};
  found.insert(queue.front());
  for (std::size_t head = 0; head < queue.size() && found.size() < limit; ++head) {
    const std::vector<int> base = queue[head];
    for (int x = 0; x < ring.rank() && found.size() < limit; ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<int> seeds = base;
      seeds.push_back(x);
      std::vector<int> grown = fusion_closure(ring, seeds);
      if (found.insert(grown).second) queue.push_back(std::move(grown));
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

FusionRing based_subring(const FusionRing& ring, const std::vector<int>& subset) {
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (fusion_closure(ring, sorted) != sorted)
    throw std::invalid_argument("based_subring: subset is not closed under products, duals and unit");
  std::map<int, int> position;
  for (std::size_t p = 0; p < sorted.size(); ++p) position[sorted[p]] = static_cast<int>(p);
  const auto s = static_cast<Index>(sorted.size());
  std::vector<IntMatrix> left;
  std::vector<int> dual, units;
  std::vector<std::string> labels;
  for (int i : sorted) {
    IntMatrix m(s, s);
    for (Index a = 0; a < s; ++a)
      for (Index b = 0; b < s; ++b) m(a, b) = ring.N(i, sorted[b], sorted[a]);
    left.push_back(std::move(m));
    dual.push_back(position.at(ring.dual(i)));
    labels.push_back(ring.label(i));
  }
  for (int c : ring.unit_components()) units.push_back(position.at(c));
  std::optional<IntMatrix> cartan;
  if (ring.has_cartan()) {
    IntMatrix c(s, s);
    for (Index a = 0; a < s; ++a)
      for (Index b = 0; b < s; ++b) c(a, b) = ring.cartan()(sorted[a], sorted[b]);
    cartan = c;
  }
  return FusionRing(std::move(left), std::move(units), std::move(dual), std::move(cartan), std::move(labels),
                    ring.is_multifusion());
}

std::optional<std::vector<int>> based_isomorphism(const FusionRing& a, const FusionRing& b) {
  const int r = a.rank();
  if (b.rank() != r || a.unit_components().size() != b.unit_components().size()) return std::nullopt;

  // Cheap per-object invariants prune the search.
  auto signature = [](const FusionRing& ring, int i) {
    Integer total = ring.left_matrix(i).sum();
    Integer square = 0;
    for (int k = 0; k < ring.rank(); ++k) square += ring.N(i, i, k);
    return std::make_tuple(total, square, ring.dual(i) == i, ring.is_unit_component(i));
  };
  std::vector<int> sigma(static_cast<std::size_t>(r), -1);
  std::vector<bool> used(static_cast<std::size_t>(r), false);

  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == r) return true;
    for (int cand = 0; cand < r; ++cand) {
      if (used[cand] || signature(a, i) != signature(b, cand)) continue;
      sigma[i] = cand;
      used[cand] = true;
      bool consistent = true;
      for (int x = 0; x <= i && consistent; ++x) {
        const int dx = a.dual(x);
        if (dx <= i && sigma[dx] != b.dual(sigma[x])) consistent = false;
        for (int y = 0; y <= i && consistent; ++y)
          for (int z = 0; z <= i && consistent; ++z)
            if (a.N(x, y, z) != b.N(sigma[x], sigma[y], sigma[z])) consistent = false;
      }
      if (consistent && extend(i + 1)) return true;
      used[cand] = false;
      sigma[i] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return sigma;
}

}  // namespace fusionseq
