#include "fusionseq/exact_sequence.hpp"

#include <algorithm>
#include <set>

namespace fusionseq {

namespace {

bool semisimple(const SequenceData& s) {
  return s.A->is_semisimple() && s.B->is_semisimple() && s.C->is_semisimple() && s.M->ring().is_semisimple();
}

void require_semisimple(const SequenceData& s, const char* who) {
  if (!semisimple(s))
    throw NotSemisimpleError(std::string(who) + ": exactness is only certified for semisimple data (identity Cartan)");
}

// Product of two target elements in C (x) End(M):
// (Y_t E_kj)(Y_u E_lm) = delta_jl sum_v N_C[t][u][v] Y_v E_km.
IntVector target_product(const SequenceData& s, const IntVector& x, const IntVector& y) {
  const int m = s.mrank(), c = s.C->rank();
  IntVector out = IntVector::Zero(s.target_rank());
  for (int t = 0; t < c; ++t)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j) {
        const Integer& a = x(s.target_index(t, k, j));
        if (a == 0) continue;
        for (int u = 0; u < c; ++u)
          for (int l = 0; l < m; ++l) {
            const Integer& b = y(s.target_index(u, j, l));
            if (b == 0) continue;
            const Integer ab = a * b;
            for (int v = 0; v < c; ++v)
              if (s.C->N(t, u, v) != 0) out(s.target_index(v, k, l)) += ab * s.C->N(t, u, v);
          }
      }
  return out;
}

IntVector target_dual(const SequenceData& s, const IntVector& x) {
  const int m = s.mrank();
  IntVector out = IntVector::Zero(s.target_rank());
  for (int t = 0; t < s.C->rank(); ++t)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j) out(s.target_index(s.C->dual(t), j, k)) = x(s.target_index(t, k, j));
  return out;
}

int unit_c(const SequenceData& s) { return s.C->unit_components().front(); }

bool in_trivial_component(const SequenceData& s, int row) {
  const int m2 = s.mrank() * s.mrank();
  return row / m2 == unit_c(s);
}

bool contains_one(const Interval& x) { return x.contains(Rational(1)); }

}  // namespace

ValidationReport validate_sequence(const SequenceData& s) {
  ValidationReport report;
  if (!s.A || !s.B || !s.C || !s.M) {
    report.add("missing_component", {});
    return report;
  }
  report.merge(validate_ring(*s.A), "A/");
  report.merge(validate_ring(*s.B), "B/");
  report.merge(validate_ring(*s.C), "C/");
  ValidationReport module = validate_module(*s.M);
  for (const auto& v : module.violations())
    if (v.kind.rfind("ring/", 0) != 0) report.add("M/" + v.kind, v.indices, v.detail);
  if (!(s.M->ring() == *s.A)) report.add("module_ring_mismatch", {});
  if (s.A->is_multifusion() || s.B->is_multifusion() || s.C->is_multifusion()) report.add("multifusion_component", {});
  if (!semisimple(s)) report.add("cartan_not_identity", {});

  const int ra = s.A->rank(), rb = s.B->rank();
  if (s.iota.rows() != rb || s.iota.cols() != ra) report.add("iota_shape", {rb, ra});
  if (s.F.rows() != s.target_rank() || s.F.cols() != rb) report.add("functor_shape", {s.target_rank(), rb});
  if (!report.ok()) return report;

  for (Index r = 0; r < s.iota.rows(); ++r)
    for (Index c = 0; c < s.iota.cols(); ++c)
      if (s.iota(r, c) < 0) report.add("iota_negative", {static_cast<long>(r), static_cast<long>(c)});
  for (Index r = 0; r < s.F.rows(); ++r)
    for (Index c = 0; c < s.F.cols(); ++c)
      if (s.F(r, c) < 0) report.add("functor_negative", {static_cast<long>(r), static_cast<long>(c)});

  // iota is a based embedding: simples to distinct simples.
  std::vector<int> image(static_cast<std::size_t>(ra), -1);
  for (int i = 0; i < ra; ++i) {
    int target = -1;
    bool basis = s.iota.col(i).sum() == 1;
    for (int r = 0; r < rb && basis; ++r)
      if (s.iota(r, i) == 1) target = r;
    if (!basis || target < 0) {
      report.add("iota_not_basis", {i});
      continue;
    }
    image[i] = target;
    for (int j = 0; j < i; ++j)
      if (image[j] == target) report.add("iota_not_injective", {j, i});
  }
  if (!report.ok()) return report;

  const int ua = s.A->unit(), ub = s.B->unit();
  if (image[ua] != ub) report.add("iota_unit", {ua});
  for (int i = 0; i < ra; ++i) {
    if (image[s.A->dual(i)] != s.B->dual(image[i])) report.add("iota_duality", {i});
    for (int j = 0; j < ra; ++j)
      for (int k = 0; k < ra; ++k)
        if (s.A->N(i, j, k) != s.B->N(image[i], image[j], image[k])) report.add("iota_multiplicativity", {i, j, k});
    // products of embedded simples must stay inside the image
    for (int j = 0; j < ra; ++j)
      for (int r = 0; r < rb; ++r)
        if (s.B->N(image[i], image[j], r) != 0 && std::find(image.begin(), image.end(), r) == image.end())
          report.add("iota_multiplicativity", {i, j, -1});
  }

  const int m = s.mrank();
  IntVector unit_image = IntVector::Zero(s.target_rank());
  for (int j = 0; j < m; ++j) unit_image(s.target_index(unit_c(s), j, j)) = 1;
  if (s.F.col(ub) != unit_image) report.add("functor_unit", {ub});

  std::vector<IntVector> cols;
  for (int x = 0; x < rb; ++x) cols.push_back(s.F.col(x));
  for (int x = 0; x < rb; ++x) {
    if (target_dual(s, cols[x]) != cols[s.B->dual(x)]) report.add("functor_duality", {x});
    for (int y = 0; y < rb; ++y) {
      IntVector lhs = IntVector::Zero(s.target_rank());
      for (int z = 0; z < rb; ++z)
        if (s.B->N(x, y, z) != 0) lhs += s.B->N(x, y, z) * cols[z];
      if (lhs != target_product(s, cols[x], cols[y])) report.add("functor_multiplicativity", {x, y});
    }
  }

  // F o iota is the action of A on M, placed in 1_C (x) End(M).
  const IntMatrix action = action_functor_matrix(*s.M);
  for (int i = 0; i < ra; ++i) {
    IntVector expected = IntVector::Zero(s.target_rank());
    for (int e = 0; e < m * m; ++e) expected(unit_c(s) * m * m + e) = action(e, i);
    if (cols[image[i]] != expected) report.add("functor_iota_action", {i});
  }
  return report;
}

std::vector<int> kernel_simples(const SequenceData& s) {
  std::vector<int> out;
  for (int x = 0; x < s.B->rank(); ++x) {
    bool inside = true;
    for (int row = 0; row < s.target_rank() && inside; ++row)
      if (s.F(row, x) != 0 && !in_trivial_component(s, row)) inside = false;
    if (inside) out.push_back(x);
  }
  return out;
}

std::vector<int> iota_image(const SequenceData& s) {
  std::vector<int> out;
  for (Index i = 0; i < s.iota.cols(); ++i)
    for (Index r = 0; r < s.iota.rows(); ++r)
      if (s.iota(r, i) != 0) out.push_back(static_cast<int>(r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_surjective_gr(const SequenceData& s) {
  for (Index row = 0; row < s.F.rows(); ++row)
    if (s.F.row(row).sum() == 0) return false;
  return true;
}

std::vector<int> normality_witnesses(const SequenceData& s) {
  require_semisimple(s, "normality_check");
  const std::vector<int> kernel = kernel_simples(s);
  std::vector<int> out;
  for (int x = 0; x < s.B->rank(); ++x) {
    if (std::binary_search(kernel.begin(), kernel.end(), x)) continue;
    for (int row = 0; row < s.target_rank(); ++row)
      if (s.F(row, x) != 0 && in_trivial_component(s, row)) {
        out.push_back(x);
        break;
      }
  }
  return out;
}

bool normality_check(const SequenceData& s) { return normality_witnesses(s).empty(); }

std::string to_string(AlphaRoute route) {
  switch (route) {
    case AlphaRoute::exact_rational: return "exact_rational";
    case AlphaRoute::interval_excludes_one: return "interval_excludes_one";
    case AlphaRoute::interval_with_normality: return "interval_with_normality";
    case AlphaRoute::undecided: return "undecided";
  }
  return "undecided";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exact: return "exact";
    case Verdict::not_exact: return "not_exact";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

Rational alpha_window() { return pow10(-9); }

AlphaCertificate compute_alpha(const SequenceData& s, const PerronOptions& opts) {
  require_semisimple(s, "compute_alpha");
  AlphaCertificate cert;
  PerronOptions local = opts;
  std::optional<bool> normal;
  const Interval window(1 - alpha_window(), 1 + alpha_window());
  for (int round = 0; round < 4; ++round) {
    cert.refinements = round;
    cert.fpdim_a = fpdim_category(*s.A, local);
    cert.fpdim_b = fpdim_category(*s.B, local);
    cert.fpdim_c = fpdim_category(*s.C, local);
    const auto& a = cert.fpdim_a;
    const auto& b = cert.fpdim_b;
    const auto& c = cert.fpdim_c;
    if (a.exact_integer && b.exact_integer && c.exact_integer) {
      const Rational alpha = Rational(*b.exact_integer) / (Rational(*a.exact_integer) * Rational(*c.exact_integer));
      cert.exact = alpha;
      cert.interval = Interval(alpha);
      cert.route = AlphaRoute::exact_rational;
      cert.equals_one = alpha == 1;
      break;
    }
    cert.interval = b.interval() / (a.interval() * c.interval());
    if (!contains_one(cert.interval)) {
      cert.route = AlphaRoute::interval_excludes_one;
      cert.equals_one = false;
      break;
    }
    if (window.contains(cert.interval)) {
      if (!normal) normal = normality_check(s);
      if (*normal) {
        cert.route = AlphaRoute::interval_with_normality;
        cert.equals_one = true;
        break;
      }
    }
    local.tol = local.tol / Rational(Integer(1) << 20);
  }
  cert.consistent = cert.interval.hi() >= 1 - opts.tol;
  return cert;
}

ExactnessReport check_exact(const SequenceData& s, const PerronOptions& opts) {
  if (s.A && s.B && s.C && s.M) require_semisimple(s, "check_exact");
  ExactnessReport rep;
  rep.validation = validate_sequence(s);
  if (!rep.validation.ok()) {
    rep.verdict = Verdict::not_exact;
    rep.reason = "invalid sequence data";
    return rep;
  }
  rep.kernel = kernel_simples(s);
  rep.image = iota_image(s);
  rep.kernel_matches = rep.kernel == rep.image;
  rep.kernel_is_subring = fusion_closure(*s.B, rep.kernel) == rep.kernel;
  rep.surjective = is_surjective_gr(s);
  rep.normality_witnesses = normality_witnesses(s);
  rep.normal = rep.normality_witnesses.empty();
  rep.alpha = compute_alpha(s, opts);
  const AlphaCertificate& alpha = *rep.alpha;

  if (rep.surjective && alpha.independent())
    rep.cross_check = (rep.kernel_matches && rep.normal) == alpha.equals_one;

  if (!rep.surjective) {
    rep.verdict = Verdict::not_exact;
    rep.reason = "F is not surjective";
  } else if (!rep.kernel_matches) {
    rep.verdict = Verdict::not_exact;
    rep.reason = "kernel mismatch: Ker(F) differs from the image of iota";
  } else if (!rep.normal) {
    rep.verdict = Verdict::not_exact;
    rep.reason = "F is not normal";
  } else if (!alpha.decided()) {
    rep.verdict = Verdict::undecided;
    rep.reason = "alpha undecided at the current precision";
  } else if (!alpha.equals_one) {
    rep.verdict = Verdict::not_exact;
    rep.reason = "alpha differs from 1";
  } else {
    rep.verdict = Verdict::exact;
    rep.reason = "kernel equals the image of iota, F normal, alpha = 1";
  }
  if (rep.cross_check && !*rep.cross_check) rep.reason += " (criteria disagree)";
  return rep;
}

namespace {

Rational gap(const Interval& a, const Interval& b) { return a.distance(b); }

Interval alpha_interval(const SequenceData& s, const PerronOptions& opts) { return compute_alpha(s, opts).interval; }

}  // namespace

NumericCheck regular_image_check(const SequenceData& s, const PerronOptions& opts) {
  require_semisimple(s, "regular_image_check");
  const Interval alpha = alpha_interval(s, opts);
  const IntervalVector rb = regular_object(*s.B, ring_dimensions(*s.B, opts));
  const IntervalVector rc = regular_object(*s.C, ring_dimensions(*s.C, opts));
  const ModuleFPData md = module_fpdims(*s.M, opts);
  const int m = s.mrank();
  const IntervalVector image = apply(s.F, rb);
  NumericCheck out;
  out.worst_gap = 0;
  for (int t = 0; t < s.C->rank(); ++t)
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j) {
        const Interval expected = alpha * rc(t) * md.dims(k) * md.dims(j);
        out.worst_gap = std::max(out.worst_gap, gap(image(s.target_index(t, k, j)), expected));
      }
  out.passed = out.worst_gap <= opts.tol;
  return out;
}

NumericCheck internal_hom_fpdim_check(const SequenceData& s, int j, int k, const PerronOptions& opts) {
  require_semisimple(s, "internal_hom_fpdim_check");
  if (j < 0 || k < 0 || j >= s.mrank() || k >= s.mrank())
    throw std::out_of_range("internal_hom_fpdim_check: module index out of range");
  const Interval alpha = alpha_interval(s, opts);
  const IntervalVector db = ring_dimensions(*s.B, opts).object_intervals();
  const ModuleFPData md = module_fpdims(*s.M, opts);
  Interval lhs;
  const int row = s.target_index(unit_c(s), k, j);
  for (int x = 0; x < s.B->rank(); ++x)
    if (s.F(row, x) != 0) lhs += Interval(Rational(s.F(row, x))) * db(x);
  const Interval rhs = alpha * md.dims(j) * md.dims(k);
  NumericCheck out;
  out.worst_gap = gap(lhs, rhs);
  out.passed = out.worst_gap <= opts.tol;
  return out;
}

BasedModule induced_module(const SequenceData& s) {
  const int m = s.mrank(), c = s.C->rank(), n = c * m;
  std::vector<IntMatrix> action;
  for (int x = 0; x < s.B->rank(); ++x) {
    IntMatrix b = IntMatrix::Zero(n, n);
    for (int t = 0; t < c; ++t)
      for (int j = 0; j < m; ++j)
        for (int u = 0; u < c; ++u)
          for (int k = 0; k < m; ++k) {
            Integer acc = 0;
            for (int sidx = 0; sidx < c; ++sidx) {
              const Integer& f = s.F(s.target_index(sidx, k, j), x);
              if (f != 0) acc += f * s.C->N(sidx, t, u);
            }
            b(u * m + k, t * m + j) = acc;
          }
    action.push_back(std::move(b));
  }
  std::vector<std::string> labels;
  for (int t = 0; t < c; ++t)
    for (int j = 0; j < m; ++j) labels.push_back(s.C->label(t) + "⊠" + s.M->label(j));
  return BasedModule(s.B, std::move(action), std::move(labels));
}

NumericCheck induced_module_dims(const SequenceData& s, const PerronOptions& opts) {
  require_semisimple(s, "induced_module_dims");
  const AlphaCertificate alpha = compute_alpha(s, opts);
  const BasedModule induced = induced_module(s);
  const ModuleFPData dims = module_fpdims(induced, opts);
  const IntervalVector dc = ring_dimensions(*s.C, opts).object_intervals();
  const ModuleFPData dm = module_fpdims(*s.M, opts);
  const long bits = 8 + 4 * static_cast<long>(std::max<long>(1, -ilog2(opts.tol)));
  const Interval root_alpha = sqrt(alpha.interval, bits);
  NumericCheck out;
  out.worst_gap = 0;
  const int m = s.mrank();
  for (int t = 0; t < s.C->rank(); ++t)
    for (int j = 0; j < m; ++j)
      out.worst_gap = std::max(out.worst_gap, gap(dims.dims(t * m + j), root_alpha * dc(t) * dm.dims(j)));
  out.passed = out.worst_gap <= opts.tol;
  return out;
}

NumericCheck dual_dims_check(const SequenceData& s, const FusionRing& dual_a, const FusionRing& dual_b,
                             const FusionRing& dual_c, const PerronOptions& opts) {
  const Interval a = fpdim_category(*s.A, opts).interval(), b = fpdim_category(*s.B, opts).interval(),
                 c = fpdim_category(*s.C, opts).interval();
  const Interval da = fpdim_category(dual_a, opts).interval(), db = fpdim_category(dual_b, opts).interval(),
                 dc = fpdim_category(dual_c, opts).interval();
  NumericCheck out;
  out.worst_gap = std::max({gap(a, da), gap(b, db), gap(c, dc)});
  if (check_exact(s, opts).verdict == Verdict::exact) out.worst_gap = std::max(out.worst_gap, gap(db, da * dc));
  out.passed = out.worst_gap <= opts.tol;
  return out;
}

SequenceData make_deligne_sequence(std::shared_ptr<const FusionRing> a, std::shared_ptr<const FusionRing> c,
                                   std::shared_ptr<const BasedModule> m) {
  if (!(m->ring() == *a)) throw std::invalid_argument("make_deligne_sequence: module is not over A");
  if (!is_indecomposable(*m)) throw std::invalid_argument("make_deligne_sequence: module is decomposable");
  SequenceData s;
  s.A = a;
  s.C = c;
  s.M = m;
  s.B = std::make_shared<const FusionRing>(deligne_product(*a, *c));
  const int ra = a->rank(), rc = c->rank(), mr = m->rank();
  const int uc = c->unit_components().front();
  s.iota = IntMatrix::Zero(ra * rc, ra);
  for (int i = 0; i < ra; ++i) s.iota(i * rc + uc, i) = 1;
  s.F = IntMatrix::Zero(s.target_rank(), ra * rc);
  for (int i = 0; i < ra; ++i)
    for (int t = 0; t < rc; ++t)
      for (int k = 0; k < mr; ++k)
        for (int j = 0; j < mr; ++j) s.F(s.target_index(t, k, j), i * rc + t) = m->a(i, j, k);
  return s;
}

}  // namespace fusionseq
