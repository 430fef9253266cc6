#include "doctest.h"
#include "fixtures.hpp"

#include "fusionseq/based_module.hpp"

#include <random>

using namespace fusionseq;
using namespace fixtures;

namespace {

std::shared_ptr<const FusionRing> share(FusionRing r) { return std::make_shared<const FusionRing>(std::move(r)); }

// Z/n acting on the cosets of the subgroup of index d.
BasedModule cosets(int n, int d) {
  std::vector<IntMatrix> action;
  for (int i = 0; i < n; ++i) {
    IntMatrix a = IntMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j) a((i + j) % d, j) = 1;
    action.push_back(a);
  }
  return BasedModule(share(cyclic(n)), action);
}

BasedModule vec_over_rep_s3() { return fiber_module(share(rep_s3()), {1, 1, 2}); }

BasedModule random_module(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: return regular_module(share(std::vector<FusionRing>{fibonacci(), ising(), rep_s3(), cyclic(3)}[rng() % 4]));
    case 1: {
      const int n = std::vector<int>{2, 4, 6, 8}[rng() % 4];
      return cosets(n, n / 2);
    }
    case 2: return vec_over_rep_s3();
    default: return regular_module(share(deligne_product(fibonacci(), cyclic(2))));
  }
}

bool contains_sqrt(const Interval& x, long square) { return x.lo() * x.lo() <= square && x.hi() * x.hi() >= square; }

}  // namespace

TEST_CASE("documented modules validate") {
  for (const FusionRing& r : {fibonacci(), ising(), rep_s3(), cyclic(4)}) CHECK(validate_module(regular_module(share(r))).ok());
  CHECK(validate_module(vec_over_rep_s3()).ok());
  CHECK(validate_module(cosets(6, 3)).ok());

  BasedModule m = vec_over_rep_s3();
  std::vector<IntMatrix> broken{IntMatrix::Constant(1, 1, 2), m.action_matrix(1), m.action_matrix(2)};
  ValidationReport rep = validate_module(BasedModule(m.ring_ptr(), broken));
  CHECK(rep.has("unit_action"));

  // fiber functor with the wrong dimension breaks associativity
  ValidationReport wrong = validate_module(fiber_module(share(rep_s3()), {1, 1, 3}));
  CHECK(wrong.has("module_associativity"));
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(regular_module(share(fibonacci()))));
  BasedModule vec = fiber_module(share(trivial_ring()), {1});
  BasedModule two = direct_sum(vec, vec);
  CHECK(validate_module(two).ok());
  CHECK_FALSE(is_indecomposable(two));
  CHECK(module_components(two).size() == 2);
  CHECK(is_indecomposable(vec_over_rep_s3()));
  CHECK_THROWS_AS(module_fpdims(two), std::invalid_argument);
}

TEST_CASE("module dimensions") {
  ModuleFPData s3 = module_fpdims(vec_over_rep_s3());
  REQUIRE(s3.dims.size() == 1);
  CHECK(contains_sqrt(s3.dims(0), 6));
  CHECK(s3.dims(0).width() <= pow10(-12));

  ModuleFPData z2 = module_fpdims(regular_module(share(cyclic(2))));
  CHECK(z2.dims(0) == Interval(1));

  ModuleFPData vz2 = module_fpdims(fiber_module(share(cyclic(2)), {1, 1}));
  CHECK(contains_sqrt(vz2.dims(0), 2));

  // cosets of Z/2 in Z/4: two objects of dimension sqrt 2
  ModuleFPData c = module_fpdims(cosets(4, 2));
  CHECK(contains_sqrt(c.dims(0), 2));
  CHECK(contains_sqrt(c.dims(1), 2));

  ModuleFPData fib = module_fpdims(regular_module(share(fibonacci())));
  RingDimensions ring = ring_dimensions(fibonacci());
  CHECK(fib.dims(0).intersects(Interval(1)));
  CHECK(fib.dims(1).intersects(ring.objects[1].interval()));
  CHECK(fib.dims(1).width() <= pow10(-11));
}

TEST_CASE("property: regular module dimensions are the ring dimensions") {
  for (const FusionRing& r : {fibonacci(), ising(), rep_s3(), cyclic(5), deligne_product(fibonacci(), ising())}) {
    ModuleFPData m = module_fpdims(regular_module(share(r)));
    IntervalVector d = m.ring.object_intervals();
    for (int j = 0; j < r.rank(); ++j) CHECK(m.dims(j).intersects(d(j)));
  }
}

TEST_CASE("property: module dimensions are a common eigenvector") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    BasedModule m = random_module(rng);
    REQUIRE(validate_module(m).ok());
    ModuleFPData data = module_fpdims(m);
    IntervalVector d = data.ring.object_intervals();
    // sum_i d_i A_i m = FPdim(A) m
    IntervalVector lhs = IntervalVector::Constant(m.rank(), Interval(0));
    for (int i = 0; i < m.ring().rank(); ++i) {
      IntervalVector ai = apply(m.action_matrix(i), data.dims);
      for (int k = 0; k < m.rank(); ++k) {
        CHECK(ai(k).intersects(d(i) * data.dims(k)));
        lhs(k) += d(i) * ai(k);
      }
    }
    for (int k = 0; k < m.rank(); ++k) CHECK(lhs(k).intersects(data.ring.category.interval() * data.dims(k)));
    Interval norm;
    for (int k = 0; k < m.rank(); ++k) norm += data.dims(k) * data.dims(k);
    CHECK(norm.intersects(data.ring.category.interval()));
  }
}

TEST_CASE("dual modules") {
  BasedModule reg = regular_module(share(cyclic(2)));
  BasedModule d = dual_module(reg);
  for (int i = 0; i < 2; ++i) CHECK(d.action_matrix(i) == reg.action_matrix(i));

  BasedModule vec = vec_over_rep_s3();
  BasedModule dv = dual_module(vec);
  for (int i = 0; i < 3; ++i) CHECK(dv.action_matrix(i) == vec.action_matrix(i));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    BasedModule m = random_module(rng);
    BasedModule dm = dual_module(m);
    CHECK(validate_module(dm).ok());
    BasedModule ddm = dual_module(dm);
    CHECK(ddm.ring() == m.ring());
    for (int i = 0; i < m.ring().rank(); ++i) CHECK(ddm.action_matrix(i) == m.action_matrix(i));
  }
}

TEST_CASE("matrix unit rings") {
  FusionRing e1 = end_ring(1);
  CHECK(e1 == trivial_ring());
  CHECK_FALSE(e1.is_multifusion());

  FusionRing e2 = end_ring(2);
  CHECK(e2.rank() == 4);
  CHECK(e2.is_multifusion());
  CHECK(e2.unit_components() == std::vector<int>{0, 3});
  // E01 E10 = E00
  CHECK(e2.N(1, 2, 0) == 1);
  CHECK(e2.N(2, 1, 3) == 1);
  CHECK(e2.N(1, 1, 0) == 0);
  for (int n = 1; n <= 4; ++n) CHECK(validate_ring(end_ring(n)).ok());
}

TEST_CASE("action functor matrices") {
  IntMatrix z2 = action_functor_matrix(regular_module(share(cyclic(2))));
  // rows E00, E01, E10, E11
  CHECK(z2.col(0) == (IntVector(4) << 1, 0, 0, 1).finished());
  CHECK(z2.col(1) == (IntVector(4) << 0, 1, 1, 0).finished());

  IntMatrix vec = action_functor_matrix(vec_over_rep_s3());
  CHECK(vec == (IntMatrix(1, 3) << 1, 1, 2).finished());

  IntMatrix fib = action_functor_matrix(regular_module(share(fibonacci())));
  CHECK(fib.col(1) == (IntVector(4) << 0, 1, 1, 1).finished());
}

TEST_CASE("property: action functors of indecomposable modules hit every matrix unit") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    BasedModule m = random_module(rng);
    IntMatrix f = action_functor_matrix(m);
    for (Index row = 0; row < f.rows(); ++row) CHECK(f.row(row).sum() > 0);
    // F is a ring homomorphism into End(M)
    FusionRing end = end_ring(m);
    const FusionRing& a = m.ring();
    for (int i = 0; i < a.rank(); ++i)
      for (int j = 0; j < a.rank(); ++j) {
        IntVector lhs = IntVector::Zero(end.rank());
        for (int k = 0; k < a.rank(); ++k)
          if (a.N(i, j, k) != 0) lhs += a.N(i, j, k) * f.col(k);
        IntVector rhs = IntVector::Zero(end.rank());
        for (int x = 0; x < end.rank(); ++x)
          for (int y = 0; y < end.rank(); ++y)
            if (f(x, i) != 0 && f(y, j) != 0) rhs += f(x, i) * f(y, j) * end.left_matrix(x).col(y);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("exactness is assumed for semisimple rings only") {
  CHECK(is_exact_module(vec_over_rep_s3()) == true);
  IntMatrix c(1, 1);
  c(0, 0) = 2;
  auto modular = share(FusionRing({IntMatrix::Identity(1, 1)}, {0}, {0}, c));
  CHECK_FALSE(is_exact_module(regular_module(modular)).has_value());
}
