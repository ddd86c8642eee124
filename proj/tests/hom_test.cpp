#include <gtest/gtest.h>

#include "repdescend/testing/oracle.hpp"

using namespace repdescend;
namespace rt = repdescend::testing;
namespace oracle = repdescend::testing::oracle;

namespace {

ModuleRep trivial_c3(const rt::Algebras& algs) {
  return rt::cyclic_module(algs.c3, Matrix::identity(algs.prime, 1));
}

/// The 2-dim simple GF(2)[C3]-module: companion matrix of x^2 + x + 1.
ModuleRep simple_c3(const rt::Algebras& algs) {
  return rt::cyclic_module(algs.c3, Matrix(algs.prime, 2, 2, {0, 1, 1, 1}));
}

bool intertwines(const ModuleRep& m, const ModuleRep& n, const Matrix& x) {
  for (std::size_t i = 0; i < m.action().size(); ++i)
    if (!(x * m.action(i) == n.action(i) * x)) return false;
  return true;
}

}  // namespace

TEST(Hom, Dimensions) {
  rt::Algebras a2(make_field(2, 1));
  EXPECT_EQ(hom_space(regular_module(a2.c2), regular_module(a2.c2)).dim(), 2u);
  EXPECT_EQ(hom_space(trivial_c3(a2), simple_c3(a2)).dim(), 0u);
  EXPECT_EQ(hom_space(simple_c3(a2), simple_c3(a2)).dim(), 2u);
  EXPECT_EQ(hom_space(regular_module(a2.c3), zero_module(a2.c3, a2.prime)).dim(), 0u);
}

TEST(Hom, BasisIntertwinesAndMatchesNaiveSolve) {
  rt::Rng rng(21);
  for (std::uint32_t p : {2u, 3u}) {
    rt::Algebras algs(make_field(p, 1));
    Field k = make_field(p, 2);
    for (int t = 0; t < 25; ++t) {
      auto fam = rt::pick(rng, std::vector<rt::Family>{rt::Family::C2, rt::Family::C3, rt::Family::C4});
      ModuleRep m = rt::random_module(algs, fam, k, 1 + rt::uniform(rng, 4), rng);
      ModuleRep n = rt::random_module(algs, fam, k, 1 + rt::uniform(rng, 4), rng);
      HomSpace h = hom_space(m, n);
      for (const auto& x : h.basis) EXPECT_TRUE(intertwines(m, n, x));
      EXPECT_EQ(h.dim(), oracle::naive_hom(m, n).size());
      if (h.dim() > 0) EXPECT_EQ(MatrixSpace(k, n.dim(), m.dim(), h.basis).dim(), h.dim());
    }
  }
}

TEST(EndRing, RegularGf3C3IsLocal) {
  rt::Algebras algs(make_field(3, 1));
  EndRing e = end_ring(regular_module(algs.c3));
  EXPECT_EQ(e.dim(), 3u);
  EXPECT_EQ(e.radical_dim(), 2u);
  EXPECT_EQ(e.quotient().algebra->dim(), 1u);
  EXPECT_TRUE(is_indecomposable(regular_module(algs.c3)));
}

TEST(EndRing, SimpleGf2C3IsGf4) {
  rt::Algebras algs(make_field(2, 1));
  EndRing e = end_ring(simple_c3(algs));
  EXPECT_EQ(e.dim(), 2u);
  EXPECT_EQ(e.radical_dim(), 0u);
  EXPECT_TRUE(e.as_algebra()->is_commutative());
  EXPECT_FALSE(is_indecomposable(regular_module(algs.c3)));
}

TEST(EndRing, SquareGivesMatrixRing) {
  rt::Algebras algs(make_field(2, 1));
  const std::size_t base = end_ring(simple_c3(algs)).quotient().algebra->dim();
  EndRing sq = end_ring(power(simple_c3(algs), 2));
  EXPECT_EQ(sq.quotient().algebra->dim(), 4 * base);
  EXPECT_FALSE(sq.quotient().algebra->is_commutative());
}

TEST(Radical, MatchesEnumeration) {
  // sizes from enumeration: z in J iff a z nilpotent for every a
  rt::Algebras a2(make_field(2, 1)), a3(make_field(3, 1));
  auto klein = group_algebra(builtin_group("klein4"), a2.prime);
  EXPECT_EQ(oracle::radical_size(*klein), 8u);
  EXPECT_EQ(algebra_radical(*klein).size(), 3u);
  EXPECT_EQ(oracle::radical_size(*a2.c3), 1u);
  EXPECT_EQ(algebra_radical(*a2.c3).size(), 0u);
  EXPECT_EQ(oracle::radical_size(*a3.c3), 9u);
  EXPECT_EQ(algebra_radical(*a3.c3).size(), 2u);
  EXPECT_EQ(oracle::radical_size(*a2.c4), 8u);
  EXPECT_EQ(algebra_radical(*a2.c4).size(), 3u);
  auto s3 = group_algebra(builtin_group("s3"), a3.prime);
  EXPECT_EQ(algebra_radical(*s3).size(), 4u);
}

TEST(Radical, EndRingsAgainstEnumeration) {
  rt::Rng rng(33);
  rt::Algebras algs(make_field(2, 1));
  Field k = make_field(2, 2);
  int checked = 0;
  for (int t = 0; t < 40 && checked < 12; ++t) {
    ModuleRep m = rt::random_module(algs, rt::pick(rng, std::vector<rt::Family>{rt::Family::C2, rt::Family::C4}), k,
                                    1 + rt::uniform(rng, 3), rng);
    EndRing e = end_ring(m);
    if (e.dim() > 4) continue;
    ++checked;
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < e.radical_dim(); ++i) size *= k.order();
    EXPECT_EQ(oracle::radical_size(*e.as_algebra()), size);
  }
  EXPECT_GE(checked, 5);
}

TEST(Decompose, RegularGf2C3) {
  rt::Algebras algs(make_field(2, 1));
  DecompReport r = decompose(regular_module(algs.c3));
  ASSERT_EQ(r.summands.size(), 2u);
  EXPECT_EQ(r.summands[0].module.dim(), 1u);
  EXPECT_EQ(r.summands[1].module.dim(), 2u);
  EXPECT_TRUE(is_isomorphic(r.summands[0].module, trivial_c3(algs)).has_value());
  EXPECT_TRUE(is_isomorphic(r.summands[1].module, simple_c3(algs)).has_value());
  EXPECT_EQ(conjugate(r.module, r.basis_change), r.assembled());
}

TEST(Decompose, PowersAndZero) {
  rt::Algebras algs(make_field(3, 1));
  ModuleRep m = regular_module(algs.c3);
  DecompReport r = decompose(power(m, 2));
  ASSERT_EQ(r.summands.size(), 1u);
  EXPECT_EQ(r.summands[0].multiplicity, 2u);
  EXPECT_TRUE(decompose(zero_module(algs.c3, algs.prime)).summands.empty());
  DecompReport single = decompose(m);
  ASSERT_EQ(single.summands.size(), 1u);
  EXPECT_EQ(single.summands[0].multiplicity, 1u);
}

TEST(Decompose, RandomModulesReassemble) {
  rt::Rng rng(44);
  for (std::uint32_t p : {2u, 3u}) {
    rt::Algebras algs(make_field(p, 1));
    for (int t = 0; t < 30; ++t) {
      Field k = make_field(p, rt::pick(rng, std::vector<std::uint32_t>{1, 2, 3}));
      auto fam = rt::pick(rng, std::vector<rt::Family>{rt::Family::C2, rt::Family::C3, rt::Family::C4});
      ModuleRep m = rt::random_module(algs, fam, k, 1 + rt::uniform(rng, 6), rng);
      DecompReport r = decompose(m);
      EXPECT_EQ(conjugate(m, r.basis_change), r.assembled());
      for (const auto& s : r.summands) EXPECT_TRUE(is_indecomposable(s.module));
      for (std::size_t i = 0; i < r.summands.size(); ++i)
        for (std::size_t j = i + 1; j < r.summands.size(); ++j)
          EXPECT_FALSE(is_isomorphic(r.summands[i].module, r.summands[j].module).has_value());
    }
  }
}

TEST(Isomorphism, AgreesWithDeterminantOracle) {
  rt::Rng rng(55);
  std::size_t iso = 0, non = 0;
  for (std::uint32_t p : {2u, 3u}) {
    rt::Algebras algs(make_field(p, 1));
    Field k = make_field(p, 2);
    Field l = oracle::evaluation_field(k);
    for (int t = 0; t < 40; ++t) {
      auto fam = rt::pick(rng, std::vector<rt::Family>{rt::Family::C2, rt::Family::C3, rt::Family::C4});
      const std::size_t dim = 1 + rt::uniform(rng, 4);
      ModuleRep m = rt::random_module(algs, fam, k, dim, rng);
      ModuleRep n = t % 2 ? conjugate(m, rt::random_invertible(k, dim, rng)) : rt::random_module(algs, fam, k, dim, rng);
      auto w = is_isomorphic(m, n);
      EXPECT_EQ(w.has_value(), oracle::isomorphic_by_determinant(m, n, l, rng));
      if (w) {
        EXPECT_TRUE(verify_isomorphism(m, n, *w));
        EXPECT_TRUE(is_invertible(*w));
        ++iso;
      } else {
        ++non;
      }
    }
  }
  EXPECT_GT(iso, 0u);
  EXPECT_GT(non, 0u);
}

TEST(Isomorphism, SwappedSum) {
  rt::Algebras algs(make_field(2, 1));
  ModuleRep a = trivial_c3(algs), b = simple_c3(algs);
  EXPECT_TRUE(is_isomorphic(direct_sum(a, b), direct_sum(b, a)).has_value());
  EXPECT_FALSE(is_isomorphic(a, b).has_value());
}

TEST(Idempotents, QuaternionAlgebraSplits) {
  // over a finite field the quaternion algebra is Mat_2
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto q = rt::Algebras(make_field(p, 1)).quaternion;
    auto e = nontrivial_idempotent(*q);
    ASSERT_TRUE(e.has_value());
    EXPECT_EQ(q->multiply(*e, *e), *e);
    EXPECT_NE(*e, q->one());
    EXPECT_TRUE(std::any_of(e->begin(), e->end(), [](Elem x) { return x != 0; }));
    EXPECT_TRUE(algebra_radical(*q).empty());
  }
}
