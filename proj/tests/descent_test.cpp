#include <gtest/gtest.h>

#include "repdescend/testing/oracle.hpp"

using namespace repdescend;
namespace rt = repdescend::testing;
namespace oracle = repdescend::testing::oracle;

namespace {

struct Gf16Example {
  rt::Algebras algs{make_field(2, 1)};
  Field k = make_field(2, 4);
  Elem w = k.subfield_generator_image(2);
  ModuleRep m = rt::cyclic_module(algs.c3, Matrix(k, 1, 1, {w}));
  const Field& f2() const { return algs.prime; }
};

/// Exhaustive search: the 1-dim modules over E are the scalars c with c^3 = 1.
std::uint32_t least_field_with_scalar(const Field& k, Elem target) {
  for (std::uint32_t e : divisors(k.degree())) {
    Field sub = k.subfield(e);
    Embedding up(sub, k);
    for (Elem c = 1; c < sub.order(); ++c)
      if (sub.pow(c, 3) == 1 && up(c) == target) return e;
  }
  return 0;
}

}  // namespace

TEST(Twist, Gf16Example) {
  Gf16Example ex;
  ModuleRep t1 = twist(ex.m, 1, ex.f2());
  EXPECT_EQ(t1.action(1)(0, 0), ex.k.mul(ex.w, ex.w));
  EXPECT_EQ(twist(ex.m, 4, ex.f2()), ex.m);
  EXPECT_EQ(twist(ex.m, 2, ex.f2()), ex.m);
  TwistOrbit o = twist_stabilizer(ex.m, ex.f2());
  EXPECT_EQ(o.galois_order, 4u);
  EXPECT_EQ(o.stabilizer_index, 2u);
  EXPECT_EQ(o.orbit.size(), 2u);
}

TEST(Twist, GeneratingScalarHasFullOrbit) {
  rt::Algebras algs(make_field(3, 1));
  Field k = make_field(3, 2);
  // generator of C4 acting by a square root of -1, which generates GF(9)
  Elem i = 0;
  for (Elem c = 0; c < 9; ++c)
    if (k.mul(c, c) == k.neg(1)) i = c;
  ModuleRep m = rt::cyclic_module(algs.c4, Matrix(k, 1, 1, {i}));
  EXPECT_EQ(twist_stabilizer(m, algs.prime).stabilizer_index, 2u);
  ModuleRep rational = rt::cyclic_module(algs.c4, Matrix(k, 1, 1, {k.neg(1)}));
  EXPECT_EQ(twist_stabilizer(rational, algs.prime).stabilizer_index, 1u);
}

TEST(MinimalField, Gf16ExampleAgainstExhaustiveSearch) {
  Gf16Example ex;
  EXPECT_EQ(least_field_with_scalar(ex.k, ex.w), 2u);
  EXPECT_EQ(minimal_field(ex.m, ex.f2()).name(), "GF(4)");
  EXPECT_EQ(minimal_field(ex.m, ex.k.subfield(2)).name(), "GF(4)");
  EXPECT_EQ(minimal_field(ex.m, ex.k).name(), "GF(16)");
}

TEST(MinimalField, OrbitSumIsRational) {
  Gf16Example ex;
  ModuleRep sum = direct_sum(ex.m, twist(ex.m, 1, ex.f2()));
  EXPECT_EQ(minimal_field(sum, ex.f2()).name(), "GF(2)");
  DescentCertificate c = descend(sum, ex.f2(), {true});
  EXPECT_TRUE(c.verify());
  EXPECT_EQ(c.descended.dim(), 2u);
  EXPECT_TRUE(is_indecomposable(c.descended));
  ModuleRep simple = rt::cyclic_module(ex.algs.c3, Matrix(ex.algs.prime, 2, 2, {0, 1, 1, 1}));
  EXPECT_TRUE(is_isomorphic(c.descended, simple).has_value());
}

TEST(MinimalField, RationalModuleStaysPut) {
  rt::Algebras algs(make_field(2, 1));
  ModuleRep reg = regular_module(algs.c3);
  Field k = make_field(2, 6);
  EXPECT_EQ(minimal_field(base_change(reg, k), algs.prime).name(), "GF(2)");
  DescentCertificate c = descend(reg, algs.prime);
  EXPECT_EQ(c.descended, reg);
  EXPECT_TRUE(c.witness.is_identity());
}

TEST(MinimalField, AgreesWithOracleScan) {
  rt::Rng rng(77);
  for (std::uint32_t p : {2u, 3u}) {
    rt::Algebras algs(make_field(p, 1));
    for (std::uint32_t t : {2u, 4u}) {
      Field k = make_field(p, t);
      Field l = oracle::evaluation_field(k);
      for (int i = 0; i < 8; ++i) {
        auto fam = rt::pick(rng, std::vector<rt::Family>{rt::Family::C3, rt::Family::C4});
        ModuleRep m = rt::random_module(algs, fam, k, 1 + rt::uniform(rng, 4), rng);
        Field k0 = minimal_field(m, algs.prime);
        oracle::Scan scan = oracle::descent_scan(m, algs.prime, l, rng);
        ASSERT_TRUE(scan.least().has_value());
        EXPECT_EQ(*scan.least(), k0.degree());
        for (auto [e, ok] : scan.fields) EXPECT_EQ(ok, e % k0.degree() == 0);
      }
    }
  }
}

TEST(Descend, Gf16Example) {
  Gf16Example ex;
  DescentCertificate c = descend(ex.m, ex.f2(), {true});
  EXPECT_TRUE(c.verify());
  EXPECT_EQ(c.minimal_field.name(), "GF(4)");
  ASSERT_EQ(c.descended.dim(), 1u);
  EXPECT_EQ(Embedding(c.minimal_field, ex.k)(c.descended.action(1)(0, 0)), ex.w);
  EXPECT_EQ(c.ed, 0u);
}

TEST(Descend, RandomCertificatesVerify) {
  rt::Rng rng(88);
  for (std::uint32_t p : {2u, 3u}) {
    rt::Algebras algs(make_field(p, 1));
    for (int i = 0; i < 20; ++i) {
      Field k = make_field(p, rt::pick(rng, std::vector<std::uint32_t>{2, 3, 4, 6}));
      auto fam = rt::pick(rng, std::vector<rt::Family>{rt::Family::C2, rt::Family::C3, rt::Family::C4});
      ModuleRep m = rt::random_module(algs, fam, k, 1 + rt::uniform(rng, 4), rng);
      DecompReport d = decompose(m);
      DescentCertificate c = descend(m, algs.prime, {true});
      EXPECT_TRUE(c.verify());
      EXPECT_EQ(c.minimal_field, minimal_field(m, algs.prime));
      EXPECT_EQ(c.descended.dim(), m.dim());
    }
  }
}

TEST(Descend, TamperedWitnessFails) {
  Gf16Example ex;
  DescentCertificate c = descend(ex.m, ex.f2());
  c.witness(0, 0) = 0;
  EXPECT_FALSE(c.verify());
}

TEST(Descend, RejectsAlgebraNotOverF) {
  Field e = make_field(2, 2), k = make_field(2, 4);
  // GF(4)[x]/(x^2 - w)
  std::vector<Elem> s(8, 0);
  s[(0 * 2 + 0) * 2 + 0] = s[(0 * 2 + 1) * 2 + 1] = s[(1 * 2 + 0) * 2 + 1] = 1;
  s[(1 * 2 + 1) * 2 + 0] = e.generator();
  auto alg = std::make_shared<const Algebra>(e, 2, s, std::vector<Elem>{1, 0});
  ModuleRep m = regular_module(alg);
  try {
    minimal_field(base_change(m, k), k.subfield(1));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::AlgebraNotDefinedOverF);
  }
  EXPECT_EQ(minimal_field(base_change(m, k), k.subfield(2)).name(), "GF(4)");
}

TEST(PowerCheck, Gf16Example) {
  Gf16Example ex;
  EXPECT_EQ(power_descent_check(ex.m, 3, ex.k.subfield(2)), std::make_pair(true, true));
  EXPECT_EQ(power_descent_check(ex.m, 3, ex.f2()), std::make_pair(false, false));
  EXPECT_EQ(power_descent_check(ex.m, 2, ex.k), std::make_pair(true, true));
}

TEST(EssentialDimension, AlwaysZero) {
  Gf16Example ex;
  EdReport r = ed_report(ex.m, ex.f2());
  EXPECT_EQ(r.ed, 0u);
  EXPECT_EQ(r.minimal_field.name(), "GF(4)");
  rt::Algebras algs(make_field(3, 1));
  EXPECT_EQ(ed_report(regular_module(algs.c4), algs.prime).minimal_field.name(), "GF(3)");
}

TEST(FForm, Gf16Example) {
  Gf16Example ex;
  FForm form = find_f_form(ex.m, ex.f2());
  EXPECT_EQ(form.form.dim(), 2u);
  EXPECT_TRUE(is_indecomposable(form.form));
  EXPECT_TRUE((form.projection * form.injection).is_identity());
  ModuleRep up = base_change(form.form, ex.k);
  EXPECT_TRUE(is_isomorphic(up, direct_sum(ex.m, twist(ex.m, 1, ex.f2()))).has_value());
}

TEST(FForm, DimensionBound) {
  rt::Rng rng(99);
  rt::Algebras algs(make_field(2, 1));
  Field k = make_field(2, 4);
  for (int i = 0; i < 10; ++i) {
    ModuleRep m = rt::random_module(algs, rt::Family::C3, k, 1 + rt::uniform(rng, 3), rng);
    for (const auto& s : decompose(m).summands) {
      FForm f = find_f_form(s.module, algs.prime);
      EXPECT_LE(f.form.dim(), s.module.dim() * 4);
      EXPECT_TRUE((f.projection * f.injection).is_identity());
    }
  }
}
