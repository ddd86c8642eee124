#include <gtest/gtest.h>

#include "repdescend/testing/oracle.hpp"

using namespace repdescend;
namespace rt = repdescend::testing;

TEST(Linalg, IdentityAndZero) {
  Field f = make_field(5, 1);
  Matrix id = Matrix::identity(f, 3);
  EXPECT_EQ(rref(id).form, id);
  EXPECT_EQ(rank(id), 3u);
  EXPECT_EQ(rank(Matrix(f, 3, 3)), 0u);
  EXPECT_EQ(kernel_basis(id).cols(), 0u);
  EXPECT_EQ(kernel_basis(Matrix(f, 3, 3)).cols(), 3u);
  EXPECT_EQ(*invert(id), id);
}

TEST(Linalg, RankOneOverGf4) {
  Field f = make_field(2, 2);
  const Elem w = f.generator(), w2 = f.mul(w, w);
  EXPECT_EQ(w2, f.add(w, 1));
  Matrix a(f, 2, 2, {1, w, w, w2});
  EXPECT_EQ(rank(a), 1u);
  Matrix k = kernel_basis(a);
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE((a * k).is_zero());
  EXPECT_FALSE(invert(a).has_value());
}

TEST(Linalg, SolveRight) {
  Field f = make_field(3, 2);
  rt::Rng rng(5);
  Matrix b = rt::random_matrix(f, 3, 2, rng);
  EXPECT_EQ(*solve_right(Matrix::identity(f, 3), b), b);
  EXPECT_FALSE(solve_right(Matrix(f, 3, 3), b).has_value() && !b.is_zero());
  for (int t = 0; t < 20; ++t) {
    Matrix a = rt::random_matrix(f, 4, 5, rng);
    Matrix x = rt::random_matrix(f, 5, 2, rng);
    auto sol = solve_right(a, a * x);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(a * *sol, a * x);
  }
}

TEST(Linalg, InverseAgreesWithDeterminant) {
  rt::Rng rng(9);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 3}, {3, 2}, {2, 11}}) {
    Field f = make_field(p, n);
    for (int t = 0; t < 30; ++t) {
      Matrix a = rt::random_matrix(f, 4, 4, rng);
      auto inv = invert(a);
      EXPECT_EQ(inv.has_value(), rt::oracle::det(a) != 0);
      if (inv) {
        EXPECT_TRUE((a * *inv).is_identity());
        EXPECT_TRUE((*inv * a).is_identity());
      }
    }
  }
  Matrix jordan(make_field(2, 1), 2, 2, {0, 1, 0, 0});
  EXPECT_FALSE(is_invertible(jordan));
}

TEST(Linalg, RankNullity) {
  Field f = make_field(2, 4);
  rt::Rng rng(2);
  for (int t = 0; t < 30; ++t) {
    Matrix a = rt::random_matrix(f, 1 + rt::uniform(rng, 5), 1 + rt::uniform(rng, 5), rng);
    if (t % 3 == 0) a = a * rt::random_matrix(f, a.cols(), 1, rng) * rt::random_matrix(f, 1, a.cols(), rng);
    Matrix k = kernel_basis(a);
    EXPECT_EQ(rank(a) + k.cols(), a.cols());
    EXPECT_TRUE((a * k).is_zero());
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Linalg, EntrywiseFrobenius) {
  Field f = make_field(2, 2);
  Matrix a(f, 1, 1, {f.generator()});
  EXPECT_EQ(entrywise_frobenius(a, 1)(0, 0), f.add(f.generator(), 1));
  EXPECT_EQ(entrywise_frobenius(a, 2), a);
  Matrix b(make_field(3, 1), 2, 2, {1, 2, 0, 1});
  EXPECT_EQ(entrywise_frobenius(b, 1), b);
}

TEST(Linalg, MatrixSpaceCoordinates) {
  Field f = make_field(3, 1);
  rt::Rng rng(4);
  std::vector<Matrix> span;
  for (int i = 0; i < 3; ++i) span.push_back(rt::random_matrix(f, 2, 3, rng));
  span.push_back(span[0] + span[1]);
  MatrixSpace s(f, 2, 3, span);
  EXPECT_EQ(s.dim(), rank([&] {
              Matrix stacked(f, span.size(), 6);
              for (std::size_t i = 0; i < span.size(); ++i)
                for (std::size_t j = 0; j < 6; ++j) stacked(i, j) = span[i].data()[j];
              return stacked;
            }()));
  for (const auto& m : span) {
    EXPECT_TRUE(s.contains(m));
    EXPECT_EQ(s.element(s.coords(m)), m);
  }
}

TEST(Linalg, IncrementalBasis) {
  Field f = make_field(2, 2);
  IncrementalBasis b(f, 3);
  EXPECT_TRUE(b.insert({1, 2, 0}));
  EXPECT_TRUE(b.insert({0, 1, 1}));
  EXPECT_FALSE(b.insert({1, 3, 1}));
  EXPECT_TRUE(b.contains({f.mul(2, 1), f.mul(2, 2), 0}));
  EXPECT_EQ(b.size(), 2u);
}
