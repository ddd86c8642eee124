#pragma once

// Seeded random fields, matrices and modules for the property suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "repdescend/group_rep.hpp"

namespace repdescend::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t n) { return rng() % n; }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, v.size())];
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (auto& x : m.data()) x = Elem(uniform(rng, f.order()));
  return m;
}

inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

inline Matrix companion(const Poly& g) {
  const Field& f = g.field();
  const std::size_t k = std::size_t(g.degree());
  Matrix c(f, k, k);
  for (std::size_t i = 1; i < k; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = f.neg(g.coeff(i));
  return c;
}

inline Matrix embed_matrix(const Matrix& a, const Field& target) {
  Embedding e(a.field(), target);
  Matrix out(target, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = e(a.data()[i]);
  return out;
}

/// Module of the cyclic group algebra whose generator acts by t (t^n = 1).
inline ModuleRep cyclic_module(const AlgebraPtr& alg, const Matrix& t) {
  const Field& k = t.field();
  std::vector<Matrix> act;
  Matrix cur = Matrix::identity(k, t.rows());
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    act.push_back(cur);
    cur = cur * t;
  }
  return ModuleRep(alg, k, t.rows(), std::move(act));
}

enum class Family { C2, C3, C4, Quaternion };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::C2: return "C2";
    case Family::C3: return "C3";
    case Family::C4: return "C4";
    case Family::Quaternion: return "Q";
  }
  return "?";
}

/// The algebras the suites draw from, built once per prime.
struct Algebras {
  Field prime;
  AlgebraPtr c2, c3, c4, quaternion;

  explicit Algebras(const Field& f) : prime(f.subfield(1)) {
    c2 = group_algebra(cyclic_group(2), prime);
    c3 = group_algebra(cyclic_group(3), prime);
    c4 = group_algebra(cyclic_group(4), prime);
    if (prime.characteristic() != 2) quaternion = quaternion_algebra(prime);
  }

  const AlgebraPtr& get(Family f) const {
    switch (f) {
      case Family::C2: return c2;
      case Family::C3: return c3;
      case Family::C4: return c4;
      case Family::Quaternion: return quaternion;
    }
    return c2;
  }
};

inline std::size_t group_order(Family f) {
  switch (f) {
    case Family::C2: return 2;
    case Family::C3: return 3;
    case Family::C4: return 4;
    default: return 0;
  }
}

/// Random module of dimension dim over k: blocks E[x]/(g^e) over random
/// subfields E, base-changed to k, sometimes paired with a Galois twist, then conjugated
/// by a random invertible matrix.
inline ModuleRep random_module(const Algebras& algs, Family family, const Field& k, std::size_t dim, Rng& rng) {
  const AlgebraPtr& alg = algs.get(family);
  if (family == Family::Quaternion) {
    auto [a, b] = sum_of_two_squares_minus_one(algs.prime);
    ModuleRep s = base_change(quaternion_module(alg, a, b), k);
    std::size_t copies = std::max<std::size_t>(1, dim / 2);
    return conjugate(power(s, copies), random_invertible(k, 2 * copies, rng));
  }
  const std::size_t n = group_order(family);
  const std::uint32_t deg = k.degree();
  std::vector<Matrix> blocks;
  std::size_t remaining = dim;
  while (remaining > 0) {
    const Field e = k.subfield(pick(rng, divisors(deg)));
    std::vector<Elem> xn(n + 1, 0);
    xn[0] = e.neg(1);
    xn[n] = 1;
    Poly target(e, xn);
    std::vector<Poly> options;
    for (auto& [g, mult] : factor(target)) {
      Poly pw = Poly::constant(e, 1);
      for (int r = 1; r <= mult; ++r) {
        pw = pw * g;
        if (std::size_t(pw.degree()) <= remaining) options.push_back(pw);
      }
    }
    if (options.empty()) continue;
    Matrix block = embed_matrix(companion(pick(rng, options)), k);
    remaining -= block.rows();
    if (uniform(rng, 3) == 0 && remaining >= block.rows()) {
      // pair the block with a Galois conjugate
      remaining -= block.rows();
      blocks.push_back(entrywise_frobenius(block, 1 + uniform(rng, deg)));
    }
    blocks.push_back(std::move(block));
  }
  Matrix t = block_diagonal(k, blocks);
  ModuleRep m = cyclic_module(alg, t);
  return conjugate(m, random_invertible(k, dim, rng));
}

}  // namespace repdescend::testing
