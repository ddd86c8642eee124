#pragma once

// Reference implementations that avoid the decomposition engine: exhaustive
// searches and a randomized determinant test for twist stability.

#include <optional>
#include <vector>

#include "repdescend/testing/random.hpp"

namespace repdescend::testing::oracle {

/// Determinant by plain elimination with row swaps.
inline Elem det(Matrix a) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Elem d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && a(r, c) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, a(c, c));
    const Elem inv = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Elem factor = f.mul(a(i, c), inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
    }
  }
  return d;
}

/// Intertwiners for every algebra basis element at once (no generator reduction).
inline std::vector<Matrix> naive_hom(const ModuleRep& m, const ModuleRep& n) {
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), u = dm * dn, rel = m.action().size();
  if (u == 0) return {};
  Matrix sys(f, rel * u, u);
  for (std::size_t b = 0; b < rel; ++b) {
    const Matrix& a = m.action(b);
    const Matrix& c = n.action(b);
    // (X a - c X)[i][k]
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t k = 0; k < dm; ++k) {
        const std::size_t row = b * u + i * dm + k;
        for (std::size_t j = 0; j < dm; ++j) sys(row, i * dm + j) = f.add(sys(row, i * dm + j), a(j, k));
        for (std::size_t l = 0; l < dn; ++l) sys(row, l * dm + k) = f.sub(sys(row, l * dm + k), c(i, l));
      }
  }
  Matrix ker = kernel_basis(sys);
  std::vector<Matrix> out;
  for (std::size_t col = 0; col < ker.cols(); ++col) {
    Matrix x(f, dn, dm);
    for (std::size_t r = 0; r < u; ++r) x.data()[r] = ker(r, col);
    out.push_back(std::move(x));
  }
  return out;
}

inline ModuleRep frobenius_twist(const ModuleRep& m, std::uint32_t absolute) {
  std::vector<Matrix> act;
  for (const auto& a : m.action()) {
    Matrix b = a;
    for (auto& x : b.data()) x = m.field().frobenius(x, absolute);
    act.push_back(std::move(b));
  }
  return ModuleRep(m.algebra(), m.field(), m.dim(), std::move(act));
}

/// Whether m and n are isomorphic, decided by det of random combinations of
/// Hom(m, n) evaluated in the larger field l (a nonzero polynomial of degree
/// <= dim rarely vanishes at a random point of l).
inline bool isomorphic_by_determinant(const ModuleRep& m, const ModuleRep& n, const Field& l, Rng& rng, int trials = 4) {
  if (m.dim() != n.dim()) return false;
  if (m.dim() == 0) return true;
  auto hom = naive_hom(m, n);
  if (hom.empty()) return false;
  Embedding up(m.field(), l);
  std::vector<Matrix> lifted;
  for (const auto& x : hom) {
    Matrix y(l, x.rows(), x.cols());
    for (std::size_t i = 0; i < x.data().size(); ++i) y.data()[i] = up(x.data()[i]);
    lifted.push_back(std::move(y));
  }
  for (int t = 0; t < trials; ++t) {
    Matrix s(l, m.dim(), m.dim());
    for (const auto& y : lifted) l.axpy(s.data(), Elem(uniform(rng, l.order())), y.data());
    if (det(s) != 0) return true;
  }
  return false;
}

/// Exhaustive test for 1-dimensional modules: every action scalar must have a
/// preimage in the degree-e subfield.
inline bool one_dim_descends(const ModuleRep& m, std::uint32_t e) {
  const Field& k = m.field();
  Field sub = k.subfield(e);
  Embedding emb(sub, k);
  for (const auto& a : m.action()) {
    bool found = false;
    for (Elem c = 0; c < sub.order() && !found; ++c) found = emb(c) == a(0, 0);
    if (!found) return false;
  }
  return true;
}

/// Smallest extension degree of k with at least 4096 elements.
inline Field evaluation_field(const Field& k) {
  std::uint32_t deg = k.degree();
  std::uint64_t q = k.order();
  while (q < 4096) {
    deg += k.degree();
    q *= k.order();
  }
  return make_field(k.characteristic(), deg, kHardSizeBound);
}

struct Scan {
  /// (degree over GF(p) of an intermediate field, descent found there).
  std::vector<std::pair<std::uint32_t, bool>> fields;

  std::optional<std::uint32_t> least() const {
    for (auto& [d, ok] : fields)
      if (ok) return d;
    return std::nullopt;
  }
};

/// For every F <= E <= K: does m descend to E? 1-dimensional modules are
/// settled exhaustively, others by twist stability at E.
inline Scan descent_scan(const ModuleRep& m, const Field& f, const Field& l, Rng& rng) {
  const Field& k = m.field();
  Scan out;
  const std::uint32_t t = k.degree() / f.degree();
  for (std::uint32_t s : divisors(t)) {
    const std::uint32_t e = f.degree() * s;
    bool ok;
    if (m.dim() == 1) {
      ok = one_dim_descends(m, e);
    } else {
      ok = isomorphic_by_determinant(m, frobenius_twist(m, e), l, rng);
    }
    out.fields.emplace_back(e, ok);
  }
  return out;
}

inline bool nilpotent(const Algebra& a, std::vector<Elem> z) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::all_of(z.begin(), z.end(), [](Elem e) { return e == 0; })) return true;
    z = a.multiply(z, z);
  }
  return std::all_of(z.begin(), z.end(), [](Elem e) { return e == 0; });
}

inline std::vector<Elem> unpack_index(std::uint64_t idx, std::size_t dim, std::uint64_t q) {
  std::vector<Elem> v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = Elem(idx % q);
    idx /= q;
  }
  return v;
}

/// Size of the radical by enumeration: z is in J iff a z is nilpotent for all a.
inline std::uint64_t radical_size(const Algebra& a) {
  const std::uint64_t q = a.base_field().order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) total *= q;
  std::uint64_t count = 0;
  for (std::uint64_t zi = 0; zi < total; ++zi) {
    auto z = unpack_index(zi, a.dim(), q);
    bool in = true;
    for (std::uint64_t ai = 0; ai < total && in; ++ai) in = nilpotent(a, a.multiply(unpack_index(ai, a.dim(), q), z));
    if (in) ++count;
  }
  return count;
}

}  // namespace repdescend::testing::oracle
