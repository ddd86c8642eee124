#pragma once

// Hom spaces, endomorphism rings and their radicals, idempotent splitting,
// Krull-Schmidt decomposition and isomorphism testing.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "repdescend/algebra.hpp"
#include "repdescend/poly.hpp"

namespace repdescend {

using Vec = std::vector<Elem>;

struct HomSpace {
  ModuleRep source, target;
  /// Each X satisfies X * source.action(b) = target.action(b) * X.
  std::vector<Matrix> basis;

  std::size_t dim() const { return basis.size(); }
};

/// All intertwiners source -> target, as an echelonized basis.
inline HomSpace hom_space(const ModuleRep& m, const ModuleRep& n) {
  require_compatible(m, n);
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim(), u = dm * dn;
  HomSpace out{m, n, {}};
  if (u == 0) return out;
  const auto& gens = m.algebra()->generators();

  // current solution space, as a u x s matrix of flattened X
  Matrix sol;
  bool first = true;
  for (std::size_t g : gens) {
    const Matrix& a = m.action(g);
    const Matrix& b = n.action(g);
    if (first) {
      // column (i*dm + j) is E_ij A - B E_ij
      Matrix t(f, u, u);
      for (std::size_t i = 0; i < dn; ++i) {
        for (std::size_t j = 0; j < dm; ++j) {
          const std::size_t c = i * dm + j;
          for (std::size_t k = 0; k < dm; ++k) t(i * dm + k, c) = f.add(t(i * dm + k, c), a(j, k));
          for (std::size_t l = 0; l < dn; ++l) t(l * dm + j, c) = f.sub(t(l * dm + j, c), b(l, i));
        }
      }
      sol = kernel_basis(t);
      first = false;
    } else {
      Matrix t(f, u, sol.cols());
      for (std::size_t c = 0; c < sol.cols(); ++c) {
        Matrix x(f, dn, dm);
        for (std::size_t r = 0; r < u; ++r) x.data()[r] = sol(r, c);
        Matrix d = x * a - b * x;
        for (std::size_t r = 0; r < u; ++r) t(r, c) = d.data()[r];
      }
      sol = sol * kernel_basis(t);
    }
    if (sol.cols() == 0) return out;
  }
  std::vector<Matrix> spanning;
  if (first) {
    for (std::size_t r = 0; r < u; ++r) {
      Matrix x(f, dn, dm);
      x.data()[r] = 1;
      spanning.push_back(std::move(x));
    }
  } else {
    for (std::size_t c = 0; c < sol.cols(); ++c) {
      Matrix x(f, dn, dm);
      for (std::size_t r = 0; r < u; ++r) x.data()[r] = sol(r, c);
      spanning.push_back(std::move(x));
    }
  }
  out.basis = MatrixSpace(f, dn, dm, spanning).basis();
  return out;
}

namespace detail {

inline Vec zero_vec(std::size_t n) { return Vec(n, 0); }

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

/// Least monic f with f(z) = 0, where powers of z are produced by `times_z`
/// starting from `one` (vectors of a common length).
template <class TimesZ>
Poly minimal_polynomial(const Field& f, const Vec& one, TimesZ times_z) {
  std::vector<Vec> powers{one};
  while (true) {
    Vec next = times_z(powers.back());
    Matrix cols(f, next.size(), powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j)
      for (std::size_t i = 0; i < next.size(); ++i) cols(i, j) = powers[j][i];
    Matrix rhs(f, next.size(), 1, next);
    if (auto c = solve_right(cols, rhs)) {
      Vec coeffs(powers.size() + 1, 0);
      for (std::size_t j = 0; j < powers.size(); ++j) coeffs[j] = f.neg((*c)(j, 0));
      coeffs.back() = 1;
      return Poly(f, coeffs);
    }
    powers.push_back(std::move(next));
  }
}

inline Poly minimal_polynomial(const Algebra& a, const Vec& z) {
  return minimal_polynomial(a.base_field(), a.one(), [&](const Vec& v) { return a.multiply(v, z); });
}

inline Poly minimal_polynomial(const Matrix& z) {
  Matrix id = Matrix::identity(z.field(), z.rows());
  return minimal_polynomial(z.field(), id.data(), [&](const Vec& v) {
    return (Matrix(z.field(), z.rows(), z.cols(), v) * z).data();
  });
}

inline Vec evaluate(const Algebra& a, const Poly& p, const Vec& z) {
  const Field& f = a.base_field();
  Vec acc = zero_vec(a.dim());
  for (int k = p.degree(); k >= 0; --k) {
    acc = a.multiply(acc, z);
    f.axpy(acc, p.coeff(std::size_t(k)), a.one());
  }
  return acc;
}

inline Matrix evaluate(const Poly& p, const Matrix& z) {
  const Field& f = z.field();
  Matrix acc(f, z.rows(), z.cols());
  Matrix id = Matrix::identity(f, z.rows());
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * z;
    f.axpy(acc.data(), p.coeff(std::size_t(k)), id.data());
  }
  return acc;
}

inline Vec power(const Algebra& a, Vec x, std::uint64_t e) {
  Vec r = a.one();
  while (e > 0) {
    if (e & 1) r = a.multiply(r, x);
    e >>= 1;
    if (e) x = a.multiply(x, x);
  }
  return r;
}

/// For f = g^a h with g the first irreducible factor, the polynomial that
/// is 0 mod g^a and 1 mod h; nullopt when f is a prime power.
inline std::optional<Poly> crt_selector(const Poly& f) {
  auto fac = factor(f);
  if (fac.size() < 2) return std::nullopt;
  Poly ga = Poly::constant(f.field(), 1);
  for (int i = 0; i < fac[0].second; ++i) ga = ga * fac[0].first;
  Poly h = f / ga;
  auto [g, u, v] = ext_gcd(ga, h);
  ensure(g.degree() == 0, ErrorKind::InternalInvariantViolation, "coprime factors have a common divisor");
  return (u * ga) % f;
}

/// Basis of the center of a.
inline std::vector<Vec> center_basis(const Algebra& a) {
  const std::size_t m = a.dim();
  const Field& f = a.base_field();
  // rows (j, k): coefficient of b_k in z b_j - b_j z
  Matrix sys(f, m * m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) sys(j * m + k, i) = f.sub(a.constant(i, j, k), a.constant(j, i, k));
  Matrix ker = kernel_basis(sys);
  std::vector<Vec> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Vec v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = ker(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

/// {z in span(sub) : z^q = z} for a commutative subalgebra spanned by sub.
inline std::vector<Vec> frobenius_fixed(const Algebra& a, const std::vector<Vec>& sub) {
  const Field& f = a.base_field();
  const std::size_t m = a.dim();
  Matrix sys(f, m, sub.size());
  for (std::size_t c = 0; c < sub.size(); ++c) {
    Vec img = power(a, sub[c], f.order());
    for (std::size_t i = 0; i < m; ++i) sys(i, c) = f.sub(img[i], sub[c][i]);
  }
  Matrix ker = kernel_basis(sys);
  std::vector<Vec> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Vec v = zero_vec(m);
    for (std::size_t j = 0; j < sub.size(); ++j) f.axpy(v, ker(j, c), sub[j]);
    out.push_back(std::move(v));
  }
  return out;
}

inline bool is_scalar(const Algebra& a, const Vec& z) {
  IncrementalBasis b(a.base_field(), a.dim());
  b.insert(a.one());
  return b.contains(z);
}

/// An idempotent e of w x w = w type: w must be a nonzero non-unit of a
/// semisimple algebra.
inline Vec regular_idempotent(const Algebra& a, const Vec& w) {
  const std::size_t m = a.dim();
  const Field& f = a.base_field();
  Matrix sys(f, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec img = a.multiply(a.multiply(w, a.basis_vector(j)), w);
    for (std::size_t i = 0; i < m; ++i) sys(i, j) = img[i];
  }
  auto x = solve_right(sys, Matrix(f, m, 1, w));
  ensure(x.has_value(), ErrorKind::InternalInvariantViolation, "quotient algebra is not von Neumann regular");
  Vec xv(m);
  for (std::size_t i = 0; i < m; ++i) xv[i] = (*x)(i, 0);
  return a.multiply(xv, w);
}

}  // namespace detail

/// A nontrivial idempotent of a semisimple algebra, or nullopt when it is a
/// field. Noncommutative division algebras cannot occur over finite fields.
inline std::optional<Vec> nontrivial_idempotent(const Algebra& q) {
  if (q.dim() <= 1) return std::nullopt;
  const bool commutative = q.is_commutative();
  std::vector<Vec> z;
  if (commutative) {
    for (std::size_t i = 0; i < q.dim(); ++i) z.push_back(q.basis_vector(i));
  } else {
    z = detail::center_basis(q);
  }
  auto fixed = detail::frobenius_fixed(q, z);
  if (fixed.size() > 1) {
    for (const auto& b : fixed) {
      if (detail::is_scalar(q, b)) continue;
      auto sel = detail::crt_selector(detail::minimal_polynomial(q, b));
      ensure(sel.has_value(), ErrorKind::InternalInvariantViolation, "Frobenius-fixed element with primary minimal polynomial");
      return detail::evaluate(q, *sel, b);
    }
  }
  if (commutative) return std::nullopt;

  // simple, so a full matrix algebra of degree >= 2 over its center
  auto attempt = [&](const Vec& z) -> std::optional<Vec> {
    Poly f = detail::minimal_polynomial(q, z);
    if (auto sel = detail::crt_selector(f)) return detail::evaluate(q, *sel, z);
    auto fac = factor(f);
    if (fac.size() == 1 && fac[0].second >= 2) return detail::regular_idempotent(q, detail::evaluate(q, fac[0].first, z));
    return std::nullopt;
  };
  const std::size_t m = q.dim();
  for (std::size_t i = 0; i < m; ++i)
    if (auto e = attempt(q.basis_vector(i))) return e;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec z = q.basis_vector(i);
      z[j] = 1;
      if (auto e = attempt(z)) return e;
    }
  }
  std::mt19937_64 rng(0x5eedULL);
  const Field& f = q.base_field();
  for (int trial = 0; trial < 4096; ++trial) {
    Vec z(m);
    for (auto& x : z) x = static_cast<Elem>(rng() % f.order());
    if (auto e = attempt(z)) return e;
  }
  fail(ErrorKind::InternalInvariantViolation, "no idempotent found in a noncommutative simple algebra");
}

namespace detail {

// Tr(a^(p^i)) over Z/p^(i+1) for an integer lift of a, divided by p^i.
inline Elem trace_form_value(const Matrix& a, std::uint32_t p, unsigned i) {
  const std::size_t n = a.rows();
  std::uint64_t mod = p, pi = 1;
  for (unsigned k = 0; k < i; ++k) {
    mod *= p;
    pi *= p;
  }
  std::vector<std::uint64_t> cur(a.data().begin(), a.data().end()), tmp(n * n);
  auto mul = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
    std::fill(tmp.begin(), tmp.end(), 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t v = x[r * n + k];
        if (v == 0) continue;
        for (std::size_t c = 0; c < n; ++c) tmp[r * n + c] = (tmp[r * n + c] + v * y[k * n + c]) % mod;
      }
    return tmp;
  };
  for (unsigned k = 0; k < i; ++k) {
    // cur <- cur^p
    std::vector<std::uint64_t> base = cur, acc;
    bool have = false;
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1) {
        acc = have ? mul(acc, base) : base;
        have = true;
      }
      if (e > 1) base = mul(base, base);
    }
    cur = acc;
  }
  std::uint64_t tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + cur[r * n + r]) % mod;
  ensure(tr % pi == 0, ErrorKind::InternalInvariantViolation, "trace form value not divisible");
  return static_cast<Elem>(tr / pi);
}

}  // namespace detail

/// Jacobson radical of the K-algebra spanned by the given d x d matrices over K
/// (closed under multiplication and containing the identity), as a K-space.
inline MatrixSpace matrix_algebra_radical(const Field& k, std::size_t d, const std::vector<Matrix>& basis) {
  const Field prime = k.subfield(1);
  const std::uint32_t p = k.characteristic();
  const std::size_t n = k.degree(), big = d * n;
  if (basis.empty() || d == 0) return MatrixSpace(k, d, d, {});
  RelativeBasis rb(prime, k);
  std::vector<Matrix> over_prime;
  for (const auto& b : basis) {
    Elem w = 1;
    for (std::size_t j = 0; j < n; ++j) {
      over_prime.push_back(restrict_matrix(b.scaled(w), rb));
      w = k.mul(w, k.generator());
    }
  }
  MatrixSpace full(prime, big, big, over_prime);
  MatrixSpace cur = full;
  unsigned l = 0;
  for (std::size_t t = p; t <= big; t *= p) ++l;
  for (unsigned i = 0; i <= l && cur.dim() > 0; ++i) {
    Matrix lm(prime, big, big);
    for (std::size_t c = 0; c < cur.dim(); ++c) {
      const std::size_t piv = cur.pivots()[c];
      lm(piv % big, piv / big) = detail::trace_form_value(cur.basis()[c], p, i);
    }
    Matrix form(prime, full.dim(), cur.dim());
    for (std::size_t c = 0; c < cur.dim(); ++c) {
      Matrix w = lm * cur.basis()[c];
      for (std::size_t r = 0; r < full.dim(); ++r) {
        const Matrix& b = full.basis()[r];
        std::uint64_t acc = 0;
        for (std::size_t x = 0; x < big; ++x)
          for (std::size_t y = 0; y < big; ++y) acc += std::uint64_t(w(x, y)) * b(y, x);
        form(r, c) = static_cast<Elem>(acc % p);
      }
    }
    Matrix ker = kernel_basis(form);
    std::vector<Matrix> next;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      Matrix x(prime, big, big);
      for (std::size_t j = 0; j < cur.dim(); ++j) prime.axpy(x.data(), ker(j, c), cur.basis()[j].data());
      next.push_back(std::move(x));
    }
    cur = MatrixSpace(prime, big, big, next);
  }
  std::vector<Matrix> back;
  for (const auto& x : cur.basis()) back.push_back(unrestrict_matrix(x, rb));
  MatrixSpace out(k, d, d, back);
  ensure(out.dim() * n == cur.dim(), ErrorKind::InternalInvariantViolation, "radical is not a subspace over the module field");
  return out;
}

/// Radical of an abstract algebra, via its left regular representation.
inline std::vector<Vec> algebra_radical(const Algebra& a) {
  std::vector<Matrix> regular;
  for (std::size_t i = 0; i < a.dim(); ++i) regular.push_back(a.left_multiplication(a.basis_vector(i)));
  MatrixSpace j = matrix_algebra_radical(a.base_field(), a.dim(), regular);
  // the regular representation is faithful; read coordinates off the image of one
  std::vector<Vec> out;
  Matrix one_col(a.base_field(), a.dim(), 1, a.one());
  for (const auto& x : j.basis()) out.push_back((x * one_col).data());
  return out;
}

namespace detail {

// Coordinates modulo a subspace J with respect to representatives c_1..c_s.
class CosetCoordinates {
 public:
  CosetCoordinates(const Field& f, const std::vector<Matrix>& reps, const std::vector<Matrix>& ideal)
      : s_(reps.size()) {
    const std::size_t total = reps.size() + ideal.size();
    if (total == 0) return;
    const std::size_t len = reps.empty() ? ideal[0].data().size() : reps[0].data().size();
    Matrix stacked(f, total, len);
    for (std::size_t r = 0; r < total; ++r) {
      const auto& d = r < s_ ? reps[r].data() : ideal[r - s_].data();
      std::copy(d.begin(), d.end(), stacked.row(r).begin());
    }
    positions_ = rref(stacked).pivots;
    Matrix square(f, total, total);
    for (std::size_t i = 0; i < total; ++i)
      for (std::size_t r = 0; r < total; ++r) square(i, r) = stacked(r, positions_[i]);
    auto inv = invert(square);
    ensure(inv.has_value(), ErrorKind::InternalInvariantViolation, "coset representatives are dependent");
    inverse_ = std::move(*inv);
  }

  Vec operator()(const Matrix& x) const {
    const Field& f = x.field();
    Vec out(s_, 0);
    for (std::size_t r = 0; r < s_; ++r) {
      Elem acc = 0;
      for (std::size_t i = 0; i < positions_.size(); ++i) acc = f.add(acc, f.mul(inverse_(r, i), x.data()[positions_[i]]));
      out[r] = acc;
    }
    return out;
  }

 private:
  std::size_t s_;
  std::vector<std::size_t> positions_;
  Matrix inverse_;
};

}  // namespace detail

struct SemisimpleQuotient {
  /// End / J over the module field.
  AlgebraPtr algebra;
  /// Endomorphisms lifting the quotient basis.
  std::vector<Matrix> lifts;
};

class EndRing {
 public:
  EndRing(ModuleRep m, std::vector<Matrix> basis, MatrixSpace radical, SemisimpleQuotient quotient)
      : module_(std::move(m)), basis_(std::move(basis)), radical_(std::move(radical)), quotient_(std::move(quotient)) {}

  const ModuleRep& module() const { return module_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const MatrixSpace& radical() const { return radical_; }
  const std::vector<Matrix>& radical_basis() const { return radical_.basis(); }
  std::size_t radical_dim() const { return radical_.dim(); }
  const SemisimpleQuotient& quotient() const { return quotient_; }

  /// Structure constants of End under composition, in basis().
  AlgebraPtr as_algebra() const {
    const Field& f = module_.field();
    const std::size_t e = basis_.size();
    MatrixSpace space(f, module_.dim(), module_.dim(), basis_);
    // basis_ is already echelonized, so coordinates are pivot entries
    std::vector<Elem> s(e * e * e, 0);
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = 0; j < e; ++j) {
        auto c = space.coords(basis_[i] * basis_[j]);
        std::copy(c.begin(), c.end(), s.begin() + (i * e + j) * e);
      }
    return std::make_shared<const Algebra>(f, e, std::move(s),
                                           space.coords(Matrix::identity(f, module_.dim())), false);
  }

 private:
  ModuleRep module_;
  std::vector<Matrix> basis_;
  MatrixSpace radical_;
  SemisimpleQuotient quotient_;
};

namespace detail {

inline EndRing build_end_ring(const ModuleRep& m, std::vector<Matrix> basis) {
  const Field& f = m.field();
  const std::size_t d = m.dim();
  MatrixSpace radical = matrix_algebra_radical(f, d, basis);
  IncrementalBasis span(f, d * d);
  for (const auto& x : radical.basis()) span.insert(x.data());
  std::vector<Matrix> lifts;
  for (const auto& b : basis)
    if (span.insert(b.data())) lifts.push_back(b);
  CosetCoordinates coords(f, lifts, radical.basis());
  const std::size_t s = lifts.size();
  std::vector<Elem> structure(s * s * s, 0);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      Vec c = coords(lifts[i] * lifts[j]);
      std::copy(c.begin(), c.end(), structure.begin() + (i * s + j) * s);
    }
  Vec one = coords(Matrix::identity(f, d));
  auto q = std::make_shared<const Algebra>(f, s, std::move(structure), std::move(one), false);
  return EndRing(m, std::move(basis), std::move(radical), SemisimpleQuotient{std::move(q), std::move(lifts)});
}

}  // namespace detail

inline EndRing end_ring(const ModuleRep& m) { return detail::build_end_ring(m, hom_space(m, m).basis); }

inline bool is_indecomposable(const ModuleRep& m) {
  ensure(m.dim() > 0, ErrorKind::ZeroModule, "the zero module has no indecomposability verdict");
  EndRing e = end_ring(m);
  return !nontrivial_idempotent(*e.quotient().algebra).has_value();
}

namespace detail {

/// Idempotent e = e^2 lifted from an approximate one (e^2 - e nilpotent).
inline Matrix lift_idempotent(Matrix e) {
  const Field& f = e.field();
  const Elem three = f.from_int(3), two = f.from_int(2);
  for (int iter = 0; iter < 64; ++iter) {
    Matrix sq = e * e;
    if (sq == e) return e;
    e = sq.scaled(three) - (sq * e).scaled(two);
  }
  fail(ErrorKind::InternalInvariantViolation, "idempotent lifting did not converge");
}

/// A nontrivial idempotent endomorphism, or nullopt when m is indecomposable.
inline std::optional<Matrix> splitting_idempotent(const ModuleRep& m) {
  auto basis = hom_space(m, m).basis;
  if (basis.size() <= 1) return std::nullopt;
  // primary decomposition of single endomorphisms
  for (const auto& theta : basis) {
    if (auto sel = crt_selector(minimal_polynomial(theta))) return evaluate(*sel, theta);
  }
  EndRing ring = build_end_ring(m, std::move(basis));
  auto eps = nontrivial_idempotent(*ring.quotient().algebra);
  if (!eps) return std::nullopt;
  const Field& f = m.field();
  Matrix e(f, m.dim(), m.dim());
  for (std::size_t i = 0; i < eps->size(); ++i) f.axpy(e.data(), (*eps)[i], ring.quotient().lifts[i].data());
  return lift_idempotent(std::move(e));
}

struct Piece {
  ModuleRep module;
  /// Columns span the summand: action * embed = embed * module.action.
  Matrix embed;
};

inline ModuleRep diagonal_block(const ModuleRep& m, std::size_t start, std::size_t size) {
  std::vector<Matrix> act;
  for (const auto& a : m.action()) act.push_back(a.block(start, start, size, size));
  return ModuleRep(m.algebra(), m.field(), size, std::move(act));
}

inline void split_into(const ModuleRep& m, const Matrix& embed, std::vector<Piece>& out) {
  if (m.dim() == 0) return;
  auto e = splitting_idempotent(m);
  if (!e) {
    out.push_back({m, embed});
    return;
  }
  const Field& f = m.field();
  Matrix u = column_space_basis(*e);
  Matrix v = column_space_basis(Matrix::identity(f, m.dim()) - *e);
  Matrix c = hconcat(f, m.dim(), {u, v});
  auto c_inv = invert(c);
  ensure(c_inv.has_value(), ErrorKind::InternalInvariantViolation, "idempotent images do not span the module");
  ModuleRep conj = conjugate_with_inverse(m, *c_inv, c);
  split_into(diagonal_block(conj, 0, u.cols()), embed * u, out);
  split_into(diagonal_block(conj, u.cols(), v.cols()), embed * v, out);
}

inline bool action_less(const ModuleRep& a, const ModuleRep& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.action().size(); ++i) {
    const auto& x = a.action(i).data();
    const auto& y = b.action(i).data();
    if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return false;
}

}  // namespace detail

/// For indecomposable a, b: some X with conjugate(a, X) = b, or nullopt.
inline std::optional<Matrix> indecomposable_isomorphism(const ModuleRep& a, const ModuleRep& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  for (const auto& x : hom_space(a, b).basis)
    if (is_invertible(x)) return x;
  return std::nullopt;
}

struct Summand {
  ModuleRep module;
  std::size_t multiplicity = 0;
};

struct DecompReport {
  ModuleRep module;
  std::vector<Summand> summands;
  /// conjugate(module, basis_change) equals assembled() exactly.
  Matrix basis_change;

  ModuleRep assembled() const {
    ModuleRep out = zero_module(module.algebra(), module.field());
    for (const auto& s : summands) out = direct_sum(out, power(s.module, s.multiplicity));
    return out;
  }

  std::size_t summand_count() const {
    std::size_t n = 0;
    for (const auto& s : summands) n += s.multiplicity;
    return n;
  }
};

inline DecompReport decompose(const ModuleRep& m) {
  const Field& f = m.field();
  DecompReport report{m, {}, Matrix::identity(f, m.dim())};
  if (m.dim() == 0) return report;
  std::vector<detail::Piece> pieces;
  detail::split_into(m, Matrix::identity(f, m.dim()), pieces);

  struct Class {
    ModuleRep rep;
    std::vector<Matrix> embeds;
  };
  std::vector<Class> classes;
  for (auto& piece : pieces) {
    bool placed = false;
    for (auto& cls : classes) {
      auto x = indecomposable_isomorphism(piece.module, cls.rep);
      if (!x) continue;
      auto x_inv = invert(*x);
      cls.embeds.push_back(piece.embed * *x_inv);
      placed = true;
      break;
    }
    if (!placed) classes.push_back({piece.module, {piece.embed}});
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const Class& a, const Class& b) { return detail::action_less(a.rep, b.rep); });
  std::vector<Matrix> columns;
  for (auto& cls : classes) {
    report.summands.push_back({cls.rep, cls.embeds.size()});
    for (auto& e : cls.embeds) columns.push_back(std::move(e));
  }
  Matrix c = hconcat(f, m.dim(), columns);
  auto p = invert(c);
  ensure(p.has_value(), ErrorKind::InternalInvariantViolation, "summands do not span the module");
  report.basis_change = std::move(*p);
  ensure(conjugate_with_inverse(m, report.basis_change, c) == report.assembled(), ErrorKind::InternalInvariantViolation,
         "decomposition basis change does not block-diagonalize");
  return report;
}

/// Some P with conjugate(m, P) = n exactly, or nullopt when not isomorphic.
inline std::optional<Matrix> is_isomorphic(const ModuleRep& m, const ModuleRep& n) {
  require_compatible(m, n);
  if (m.dim() != n.dim()) return std::nullopt;
  const Field& f = m.field();
  if (m.dim() == 0) return Matrix(f, 0, 0);
  auto hom = hom_space(m, n);
  if (hom.dim() == 0) return std::nullopt;
  for (const auto& x : hom.basis)
    if (is_invertible(x)) return x;
  if (hom_space(m, m).dim() != hom.dim() || hom_space(n, n).dim() != hom.dim()) return std::nullopt;

  DecompReport dm = decompose(m), dn = decompose(n);
  if (dm.summands.size() != dn.summands.size()) return std::nullopt;
  // block isomorphisms from dm's layout to dn's
  std::vector<bool> used(dn.summands.size(), false);
  std::vector<std::size_t> offset_n(dn.summands.size() + 1, 0);
  for (std::size_t j = 0; j < dn.summands.size(); ++j)
    offset_n[j + 1] = offset_n[j] + dn.summands[j].module.dim() * dn.summands[j].multiplicity;
  Matrix q(f, m.dim(), m.dim());
  std::size_t offset_m = 0;
  for (const auto& sm : dm.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size() && !matched; ++j) {
      const auto& sn = dn.summands[j];
      if (used[j] || sn.multiplicity != sm.multiplicity) continue;
      auto x = indecomposable_isomorphism(sm.module, sn.module);
      if (!x) continue;
      used[j] = true;
      matched = true;
      const std::size_t k = sm.module.dim();
      for (std::size_t c = 0; c < sm.multiplicity; ++c) q.set_block(offset_n[j] + c * k, offset_m + c * k, *x);
    }
    if (!matched) return std::nullopt;
    offset_m += sm.module.dim() * sm.multiplicity;
  }
  auto pn_inv = invert(dn.basis_change);
  Matrix witness = *pn_inv * q * dm.basis_change;
  ensure(verify_isomorphism(m, n, witness), ErrorKind::InternalInvariantViolation, "assembled isomorphism fails to intertwine");
  return witness;
}

}  // namespace repdescend
