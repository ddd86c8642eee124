#pragma once

// Finite-dimensional unital associative algebras given by structure constants,
// and their modules given by one action matrix per basis element.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "repdescend/group.hpp"
#include "repdescend/matrix.hpp"
#include "repdescend/tower.hpp"

namespace repdescend {

class Algebra {
 public:
  Algebra() = default;

  /// structure[(i*m + j)*m + k] is the coefficient of b_k in b_i b_j.
  Algebra(Field base, std::size_t dim, std::vector<Elem> structure, std::vector<Elem> one, bool validate = true)
      : base_(std::move(base)), dim_(dim), structure_(std::move(structure)), one_(std::move(one)) {
    ensure(structure_.size() == dim_ * dim_ * dim_, ErrorKind::InvalidAlgebra, "structure constant count mismatch");
    ensure(one_.size() == dim_, ErrorKind::InvalidAlgebra, "identity has the wrong length");
    for (Elem e : structure_) ensure(e < base_.order(), ErrorKind::InvalidAlgebra, "structure constant out of range");
    for (Elem e : one_) ensure(e < base_.order(), ErrorKind::InvalidAlgebra, "identity entry out of range");
    if (validate) check_axioms();
    compute_generators();
  }

  const Field& base_field() const { return base_; }
  std::size_t dim() const { return dim_; }
  Elem constant(std::size_t i, std::size_t j, std::size_t k) const { return structure_[(i * dim_ + j) * dim_ + k]; }
  std::span<const Elem> product(std::size_t i, std::size_t j) const {
    return {structure_.data() + (i * dim_ + j) * dim_, dim_};
  }
  const std::vector<Elem>& structure() const { return structure_; }
  const std::vector<Elem>& one() const { return one_; }
  /// Basis indices that generate the algebra; module relations need only these.
  const std::vector<std::size_t>& generators() const { return generators_; }

  std::vector<Elem> multiply(std::span<const Elem> u, std::span<const Elem> v) const {
    std::vector<Elem> out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (v[j] == 0) continue;
        base_.axpy(out, base_.mul(u[i], v[j]), product(i, j));
      }
    }
    return out;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (constant(i, j, k) != constant(j, i, k)) return false;
    return true;
  }

  /// Matrix of left multiplication by u in the basis (columns = images of b_j).
  Matrix left_multiplication(std::span<const Elem> u) const {
    Matrix m(base_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        auto prod = product(i, j);
        for (std::size_t k = 0; k < dim_; ++k)
          if (prod[k] != 0) m(k, j) = base_.add(m(k, j), base_.mul(u[i], prod[k]));
      }
    }
    return m;
  }

  std::vector<Elem> basis_vector(std::size_t i) const {
    std::vector<Elem> v(dim_, 0);
    v[i] = 1;
    return v;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.base_ == b.base_ && a.structure_ == b.structure_ && a.one_ == b.one_;
  }

 private:
  void check_axioms() const {
    const Field& f = base_;
    for (std::size_t i = 0; i < dim_; ++i) {
      auto e_i = basis_vector(i);
      ensure(multiply(one_, e_i) == e_i && multiply(e_i, one_) == e_i, ErrorKind::InvalidAlgebra,
             "'one' is not a two-sided identity (basis element " + std::to_string(i) + ")");
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        auto ij = product(i, j);
        for (std::size_t k = 0; k < dim_; ++k) {
          std::vector<Elem> left(dim_, 0), right(dim_, 0);
          for (std::size_t l = 0; l < dim_; ++l)
            if (ij[l] != 0) f.axpy(left, ij[l], product(l, k));
          auto jk = product(j, k);
          for (std::size_t l = 0; l < dim_; ++l)
            if (jk[l] != 0) f.axpy(right, jk[l], product(i, l));
          ensure(left == right, ErrorKind::InvalidAlgebra,
                 "not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }

  // Greedy: add basis elements outside the subalgebra generated so far,
  // closing the span under right multiplication by the chosen generators.
  void compute_generators() {
    generators_.clear();
    if (dim_ == 0) return;
    const Field& f = base_;
    std::vector<std::vector<Elem>> rows;
    std::vector<std::size_t> pivots;
    auto reduce = [&](std::vector<Elem> v) {
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (v[pivots[r]] != 0) f.axpy(v, f.neg(v[pivots[r]]), rows[r]);
      return v;
    };
    std::vector<std::vector<Elem>> queue;
    auto insert = [&](std::vector<Elem> v) {
      v = reduce(std::move(v));
      std::size_t piv = 0;
      while (piv < dim_ && v[piv] == 0) ++piv;
      if (piv == dim_) return;
      f.scale(v, f.inv(v[piv]));
      for (auto& r : rows)
        if (r[piv] != 0) f.axpy(r, f.neg(r[piv]), v);
      rows.push_back(v);
      pivots.push_back(piv);
      queue.push_back(std::move(v));
    };
    auto close = [&] {
      while (!queue.empty()) {
        auto v = std::move(queue.back());
        queue.pop_back();
        for (auto g : generators_) insert(multiply(v, basis_vector(g)));
      }
    };
    insert(one_);
    close();
    for (std::size_t i = 0; i < dim_ && rows.size() < dim_; ++i) {
      auto rest = reduce(basis_vector(i));
      if (std::all_of(rest.begin(), rest.end(), [](Elem e) { return e == 0; })) continue;
      generators_.push_back(i);
      // previously spanned vectors must be multiplied by the new generator too
      for (auto& r : rows) queue.push_back(r);
      insert(basis_vector(i));
      close();
    }
  }

  Field base_;
  std::size_t dim_ = 0;
  std::vector<Elem> structure_;
  std::vector<Elem> one_;
  std::vector<std::size_t> generators_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Group algebra F[G] with basis the group elements.
inline AlgebraPtr group_algebra(const GroupTable& g, const Field& f) {
  const std::size_t m = g.order();
  std::vector<Elem> s(m * m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) s[(i * m + j) * m + g.mul(i, j)] = 1;
  std::vector<Elem> one(m, 0);
  one[g.identity()] = 1;
  return std::make_shared<const Algebra>(f, m, std::move(s), std::move(one), false);
}

/// Basis of K over a subfield K0 given by powers 1, x, ..., x^{r-1} of the
/// generator of K, with coordinates and multiplication matrices over K0.
class RelativeBasis {
 public:
  RelativeBasis(Field small, Field big) : small_(std::move(small)), big_(std::move(big)) {
    r_ = relative_degree(big_, small_);
    const std::uint32_t n0 = small_.degree(), n = big_.degree();
    const Field prime = big_.subfield(1);
    Elem z = big_.subfield_generator_image(n0);
    // column (i*n0 + l) = coords of z^l x^i over GF(p)
    Matrix b(prime, n, n);
    Elem xi = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
      Elem zl = 1;
      for (std::uint32_t l = 0; l < n0; ++l) {
        Elem v = big_.mul(zl, xi);
        for (std::uint32_t k = 0; k < n; ++k) b(k, i * n0 + l) = big_.coord(v, k);
        zl = big_.mul(zl, z);
      }
      xi = big_.mul(xi, big_.generator());
    }
    auto inv = invert(b);
    ensure(inv.has_value(), ErrorKind::InternalInvariantViolation, "relative power basis is singular");
    to_relative_ = std::move(*inv);
    embedding_ = std::make_shared<Embedding>(small_, big_);
  }

  std::uint32_t degree() const { return r_; }
  const Field& small() const { return small_; }
  const Field& big() const { return big_; }
  const Embedding& embedding() const { return *embedding_; }

  /// y = sum_i c_i x^i with c_i in the small field.
  std::vector<Elem> coords(Elem y) const {
    const std::uint32_t n0 = small_.degree(), n = big_.degree();
    std::vector<std::uint32_t> yc = big_.coords(y);
    std::vector<Elem> out(r_);
    std::vector<std::uint32_t> digits(n0);
    const std::uint32_t p = big_.characteristic();
    for (std::uint32_t i = 0; i < r_; ++i) {
      for (std::uint32_t l = 0; l < n0; ++l) {
        std::uint64_t s = 0;
        for (std::uint32_t k = 0; k < n; ++k) s += std::uint64_t(to_relative_(i * n0 + l, k)) * yc[k];
        digits[l] = static_cast<std::uint32_t>(s % p);
      }
      out[i] = small_.from_coords(digits);
    }
    return out;
  }

  /// Matrix over the small field of multiplication by a on the basis.
  Matrix multiplication_matrix(Elem a) const {
    Matrix m(small_, r_, r_);
    Elem xi = 1;
    for (std::uint32_t j = 0; j < r_; ++j) {
      auto c = coords(big_.mul(a, xi));
      for (std::uint32_t i = 0; i < r_; ++i) m(i, j) = c[i];
      xi = big_.mul(xi, big_.generator());
    }
    return m;
  }

  /// Preimage in the small field, if a lies in it.
  std::optional<Elem> pull_back(Elem a) const {
    auto c = coords(a);
    for (std::uint32_t i = 1; i < r_; ++i)
      if (c[i] != 0) return std::nullopt;
    return c[0];
  }

 private:
  Field small_, big_;
  std::uint32_t r_ = 1;
  Matrix to_relative_;
  std::shared_ptr<Embedding> embedding_;
};

/// A module over an algebra, realized over an extension field of its base
/// field by one square matrix per algebra basis element.
class ModuleRep {
 public:
  ModuleRep() = default;
  ModuleRep(AlgebraPtr algebra, Field field, std::size_t dim, std::vector<Matrix> action)
      : algebra_(std::move(algebra)), field_(std::move(field)), dim_(dim), action_(std::move(action)) {
    ensure(algebra_ != nullptr, ErrorKind::InvalidModule, "module without algebra");
    ensure(field_.contains(algebra_->base_field()), ErrorKind::NoEmbedding,
           "module field " + field_.name() + " does not contain " + algebra_->base_field().name());
    ensure(action_.size() == algebra_->dim(), ErrorKind::InvalidModule,
           "expected " + std::to_string(algebra_->dim()) + " action matrices, got " + std::to_string(action_.size()));
    for (auto& m : action_) {
      ensure(m.rows() == dim_ && m.cols() == dim_, ErrorKind::InvalidModule, "action matrix has the wrong shape");
      ensure(m.field() == field_ || dim_ == 0, ErrorKind::FieldMismatch, "action matrix over the wrong field");
      if (dim_ == 0) m = Matrix(field_, 0, 0);
    }
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }

  /// Structure constants of the algebra embedded into the module field.
  std::vector<Elem> embedded_structure() const {
    Embedding e(algebra_->base_field(), field_);
    std::vector<Elem> s = algebra_->structure();
    for (auto& x : s) x = e(x);
    return s;
  }

  std::vector<Elem> embedded_one() const {
    Embedding e(algebra_->base_field(), field_);
    std::vector<Elem> s = algebra_->one();
    for (auto& x : s) x = e(x);
    return s;
  }

  /// Action of an algebra element given in coordinates over the module field.
  Matrix act(std::span<const Elem> coeffs) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) field_.axpy(m.data(), coeffs[i], action_[i].data());
    return m;
  }

  friend bool operator==(const ModuleRep& a, const ModuleRep& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && (a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_) &&
           a.action_ == b.action_;
  }

 private:
  AlgebraPtr algebra_;
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

inline bool same_algebra(const ModuleRep& a, const ModuleRep& b) {
  return a.algebra() == b.algebra() || *a.algebra() == *b.algebra();
}

inline void require_compatible(const ModuleRep& a, const ModuleRep& b) {
  ensure(same_algebra(a, b), ErrorKind::AlgebraMismatch, "modules over different algebras");
  ensure(a.field() == b.field(), ErrorKind::FieldMismatch,
         "modules over different fields (" + a.field().name() + " vs " + b.field().name() + ")");
}

struct Violation {
  enum class Kind { Identity, Product } kind;
  std::size_t i = 0, j = 0;

  std::string describe() const {
    if (kind == Kind::Identity) return "action(one) is not the identity";
    std::ostringstream os;
    os << "action(b" << i << ") * action(b" << j << ") != sum_k c_{" << i << "," << j << "}^k action(b_k)";
    return os.str();
  }
};

/// Empty iff the module axioms hold exactly.
inline std::vector<Violation> check_module(const ModuleRep& m) {
  std::vector<Violation> out;
  const std::size_t dim = m.algebra()->dim();
  auto one = m.embedded_one();
  if (!m.act(one).is_identity() && m.dim() > 0) out.push_back({Violation::Kind::Identity, 0, 0});
  auto s = m.embedded_structure();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Matrix lhs = m.action(i) * m.action(j);
      Matrix rhs = m.act(std::span<const Elem>(s.data() + (i * dim + j) * dim, dim));
      if (!(lhs == rhs)) out.push_back({Violation::Kind::Product, i, j});
    }
  }
  return out;
}

inline ModuleRep regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_multiplication(a->basis_vector(i)));
  return ModuleRep(a, a->base_field(), a->dim(), std::move(act));
}

inline ModuleRep zero_module(const AlgebraPtr& a, const Field& f) {
  return ModuleRep(a, f, 0, std::vector<Matrix>(a->dim(), Matrix(f, 0, 0)));
}

inline ModuleRep base_change(const ModuleRep& m, const Field& target) {
  if (m.field() == target) return m;
  Embedding e(m.field(), target);
  std::vector<Matrix> act;
  for (const auto& a : m.action()) {
    Matrix b(target, a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k) b.data()[k] = e(a.data()[k]);
    act.push_back(std::move(b));
  }
  return ModuleRep(m.algebra(), target, m.dim(), std::move(act));
}

/// Entrywise preimage under the canonical embedding small -> m.field(), if
/// every entry lies in the subfield.
inline std::optional<ModuleRep> realize_over(const ModuleRep& m, const Field& small) {
  if (m.field() == small) return m;
  if (!small.contains(m.algebra()->base_field())) return std::nullopt;
  RelativeBasis rb(small, m.field());
  std::vector<Matrix> act;
  for (const auto& a : m.action()) {
    Matrix b(small, a.rows(), a.cols());
    for (std::size_t k = 0; k < a.data().size(); ++k) {
      if (!in_subfield(m.field(), a.data()[k], small.degree())) return std::nullopt;
      b.data()[k] = *rb.pull_back(a.data()[k]);
    }
    act.push_back(std::move(b));
  }
  return ModuleRep(m.algebra(), small, m.dim(), std::move(act));
}

/// Matrix over the small field of a K-linear map, using the power basis of K.
inline Matrix restrict_matrix(const Matrix& a, const RelativeBasis& rb) {
  const std::size_t r = rb.degree();
  Matrix out(rb.small(), a.rows() * r, a.cols() * r);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      out.set_block(i * r, j * r, rb.multiplication_matrix(a(i, j)));
    }
  }
  return out;
}

/// Inverse of restrict_matrix on matrices that commute with the K-structure.
inline Matrix unrestrict_matrix(const Matrix& a, const RelativeBasis& rb) {
  const std::size_t r = rb.degree();
  const Field& big = rb.big();
  const Embedding& e = rb.embedding();
  Matrix out(big, a.rows() / r, a.cols() / r);
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      // first column of the block holds the coordinates of the entry
      Elem acc = 0, xi = 1;
      for (std::size_t k = 0; k < r; ++k) {
        acc = big.add(acc, big.mul(e(a(i * r + k, j * r)), xi));
        xi = big.mul(xi, big.generator());
      }
      out(i, j) = acc;
    }
  }
  return out;
}

inline ModuleRep restrict_scalars(const ModuleRep& m, const Field& small) {
  if (m.field() == small) return m;
  ensure(small.contains(m.algebra()->base_field()), ErrorKind::NoEmbedding,
         "algebra base field " + m.algebra()->base_field().name() + " does not embed in " + small.name());
  RelativeBasis rb(small, m.field());
  std::vector<Matrix> act;
  for (const auto& a : m.action()) act.push_back(restrict_matrix(a, rb));
  return ModuleRep(m.algebra(), small, m.dim() * rb.degree(), std::move(act));
}

inline ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  require_compatible(a, b);
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.action().size(); ++i)
    act.push_back(block_diagonal(a.field(), {a.action(i), b.action(i)}));
  return ModuleRep(a.algebra(), a.field(), a.dim() + b.dim(), std::move(act));
}

inline ModuleRep direct_sum(const std::vector<ModuleRep>& parts, const AlgebraPtr& alg, const Field& f) {
  ModuleRep out = zero_module(alg, f);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

inline ModuleRep power(const ModuleRep& m, std::size_t n) {
  ModuleRep out = zero_module(m.algebra(), m.field());
  for (std::size_t i = 0; i < n; ++i) out = direct_sum(out, m);
  return out;
}

/// b -> P action(b) P^{-1}, with the inverse supplied.
inline ModuleRep conjugate_with_inverse(const ModuleRep& m, const Matrix& p, const Matrix& p_inv) {
  std::vector<Matrix> act;
  for (const auto& a : m.action()) act.push_back(p * a * p_inv);
  return ModuleRep(m.algebra(), m.field(), m.dim(), std::move(act));
}

inline ModuleRep conjugate(const ModuleRep& m, const Matrix& p) {
  ensure(p.rows() == m.dim() && p.cols() == m.dim(), ErrorKind::InvalidArgument, "conjugating matrix has wrong shape");
  if (m.dim() == 0) return m;
  ensure(p.field() == m.field(), ErrorKind::FieldMismatch, "conjugating matrix over the wrong field");
  auto inv = invert(p);
  ensure(inv.has_value(), ErrorKind::NotInvertible, "conjugating matrix is not invertible");
  return conjugate_with_inverse(m, p, *inv);
}

/// Whether P is an isomorphism M -> N, i.e. conjugate(M, P) = N exactly.
inline bool verify_isomorphism(const ModuleRep& m, const ModuleRep& n, const Matrix& p) {
  if (m.dim() != n.dim() || !same_algebra(m, n) || m.field() != n.field()) return false;
  if (m.dim() == 0) return true;
  if (p.rows() != m.dim() || p.cols() != m.dim() || !is_invertible(p)) return false;
  for (std::size_t i = 0; i < m.action().size(); ++i)
    if (!(p * m.action(i) == n.action(i) * p)) return false;
  return true;
}

}  // namespace repdescend
