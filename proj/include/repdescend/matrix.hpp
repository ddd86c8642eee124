#pragma once

// Dense matrices over a Field with exact Gaussian elimination. Pivoting is
// deterministic (first nonzero entry scanning top to bottom), so every result
// is reproducible bit for bit.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "repdescend/field.hpp"

namespace repdescend {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    ensure(data_.size() == rows_ * cols_, ErrorKind::InvalidArgument, "matrix entry count mismatch");
  }

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

  bool is_zero() const {
    for (Elem e : data_)
      if (e != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [r0, r0+nr) x columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix scaled(Elem s) const {
    Matrix r = *this;
    field_.scale(r.data_, s);
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && (a.data_.empty() || a.field_ == b.field_);
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    ensure(a.cols_ == b.rows_, ErrorKind::InvalidArgument, "matrix product shape mismatch");
    ensure(a.field_ == b.field_ || a.data_.empty() || b.data_.empty(), ErrorKind::FieldMismatch,
           "matrix product over different fields");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      auto out = r.row(i);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Elem f = a(i, k);
        if (f != 0) a.field_.axpy(out, f, b.row(k));
      }
    }
    return r;
  }

  /// Row-major flattening.
  std::vector<Elem> flatten() const { return data_; }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    ensure(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::InvalidArgument, "matrix shape mismatch");
    ensure(a.field_ == b.field_ || a.data_.empty(), ErrorKind::FieldMismatch, "matrices over different fields");
  }

  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

struct Echelon {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form.
inline Echelon rref(Matrix m) {
  const Field& f = m.field();
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      auto a = m.row(piv), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    Elem inv = f.inv(m(r, c));
    if (inv != 1) f.scale(m.row(r), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m(i, c) != 0) f.axpy(m.row(i), f.neg(m(i, c)), m.row(r));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.form = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Columns form a basis of {x : A x = 0}; free variables ordered left to right.
inline Matrix kernel_basis(const Matrix& a) {
  Echelon e = rref(a);
  const Field& f = a.field();
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix k(f, n, n - e.rank);
  std::size_t col = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(free, col) = 1;
    for (std::size_t i = 0; i < e.rank; ++i) k(e.pivots[i], col) = f.neg(e.form(i, free));
    ++col;
  }
  return k;
}

/// Some X with A X = B (free variables zero), or nullopt when inconsistent.
inline std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  ensure(a.rows() == b.rows(), ErrorKind::InvalidArgument, "solve_right: row count mismatch");
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  Echelon e = rref(std::move(aug));
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < e.rank; ++i) {
    std::size_t c = e.pivots[i];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.form(i, a.cols() + j);
  }
  return x;
}

inline std::optional<Matrix> invert(const Matrix& a) {
  ensure(a.square(), ErrorKind::InvalidArgument, "invert: matrix is not square");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.form.block(0, n, n, n);
}

inline bool is_invertible(const Matrix& a) { return a.square() && rank(a) == a.rows(); }

inline Matrix entrywise_frobenius(const Matrix& a, std::uint64_t iterate) {
  Matrix r = a;
  if (a.field().degree() == 1 || iterate % a.field().degree() == 0) return r;
  for (auto& x : r.data()) x = a.field().frobenius(x, iterate);
  return r;
}

inline Matrix block_diagonal(const Field& f, const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix r(f, n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    r.set_block(off, off, b);
    off += b.rows();
  }
  return r;
}

/// Horizontal concatenation.
inline Matrix hconcat(const Field& f, std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) cols += p.cols();
  Matrix r(f, rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    r.set_block(0, off, p);
    off += p.cols();
  }
  return r;
}

/// Columns of m forming a basis of its column space (the pivot columns).
inline Matrix column_space_basis(const Matrix& m) {
  Echelon e = rref(m);
  Matrix out(m.field(), m.rows(), e.rank);
  for (std::size_t k = 0; k < e.rank; ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, e.pivots[k]);
  return out;
}

inline Matrix matrix_power(Matrix base, std::uint64_t e) {
  Matrix result = Matrix::identity(base.field(), base.rows());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

/// A linear space of equally shaped matrices, held in reduced echelon form
/// over the flattened entries. Coordinates of a member are its entries at the
/// pivot positions.
class MatrixSpace {
 public:
  MatrixSpace() = default;
  MatrixSpace(Field field, std::size_t rows, std::size_t cols, const std::vector<Matrix>& spanning)
      : field_(std::move(field)), rows_(rows), cols_(cols) {
    Matrix stacked(field_, spanning.size(), rows * cols);
    for (std::size_t i = 0; i < spanning.size(); ++i) {
      const auto& d = spanning[i].data();
      std::copy(d.begin(), d.end(), stacked.row(i).begin());
    }
    Echelon e = rref(std::move(stacked));
    pivots_ = e.pivots;
    for (std::size_t i = 0; i < e.rank; ++i) {
      auto r = e.form.row(i);
      basis_.emplace_back(field_, rows, cols, std::vector<Elem>(r.begin(), r.end()));
    }
  }

  const Field& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Matrix>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates assuming m lies in the space.
  std::vector<Elem> coords(const Matrix& m) const {
    std::vector<Elem> c(pivots_.size());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = m.data()[pivots_[i]];
    return c;
  }

  Matrix element(std::span<const Elem> coords) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) field_.axpy(m.data(), coords[i], basis_[i].data());
    return m;
  }

  /// m minus its projection along pivots; zero iff m is in the space.
  Matrix reduce(const Matrix& m) const {
    Matrix r = m;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      Elem c = r.data()[pivots_[i]];
      if (c != 0) field_.axpy(r.data(), field_.neg(c), basis_[i].data());
    }
    return r;
  }

  bool contains(const Matrix& m) const { return reduce(m).is_zero(); }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Matrix> basis_;
  std::vector<std::size_t> pivots_;
};

/// Vectors kept in reduced echelon form, grown one at a time.
class IncrementalBasis {
 public:
  IncrementalBasis(Field field, std::size_t length) : field_(std::move(field)), length_(length) {}

  std::size_t size() const { return rows_.size(); }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }

  std::vector<Elem> reduce(std::vector<Elem> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (v[pivots_[r]] != 0) field_.axpy(v, field_.neg(v[pivots_[r]]), rows_[r]);
    return v;
  }

  bool contains(std::vector<Elem> v) const {
    v = reduce(std::move(v));
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
  }

  /// Adds v if independent; returns whether it was.
  bool insert(std::vector<Elem> v) {
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < length_ && v[piv] == 0) ++piv;
    if (piv == length_) return false;
    field_.scale(v, field_.inv(v[piv]));
    for (auto& r : rows_)
      if (r[piv] != 0) field_.axpy(r, field_.neg(r[piv]), v);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  Field field_;
  std::size_t length_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace repdescend
