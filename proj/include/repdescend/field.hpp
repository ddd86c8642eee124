#pragma once

// Arithmetic in GF(p^n) = GF(p)[x]/(f) for a monic irreducible f of degree n.
//
// Elements are coordinate vectors in the power basis 1, x, ..., x^{n-1}. They
// are stored packed as sum_i c_i p^i in a 32-bit word, so the packed value and
// the coordinate vector carry the same information. Fields with at most
// kTableBound elements precompute addition and multiplication tables; larger
// fields fall back to schoolbook polynomial arithmetic.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "repdescend/error.hpp"

namespace repdescend {

using Elem = std::uint32_t;

namespace detail {

inline constexpr std::uint64_t kTableBound = 1024;

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // n + 1 coefficients, low to high, monic
  std::vector<std::uint32_t> pw;       // pw[i] = p^i, i <= n

  std::vector<Elem> add_table;  // q*q, empty when untabled
  std::vector<Elem> mul_table;  // q*q
  std::vector<Elem> inv_table;  // q
  std::vector<Elem> frob_table;  // q, a -> a^p
  std::vector<std::uint32_t> frob_matrix;  // n*n, column j = coords of (x^j)^p

  // Tower data. subfields[i] has degree subfield_degrees[i] (proper divisors
  // of n, ascending) and subfield_images[i] is the image of its generator here.
  std::vector<std::uint32_t> subfield_degrees;
  std::vector<std::shared_ptr<const FieldData>> subfields;
  std::vector<Elem> subfield_images;

  bool tabled() const { return !mul_table.empty(); }
};

inline void unpack(const FieldData& d, Elem a, std::uint32_t* out) {
  for (std::uint32_t i = 0; i < d.n; ++i) {
    out[i] = a % d.p;
    a /= d.p;
  }
}

inline Elem pack(const FieldData& d, const std::uint32_t* digits) {
  Elem a = 0;
  for (std::uint32_t i = d.n; i-- > 0;) a = a * d.p + digits[i];
  return a;
}

inline Elem add_digits(const FieldData& d, Elem a, Elem b) {
  Elem out = 0;
  for (std::uint32_t i = 0; i < d.n; ++i) {
    std::uint32_t s = a % d.p + b % d.p;
    if (s >= d.p) s -= d.p;
    out += s * d.pw[i];
    a /= d.p;
    b /= d.p;
  }
  return out;
}

inline Elem neg_digits(const FieldData& d, Elem a) {
  Elem out = 0;
  for (std::uint32_t i = 0; i < d.n; ++i) {
    std::uint32_t c = a % d.p;
    out += (c == 0 ? 0 : d.p - c) * d.pw[i];
    a /= d.p;
  }
  return out;
}

inline Elem mul_poly(const FieldData& d, Elem a, Elem b) {
  const std::uint32_t n = d.n;
  const std::uint64_t p = d.p;
  std::uint32_t da[32], db[32];
  std::uint64_t prod[64] = {};
  unpack(d, a, da);
  unpack(d, b, db);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(da[i]) * db[j]) % p;
  }
  for (std::uint32_t k = 2 * n - 1; k-- > n;) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    // subtract c * x^{k-n} * f
    for (std::uint32_t i = 0; i <= n; ++i) {
      prod[k - n + i] = (prod[k - n + i] + (p - c) * d.modulus[i]) % p;
    }
  }
  std::uint32_t out[32];
  for (std::uint32_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return pack(d, out);
}

inline Elem pow_raw(const FieldData& d, Elem a, std::uint64_t e);

inline Elem mul_raw(const FieldData& d, Elem a, Elem b) {
  if (d.n == 1) return static_cast<Elem>(std::uint64_t(a) * b % d.p);
  if (d.tabled()) return d.mul_table[std::size_t(a) * d.q + b];
  return mul_poly(d, a, b);
}

inline Elem pow_raw(const FieldData& d, Elem a, std::uint64_t e) {
  Elem result = 1;
  while (e > 0) {
    if (e & 1) result = mul_raw(d, result, a);
    a = mul_raw(d, a, a);
    e >>= 1;
  }
  return result;
}

// Fills tables and the Frobenius matrix once modulus, p, n, q are set.
inline void build_arithmetic(FieldData& d) {
  d.pw.assign(d.n + 1, 1);
  for (std::uint32_t i = 1; i <= d.n; ++i) d.pw[i] = d.pw[i - 1] * d.p;
  if (d.n > 1 && d.q <= kTableBound) {
    const std::size_t q = d.q;
    if (d.p != 2) {
      d.add_table.resize(q * q);
      for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) d.add_table[a * q + b] = add_digits(d, Elem(a), Elem(b));
    }
    auto add = [&](Elem a, Elem b) -> Elem {
      if (d.p == 2) return a ^ b;
      return d.add_table[std::size_t(a) * q + b];
    };
    std::vector<Elem> table(q * q, 0);
    std::vector<Elem> times_basis(d.n);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::uint32_t i = 0; i < d.n; ++i) times_basis[i] = mul_poly(d, Elem(a), d.pw[i]);
      Elem* row = &table[a * q];
      for (std::size_t b = 1; b < q; ++b) {
        // b = b' + e_i where i is the lowest nonzero digit of b
        std::uint32_t i = 0;
        std::size_t rest = b;
        while (rest % d.p == 0) {
          rest /= d.p;
          ++i;
        }
        row[b] = add(row[b - d.pw[i]], times_basis[i]);
      }
    }
    d.mul_table = std::move(table);
    d.inv_table.assign(q, 0);
    for (std::size_t a = 1; a < q; ++a) d.inv_table[a] = pow_raw(d, Elem(a), q - 2);
    d.frob_table.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a) d.frob_table[a] = pow_raw(d, Elem(a), d.p);
  }
  if (d.n > 1 && !d.tabled()) {
    d.frob_matrix.assign(std::size_t(d.n) * d.n, 0);
    std::uint32_t digits[32];
    for (std::uint32_t j = 0; j < d.n; ++j) {
      Elem img = pow_raw(d, d.pw[j], d.p);
      unpack(d, img, digits);
      for (std::uint32_t i = 0; i < d.n; ++i) d.frob_matrix[std::size_t(i) * d.n + j] = digits[i];
    }
  }
}

}  // namespace detail

/// A finite field GF(p^n). Cheap to copy; equal (p, n) means the same field
/// because moduli are canonical.
class Field {
 public:
  Field() = default;
  explicit Field(std::shared_ptr<const detail::FieldData> data) : d_(std::move(data)) {}

  bool valid() const { return d_ != nullptr; }
  std::uint32_t characteristic() const { return d_->p; }
  std::uint32_t degree() const { return d_->n; }
  std::uint64_t order() const { return d_->q; }
  std::span<const std::uint32_t> modulus() const { return d_->modulus; }
  const detail::FieldData& data() const { return *d_; }
  const std::shared_ptr<const detail::FieldData>& shared_data() const { return d_; }

  std::string name() const { return "GF(" + std::to_string(d_->q) + ")"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The class of x, a root of the modulus. For prime fields the modulus is x
  /// itself, so the generator is 0.
  Elem generator() const { return d_->n == 1 ? 0 : d_->p; }

  Elem from_int(std::int64_t v) const {
    const std::int64_t p = d_->p;
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }

  Elem from_coords(std::span<const std::uint32_t> coords) const {
    ensure(coords.size() == d_->n, ErrorKind::InvalidArgument,
           "element needs " + std::to_string(d_->n) + " coordinates");
    for (auto c : coords) ensure(c < d_->p, ErrorKind::InvalidArgument, "coordinate out of range");
    return detail::pack(*d_, coords.data());
  }

  std::vector<std::uint32_t> coords(Elem a) const {
    std::vector<std::uint32_t> out(d_->n);
    detail::unpack(*d_, a, out.data());
    return out;
  }

  /// Coordinate i of a in the power basis.
  std::uint32_t coord(Elem a, std::uint32_t i) const { return (a / d_->pw[i]) % d_->p; }

  bool in_prime_field(Elem a) const { return a < d_->p; }

  Elem add(Elem a, Elem b) const {
    const auto& d = *d_;
    if (d.p == 2) return a ^ b;
    if (d.n == 1) {
      Elem s = a + b;
      return s >= d.p ? s - d.p : s;
    }
    if (d.tabled()) return d.add_table[std::size_t(a) * d.q + b];
    return detail::add_digits(d, a, b);
  }

  Elem neg(Elem a) const {
    const auto& d = *d_;
    if (d.p == 2) return a;
    if (d.n == 1) return a == 0 ? 0 : d.p - a;
    return detail::neg_digits(d, a);
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const { return detail::mul_raw(*d_, a, b); }

  Elem inv(Elem a) const {
    ensure(a != 0, ErrorKind::InvalidArgument, "inverse of zero");
    const auto& d = *d_;
    if (d.tabled()) return d.inv_table[a];
    if (d.n == 1) return detail::pow_raw(d, a, d.p - 2);
    return detail::pow_raw(d, a, std::uint64_t(d.q) - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, std::uint64_t e) const { return detail::pow_raw(*d_, a, e); }

  /// a^(p^iterate).
  Elem frobenius(Elem a, std::uint64_t iterate) const {
    const auto& d = *d_;
    if (d.n == 1) return a;
    iterate %= d.n;
    if (d.tabled()) {
      for (std::uint64_t k = 0; k < iterate; ++k) a = d.frob_table[a];
      return a;
    }
    std::uint32_t in[32], out[32];
    for (std::uint64_t k = 0; k < iterate; ++k) {
      detail::unpack(d, a, in);
      for (std::uint32_t i = 0; i < d.n; ++i) {
        std::uint64_t s = 0;
        for (std::uint32_t j = 0; j < d.n; ++j) s += std::uint64_t(d.frob_matrix[std::size_t(i) * d.n + j]) * in[j];
        out[i] = static_cast<std::uint32_t>(s % d.p);
      }
      a = detail::pack(d, out);
    }
    return a;
  }

  /// dst[i] += factor * src[i]
  void axpy(std::span<Elem> dst, Elem factor, std::span<const Elem> src) const {
    if (factor == 0) return;
    const auto& d = *d_;
    const std::size_t len = dst.size();
    if (d.p == 2 && d.n == 1) {
      for (std::size_t i = 0; i < len; ++i) dst[i] ^= src[i];
      return;
    }
    if (d.n == 1) {
      const std::uint64_t p = d.p;
      for (std::size_t i = 0; i < len; ++i) {
        if (src[i] != 0) dst[i] = static_cast<Elem>((dst[i] + std::uint64_t(factor) * src[i]) % p);
      }
      return;
    }
    if (d.tabled()) {
      const Elem* row = &d.mul_table[std::size_t(factor) * d.q];
      if (d.p == 2) {
        for (std::size_t i = 0; i < len; ++i) dst[i] ^= row[src[i]];
      } else {
        const std::size_t q = d.q;
        for (std::size_t i = 0; i < len; ++i) {
          if (src[i] != 0) dst[i] = d.add_table[std::size_t(dst[i]) * q + row[src[i]]];
        }
      }
      return;
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (src[i] != 0) dst[i] = add(dst[i], mul(factor, src[i]));
    }
  }

  /// dst[i] *= factor
  void scale(std::span<Elem> dst, Elem factor) const {
    for (auto& x : dst) x = mul(factor, x);
  }

  /// Canonical subfield of degree m (m | n), shared with this field's tower.
  Field subfield(std::uint32_t m) const {
    if (m == d_->n) return *this;
    for (std::size_t i = 0; i < d_->subfield_degrees.size(); ++i) {
      if (d_->subfield_degrees[i] == m) return Field(d_->subfields[i]);
    }
    fail(ErrorKind::NoEmbedding, "GF(" + std::to_string(d_->p) + "^" + std::to_string(m) + ") is not a subfield of " +
                                     name());
  }

  /// Image in this field of the generator of the canonical subfield of degree m.
  Elem subfield_generator_image(std::uint32_t m) const {
    if (m == d_->n) return generator();
    for (std::size_t i = 0; i < d_->subfield_degrees.size(); ++i) {
      if (d_->subfield_degrees[i] == m) return d_->subfield_images[i];
    }
    fail(ErrorKind::NoEmbedding, "no subfield of degree " + std::to_string(m) + " in " + name());
  }

  bool contains(const Field& other) const {
    return d_->p == other.d_->p && d_->n % other.d_->n == 0;
  }

  friend bool operator==(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->p == b.d_->p && a.d_->n == b.d_->n;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  std::shared_ptr<const detail::FieldData> d_;
};

/// Lexicographic comparison of coordinate vectors, lowest degree first.
inline bool coords_less(const Field& f, Elem a, Elem b) {
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    auto ca = f.coord(a, i), cb = f.coord(b, i);
    if (ca != cb) return ca < cb;
  }
  return false;
}

/// A field element bundled with its field.
struct FieldElem {
  Field field;
  Elem value = 0;

  std::vector<std::uint32_t> coords() const { return field.coords(value); }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) { return {a.field, a.field.add(a.value, b.value)}; }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return {a.field, a.field.sub(a.value, b.value)}; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) { return {a.field, a.field.mul(a.value, b.value)}; }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return {a.field, a.field.div(a.value, b.value)}; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.field == b.field && a.value == b.value; }
};

}  // namespace repdescend
