#pragma once

// Univariate polynomials over a Field, with deterministic factorization:
// squarefree decomposition followed by Berlekamp's algorithm. Splitting uses
// traces Tr_{GF(q)/GF(p)}(c*v) of Berlekamp-subalgebra elements, so the only
// enumeration is over the prime field.

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "repdescend/field.hpp"

namespace repdescend {

class Poly {
 public:
  Poly() = default;
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Field& f, Elem a) { return Poly(f, {a}); }
  static Poly x(const Field& f) { return Poly(f, {0, 1}); }
  /// x - a
  static Poly linear(const Field& f, Elem root) { return Poly(f, {f.neg(root), 1}); }

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    Elem inv = field_.inv(lead());
    for (auto& x : r.c_) x = field_.mul(x, inv);
    return r;
  }

  Elem eval(Elem a) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, a), c_[i]);
    return r;
  }

  Poly derivative() const {
    std::vector<Elem> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_.mul(field_.from_int(std::int64_t(i)), c_[i]));
    return Poly(field_, std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_, std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      a.field_.axpy(std::span<Elem>(r.data() + i, b.c_.size()), a.c_[i], b.c_);
    }
    return Poly(a.field_, std::move(r));
  }
  Poly scaled(Elem s) const {
    Poly r = *this;
    for (auto& x : r.c_) x = field_.mul(x, s);
    r.trim();
    return r;
  }

  /// Quotient and remainder; divisor must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    ensure(!b.is_zero(), ErrorKind::InvalidArgument, "polynomial division by zero");
    const Field& f = a.field_;
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Elem> rem = a.c_;
    std::vector<Elem> quo(a.c_.size() - b.c_.size() + 1, 0);
    Elem inv_lead = f.inv(b.lead());
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = rem.size(); k-- > db;) {
      Elem c = rem[k];
      if (c == 0) continue;
      Elem t = f.mul(c, inv_lead);
      quo[k - db] = t;
      f.axpy(std::span<Elem>(rem.data() + (k - db), db + 1), f.neg(t), b.c_);
    }
    rem.resize(db);
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  /// Lexicographic by degree, then by coefficients from the top.
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
      if (a.c_[i] != b.c_[i]) return coords_less(a.field_, a.c_[i], b.c_[i]);
    }
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Field field_;
  std::vector<Elem> c_;
};

/// Monic gcd (zero if both are zero).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [qt, r2] = divmod(r0, r1);
    Poly s2 = s0 - qt * s1;
    Poly t2 = t0 - qt * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Elem inv = f.inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(base.field(), 1) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

/// g(x)^q mod m where q = |field|, computed as n successive p-th powers.
inline Poly qth_power_mod(const Poly& g, const Poly& m) {
  const Field& f = g.field();
  Poly r = g % m;
  for (std::uint32_t i = 0; i < f.degree(); ++i) r = powmod(r, f.characteristic(), m);
  return r;
}

/// Rabin's test: deg f = d is irreducible iff x^{q^d} = x mod f and
/// gcd(x^{q^{d/l}} - x, f) = 1 for each prime l | d.
inline bool is_irreducible(const Poly& f) {
  const int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  const Field& fld = f.field();
  Poly x = Poly::x(fld);
  std::vector<int> primes;
  for (int l = 2, r = d; l <= r; ++l) {
    if (r % l == 0) {
      primes.push_back(l);
      while (r % l == 0) r /= l;
    }
  }
  // powers[k] = x^{q^k} mod f
  std::vector<Poly> powers{x % f};
  for (int k = 1; k <= d; ++k) powers.push_back(qth_power_mod(powers.back(), f));
  if (!((powers[d] - x) % f).is_zero()) return false;
  for (int l : primes) {
    if (gcd(f, powers[d / l] - x).degree() != 0) return false;
  }
  return true;
}

namespace detail {

inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f_in) {
  std::vector<std::pair<Poly, int>> out;
  const Field& fld = f_in.field();
  const std::uint32_t p = fld.characteristic();
  Poly f = f_in.monic();
  if (f.degree() <= 0) return out;

  auto accumulate = [&](const Poly& g, int mult) {
    if (g.degree() <= 0) return;
    for (auto& [h, m] : out) {
      if (h == g) {
        m += mult;
        return;
      }
    }
    out.emplace_back(g, mult);
  };

  // Yun-style loop adapted for characteristic p.
  std::vector<std::pair<Poly, int>> stack{{f, 1}};
  while (!stack.empty()) {
    auto [g, scale] = stack.back();
    stack.pop_back();
    if (g.degree() <= 0) continue;
    Poly dg = g.derivative();
    if (dg.is_zero()) {
      // g = h(x^p); take p-th roots of coefficients.
      std::vector<Elem> root(g.degree() / p + 1, 0);
      for (int i = 0; i <= g.degree(); i += int(p)) root[i / p] = fld.frobenius(g.coeff(i), fld.degree() - 1);
      stack.emplace_back(Poly(fld, std::move(root)), scale * int(p));
      continue;
    }
    Poly c = gcd(g, dg);
    Poly w = g / c;
    int i = 1;
    while (w.degree() > 0) {
      Poly y = gcd(w, c);
      Poly z = w / y;
      accumulate(z.monic(), i * scale);
      ++i;
      w = y;
      c = c / y;
    }
    if (c.degree() > 0) {
      // remaining part is a p-th power
      std::vector<Elem> root(c.degree() / p + 1, 0);
      for (int k = 0; k <= c.degree(); k += int(p)) root[k / p] = fld.frobenius(c.coeff(k), fld.degree() - 1);
      stack.emplace_back(Poly(fld, std::move(root)).monic(), scale * int(p));
    }
  }
  return out;
}

/// Berlekamp on a squarefree monic polynomial.
inline std::vector<Poly> berlekamp(const Poly& f) {
  const Field& fld = f.field();
  const int d = f.degree();
  if (d <= 1) return {f};
  // Row i of Qm holds x^{iq} mod f.
  Poly h = qth_power_mod(Poly::x(fld), f);
  std::vector<std::vector<Elem>> qm(d, std::vector<Elem>(d, 0));
  Poly cur = Poly::constant(fld, 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) qm[i][j] = cur.coeff(j);
    cur = mulmod(cur, h, f);
  }
  // Solve (Q^T - I) v = 0: build rows j: sum_i v_i Q[i][j] - v_j.
  std::vector<std::vector<Elem>> sys(d, std::vector<Elem>(d, 0));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) sys[j][i] = qm[i][j];
    sys[j][j] = fld.sub(sys[j][j], 1);
  }
  // Row reduce
  std::vector<int> pivot_of_col(d, -1);
  int rank = 0;
  for (int col = 0; col < d && rank < d; ++col) {
    int piv = -1;
    for (int r = rank; r < d; ++r)
      if (sys[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(sys[piv], sys[rank]);
    Elem inv = fld.inv(sys[rank][col]);
    fld.scale(sys[rank], inv);
    for (int r = 0; r < d; ++r) {
      if (r != rank && sys[r][col] != 0) fld.axpy(sys[r], fld.neg(sys[r][col]), sys[rank]);
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  const int k = d - rank;
  if (k == 1) return {f};
  std::vector<Poly> basis;
  for (int free = 0; free < d; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Elem> v(d, 0);
    v[free] = 1;
    for (int col = 0; col < d; ++col) {
      if (pivot_of_col[col] >= 0) v[col] = fld.neg(sys[pivot_of_col[col]][free]);
    }
    Poly pv(fld, std::move(v));
    if (pv.degree() > 0) basis.push_back(std::move(pv));
  }

  std::vector<Poly> factors{f};
  const std::uint32_t p = fld.characteristic();
  for (const Poly& v : basis) {
    for (std::uint32_t j = 0; j < fld.degree(); ++j) {
      if (static_cast<int>(factors.size()) == k) break;
      // t = Tr(c v) mod f with c = x^j in GF(q)
      Poly t = v.scaled(fld.pow(fld.generator(), j)) % f;
      Poly acc = t;
      for (std::uint32_t i = 1; i < fld.degree(); ++i) {
        t = powmod(t, p, f);
        acc = acc + t;
      }
      std::vector<Poly> next;
      for (const Poly& g : factors) {
        if (g.degree() <= 1) {
          next.push_back(g);
          continue;
        }
        Poly tg = acc % g;
        Poly remaining = g;
        for (std::uint32_t s = 0; s < p && remaining.degree() > 0; ++s) {
          Poly part = gcd(remaining, tg - Poly::constant(fld, s));
          if (part.degree() > 0) {
            next.push_back(part);
            remaining = remaining / part;
          }
        }
        if (remaining.degree() > 0) next.push_back(remaining.monic());
      }
      factors = std::move(next);
    }
    if (static_cast<int>(factors.size()) == k) break;
  }
  ensure(static_cast<int>(factors.size()) == k, ErrorKind::InternalInvariantViolation,
         "Berlekamp splitting did not separate all factors");
  return factors;
}

}  // namespace detail

/// Monic irreducible factors with multiplicities, sorted.
inline std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  std::vector<std::pair<Poly, int>> out;
  for (auto& [g, m] : detail::squarefree_decomposition(f)) {
    for (auto& h : detail::berlekamp(g)) out.emplace_back(h.monic(), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// Distinct roots in the coefficient field, sorted by coordinate order.
inline std::vector<Elem> roots(const Poly& f) {
  std::vector<Elem> out;
  for (auto& [g, m] : factor(f)) {
    if (g.degree() == 1) out.push_back(g.field().neg(g.coeff(0)));
  }
  const Field& fld = f.field();
  std::sort(out.begin(), out.end(), [&](Elem a, Elem b) { return coords_less(fld, a, b); });
  return out;
}

}  // namespace repdescend
