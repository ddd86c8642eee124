#pragma once

// Canonical finite fields and the embeddings between them.
//
// The modulus of GF(p^n) is the lexicographically least monic irreducible
// polynomial of degree n, comparing coefficients from the constant term up.
// Every field carries its whole subfield lattice; the image of the generator
// of GF(p^m) in GF(p^n) is the least root of the degree-m modulus that is
// compatible with the images already fixed for every proper divisor of m.
// That makes embed(b -> c) o embed(a -> b) = embed(a -> c) for all a | b | c.

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <memory>
#include <vector>

#include "repdescend/field.hpp"
#include "repdescend/poly.hpp"

namespace repdescend {

inline constexpr std::uint64_t kDefaultSizeBound = std::uint64_t(1) << 20;
inline constexpr std::uint64_t kHardSizeBound = std::uint64_t(1) << 31;

/// Size bound from REPDESCEND_SIZE_BOUND when set and valid, else the default.
inline std::uint64_t size_bound_from_env() {
  if (const char* env = std::getenv("REPDESCEND_SIZE_BOUND")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSizeBound;
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace detail {

inline std::shared_ptr<FieldData> prime_field_data(std::uint32_t p) {
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->n = 1;
  d->q = p;
  d->modulus = {0, 1};
  build_arithmetic(*d);
  return d;
}

inline std::vector<std::uint32_t> canonical_modulus(const Field& prime, std::uint32_t n) {
  const std::uint32_t p = prime.characteristic();
  if (n == 1) return {0, 1};
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= p;
  std::vector<std::uint32_t> coeffs(n + 1, 0);
  coeffs[n] = 1;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // c_0 is the most significant digit of idx
    std::uint64_t rest = idx;
    for (std::uint32_t i = n; i-- > 0;) {
      coeffs[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (coeffs[0] == 0) continue;
    std::vector<Elem> e(coeffs.begin(), coeffs.end());
    if (is_irreducible(Poly(prime, e))) return coeffs;
  }
  fail(ErrorKind::InternalInvariantViolation, "no irreducible polynomial found");
}

// sum_i coords(y)_i r^i computed in target, where y lives in a field of degree m.
inline Elem evaluate_at(const FieldData& src, Elem y, const Field& target, Elem r) {
  Elem acc = 0, power = 1;
  for (std::uint32_t i = 0; i < src.n; ++i) {
    std::uint32_t c = (y / src.pw[i]) % src.p;
    if (c != 0) acc = target.add(acc, target.mul(target.from_int(c), power));
    power = target.mul(power, r);
  }
  return acc;
}

inline void fix_embeddings(FieldData& data, const std::map<std::uint32_t, std::shared_ptr<const FieldData>>& tower) {
  Field target(std::shared_ptr<const FieldData>(std::shared_ptr<const FieldData>{}, &data));
  for (std::uint32_t m : divisors(data.n)) {
    if (m == data.n) break;
    const auto& sub = tower.at(m);
    std::vector<Elem> mod(sub->modulus.begin(), sub->modulus.end());
    std::vector<Elem> candidates = roots(Poly(target, mod));
    Elem chosen = 0;
    bool found = false;
    for (Elem r : candidates) {
      bool compatible = true;
      for (std::size_t i = 0; i < sub->subfield_degrees.size() && compatible; ++i) {
        std::uint32_t mm = sub->subfield_degrees[i];
        Elem via_sub = evaluate_at(*sub, sub->subfield_images[i], target, r);
        Elem direct = 0;
        for (std::size_t j = 0; j < data.subfield_degrees.size(); ++j)
          if (data.subfield_degrees[j] == mm) direct = data.subfield_images[j];
        compatible = via_sub == direct;
      }
      if (compatible) {
        chosen = r;
        found = true;
        break;
      }
    }
    ensure(found, ErrorKind::InternalInvariantViolation, "no compatible embedding root");
    data.subfield_degrees.push_back(m);
    data.subfields.push_back(sub);
    data.subfield_images.push_back(chosen);
  }
}

}  // namespace detail

/// The canonical GF(p^n).
inline Field make_field(std::uint32_t p, std::uint32_t n, std::uint64_t size_bound = kDefaultSizeBound) {
  ensure(is_prime(p), ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
  ensure(n >= 1, ErrorKind::InvalidArgument, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    ensure(q <= size_bound && q <= kHardSizeBound, ErrorKind::FieldTooLarge,
           "GF(" + std::to_string(p) + "^" + std::to_string(n) + ") exceeds the size bound " +
               std::to_string(std::min(size_bound, kHardSizeBound)));
  }
  std::map<std::uint32_t, std::shared_ptr<const detail::FieldData>> tower;
  auto prime = detail::prime_field_data(p);
  tower[1] = prime;
  Field prime_field(tower[1]);
  for (std::uint32_t m : divisors(n)) {
    if (m == 1) continue;
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->n = m;
    d->q = 1;
    for (std::uint32_t i = 0; i < m; ++i) d->q *= p;
    d->modulus = detail::canonical_modulus(prime_field, m);
    detail::build_arithmetic(*d);
    detail::fix_embeddings(*d, tower);
    tower[m] = d;
  }
  return Field(tower.at(n));
}

/// [K : F], or NoEmbedding / FieldMismatch.
inline std::uint32_t relative_degree(const Field& K, const Field& F) {
  ensure(K.characteristic() == F.characteristic(), ErrorKind::FieldMismatch,
         F.name() + " and " + K.name() + " have different characteristic");
  ensure(K.degree() % F.degree() == 0, ErrorKind::NoEmbedding, F.name() + " does not embed in " + K.name());
  return K.degree() / F.degree();
}

/// The canonical ring homomorphism source -> target.
class Embedding {
 public:
  Embedding(Field source, Field target) : source_(std::move(source)), target_(std::move(target)) {
    relative_degree(target_, source_);
    image_ = target_.subfield_generator_image(source_.degree());
    Elem power = 1;
    for (std::uint32_t i = 0; i < source_.degree(); ++i) {
      basis_images_.push_back(power);
      power = target_.mul(power, image_);
    }
    if (source_.order() <= 4096 && source_ != target_) {
      table_.resize(source_.order());
      for (Elem a = 0; a < source_.order(); ++a) table_[a] = compute(a);
    }
  }

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Elem image_of_generator() const { return image_; }
  bool identity() const { return source_ == target_; }

  Elem operator()(Elem a) const {
    if (source_ == target_) return a;
    if (!table_.empty()) return table_[a];
    return compute(a);
  }

 private:
  Elem compute(Elem a) const {
    Elem acc = 0;
    for (std::uint32_t i = 0; i < source_.degree(); ++i) {
      std::uint32_t c = source_.coord(a, i);
      if (c != 0) acc = target_.add(acc, target_.mul(target_.from_int(c), basis_images_[i]));
    }
    return acc;
  }

  Field source_, target_;
  Elem image_ = 0;
  std::vector<Elem> basis_images_;
  std::vector<Elem> table_;
};

inline FieldElem frobenius(const FieldElem& a, std::uint64_t iterate) {
  return {a.field, a.field.frobenius(a.value, iterate)};
}

inline FieldElem embed(const FieldElem& a, const Field& target) {
  Embedding e(a.field, target);
  return {target, e(a.value)};
}

/// Whether a (in K) lies in the image of the canonical subfield of degree m.
inline bool in_subfield(const Field& K, Elem a, std::uint32_t m) { return K.frobenius(a, m) == a; }

/// Preimage of a under the canonical embedding of the degree-m subfield, if any.
inline std::optional<Elem> pull_back(const Field& K, Elem a, const Field& sub) {
  if (sub == K) return a;
  if (!in_subfield(K, a, sub.degree())) return std::nullopt;
  Embedding e(sub, K);
  for (Elem c = 0; c < sub.order(); ++c)
    if (e(c) == a) return c;
  return std::nullopt;
}

/// Intermediate fields F ⊆ E ⊆ K, one per divisor of [K:F], by degree.
inline std::vector<Field> subfields(const Field& K, const Field& F) {
  const std::uint32_t t = relative_degree(K, F);
  std::vector<Field> out;
  for (std::uint32_t d : divisors(t)) out.push_back(K.subfield(F.degree() * d));
  return out;
}

}  // namespace repdescend
