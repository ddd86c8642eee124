#pragma once

// Galois twists, stabilizers, minimal fields of definition and descent
// certificates for modules over finite fields.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repdescend/hom.hpp"

namespace repdescend {

namespace detail {

inline void require_base(const ModuleRep& m, const Field& f) {
  relative_degree(m.field(), f);
  const Field& k = m.field();
  const std::uint32_t step = f.degree();
  for (Elem c : m.embedded_structure())
    ensure(k.frobenius(c, step) == c, ErrorKind::AlgebraNotDefinedOverF,
           "algebra structure constants are not defined over " + f.name());
  for (Elem c : m.embedded_one())
    ensure(k.frobenius(c, step) == c, ErrorKind::AlgebraNotDefinedOverF,
           "algebra identity is not defined over " + f.name());
}

/// Entrywise x -> x^(p^absolute).
inline ModuleRep twist_absolute(const ModuleRep& m, std::uint64_t absolute) {
  std::vector<Matrix> act;
  for (const auto& a : m.action()) act.push_back(entrywise_frobenius(a, absolute));
  return ModuleRep(m.algebra(), m.field(), m.dim(), std::move(act));
}

}  // namespace detail

/// The Galois twist by phi^iterate, phi the Frobenius generating Gal(K/F).
inline ModuleRep twist(const ModuleRep& m, std::int64_t iterate, const Field& f) {
  detail::require_base(m, f);
  const std::int64_t t = relative_degree(m.field(), f);
  const std::int64_t k = ((iterate % t) + t) % t;
  return detail::twist_absolute(m, std::uint64_t(k) * f.degree());
}

struct TwistOrbit {
  ModuleRep base;
  std::uint32_t galois_order = 1;
  /// twist(base, j) for j < stabilizer_index.
  std::vector<ModuleRep> orbit;
  std::uint32_t stabilizer_index = 1;
};

inline TwistOrbit twist_stabilizer(const ModuleRep& m, const Field& f) {
  detail::require_base(m, f);
  ensure(m.dim() > 0 && is_indecomposable(m), ErrorKind::NotIndecomposable, "twist_stabilizer needs an indecomposable module");
  TwistOrbit out;
  out.base = m;
  out.galois_order = relative_degree(m.field(), f);
  for (std::uint32_t k : divisors(out.galois_order)) {
    if (indecomposable_isomorphism(twist(m, k, f), m)) {
      out.stabilizer_index = k;
      break;
    }
  }
  for (std::uint32_t j = 0; j < out.stabilizer_index; ++j) out.orbit.push_back(twist(m, j, f));
  return out;
}

namespace detail {

// Index j with twist(summands[i], by) isomorphic to summands[j], if any.
inline std::optional<std::size_t> twisted_match(const std::vector<Summand>& s, std::size_t i, std::uint64_t absolute) {
  ModuleRep tw = twist_absolute(s[i].module, absolute);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (indecomposable_isomorphism(tw, s[j].module)) return j;
  return std::nullopt;
}

inline Field minimal_field_from(const DecompReport& d, const Field& k, const Field& f) {
  const std::uint32_t t = relative_degree(k, f);
  for (std::uint32_t step : divisors(t)) {
    bool stable = true;
    for (std::size_t i = 0; i < d.summands.size() && stable; ++i) {
      auto j = twisted_match(d.summands, i, std::uint64_t(step) * f.degree());
      stable = j && d.summands[*j].multiplicity == d.summands[i].multiplicity;
    }
    if (stable) return k.subfield(f.degree() * step);
  }
  return k;
}

}  // namespace detail

/// The least intermediate field F <= K0 <= K over which m is defined.
inline Field minimal_field(const ModuleRep& m, const Field& f) {
  detail::require_base(m, f);
  return detail::minimal_field_from(decompose(m), m.field(), f);
}

struct DescentCertificate {
  ModuleRep original;
  Field minimal_field;
  ModuleRep descended;
  /// conjugate(base_change(descended, K), witness) equals original.
  Matrix witness;
  std::uint32_t ed = 0;

  bool verify() const {
    if (descended.field() != minimal_field || !same_algebra(descended, original)) return false;
    if (!original.field().contains(minimal_field)) return false;
    return verify_isomorphism(base_change(descended, original.field()), original, witness);
  }
};

struct DescentOptions {
  /// Also check K (x) (M1 restricted to K0) = S^|H| for each orbit sum S.
  bool check_orbit_identity = false;
};

inline DescentCertificate descend(const ModuleRep& m, const Field& f, const DescentOptions& opts = {}) {
  detail::require_base(m, f);
  const Field& k = m.field();
  DecompReport d = decompose(m);
  const Field k0 = detail::minimal_field_from(d, k, f);
  DescentCertificate cert{m, k0, m, Matrix::identity(k, m.dim()), 0};
  if (auto direct = realize_over(m, k0)) {
    cert.descended = std::move(*direct);
    return cert;
  }

  const std::uint32_t n0 = k0.degree();
  const std::uint32_t t0 = relative_degree(k, k0);
  std::vector<bool> done(d.summands.size(), false);
  ModuleRep descended = zero_module(m.algebra(), k0);
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    if (done[i]) continue;
    const Summand& s = d.summands[i];
    // orbit of s under psi = phi^[K0:F], stabilizer H = <psi^j>
    std::uint32_t j = t0;
    for (std::uint32_t cand : divisors(t0)) {
      if (indecomposable_isomorphism(detail::twist_absolute(s.module, std::uint64_t(cand) * n0), s.module)) {
        j = cand;
        break;
      }
    }
    std::vector<ModuleRep> orbit;
    for (std::uint32_t r = 0; r < j; ++r) {
      auto idx = detail::twisted_match(d.summands, i, std::uint64_t(r) * n0);
      ensure(idx.has_value(), ErrorKind::InternalInvariantViolation, "twist of a summand is not a summand");
      ensure(d.summands[*idx].multiplicity == s.multiplicity, ErrorKind::InternalInvariantViolation,
             "twist-equivalent summands have different multiplicities");
      done[*idx] = true;
      orbit.push_back(d.summands[*idx].module);
    }
    const Field k1 = k.subfield(n0 * j);
    DecompReport r = decompose(restrict_scalars(s.module, k1));
    std::optional<ModuleRep> n1;
    for (const auto& cand : r.summands) {
      if (cand.module.dim() == s.module.dim() && is_isomorphic(base_change(cand.module, k), s.module)) {
        n1 = cand.module;
        break;
      }
    }
    ensure(n1.has_value(), ErrorKind::InternalInvariantViolation,
           "no summand of the restriction to " + k1.name() + " extends to the orbit representative");
    ModuleRep orbit_form = restrict_scalars(*n1, k0);
    if (opts.check_orbit_identity) {
      ModuleRep sum = direct_sum(orbit, m.algebra(), k);
      ModuleRep lhs = base_change(restrict_scalars(s.module, k0), k);
      ensure(is_isomorphic(lhs, power(sum, t0 / j)).has_value(), ErrorKind::InternalInvariantViolation,
             "restriction of an orbit representative is not a power of its orbit sum");
      ensure(is_isomorphic(base_change(orbit_form, k), sum).has_value(), ErrorKind::InternalInvariantViolation,
             "descended orbit form does not extend to the orbit sum");
    }
    descended = direct_sum(descended, power(orbit_form, s.multiplicity));
  }
  auto w = is_isomorphic(base_change(descended, k), m);
  ensure(w.has_value(), ErrorKind::InternalInvariantViolation, "descended module does not extend to the original");
  cert.descended = std::move(descended);
  cert.witness = std::move(*w);
  return cert;
}

/// (M^n is defined over K0, M is defined over K0), each decided separately.
inline std::pair<bool, bool> power_descent_check(const ModuleRep& m, std::size_t n, const Field& k0, const Field& f) {
  ensure(n >= 1, ErrorKind::InvalidArgument, "power must be at least 1");
  ensure(m.field().contains(k0), ErrorKind::NoEmbedding, k0.name() + " is not a subfield of " + m.field().name());
  ensure(k0.contains(f), ErrorKind::NoEmbedding, f.name() + " is not a subfield of " + k0.name());
  const bool powered = k0.contains(minimal_field(power(m, n), f));
  const bool single = k0.contains(minimal_field(m, f));
  return {powered, single};
}

inline std::pair<bool, bool> power_descent_check(const ModuleRep& m, std::size_t n, const Field& k0) {
  return power_descent_check(m, n, k0, m.algebra()->base_field());
}

struct EdReport {
  std::uint32_t ed = 0;
  Field minimal_field;
  std::string justification;
};

inline EdReport ed_report(const ModuleRep& m, const Field& f) {
  Field k0 = minimal_field(m, f);
  std::string why = "defined over " + k0.name() + ", a finite extension of " + f.name() +
                    ", so the transcendence degree of a minimal field of definition is 0";
  return {0, k0, why};
}

struct FForm {
  /// Indecomposable module over F.
  ModuleRep form;
  /// Split injection M -> K (x) form and a left inverse: projection * injection = 1.
  Matrix injection;
  Matrix projection;
};

inline FForm find_f_form(const ModuleRep& m, const Field& f) {
  detail::require_base(m, f);
  ensure(m.dim() > 0 && is_indecomposable(m), ErrorKind::NotIndecomposable, "find_f_form needs an indecomposable module");
  const Field& k = m.field();
  DecompReport r = decompose(restrict_scalars(m, f));
  for (const auto& s : r.summands) {
    ModuleRep up = base_change(s.module, k);
    auto into = hom_space(m, up).basis;
    if (into.empty()) continue;
    auto out = hom_space(up, m).basis;
    for (const auto& pi : out) {
      for (const auto& iota : into) {
        Matrix c = pi * iota;
        auto c_inv = invert(c);
        if (!c_inv) continue;
        FForm res{s.module, iota, *c_inv * pi};
        ensure((res.projection * res.injection).is_identity(), ErrorKind::InternalInvariantViolation, "split pair does not compose to 1");
        return res;
      }
    }
  }
  fail(ErrorKind::InternalInvariantViolation, "no summand of the restriction contains the module after base change");
}

}  // namespace repdescend
