#pragma once

// Representation type of group algebras and the quaternion descent demo.

#include <optional>
#include <string>
#include <utility>

#include "repdescend/descent.hpp"
#include "repdescend/group.hpp"

namespace repdescend {

enum class RepType { Finite, Infinite };

inline const char* to_string(RepType t) { return t == RepType::Finite ? "Finite" : "Infinite"; }

struct RepTypeVerdict {
  GroupTable group;
  std::uint32_t p = 0;
  bool sylow_cyclic = false;
  RepType rep_type = RepType::Infinite;
  /// Essential dimension of the module functor: 0 when finite type, else unbounded.
  bool ed_functor_zero = false;
  /// "semisimple" when p does not divide |G|.
  std::string note;

  std::string summary() const {
    std::string s = to_string(rep_type);
    s += ed_functor_zero ? "; ed(Mod_FG)=0" : "; ed(Mod_FG)=Infinite";
    if (!note.empty()) s += " (" + note + ")";
    return s;
  }
};

inline RepTypeVerdict rep_type(const GroupTable& g, const Field& f) {
  RepTypeVerdict v;
  v.group = g;
  v.p = f.characteristic();
  v.sylow_cyclic = sylow_cyclic(g, v.p);
  v.rep_type = v.sylow_cyclic ? RepType::Finite : RepType::Infinite;
  v.ed_functor_zero = v.sylow_cyclic;
  if (g.order() % v.p != 0) v.note = "semisimple";
  return v;
}

/// F{x, y}/(x^2 = y^2 = -1, xy = -yx) on the basis 1, x, y, xy.
inline AlgebraPtr quaternion_algebra(const Field& f) {
  ensure(f.characteristic() != 2, ErrorKind::CharTwoDegenerate,
         "quaternion relations collapse in characteristic 2 since -1 = 1");
  const Elem one = 1, m1 = f.neg(1);
  std::vector<Elem> s(64, 0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, Elem c) { s[(i * 4 + j) * 4 + k] = c; };
  for (std::size_t i = 0; i < 4; ++i) {
    set(0, i, i, one);
    set(i, 0, i, one);
  }
  set(1, 1, 0, m1);
  set(1, 2, 3, one);
  set(1, 3, 2, m1);
  set(2, 1, 3, m1);
  set(2, 2, 0, m1);
  set(2, 3, 1, one);
  set(3, 1, 2, one);
  set(3, 2, 1, m1);
  set(3, 3, 0, m1);
  return std::make_shared<const Algebra>(f, 4, std::move(s), std::vector<Elem>{1, 0, 0, 0});
}

/// Least (a, b) in GF(p)^2, a varying slowest, with a^2 + b^2 = -1.
inline std::pair<Elem, Elem> sum_of_two_squares_minus_one(const Field& f) {
  const Elem target = f.neg(1);
  for (Elem a = 0; a < f.order(); ++a)
    for (Elem b = 0; b < f.order(); ++b)
      if (f.add(f.mul(a, a), f.mul(b, b)) == target) return {a, b};
  fail(ErrorKind::InternalInvariantViolation, "no solution of a^2 + b^2 = -1");
}

/// The 2-dimensional module x -> [[a, b], [b, -a]], y -> [[b, -a], [-a, -b]] over GF(p).
inline ModuleRep quaternion_module(const AlgebraPtr& alg, Elem a, Elem b) {
  const Field& f = alg->base_field();
  Matrix x(f, 2, 2, {a, b, b, f.neg(a)});
  Matrix y(f, 2, 2, {b, f.neg(a), f.neg(a), f.neg(b)});
  return ModuleRep(alg, f, 2, {Matrix::identity(f, 2), x, y, x * y});
}

struct QuaternionDemo {
  Elem a = 0, b = 0;
  AlgebraPtr algebra;
  /// The module over GF(p^n), presented in a non-rational basis when n > 1.
  ModuleRep module;
  DescentCertificate certificate;
};

inline QuaternionDemo quaternion_demo(std::uint32_t p, std::uint32_t n, std::uint64_t size_bound = kDefaultSizeBound) {
  ensure(p != 2, ErrorKind::CharTwoDegenerate,
         "p = 2: the relations x^2 = y^2 = -1, xy = -yx degenerate because -1 = 1");
  Field k = make_field(p, n, size_bound);
  Field f = k.subfield(1);
  QuaternionDemo out;
  std::tie(out.a, out.b) = sum_of_two_squares_minus_one(f);
  out.algebra = quaternion_algebra(f);
  ModuleRep rational = quaternion_module(out.algebra, out.a, out.b);
  Matrix shear(k, 2, 2, {1, k.generator(), 0, 1});
  out.module = conjugate(base_change(rational, k), shear);
  out.certificate = descend(out.module, f);
  return out;
}

}  // namespace repdescend
