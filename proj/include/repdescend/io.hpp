#pragma once

// JSON reading and writing for fields, matrices, algebras, modules, groups,
// decomposition reports and descent certificates.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "repdescend/descent.hpp"
#include "repdescend/group.hpp"

namespace repdescend::io {

using json = nlohmann::json;

namespace detail {

template <class F>
auto parse_guard(const std::string& what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, what + ": " + e.what());
  }
}

}  // namespace detail

inline json to_json(const Field& f) {
  json mod = json::array();
  for (auto c : f.modulus()) mod.push_back(c);
  return {{"p", f.characteristic()}, {"n", f.degree()}, {"modulus", mod}};
}

inline Field field_from_json(const json& j, std::uint64_t size_bound = size_bound_from_env()) {
  return detail::parse_guard("field", [&] {
    Field f = make_field(j.at("p").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(), size_bound);
    if (j.contains("modulus")) {
      auto given = j.at("modulus").get<std::vector<std::uint32_t>>();
      auto canon = f.modulus();
      ensure(std::equal(given.begin(), given.end(), canon.begin(), canon.end()), ErrorKind::Parse,
             "modulus differs from the canonical modulus of " + f.name());
    }
    return f;
  });
}

inline json elem_to_json(const Field& f, Elem a) { return f.coords(a); }

/// Coordinate array, or a plain integer read as the packed value.
inline Elem elem_from_json(const Field& f, const json& j) {
  return detail::parse_guard("field element", [&] {
    if (j.is_number_integer()) {
      auto v = j.get<std::int64_t>();
      ensure(v >= 0 && std::uint64_t(v) < f.order(), ErrorKind::Parse, "element out of range for " + f.name());
      return Elem(v);
    }
    auto c = j.get<std::vector<std::int64_t>>();
    ensure(c.size() == f.degree(), ErrorKind::Parse, "element needs " + std::to_string(f.degree()) + " coordinates");
    std::vector<std::uint32_t> coords;
    for (auto x : c) {
      ensure(x >= 0 && std::uint64_t(x) < f.characteristic(), ErrorKind::Parse, "coordinate out of range");
      coords.push_back(std::uint32_t(x));
    }
    return f.from_coords(coords);
  });
}

inline json to_json(const Matrix& m) {
  json entries = json::array();
  for (Elem e : m.data()) entries.push_back(elem_to_json(m.field(), e));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline Matrix matrix_from_json(const Field& f, const json& j) {
  return detail::parse_guard("matrix", [&] {
    const auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    ensure(entries.is_array() && entries.size() == rows * cols, ErrorKind::Parse, "matrix entry count mismatch");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i) m.data()[i] = elem_from_json(f, entries[i]);
    return m;
  });
}

inline json to_json(const GroupTable& g) {
  return {{"order", g.order()}, {"identity", g.identity()}, {"table", g.table()}};
}

inline GroupTable group_from_json(const json& j) {
  return detail::parse_guard("group", [&] {
    if (j.is_string()) return builtin_group(j.get<std::string>());
    auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    if (j.contains("order"))
      ensure(j.at("order").get<std::size_t>() == table.size(), ErrorKind::InvalidGroup, "order does not match the table");
    return GroupTable(std::move(table), j.value("identity", std::size_t(0)));
  });
}

inline json to_json(const Algebra& a) {
  const Field& f = a.base_field();
  json structure = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto prod = a.product(i, j);
      if (std::all_of(prod.begin(), prod.end(), [](Elem e) { return e == 0; })) continue;
      json coeffs = json::array();
      for (Elem c : prod) coeffs.push_back(elem_to_json(f, c));
      structure.push_back({i, j, coeffs});
    }
  json one = json::array();
  for (Elem c : a.one()) one.push_back(elem_to_json(f, c));
  return {{"field", to_json(f)}, {"dim", a.dim()}, {"one", one}, {"structure", structure}};
}

inline json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  ensure(bool(in), ErrorKind::Io, "cannot open " + path.string());
  return detail::parse_guard(path.string(), [&] { return json::parse(in); });
}

/// Inline object, {"group": ..., "field": ...} shorthand, or a path relative to base_dir.
inline AlgebraPtr algebra_from_json(const json& j, const std::filesystem::path& base_dir = {},
                                    std::uint64_t size_bound = size_bound_from_env()) {
  if (j.is_string()) {
    auto path = base_dir / j.get<std::string>();
    return algebra_from_json(read_file(path), path.parent_path(), size_bound);
  }
  return detail::parse_guard("algebra", [&] {
    Field f = field_from_json(j.at("field"), size_bound);
    if (j.contains("group")) return group_algebra(group_from_json(j.at("group")), f);
    const auto m = j.at("dim").get<std::size_t>();
    std::vector<Elem> s(m * m * m, 0);
    for (const auto& entry : j.at("structure")) {
      const auto i = entry.at(0).get<std::size_t>(), k = entry.at(1).get<std::size_t>();
      ensure(i < m && k < m, ErrorKind::Parse, "structure index out of range");
      const auto& coeffs = entry.at(2);
      ensure(coeffs.size() == m, ErrorKind::Parse, "structure coefficient vector has the wrong length");
      for (std::size_t l = 0; l < m; ++l) s[(i * m + k) * m + l] = elem_from_json(f, coeffs[l]);
    }
    std::vector<Elem> one;
    for (const auto& c : j.at("one")) one.push_back(elem_from_json(f, c));
    return std::make_shared<const Algebra>(f, m, std::move(s), std::move(one));
  });
}

inline json to_json(const ModuleRep& m) {
  json action = json::array();
  for (const auto& a : m.action()) action.push_back(to_json(a));
  return {{"algebra", to_json(*m.algebra())}, {"field", to_json(m.field())}, {"dim", m.dim()}, {"action", action}};
}

inline ModuleRep module_from_json(const json& j, const std::filesystem::path& base_dir = {},
                                  std::uint64_t size_bound = size_bound_from_env()) {
  return detail::parse_guard("module", [&] {
    AlgebraPtr alg = algebra_from_json(j.at("algebra"), base_dir, size_bound);
    Field f = field_from_json(j.at("field"), size_bound);
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<Matrix> action;
    for (const auto& a : j.at("action")) action.push_back(matrix_from_json(f, a));
    return ModuleRep(alg, f, dim, std::move(action));
  });
}

inline ModuleRep load_module(const std::filesystem::path& path, std::uint64_t size_bound = size_bound_from_env()) {
  return module_from_json(read_file(path), path.parent_path(), size_bound);
}

inline json to_json(const DecompReport& r) {
  json summands = json::array();
  for (const auto& s : r.summands) summands.push_back({{"module", to_json(s.module)}, {"multiplicity", s.multiplicity}});
  return {{"module", to_json(r.module)}, {"summands", summands}, {"basis_change", to_json(r.basis_change)}};
}

inline json iso_to_json(const std::optional<Matrix>& w) {
  if (!w) return {{"isomorphic", false}};
  return {{"isomorphic", true}, {"witness", to_json(*w)}};
}

inline json to_json(const DescentCertificate& c) {
  return {{"original", to_json(c.original)},
          {"minimal_field", to_json(c.minimal_field)},
          {"descended", to_json(c.descended)},
          {"witness", to_json(c.witness)},
          {"ed", c.ed}};
}

/// Parses and verifies; an unverifiable certificate is an InvalidArgument.
inline DescentCertificate certificate_from_json(const json& j, std::uint64_t size_bound = size_bound_from_env()) {
  return detail::parse_guard("certificate", [&] {
    DescentCertificate c;
    c.original = module_from_json(j.at("original"), {}, size_bound);
    c.minimal_field = field_from_json(j.at("minimal_field"), size_bound);
    c.descended = module_from_json(j.at("descended"), {}, size_bound);
    c.witness = matrix_from_json(c.original.field(), j.at("witness"));
    c.ed = j.value("ed", 0u);
    ensure(c.verify(), ErrorKind::InvalidArgument, "certificate witness does not verify");
    return c;
  });
}

inline void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  ensure(bool(out), ErrorKind::Io, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace repdescend::io
