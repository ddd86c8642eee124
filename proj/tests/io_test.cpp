#include <gtest/gtest.h>

#include <filesystem>

#include "repdescend/io.hpp"
#include "repdescend/testing/random.hpp"

using namespace repdescend;
namespace rt = repdescend::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInvariantViolation;
}

}  // namespace

TEST(Io, FieldRoundTrip) {
  Field f = make_field(3, 2);
  io::json j = io::to_json(f);
  EXPECT_EQ(j["modulus"], io::json({1, 0, 1}));
  EXPECT_EQ(io::field_from_json(j), f);
  j["modulus"] = {2, 1, 1};
  EXPECT_EQ(kind_of([&] { io::field_from_json(j); }), ErrorKind::Parse);
}

TEST(Io, ModuleRoundTrip) {
  rt::Rng rng(1);
  rt::Algebras algs(make_field(3, 1));
  Field k = make_field(3, 2);
  for (auto fam : {rt::Family::C4, rt::Family::Quaternion}) {
    ModuleRep m = rt::random_module(algs, fam, k, 2, rng);
    ModuleRep back = io::module_from_json(io::json::parse(io::to_json(m).dump()));
    EXPECT_EQ(*back.algebra(), *m.algebra());
    EXPECT_EQ(back.action(), m.action());
  }
}

TEST(Io, CertificateRoundTripAndTamper) {
  rt::Algebras algs(make_field(2, 1));
  Field k = make_field(2, 4);
  ModuleRep m = rt::cyclic_module(algs.c3, Matrix(k, 1, 1, {k.subfield_generator_image(2)}));
  io::json j = io::to_json(descend(m, algs.prime));
  DescentCertificate c = io::certificate_from_json(j);
  EXPECT_EQ(c.minimal_field.name(), "GF(4)");
  j["witness"]["entries"][0] = io::json::array({0, 0, 0, 0});
  EXPECT_EQ(kind_of([&] { io::certificate_from_json(j); }), ErrorKind::InvalidArgument);
}

TEST(Io, Errors) {
  EXPECT_EQ(kind_of([] { io::read_file("/nonexistent/module.json"); }), ErrorKind::Io);
  EXPECT_EQ(kind_of([] { io::module_from_json(io::json::parse(R"({"dim": 1})")); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::elem_from_json(make_field(2, 2), io::json(7)); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { io::elem_from_json(make_field(2, 2), io::json::array({1})); }), ErrorKind::Parse);
  EXPECT_EQ(io::elem_from_json(make_field(2, 2), io::json::array({1, 1})), 3u);
  auto shape = io::json::parse(R"({"algebra": {"group": "c2", "field": {"p": 2, "n": 1}}, "field": {"p": 2, "n": 1},
                                   "dim": 2, "action": [{"rows": 2, "cols": 2, "entries": [1, 0, 0, 1]},
                                                        {"rows": 1, "cols": 1, "entries": [1]}]})");
  EXPECT_EQ(kind_of([&] { io::module_from_json(shape); }), ErrorKind::InvalidModule);
}

TEST(Io, GroupTables) {
  auto g = io::group_from_json(io::json::parse(R"({"table": [[0, 1], [1, 0]]})"));
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(kind_of([] { io::group_from_json(io::json::parse(R"({"table": [[0, 1], [0, 1]]})")); }),
            ErrorKind::InvalidGroup);
  EXPECT_EQ(io::group_from_json("s3").order(), 6u);
}
