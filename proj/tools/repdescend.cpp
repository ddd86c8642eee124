// repdescend: fields of definition, descent witnesses and decompositions of
// modules over finite-dimensional algebras over finite fields.
//
// Exit codes: 0 success, 1 usage or I/O, 2 invalid mathematical input,
// 3 internal invariant violation.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "repdescend/io.hpp"
#include "repdescend/repdescend.hpp"
#include "repdescend/testing/suites.hpp"

namespace {

using namespace repdescend;
namespace fs = std::filesystem;

constexpr std::uint64_t kDefaultSeed = 24301;

struct Options {
  std::optional<std::uint64_t> size_bound;
  std::string output;
  std::uint64_t seed = kDefaultSeed;

  std::uint64_t bound() const { return size_bound ? *size_bound : size_bound_from_env(); }
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::Io: return 1;
    case ErrorKind::InternalInvariantViolation: return 3;
    default: return 2;
  }
}

void emit(const Options& opt, const io::json& j) {
  if (!opt.output.empty()) io::write_file(opt.output, j);
}

std::string poly_string(const Field& f) {
  const auto mod = f.modulus();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = mod.size(); i-- > 0;) {
    if (mod[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || mod[i] != 1) os << mod[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::string summands_line(const DecompReport& r) {
  if (r.summands.empty()) return "(no summands)";
  std::string s;
  for (const auto& x : r.summands) {
    if (!s.empty()) s += " ⊕ ";
    s += std::to_string(x.multiplicity) + "×(dim " + std::to_string(x.module.dim()) + ")";
  }
  return s;
}

/// GF(p^m) inside the module field; m defaults to the degree of the algebra's base field.
Field base_field(const ModuleRep& m, std::optional<std::uint32_t> exponent) {
  const Field& k = m.field();
  const std::uint32_t e = exponent ? *exponent : m.algebra()->base_field().degree();
  ensure(e >= 1 && k.degree() % e == 0, ErrorKind::NoEmbedding,
         "GF(" + std::to_string(k.characteristic()) + "^" + std::to_string(e) + ") is not a subfield of " + k.name());
  return k.subfield(e);
}

void print_certificate(const DescentCertificate& c) {
  std::cout << "original:      " << c.original.dim() << "-dim module over " << c.original.field().name() << "\n";
  std::cout << "minimal field: " << c.minimal_field.name() << "\n";
  std::cout << "descended:     " << c.descended.dim() << "-dim module over " << c.descended.field().name() << "\n";
  std::cout << "ed:            " << c.ed << "\n";
  std::cout << "witness:       " << (c.verify() ? "verified" : "NOT verified") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fields of definition and descent for modules over finite fields"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--size-bound", opt.size_bound, "Largest admissible field order (overrides REPDESCEND_SIZE_BOUND)")
      ->check(CLI::Range(std::uint64_t(2), kHardSizeBound));

  std::uint32_t p = 0, n = 1;
  std::optional<std::uint32_t> base_exponent;
  std::string path, path2, group_arg;
  std::size_t power_n = 2;
  std::uint32_t sub_exponent = 1;
  bool quick = false;

  auto* field_cmd = app.add_subcommand("field", "Finite fields")->require_subcommand(1);
  auto* field_make = field_cmd->add_subcommand("make", "Construct GF(p^n) with its canonical modulus");
  field_make->add_option("-p", p, "Characteristic")->required();
  field_make->add_option("-n", n, "Degree")->check(CLI::PositiveNumber);
  field_make->add_option("-o", opt.output, "Write JSON here");

  auto* module_cmd = app.add_subcommand("module", "Module files")->require_subcommand(1);
  auto* module_check = module_cmd->add_subcommand("check", "Check the module axioms");
  module_check->add_option("path", path)->required();
  auto* module_decompose = module_cmd->add_subcommand("decompose", "Krull-Schmidt decomposition");
  module_decompose->add_option("path", path)->required();
  module_decompose->add_option("-o", opt.output, "Write JSON here");
  auto* module_isom = module_cmd->add_subcommand("isom", "Isomorphism test with witness");
  module_isom->add_option("first", path)->required();
  module_isom->add_option("second", path2)->required();
  module_isom->add_option("-o", opt.output, "Write JSON here");

  auto* descent_cmd = app.add_subcommand("descent", "Fields of definition")->require_subcommand(1);
  auto* descent_minfield = descent_cmd->add_subcommand("minfield", "Minimal field of definition");
  auto* descent_witness = descent_cmd->add_subcommand("witness", "Descended module and verified witness");
  auto* descent_power = descent_cmd->add_subcommand("power-check", "Compare descent of M and M^n to a subfield");
  auto* descent_verify = descent_cmd->add_subcommand("verify", "Re-verify a certificate file");
  for (auto* c : {descent_minfield, descent_witness, descent_power}) {
    c->add_option("path", path)->required();
    c->add_option("--base-exponent", base_exponent, "Use F = GF(p^m)")->check(CLI::PositiveNumber);
  }
  descent_witness->add_option("-o", opt.output, "Write the certificate here");
  descent_power->add_option("-n", power_n, "Power")->check(CLI::PositiveNumber);
  descent_power->add_option("--subfield-exponent", sub_exponent, "Test descent to GF(p^e)")
      ->required()
      ->check(CLI::PositiveNumber);
  descent_verify->add_option("path", path)->required();

  auto* group_cmd = app.add_subcommand("group", "Group algebras")->require_subcommand(1);
  auto* group_reptype = group_cmd->add_subcommand("reptype", "Representation type of GF(p)[G]");
  group_reptype->add_option("--group", group_arg, "Builtin name or JSON table file")->required();
  group_reptype->add_option("-p", p, "Characteristic")->required();

  auto* demo_cmd = app.add_subcommand("demo", "Worked demonstrations")->require_subcommand(1);
  auto* demo_quaternion = demo_cmd->add_subcommand("quaternion", "Quaternion module over GF(p^n) and its descent");
  demo_quaternion->add_option("-p", p, "Odd prime")->required();
  demo_quaternion->add_option("-n", n, "Degree of the module field")->check(CLI::PositiveNumber);
  demo_quaternion->add_option("-o", opt.output, "Write the certificate here");

  auto* selftest = app.add_subcommand("selftest", "Seeded property suites");
  selftest->group("");
  selftest->add_option("--seed", opt.seed, "Seed (default 24301)");
  selftest->add_flag("--quick", quick, "Reduced case counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const std::uint64_t bound = opt.bound();
    if (*field_make) {
      Field f = make_field(p, n, bound);
      std::cout << f.name() << " = GF(" << p << ")[x]/(" << poly_string(f) << ")\n";
      std::cout << "generator x = " << f.generator() << ", frobenius(x) = " << f.frobenius(f.generator(), 1) << "\n";
      emit(opt, io::to_json(f));
    } else if (*module_check) {
      ModuleRep m = io::load_module(path, bound);
      auto violations = check_module(m);
      if (violations.empty()) {
        std::cout << "valid\n";
        return 0;
      }
      for (const auto& v : violations) std::cout << v.describe() << "\n";
      return 2;
    } else if (*module_decompose) {
      ModuleRep m = io::load_module(path, bound);
      DecompReport r = decompose(m);
      std::cout << summands_line(r) << "\n";
      for (std::size_t i = 0; i < r.summands.size(); ++i) {
        const auto& s = r.summands[i];
        std::cout << "  summand " << i << ": dim " << s.module.dim() << " x " << s.multiplicity
                  << ", End^ss " << end_ring(s.module).quotient().algebra->dim() << "-dim over " << m.field().name()
                  << "\n";
      }
      emit(opt, io::to_json(r));
    } else if (*module_isom) {
      ModuleRep a = io::load_module(path, bound);
      ModuleRep b = io::load_module(path2, bound);
      auto w = is_isomorphic(a, b);
      std::cout << (w ? "isomorphic" : "not isomorphic") << "\n";
      emit(opt, io::iso_to_json(w));
    } else if (*descent_minfield) {
      ModuleRep m = io::load_module(path, bound);
      Field f = base_field(m, base_exponent);
      std::cout << minimal_field(m, f).name() << "\n";
    } else if (*descent_witness) {
      ModuleRep m = io::load_module(path, bound);
      DescentCertificate c = descend(m, base_field(m, base_exponent));
      print_certificate(c);
      emit(opt, io::to_json(c));
    } else if (*descent_power) {
      ModuleRep m = io::load_module(path, bound);
      Field f = base_field(m, base_exponent);
      ensure(m.field().degree() % sub_exponent == 0, ErrorKind::NoEmbedding,
             "GF(p^" + std::to_string(sub_exponent) + ") is not a subfield of " + m.field().name());
      Field k0 = m.field().subfield(sub_exponent);
      auto [powered, single] = power_descent_check(m, power_n, k0, f);
      std::cout << "M^" << power_n << " descends to " << k0.name() << ": " << (powered ? "yes" : "no") << "\n";
      std::cout << "M descends to " << k0.name() << ": " << (single ? "yes" : "no") << "\n";
      if (powered != single) fail(ErrorKind::InternalInvariantViolation, "power and module disagree on descent");
    } else if (*descent_verify) {
      DescentCertificate c = io::certificate_from_json(io::read_file(path), bound);
      print_certificate(c);
    } else if (*group_reptype) {
      GroupTable g = fs::exists(group_arg) ? io::group_from_json(io::read_file(group_arg)) : builtin_group(group_arg);
      RepTypeVerdict v = rep_type(g, make_field(p, 1, bound));
      std::cout << v.summary() << "\n";
    } else if (*demo_quaternion) {
      QuaternionDemo q = quaternion_demo(p, n, bound);
      std::cout << "a = " << q.a << ", b = " << q.b << " (a^2 + b^2 = -1 in GF(" << p << "))\n";
      std::cout << "module axioms: " << (check_module(q.module).empty() ? "valid" : "INVALID") << "\n";
      print_certificate(q.certificate);
      emit(opt, io::to_json(q.certificate));
    } else if (*selftest) {
      testing::Sizes sizes;
      if (quick) sizes = {20, 6, 10, 10, 5, 4};
      auto results = testing::run_suites(opt.seed, std::cout, sizes);
      for (const auto& r : results)
        if (!r.pass) return 3;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
