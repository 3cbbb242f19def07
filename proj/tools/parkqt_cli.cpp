// parkqt: command-line access to the three routes for <Delta_{h_J} C_p 1, e_n>,
// the identity suites, family enumeration and single parking-function statistics.
//
// Exit codes: 0 success, 1 verification failure or route disagreement,
// 2 invalid input (including exceeded caps).

#include "parkqt/macdonald.hpp"
#include "parkqt/ndinv.hpp"
#include "parkqt/serialize.hpp"
#include "parkqt/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace parkqt;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

int env_cap(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    int cap = std::stoi(v, &used);
    if (used == std::string(v).size() && cap > 0) return cap;
  } catch (const std::exception&) {
  }
  throw InvalidInput(std::string(name) + " must be a positive integer");
}

Composition parse_composition(const std::string& text) {
  Composition p;
  try {
    p = parse_parts(text);
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("--p: ") + e.what());
  }
  if (p.empty() || !is_composition(p)) throw InvalidInput("--p must be a nonempty list of positive integers");
  return p;
}

std::string render(const QtPoly& poly) { return poly.is_zero() ? "0" : poly.to_string(); }

struct Caps {
  std::optional<int> degree;
  std::optional<int> enumeration;

  int degree_cap() const { return degree ? *degree : env_cap("PARKQT_DEGREE_CAP", kDefaultDegreeCap); }
  int enum_cap() const { return enumeration ? *enumeration : env_cap("PARKQT_ENUM_CAP", kDefaultEnumCap); }
};

void add_caps(CLI::App* cmd, Caps& caps) {
  cmd->add_option("--degree-cap", caps.degree, "symmetric-function degree cap (env PARKQT_DEGREE_CAP)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--enum-cap", caps.enumeration, "parking-function size cap (env PARKQT_ENUM_CAP)")
      ->check(CLI::PositiveNumber);
}

// ---------------------------------------------------------------- poly

struct PolyArgs {
  int J = 0;
  std::string p;
  std::string method = "all";
  std::string format = "text";
  std::optional<std::string> expect;
  Caps caps;
};

int cmd_poly(const PolyArgs& a) {
  if (a.J < 0) throw InvalidInput("--J must be nonnegative");
  const Composition p = parse_composition(a.p);
  PolyRecord rec{a.J, p, size(p), a.method, {}};
  if (a.method == "operator") {
    rec.poly = lhs_poly(a.J, p, a.caps.degree_cap());
  } else if (a.method == "recursion") {
    rec.poly = pi_poly(a.J, p);
  } else if (a.method == "enumeration") {
    rec.poly = family_poly(a.J, p, a.caps.enum_cap());
  } else if (a.method == "classical") {
    rec.poly = classical_poly(a.J, p, a.caps.enum_cap());
  } else {
    const QtPoly op = lhs_poly(a.J, p, a.caps.degree_cap());
    const QtPoly rc = pi_poly(a.J, p);
    const QtPoly en = family_poly(a.J, p, a.caps.enum_cap());
    if (op != rc || rc != en) {
      std::cerr << "routes disagree\n  operator:    " << render(op) << "\n  recursion:   " << render(rc)
                << "\n  enumeration: " << render(en) << "\n";
      return kFailure;
    }
    rec.poly = rc;
  }
  std::cout << (a.format == "json" ? to_json(rec) : render(rec.poly)) << "\n";
  if (a.expect && *a.expect != render(rec.poly)) {
    std::cerr << "expected " << *a.expect << "\n";
    return kFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> max_degree, max_size, J, max_n;
  bool list = false;
  bool verbose = false;
  bool timing = false;
  Caps caps;
};

int cmd_verify(const VerifyArgs& a) {
  if (a.list) {
    for (const auto& [name, desc] : suite_names()) std::cout << name << "  " << desc << "\n";
    return kOk;
  }
  VerifyConfig cfg;
  cfg.max_degree = a.max_degree;
  cfg.max_size = a.max_size;
  cfg.max_J = a.J;
  cfg.max_n = a.max_n;
  cfg.degree_cap = a.caps.degree_cap();
  cfg.enum_cap = a.caps.enum_cap();
  bool known = false;
  for (const auto& [name, desc] : suite_names()) known = known || name == a.suite;
  if (!known) throw InvalidInput("unknown suite \"" + a.suite + "\" (see verify --list)");
  VerifyReport rep = verify_suite(a.suite, cfg);
  if (a.verbose)
    for (const auto& c : rep.checks) std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name << "\n";
  if (const CheckResult* f = rep.first_failure()) {
    std::cout << "first failure: " << f->name << "\n  lhs: " << f->lhs << "\n  rhs: " << f->rhs << "\n";
  }
  std::cout << rep.suite << ": " << rep.checks.size() << " checks, " << rep.failures() << " failed";
  if (a.timing) std::cout << " (" << rep.seconds << " s)";
  std::cout << "\n" << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return rep.ok() ? kOk : kFailure;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int J = 0;
  std::string p;
  std::optional<int> n;
  std::string format = "text";
  Caps caps;
};

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.J < 0) throw InvalidInput("--J must be nonnegative");
  if (a.p.empty() == !a.n) throw InvalidInput("give exactly one of --p and --n");
  std::vector<ParkingFunction> members;
  if (a.n) {
    if (*a.n < 1) throw InvalidInput("--n must be positive");
    members = enumerate_family(a.J, *a.n, a.caps.enum_cap());
  } else {
    members = enumerate_family(a.J, parse_composition(a.p), a.caps.enum_cap());
  }
  std::vector<PfRow> rows;
  for (const auto& pf : members) rows.push_back(make_row(pf, a.J));
  if (a.format == "json") {
    std::cout << rows_to_json(rows) << "\n";
  } else if (a.format == "csv") {
    std::cout << csv_header() << "\n";
    for (const auto& r : rows) std::cout << csv_row(r) << "\n";
  } else {
    for (const auto& r : rows) std::cout << text_row(r) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- stats

struct StatsArgs {
  std::string U, V;
  std::optional<int> J;
  std::string format = "text";
};

int cmd_stats(const StatsArgs& a) {
  std::vector<int> U, V;
  try {
    U = parse_parts(a.U);
    V = parse_parts(a.V);
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
  const ParkingFunction pf = pf_validate(U, V);
  if (a.J) {
    if (!in_family(pf, *a.J) || !is_area_sequence(big_area_sequence(pf, *a.J)))
      throw InvalidInput("parking function is not in PF(" + std::to_string(*a.J) + "," +
                         std::to_string(pf.size() - *a.J) + ")");
    PfRow r = make_row(pf, *a.J);
    if (a.format == "json")
      std::cout << rows_to_json({r}) << "\n";
    else if (a.format == "csv")
      std::cout << csv_header() << "\n" << csv_row(r) << "\n";
    else
      std::cout << text_row(r) << "\n";
    return kOk;
  }
  std::cout << "area=" << area(pf) << " dinv=" << dinv(pf) << " sigma=" << join(diagonal_word(pf))
            << " p=" << to_string(diag_comp(pf)) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parkqt: Delta_{h_J} C_p 1 by operators, recursion and parking functions"};
  app.require_subcommand(1);

  PolyArgs pa;
  auto* poly = app.add_subcommand("poly", "<Delta_{h_J} C_p 1, e_n> as a polynomial in t, q");
  poly->add_option("--J", pa.J, "number of small cars")->required();
  poly->add_option("--p", pa.p, "composition, comma separated")->required();
  poly->add_option("--method", pa.method, "all compares the first three; classical uses dinv instead of ndinv")
      ->check(CLI::IsMember({"operator", "recursion", "enumeration", "all", "classical"}));
  poly->add_option("--expect", pa.expect, "exit 1 unless the text rendering equals this");
  poly->add_option("--format", pa.format)->check(CLI::IsMember({"text", "json"}));
  add_caps(poly, pa.caps);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--suite", va.suite, "suite name or all");
  verify->add_option("--max-degree", va.max_degree);
  verify->add_option("--max-size", va.max_size);
  verify->add_option("--J", va.J);
  verify->add_option("--max-n", va.max_n);
  verify->add_flag("--list", va.list, "list the suites");
  verify->add_flag("--verbose", va.verbose, "print every check");
  verify->add_flag("--timing", va.timing, "print the elapsed time");
  add_caps(verify, va.caps);

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "list PF_J(p) or PF(J,n) with statistics");
  enumerate->add_option("--J", ea.J)->required();
  enumerate->add_option("--p", ea.p, "composition, comma separated");
  enumerate->add_option("--n", ea.n, "number of big cars");
  enumerate->add_option("--format", ea.format)->check(CLI::IsMember({"text", "json", "csv"}));
  add_caps(enumerate, ea.caps);

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "statistics of one parking function");
  stats->add_option("--U", sa.U, "diagonal numbers, comma separated")->required();
  stats->add_option("--V", sa.V, "cars, comma separated")->required();
  stats->add_option("--J", sa.J, "treat cars 1..J as small");
  stats->add_option("--format", sa.format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*poly) return cmd_poly(pa);
    if (*verify) return cmd_verify(va);
    if (*enumerate) return cmd_enumerate(ea);
    if (*stats) return cmd_stats(sa);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidParkingFunction& e) {
    std::cerr << "error: invalid parking function: " << e.what() << "\n";
    return kInvalid;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
