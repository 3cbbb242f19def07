// Acceptance run: one PASS/FAIL line per criterion.
//
// usage: acceptance <path-to-parkqt-cli> <golden-dir>

#include "parkqt/macdonald.hpp"
#include "parkqt/ndinv.hpp"
#include "parkqt/verify.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace parkqt;

namespace {

constexpr double kCriterion1Seconds = 10.0;
constexpr double kCriterion2OperatorSeconds = 60.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

QtPoly qt(std::initializer_list<std::tuple<int, int, int>> terms) {
  QtPoly p;
  for (auto [te, qe, c] : terms) p.add(te, qe, c);
  return p;
}

const QtPoly kP5 = qt({{3, 4, 1}});
const QtPoly kP6 = qt({{3, 4, 1}, {3, 5, 1}, {3, 6, 1}, {3, 7, 1}, {3, 8, 1}, {4, 4, 1}, {4, 5, 1}, {4, 6, 1}, {5, 4, 1}});
const QtPoly kClassical = qt({{3, 4, 1}, {3, 5, 2}, {3, 6, 2}, {4, 3, 1}, {4, 4, 1}, {4, 5, 1}, {5, 3, 1}});

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

int failures = 0;

void report(int n, const std::string& title, const std::function<Outcome()>& run) {
  auto t0 = Clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  failures += !o.pass;
  std::printf("criterion %2d: %s  %s (%.1f s)%s%s\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), since(t0),
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

void require_suite(Outcome& o, const VerifyReport& r, const std::function<bool(const CheckResult&)>& select) {
  int n = 0;
  for (const auto& c : r.checks) {
    if (!select(c)) continue;
    ++n;
    if (!c.pass) {
      o.require(false, c.name + ": " + c.lhs + " vs " + c.rhs);
      return;
    }
  }
  o.require(n > 0, "no checks selected from " + r.suite);
  if (o.pass) o.detail = std::to_string(n) + " checks";
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

struct Run {
  std::string out;
  int code = -1;
};

Run run_cli(const std::string& cli, const std::string& args) {
  Run r;
  std::string cmd = "'" + cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <parkqt-cli> <golden-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];

  report(1, "<Delta_{h_2} C_3 C_2 1, e_5> = t^3 q^4 by all three routes", [] {
    Outcome o;
    auto t0 = Clock::now();
    QtPoly op = lhs_poly(2, {3, 2});
    QtPoly rc = pi_poly(2, {3, 2});
    QtPoly en = family_poly(2, {3, 2});
    double secs = since(t0);
    o.require(op == kP5, "operator gave " + op.to_string());
    o.require(rc == kP5, "recursion gave " + rc.to_string());
    o.require(en == kP5, "enumeration gave " + en.to_string());
    o.require(secs < kCriterion1Seconds, "took " + std::to_string(secs) + " s");
    return o;
  });

  report(2, "J=3, p=(3,2) by all three routes", [] {
    Outcome o;
    auto t0 = Clock::now();
    QtPoly op = lhs_poly(3, {3, 2});
    double secs = since(t0);
    QtPoly rc = pi_poly(3, {3, 2});
    QtPoly en = family_poly(3, {3, 2});
    o.require(op == kP6, "operator gave " + op.to_string());
    o.require(rc == kP6, "recursion gave " + rc.to_string());
    o.require(en == kP6, "enumeration gave " + en.to_string());
    o.require(secs < kCriterion2OperatorSeconds, "operator route took " + std::to_string(secs) + " s");
    return o;
  });

  report(3, "classical dinv on PF_3([3,2]) differs, agrees at q=1", [] {
    Outcome o;
    QtPoly cl = classical_poly(3, {3, 2});
    o.require(cl == kClassical, "classical gave " + cl.to_string());
    o.require(cl != kP6, "classical equals the ndinv polynomial");
    o.require(cl.at_q_one() == kP6.at_q_one(), "q=1 values differ");
    return o;
  });

  report(4, "three-way agreement J<=3, n<=5; recursion = enumeration J<=5, n<=7", [] {
    Outcome o;
    require_suite(o, verify_suite("agreement"), [](const CheckResult&) { return true; });
    return o;
  });

  VerifyConfig nd;
  nd.max_size = 9;
  VerifyReport ndinv_report;
  report(5, "Phi bijection on every family with n+J<=8", [&] {
    Outcome o;
    ndinv_report = verify_suite("ndinv", nd);
    require_suite(o, ndinv_report, [](const CheckResult& c) { return starts_with(c.name, "Phi"); });
    return o;
  });

  report(6, "circular ndinv = recursive ndinv for n+J<=9; ndinv 14 example", [&] {
    Outcome o;
    require_suite(o, ndinv_report, [](const CheckResult& c) {
      return starts_with(c.name, "circular ndinv (count-scan") || starts_with(c.name, "circular example");
    });
    return o;
  });

  report(7, "basic recursion J<=3, n<=5; dual identity n<=4, j<=3", [] {
    Outcome o;
    require_suite(o, verify_suite("theorem1"), [](const CheckResult&) { return true; });
    std::string first = o.detail;
    if (o.pass) require_suite(o, verify_suite("dual"), [](const CheckResult&) { return true; });
    if (o.pass) o.detail = first + " + " + o.detail;
    return o;
  });

  report(8, "Macdonald identity suite through degree 6", [] {
    Outcome o;
    VerifyConfig cfg;
    cfg.max_degree = 6;
    require_suite(o, verify_suite("macdonald", cfg), [](const CheckResult&) { return true; });
    return o;
  });

  report(9, "two-part shuffle: nabla e_n against dinv and ndinv sums, n<=6", [] {
    Outcome o;
    VerifyConfig cfg;
    cfg.max_n = 6;
    require_suite(o, verify_suite("haglund", cfg), [](const CheckResult&) { return true; });
    return o;
  });

  report(10, "(n+1)^(n-1) parking functions for n<=7", [] {
    Outcome o;
    VerifyConfig cfg;
    cfg.max_n = 7;
    require_suite(o, verify_suite("count", cfg), [](const CheckResult&) { return true; });
    return o;
  });

  report(11, "CLI golden outputs and exit codes", [&] {
    Outcome o;
    struct Golden {
      const char* args;
      const char* file;
    };
    const Golden cases[] = {
        {"poly --J 2 --p 3,2 --method all", "poly_J2_p3-2.txt"},
        {"poly --J 2 --p 3,2 --method all --format json", "poly_J2_p3-2.json"},
        {"poly --J 3 --p 3,2 --method all", "poly_J3_p3-2.txt"},
        {"poly --J 3 --p 3,2 --method all --format json", "poly_J3_p3-2.json"},
        {"poly --J 3 --p 3,2 --method classical", "classical_J3_p3-2.txt"},
        {"poly --J 3 --p 3,2 --method classical --format json", "classical_J3_p3-2.json"},
        {"enumerate --J 3 --p 3,2 --format csv", "enumerate_J3_p3-2.csv"},
    };
    for (const auto& g : cases) {
      Run a = run_cli(cli, g.args), b = run_cli(cli, g.args);
      o.require(a.code == 0, std::string(g.args) + " exited " + std::to_string(a.code));
      o.require(a.out == b.out, std::string(g.args) + " is not byte-stable");
      o.require(a.out == slurp(golden + "/" + g.file), std::string(g.args) + " differs from " + g.file);
    }
    struct Code {
      const char* args;
      int code;
    };
    const Code codes[] = {
        {"poly --J 1 --p 2 --method all --expect t", 0},
        {"poly --J 2 --p 3,2 --expect t^3*q^3", 1},
        {"verify --suite count --max-n 5", 0},
        {"poly --J 2 --p 3,0", 2},
        {"poly --J 2", 2},
        {"poly --J 2 --p 3,2 --method bogus", 2},
        {"enumerate --J -1 --p 2", 2},
        {"stats --U 0,2 --V 1,2", 2},
        {"verify --suite nope", 2},
        {"poly --J 1 --p 9 --method operator", 2},
    };
    for (const auto& c : codes) {
      Run r = run_cli(cli, c.args);
      o.require(r.code == c.code,
                std::string(c.args) + " exited " + std::to_string(r.code) + ", expected " + std::to_string(c.code));
    }
    return o;
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
