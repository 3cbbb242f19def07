#include "parkqt/verify.hpp"

#include "parkqt/macdonald.hpp"
#include "parkqt/ndinv.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace parkqt {

bool VerifyReport::ok() const { return failures() == 0; }

int VerifyReport::failures() const {
  int f = 0;
  for (const auto& c : checks) f += !c.pass;
  return f;
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << suite << ": " << checks.size() << " checks, " << failures() << " failed (" << seconds << " s)";
  return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : r_(r), last_(Clock::now()) {}

  void truth(const std::string& name, bool ok, const std::string& detail = "") {
    push(name, ok, [&] { return std::make_pair(detail.empty() ? std::string("false") : detail, std::string("true")); });
  }
  void eq(const std::string& name, const RatFunc& a, const RatFunc& b) {
    push(name, rf_cross_equal(a, b), [&] { return std::make_pair(a.to_string(), b.to_string()); });
  }
  void eq(const std::string& name, const SymF& a, const SymF& b) {
    push(name, a == b, [&] {
      return std::make_pair(convert(a, Basis::s).to_string(), convert(b, Basis::s).to_string());
    });
  }
  void eq(const std::string& name, const QtPoly& a, const QtPoly& b) {
    push(name, a == b, [&] { return std::make_pair(a.to_string(), b.to_string()); });
  }
  void eq(const std::string& name, long a, long b) {
    push(name, a == b, [&] { return std::make_pair(std::to_string(a), std::to_string(b)); });
  }

 private:
  void push(const std::string& name, bool ok, const std::function<std::pair<std::string, std::string>()>& show) {
    auto now = Clock::now();
    CheckResult c;
    c.name = name;
    c.pass = ok;
    c.seconds = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    if (!ok) std::tie(c.lhs, c.rhs) = show();
    r_.checks.push_back(std::move(c));
  }

  VerifyReport& r_;
  Clock::time_point last_;
};

const LaurentPoly kOne(1);
LaurentPoly qq(int e = 1) { return LaurentPoly::q(e); }
LaurentPoly tt(int e = 1) { return LaurentPoly::t(e); }
LaurentPoly zz(int e = 1) { return LaurentPoly::z(e); }
LaurentPoly qt_mono(int t_exp, int q_exp) { return LaurentPoly(Monomial{q_exp, t_exp, 0, 0}, Rational(1)); }

QtPoly qt_poly(std::initializer_list<std::tuple<int, int, int>> terms) {
  QtPoly p;
  for (auto [t, q, c] : terms) p.add(t, q, c);
  return p;
}

RatFunc ev(const SymF& f, const LaurentPoly& a, const LaurentPoly& den = kOne) {
  return evaluate(f, Alphabet::scalar(a, den));
}

SymF over_M(const SymF& f) { return plethysm(f, Alphabet::X(kOne, M_poly())); }
SymF h_over_M(int n) { return over_M(SymF::hn(n)); }
SymF schur(const Partition& la) { return SymF::element(Basis::s, la); }

Partition hook(int n, int r) {
  Partition la{n - r};
  for (int i = 0; i < r; ++i) la.push_back(1);
  return la;
}

/// Sum over mu |- n of coef(mu) H~_mu.
SymF htilde_sum(int n, const std::function<RatFunc(const Partition&)>& coef, int cap) {
  std::map<Partition, RatFuncSum, PartitionLess> acc;
  for (const auto& mu : partitions(n)) {
    RatFunc c = coef(mu);
    if (c.is_zero()) continue;
    for (const auto& [la, k] : htilde(mu, cap).terms()) acc[la].add_fraction(c.num() * k.num(), c.den() * k.den());
  }
  SymF out(Basis::s);
  for (const auto& [la, sum] : acc) out.add_term(la, sum.result());
  return out;
}

LaurentPoly cell_product(const Partition& mu, const LaurentPoly& u) {
  LaurentPoly prod(1);
  for (const auto& c : cell_stats(mu)) prod *= kOne - u * qt_mono(c.coleg, c.coarm);
  return prod;
}

std::string pname(const std::string& what, const Partition& mu) { return what + " " + to_string(mu); }

// ---------------------------------------------------------------- symfun

SymF random_symf(std::mt19937& rng, int d) {
  static const Basis bases[] = {Basis::p, Basis::m, Basis::h, Basis::e, Basis::s};
  Basis b = bases[rng() % 5];
  SymF f(b);
  const auto& parts = partitions(d);
  for (int i = 0; i < 3; ++i) {
    const Partition& la = parts[rng() % parts.size()];
    long c = static_cast<long>(rng() % 7) - 3;
    if (c == 0) c = 1;
    LaurentPoly coef = LaurentPoly(c) * qt_mono(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
    RatFunc rc = rng() % 4 == 0 ? RatFunc(coef, kOne - qq()) : RatFunc(coef);
    f.add_term(la, rc);
  }
  return f;
}

void suite_symfun(Recorder& R, const VerifyConfig& cfg) {
  const int D = cfg.max_degree.value_or(5);
  std::mt19937 rng(20240531u);
  const Basis bases[] = {Basis::p, Basis::m, Basis::h, Basis::e, Basis::s};
  const LaurentPoly M = M_poly();
  for (int d = 1; d <= D + 1; ++d) {
    for (int trial = 0; trial < 3; ++trial) {
      SymF f = random_symf(rng, d);
      for (Basis b : bases) {
        SymF back = convert(convert(f, b), f.basis());
        bool same = back.terms().size() == f.terms().size();
        for (const auto& [la, c] : f.terms()) same = same && rf_cross_equal(back.coeff(la), c);
        R.truth(std::string("round trip ") + basis_tag(f.basis()) + "->" + basis_tag(b) + " degree " +
                    std::to_string(d),
                same, back.to_string() + " vs " + f.to_string());
      }
    }
  }
  for (int d = 1; d <= D; ++d) {
    SymF f = random_symf(rng, d), g = random_symf(rng, d);
    R.eq("star = <f, omega phi g> degree " + std::to_string(d), star(f, g),
         hall(f, omega_invol(plethysm(g, Alphabet::X(M)))));
    R.eq("hall = <f, omega g*>_* degree " + std::to_string(d), hall(f, g), star(f, omega_invol(over_M(g))));
    R.eq("F[X] = F degree " + std::to_string(d), plethysm(f, Alphabet::X()), f);
    R.eq("omega = plethysm with -eps X, degree " + std::to_string(d), omega_invol(f),
         plethysm(f, Alphabet::X(-LaurentPoly::eps())));
    R.eq("omega involution degree " + std::to_string(d), omega_invol(omega_invol(f)), f);
    for (int a = 1; a < d; ++a) {
      SymF h1 = random_symf(rng, a), h2 = random_symf(rng, d - a);
      Alphabet e = Alphabet::X(kOne - tt()).plus_scalar(qq(), zz());
      R.eq("(FG)[E] = F[E] G[E] degrees " + std::to_string(a) + "," + std::to_string(d - a), plethysm(h1 * h2, e),
           plethysm(h1, e) * plethysm(h2, e));
      SymF big = random_symf(rng, d);
      R.eq("perp adjointness degrees " + std::to_string(a) + "," + std::to_string(d - a),
           hall(perp(h1, big), h2), hall(big, h1 * h2));
    }
  }
  const LaurentPoly A = qq(), B = tt() + zz();
  for (int m = 0; m <= D; ++m) {
    RatFunc lhs = ev(SymF::hn(m), A + B);
    RatFunc rhs;
    for (int i = 0; i <= m; ++i) rhs += ev(SymF::hn(i), A) * ev(SymF::hn(m - i), B);
    R.eq("Omega[A+B] = Omega[A] Omega[B] at degree " + std::to_string(m), lhs, rhs);
  }
  auto series = omega_series(Alphabet::X(zz()), D);
  for (int m = 0; m <= D; ++m)
    R.eq("Omega[zX] at z^" + std::to_string(m), coeff_z(series[m], m), SymF::hn(m));
}

// ---------------------------------------------------------------- macdonald

void suite_macdonald(Recorder& R, const VerifyConfig& cfg) {
  const int D = cfg.max_degree.value_or(6);
  const int cap = cfg.degree_cap;
  const LaurentPoly M = M_poly();

  for (int n = 1; n <= D; ++n) {
    for (const auto& mu : partitions(n)) {
      const MuStats st = mu_stats(mu);
      const SymF& H = htilde(mu, cap);
      const SymF& Hp = htilde_power(mu, cap);
      R.eq(pname("D = MB - 1", mu), RatFunc(st.D), RatFunc(M * st.B - kOne));
      R.eq(pname("e_n[B] = T", mu), ev(SymF::en(n), st.B), RatFunc(st.T));
      bool poly = true;
      for (const auto& [la, k] : H.terms())
        poly = poly && k.is_laurent() && !k.num().has_negative_exponents();
      R.truth(pname("H~ has polynomial Schur coefficients", mu), poly, H.to_string());
      R.eq(pname("K~_(n),mu = 1", mu), H.coeff({n}), RatFunc(1));
      for (const auto& la : partitions(n))
        R.eq("orthogonality " + to_string(la) + " " + to_string(mu), star(htilde_power(la, cap), Hp),
             la == mu ? RatFunc(st.w) : RatFunc());
      const LaurentPoly prod = cell_product(mu, zz());
      R.eq(pname("H~[1-u] = product", mu), ev(Hp, kOne - zz()), RatFunc(prod));
      RatFunc sum;
      for (int r = 0; r <= n - 1; ++r)
        sum += RatFunc(LaurentPoly(r % 2 ? -1 : 1) * zz(r)) * ev(SymF::en(r), st.B - kOne);
      R.eq(pname("product = (1-u) sum_{r<n} (-u)^r e_r[B-1]", mu), RatFunc(prod),
           sum * RatFunc(kOne - zz()));
      R.truth(pname("hook sum stops at r = n-1 naturally", mu),
              ev(SymF::en(n), st.B - kOne).is_zero() && !ev(SymF::en(n - 1), st.B - kOne).is_zero());
      for (int r = 0; r < n; ++r)
        R.eq(pname("<H~, s_hook(" + std::to_string(r) + ")> = e_r[B-1]", mu), hall(H, schur(hook(n, r))),
             ev(SymF::en(r), st.B - kOne));
      for (int r = 0; r <= n; ++r)
        R.eq(pname("<H~, e_r h_{n-r}> = e_r[B], r=" + std::to_string(r), mu),
             hall(H, SymF::en(r) * SymF::hn(n - r)), ev(SymF::en(r), st.B));
      R.eq(pname("H~[M] = M B Pi", mu), ev(Hp, M), RatFunc(M * st.B * st.Pi));
    }
  }

  // Reciprocity over all pairs of nonempty partitions.
  std::vector<Partition> all;
  for (int n = 1; n <= D; ++n)
    for (const auto& mu : partitions(n)) all.push_back(mu);
  std::map<std::pair<Partition, Partition>, std::pair<RatFunc, RatFunc>> evals;
  for (const auto& a : all)
    for (const auto& b : all) {
      const MuStats sb = mu_stats(b);
      evals[{a, b}] = {ev(htilde_power(a, cap), M * sb.B), ev(htilde_power(a, cap), sb.D)};
    }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto& a = all[i];
      const auto& b = all[j];
      const MuStats sa = mu_stats(a), sb = mu_stats(b);
      R.eq("reciprocity " + to_string(a) + " " + to_string(b), evals[{a, b}].first / RatFunc(sa.Pi),
           evals[{b, a}].first / RatFunc(sb.Pi));
      RatFunc l = evals[{a, b}].second / RatFunc(sa.T);
      RatFunc r = evals[{b, a}].second / RatFunc(sb.T);
      if (size(a) % 2) l = -l;
      if (size(b) % 2) r = -r;
      R.eq("reciprocity " + to_string(a) + " " + to_string(b), l, r);
    }
  const int recip_u = std::min(D, 3);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (size(a) > recip_u || size(b) > recip_u || !PartitionLess()(a, b)) continue;
      const MuStats sa = mu_stats(a), sb = mu_stats(b);
      RatFunc l = ev(htilde_power(a, cap), kOne + zz() * sb.D) / RatFunc(cell_product(a, zz()));
      RatFunc r = ev(htilde_power(b, cap), kOne + zz() * sa.D) / RatFunc(cell_product(b, zz()));
      R.eq("reciprocity " + to_string(a) + " " + to_string(b), l, r);
    }

  // Pieri coefficients.
  for (int n = 1; n <= D; ++n)
    for (const auto& mu : partitions(n)) {
      const MuStats sm = mu_stats(mu);
      auto cs = pieri_c_direct(mu, cap);
      auto downs = remove_corner(mu);
      for (const auto& [nu, c] : cs)
        R.truth(pname("e_1^perp H~ only hits corners", mu),
                std::find(downs.begin(), downs.end(), nu) != downs.end(), to_string(nu));
      for (int k = 0; k <= 4; ++k) {
        RatFunc lhs;
        for (const auto& [nu, c] : cs) lhs += c * RatFunc(sm.T, mu_stats(nu).T).pow(k);
        RatFunc rhs = k == 0 ? RatFunc(sm.B)
                             : RatFunc(tt() * qq(), M) * evaluate(SymF::hn(k + 1), Alphabet::scalar(sm.D, tt() * qq()));
        R.eq(pname("Pieri sum c k=" + std::to_string(k), mu), lhs, rhs);
      }
    }
  for (int n = 0; n < D; ++n)
    for (const auto& nu : partitions(n)) {
      const MuStats sn = mu_stats(nu);
      PieriData pd = pieri(nu, cap);
      for (int k = 0; k <= 4; ++k) {
        RatFunc lhs;
        for (const auto& e : pd.up) lhs += e.d * RatFunc(mu_stats(e.mu).T, sn.T).pow(k);
        RatFunc rhs = k == 0 ? RatFunc(1) : ev(SymF::en(k - 1), sn.D) * RatFunc((k - 1) % 2 ? -1 : 1);
        R.eq(pname("Pieri sum d k=" + std::to_string(k), nu), lhs, rhs);
      }
      for (const auto& e : pd.up) {
        auto direct = pieri_c_direct(e.mu, cap);
        RatFunc c = direct.count(nu) ? direct.at(nu) : RatFunc();
        R.eq("d = M c w_nu / w_mu " + to_string(e.mu) + " " + to_string(nu), e.c, c);
      }
    }

  // Cauchy kernel as a double Schur expansion.
  for (int n = 1; n <= std::min(D, 4); ++n) {
    const auto& parts = partitions(n);
    auto chi = [](const Partition& la, const Partition& rho) {
      for (const auto& [r, c] : to_power_row(Basis::s, la))
        if (r == rho) return Rational(c * Rational(z_coef(rho)));
      return Rational(0);
    };
    for (const auto& la : parts)
      for (const auto& nu : parts) {
        RatFuncSum lhs, rhs;
        for (const auto& rho : parts) {
          LaurentPoly den = LaurentPoly(Rational(z_coef(rho)));
          for (int k : rho) den *= (kOne - tt(k)) * (kOne - qq(k));
          lhs.add_fraction(LaurentPoly(Rational(sign_eps(rho)) * chi(la, rho) * chi(nu, rho)), den);
        }
        for (const auto& mu : parts)
          rhs.add_fraction((htilde(mu, cap).coeff(la) * htilde(mu, cap).coeff(nu)).num(), mu_stats(mu).w);
        R.eq("Cauchy s" + to_string(la) + "[X] s" + to_string(nu) + "[Y]", lhs.result(), rhs.result());
      }
  }

  // Macdonald expansions F = sum_mu a_mu H~_mu / w_mu. Small degrees compare
  // the whole sum; every degree compares <F, H~_mu>_* with a_mu.
  for (int n = 1; n <= std::min(D, 5); ++n) {
    const std::string tag = " n=" + std::to_string(n);
    auto expansion = [&](const std::string& name, const SymF& f, const std::function<RatFunc(const Partition&)>& a) {
      if (n <= 3)
        R.eq(name + tag, f, htilde_sum(n, [&](const Partition& mu) { return a(mu) / RatFunc(mu_stats(mu).w); }, cap));
      for (const auto& mu : partitions(n))
        R.eq(pname(name + tag + ", coefficient of", mu), star(f, htilde_power(mu, cap)), a(mu));
    };
    expansion("e_n[X/M] expansion", over_M(SymF::en(n)), [](const Partition&) { return RatFunc(1); });
    for (int k = 0; k <= n; ++k)
      expansion("h_k[X/M] e_{n-k}[X/M] expansion k=" + std::to_string(k), h_over_M(k) * over_M(SymF::en(n - k)),
                [&](const Partition& mu) { return ev(SymF::en(k), mu_stats(mu).B); });
    expansion("h_n[X/M] expansion", h_over_M(n), [](const Partition& mu) { return RatFunc(mu_stats(mu).T); });
    const RatFunc pn_factor = RatFunc((kOne - tt(n)) * (kOne - qq(n)));
    expansion("(-1)^{n-1} p_n expansion", SymF::pn(n) * RatFunc(n % 2 ? 1 : -1),
              [&](const Partition& mu) { return pn_factor * RatFunc(mu_stats(mu).Pi); });
    SymF e1n = SymF::one(), e1n_over = SymF::one();
    for (int i = 0; i < n; ++i) {
      e1n = e1n * SymF::en(1);
      e1n_over = e1n_over * over_M(SymF::en(1));
    }
    expansion("e_1[X/M]^n expansion", e1n_over, [&](const Partition& mu) { return hall(htilde(mu, cap), e1n); });
    auto dh = [&](const Partition& mu) {
      const MuStats s = mu_stats(mu);
      return RatFunc(M * s.B * s.Pi);
    };
    expansion("e_n expansion", SymF::en(n), dh);
    auto ex = expand_htilde(SymF::en(n), cap);
    for (const auto& mu : partitions(n))
      R.eq(pname("expand_htilde(e_n) coefficient", mu), ex.count(mu) ? ex.at(mu) : RatFunc(),
           dh(mu) / RatFunc(mu_stats(mu).w));
    expansion("nabla e_n = DH_n", nabla(SymF::en(n), cap),
              [&](const Partition& mu) { return RatFunc(mu_stats(mu).T) * dh(mu); });
    for (const SymF& f : {SymF::en(n), SymF::hn(n), schur(hook(n, n / 2))})
      R.eq("Delta_{e_n} F = nabla F" + tag, delta(SymF::en(n), f, cap), nabla(f, cap));
    for (const auto& mu : partitions(n)) {
      SymF inv = htilde(mu, cap).map_coeffs([](const RatFunc& c) { return c.invert_vars({Var::q, Var::t}); });
      R.eq(pname("T omega H~[X;1/q,1/t] = H~", mu), omega_invol(inv) * RatFunc(mu_stats(mu).T),
           htilde(mu, cap));
    }
  }
}

// ---------------------------------------------------------------- operators

void suite_operators(Recorder& R, const VerifyConfig& cfg) {
  const int cap = cfg.degree_cap;
  const int N = cfg.max_n.value_or(5);
  for (int a = 1; a <= 4; ++a) {
    RatFunc pre(LaurentPoly((a - 1) % 2 ? -1 : 1) * qq(-(a - 1)));
    R.eq("C_a 1 = (-1/q)^{a-1} h_a, a=" + std::to_string(a), op_C(a, SymF::one(), cap), SymF::hn(a) * pre);
    R.eq("B_a 1 = e_a, a=" + std::to_string(a), op_B(a, SymF::one(), cap), SymF::en(a));
  }
  const std::vector<SymF> small = {SymF::one(), schur({1}), schur({2}), schur({1, 1})};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& f : small) {
        if (f.max_degree() + a + b > cap) continue;
        R.eq("q C_a B_b = B_b C_a, a=" + std::to_string(a) + " b=" + std::to_string(b) + " F=" + f.to_string(),
             op_C(a, op_B(b, f, cap), cap) * RatFunc(qq()), op_B(b, op_C(a, f, cap), cap));
      }
  for (int a = 1; a <= 2; ++a)
    for (int d = 0; d <= 2; ++d)
      for (const auto& fl : partitions(d))
        for (const auto& gl : partitions(d + a)) {
          SymF f = schur(fl), g = schur(gl);
          const std::string tag = " a=" + std::to_string(a) + " F=s" + to_string(fl) + " G=s" + to_string(gl);
          R.eq("<C_a F, G>_* = <F, C_a* G>_*" + tag, star(op_C(a, f, cap), g), star(f, op_C_star(a, g, cap)));
          R.eq("<B_a F, G>_* = <F, B_a* G>_*" + tag, star(op_B(a, f, cap), g), star(f, op_B_star(a, g, cap)));
        }
  for (int n = 1; n <= N; ++n) {
    SymF sum(Basis::p);
    for (int k = 1; k <= n; ++k) sum += e_nk(n, k, cap);
    R.eq("sum_{k=1}^{n} E_{n,k} = e_n, n=" + std::to_string(n), sum, SymF::en(n));
    R.eq("E_{n,n} at s_{1^n} = 1, n=" + std::to_string(n), convert(e_nk(n, n, cap), Basis::s).coeff(hook(n, n - 1)),
         RatFunc(1));
    for (const auto& p : compositions(n)) {
      bool ones = std::all_of(p.begin(), p.end(), [](int x) { return x == 1; });
      R.eq("<C_p 1, e_n> p=" + to_string(p), hall(c_chain(p, cap), SymF::en(n)), RatFunc(ones ? 1 : 0));
    }
  }
  R.eq("E_{1,1} = e_1", e_nk(1, 1, cap), SymF::en(1));
}

// ---------------------------------------------------------------- basic recursion and the dual identity

RatFunc lhs_value(int J, const Composition& p, int cap) {
  if (p.empty()) return RatFunc(J == 0 ? 1 : 0);
  return RatFunc(lhs_poly(J, p, cap).to_laurent());
}

void suite_theorem1(Recorder& R, const VerifyConfig& cfg) {
  const int cap = cfg.degree_cap;
  const int maxJ = cfg.max_J.value_or(3);
  const int maxN = cfg.max_n.value_or(5);
  for (int J = 0; J <= maxJ; ++J)
    for (int n = 1; n <= maxN; ++n)
      for (const auto& p : compositions(n)) {
        const int k = static_cast<int>(p.size());
        RatFunc rhs;
        if (J >= 1) {
          SymF f = op_B(p[0], SymF::one(), cap);
          for (int i = k - 1; i >= 1; --i) f = op_C(p[i], f, cap);
          rhs = hall(delta(SymF::hn(J - 1), f, cap), SymF::en(n)) * RatFunc(qt_mono(p[0] - 1, k - 1));
        }
        if (p[0] == 1) rhs += lhs_value(J, Composition(p.begin() + 1, p.end()), cap);
        R.eq("basic recursion J=" + std::to_string(J) + " p=" + to_string(p), lhs_value(J, p, cap), rhs);
      }
}

void suite_dual(Recorder& R, const VerifyConfig& cfg) {
  const int cap = cfg.degree_cap;
  const int maxJ = cfg.max_J.value_or(3);
  const int maxN = cfg.max_n.value_or(4);
  for (int n = 1; n <= maxN; ++n)
    for (int j = 0; j <= maxJ; ++j)
      for (int a = 1; a <= n; ++a) {
        SymF lhs = op_C_star(a, delta(SymF::hn(j), h_over_M(n), cap), cap);
        SymF rhs(Basis::p);
        if (j >= 1) rhs += op_B_star(a, delta(SymF::hn(j - 1), h_over_M(n), cap), cap) * RatFunc(tt(a - 1));
        if (a == 1) rhs += delta(SymF::hn(j), h_over_M(n - 1), cap);
        R.eq("dual identity n=" + std::to_string(n) + " j=" + std::to_string(j) + " a=" + std::to_string(a),
             lhs, rhs);
      }
}

// ---------------------------------------------------------------- parking functions

void suite_parkfun(Recorder& R, const VerifyConfig& cfg) {
  const int maxSize = cfg.max_size.value_or(9);
  const int oracle = std::min(maxSize, 7);
  auto ex = pf_validate({0, 1, 2, 2, 3, 0, 1, 1}, {4, 6, 8, 1, 3, 2, 7, 5});
  R.eq("example area", area(ex), 10);
  R.eq("example dinv", dinv(ex), 4);
  R.truth("example diagonal word", diagonal_word(ex) == std::vector<int>{3, 1, 8, 5, 7, 6, 2, 4});
  R.eq("|PF_2([3,2])|", static_cast<long>(enumerate_family(2, {3, 2}, cfg.enum_cap).size()), 1);
  R.eq("|PF_3([3,2])|", static_cast<long>(enumerate_family(3, {3, 2}, cfg.enum_cap).size()), 9);
  R.eq("|PF_0([1,1,1])|", static_cast<long>(enumerate_family(0, {1, 1, 1}, cfg.enum_cap).size()), 1);
  R.eq("|PF_0([3,2])|", static_cast<long>(enumerate_family(0, {3, 2}, cfg.enum_cap).size()), 0);
  R.eq("classical_poly(3,[3,2])", classical_poly(3, {3, 2}, cfg.enum_cap),
       qt_poly({{3, 4, 1}, {3, 5, 2}, {3, 6, 2}, {4, 3, 1}, {4, 4, 1}, {4, 5, 1}, {5, 3, 1}}));
  R.eq("classical_poly(2,[3,2])", classical_poly(2, {3, 2}, cfg.enum_cap), qt_poly({{3, 3, 1}}));

  for (int N = 1; N <= maxSize; ++N)
    for (int J = 0; J < N; ++J) {
      const int n = N - J;
      std::string bad;
      for (const auto& pf : enumerate_family(J, n, cfg.enum_cap)) {
        try {
          pf_validate(pf.U, pf.V);
        } catch (const std::exception& e) {
          bad = e.what();
        }
        if (!in_family(pf, J)) bad = "not a shuffle member";
        if (has_bad_column(reduce(pf, J))) bad = "1-on-1 or 2-on-2 column";
        if (refill(reduce(pf, J)) != pf) bad = "refill round trip";
        Composition bc = big_comp(pf, J);
        if (!is_composition(bc) || size(bc) != n) bad = "big composition";
        if (!bad.empty()) {
          bad += "\n" + to_text(pf);
          break;
        }
      }
      R.truth("members of PF(" + std::to_string(J) + "," + std::to_string(n) + ") are well formed", bad.empty(), bad);
    }

  // Brute-force oracle: filter every parking function of size N.
  for (int N = 1; N <= oracle; ++N) {
    std::vector<std::set<ParkingFunction>> brute(N);
    for_each_parking_function(
        N,
        [&](const ParkingFunction& pf) {
          for (int J = 0; J < N; ++J)
            if (in_family(pf, J)) brute[J].insert(pf);
        },
        cfg.enum_cap);
    for (int J = 0; J < N; ++J) {
      auto gen = enumerate_family(J, N - J, cfg.enum_cap);
      std::set<ParkingFunction> gs(gen.begin(), gen.end());
      R.truth("PF(" + std::to_string(J) + "," + std::to_string(N - J) + ") matches the brute-force filter",
              gs == brute[J] && gs.size() == gen.size(),
              std::to_string(gen.size()) + " generated vs " + std::to_string(brute[J].size()));
    }
  }
}

void suite_count(Recorder& R, const VerifyConfig& cfg) {
  const int maxN = cfg.max_n.value_or(7);
  for (int n = 1; n <= maxN; ++n) {
    long count = 0;
    for_each_parking_function(n, [&](const ParkingFunction&) { ++count; }, cfg.enum_cap);
    long expect = 1;
    for (int i = 0; i < n - 1; ++i) expect *= n + 1;
    R.eq("|PF_" + std::to_string(n) + "| = (n+1)^(n-1)", count, expect);
  }
}

// ---------------------------------------------------------------- ndinv

ParkingFunction circular_example(int cap) {
  // Area-maximal member of PF_5([3,3,2]) whose small cars all sit under big cars.
  ParkingFunction best;
  int best_area = -1;
  for (const auto& pf : enumerate_family(5, {3, 3, 2}, cap)) {
    int rises = 0;
    for (int i = 1; i < pf.size(); ++i) rises += pf.U[i] == pf.U[i - 1] + 1;
    if (rises != 5) continue;
    if (area(pf) > best_area) {
      best_area = area(pf);
      best = pf;
    }
  }
  return best;
}

void suite_ndinv(Recorder& R, const VerifyConfig& cfg) {
  const int maxSize = cfg.max_size.value_or(9);
  const int phiSize = std::min(maxSize, 8);
  CircleOptions scan, search;
  search.bar_rule = BarRule::kSearchAndCount;
  for (int N = 1; N <= maxSize; ++N)
    for (int J = 0; J < N; ++J) {
      const int n = N - J;
      std::string bad_scan, bad_search;
      for (const auto& pf : enumerate_family(J, n, cfg.enum_cap)) {
        int rec = ndinv_rec(pf, J);
        if (bad_scan.empty() && ndinv_circ(pf, J, scan) != rec) bad_scan = to_text(pf);
        if (bad_search.empty() && ndinv_circ(pf, J, search) != rec) bad_search = to_text(pf);
      }
      const std::string fam = "PF(" + std::to_string(J) + "," + std::to_string(n) + ")";
      R.truth("circular ndinv (count-scan bar reading) = recursive ndinv on " + fam, bad_scan.empty(), bad_scan);
      R.truth("circular ndinv (search-and-count bar reading) = recursive ndinv on " + fam, bad_search.empty(),
              bad_search);
    }

  for (int N = 2; N <= phiSize; ++N)
    for (int J = 1; J < N; ++J)
      for (const auto& p : compositions(N - J)) {
        const auto fam = enumerate_family(J, p, cfg.enum_cap);
        const std::string tag = " on PF_" + std::to_string(J) + "(" + to_string(p) + ")";
        const int k = static_cast<int>(p.size());
        const Composition tail(p.begin() + 1, p.end());
        std::string bad;
        std::set<std::pair<int, ParkingFunction>> images;
        for (const auto& pf : fam) {
          PhiImage im = phi(pf, J);
          images.insert({static_cast<int>(im.branch), im.pf});
          if (phi_inv(im.pf, im.J, im.branch, k) != pf) bad = "phi_inv(phi(PF)) != PF";
          if (area(im.pf) != area(pf) - (p[0] - 1)) bad = "area law";
          Composition bc = big_comp(im.pf, im.J);
          if (im.branch == PhiBranch::kRemoveBig) {
            if (p[0] != 1 || im.J != J || bc != tail) bad = "codomain (lone big branch)";
          } else {
            bool prefix = bc.size() > tail.size() && std::equal(tail.begin(), tail.end(), bc.begin());
            if (im.J != J - 1 || !prefix || size(bc) - size(tail) != p[0]) bad = "codomain (small car branch)";
            if (ndinv_rec(pf, J) != k - 1 + ndinv_rec(im.pf, im.J)) bad = "ndinv law";
          }
          if (im.branch == PhiBranch::kRemoveBig && ndinv_rec(pf, J) != ndinv_rec(im.pf, im.J)) bad = "ndinv law";
          if (!bad.empty()) {
            bad += "\n" + to_text(pf);
            break;
          }
        }
        // Every member of the codomain is hit: walk it and invert.
        long codomain = 0;
        for (const auto& q : compositions(p[0])) {
          Composition c = tail;
          c.insert(c.end(), q.begin(), q.end());
          for (const auto& img : enumerate_family(J - 1, c, cfg.enum_cap)) {
            ++codomain;
            if (bad.empty() && phi(phi_inv(img, J - 1, PhiBranch::kRemoveSmall, k), J).pf != img)
              bad = "phi(phi_inv(PF')) != PF'\n" + to_text(img);
          }
        }
        if (p[0] == 1 && !tail.empty())
          for (const auto& img : enumerate_family(J, tail, cfg.enum_cap)) {
            ++codomain;
            if (bad.empty() && phi(phi_inv(img, J, PhiBranch::kRemoveBig, k), J).pf != img)
              bad = "phi(phi_inv(PF')) != PF'\n" + to_text(img);
          }
        R.truth("Phi round trips, area and ndinv laws" + tag, bad.empty(), bad);
        R.truth("Phi is a bijection onto its codomain" + tag,
                images.size() == fam.size() && codomain == static_cast<long>(fam.size()),
                std::to_string(fam.size()) + " members, " + std::to_string(images.size()) + " images, " +
                    std::to_string(codomain) + " codomain");
      }

  for (int N = 1; N <= maxSize; ++N)
    for (int J = 0; J < N; ++J)
      for (const auto& p : compositions(N - J)) {
        QtPoly areas;
        for (const auto& pf : enumerate_family(J, p, cfg.enum_cap)) areas.add(area(pf), 0);
        R.eq("Pi at q=1 counts area, J=" + std::to_string(J) + " p=" + to_string(p), pi_poly(J, p).at_q_one(), areas);
      }

  const ParkingFunction ex = circular_example(cfg.enum_cap);
  R.eq("circular example in PF_5([3,3,2]): recursive ndinv", ndinv_rec(ex, 5), 14);
  R.eq("circular example in PF_5([3,3,2]): circular ndinv", ndinv_circ(ex, 5), 14);
  QtPoly cl = classical_poly(3, {3, 2}, cfg.enum_cap), nw = family_poly(3, {3, 2}, cfg.enum_cap);
  R.truth("dinv and ndinv differ on PF_3([3,2])", cl != nw);
  R.eq("dinv and ndinv agree at q=1 on PF_3([3,2])", cl.at_q_one(), nw.at_q_one());
}

// ---------------------------------------------------------------- agreement

void suite_agreement(Recorder& R, const VerifyConfig& cfg) {
  const int maxJ = cfg.max_J.value_or(3);
  const int maxN = cfg.max_n.value_or(5);
  const int cap = cfg.degree_cap;
  R.eq("lhs_poly(2,[3,2]) = t^3 q^4", lhs_poly(2, {3, 2}, cap), qt_poly({{3, 4, 1}}));
  const QtPoly p6 = qt_poly({{3, 4, 1}, {3, 5, 1}, {3, 6, 1}, {3, 7, 1}, {3, 8, 1}, {4, 4, 1}, {4, 5, 1}, {4, 6, 1}, {5, 4, 1}});
  R.eq("lhs_poly(3,[3,2])", lhs_poly(3, {3, 2}, cap), p6);
  R.eq("pi_poly(3,[3,2])", pi_poly(3, {3, 2}), p6);
  R.eq("family_poly(3,[3,2])", family_poly(3, {3, 2}, cfg.enum_cap), p6);
  for (int J = 0; J <= maxJ; ++J)
    for (int n = 1; n <= maxN; ++n)
      for (const auto& p : compositions(n)) {
        const std::string tag = " J=" + std::to_string(J) + " p=" + to_string(p);
        QtPoly rec = pi_poly(J, p);
        R.eq("operator = recursion" + tag, lhs_poly(J, p, cap), rec);
        R.eq("enumeration = recursion" + tag, family_poly(J, p, cfg.enum_cap), rec);
      }
  for (int J = 0; J <= 5; ++J)
    for (int n = 1; n <= 7; ++n) {
      if (J <= maxJ && n <= maxN) continue;
      for (const auto& p : compositions(n))
        R.eq("enumeration = recursion J=" + std::to_string(J) + " p=" + to_string(p),
             family_poly(J, p, cfg.enum_cap), pi_poly(J, p));
    }
}

// ---------------------------------------------------------------- two-part shuffle

void suite_haglund(Recorder& R, const VerifyConfig& cfg) {
  const int maxN = cfg.max_n.value_or(6);
  const int cap = cfg.degree_cap;
  for (int n = 1; n <= maxN; ++n) {
    std::vector<QtPoly> classical(n + 1);
    for_each_parking_function(
        n,
        [&](const ParkingFunction& pf) {
          auto w = diagonal_word(pf);
          for (int j = 0; j <= n; ++j) {
            std::vector<int> a, b;
            for (int i = 1; i <= j; ++i) a.push_back(i);
            for (int i = j + 1; i <= n; ++i) b.push_back(i);
            if (is_shuffle(w, {a, b})) classical[j].add(area(pf), dinv(pf));
          }
        },
        cfg.enum_cap);
    SymF nab = nabla(SymF::en(n), cap);
    for (int j = 0; j <= n; ++j) {
      const std::string tag = " n=" + std::to_string(n) + " j=" + std::to_string(j);
      RatFunc target = hall(nab, SymF::hn(j) * SymF::hn(n - j));
      QtPoly nd;
      for (const auto& pf : enumerate_family(j, n + 1 - j, cfg.enum_cap)) nd.add(area(pf), ndinv_rec(pf, j));
      R.eq("<nabla e_n, h_j h_{n-j}> = classical dinv sum" + tag, target, RatFunc(classical[j].to_laurent()));
      R.eq("<nabla e_n, h_j h_{n-j}> = ndinv sum" + tag, target, RatFunc(nd.to_laurent()));
      if (n + 1 - j <= cap && n <= 5) {
        SymF e = SymF::en(n + 1 - j);
        R.eq("<Delta_{h_j} e_{n+1-j}, e_{n+1-j}> = <nabla e_n, h_j h_{n-j}>" + tag,
             hall(delta(SymF::hn(j), e, cap), e), target);
      }
    }
  }
}

using SuiteFn = void (*)(Recorder&, const VerifyConfig&);

struct SuiteDef {
  const char* name;
  const char* description;
  SuiteFn fn;
};

const SuiteDef kSuites[] = {
    {"symfun", "bases, plethysm, scalar products, perp (--max-degree, default 5)", suite_symfun},
    {"macdonald", "H~ identities, Pieri sums, Cauchy, expansions, duality (--max-degree, default 6)",
     suite_macdonald},
    {"operators", "C_a, B_a, their star duals and E_{n,k} (--max-n, default 5)", suite_operators},
    {"theorem1", "the basic recursion for <Delta_{h_J} C_p 1, e_n> (--J 3, --max-n 5)", suite_theorem1},
    {"dual", "C_a* Delta_{h_j} h_n[X/M] identity (--J 3, --max-n 4)", suite_dual},
    {"parkfun", "family generation against a brute-force filter (--max-size, default 9)", suite_parkfun},
    {"count", "(n+1)^(n-1) parking functions (--max-n, default 7)", suite_count},
    {"ndinv", "circular vs recursive ndinv, Phi bijection, q=1 law (--max-size, default 9)", suite_ndinv},
    {"agreement", "operator = recursion = enumeration (--J 3, --max-n 5; recursion vs enumeration to J 5, n 7)",
     suite_agreement},
    {"haglund", "two-part shuffle with dinv and ndinv (--max-n, default 6)", suite_haglund},
};

}  // namespace

std::vector<std::pair<std::string, std::string>> suite_names() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : kSuites) out.emplace_back(s.name, s.description);
  out.emplace_back("all", "every suite above with its defaults");
  return out;
}

VerifyReport verify_suite(const std::string& name, const VerifyConfig& cfg) {
  VerifyReport report;
  report.suite = name;
  auto start = Clock::now();
  Recorder rec(report);
  bool found = false;
  for (const auto& s : kSuites)
    if (name == "all" || name == s.name) {
      s.fn(rec, cfg);
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown suite: " + name);
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace parkqt
