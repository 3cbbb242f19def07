#include "parkqt/macdonald.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>

namespace parkqt {

namespace {

const LaurentPoly kOne(1);

void check_cap(int degree, int cap, const char* what) {
  if (degree > cap)
    throw CapExceeded(std::string(what) + ": degree " + std::to_string(degree) + " exceeds cap " +
                      std::to_string(cap));
}

}  // namespace

LaurentPoly M_poly() { return (kOne - LaurentPoly::t()) * (kOne - LaurentPoly::q()); }

std::vector<LaurentPoly> w_factors(const Partition& mu) {
  std::vector<LaurentPoly> out;
  for (const auto& c : cell_stats(mu)) {
    out.push_back(LaurentPoly::q(c.arm) - LaurentPoly::t(c.leg + 1));
    out.push_back(LaurentPoly::t(c.leg) - LaurentPoly::q(c.arm + 1));
  }
  return out;
}

MuStats mu_stats(const Partition& mu) {
  MuStats st;
  st.nmu = n_stat(mu);
  st.nmuprime = n_stat(conjugate(mu));
  st.T = LaurentPoly(Monomial{st.nmuprime, st.nmu, 0, 0}, Rational(1));
  st.B = LaurentPoly();
  st.Pi = kOne;
  for (const auto& c : cell_stats(mu)) {
    LaurentPoly mono(Monomial{c.coarm, c.coleg, 0, 0}, Rational(1));
    st.B += mono;
    if (c.coarm != 0 || c.coleg != 0) st.Pi *= kOne - mono;
  }
  st.D = M_poly() * st.B - kOne;
  st.w = kOne;
  for (const auto& f : w_factors(mu)) st.w *= f;
  return st;
}

namespace {

struct HDegree {
  std::map<Partition, SymF, PartitionLess> s;
  std::map<Partition, SymF, PartitionLess> p;
};

class RankDeficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using PolyRow = std::vector<LaurentPoly>;

Rational eval_qt(const LaurentPoly& f, const Rational& q, const Rational& t) {
  Bindings b;
  b.q = q;
  b.t = t;
  return specialize(f, b).constant_term();
}

/// Solves rows * x = rhs over Q. Returns nullopt when the rank is below the
/// number of unknowns; throws when the system is inconsistent.
std::optional<std::vector<Rational>> solve_numeric(std::vector<std::vector<Rational>> a, std::vector<Rational> rhs,
                                                   std::size_t unknowns) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    Rational inv = Rational(1) / a[r][c];
    for (std::size_t k = c; k < unknowns; ++k) a[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < unknowns; ++k) a[i][k] -= f * a[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) throw std::logic_error("H~ solve: inconsistent system");
  if (r < unknowns) return std::nullopt;
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = rhs[i];
  return x;
}

/// Coefficients c_0..c_{m-1} of the interpolating polynomial.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> dd(ys);
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  // Horner on the Newton form.
  std::vector<Rational> c(m, Rational(0));
  for (std::size_t i = m; i-- > 0;) {
    // c = c * (x - xs[i]) + dd[i]
    std::vector<Rational> next(m, Rational(0));
    for (std::size_t k = 0; k + 1 < m; ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * xs[i];
    }
    next[0] += dd[i];
    c = std::move(next);
  }
  return c;
}

HDegree solve_degree(int n, const HTildeSolveOptions& opts) {
  const auto& parts = partitions(n);
  const std::size_t N = parts.size();
  std::map<Partition, int, PartitionLess> index;
  for (std::size_t i = 0; i < N; ++i) index[parts[i]] = int(i);
  std::size_t top = index.at(n == 0 ? Partition{} : Partition{n});

  // tri[nu][lambda] = coefficient of s_nu in s_lambda[X(t-1)].
  std::vector<PolyRow> tri(N, PolyRow(N));
  const Alphabet xt = Alphabet::X(LaurentPoly::t() - kOne);
  std::vector<SymF> schur_p;
  for (std::size_t l = 0; l < N; ++l) {
    SymF s = SymF::element(Basis::s, parts[l]);
    schur_p.push_back(to_power(s));
    SymF img = convert(plethysm(s, xt), Basis::s);
    for (const auto& [nu, c] : img.terms()) tri[index.at(nu)][l] = c.num();
  }

  HDegree out;
  std::vector<Partition> done;
  for (std::size_t pos = N; pos-- > 0;) {
    const Partition& mu = parts[pos];
    std::vector<PolyRow> rows;
    std::vector<Rational> rhs;
    for (std::size_t v = 0; v < N; ++v) {
      const Partition& nu = parts[v];
      bool impose = opts.incomparable ? !dominates(mu, nu) : (nu != mu && dominates(nu, mu));
      if (!impose) continue;
      rows.push_back(tri[v]);
      rhs.push_back(0);
    }
    for (const auto& nu : done) {
      PolyRow row(N);
      for (std::size_t l = 0; l < N; ++l) row[l] = star(schur_p[l], out.p.at(nu)).num();
      rows.push_back(std::move(row));
      rhs.push_back(0);
    }
    PolyRow norm(N);
    norm[top] = kOne;
    rows.push_back(std::move(norm));
    rhs.push_back(1);

    const int dq = n_stat(conjugate(mu));
    const int dt = n_stat(mu);
    std::vector<LaurentPoly> x;
    int failures = 0;
    for (int off = 0;; off += 7) {
      std::vector<Rational> qs, ts;
      for (int i = 0; i <= dq; ++i) qs.emplace_back(2 + i + off);
      for (int j = 0; j <= dt; ++j) {
        Rational tv(2, 2 * j + 5 + 2 * off);
        tv.canonicalize();
        ts.push_back(tv);
      }
      std::vector<std::vector<std::vector<Rational>>> vals(
          qs.size(), std::vector<std::vector<Rational>>(ts.size()));
      bool ok = true;
      for (std::size_t i = 0; i < qs.size() && ok; ++i) {
        for (std::size_t j = 0; j < ts.size() && ok; ++j) {
          std::vector<std::vector<Rational>> a;
          for (const auto& row : rows) {
            std::vector<Rational> ar;
            for (const auto& e : row) ar.push_back(e.is_zero() ? Rational(0) : eval_qt(e, qs[i], ts[j]));
            a.push_back(std::move(ar));
          }
          auto sol = solve_numeric(std::move(a), rhs, N);
          if (!sol) {
            ok = false;
          } else {
            vals[i][j] = std::move(*sol);
          }
        }
      }
      if (!ok) {
        if (++failures >= 3) throw RankDeficient("H~ solve: system not uniquely solvable for " + to_string(mu));
        continue;
      }
      x.assign(N, LaurentPoly());
      for (std::size_t l = 0; l < N; ++l) {
        std::vector<std::vector<Rational>> tcoef;
        for (std::size_t i = 0; i < qs.size(); ++i) {
          std::vector<Rational> ys;
          for (std::size_t j = 0; j < ts.size(); ++j) ys.push_back(vals[i][j][l]);
          tcoef.push_back(interpolate(ts, ys));
        }
        std::vector<Term> terms;
        for (int k = 0; k <= dt; ++k) {
          std::vector<Rational> ys;
          for (std::size_t i = 0; i < qs.size(); ++i) ys.push_back(tcoef[i][k]);
          auto qc = interpolate(qs, ys);
          for (int m = 0; m <= dq; ++m)
            if (qc[m] != 0) terms.push_back({Monomial{m, k, 0, 0}, qc[m]});
        }
        x[l] = LaurentPoly::from_terms(std::move(terms));
      }
      break;
    }
    // Exact check of every equation.
    for (std::size_t r = 0; r < rows.size(); ++r) {
      LaurentPoly acc;
      for (std::size_t l = 0; l < N; ++l)
        if (!rows[r][l].is_zero() && !x[l].is_zero()) acc += rows[r][l] * x[l];
      if (acc != LaurentPoly(rhs[r])) throw std::logic_error("H~ solve: interpolant fails exact check at " + to_string(mu));
    }
    SymF h(Basis::s);
    for (std::size_t l = 0; l < N; ++l) h.add_term(parts[l], RatFunc(x[l]));
    out.p.emplace(mu, to_power(h));
    out.s.emplace(mu, std::move(h));
    done.push_back(mu);
  }
  return out;
}

const HDegree& htilde_degree(int n) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<HDegree>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<HDegree>(solve_degree(n, {}))).first;
  return *it->second;
}

}  // namespace

bool htilde_system_full_rank(int n, const HTildeSolveOptions& opts) {
  try {
    solve_degree(n, opts);
    return true;
  } catch (const RankDeficient&) {
    return false;
  }
}

const SymF& htilde(const Partition& mu, int cap) {
  check_cap(size(mu), cap, "htilde");
  return htilde_degree(size(mu)).s.at(mu);
}

const SymF& htilde_power(const Partition& mu, int cap) {
  check_cap(size(mu), cap, "htilde");
  return htilde_degree(size(mu)).p.at(mu);
}

std::map<Partition, RatFunc, PartitionLess> expand_htilde(const SymF& f, int cap) {
  std::map<Partition, RatFunc, PartitionLess> out;
  if (f.is_zero()) return out;
  if (!f.is_homogeneous()) throw std::invalid_argument("expand_htilde: F must be homogeneous");
  const int n = f.max_degree();
  check_cap(n, cap, "expand_htilde");
  SymF fp = to_power(f);
  for (const auto& mu : partitions(n)) {
    RatFunc c = star(fp, htilde_power(mu, cap)) / RatFunc(mu_stats(mu).w);
    if (!c.is_zero()) out.emplace(mu, c);
  }
  return out;
}

namespace {

/// sum_mu <F, H~_mu>_* ev(mu) / w_mu H~_mu over every degree present in F.
SymF eigen_apply(const SymF& f, const std::function<RatFunc(const Partition&)>& ev, int cap) {
  SymF fp = to_power(f);
  SymF out(Basis::p);
  if (fp.is_zero()) return out;
  for (int d = fp.min_degree(); d <= fp.max_degree(); ++d) {
    SymF fd = fp.degree_part(d);
    if (fd.is_zero()) continue;
    check_cap(d, cap, "eigen operator");
    const auto& parts = partitions(d);
    std::vector<RatFunc> scal;
    bool laurent = true;
    for (const auto& mu : parts) {
      RatFunc s = star(fd, htilde_power(mu, cap));
      if (!s.is_zero()) s *= ev(mu);
      laurent = laurent && s.is_laurent();
      scal.push_back(std::move(s));
    }
    if (d == 0) {
      out += SymF::scalar(scal[0]);
      continue;
    }
    if (laurent) {
      // Put every term over one common multiple of the w_mu.
      std::map<std::string, std::pair<LaurentPoly, int>> lcm;
      std::vector<std::map<std::string, int>> fac(parts.size());
      std::vector<int> sign(parts.size(), 1);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        for (auto f1 : w_factors(parts[i])) {
          if (f1.lead().coef < 0) {
            f1 = -f1;
            sign[i] = -sign[i];
          }
          std::string key = f1.to_string();
          int cnt = ++fac[i][key];
          auto& slot = lcm[key];
          if (slot.second < cnt) slot = {f1, cnt};
        }
      }
      LaurentPoly L = kOne;
      for (const auto& [key, fm] : lcm) L *= fm.first.pow(unsigned(fm.second));
      std::map<Partition, LaurentPoly, PartitionLess> acc;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (scal[i].is_zero()) continue;
        LaurentPoly cof(long(sign[i]));
        for (const auto& [key, fm] : lcm) {
          auto it = fac[i].find(key);
          int have = it == fac[i].end() ? 0 : it->second;
          if (fm.second > have) cof *= fm.first.pow(unsigned(fm.second - have));
        }
        LaurentPoly scaled = scal[i].num() * cof;
        for (const auto& [rho, c] : htilde_power(parts[i], cap).terms()) acc[rho] += scaled * c.num();
      }
      for (const auto& [rho, num] : acc)
        if (!num.is_zero()) out.add_term(rho, RatFunc(num, L));
    } else {
      SymFBuilder acc(Basis::p);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (scal[i].is_zero()) continue;
        RatFunc c = scal[i] / RatFunc(mu_stats(parts[i]).w);
        for (const auto& [rho, h] : htilde_power(parts[i], cap).terms()) acc.add(rho, c * h);
      }
      out += acc.build();
    }
  }
  return out;
}

}  // namespace

SymF delta(const SymF& g, const SymF& f, int cap) {
  return eigen_apply(
      f, [&g](const Partition& mu) { return evaluate(g, Alphabet::scalar(mu_stats(mu).B)); }, cap);
}

SymF nabla(const SymF& f, int cap) {
  return eigen_apply(f, [](const Partition& mu) { return RatFunc(mu_stats(mu).T); }, cap);
}

namespace {

/// (-1/q)^{a-1}.
RatFunc c_prefactor(int a) {
  LaurentPoly f = LaurentPoly::q(-(a - 1));
  return RatFunc((a - 1) % 2 ? -f : f);
}

/// sum_m [z^{-m}] F[X + s/z] * K_m, where K_m is supplied per m.
SymF z_window(const SymF& f, const LaurentPoly& s, const std::function<SymF(int)>& kernel) {
  SymF fz = plethysm(f, Alphabet::X().plus_scalar(s * LaurentPoly::z(-1)));
  SymF out(Basis::p);
  if (fz.is_zero()) return out;
  const int top = fz.max_degree() > f.max_degree() ? fz.max_degree() : f.max_degree();
  for (int m = 0; m <= top; ++m) {
    SymF gm = coeff_z(fz, -m);
    if (gm.is_zero()) continue;
    SymF k = kernel(m);
    if (k.is_zero()) continue;
    out += gm * k;
  }
  return out;
}

}  // namespace

SymF op_C(int a, const SymF& f, int cap) {
  if (a < 1) throw std::invalid_argument("op_C: a must be >= 1");
  if (f.is_zero()) return SymF(Basis::p);
  check_cap(f.max_degree() + a, cap, "op_C");
  LaurentPoly s = -(kOne - LaurentPoly::q(-1));
  SymF out = z_window(f, s, [a](int m) { return SymF::hn(a + m); });
  return out * c_prefactor(a);
}

SymF op_B(int a, const SymF& f, int cap) {
  if (a < 1) throw std::invalid_argument("op_B: a must be >= 1");
  if (f.is_zero()) return SymF(Basis::p);
  check_cap(f.max_degree() + a, cap, "op_B");
  LaurentPoly s = -(kOne - LaurentPoly::q());
  return omega_invol(z_window(omega_invol(to_power(f)), s, [a](int m) { return SymF::hn(a + m); }));
}

SymF op_C_star(int a, const SymF& f, int cap) {
  if (a < 1) throw std::invalid_argument("op_C_star: a must be >= 1");
  if (f.is_zero()) return SymF(Basis::p);
  check_cap(f.max_degree(), cap, "op_C_star");
  const LaurentPoly s = -(LaurentPoly::eps() * M_poly());
  const Alphabet kern = Alphabet::X(-LaurentPoly::eps(), LaurentPoly::q() * (kOne - LaurentPoly::t()));
  SymF out = z_window(f, s, [&](int m) { return m < a ? SymF(Basis::p) : plethysm(SymF::hn(m - a), kern); });
  return out * c_prefactor(a);
}

SymF op_B_star(int a, const SymF& f, int cap) {
  if (a < 1) throw std::invalid_argument("op_B_star: a must be >= 1");
  if (f.is_zero()) return SymF(Basis::p);
  check_cap(f.max_degree(), cap, "op_B_star");
  const Alphabet kern = Alphabet::X(LaurentPoly(-1), kOne - LaurentPoly::t());
  return z_window(f, M_poly(), [&](int m) { return m < a ? SymF(Basis::p) : plethysm(SymF::hn(m - a), kern); });
}

PieriData pieri(const Partition& nu, int cap) {
  check_cap(size(nu) + 1, cap, "pieri");
  PieriData out;
  out.nu = nu;
  auto coeffs = expand_htilde(SymF::en(1) * htilde_power(nu, cap), cap);
  auto ups = add_corner(nu);
  for (const auto& [mu, d] : coeffs)
    if (std::find(ups.begin(), ups.end(), mu) == ups.end())
      throw std::logic_error("pieri: unexpected term " + to_string(mu));
  const RatFunc wnu(mu_stats(nu).w);
  for (const auto& mu : ups) {
    RatFunc d = coeffs.count(mu) ? coeffs.at(mu) : RatFunc();
    RatFunc c = d * RatFunc(mu_stats(mu).w) / (RatFunc(M_poly()) * wnu);
    out.up.push_back({mu, c, d});
  }
  return out;
}

std::map<Partition, RatFunc, PartitionLess> pieri_c_direct(const Partition& mu, int cap) {
  return expand_htilde(perp(SymF::en(1), htilde_power(mu, cap)), cap);
}

const SymF& c_chain(const Composition& p, int cap) {
  static std::mutex m;
  static std::map<Composition, std::unique_ptr<SymF>> cache;
  if (!is_composition(p)) throw std::invalid_argument("c_chain: not a composition");
  check_cap(size(p), cap, "c_chain");
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(p);
    if (it != cache.end()) return *it->second;
  }
  SymF val = p.empty() ? SymF::one() : op_C(p[0], c_chain(Composition(p.begin() + 1, p.end()), cap), cap);
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.emplace(p, std::make_unique<SymF>(std::move(val))).first;
  return *it->second;
}

SymF e_nk(int n, int k, int cap) {
  if (k < 1 || k > n) throw std::invalid_argument("e_nk: need 1 <= k <= n");
  SymF out(Basis::p);
  for (const auto& p : compositions(n, k)) out += c_chain(p, cap);
  return out;
}

QtPoly lhs_poly(int J, const Composition& p, int cap) {
  if (J < 0) throw std::invalid_argument("lhs_poly: J must be >= 0");
  if (!is_composition(p)) throw std::invalid_argument("lhs_poly: not a composition");
  const int n = size(p);
  check_cap(n + J, cap, "lhs_poly");
  SymF f = delta(SymF::hn(J), c_chain(p, cap), cap);
  RatFunc v = hall(f, SymF::en(n));
  if (!v.is_laurent()) throw std::logic_error("lhs_poly: result has a denominator: " + v.to_string());
  return QtPoly::from_laurent(v.num());
}

}  // namespace parkqt
