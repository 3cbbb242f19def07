#include "parkqt/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace parkqt {

namespace {

constexpr Var kVars[] = {Var::q, Var::t, Var::z};

Monomial mono_content(const LaurentPoly& p) {
  Monomial m = p.terms().front().mono;
  m.eps = 0;
  for (const auto& term : p.terms()) {
    m.q = std::min(m.q, term.mono.q);
    m.t = std::min(m.t, term.mono.t);
    m.z = std::min(m.z, term.mono.z);
  }
  return m;
}

Monomial inverse(const Monomial& m) { return {-m.q, -m.t, -m.z, 0}; }

Monomial mono_min(const Monomial& a, const Monomial& b) {
  return {std::min(a.q, b.q), std::min(a.t, b.t), std::min(a.z, b.z), 0};
}

bool is_unit_monomial(const Monomial& m) { return m.q == 0 && m.t == 0 && m.z == 0; }

LaurentPoly strip(const LaurentPoly& p, const Monomial& m) {
  return is_unit_monomial(m) ? p : p.mul_monomial(inverse(m));
}

/// Integer coefficients with gcd 1 and positive leading coefficient.
LaurentPoly make_primitive(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  BigInt l = 1;
  for (const auto& term : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.coef.get_den_mpz_t());
  BigInt g = 0;
  for (const auto& term : p.terms()) {
    BigInt v = term.coef.get_num() * (l / term.coef.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational scale(l, g);
  scale.canonicalize();
  if (p.lead().coef < 0) scale = -scale;
  return p * scale;
}

int deg_v(const LaurentPoly& p, Var v) { return p.is_zero() ? -1 : p.max_degree(v); }

std::map<int, LaurentPoly> split(const LaurentPoly& p, Var v) {
  std::map<int, std::vector<Term>> parts;
  for (const auto& term : p.terms()) {
    Monomial m = term.mono;
    int e = m.exponent(v);
    m.exponent(v) = 0;
    parts[e].push_back({m, term.coef});
  }
  std::map<int, LaurentPoly> out;
  for (auto& [e, terms] : parts) out.emplace(e, LaurentPoly::from_terms(std::move(terms)));
  return out;
}

LaurentPoly lc_v(const LaurentPoly& p, Var v) {
  int d = p.max_degree(v);
  std::vector<Term> out;
  for (const auto& term : p.terms()) {
    if (term.mono.exponent(v) == d) {
      Monomial m = term.mono;
      m.exponent(v) = 0;
      out.push_back({m, term.coef});
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_v(const LaurentPoly& p, Var v) {
  LaurentPoly g;
  for (const auto& [e, c] : split(p, v)) {
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

LaurentPoly prem(LaurentPoly r, const LaurentPoly& b, Var v) {
  const int db = b.max_degree(v);
  const LaurentPoly lb = lc_v(b, v);
  while (!r.is_zero() && r.max_degree(v) >= db) {
    int dr = r.max_degree(v);
    LaurentPoly lr = lc_v(r, v);
    Monomial shift;
    shift.exponent(v) = dr - db;
    r = lb * r - (lr * b).mul_monomial(shift);
  }
  return r;
}

LaurentPoly primitive_part_v(const LaurentPoly& p, Var v) {
  LaurentPoly c = content_v(p, v);
  return make_primitive(c.is_constant() ? p : exact_divide(p, c));
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return make_primitive(b);
  if (b.is_zero()) return make_primitive(a);
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  const Monomial ma = mono_content(a);
  const Monomial mb = mono_content(b);
  const LaurentPoly m(mono_min(ma, mb), Rational(1));
  LaurentPoly A = strip(a, ma);
  LaurentPoly B = strip(b, mb);

  // Prefer a variable present in both with the smallest degree.
  std::optional<Var> main;
  int best = 0;
  for (Var v : kVars) {
    bool ina = A.has_var(v), inb = B.has_var(v);
    if (ina && inb) {
      int d = std::min(A.max_degree(v), B.max_degree(v));
      if (!main || d < best) {
        main = v;
        best = d;
      }
    }
  }
  if (!main) {
    // No shared variable: the gcd lives in the content w.r.t. any variable
    // that only one side carries.
    for (Var v : kVars) {
      if (A.has_var(v)) return make_primitive(m * gcd_rec(content_v(A, v), B));
      if (B.has_var(v)) return make_primitive(m * gcd_rec(A, content_v(B, v)));
    }
    return m;
  }
  const Var v = *main;
  LaurentPoly cA = content_v(A, v);
  LaurentPoly cB = content_v(B, v);
  LaurentPoly c = gcd_rec(cA, cB);
  LaurentPoly pa = make_primitive(cA.is_constant() ? A : exact_divide(A, cA));
  LaurentPoly pb = make_primitive(cB.is_constant() ? B : exact_divide(B, cB));
  if (deg_v(pa, v) < deg_v(pb, v)) std::swap(pa, pb);
  LaurentPoly g;
  while (true) {
    if (pb.is_zero()) {
      g = pa;
      break;
    }
    if (deg_v(pb, v) == 0) {
      g = LaurentPoly(1);
      break;
    }
    LaurentPoly r = prem(pa, pb, v);
    pa = std::move(pb);
    pb = r.is_zero() ? LaurentPoly() : primitive_part_v(r, v);
  }
  return make_primitive(m * c * g);
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.has_negative_exponents() || b.has_negative_exponents())
    throw std::domain_error("poly_gcd: Laurent input");
  if (a.has_eps() || b.has_eps()) throw std::domain_error("poly_gcd: eps input");
  return gcd_rec(a, b);
}

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero");
  if (a.is_zero()) return a;
  if (b.is_monomial()) {
    const Monomial& m = b.lead().mono;
    return a.mul_monomial({-m.q, -m.t, -m.z, m.eps}) * (Rational(1) / b.lead().coef);
  }
  const Monomial ma = mono_content(a);
  const Monomial mb = mono_content(b);
  LaurentPoly r = strip(a, ma);
  const LaurentPoly B = strip(b, mb);
  const Term& lb = B.lead();
  std::vector<Term> quot;
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    Monomial m{lr.mono.q - lb.mono.q, lr.mono.t - lb.mono.t, lr.mono.z - lb.mono.z,
               (lr.mono.eps + lb.mono.eps) & 1};
    if (m.q < 0 || m.t < 0 || m.z < 0 || lr.mono.total() < lb.mono.total()) return std::nullopt;
    Rational c = lr.coef / lb.coef;
    quot.push_back({m, c});
    r -= B.mul_monomial(m) * c;
  }
  Monomial shift{ma.q - mb.q, ma.t - mb.t, ma.z - mb.z, 0};
  return LaurentPoly::from_terms(std::move(quot)).mul_monomial(shift);
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto out = try_exact_divide(a, b);
  if (!out) throw std::domain_error("exact_divide: not divisible");
  return *std::move(out);
}

RatFunc::RatFunc(const LaurentPoly& p) : num_(p), den_(1) {
  if (num_.has_eps()) throw std::domain_error("RatFunc: eps must be folded first");
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.has_eps() || den_.has_eps()) throw std::domain_error("RatFunc: eps must be folded first");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_one()) return;
  if (den_.is_monomial()) {
    num_ = exact_divide(num_, den_);
    den_ = LaurentPoly(1);
    return;
  }
  const Monomial md = mono_content(den_);
  LaurentPoly D = strip(den_, md);
  LaurentPoly N = strip(num_, md);
  const Monomial mn = mono_content(N);
  N = strip(N, mn);
  if (auto quot = try_exact_divide(N, D)) {
    num_ = quot->mul_monomial(mn);
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = poly_gcd(N, D);
  if (!g.is_constant()) {
    N = exact_divide(N, g);
    D = exact_divide(D, g);
  }
  Rational lc = D.lead().coef;
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    N *= inv;
    D *= inv;
  }
  num_ = N.mul_monomial(mn);
  den_ = std::move(D);
}

RatFunc rf_normalize(const LaurentPoly& num, const LaurentPoly& den) { return RatFunc(num, den); }

bool rf_cross_equal(const RatFunc& a, const RatFunc& b) {
  return a.num() * b.den() == b.num() * a.den();
}

RatFunc RatFunc::operator-() const { return RatFunc(Raw{}, -num_, den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_ = LaurentPoly(1);
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Both operands are reduced, so cancel across only.
  LaurentPoly a = num_, c = o.num_;
  LaurentPoly b = den_, d = o.den_;
  auto cancel = [](LaurentPoly& n, LaurentPoly& dd) {
    if (dd.is_one()) return;
    const Monomial mn = mono_content(n);
    LaurentPoly np = strip(n, mn);
    LaurentPoly g = poly_gcd(np, dd);
    if (!g.is_constant()) {
      n = exact_divide(np, g).mul_monomial(mn);
      dd = exact_divide(dd, g);
    }
  };
  cancel(a, d);
  cancel(c, b);
  num_ = a * c;
  den_ = b * d;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  RatFunc inv(o.den_, o.num_);
  return *this *= inv;
}

RatFunc RatFunc::pow(int e) const {
  RatFunc base = e < 0 ? RatFunc(den_, num_) : *this;
  unsigned n = unsigned(e < 0 ? -e : e);
  RatFunc result(1);
  for (unsigned i = 0; i < n; ++i) result *= base;
  return result;
}

RatFunc RatFunc::power_substitute(int k) const {
  if (den_.is_one()) return RatFunc(num_.power_substitute(k));
  return RatFunc(num_.power_substitute(k), den_.power_substitute(k));
}

RatFunc RatFunc::invert_vars(std::initializer_list<Var> vars) const {
  return RatFunc(num_.invert_vars(vars), den_.invert_vars(vars));
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

void RatFuncSum::add(const RatFunc& f) { add_fraction(f.num(), f.den()); }

void RatFuncSum::add(const RatFunc& f, const Rational& scale) {
  if (scale == 0) return;
  add_fraction(f.num() * scale, f.den());
}

void RatFuncSum::add_fraction(LaurentPoly num, const LaurentPoly& den) {
  if (num.is_zero()) return;
  for (auto& g : groups_) {
    if (g.den == den) {
      g.num += num;
      return;
    }
  }
  groups_.push_back({den, std::move(num)});
}

RatFunc RatFuncSum::result() const {
  RatFunc total;
  for (const auto& g : groups_) {
    if (g.num.is_zero()) continue;
    total += RatFunc(g.num, g.den);
  }
  return total;
}

}  // namespace parkqt
