#include "parkqt/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace parkqt {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int Monomial::exponent(Var v) const {
  switch (v) {
    case Var::q: return q;
    case Var::t: return t;
    case Var::z: return z;
    case Var::eps: return eps;
  }
  return 0;
}

int& Monomial::exponent(Var v) {
  switch (v) {
    case Var::q: return q;
    case Var::t: return t;
    case Var::z: return z;
    case Var::eps: break;
  }
  return eps;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  if (a.t != b.t) return a.t < b.t;
  if (a.q != b.q) return a.q < b.q;
  if (a.z != b.z) return a.z < b.z;
  return a.eps < b.eps;
}

namespace {

constexpr int kBias = 1 << 15;

std::uint64_t pack(const Monomial& m) {
  return (std::uint64_t(m.q + kBias) << 33) | (std::uint64_t(m.t + kBias) << 17) |
         (std::uint64_t(m.z + kBias) << 1) | std::uint64_t(m.eps);
}

Monomial unpack(std::uint64_t k) {
  Monomial m;
  m.eps = int(k & 1);
  m.z = int((k >> 1) & 0xFFFF) - kBias;
  m.t = int((k >> 17) & 0xFFFF) - kBias;
  m.q = int((k >> 33) & 0xFFFF) - kBias;
  return m;
}

void sort_terms(std::vector<Term>& v) {
  std::sort(v.begin(), v.end(),
            [](const Term& a, const Term& b) { return canonical_less(a.mono, b.mono); });
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.push_back({Monomial{}, Rational(c)});
}

// mpq_class built from a numerator and denominator is not reduced until
// canonicalize() runs; every coefficient is reduced on entry.
LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) {
    terms_.push_back({Monomial{}, c});
    terms_.back().coef.canonicalize();
  }
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
  if (c != 0) {
    Monomial mono = m;
    mono.eps &= 1;
    terms_.push_back({mono, c});
    terms_.back().coef.canonicalize();
  }
}

LaurentPoly LaurentPoly::var(Var v, int exponent) {
  Monomial m;
  if (v == Var::eps) {
    m.eps = exponent & 1;
  } else {
    m.exponent(v) = exponent;
  }
  return LaurentPoly(m, Rational(1));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  for (auto& term : terms) {
    term.coef.canonicalize();
    term.mono.eps &= 1;
  }
  sort_terms(terms);
  LaurentPoly out;
  for (auto& term : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == term.mono) {
      out.terms_.back().coef += term.coef;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coef == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(term));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coef == 0) out.terms_.pop_back();
  return out;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono == Monomial{} && terms_[0].coef == 1;
}

Rational LaurentPoly::constant_term() const {
  for (const auto& term : terms_)
    if (term.mono == Monomial{}) return term.coef;
  return Rational(0);
}

bool LaurentPoly::has_var(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& x) { return x.mono.exponent(v) != 0; });
}

bool LaurentPoly::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& x) {
    return x.mono.q < 0 || x.mono.t < 0 || x.mono.z < 0;
  });
}

int LaurentPoly::max_degree(Var v) const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int d = terms_[0].mono.exponent(v);
  for (const auto& term : terms_) d = std::max(d, term.mono.exponent(v));
  return d;
}

int LaurentPoly::min_degree(Var v) const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  int d = terms_[0].mono.exponent(v);
  for (const auto& term : terms_) d = std::min(d, term.mono.exponent(v));
  return d;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& term : out.terms_) term.coef = -term.coef;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && canonical_less(a->mono, b->mono))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || canonical_less(b->mono, a->mono)) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coef + b->coef;
      if (c != 0) merged.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return LaurentPoly();
  if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].mono) * a.terms_[0].coef;
  if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].mono) * b.terms_[0].coef;
  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpq_mul(prod.get_mpq_t(), x.coef.get_mpq_t(), y.coef.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(pack(x.mono * y.mono));
      if (inserted) {
        it->second = prod;
      } else {
        it->second += prod;
      }
    }
  }
  LaurentPoly out;
  out.terms_.reserve(acc.size());
  for (auto& [key, coef] : acc)
    if (coef != 0) out.terms_.push_back({unpack(key), std::move(coef)});
  sort_terms(out.terms_);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    Rational r = c;
    r.canonicalize();
    for (auto& term : terms_) term.coef *= r;
  }
  return *this;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m) const {
  LaurentPoly out = *this;
  for (auto& term : out.terms_) term.mono = term.mono * m;
  // Shifting by a monomial preserves the order of q,t,z but eps flips can
  // reorder equal-exponent pairs.
  if (m.eps != 0) out = from_terms(std::move(out.terms_));
  return out;
}

LaurentPoly LaurentPoly::power_substitute(int k) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    Monomial m{term.mono.q * k, term.mono.t * k, term.mono.z * k, (term.mono.eps * k) & 1};
    out.push_back({m, term.coef});
  }
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::fold_eps() const {
  if (!has_eps()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    Monomial m = term.mono;
    Rational c = term.coef;
    if (m.eps) {
      c = -c;
      m.eps = 0;
    }
    out.push_back({m, c});
  }
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::invert_vars(std::initializer_list<Var> vars) const {
  std::vector<Term> out = terms_;
  for (auto& term : out)
    for (Var v : vars)
      if (v != Var::eps) term.mono.exponent(v) = -term.mono.exponent(v);
  return from_terms(std::move(out));
}

namespace {

void append_factor(std::string& s, const char* name, int e) {
  if (e == 0) return;
  if (!s.empty()) s += '*';
  s += name;
  if (e != 1) s += '^' + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& term : terms_) {
    std::string mono;
    append_factor(mono, "t", term.mono.t);
    append_factor(mono, "q", term.mono.q);
    append_factor(mono, "z", term.mono.z);
    append_factor(mono, "eps", term.mono.eps);
    Rational c = term.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << parkqt::to_string(c);
    } else if (c == 1) {
      out << mono;
    } else {
      out << parkqt::to_string(c) << '*' << mono;
    }
  }
  return out.str();
}

LaurentPoly coeff_z(const LaurentPoly& f, int a) {
  std::vector<Term> out;
  for (const auto& term : f.terms()) {
    if (term.mono.z == a) {
      Monomial m = term.mono;
      m.z = 0;
      out.push_back({m, term.coef});
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("specialize: zero substituted for a negative exponent");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned n = unsigned(e < 0 ? -e : e);
  Rational r(1);
  for (unsigned i = 0; i < n; ++i) r *= b;
  return r;
}

}  // namespace

LaurentPoly specialize(const LaurentPoly& f, const Bindings& b) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& term : f.terms()) {
    Monomial m = term.mono;
    Rational c = term.coef;
    if (b.q) { c *= rational_pow(*b.q, m.q); m.q = 0; }
    if (b.t) { c *= rational_pow(*b.t, m.t); m.t = 0; }
    if (b.z) { c *= rational_pow(*b.z, m.z); m.z = 0; }
    if (b.eps || b.fold_eps) {
      Rational e = b.eps ? *b.eps : Rational(-1);
      if (m.eps) c *= e;
      m.eps = 0;
    }
    out.push_back({m, c});
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly lp_arith(LpOp op, const LaurentPoly& a, const LaurentPoly& b) {
  switch (op) {
    case LpOp::add: return a + b;
    case LpOp::mul: return a * b;
    case LpOp::neg: return -a;
  }
  return a;
}

}  // namespace parkqt
