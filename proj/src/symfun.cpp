#include "parkqt/symfun.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace parkqt {

char basis_tag(Basis b) {
  switch (b) {
    case Basis::p: return 'p';
    case Basis::m: return 'm';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    case Basis::s: return 's';
  }
  return '?';
}

Basis parse_basis(char c) {
  switch (c) {
    case 'p': return Basis::p;
    case 'm': return Basis::m;
    case 'h': return Basis::h;
    case 'e': return Basis::e;
    case 's': return Basis::s;
    default: throw std::invalid_argument(std::string("unknown basis tag: ") + c);
  }
}

namespace {

using Row = std::vector<std::pair<Partition, Rational>>;
using Dense = std::vector<std::vector<Rational>>;
using RatMap = std::map<Partition, Rational, PartitionLess>;

struct DegreeTables {
  std::vector<Partition> parts;
  std::map<Partition, int, PartitionLess> index;
  std::array<std::vector<Row>, 5> to_p;    // element -> p combination
  std::array<std::vector<Row>, 5> from_p;  // p_rho -> basis combination
};

RatMap mul_maps(const RatMap& a, const RatMap& b) {
  RatMap out;
  for (const auto& [la, x] : a)
    for (const auto& [mu, y] : b) out[merge(la, mu)] += x * y;
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

/// h_k (sign = false) or e_k (sign = true) in the power basis.
RatMap hk_power(int k, bool sign) {
  RatMap out;
  for (const auto& rho : partitions(k)) {
    Rational c(BigInt(1), z_coef(rho));
    c.canonicalize();
    if (sign && sign_eps(rho) < 0) c = -c;
    out[rho] = c;
  }
  return out;
}

/// Jacobi-Trudi determinant det(h_{la_i - i + j}) as a signed h-expansion.
void jacobi_trudi(const Partition& la, std::size_t row, std::vector<bool>& used, int sign, Partition& acc,
                  std::map<Partition, long, PartitionLess>& out) {
  const std::size_t l = la.size();
  if (row == l) {
    Partition key(acc);
    std::sort(key.begin(), key.end(), std::greater<int>());
    out[key] += sign;
    return;
  }
  int unused_before = 0;
  for (std::size_t j = 0; j < l; ++j) {
    if (used[j]) continue;
    int idx = la[row] - int(row) + int(j);
    if (idx >= 0) {
      used[j] = true;
      if (idx > 0) acc.push_back(idx);
      jacobi_trudi(la, row + 1, used, (unused_before % 2) ? -sign : sign, acc, out);
      if (idx > 0) acc.pop_back();
      used[j] = false;
    }
    ++unused_before;
  }
}

/// Coefficient of x^mu in p_rho: assignments of the parts of rho to the rows
/// of mu with matching sums.
long p_to_m_coef(const Partition& rho, std::size_t i, std::vector<int>& room) {
  if (i == rho.size()) {
    for (int r : room)
      if (r != 0) return 0;
    return 1;
  }
  long total = 0;
  for (auto& r : room) {
    if (r >= rho[i]) {
      r -= rho[i];
      total += p_to_m_coef(rho, i + 1, room);
      r += rho[i];
    }
  }
  return total;
}

Dense invert(Dense a) {
  const std::size_t n = a.size();
  Dense inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular transition matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rational s = Rational(1) / a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= s;
      inv[c][k] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

std::unique_ptr<DegreeTables> build_tables(int n) {
  auto tab = std::make_unique<DegreeTables>();
  tab->parts = partitions(n);
  const std::size_t N = tab->parts.size();
  for (std::size_t i = 0; i < N; ++i) tab->index[tab->parts[i]] = int(i);

  auto dense_of = [&](const RatMap& m) {
    std::vector<Rational> row(N, Rational(0));
    for (const auto& [rho, c] : m) row[tab->index.at(rho)] = c;
    return row;
  };
  std::array<Dense, 5> dense;
  std::vector<RatMap> hk(n + 1), ek(n + 1);
  for (int k = 1; k <= n; ++k) {
    hk[k] = hk_power(k, false);
    ek[k] = hk_power(k, true);
  }
  std::vector<RatMap> hrows;
  for (const auto& la : tab->parts) {
    RatMap h{{Partition{}, Rational(1)}}, e{{Partition{}, Rational(1)}};
    for (int part : la) {
      h = mul_maps(h, hk[part]);
      e = mul_maps(e, ek[part]);
    }
    hrows.push_back(h);
    dense[int(Basis::h)].push_back(dense_of(h));
    dense[int(Basis::e)].push_back(dense_of(e));
    std::vector<Rational> unit(N, Rational(0));
    unit[tab->index.at(la)] = 1;
    dense[int(Basis::p)].push_back(unit);
  }
  for (const auto& la : tab->parts) {
    std::map<Partition, long, PartitionLess> jt;
    std::vector<bool> used(la.size(), false);
    Partition acc;
    jacobi_trudi(la, 0, used, 1, acc, jt);
    std::vector<Rational> row(N, Rational(0));
    for (const auto& [mu, c] : jt) {
      if (c == 0) continue;
      const auto& hrow = dense[int(Basis::h)][tab->index.at(mu)];
      for (std::size_t k = 0; k < N; ++k) row[k] += Rational(c) * hrow[k];
    }
    dense[int(Basis::s)].push_back(row);
  }
  Dense p2m(N, std::vector<Rational>(N, Rational(0)));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      std::vector<int> room(tab->parts[c]);
      p2m[r][c] = p_to_m_coef(tab->parts[r], 0, room);
    }
  }
  dense[int(Basis::m)] = invert(p2m);

  auto sparse = [&](const Dense& d) {
    std::vector<Row> rows;
    for (const auto& drow : d) {
      Row row;
      for (std::size_t k = 0; k < N; ++k)
        if (drow[k] != 0) row.emplace_back(tab->parts[k], drow[k]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  for (int b = 0; b < 5; ++b) {
    tab->to_p[b] = sparse(dense[b]);
    tab->from_p[b] = sparse(b == int(Basis::m) ? p2m : invert(dense[b]));
  }
  return tab;
}

const DegreeTables& tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DegreeTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
  return *it->second;
}

}  // namespace

const std::vector<std::pair<Partition, Rational>>& to_power_row(Basis b, const Partition& la) {
  const auto& tab = tables(size(la));
  return tab.to_p[int(b)][tab.index.at(la)];
}

SymF::SymF(Basis b, Terms terms) : basis_(b), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

SymF SymF::scalar(const RatFunc& c) { return element(Basis::p, {}, c); }

SymF SymF::element(Basis b, const Partition& la, const RatFunc& c) {
  if (!is_partition(la)) throw std::invalid_argument("not a partition: " + parkqt::to_string(la));
  SymF f(b);
  f.add_term(la, c);
  return f;
}

SymF SymF::hn(int n) { return n < 0 ? SymF(Basis::h) : element(Basis::h, n == 0 ? Partition{} : Partition{n}); }
SymF SymF::en(int n) { return n < 0 ? SymF(Basis::e) : element(Basis::e, n == 0 ? Partition{} : Partition{n}); }

RatFunc SymF::coeff(const Partition& la) const {
  auto it = terms_.find(la);
  return it == terms_.end() ? RatFunc() : it->second;
}

int SymF::max_degree() const { return terms_.empty() ? -1 : size(terms_.rbegin()->first); }
int SymF::min_degree() const { return terms_.empty() ? -1 : size(terms_.begin()->first); }

SymF SymF::degree_part(int d) const {
  SymF out(basis_);
  for (const auto& [la, c] : terms_)
    if (size(la) == d) out.terms_.emplace(la, c);
  return out;
}

bool SymF::is_laurent() const {
  for (const auto& [la, c] : terms_)
    if (!c.is_laurent()) return false;
  return true;
}

void SymF::add_term(const Partition& la, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(la, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymF SymF::operator-() const {
  SymF out(basis_);
  for (const auto& [la, c] : terms_) out.terms_.emplace(la, -c);
  return out;
}

SymF& SymF::operator+=(const SymF& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.basis_ != basis_) return *this += convert(o, basis_);
  for (const auto& [la, c] : o.terms_) add_term(la, c);
  return *this;
}

SymF& SymF::operator-=(const SymF& o) { return *this += -o; }

SymF& SymF::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [la, x] : terms_) x *= c;
  return *this;
}

SymF operator*(const SymF& a, const SymF& b) {
  SymF pa = to_power(a), pb = to_power(b);
  SymFBuilder out(Basis::p);
  for (const auto& [la, x] : pa.terms())
    for (const auto& [mu, y] : pb.terms()) out.add(merge(la, mu), x * y);
  return out.build();
}

bool SymF::operator==(const SymF& o) const {
  if (basis_ == o.basis_) return terms_ == o.terms_;
  return to_power(*this).terms_ == to_power(o).terms_;
}

SymF SymF::map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const {
  SymF out(basis_);
  for (const auto& [la, c] : terms_) out.add_term(la, fn(c));
  return out;
}

std::string SymF::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [la, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string key = std::string(1, basis_tag(basis_)) + parkqt::to_string(la);
    if (c == RatFunc(1)) {
      s += key;
      continue;
    }
    std::string cs = c.to_string();
    bool simple = cs.find(' ') == std::string::npos;
    s += (simple ? cs : "(" + cs + ")") + "*" + key;
  }
  return s;
}

void SymFBuilder::add(const Partition& la, const RatFunc& c) { acc_[la].add(c); }

void SymFBuilder::add(const Partition& la, const RatFunc& c, const Rational& scale) { acc_[la].add(c, scale); }

void SymFBuilder::add_poly(const Partition& la, const LaurentPoly& c) { acc_[la].add_fraction(c, LaurentPoly(1)); }

SymF SymFBuilder::build() const {
  SymF out(basis_);
  for (const auto& [la, sum] : acc_) out.add_term(la, sum.result());
  return out;
}

SymF convert(const SymF& f, Basis target) {
  if (f.basis() == target) return f;
  SymF p(Basis::p);
  if (f.basis() == Basis::p) {
    p = f;
  } else {
    SymFBuilder acc(Basis::p);
    for (const auto& [la, c] : f.terms())
      for (const auto& [rho, r] : to_power_row(f.basis(), la)) acc.add(rho, c, r);
    p = acc.build();
  }
  if (target == Basis::p) return p;
  SymFBuilder acc(target);
  for (const auto& [rho, c] : p.terms()) {
    const auto& tab = tables(size(rho));
    for (const auto& [la, r] : tab.from_p[int(target)][tab.index.at(rho)]) acc.add(la, c, r);
  }
  return acc.build();
}

Alphabet Alphabet::X(const LaurentPoly& num, const LaurentPoly& den) {
  Alphabet a;
  a.x_num = num;
  a.x_den = den;
  return a;
}

Alphabet Alphabet::scalar(const LaurentPoly& num, const LaurentPoly& den) {
  Alphabet a;
  a.s_num = num;
  a.s_den = den;
  return a;
}

Alphabet Alphabet::plus_scalar(const LaurentPoly& num, const LaurentPoly& den) const {
  Alphabet a(*this);
  if (a.s_num.is_zero()) {
    a.s_num = num;
    a.s_den = den;
  } else if (a.s_den == den) {
    a.s_num += num;
  } else {
    a.s_num = a.s_num * den + num * a.s_den;
    a.s_den = a.s_den * den;
  }
  return a;
}

std::pair<RatFunc, RatFunc> Alphabet::power(int k) const {
  auto part = [k](const LaurentPoly& num, const LaurentPoly& den) {
    if (num.is_zero()) return RatFunc();
    return RatFunc(num.power_substitute(k).fold_eps(), den.power_substitute(k).fold_eps());
  };
  return {part(x_num, x_den), part(s_num, s_den)};
}

SymF plethysm(const SymF& f, const Alphabet& e) {
  SymF fp = to_power(f);
  if (fp.is_zero()) return fp;
  if (e.x_num.is_one() && e.x_den.is_one() && e.s_num.is_zero()) return fp;
  const int top = fp.max_degree();
  // pw[k][j] = (a_k^j, b_k^j)
  std::vector<std::vector<std::pair<RatFunc, RatFunc>>> pw(top + 1);
  auto power_of = [&](int k, int j) -> const std::pair<RatFunc, RatFunc>& {
    auto& v = pw[k];
    if (v.empty()) v.emplace_back(RatFunc(1), RatFunc(1));
    if (int(v.size()) <= j) {
      auto ab = e.power(k);
      while (int(v.size()) <= j) v.emplace_back(v.back().first * ab.first, v.back().second * ab.second);
    }
    return v[j];
  };
  SymFBuilder out(Basis::p);
  for (const auto& [rho, c] : fp.terms()) {
    auto mult = multiplicities(rho);
    std::vector<int> ks;
    for (std::size_t k = 1; k < mult.size(); ++k)
      if (mult[k] > 0) ks.push_back(int(k));
    std::vector<int> js(ks.size(), 0);
    const bool has_x = e.has_x();
    if (!has_x) {
      RatFunc coef = c;
      for (int k : ks) coef *= power_of(k, mult[k]).second;
      out.add({}, coef);
      continue;
    }
    // Enumerate j_k in [0, m_k]: choose j_k factors of a_k p_k, the rest b_k.
    while (true) {
      RatFunc coef = c;
      Partition key;
      for (std::size_t i = 0; i < ks.size(); ++i) {
        int k = ks[i], m = mult[k], j = js[i];
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), unsigned(m), unsigned(j));
        coef *= power_of(k, j).first * power_of(k, m - j).second;
        coef *= Rational(binom);
        for (int r = 0; r < j; ++r) key.push_back(k);
        if (coef.is_zero()) break;
      }
      if (!coef.is_zero()) {
        std::sort(key.begin(), key.end(), std::greater<int>());
        out.add(key, coef);
      }
      std::size_t i = 0;
      while (i < ks.size() && js[i] == mult[ks[i]]) js[i++] = 0;
      if (i == ks.size()) break;
      ++js[i];
    }
  }
  return out.build();
}

RatFunc evaluate(const SymF& f, const Alphabet& e) {
  if (e.has_x()) throw std::invalid_argument("evaluate: alphabet carries X");
  return plethysm(f, e).coeff({});
}

SymF omega_invol(const SymF& f) {
  switch (f.basis()) {
    case Basis::p: {
      SymF out(Basis::p);
      for (const auto& [rho, c] : f.terms()) out.add_term(rho, sign_eps(rho) < 0 ? -c : c);
      return out;
    }
    case Basis::h:
    case Basis::e: {
      SymF out(f.basis() == Basis::h ? Basis::e : Basis::h);
      for (const auto& [la, c] : f.terms()) out.add_term(la, c);
      return out;
    }
    case Basis::s: {
      SymF out(Basis::s);
      for (const auto& [la, c] : f.terms()) out.add_term(conjugate(la), c);
      return out;
    }
    case Basis::m:
      return convert(omega_invol(to_power(f)), Basis::m);
  }
  return f;
}

namespace {

RatFunc weighted_pairing(const SymF& f, const SymF& g, const std::function<LaurentPoly(const Partition&)>& w) {
  SymF pf = to_power(f), pg = to_power(g);
  RatFuncSum sum;
  auto it = pf.terms().begin();
  auto jt = pg.terms().begin();
  PartitionLess less;
  while (it != pf.terms().end() && jt != pg.terms().end()) {
    if (less(it->first, jt->first)) {
      ++it;
    } else if (less(jt->first, it->first)) {
      ++jt;
    } else {
      RatFunc prod = it->second * jt->second;
      sum.add_fraction(prod.num() * w(it->first), prod.den());
      ++it;
      ++jt;
    }
  }
  return sum.result();
}

}  // namespace

RatFunc hall(const SymF& f, const SymF& g) {
  return weighted_pairing(f, g, [](const Partition& rho) { return LaurentPoly(Rational(z_coef(rho))); });
}

LaurentPoly star_weight(const Partition& rho) {
  LaurentPoly w(Rational(z_coef(rho) * sign_eps(rho)));
  const LaurentPoly one(1);
  for (int k : rho) w *= (one - LaurentPoly::t(k)) * (one - LaurentPoly::q(k));
  return w;
}

RatFunc star(const SymF& f, const SymF& g) { return weighted_pairing(f, g, star_weight); }

std::vector<SymF> omega_series(const Alphabet& e, int dmax) {
  if (dmax < 0) throw std::invalid_argument("omega_series: negative degree");
  std::vector<SymF> out;
  for (int m = 0; m <= dmax; ++m) out.push_back(plethysm(SymF::hn(m), e));
  return out;
}

SymF perp(const SymF& g, const SymF& f) {
  SymF pg = to_power(g), pf = to_power(f);
  SymFBuilder out(Basis::p);
  for (const auto& [la, x] : pg.terms()) {
    auto ml = multiplicities(la);
    for (const auto& [rho, y] : pf.terms()) {
      auto mr = multiplicities(rho);
      if (mr.size() < ml.size()) continue;
      BigInt coef = 1;
      bool fits = true;
      Partition rest;
      for (std::size_t k = 1; k < mr.size() && fits; ++k) {
        int take = k < ml.size() ? ml[k] : 0;
        if (take > mr[k]) {
          fits = false;
          break;
        }
        for (int i = 0; i < take; ++i) coef *= BigInt(long(k)) * (mr[k] - i);
        for (int i = 0; i < mr[k] - take; ++i) rest.push_back(int(k));
      }
      if (!fits) continue;
      std::sort(rest.begin(), rest.end(), std::greater<int>());
      out.add(rest, x * y, Rational(coef));
    }
  }
  return out.build();
}

SymF coeff_z(const SymF& f, int a) {
  return f.map_coeffs([a](const RatFunc& c) {
    if (c.den().has_var(Var::z)) throw std::domain_error("coeff_z: z in denominator");
    return RatFunc(coeff_z(c.num(), a), c.den());
  });
}

}  // namespace parkqt
