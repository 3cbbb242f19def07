#pragma once

/**
 * @file symfun.hpp
 * @brief Symmetric functions over RatFunc coefficients.
 *
 * The power basis is the pivot: products, plethysm and both scalar products
 * are evaluated on p-expansions, and the m/h/e/s bases reach p through
 * rational transition matrices cached per degree.
 */

#include "parkqt/partition.hpp"
#include "parkqt/ratfunc.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace parkqt {

enum class Basis { p, m, h, e, s };

char basis_tag(Basis b);
/// Accepts 'p', 'm', 'h', 'e', 's'. Throws std::invalid_argument.
Basis parse_basis(char c);

class SymF {
 public:
  using Terms = std::map<Partition, RatFunc, PartitionLess>;

  SymF() = default;
  explicit SymF(Basis b) : basis_(b) {}
  SymF(Basis b, Terms terms);

  static SymF scalar(const RatFunc& c);
  static SymF one() { return scalar(RatFunc(1)); }
  static SymF element(Basis b, const Partition& la, const RatFunc& c = RatFunc(1));
  static SymF pn(int k) { return element(Basis::p, {k}); }
  static SymF hn(int n);
  static SymF en(int n);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  RatFunc coeff(const Partition& la) const;
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero function.
  int max_degree() const;
  int min_degree() const;
  bool is_homogeneous() const { return is_zero() || max_degree() == min_degree(); }
  SymF degree_part(int d) const;
  /// True iff every coefficient has denominator 1.
  bool is_laurent() const;

  void add_term(const Partition& la, const RatFunc& c);
  SymF operator-() const;
  SymF& operator+=(const SymF& o);
  SymF& operator-=(const SymF& o);
  SymF& operator*=(const RatFunc& c);
  friend SymF operator+(SymF a, const SymF& b) { return a += b; }
  friend SymF operator-(SymF a, const SymF& b) { return a -= b; }
  friend SymF operator*(SymF a, const RatFunc& c) { return a *= c; }
  friend SymF operator*(const RatFunc& c, SymF a) { return a *= c; }
  /// Product, returned in the power basis.
  friend SymF operator*(const SymF& a, const SymF& b);
  /// Equality as symmetric functions (basis-independent).
  bool operator==(const SymF& o) const;
  bool operator!=(const SymF& o) const { return !(*this == o); }

  SymF map_coeffs(const std::function<RatFunc(const RatFunc&)>& fn) const;
  /// "s[2,1]*(1 + q) + s[3]" style rendering in the stored basis.
  std::string to_string() const;

 private:
  Basis basis_ = Basis::p;
  Terms terms_;
};

/// Accumulates partition-keyed coefficients with grouped fraction sums.
class SymFBuilder {
 public:
  explicit SymFBuilder(Basis b) : basis_(b) {}
  void add(const Partition& la, const RatFunc& c);
  void add(const Partition& la, const RatFunc& c, const Rational& scale);
  void add_poly(const Partition& la, const LaurentPoly& c);
  SymF build() const;

 private:
  Basis basis_;
  std::map<Partition, RatFuncSum, PartitionLess> acc_;
};

/// Rational transition matrix rows: element b_la as a combination of p_rho.
const std::vector<std::pair<Partition, Rational>>& to_power_row(Basis b, const Partition& la);

SymF convert(const SymF& f, Basis target);
inline SymF to_power(const SymF& f) { return convert(f, Basis::p); }

/**
 * Plethystic alphabet E = (x_num/x_den) X + s_num/s_den.
 * Numerators may carry eps and z; denominators must be eps-free.
 */
struct Alphabet {
  LaurentPoly x_num{0};
  LaurentPoly x_den{1};
  LaurentPoly s_num{0};
  LaurentPoly s_den{1};

  static Alphabet X(const LaurentPoly& num = LaurentPoly(1), const LaurentPoly& den = LaurentPoly(1));
  static Alphabet scalar(const LaurentPoly& num, const LaurentPoly& den = LaurentPoly(1));
  Alphabet plus_scalar(const LaurentPoly& num, const LaurentPoly& den = LaurentPoly(1)) const;
  bool has_x() const { return !x_num.is_zero(); }
  /// p_k[E] = a p_k[X] + b with eps folded to -1.
  std::pair<RatFunc, RatFunc> power(int k) const;
};

/// F[E], in the power basis. A scalar alphabet yields a degree-0 result.
SymF plethysm(const SymF& f, const Alphabet& e);
/// Coefficientwise plethysm for scalar alphabets: F[E] as a RatFunc.
RatFunc evaluate(const SymF& f, const Alphabet& e);

SymF omega_invol(const SymF& f);
RatFunc hall(const SymF& f, const SymF& g);
/// (-1)^{|rho|-l(rho)} prod (1-t^{rho_i})(1-q^{rho_i}) z_rho.
LaurentPoly star_weight(const Partition& rho);
RatFunc star(const SymF& f, const SymF& g);
/// h_m[E] for m = 0..dmax, the graded pieces of Omega[E].
std::vector<SymF> omega_series(const Alphabet& e, int dmax);
/// G^perp F, returned in the power basis.
SymF perp(const SymF& g, const SymF& f);
/// Coefficient of z^a in every coefficient (denominators must be z-free).
SymF coeff_z(const SymF& f, int a);

}  // namespace parkqt
