#pragma once

/**
 * @file ratfunc.hpp
 * @brief Reduced rational functions num/den over Q in q, t, z.
 *
 * Canonical form: gcd(num, den) is a unit; den is a genuine polynomial with
 * no monomial factor and its canonically-largest term has coefficient 1.
 * Laurent content lives in num. Equal values have identical (num, den).
 */

#include "parkqt/laurent.hpp"

#include <string>
#include <vector>

namespace parkqt {

/// gcd of two polynomials (no negative exponents, no eps) over Q, returned
/// primitive over Z with positive leading coefficient. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b of multivariate polynomials (Laurent allowed when b is
/// a monomial). Throws std::domain_error if b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
/// Like exact_divide, but returns nullopt instead of throwing.
std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a, const LaurentPoly& b);

class RatFunc {
 public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator*=(const Rational& c);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator*(RatFunc a, const Rational& c) { return a *= c; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc pow(int e) const;
  /// p_k action on a rational expression.
  RatFunc power_substitute(int k) const;
  RatFunc invert_vars(std::initializer_list<Var> vars) const;

  std::string to_string() const;

 private:
  struct Raw {};
  RatFunc(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Reduce num/den to canonical form. Throws std::domain_error on den == 0.
RatFunc rf_normalize(const LaurentPoly& num, const LaurentPoly& den);

/// Cross-multiplication equality test, independent of canonical form.
bool rf_cross_equal(const RatFunc& a, const RatFunc& b);

/**
 * Sums many fractions while grouping them by denominator so that only one
 * gcd per distinct denominator is paid.
 */
class RatFuncSum {
 public:
  void add(const RatFunc& f);
  void add(const RatFunc& f, const Rational& scale);
  void add_fraction(LaurentPoly num, const LaurentPoly& den);
  RatFunc result() const;
  bool empty() const { return groups_.empty(); }

 private:
  struct Group {
    LaurentPoly den;
    LaurentPoly num;
  };
  std::vector<Group> groups_;
};

}  // namespace parkqt
