#pragma once

/**
 * @file laurent.hpp
 * @brief Exact sparse Laurent polynomials in q, t, z and the sign variable eps.
 *
 * Coefficients are arbitrary-precision rationals (GMP). Terms are kept in a
 * sorted vector in canonical order: total degree (q+t+z), then the t exponent,
 * then q, then z, then eps. The eps exponent lives in {0,1}; folding eps -> -1
 * is an explicit operation so that eps can ride inside plethystic brackets.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parkqt {

using Rational = mpq_class;
using BigInt = mpz_class;

std::string to_string(const Rational& r);

enum class Var : int { q = 0, t = 1, z = 2, eps = 3 };

struct Monomial {
  int q = 0;
  int t = 0;
  int z = 0;
  int eps = 0;  // 0 or 1

  int total() const { return q + t + z; }
  int exponent(Var v) const;
  int& exponent(Var v);

  Monomial operator*(const Monomial& o) const {
    return {q + o.q, t + o.t, z + o.z, (eps + o.eps) & 1};
  }
  bool operator==(const Monomial&) const = default;
};

/// Canonical term order used for storage and rendering.
bool canonical_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coef;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Monomial& m, const Rational& c);

  static LaurentPoly var(Var v, int exponent = 1);
  static LaurentPoly q(int e = 1) { return var(Var::q, e); }
  static LaurentPoly t(int e = 1) { return var(Var::t, e); }
  static LaurentPoly z(int e = 1) { return var(Var::z, e); }
  static LaurentPoly eps() { return var(Var::eps, 1); }
  /// Builds from an unsorted list; merges duplicates and drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  /// Constant term value (0 if absent).
  Rational constant_term() const;
  bool has_var(Var v) const;
  bool has_eps() const { return has_var(Var::eps); }
  bool has_negative_exponents() const;
  int max_degree(Var v) const;
  int min_degree(Var v) const;
  /// Largest term in canonical order. Precondition: nonzero.
  const Term& lead() const { return terms_.back(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(unsigned e) const;
  LaurentPoly mul_monomial(const Monomial& m) const;

  /// p_k action: every exponent multiplied by k (eps exponent taken mod 2).
  LaurentPoly power_substitute(int k) const;
  /// Replace eps by -1.
  LaurentPoly fold_eps() const;
  /// Replace the listed variables by their inverses.
  LaurentPoly invert_vars(std::initializer_list<Var> vars) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // sorted by canonical_less, no zero coefficients
};

/// Coefficient of z^a (the result has no z).
LaurentPoly coeff_z(const LaurentPoly& f, int a);

/// Bindings for specialize(); eps defaults to -1 when bound without a value.
struct Bindings {
  std::optional<Rational> q, t, z, eps;
  bool fold_eps = false;
};

/// Exact substitution of the bound variables. Throws std::domain_error when a
/// variable carrying a negative exponent is bound to zero.
LaurentPoly specialize(const LaurentPoly& f, const Bindings& b);

enum class LpOp { add, mul, neg };
LaurentPoly lp_arith(LpOp op, const LaurentPoly& a, const LaurentPoly& b = LaurentPoly());

}  // namespace parkqt
