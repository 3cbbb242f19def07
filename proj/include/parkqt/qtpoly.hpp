#pragma once

/**
 * @file qtpoly.hpp
 * @brief Polynomials in t and q with nonnegative integer coefficients.
 *
 * The common result type of the operator, recursion and enumeration routes.
 */

#include "parkqt/laurent.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace parkqt {

class QtPoly {
 public:
  /// Keyed by (t-exponent, q-exponent).
  using Key = std::pair<int, int>;

  QtPoly() = default;
  static QtPoly monomial(int t_exp, int q_exp, std::int64_t coef = 1);
  /// Throws std::domain_error unless f is a polynomial in q, t with
  /// nonnegative integer coefficients.
  static QtPoly from_laurent(const LaurentPoly& f);

  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int t_exp, int q_exp) const;
  /// Sum of coefficients.
  std::int64_t total() const;

  void add(int t_exp, int q_exp, std::int64_t coef = 1);
  QtPoly& operator+=(const QtPoly& o);
  friend QtPoly operator+(QtPoly a, const QtPoly& b) { return a += b; }
  QtPoly shifted(int t_exp, int q_exp) const;
  bool operator==(const QtPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const QtPoly& o) const { return terms_ != o.terms_; }

  /// q -> 1.
  QtPoly at_q_one() const;
  LaurentPoly to_laurent() const;
  /// Canonical rendering shared with LaurentPoly, e.g. "t^3*q^4".
  std::string to_string() const;

 private:
  std::map<Key, std::int64_t> terms_;
};

}  // namespace parkqt
