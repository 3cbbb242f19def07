#include "parkqt/qtpoly.hpp"

#include <stdexcept>

namespace parkqt {

QtPoly QtPoly::monomial(int t_exp, int q_exp, std::int64_t coef) {
  QtPoly p;
  p.add(t_exp, q_exp, coef);
  return p;
}

QtPoly QtPoly::from_laurent(const LaurentPoly& f) {
  QtPoly p;
  for (const auto& term : f.terms()) {
    const Monomial& m = term.mono;
    if (m.z != 0 || m.eps != 0 || m.q < 0 || m.t < 0)
      throw std::domain_error("not a polynomial in q, t: " + f.to_string());
    if (term.coef.get_den() != 1 || term.coef < 0 || !term.coef.get_num().fits_slong_p())
      throw std::domain_error("coefficient not a nonnegative integer: " + f.to_string());
    p.add(m.t, m.q, term.coef.get_num().get_si());
  }
  return p;
}

std::int64_t QtPoly::coeff(int t_exp, int q_exp) const {
  auto it = terms_.find({t_exp, q_exp});
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t QtPoly::total() const {
  std::int64_t s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

void QtPoly::add(int t_exp, int q_exp, std::int64_t coef) {
  if (coef == 0) return;
  if (t_exp < 0 || q_exp < 0) throw std::domain_error("QtPoly: negative exponent");
  auto& slot = terms_[{t_exp, q_exp}];
  slot += coef;
  if (slot < 0) throw std::domain_error("QtPoly: negative coefficient");
  if (slot == 0) terms_.erase({t_exp, q_exp});
}

QtPoly& QtPoly::operator+=(const QtPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

QtPoly QtPoly::shifted(int t_exp, int q_exp) const {
  QtPoly p;
  for (const auto& [k, c] : terms_) p.add(k.first + t_exp, k.second + q_exp, c);
  return p;
}

QtPoly QtPoly::at_q_one() const {
  QtPoly p;
  for (const auto& [k, c] : terms_) p.add(k.first, 0, c);
  return p;
}

LaurentPoly QtPoly::to_laurent() const {
  std::vector<Term> terms;
  for (const auto& [k, c] : terms_) terms.push_back({Monomial{k.second, k.first, 0, 0}, Rational(long(c))});
  return LaurentPoly::from_terms(std::move(terms));
}

std::string QtPoly::to_string() const { return to_laurent().to_string(); }

}  // namespace parkqt
