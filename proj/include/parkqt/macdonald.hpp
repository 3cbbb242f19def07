#pragma once

/**
 * @file macdonald.hpp
 * @brief Modified Macdonald polynomials and the operators built on them.
 *
 * H~_mu is obtained by an exact linear solve: its Schur coefficients are
 * pinned by star-orthogonality to the previously computed H~ of the same
 * degree, by the triangularity of H~_mu[X(t-1)] in dominance order, and by
 * K~_{(n),mu} = 1. The solve runs at rational sample points, the answer is
 * interpolated, and the interpolant is then checked symbolically.
 */

#include "parkqt/caps.hpp"
#include "parkqt/qtpoly.hpp"
#include "parkqt/symfun.hpp"

#include <map>
#include <vector>

namespace parkqt {

/// (1-t)(1-q).
LaurentPoly M_poly();

struct MuStats {
  LaurentPoly T;
  LaurentPoly B;
  LaurentPoly Pi;
  LaurentPoly D;
  LaurentPoly w;
  int nmu = 0;
  int nmuprime = 0;
};

MuStats mu_stats(const Partition& mu);
/// The 2|mu| binomial factors whose product is w_mu.
std::vector<LaurentPoly> w_factors(const Partition& mu);

/// Schur expansion of H~_mu (coefficients are polynomials in q, t).
const SymF& htilde(const Partition& mu, int cap = kDefaultDegreeCap);
/// Same function in the power basis.
const SymF& htilde_power(const Partition& mu, int cap = kDefaultDegreeCap);

/// Coefficients c_mu with F = sum c_mu H~_mu, for F homogeneous.
std::map<Partition, RatFunc, PartitionLess> expand_htilde(const SymF& f, int cap = kDefaultDegreeCap);

/// Delta_G F = sum_mu c_mu G[B_mu] H~_mu (any F; power basis result).
SymF delta(const SymF& g, const SymF& f, int cap = kDefaultDegreeCap);
SymF nabla(const SymF& f, int cap = kDefaultDegreeCap);

SymF op_C(int a, const SymF& f, int cap = kDefaultDegreeCap);
SymF op_B(int a, const SymF& f, int cap = kDefaultDegreeCap);
SymF op_C_star(int a, const SymF& f, int cap = kDefaultDegreeCap);
SymF op_B_star(int a, const SymF& f, int cap = kDefaultDegreeCap);

struct PieriEntry {
  Partition mu;  // mu <- nu
  RatFunc c;
  RatFunc d;
};

struct PieriData {
  Partition nu;
  std::vector<PieriEntry> up;
};

/// d from the expansion of e_1 H~_nu, c from d = M c w_nu / w_mu.
PieriData pieri(const Partition& nu, int cap = kDefaultDegreeCap);
/// c_{mu nu} read off e_1^perp H~_mu directly, keyed by nu -> mu.
std::map<Partition, RatFunc, PartitionLess> pieri_c_direct(const Partition& mu, int cap = kDefaultDegreeCap);

/// C_{p_1} C_{p_2} ... C_{p_k} 1 (memoized).
const SymF& c_chain(const Composition& p, int cap = kDefaultDegreeCap);
SymF e_nk(int n, int k, int cap = kDefaultDegreeCap);

/// <Delta_{h_J} C_{p_1} ... C_{p_k} 1, e_n>.
QtPoly lhs_poly(int J, const Composition& p, int cap = kDefaultDegreeCap);

/// Knob for the triangularity constraints of the H~ solve. With
/// `incomparable = true` (the default) the vanishing of the s_nu coefficient
/// of H~_mu[X(t-1)] is imposed for every nu not below mu, including the
/// partitions that are incomparable with mu.
struct HTildeSolveOptions {
  bool incomparable = true;
};

/// Solves degree n from scratch (no memo) and reports whether the system had
/// full rank. Used to probe the constraint set.
bool htilde_system_full_rank(int n, const HTildeSolveOptions& opts);

}  // namespace parkqt
