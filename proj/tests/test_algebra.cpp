#include "parkqt/laurent.hpp"
#include "parkqt/qtpoly.hpp"
#include "parkqt/ratfunc.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parkqt;

namespace {

const LaurentPoly one(1);
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();
const LaurentPoly z = LaurentPoly::z();

LaurentPoly random_poly(std::mt19937& rng) {
  LaurentPoly f;
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) {
    Monomial m{static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 4), static_cast<int>(rng() % 3) - 1,
               static_cast<int>(rng() % 2)};
    f += LaurentPoly(m, Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
  }
  return f;
}

}  // namespace

TEST(LaurentPoly, Examples) {
  EXPECT_EQ(lp_arith(LpOp::add, one - t, t), one);
  EXPECT_EQ(lp_arith(LpOp::mul, one - q, one + q), one - q.pow(2));
  EXPECT_EQ(LaurentPoly::q(-1) * q, one);
  EXPECT_EQ(lp_arith(LpOp::neg, q), -q);
}

TEST(LaurentPoly, Rendering) {
  LaurentPoly f = LaurentPoly::t(3) * LaurentPoly::q(4) + LaurentPoly::t(4) * LaurentPoly::q(3);
  EXPECT_EQ(f.to_string(), "t^3*q^4 + t^4*q^3");
  EXPECT_EQ((LaurentPoly(Rational(1, 2)) * q).to_string(), "1/2*q");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, CoeffZ) {
  EXPECT_EQ(coeff_z(z.pow(2) + q * z, 1), q);
  EXPECT_EQ(coeff_z(t * LaurentPoly::z(-2), -2), t);
  EXPECT_EQ(coeff_z(LaurentPoly(3), 0), LaurentPoly(3));
}

TEST(LaurentPoly, Specialize) {
  Bindings q1;
  q1.q = Rational(1);
  EXPECT_EQ(specialize((q + q.pow(2)) * t, q1), LaurentPoly(2) * t);
  Bindings e;
  e.fold_eps = true;
  EXPECT_EQ(specialize(LaurentPoly::eps() * q, e), -q);
  LaurentPoly f = LaurentPoly::t(3) * LaurentPoly::q(4) + LaurentPoly::t(4) * LaurentPoly::q(3);
  EXPECT_EQ(specialize(f, q1), LaurentPoly::t(3) + LaurentPoly::t(4));
}

TEST(LaurentPoly, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a + (-a)).is_zero());
  }
}

TEST(LaurentPoly, SpecializeIsMultiplicative) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    Bindings s;
    if (rng() % 2) s.q = Rational(static_cast<long>(rng() % 5) + 1, 2);
    if (rng() % 2) s.t = Rational(-static_cast<long>(rng() % 3) - 1);
    if (rng() % 2) s.z = Rational(3);
    s.fold_eps = rng() % 2;
    EXPECT_EQ(specialize(lp_arith(LpOp::mul, a, b), s),
              lp_arith(LpOp::mul, specialize(a, s), specialize(b, s)));
  }
}

TEST(LaurentPoly, FoldEpsIsIdempotent) {
  std::mt19937 rng(3);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly a = random_poly(rng);
    EXPECT_EQ(a.fold_eps().fold_eps(), a.fold_eps());
    EXPECT_FALSE(a.fold_eps().has_eps());
  }
}

TEST(RatFunc, Normalize) {
  EXPECT_EQ(rf_normalize(q.pow(2) - one, q - one), RatFunc(q + one));
  EXPECT_TRUE(rf_normalize(LaurentPoly(), one - t).is_zero());
  EXPECT_EQ(rf_normalize((one - t) * (one - q), one - q), RatFunc(one - t));
  EXPECT_THROW(rf_normalize(one, LaurentPoly()), std::domain_error);
}

TEST(RatFunc, EqualityIsCrossMultiplication) {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    LaurentPoly a = random_poly(rng).fold_eps(), b = random_poly(rng).fold_eps(), c = random_poly(rng).fold_eps();
    if (b.is_zero() || c.is_zero()) continue;
    RatFunc x(a * c, b * c), y(a, b);
    EXPECT_EQ(x, y);
    EXPECT_TRUE(rf_cross_equal(x, y));
    EXPECT_EQ(x.num() * y.den(), y.num() * x.den());
  }
}

TEST(RatFunc, FieldOperations) {
  RatFunc a(one, one - q), b(t, one - t);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.pow(-1) * a, RatFunc(1));
  EXPECT_EQ(RatFunc(q, one).invert_vars({Var::q}), RatFunc(LaurentPoly::q(-1)));
}

TEST(RatFuncSum, MatchesPlainSum) {
  RatFuncSum s;
  RatFunc plain;
  for (int k = 1; k <= 4; ++k) {
    RatFunc term(LaurentPoly::t(k), one - LaurentPoly::q(k));
    s.add(term);
    plain += term;
  }
  EXPECT_EQ(s.result(), plain);
}

TEST(QtPoly, RoundTripAndQOne) {
  QtPoly p;
  p.add(3, 4);
  p.add(4, 3);
  EXPECT_EQ(p.to_string(), "t^3*q^4 + t^4*q^3");
  QtPoly q1;
  q1.add(3, 0);
  q1.add(4, 0);
  EXPECT_EQ(p.at_q_one(), q1);
  EXPECT_EQ(QtPoly::from_laurent(p.to_laurent()), p);
  EXPECT_THROW(QtPoly::from_laurent(-t), std::domain_error);
  EXPECT_EQ(p.shifted(1, 2).coeff(4, 6), 1);
}
