#include "parkqt/partition.hpp"
#include "parkqt/symfun.hpp"

#include <gtest/gtest.h>

using namespace parkqt;

namespace {

const LaurentPoly one(1);
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();
const LaurentPoly z = LaurentPoly::z();

SymF p(const Partition& la) { return SymF::element(Basis::p, la); }
SymF s(const Partition& la) { return SymF::element(Basis::s, la); }

}  // namespace

TEST(Partitions, CountsAndOrder) {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions(n).size(), static_cast<std::size_t>(counts[n]));
  EXPECT_EQ(compositions(5).size(), 16u);
  EXPECT_EQ(compositions(5, 2).size(), 4u);
  EXPECT_EQ(conjugate({3, 1}), (Partition{2, 1, 1}));
  EXPECT_TRUE(dominates({3, 1}, {2, 2}));
  EXPECT_FALSE(dominates({3, 1, 1, 1}, {2, 2, 2}) && dominates({2, 2, 2}, {3, 1, 1, 1}));
  EXPECT_EQ(z_coef({2, 1, 1}), BigInt(4));
  EXPECT_EQ(sign_eps({2, 1}), -1);
  EXPECT_EQ(parse_parts("3,2"), (Composition{3, 2}));
  EXPECT_THROW(parse_parts("3,x"), std::invalid_argument);
}

TEST(Partitions, CellStats) {
  auto one_cell = cell_stats({1});
  ASSERT_EQ(one_cell.size(), 1u);
  EXPECT_EQ(one_cell[0].arm + one_cell[0].leg + one_cell[0].coarm + one_cell[0].coleg, 0);
  EXPECT_EQ(n_stat({2, 1}), 1);
  EXPECT_EQ(n_stat(conjugate({2, 1})), 1);
  EXPECT_EQ(n_stat({3}), 0);
  EXPECT_EQ(n_stat(conjugate({3})), 3);
  EXPECT_EQ(add_corner({1}).size(), 2u);
  EXPECT_EQ(remove_corner({2, 1}).size(), 2u);
}

TEST(SymF, Conversions) {
  EXPECT_EQ(convert(SymF::hn(2), Basis::p), (p({1, 1}) + p({2})) * RatFunc(Rational(1, 2)));
  EXPECT_EQ(convert(SymF::en(2), Basis::p), (p({1, 1}) - p({2})) * RatFunc(Rational(1, 2)));
  EXPECT_EQ(convert(s({1, 1}), Basis::e), SymF::element(Basis::e, {2}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& la : partitions(n))
      for (Basis b : {Basis::m, Basis::h, Basis::e, Basis::s})
        EXPECT_EQ(convert(convert(SymF::element(b, la), Basis::p), b), SymF::element(b, la));
}

TEST(SymF, Plethysm) {
  EXPECT_EQ(plethysm(SymF::pn(2), Alphabet::X(one - t)), SymF::pn(2) * RatFunc(one - t.pow(2)));
  EXPECT_EQ(plethysm(SymF::pn(3), Alphabet::X(LaurentPoly(-1))), -SymF::pn(3));
  SymF h1 = plethysm(SymF::hn(1), Alphabet::X().plus_scalar(-(one - LaurentPoly::q(-1)), z));
  EXPECT_EQ(h1, SymF::pn(1) - SymF::scalar(RatFunc(one - LaurentPoly::q(-1), z)));
}

TEST(SymF, Omega) {
  EXPECT_EQ(omega_invol(SymF::pn(2)), -SymF::pn(2));
  EXPECT_EQ(omega_invol(SymF::hn(3)), SymF::en(3));
  EXPECT_EQ(omega_invol(s({2, 1})), s({2, 1}));
}

TEST(SymF, HallProduct) {
  EXPECT_EQ(hall(SymF::pn(2), SymF::pn(2)), RatFunc(2));
  EXPECT_EQ(hall(SymF::pn(1), SymF::pn(1)), RatFunc(1));
  for (int n = 1; n <= 5; ++n)
    for (const auto& la : partitions(n))
      for (const auto& mu : partitions(n)) EXPECT_EQ(hall(s(la), s(mu)), RatFunc(la == mu ? 1 : 0));
}

TEST(SymF, StarProduct) {
  EXPECT_EQ(star(SymF::pn(1), SymF::pn(1)), RatFunc((one - t) * (one - q)));
  EXPECT_TRUE(star(SymF::pn(2), p({1, 1})).is_zero());
  EXPECT_EQ(star(SymF::pn(2), SymF::pn(2)), RatFunc(LaurentPoly(-2) * (one - t.pow(2)) * (one - q.pow(2))));
}

TEST(SymF, OmegaSeries) {
  auto series = omega_series(Alphabet::X(z), 5);
  for (int m = 0; m <= 5; ++m) EXPECT_EQ(coeff_z(series[m], m), SymF::hn(m));
  auto zero = omega_series(Alphabet::scalar(LaurentPoly()), 3);
  EXPECT_EQ(zero[0], SymF::one());
  for (int m = 1; m <= 3; ++m) EXPECT_TRUE(zero[m].is_zero());
  // Omega[X+Y] = Omega[X] Omega[Y] on scalar alphabets X = q, Y = t.
  for (int m = 0; m <= 4; ++m) {
    RatFunc lhs = evaluate(SymF::hn(m), Alphabet::scalar(q + t));
    RatFunc rhs;
    for (int i = 0; i <= m; ++i)
      rhs += evaluate(SymF::hn(i), Alphabet::scalar(q)) * evaluate(SymF::hn(m - i), Alphabet::scalar(t));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(SymF, Perp) {
  EXPECT_EQ(perp(SymF::en(1), s({1})), SymF::one());
  EXPECT_EQ(perp(SymF::hn(1), SymF::hn(2)), SymF::hn(1));
  EXPECT_TRUE(perp(SymF::hn(2), SymF::en(2)).is_zero());
}
