#include "parkqt/macdonald.hpp"
#include "parkqt/verify.hpp"

#include <gtest/gtest.h>

using namespace parkqt;

namespace {

const LaurentPoly one(1);
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();

SymF s(const Partition& la) { return SymF::element(Basis::s, la); }
SymF over_M(const SymF& f) { return plethysm(f, Alphabet::X(one, M_poly())); }

QtPoly qt(std::initializer_list<std::pair<int, int>> exps) {
  QtPoly p;
  for (auto [te, qe] : exps) p.add(te, qe);
  return p;
}

void expect_suite_passes(const std::string& name, const VerifyConfig& cfg = {}) {
  VerifyReport r = verify_suite(name, cfg);
  EXPECT_GT(r.checks.size(), 0u);
  if (const CheckResult* f = r.first_failure()) ADD_FAILURE() << f->name << "\n  " << f->lhs << "\n  " << f->rhs;
  EXPECT_TRUE(r.ok()) << r.summary();
}

}  // namespace

TEST(MuStats, Examples) {
  MuStats a = mu_stats({1});
  EXPECT_EQ(a.T, one);
  EXPECT_EQ(a.B, one);
  EXPECT_EQ(a.Pi, one);
  EXPECT_EQ(a.w, (one - t) * (one - q));
  EXPECT_EQ(a.D, M_poly() - one);
  MuStats b = mu_stats({2, 1});
  EXPECT_EQ(b.T, q * t);
  EXPECT_EQ(b.B, one + q + t);
  EXPECT_EQ(mu_stats({}).D, LaurentPoly(-1));
}

TEST(HTilde, SmallDegrees) {
  EXPECT_EQ(htilde({}), SymF::one());
  EXPECT_EQ(htilde({1}), s({1}));
  EXPECT_EQ(htilde({2}), s({2}) + s({1, 1}) * RatFunc(q));
  EXPECT_EQ(htilde({1, 1}), s({2}) + s({1, 1}) * RatFunc(t));
  EXPECT_EQ(htilde({2, 1}), s({3}) + s({2, 1}) * RatFunc(q + t) + s({1, 1, 1}) * RatFunc(q * t));
}

TEST(HTilde, RankNeedsIncomparableConstraints) {
  HTildeSolveOptions with, without;
  without.incomparable = false;
  EXPECT_TRUE(htilde_system_full_rank(6, with));
  EXPECT_FALSE(htilde_system_full_rank(6, without));
  EXPECT_TRUE(htilde_system_full_rank(5, without));
}

TEST(HTilde, Expansions) {
  auto e1 = expand_htilde(SymF::en(1));
  ASSERT_EQ(e1.size(), 1u);
  EXPECT_EQ(e1.at({1}), RatFunc(1));
  for (int n = 1; n <= 4; ++n) {
    auto en = expand_htilde(SymF::en(n));
    auto hn = expand_htilde(over_M(SymF::hn(n)));
    for (const auto& mu : partitions(n)) {
      MuStats st = mu_stats(mu);
      EXPECT_EQ(en.at(mu), RatFunc(M_poly() * st.B * st.Pi, st.w));
      EXPECT_EQ(hn.at(mu), RatFunc(st.T, st.w));
    }
  }
}

TEST(Nabla, Examples) {
  EXPECT_EQ(nabla(SymF::en(1)), SymF::en(1));
  EXPECT_EQ(nabla(SymF::en(2)), s({2}) + s({1, 1}) * RatFunc(q + t));
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(delta(SymF::en(n), SymF::hn(n)), nabla(SymF::hn(n)));
}

TEST(Operators, Examples) {
  for (int a = 1; a <= 3; ++a) {
    RatFunc pre(LaurentPoly(a % 2 ? 1 : -1) * LaurentPoly::q(1 - a));
    EXPECT_EQ(op_C(a, SymF::one()), SymF::hn(a) * pre);
    EXPECT_EQ(op_B(a, SymF::one()), SymF::en(a));
  }
  EXPECT_EQ(op_C(1, op_B(2, s({1}))) * RatFunc(q), op_B(2, op_C(1, s({1}))));
  EXPECT_EQ(e_nk(1, 1), SymF::en(1));
  EXPECT_EQ(convert(e_nk(3, 3), Basis::s).coeff({1, 1, 1}), RatFunc(1));
}

TEST(Operators, DualInstance) {
  SymF h1 = over_M(SymF::hn(1));
  SymF lhs = op_C_star(1, delta(SymF::hn(1), h1));
  SymF rhs = op_B_star(1, delta(SymF::hn(0), h1)) + delta(SymF::hn(1), over_M(SymF::hn(0)));
  EXPECT_EQ(lhs, rhs);
  // h_1[(X + M/z)/M] Omega[-zX/(1-t)] at z^{-1}: only 1/z times the constant term survives.
  SymF b = op_B_star(1, h1);
  EXPECT_EQ(b.max_degree(), 0);
  EXPECT_EQ(b, SymF::one());
}

TEST(Pieri, Examples) {
  PieriData d = pieri({1});
  ASSERT_EQ(d.up.size(), 2u);
  RatFunc dsum, csum;
  for (const auto& e : d.up) dsum += e.d;
  EXPECT_EQ(dsum, RatFunc(1));
  for (const auto& [nu, c] : pieri_c_direct({2, 1})) csum += c;
  EXPECT_EQ(csum, RatFunc(mu_stats({2, 1}).B));
}

TEST(LhsPoly, Examples) {
  EXPECT_EQ(lhs_poly(2, {3, 2}), qt({{3, 4}}));
  EXPECT_EQ(lhs_poly(0, {1, 1}), qt({{0, 0}}));
  EXPECT_TRUE(lhs_poly(0, {2}).is_zero());
  EXPECT_EQ(lhs_poly(1, {2}), qt({{1, 0}}));
  EXPECT_THROW(lhs_poly(1, {9}, 8), CapExceeded);
}

TEST(Suites, Symfun) { expect_suite_passes("symfun"); }
TEST(Suites, Operators) { expect_suite_passes("operators"); }

TEST(Suites, MacdonaldDegreeFour) {
  VerifyConfig cfg;
  cfg.max_degree = 4;
  expect_suite_passes("macdonald", cfg);
}

TEST(Suites, BasicRecursionSmall) {
  VerifyConfig cfg;
  cfg.max_J = 2;
  cfg.max_n = 4;
  expect_suite_passes("theorem1", cfg);
}

TEST(Suites, DualSmall) {
  VerifyConfig cfg;
  cfg.max_J = 2;
  cfg.max_n = 3;
  expect_suite_passes("dual", cfg);
}

TEST(Suites, UnknownName) { EXPECT_THROW(verify_suite("nope"), std::invalid_argument); }
