#include "parkqt/macdonald.hpp"
#include "parkqt/ndinv.hpp"
#include "parkqt/verify.hpp"

#include <gtest/gtest.h>

using namespace parkqt;

namespace {

QtPoly qt(std::initializer_list<std::pair<int, int>> exps) {
  QtPoly p;
  for (auto [te, qe] : exps) p.add(te, qe);
  return p;
}

const ParkingFunction kSmall = ParkingFunction{{0, 0, 1}, {3, 1, 2}};  // the member of PF_1([2])

QtPoly p6() {
  return qt({{3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {4, 4}, {4, 5}, {4, 6}, {5, 4}});
}

}  // namespace

TEST(Dominoes, Sections) {
  DominoSeq seq = to_domino_seq(kSmall, 1);
  ASSERT_EQ(seq.sections().size(), 1u);
  EXPECT_EQ(seq.to_string(), "(3,0) (1,0) (2,1)");
  EXPECT_EQ(seq.to_pf(), kSmall);
  for (const auto& pf : enumerate_family(3, Composition{3, 2})) EXPECT_EQ(to_domino_seq(pf, 3).sections().size(), 2u);
  for (const auto& pf : enumerate_family(5, Composition{3, 3, 2}))
    EXPECT_EQ(to_domino_seq(pf, 5).sections().size(), 3u);
  EXPECT_THROW(to_domino_seq(kSmall, 0), std::invalid_argument);
}

TEST(Phi, Examples) {
  PhiImage a = phi(kSmall, 1);
  EXPECT_EQ(a.branch, PhiBranch::kRemoveSmall);
  EXPECT_EQ(a.J, 0);
  EXPECT_EQ(a.pf, (ParkingFunction{{0, 0}, {2, 1}}));
  PhiImage b = phi(a.pf, 0);
  EXPECT_EQ(b.branch, PhiBranch::kRemoveBig);
  EXPECT_EQ(b.pf, (ParkingFunction{{0}, {1}}));
  EXPECT_EQ(phi_inv(b.pf, 0, PhiBranch::kRemoveBig, 2), a.pf);
  EXPECT_EQ(phi_inv(a.pf, 0, PhiBranch::kRemoveSmall, 1), kSmall);
}

TEST(Phi, RoundTripOnSmallFamilies) {
  for (int N = 2; N <= 6; ++N)
    for (int J = 1; J < N; ++J)
      for (const auto& p : compositions(N - J))
        for (const auto& pf : enumerate_family(J, p)) {
          PhiImage im = phi(pf, J);
          EXPECT_EQ(phi_inv(im.pf, im.J, im.branch, static_cast<int>(p.size())), pf);
          EXPECT_EQ(area(im.pf), area(pf) - (p[0] - 1));
        }
}

TEST(Ndinv, Examples) {
  EXPECT_EQ(ndinv_rec(kSmall, 1), 0);
  EXPECT_EQ(ndinv_circ(kSmall, 1), 0);
  auto members = enumerate_family(2, Composition{3, 2});
  ASSERT_EQ(members.size(), 1u);
  EXPECT_EQ(ndinv_rec(members[0], 2), 4);
  EXPECT_EQ(area(members[0]), 3);
  for (const auto& pf : enumerate_family(0, 4)) EXPECT_EQ(ndinv_rec(pf, 0), 0);
}

TEST(Ndinv, CircularExample) {
  // Minimal-ones member of PF_5([3,3,2]) with the largest area.
  ParkingFunction best;
  int best_area = -1, candidates = 0;
  for (const auto& pf : enumerate_family(5, Composition{3, 3, 2})) {
    int rises = 0;
    for (int i = 1; i < pf.size(); ++i) rises += pf.U[i] == pf.U[i - 1] + 1;
    if (rises != 5) continue;
    if (area(pf) > best_area) {
      best_area = area(pf);
      best = pf;
      candidates = 1;
    } else if (area(pf) == best_area) {
      ++candidates;
    }
  }
  EXPECT_EQ(candidates, 1);
  EXPECT_EQ(to_domino_seq(best, 5).to_string(),
            "(13,0) (5,0) (10,1) (2,1) (7,2) | (12,0) (4,0) (9,1) (1,1) (6,2) | (11,0) (3,0) (8,1)");
  EXPECT_EQ(ndinv_rec(best, 5), 14);
  std::vector<CircleState> trace;
  CircleOptions opts;
  opts.observer = [&](const CircleState& s) { trace.push_back(s); };
  EXPECT_EQ(ndinv_circ(best, 5, opts), 14);
  EXPECT_EQ(trace.size(), 13u);
  EXPECT_EQ(trace.back().ndinv, 14);
}

TEST(Ndinv, CircleStageOneEndsWithBigCar) {
  for (const auto& pf : enumerate_family(3, Composition{3, 2})) {
    auto cir = circle_stage_one(pf, 3);
    EXPECT_TRUE(cir.front().big || cir.front().diag == 0);
    EXPECT_EQ(cir.size(), 8u);
  }
}

TEST(PiPoly, Examples) {
  EXPECT_EQ(pi_poly(2, {3, 2}), qt({{3, 4}}));
  EXPECT_EQ(pi_poly(0, {1, 1}), qt({{0, 0}}));
  EXPECT_TRUE(pi_poly(0, {2}).is_zero());
  EXPECT_EQ(pi_poly(1, {2}), qt({{1, 0}}));
  EXPECT_EQ(pi_poly(3, {3, 2}), p6());
  EXPECT_EQ(family_poly(3, {3, 2}), p6());
  EXPECT_EQ(family_poly(2, {3, 2}), qt({{3, 4}}));
  EXPECT_EQ(family_poly(1, {2}), qt({{1, 0}}));
  EXPECT_THROW(pi_poly(-1, {1}), std::invalid_argument);
}

TEST(PiPoly, OperatorAgreementSmall) {
  for (int J = 0; J <= 2; ++J)
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : compositions(n)) EXPECT_EQ(lhs_poly(J, p), pi_poly(J, p)) << J << " " << to_string(p);
}

TEST(PiPoly, ClassicalDiffersButAgreesAtQOne) {
  QtPoly cl = classical_poly(3, {3, 2});
  EXPECT_NE(cl, p6());
  EXPECT_EQ(cl.at_q_one(), p6().at_q_one());
}

TEST(Ndinv, SuitePassesToSizeEight) {
  VerifyConfig cfg;
  cfg.max_size = 8;
  VerifyReport r = verify_suite("ndinv", cfg);
  if (const CheckResult* f = r.first_failure()) ADD_FAILURE() << f->name << "\n" << f->lhs;
  EXPECT_TRUE(r.ok());
}
