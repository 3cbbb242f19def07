#include "parkqt/ndinv.hpp"
#include "parkqt/parking.hpp"
#include "parkqt/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace parkqt;

namespace {

ParkingFunction example() { return pf_validate({0, 1, 2, 2, 3, 0, 1, 1}, {4, 6, 8, 1, 3, 2, 7, 5}); }

QtPoly qt(std::initializer_list<std::tuple<int, int, int>> terms) {
  QtPoly p;
  for (auto [te, qe, c] : terms) p.add(te, qe, c);
  return p;
}

}  // namespace

TEST(ParkingFunction, Validation) {
  EXPECT_NO_THROW(example());
  EXPECT_THROW(pf_validate({0, 2}, {1, 2}), InvalidParkingFunction);
  EXPECT_THROW(pf_validate({0, 1}, {2, 1}), InvalidParkingFunction);
  EXPECT_THROW(pf_validate({1}, {1}), InvalidParkingFunction);
  EXPECT_THROW(pf_validate({0, 0}, {1, 1}), InvalidParkingFunction);
  EXPECT_THROW(pf_validate({0, 0}, {1}), InvalidParkingFunction);
}

TEST(ParkingFunction, Statistics) {
  auto pf = example();
  EXPECT_EQ(area(pf), 10);
  EXPECT_EQ(dinv(pf), 4);
  EXPECT_EQ(diagonal_word(pf), (std::vector<int>{3, 1, 8, 5, 7, 6, 2, 4}));
  EXPECT_EQ(diag_comp(pf), (Composition{5, 3}));
  auto single = pf_validate({0}, {1});
  EXPECT_EQ(area(single), 0);
  EXPECT_EQ(dinv(single), 0);
  EXPECT_EQ(diagonal_word(pf_validate({0, 0, 0, 0}, {4, 3, 2, 1})), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(diagonal_word(pf_validate({0, 1}, {1, 2})), (std::vector<int>{2, 1}));
  EXPECT_EQ(diag_comp(std::vector<int>{0, 0, 0}), (Composition{1, 1, 1}));
  EXPECT_EQ(diag_comp(std::vector<int>{0, 1, 2}), (Composition{3}));
}

TEST(ParkingFunction, Shuffle) {
  EXPECT_TRUE(is_shuffle({1, 3, 2, 4}, {{1, 2}, {3, 4}}));
  EXPECT_TRUE(is_shuffle({3, 1, 4, 2}, {{1, 2}, {3, 4}}));
  EXPECT_FALSE(is_shuffle({2, 1, 3, 4}, {{1, 2}, {3, 4}}));
  EXPECT_THROW(is_shuffle({1, 2}, {{1}, {3}}), std::invalid_argument);
}

TEST(ParkingFunction, BigComposition) {
  auto pf = pf_validate({0, 0, 1}, {3, 1, 2});
  EXPECT_EQ(big_comp(pf, 1), (Composition{2}));
  auto members = enumerate_family(2, Composition{3, 2});
  ASSERT_EQ(members.size(), 1u);
  EXPECT_EQ(big_comp(members[0], 2), (Composition{3, 2}));
  EXPECT_EQ(area(members[0]), 3);
  for (const auto& m : enumerate_family(0, 4)) EXPECT_EQ(big_comp(m, 0), diag_comp(m));
  EXPECT_THROW(big_comp(example(), 2), std::invalid_argument);
}

TEST(ParkingFunction, FamilySizes) {
  EXPECT_EQ(enumerate_family(2, Composition{3, 2}).size(), 1u);
  EXPECT_EQ(enumerate_family(3, Composition{3, 2}).size(), 9u);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_family(0, Composition(n, 1)).size(), 1u);
  EXPECT_TRUE(enumerate_family(0, Composition{3, 2}).empty());
  EXPECT_TRUE(enumerate_family(0, Composition{2}).empty());
  EXPECT_THROW(enumerate_family(1, Composition{}), std::invalid_argument);
  EXPECT_THROW(enumerate_family(-1, 3), std::invalid_argument);
  EXPECT_THROW(enumerate_family(9, 9, 13), CapExceeded);
}

TEST(ParkingFunction, StableOrder) {
  auto a = enumerate_family(3, Composition{3, 2});
  auto b = enumerate_family(3, Composition{3, 2});
  EXPECT_EQ(a, b);
}

TEST(ParkingFunction, ClassicalPolynomials) {
  EXPECT_EQ(classical_poly(3, {3, 2}),
            qt({{3, 4, 1}, {3, 5, 2}, {3, 6, 2}, {4, 3, 1}, {4, 4, 1}, {4, 5, 1}, {5, 3, 1}}));
  EXPECT_EQ(classical_poly(2, {3, 2}), qt({{3, 3, 1}}));
  EXPECT_EQ(classical_poly(0, {1}), qt({{0, 0, 1}}));
  // The member of PF_3([3,2]) with area 5 has classical weight t^5 q^3.
  int seen = 0;
  for (const auto& pf : enumerate_family(3, Composition{3, 2}))
    if (area(pf) == 5) {
      EXPECT_EQ(dinv(pf), 3);
      ++seen;
    }
  EXPECT_EQ(seen, 1);
}

TEST(ParkingFunction, ReducedTableau) {
  for (const auto& pf : enumerate_family(3, 3)) {
    ReducedTableau red = reduce(pf, 3);
    EXPECT_FALSE(has_bad_column(red));
    EXPECT_EQ(refill(red), pf);
  }
  ReducedTableau bad{1, {0, 1}, {true, true}};
  EXPECT_TRUE(has_bad_column(bad));
}

TEST(ParkingFunction, Counts) {
  const long expect[] = {1, 3, 16, 125, 1296, 16807};
  for (int n = 1; n <= 6; ++n) {
    long count = 0;
    std::set<ParkingFunction> seen;
    for_each_parking_function(n, [&](const ParkingFunction& pf) {
      ++count;
      seen.insert(pf);
      EXPECT_NO_THROW(pf_validate(pf.U, pf.V));
    });
    EXPECT_EQ(count, expect[n - 1]);
    EXPECT_EQ(static_cast<long>(seen.size()), count);
  }
}

TEST(ParkingFunction, SuitePasses) {
  VerifyConfig cfg;
  cfg.max_size = 7;
  VerifyReport r = verify_suite("parkfun", cfg);
  if (const CheckResult* f = r.first_failure()) ADD_FAILURE() << f->name << "\n" << f->lhs;
  EXPECT_TRUE(r.ok());
}
