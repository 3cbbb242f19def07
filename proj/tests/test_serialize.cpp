#include "parkqt/ndinv.hpp"
#include "parkqt/serialize.hpp"

#include <gtest/gtest.h>

using namespace parkqt;

TEST(Json, PolyRecordRoundTrip) {
  PolyRecord rec{3, {3, 2}, 5, "all", pi_poly(3, {3, 2})};
  const std::string text = to_json(rec);
  EXPECT_EQ(text.rfind(R"({"J":3,"p":[3,2],"n":5,"method":"all","poly":[{"t":3,"q":4,"coef":"1"},)", 0), 0u);
  PolyRecord back = poly_record_from_json(text);
  EXPECT_EQ(back, rec);
  EXPECT_EQ(to_json(back), text);
}

TEST(Json, ZeroPolynomial) {
  PolyRecord rec{0, {2}, 2, "recursion", {}};
  EXPECT_EQ(to_json(rec), R"({"J":0,"p":[2],"n":2,"method":"recursion","poly":[]})");
  EXPECT_EQ(to_json(poly_record_from_json(to_json(rec))), to_json(rec));
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(poly_record_from_json("{"), std::invalid_argument);
  EXPECT_THROW(poly_record_from_json(R"({"J":1})"), std::invalid_argument);
  EXPECT_THROW(poly_record_from_json(R"({"J":1,"p":[1],"n":1,"method":"x","poly":[{"t":1,"q":0,"coef":"x"}]})"),
               std::invalid_argument);
  EXPECT_THROW(poly_record_from_json(R"({"J":1,"p":[1],"n":1,"method":"x","poly":[{"t":1,"q":0,"coef":1}]})"),
               std::invalid_argument);
}

TEST(Csv, Rows) {
  auto members = enumerate_family(2, Composition{3, 2});
  ASSERT_EQ(members.size(), 1u);
  PfRow row = make_row(members[0], 2);
  EXPECT_EQ(csv_header(), "n,J,U,V,area,dinv,ndinv,sigma,diag_comp,big_comp");
  EXPECT_EQ(csv_row(row), "5,2,0 0 1 1 0 0 1,7 2 5 4 6 1 3,3,3,4,3 4 5 1 6 2 7,1 3 1 2,3 2");
  EXPECT_EQ(text_row(row), "V: 7 2 5 4 6 1 3 | U: 0 0 1 1 0 0 1 | area=3 dinv=3 ndinv=4 sigma=3 4 5 1 6 2 7 p=[3,2]");
  EXPECT_EQ(rows_to_json({row}).substr(0, 41), R"([{"n":5,"J":2,"U":[0,0,1,1,0,0,1],"V":[7,)");
}
