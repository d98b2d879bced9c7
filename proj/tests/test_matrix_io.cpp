#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ucrga/matrix_io.hpp"
#include "ucrga/random.hpp"

using namespace ucrga;

TEST(ParseCsv, Examples) {
  EXPECT_EQ(parse_csv("1,2\n3,4"), (DenseMatrix{{1, 2}, {3, 4}}));
  EXPECT_EQ(parse_csv("7,4,8\n7,2,5\n3,8,8"), fixtures::a());
}

TEST(ParseCsv, WhitespaceCrlfAndScientific) {
  EXPECT_EQ(parse_csv(" 1 , 2e0\r\n+3,\t-4.5E-1 \r\n\r\n"), (DenseMatrix{{1, 2}, {3, -0.45}}));
}

TEST(ParseCsv, RaggedRowNamesLine) {
  try {
    parse_csv("1,2\n3");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseCsv, BadFieldNamesRowAndColumn) {
  try {
    parse_csv("1,2\n3,x4");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
    EXPECT_NE(std::string(e.what()).find("row 2, col 2"), std::string::npos);
  }
  EXPECT_THROW(parse_csv("1,,2"), FormatError);
  EXPECT_THROW(parse_csv("1,nan"), FormatError);
  EXPECT_THROW(parse_csv("inf"), FormatError);
}

TEST(ParseCsv, EmptyInput) {
  EXPECT_THROW(parse_csv(""), EmptyInputError);
  EXPECT_THROW(parse_csv(" \n\n"), EmptyInputError);
}

TEST(ParseJson, MatrixForm) {
  EXPECT_EQ(parse_json(R"({"rows": 2, "cols": 2, "data": [1, 2, 3, 4]})"), (DenseMatrix{{1, 2}, {3, 4}}));
  EXPECT_THROW(parse_json(R"({"rows": 2, "cols": 2, "data": [1, 2, 3]})"), FormatError);
  EXPECT_THROW(parse_json(R"({"rows": 2, "data": [1, 2]})"), FormatError);
  EXPECT_THROW(parse_json(R"({"rows": 1, "cols": 1, "data": ["a"]})"), FormatError);
  EXPECT_THROW(parse_json("{"), FormatError);
  EXPECT_THROW(parse_json(""), EmptyInputError);
}

// Text serializations preserve every bit.
TEST(MatrixIoProperties, LosslessRoundTrip) {
  random::Engine rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> d((1 + rng() % 5) * 3);
    for (double& x : d) x = random::log_uniform(rng, 1e-200, 1e200, true);
    const DenseMatrix a(d.size() / 3, 3, d);
    EXPECT_EQ(parse_json(to_json(a).dump()), a);
    std::ostringstream os;
    write_csv(os, a);
    EXPECT_EQ(parse_csv(os.str()), a);
  }
}
