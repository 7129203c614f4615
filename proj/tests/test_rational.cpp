#include <doctest.h>

#include "svdyn/rational.hpp"

using namespace svdyn;

TEST_SUITE_BEGIN("rational");

TEST_CASE("parses fractions, integers and decimals exactly") {
  CHECK(parse_rat("7/16") == Rat(7, 16));
  CHECK(parse_rat("-3/6") == Rat(-1, 2));
  CHECK(parse_rat("42") == Rat(42));
  CHECK(parse_rat("-42") == Rat(-42));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat("-0.125") == Rat(-1, 8));
  CHECK(parse_rat("2.5") == Rat(5, 2));
  CHECK(parse_rat("1.0000000001") == Rat(10000000001LL, 10000000000LL));
}

TEST_CASE("rejects malformed literals") {
  CHECK_THROWS_AS(parse_rat(""), input_error);
  CHECK_THROWS_AS(parse_rat("1/0"), input_error);
  CHECK_THROWS_AS(parse_rat("a/b"), input_error);
  CHECK_THROWS_AS(parse_rat("1.2.3"), input_error);
  CHECK_THROWS_AS(parse_rat("1/2/3"), input_error);
  CHECK_THROWS_AS(parse_rat("."), input_error);
}

TEST_CASE("canonical string form") {
  CHECK(rat_str(Rat(4, 8)) == "1/2");
  CHECK(rat_str(Rat(6, 3)) == "2");
  CHECK(rat_str(Rat(-1, 64)) == "-1/64");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK(rat_str(parse_rat(rat_str(Rat(8129, 8192)))) == "8129/8192");
}

TEST_SUITE_END();
