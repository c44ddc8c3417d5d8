#include <doctest.h>

#include "chainmod/errors.hpp"
#include "chainmod/json_io.hpp"

using namespace chainmod;
using io::Json;
using V = std::vector<std::int64_t>;

TEST_SUITE("json_io") {

TEST_CASE("rationals are strings") {
  CHECK(io::to_json(rat_make(-2, 6)) == Json("-1/3"));
  CHECK(io::to_json(Rat(4)) == Json("4"));
  CHECK(io::rat_from_json(Json("6/8")) == rat_make(3, 4));
  CHECK(io::rat_from_json(Json(-5)) == Rat(-5));
  CHECK_THROWS_AS(io::rat_from_json(Json(0.5)), InvalidInput);
  CHECK(io::int_from_json(Json("12")) == 12);
  CHECK_THROWS_AS(io::int_from_json(Json("1/2")), InvalidInput);
}

TEST_CASE("comma lists") {
  CHECK(io::parse_int_list("1,-2, 3") == V{1, -2, 3});
  CHECK(io::parse_int_list("").empty());
  CHECK(io::parse_rat_list("1/3, 2/3") == std::vector<Rat>{rat_make(1, 3), rat_make(2, 3)});
  CHECK_THROWS_AS(io::parse_int_list("1,,2"), InvalidInput);
  CHECK_THROWS_AS(io::parse_int_list("1/2"), InvalidInput);
  CHECK(io::int_list_from_json(Json::parse(R"([1, "2", -3])")) == V{1, 2, -3});
}

TEST_CASE("matrices and gluing data") {
  auto m = io::matrix_from_json(Json::parse(R"([["1/2", 0], [3, "-1"]])"));
  CHECK(m.rows() == 2);
  CHECK(m(0, 0) == rat_make(1, 2));
  CHECK(io::to_json(m).dump() == R"([["1/2","0"],["3","-1"]])");
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse("[[1, 2], [3]]")), InvalidInput);

  auto g = io::gluing_from_json(Json::parse(R"({"r": 2, "matrices": [[[1, 0], [0, 0]]]})"));
  CHECK(g.n() == 2);
  CHECK_THROWS_AS(io::gluing_from_json(Json::parse(R"({"r": 3, "matrices": [[[1, 0], [0, 0]]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(io::gluing_from_json(Json::parse(R"({"matrices": []})")), InvalidInput);
}

TEST_CASE("reports") {
  ChainCurve c({0, 0});
  auto w = validate_polarization({rat_make(1, 7), rat_make(6, 7)});
  auto j = io::to_json(check_partial_euler(c, 2, V{-1, -3}, w, true));
  CHECK(j["verdict"] == "Violated");
  CHECK(j["rows"][0]["lower_bound"] == "-6/7");
  CHECK(j["rows"][0]["upper_bound"] == "8/7");
  CHECK(j["rows"][0]["value"] == -1);

  auto s = io::to_json(construct_polarization(2, V{-1, -3}));
  CHECK(s["status"] == "feasible");
  CHECK(s["weights"] == Json::parse(R"(["1/3","2/3"])"));
  CHECK(s["trace"][0]["box"]["lo"] == "1/6");

  auto sheaf = io::to_json(make_numerical_sheaf({2, 2}, {-1, -3}, V{1}));
  CHECK(sheaf.dump() == R"({"multirank":[2,2],"euler":[-1,-3],"sigma_ranks":[1]})");
}

}  // TEST_SUITE
