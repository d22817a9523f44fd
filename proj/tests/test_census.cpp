#include <doctest.h>

#include <stdexcept>
#include <string>

#include "rabbit/census.hpp"

using namespace rabbit;

TEST_CASE("small radii") {
  const CensusReport r = run_census(3, Algorithm::both, 1);
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[0] == ClassCounts{1, 0, 0, 0});
  CHECK(r.rows[1] == ClassCounts{1, 2, 2, 0});
  CHECK(r.rows[2] == ClassCounts{3, 4, 4, 6});
  CHECK(r.rows[3] == ClassCounts{11, 8, 12, 22});
}

TEST_CASE("radius 9") {
  const CensusReport r = run_census(9, Algorithm::whole_word, 2);
  CHECK(r.rows[5] == ClassCounts{94, 82, 139, 170});
  CHECK(r.rows[9] == ClassCounts{7341, 6802, 12495, 12727});
  CHECK(run_census(9, Algorithm::prefix, 1).rows == r.rows);
}

TEST_CASE("worker count does not change the tallies") {
  const auto base = run_census(7, Algorithm::both, 1).rows;
  for (int workers : {2, 3, 8, 16}) CHECK(run_census(7, Algorithm::both, workers).rows == base);
}

TEST_CASE("csv export") {
  const std::string csv = export_csv(run_census(2, Algorithm::both, 1));
  CHECK(csv == "ell,R3,coR3,A3,coA3,total\n0,1,0,0,0,1\n1,1,2,2,0,5\n2,3,4,4,6,17\n");
  const std::string full = export_csv(run_census(9, Algorithm::both, 4));
  CHECK(full.size() > 0);
  CHECK(full.substr(full.rfind('\n', full.size() - 2) + 1) == "9,7341,6802,12495,12727,39365\n");
}

TEST_CASE("table export") {
  const std::string table = export_table(run_census(2, Algorithm::both, 1));
  CHECK(table.find("coA3") != std::string::npos);
  CHECK(table.find("17") != std::string::npos);
}

TEST_CASE("ratios") {
  const auto trend = ratio_trend(run_census(1, Algorithm::both, 1));
  CHECK(trend[1][1] == Ratio{2, 5});
  CHECK(trend[1][1].value() == doctest::Approx(0.4));
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(run_census(-1, Algorithm::both, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_census(3, Algorithm::both, 0), std::invalid_argument);
  CHECK(parse_algorithm("whole-word") == Algorithm::whole_word);
  CHECK(to_string(Algorithm::prefix) == "prefix");
  CHECK_THROWS_AS(parse_algorithm("fast"), std::invalid_argument);
}
