#include "doctest.h"
#include "fixtures.hpp"
#include "minklen/length.hpp"
#include "minklen/report.hpp"

using namespace minklen;
using namespace fixtures;
namespace report = minklen::report;

TEST_CASE("json round trips") {
  for (const Rational& q : {Rational(0), Rational(-7, 3), Rational(68, 5), Rational(12)}) {
    CHECK(report::rational_from_json(report::rational_json(q)) == q);
  }
  const Zonotope z = minkowski_length(doubled_square(), 2).witness;
  const auto text = report::zonotope_json(z).dump();
  CHECK(report::zonotope_from_json(report::Json::parse(text)) == z);

  const auto p = tilted_square();
  const auto back = report::parse_polytope(report::polytope_json(p).dump());
  CHECK(back.vertices() == p.vertices());
  CHECK(report::polytope_digest(back) == report::polytope_digest(p));
}

TEST_CASE("malformed polytope input") {
  CHECK_THROWS_AS(report::parse_polytope("{"), std::invalid_argument);
  CHECK_THROWS_AS(report::parse_polytope("[[0,0]]"), std::invalid_argument);
  CHECK_THROWS_AS(report::parse_polytope(R"({"vertices": [[0, 0.5]]})"), std::invalid_argument);
  CHECK_THROWS_AS(report::parse_polytope(R"({"vertices": [[0, 0], [1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(report::parse_problem("width"), std::invalid_argument);
}

TEST_CASE("reports hold no floating point values") {
  report::Settings s;
  const auto j = report::invariants(doubled_square(), s);
  CHECK(j["lambda"] == "68/5");
  CHECK(j["gap"] == "8/5");
  const auto text = j.dump();
  CHECK(text.find('.') == std::string::npos);
  CHECK(report::render_table(j).find("lambda: 68/5\n") != std::string::npos);
}
