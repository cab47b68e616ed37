#include "doctest.h"

#include <random>

#include "qcg/json_io.hpp"
#include "qcg/parser.hpp"
#include "qcg/qring.hpp"

using namespace qcg;

TEST_SUITE("jsonio") {

TEST_CASE("qpolynomial json round trip") {
  std::mt19937_64 rng(2);
  for (int iter = 0; iter < 50; ++iter) {
    QPolynomial p;
    int terms = int(rng() % 4);
    for (int t = 0; t < terms; ++t)
      p.add_term(Rational(long(rng() % 13) - 6, 1 + long(rng() % 4)), int(rng() % 5));
    CHECK(qpolynomial_from_json(qpolynomial_to_json(p)) == p);
  }
}

TEST_CASE("schubert vector json round trip and key format") {
  GrassSpec spec(2, 4);
  QuantumModel m(spec);
  SchubertVector v = m.basis_product(BoxPartition({1}), BoxPartition({2, 1}));
  Json j = schubert_vector_to_json(v);
  CHECK(j["class"]["[2,2]"]["0"] == "1");
  CHECK(j["class"]["[]"]["1"] == "1");
  CHECK(schubert_vector_from_json(j, spec) == v);
}

TEST_CASE("query result serialization round trips") {
  Json query = Json::object();
  query["k"] = 2;
  query["n"] = 4;
  query["q_mode"] = "formal";
  query["precision"] = 60;
  query["a"] = "[1]";
  query["b"] = "[2,1]";
  Json payload = Json::object();
  payload["value"] = "1";
  QueryResult r = make_result("gw3", query, "exact", payload);
  QueryResult back = QueryResult::parse(r.serialize());
  CHECK(back == r);
  CHECK(back.serialize() == r.serialize());
  CHECK(r.root["schema"] == "qcg-result/1");
}

TEST_CASE("polynomial parser") {
  WPolynomial x1 = WPolynomial::variable(2, 0);
  WPolynomial x2 = WPolynomial::variable(2, 1);
  CHECK(parse_polynomial("1", 2) == WPolynomial::constant(2, Rational(1)));
  CHECK(parse_polynomial("X1^2*X2", 2) == WPolynomial::variable(2, 0, 2) * x2);
  CHECK(parse_polynomial("x_1 + q", 2) == x1 + WPolynomial::q_power(2, 1));
  CHECK(parse_polynomial("-3/2*X2", 2) == x2.scaled(Rational(-3, 2)));
  CHECK(parse_polynomial("(1 - X1)^2", 2) ==
        WPolynomial::constant(2, Rational(1)) - Rational(2) * x1 + WPolynomial::variable(2, 0, 2));
  CHECK(parse_polynomial("2X1", 2) == Rational(2) * x1);
  CHECK_THROWS_AS(parse_polynomial("X3", 2), UsageError);
  CHECK_THROWS_AS(parse_polynomial("X1 +", 2), UsageError);
  CHECK_THROWS_AS(parse_polynomial("X1^-2", 2), UsageError);
  CHECK_THROWS_AS(parse_polynomial("1/0", 2), UsageError);
}

} // TEST_SUITE
