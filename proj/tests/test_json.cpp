#include "covlat/json_io.hpp"
#include "doctest.h"

using namespace covlat;

TEST_CASE("rational serialization round trip") {
    CHECK(rational_json(Rational(3, 4)) == "3/4");
    CHECK(rational_json(Rational(5)) == "5");
    CHECK(rational_json(Rational(-7, 2)) == "-7/2");
    CHECK(rational_from_json(Json("3/4")) == Rational(3, 4));
    CHECK(rational_from_json(Json(12)) == 12);
    CHECK_THROWS_AS(rational_from_json(Json("x/y")), ParseError);
}

TEST_CASE("matrix serialization round trip") {
    SymMatrix m(3);
    m.set(0, 0, Rational(1, 2));
    m.set(0, 2, -3);
    m.set(1, 1, 7);
    Json j = matrix_json(m);
    CHECK(matrix_from_json(j) == m);

    // asymmetric input is rejected
    Json bad = Json::array({Json::array({"1", "2"}), Json::array({"3", "4"})});
    CHECK_THROWS_AS(matrix_from_json(bad), ParseError);
}

TEST_CASE("vector round trip") {
    RatVec v = {Rational(1), Rational(-2, 3), Rational(0)};
    CHECK(vec_from_json(vec_json(v)) == v);
}

TEST_CASE("density verdict schema") {
    Json j = verdict_json(Rational(1), "4.0588", Verdict::less);
    CHECK(j["theta_sq_ratio"] == "1");
    CHECK(j["threshold"] == "4.0588");
    CHECK(j["verdict"] == "less");
}

TEST_CASE("shell export schema") {
    PQF id2(SymMatrix::identity(2));
    Shell s = enumerate_shell(id2, 1);
    Json j = shell_json(s);
    CHECK(j["norm"] == "1");
    CHECK(j["count"] == 4);
    CHECK(j["vectors"].size() == 4);
    CHECK(j["vectors"][0].size() == 2);
}
