#include "doctest.h"

#include <complex>

#include "gsp/json_io.hpp"

using namespace gsp;

TEST_CASE("round12 collapses noise past the 12th digit") {
    CHECK(round12(0.1 + 0.2) == round12(0.3));
    CHECK(round12(1.0 / 3.0) == 0.333333333333);
    CHECK(round12(round12(1.0 / 7.0)) == round12(1.0 / 7.0));
    CHECK(round12(0.0) == 0.0);
    CHECK(round12(-2.5e-17) == -2.5e-17);
    CHECK(round12(1e300) == 1e300);
}

TEST_CASE("csv quoting doubles embedded quotes") {
    CHECK(csv_quote("plain") == "\"plain\"");
    CHECK(csv_quote("") == "\"\"");
    CHECK(csv_quote("a\"b") == "\"a\"\"b\"");
    CHECK(csv_quote("3/2, 5/2") == "\"3/2, 5/2\"");
}

TEST_CASE("json shapes") {
    Json m = json_measured(1.5, 0.25);
    CHECK(m.dump() == "{\"value\":1.5,\"error_bound\":0.25}");

    Json c = json_complex(std::complex<double>(0.0, -2.0), 1e-15);
    CHECK(c["re"] == 0.0);
    CHECK(c["im"] == -2.0);
    CHECK(c["error_bound"] == 1e-15);

    CHECK(json_rational(Rational(3, 2)) == Json("3/2"));
    CHECK(json_rational(Rational(-7)) == Json("-7"));

    Json p = json_pipower(PiPower(Rational(1, 270), 3));
    CHECK(p["coeff"] == "1/270");
    CHECK(p["pi_exp"] == 3);
}

TEST_CASE("matrices serialize row-major with exact entries") {
    Mat m(2, 3);
    m.at(0, 0) = Rational(1);
    m.at(0, 2) = Rational(-1, 2);
    m.at(1, 1) = Rational(5);
    Json j = json_matrix(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    REQUIRE(j["entries"].size() == 6);
    CHECK(j["entries"][0] == "1");
    CHECK(j["entries"][2] == "-1/2");
    CHECK(j["entries"][4] == "5");
    CHECK(j["entries"][5] == "0");
}
